#include <doctest.h>

#include <random>

#include "cellalg/algebra.hpp"
#include "cellalg/builders.hpp"

using namespace cellalg;

namespace {

const FieldId Q = FieldId::rationals();

std::size_t label_index(const Algebra& a, const std::string& label) {
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (a.labels()[i] == label) return i;
    FAIL("no basis element labelled ", label);
    return 0;
}

Element random_element(const Algebra& a, std::mt19937& rng) {
    std::uniform_int_distribution<long> dist(-3, 3);
    Element e = Element::zero(a.dim(), a.field());
    for (std::size_t i = 0; i < a.dim(); ++i) e[i] = Scalar::of_int(dist(rng), a.field());
    return e;
}

// Full matrix algebra on matrix units, built directly from the product rule
// E_{ij} E_{kl} = [j==k] E_{il}; serves as an independent table for the
// associativity and involution checkers.
StructureConstants matrix_units_table(std::size_t k, FieldId f) {
    StructureConstants sc(k * k, f);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t l = 0; l < k; ++l)
                sc.set(i * k + j, j * k + l, i * k + l, Scalar::one(f));
    return sc;
}

} // namespace

TEST_CASE("multiplication by the identity is trivial") {
    const BuiltAlgebra b = build_quiver_zigzag(3, Q);
    std::mt19937 rng(7);
    for (int iter = 0; iter < 20; ++iter) {
        const Element x = random_element(b.algebra, rng);
        CHECK(b.algebra.multiply(b.algebra.one(), x) == x);
        CHECK(b.algebra.multiply(x, b.algebra.one()) == x);
    }
}

TEST_CASE("truncated polynomial relation x^n = 0") {
    const BuiltAlgebra b = build_truncated_poly(5, Q);
    const Element x2 = b.algebra.basis_element(2);
    const Element x3 = b.algebra.basis_element(3);
    CHECK(b.algebra.multiply(x2, x3).is_zero());
    CHECK(b.algebra.multiply(b.algebra.basis_element(1), b.algebra.basis_element(3)) ==
          b.algebra.basis_element(4));
}

TEST_CASE("zigzag quiver loop identification") {
    const BuiltAlgebra b = build_quiver_zigzag(4, Q);
    const Algebra& a = b.algebra;
    // Both length-2 loops at an inner vertex are identified: a_i' a_i equals
    // a_{i+1} a_{i+1}' as basis elements.
    for (int i = 1; i <= 2; ++i) {
        const Element left =
            a.multiply(a.basis_element(label_index(a, "a" + std::to_string(i) + "'")),
                       a.basis_element(label_index(a, "a" + std::to_string(i))));
        const Element right =
            a.multiply(a.basis_element(label_index(a, "a" + std::to_string(i + 1))),
                       a.basis_element(label_index(a, "a" + std::to_string(i + 1) + "'")));
        CHECK(left == right);
        CHECK(left == a.basis_element(label_index(a, "l" + std::to_string(i + 1))));
    }
    // Same-direction length-2 paths die.
    CHECK(a.multiply(a.basis_element(label_index(a, "a1")),
                     a.basis_element(label_index(a, "a2")))
              .is_zero());
    CHECK(a.multiply(a.basis_element(label_index(a, "a2'")),
                     a.basis_element(label_index(a, "a1'")))
              .is_zero());
}

TEST_CASE("associativity checker") {
    CHECK(check_associativity(matrix_units_table(2, Q)).all_pass());
    CHECK(check_associativity(build_quiver_zigzag(3, Q).algebra.sc()).all_pass());

    // A corrupted entry is caught with a witness quadruple.
    StructureConstants bad = matrix_units_table(2, Q);
    bad.set(0, 0, 3, Scalar::one(Q));
    const Report rep = check_associativity(bad);
    CHECK(!rep.all_pass());
    REQUIRE(rep.entries().size() == 1);
    CHECK(rep.entries()[0].detail.find("witness") != std::string::npos);
}

TEST_CASE("find_identity") {
    const StructureConstants units = matrix_units_table(3, Q);
    const Element e = find_identity(units);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(e[i * 3 + j] == (i == j ? Scalar::one(Q) : Scalar::zero(Q)));

    // One-dimensional algebra with a*a = 0 has no unit.
    StructureConstants zero_alg(1, Q);
    CHECK_THROWS_AS(find_identity(zero_alg), NoIdentity);
}

TEST_CASE("regular representation matrices match multiplication") {
    const BuiltAlgebra b = build_matrix_blocks({2, 2}, Q);
    std::mt19937 rng(11);
    for (int iter = 0; iter < 20; ++iter) {
        const Element x = random_element(b.algebra, rng);
        const Element y = random_element(b.algebra, rng);
        CHECK(b.algebra.left_mult_matrix(x).apply(y.coeffs()) ==
              b.algebra.multiply(x, y).coeffs());
        CHECK(b.algebra.right_mult_matrix(y).apply(x.coeffs()) ==
              b.algebra.multiply(x, y).coeffs());
    }
}

TEST_CASE("involution checks") {
    // Arrow swap on the quiver is an anti-automorphism fixing vertices/loops.
    const BuiltAlgebra quiver = build_quiver_zigzag(3, Q);
    CHECK(check_anti_automorphism(quiver.algebra).all_pass());
    CHECK(quiver.algebra.involution(quiver.algebra.one()) == quiver.algebra.one());

    // Transpose on matrix units.
    const BuiltAlgebra blocks = build_matrix_blocks({3}, Q);
    CHECK(check_anti_automorphism(blocks.algebra).all_pass());

    // The identity permutation is NOT an anti-automorphism of M_2.
    std::vector<std::size_t> ident_perm{0, 1, 2, 3};
    std::vector<std::string> labels{"E11", "E12", "E21", "E22"};
    const Algebra m2(labels, matrix_units_table(2, Q),
                     find_identity(matrix_units_table(2, Q)), ident_perm);
    CHECK(!check_anti_automorphism(m2).all_pass());

    // A non-involutive permutation is rejected at construction.
    std::vector<std::size_t> cycle{1, 2, 3, 0};
    CHECK_THROWS_AS(Algebra(labels, matrix_units_table(2, Q),
                            find_identity(matrix_units_table(2, Q)), cycle),
                    ValidationError);
}

TEST_CASE("multiplication is bilinear and associative on random triples") {
    std::mt19937 rng(2024);
    for (const BuiltAlgebra& b :
         {build_quiver_zigzag(3, Q), build_truncated_poly(4, Q),
          build_matrix_blocks({2, 2}, Q),
          build_temperley_lieb(2, Scalar::of_int(2, Q), Q)}) {
        const Algebra& a = b.algebra;
        for (int iter = 0; iter < 100; ++iter) {
            const Element x = random_element(a, rng);
            const Element y = random_element(a, rng);
            const Element z = random_element(a, rng);
            CHECK(a.multiply(a.multiply(x, y), z) == a.multiply(x, a.multiply(y, z)));
            CHECK(a.multiply(x + y, z) == a.multiply(x, z) + a.multiply(y, z));
            const Scalar c = Scalar::of_int(3, Q);
            CHECK(a.multiply(x.scaled(c), y) == a.multiply(x, y).scaled(c));
        }
    }
}

TEST_CASE("claimed identity is validated at construction") {
    StructureConstants sc = matrix_units_table(2, Q);
    std::vector<std::string> labels{"E11", "E12", "E21", "E22"};
    std::vector<std::size_t> transpose{0, 2, 1, 3};
    CHECK_THROWS_AS(Algebra(labels, sc, Element::basis(4, Q, 0), transpose),
                    ValidationError);
}
