#include <doctest.h>

#include <random>

#include "cellalg/builders.hpp"
#include "cellalg/trace.hpp"

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

std::vector<BuiltAlgebra> corpus() {
    std::vector<BuiltAlgebra> out;
    out.push_back(build_quiver_zigzag(3, Q));
    out.push_back(build_truncated_poly(5, Q));
    out.push_back(build_matrix_blocks({2, 3}, Q));
    out.push_back(build_temperley_lieb(3, Scalar::of_int(3, Q), Q));
    return out;
}

} // namespace

TEST_CASE("builder traces are symmetric and non-degenerate") {
    for (const BuiltAlgebra& b : corpus()) {
        CHECK(check_trace(b.algebra, b.trace).all_pass());
        const Matrix g = trace_gram(b.algebra, b.trace);
        CHECK(g == g.transpose());
    }
}

TEST_CASE("trace of a product is symmetric on random pairs") {
    std::mt19937 rng(31);
    for (const BuiltAlgebra& b : corpus())
        for (int iter = 0; iter < 100; ++iter) {
            const Element x = random_element(b.algebra, rng);
            const Element y = random_element(b.algebra, rng);
            CHECK(b.trace(b.algebra.multiply(x, y)) == b.trace(b.algebra.multiply(y, x)));
        }
}

TEST_CASE("dual basis of the truncated polynomial algebra reverses powers") {
    const std::size_t n = 5;
    const BuiltAlgebra b = build_truncated_poly(n, Q);
    const DualBasis d = compute_dual_basis(b.algebra, b.trace);
    // The Gram matrix is antidiagonal, so the dual of x^i is x^(n-1-i).
    for (std::size_t i = 0; i < n; ++i)
        CHECK(d.element(i) == b.algebra.basis_element(n - 1 - i));
}

TEST_CASE("dual basis of matrix units transposes indices") {
    const BuiltAlgebra b = build_matrix_blocks({3}, Q);
    const DualBasis d = compute_dual_basis(b.algebra, b.trace);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(d.element(i * 3 + j) == b.algebra.basis_element(j * 3 + i));
}

TEST_CASE("dual basis of the zigzag quiver") {
    const std::size_t n = 3;
    const BuiltAlgebra b = build_quiver_zigzag(n, Q);
    const Algebra& a = b.algebra;
    const DualBasis d = compute_dual_basis(a, b.trace);
    for (std::size_t k = 1; k <= n; ++k) {
        const std::size_t e = label_index(a, "e" + std::to_string(k));
        const std::size_t l = label_index(a, "l" + std::to_string(k));
        // dual(e_k) = l_k; dual(l_k) = e_k - l_k (the trace gives every
        // vertex idempotent weight 1, which shifts the loop duals).
        CHECK(d.element(e) == a.basis_element(l));
        CHECK(d.element(l) == a.basis_element(e) - a.basis_element(l));
    }
    for (std::size_t i = 1; i < n; ++i) {
        const std::size_t ar = label_index(a, "a" + std::to_string(i));
        const std::size_t al = label_index(a, "a" + std::to_string(i) + "'");
        CHECK(d.element(ar) == a.basis_element(al));
        CHECK(d.element(al) == a.basis_element(ar));
    }
}

TEST_CASE("duality pairing is the identity matrix on both sides") {
    const BuiltAlgebra b = build_temperley_lieb(2, Scalar::of_int(2, Q), Q);
    const DualBasis d = compute_dual_basis(b.algebra, b.trace);
    for (std::size_t i = 0; i < b.algebra.dim(); ++i)
        for (std::size_t j = 0; j < b.algebra.dim(); ++j) {
            const Scalar want = i == j ? Scalar::one(Q) : Scalar::zero(Q);
            CHECK(b.trace(b.algebra.multiply(d.element(j), b.algebra.basis_element(i))) ==
                  want);
            // tau is symmetric, so the pairing works from either side.
            CHECK(b.trace(b.algebra.multiply(b.algebra.basis_element(i), d.element(j))) ==
                  want);
        }
}

TEST_CASE("degenerate traces are rejected") {
    const BuiltAlgebra b = build_truncated_poly(3, Q);
    std::vector<Scalar> zeros(3, Scalar::zero(Q));
    CHECK_THROWS_AS(compute_dual_basis(b.algebra, TraceForm(zeros)), DegenerateTrace);
    // tau picking off the constant coefficient is degenerate too: x is
    // orthogonal to everything of degree >= 1.
    std::vector<Scalar> head(3, Scalar::zero(Q));
    head[0] = Scalar::one(Q);
    CHECK(!check_trace(b.algebra, TraceForm(head)).all_pass());
    CHECK_THROWS_AS(compute_dual_basis(b.algebra, TraceForm(head)), DegenerateTrace);
}

TEST_CASE("dual multiplication rules hold on the corpus") {
    for (const BuiltAlgebra& b : corpus()) {
        const DualBasis d = compute_dual_basis(b.algebra, b.trace);
        CHECK(verify_dual_mult_rules(b.algebra, b.trace, d).all_pass());
    }
}

TEST_CASE("the eight cell-dual identities hold on the corpus") {
    for (const BuiltAlgebra& b : corpus()) {
        const CellularAlgebra ca = CellularAlgebra::create(b.algebra, b.datum);
        const DualBasis d = compute_dual_basis(b.algebra, b.trace);
        const Report rep = verify_cell_dual_identities(ca, b.trace, d);
        CHECK(rep.all_pass());
        CHECK(rep.entries().size() == 8);
    }
}

TEST_CASE("products against duals of strictly higher cells vanish") {
    const BuiltAlgebra b = build_quiver_zigzag(3, Q);
    const DualBasis d = compute_dual_basis(b.algebra, b.trace);
    // The top cell holds e_1; the cell of l_3 sits strictly below it, so the
    // product of its basis element with the dual of e_1 must vanish.
    const std::size_t bottom = label_index(b.algebra, "l3");
    const std::size_t top = label_index(b.algebra, "e1");
    CHECK(b.algebra.multiply(b.algebra.basis_element(bottom), d.element(top)).is_zero());
    CHECK(b.algebra.multiply(d.element(top), b.algebra.basis_element(bottom)).is_zero());
}

TEST_CASE("dual transition formula") {
    // tau' = tau reproduces its own dual basis.
    const BuiltAlgebra b = build_quiver_zigzag(3, Q);
    CHECK(verify_dual_transition(b.algebra, b.trace, b.trace).all_pass());

    // Perturbing the weight of e_1 still gives a symmetrizing trace.
    std::vector<Scalar> values = b.trace.values();
    values[label_index(b.algebra, "e1")] = Scalar::of_int(2, Q);
    const TraceForm tau2(values);
    CHECK(check_trace(b.algebra, tau2).all_pass());
    CHECK(verify_dual_transition(b.algebra, b.trace, tau2).all_pass());
    CHECK(verify_dual_transition(b.algebra, tau2, b.trace).all_pass());

    // Same setup on K[x]/(x^3) with an extra weight on x.
    const BuiltAlgebra p = build_truncated_poly(3, Q);
    std::vector<Scalar> pvals = p.trace.values();
    pvals[1] = Scalar::one(Q);
    const TraceForm ptau2(pvals);
    CHECK(check_trace(p.algebra, ptau2).all_pass());
    CHECK(verify_dual_transition(p.algebra, p.trace, ptau2).all_pass());
}

TEST_CASE("perturbed_trace finds a distinct admissible trace on the corpus") {
    for (const BuiltAlgebra& b : corpus()) {
        const auto alt = perturbed_trace(b.algebra, b.trace);
        REQUIRE(alt.has_value());
        CHECK(alt->values() != b.trace.values());
        CHECK(check_trace(b.algebra, *alt).all_pass());
    }
}

TEST_CASE("trace functionals of the quiver fix arrows and tie loops together") {
    const BuiltAlgebra b = build_quiver_zigzag(3, Q);
    const Subspace traces = trace_functionals(b.algebra);
    // Free values: one per vertex idempotent plus one shared loop weight.
    CHECK(traces.dim() == 4);
    CHECK(traces.contains(b.trace.values()));
    // Any admissible trace kills the arrows and equalizes the loops.
    for (std::size_t r = 0; r < traces.dim(); ++r) {
        const auto row = traces.basis().row(r);
        CHECK(row[label_index(b.algebra, "a1")].is_zero());
        CHECK(row[label_index(b.algebra, "a2'")].is_zero());
        CHECK(row[label_index(b.algebra, "l1")] == row[label_index(b.algebra, "l2")]);
        CHECK(row[label_index(b.algebra, "l2")] == row[label_index(b.algebra, "l3")]);
    }
}
