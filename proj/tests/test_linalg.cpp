#include <doctest.h>

#include <random>

#include "cellalg/linalg.hpp"

using namespace cellalg;

namespace {

const FieldId Q = FieldId::rationals();

Matrix from_ints(const std::vector<std::vector<long>>& rows, FieldId f) {
    std::vector<std::vector<Scalar>> srows;
    for (const auto& r : rows) {
        std::vector<Scalar> sr;
        for (long v : r) sr.push_back(Scalar::of_int(v, f));
        srows.push_back(std::move(sr));
    }
    return Matrix::from_rows(srows, f);
}

// Rows of the (n+1) x n matrix expressing the x elements of the zigzag
// quiver in the loop basis: e_1, e_1+e_2, e_2+e_3, ..., e_n.
Matrix loop_coefficient_matrix(std::size_t n, FieldId f) {
    Matrix m(n + 1, n, f);
    m.at(0, 0) = Scalar::one(f);
    for (std::size_t r = 1; r < n; ++r) {
        m.at(r, r - 1) = Scalar::one(f);
        m.at(r, r) = Scalar::one(f);
    }
    m.at(n, n - 1) = Scalar::one(f);
    return m;
}

Matrix tridiagonal_2_1(std::size_t n, FieldId f) {
    Matrix m(n, n, f);
    for (std::size_t i = 0; i < n; ++i) {
        m.at(i, i) = Scalar::of_int(2, f);
        if (i + 1 < n) {
            m.at(i, i + 1) = Scalar::one(f);
            m.at(i + 1, i) = Scalar::one(f);
        }
    }
    return m;
}

Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, FieldId f) {
    std::uniform_int_distribution<long> dist(-4, 4);
    Matrix m(rows, cols, f);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = Scalar::of_int(dist(rng), f);
    return m;
}

} // namespace

TEST_CASE("rref basics") {
    const Matrix id2 = Matrix::identity(2, Q);
    const Echelon e1 = rref(id2);
    CHECK(e1.reduced == id2);
    CHECK(e1.rank == 2);

    const Echelon e2 = rref(from_ints({{1, 1}, {1, 1}}, Q));
    CHECK(e2.rank == 1);
    CHECK(e2.reduced == from_ints({{1, 1}, {0, 0}}, Q));
}

TEST_CASE("rref rank of the loop coefficient matrix is n") {
    for (std::size_t n : {2u, 3u, 4u, 5u}) CHECK(rref(loop_coefficient_matrix(n, Q)).rank == n);
}

TEST_CASE("kernel basics") {
    CHECK(kernel(Matrix::identity(3, Q)).dim() == 0);
    CHECK(kernel(Matrix(3, 3, Q)).dim() == 3);
    CHECK(kernel(Matrix(3, 3, Q)) == Subspace::full(3, Q));
}

TEST_CASE("tridiagonal (2,1) matrix drops rank exactly when char divides n+1") {
    // det of the n x n tridiagonal (2,1) matrix is n+1
    CHECK(determinant(tridiagonal_2_1(4, Q)) == Scalar::of_int(5, Q));
    const FieldId f5 = FieldId::prime_field(5);
    CHECK(kernel(tridiagonal_2_1(4, f5)).dim() == 1);
    CHECK(kernel(tridiagonal_2_1(4, Q)).dim() == 0);
    const FieldId f3 = FieldId::prime_field(3);
    CHECK(kernel(tridiagonal_2_1(2, f3)).dim() == 1);
}

TEST_CASE("solve") {
    const Matrix id3 = Matrix::identity(3, Q);
    const Matrix b = from_ints({{5}, {-2}, {7}}, Q);
    CHECK(solve(id3, b) == b);

    // Singular matrix, b outside the column space.
    const Matrix sing = from_ints({{1, 1}, {1, 1}}, Q);
    CHECK_THROWS_AS(solve(sing, from_ints({{1}, {0}}, Q)), Inconsistent);

    // Antidiagonal Gram matrix of the length-3 truncated polynomial algebra:
    // solving against a unit vector permutes it.
    const Matrix anti = from_ints({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}, Q);
    CHECK(solve(anti, from_ints({{1}, {0}, {0}}, Q)) == from_ints({{0}, {0}, {1}}, Q));
}

TEST_CASE("invert") {
    CHECK_THROWS_AS(invert(from_ints({{1, 1}, {1, 1}}, Q)), Singular);
    CHECK_THROWS_AS(invert(Matrix(2, 2, Q)), Singular);
    std::mt19937 rng(99);
    int successes = 0;
    while (successes < 20) {
        const Matrix m = random_matrix(rng, 4, 4, Q);
        try {
            const Matrix inv = invert(m);
            CHECK(inv * m == Matrix::identity(4, Q));
            CHECK(m * inv == Matrix::identity(4, Q));
            ++successes;
        } catch (const Singular&) {
        }
    }
}

TEST_CASE("rref is idempotent and rank-nullity holds on random matrices") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<std::size_t> dim_dist(1, 6);
    const FieldId f7 = FieldId::prime_field(7);
    for (int iter = 0; iter < 200; ++iter) {
        const FieldId f = iter % 2 == 0 ? Q : f7;
        const Matrix m = random_matrix(rng, dim_dist(rng), dim_dist(rng), f);
        const Echelon e = rref(m);
        CHECK(rref(e.reduced).reduced == e.reduced);
        CHECK(e.rank + kernel(m).dim() == m.cols());
        // Kernel vectors really lie in the kernel.
        const Subspace k = kernel(m);
        for (std::size_t r = 0; r < k.dim(); ++r) {
            std::vector<Scalar> v = k.basis().row(r);
            for (const Scalar& c : m.apply(v)) CHECK(c.is_zero());
        }
    }
}

TEST_CASE("subspace predicates") {
    const Subspace line = Subspace::from_rows(from_ints({{1, 0}}, Q));
    const Subspace plane = Subspace::from_rows(from_ints({{1, 0}, {0, 1}}, Q));
    CHECK(line == line);
    CHECK(line.leq(plane));
    CHECK(!plane.leq(line));
    CHECK(line.leq(line));
    CHECK(plane == Subspace::full(2, Q));
    CHECK(line.sum(plane) == plane);

    // Canonical forms identify different spanning sets.
    const Subspace s1 = Subspace::from_rows(from_ints({{2, 4}, {1, 3}}, Q));
    const Subspace s2 = Subspace::from_rows(from_ints({{1, 0}, {7, 1}}, Q));
    CHECK(s1 == s2);

    CHECK_THROWS_AS(line.leq(Subspace::full(3, Q)), DimensionMismatch);
}

TEST_CASE("subspace partial order on random data") {
    std::mt19937 rng(777);
    for (int iter = 0; iter < 50; ++iter) {
        const Matrix a = random_matrix(rng, 3, 5, Q);
        const Matrix b = random_matrix(rng, 2, 5, Q);
        const Subspace sa = Subspace::from_rows(a);
        const Subspace sb = Subspace::from_rows(b);
        const Subspace sum = sa.sum(sb);
        CHECK(sa.leq(sum));
        CHECK(sb.leq(sum));
        if (sa.leq(sb) && sb.leq(sa)) CHECK(sa == sb);
        CHECK(sum.dim() <= sa.dim() + sb.dim());
    }
}
