#ifndef CELLALG_LINALG_HPP
#define CELLALG_LINALG_HPP

#include <cstddef>
#include <vector>

#include "cellalg/scalar.hpp"

namespace cellalg {

/// Dense matrix over one exact field. Immutable value semantics; the
/// in-place accessors exist only for construction code.
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols, FieldId f);

    static Matrix identity(std::size_t n, FieldId f);
    static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows, FieldId f);
    static Matrix row_vector(const std::vector<Scalar>& v, FieldId f);
    static Matrix column_vector(const std::vector<Scalar>& v, FieldId f);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    FieldId field() const { return field_; }

    const Scalar& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    Scalar& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }

    std::vector<Scalar> row(std::size_t i) const;
    std::vector<Scalar> apply(const std::vector<Scalar>& v) const; // matrix * column

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix transpose() const;
    bool is_zero() const;

    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    std::size_t rows_, cols_;
    FieldId field_;
    std::vector<Scalar> a_;
};

struct Echelon {
    Matrix reduced;
    std::size_t rank;
    std::vector<std::size_t> pivots;
};

/// Unique reduced row-echelon form. Exact arithmetic, first-nonzero pivots.
Echelon rref(const Matrix& m);

/// Solves m * x = b (b may have several columns). Throws Inconsistent.
Matrix solve(const Matrix& m, const Matrix& b);

/// Inverse of a square matrix. Throws Singular.
Matrix invert(const Matrix& m);

Scalar determinant(const Matrix& m);

/// A linear subspace of K^n in canonical form: the RREF basis matrix with
/// zero rows removed. Equality of subspaces is entrywise equality here.
class Subspace {
public:
    static Subspace zero(std::size_t ambient, FieldId f);
    static Subspace full(std::size_t ambient, FieldId f);
    static Subspace from_rows(const Matrix& rows);

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    FieldId field() const { return basis_.field(); }
    const Matrix& basis() const { return basis_; }

    bool contains(const std::vector<Scalar>& v) const;
    bool leq(const Subspace& o) const;
    Subspace sum(const Subspace& o) const;

    friend bool operator==(const Subspace& a, const Subspace& b);
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
    Subspace(std::size_t ambient, Matrix basis)
        : ambient_(ambient), basis_(std::move(basis)) {}

    std::size_t ambient_;
    Matrix basis_;
};

/// Null space {v : m v = 0} as a canonical subspace of K^cols.
Subspace kernel(const Matrix& m);

} // namespace cellalg

#endif
