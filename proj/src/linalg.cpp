#include "cellalg/linalg.hpp"

#include <algorithm>
#include <utility>

namespace cellalg {

Matrix::Matrix(std::size_t rows, std::size_t cols, FieldId f)
    : rows_(rows), cols_(cols), field_(f), a_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(std::size_t n, FieldId f) {
    Matrix m(n, n, f);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows, FieldId f) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    Matrix m(r, c, f);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw DimensionMismatch("ragged rows");
        for (std::size_t j = 0; j < c; ++j) {
            if (rows[i][j].field() != f) throw DimensionMismatch("entry field mismatch");
            m.at(i, j) = rows[i][j];
        }
    }
    return m;
}

Matrix Matrix::row_vector(const std::vector<Scalar>& v, FieldId f) {
    return from_rows({v}, f);
}

Matrix Matrix::column_vector(const std::vector<Scalar>& v, FieldId f) {
    Matrix m(v.size(), 1, f);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].field() != f) throw DimensionMismatch("entry field mismatch");
        m.at(i, 0) = v[i];
    }
    return m;
}

std::vector<Scalar> Matrix::row(std::size_t i) const {
    return std::vector<Scalar>(a_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                               a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& v) const {
    if (v.size() != cols_) throw DimensionMismatch("matrix-vector size mismatch");
    std::vector<Scalar> out(rows_, Scalar::zero(field_));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero()) out[i] += at(i, j) * v[j];
    return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_ || field_ != o.field_)
        throw DimensionMismatch("matrix product shape mismatch");
    Matrix m(rows_, o.cols_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& x = at(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                if (!o.at(k, j).is_zero()) m.at(i, j) += x * o.at(k, j);
        }
    return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || field_ != o.field_)
        throw DimensionMismatch("matrix sum shape mismatch");
    Matrix m = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] += o.a_[i];
    return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || field_ != o.field_)
        throw DimensionMismatch("matrix difference shape mismatch");
    Matrix m = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] -= o.a_[i];
    return m;
}

Matrix Matrix::transpose() const {
    Matrix m(cols_, rows_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

bool Matrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ &&
           a.a_ == b.a_;
}

Echelon rref(const Matrix& m) {
    Matrix r = m;
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < r.cols() && lead < r.rows(); ++col) {
        std::size_t piv = lead;
        while (piv < r.rows() && r.at(piv, col).is_zero()) ++piv;
        if (piv == r.rows()) continue;
        if (piv != lead)
            for (std::size_t j = 0; j < r.cols(); ++j)
                std::swap(r.at(piv, j), r.at(lead, j));
        const Scalar inv = r.at(lead, col).inverse();
        for (std::size_t j = col; j < r.cols(); ++j) r.at(lead, j) *= inv;
        for (std::size_t i = 0; i < r.rows(); ++i) {
            if (i == lead || r.at(i, col).is_zero()) continue;
            const Scalar factor = r.at(i, col);
            for (std::size_t j = col; j < r.cols(); ++j)
                r.at(i, j) -= factor * r.at(lead, j);
        }
        pivots.push_back(col);
        ++lead;
    }
    return Echelon{std::move(r), pivots.size(), std::move(pivots)};
}

Matrix solve(const Matrix& m, const Matrix& b) {
    if (m.rows() != b.rows() || m.field() != b.field())
        throw DimensionMismatch("solve: shape mismatch");
    Matrix aug(m.rows(), m.cols() + b.cols(), m.field());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) aug.at(i, m.cols() + j) = b.at(i, j);
    }
    const Echelon e = rref(aug);
    for (std::size_t p : e.pivots)
        if (p >= m.cols()) throw Inconsistent("no solution exists");
    Matrix x(m.cols(), b.cols(), m.field());
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
        for (std::size_t j = 0; j < b.cols(); ++j)
            x.at(e.pivots[r], j) = e.reduced.at(r, m.cols() + j);
    return x;
}

Matrix invert(const Matrix& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("invert: matrix not square");
    try {
        Matrix inv = solve(m, Matrix::identity(m.rows(), m.field()));
        // A consistent square solve with full pivot set is the inverse; a
        // rank-deficient m leaves ghost solutions, so re-check.
        if (m * inv != Matrix::identity(m.rows(), m.field()))
            throw Singular("matrix is singular");
        return inv;
    } catch (const Inconsistent&) {
        throw Singular("matrix is singular");
    }
}

Scalar determinant(const Matrix& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("determinant: matrix not square");
    Matrix r = m;
    const std::size_t n = r.rows();
    Scalar det = Scalar::one(m.field());
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && r.at(piv, col).is_zero()) ++piv;
        if (piv == n) return Scalar::zero(m.field());
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(r.at(piv, j), r.at(col, j));
            det = -det;
        }
        det *= r.at(col, col);
        const Scalar inv = r.at(col, col).inverse();
        for (std::size_t i = col + 1; i < n; ++i) {
            if (r.at(i, col).is_zero()) continue;
            const Scalar factor = r.at(i, col) * inv;
            for (std::size_t j = col; j < n; ++j) r.at(i, j) -= factor * r.at(col, j);
        }
    }
    return det;
}

Subspace Subspace::zero(std::size_t ambient, FieldId f) {
    return Subspace(ambient, Matrix(0, ambient, f));
}

Subspace Subspace::full(std::size_t ambient, FieldId f) {
    return Subspace(ambient, Matrix::identity(ambient, f));
}

Subspace Subspace::from_rows(const Matrix& rows) {
    const Echelon e = rref(rows);
    Matrix basis(e.rank, rows.cols(), rows.field());
    for (std::size_t i = 0; i < e.rank; ++i)
        for (std::size_t j = 0; j < rows.cols(); ++j) basis.at(i, j) = e.reduced.at(i, j);
    return Subspace(rows.cols(), std::move(basis));
}

bool Subspace::contains(const std::vector<Scalar>& v) const {
    if (v.size() != ambient_) throw DimensionMismatch("subspace ambient mismatch");
    std::vector<Scalar> w = v;
    for (std::size_t r = 0; r < basis_.rows(); ++r) {
        // basis_ is RREF, so the pivot is the first nonzero entry of the row
        std::size_t c = 0;
        while (c < ambient_ && basis_.at(r, c).is_zero()) ++c;
        if (c == ambient_ || w[c].is_zero()) continue;
        const Scalar factor = w[c];
        for (std::size_t j = c; j < ambient_; ++j) w[j] -= factor * basis_.at(r, j);
    }
    return std::all_of(w.begin(), w.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool Subspace::leq(const Subspace& o) const {
    if (ambient_ != o.ambient_) throw DimensionMismatch("subspace ambient mismatch");
    for (std::size_t i = 0; i < basis_.rows(); ++i)
        if (!o.contains(basis_.row(i))) return false;
    return true;
}

Subspace Subspace::sum(const Subspace& o) const {
    if (ambient_ != o.ambient_ || field() != o.field())
        throw DimensionMismatch("subspace ambient mismatch");
    Matrix stacked(dim() + o.dim(), ambient_, field());
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < ambient_; ++j) stacked.at(i, j) = basis_.at(i, j);
    for (std::size_t i = 0; i < o.dim(); ++i)
        for (std::size_t j = 0; j < ambient_; ++j)
            stacked.at(dim() + i, j) = o.basis_.at(i, j);
    return from_rows(stacked);
}

bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
}

Subspace kernel(const Matrix& m) {
    const Echelon e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : e.pivots) is_pivot[p] = true;
    Matrix gens(m.cols() - e.rank, m.cols(), m.field());
    std::size_t g = 0;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        gens.at(g, free) = Scalar::one(m.field());
        for (std::size_t r = 0; r < e.pivots.size(); ++r)
            gens.at(g, e.pivots[r]) = -e.reduced.at(r, free);
        ++g;
    }
    return Subspace::from_rows(gens);
}

} // namespace cellalg
