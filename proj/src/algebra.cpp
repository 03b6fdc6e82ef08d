#include "cellalg/algebra.hpp"

#include <algorithm>

namespace cellalg {

StructureConstants::StructureConstants(std::size_t dim, FieldId f)
    : dim_(dim), field_(f), table_(dim * dim) {}

void StructureConstants::set(std::size_t i, std::size_t j, std::size_t k,
                             const Scalar& c) {
    if (i >= dim_ || j >= dim_ || k >= dim_)
        throw ValidationError("structure-constant index out of range");
    if (c.field() != field_) throw DimensionMismatch("structure-constant field mismatch");
    auto& list = table_[i * dim_ + j];
    auto it = std::lower_bound(list.begin(), list.end(), k,
                               [](const auto& e, std::size_t kk) { return e.first < kk; });
    if (it != list.end() && it->first == k) {
        if (c.is_zero())
            list.erase(it);
        else
            it->second = c;
    } else if (!c.is_zero()) {
        list.insert(it, {k, c});
    }
}

Scalar StructureConstants::get(std::size_t i, std::size_t j, std::size_t k) const {
    for (const auto& [kk, c] : table_[i * dim_ + j])
        if (kk == k) return c;
    return Scalar::zero(field_);
}

const std::vector<std::pair<std::size_t, Scalar>>& StructureConstants::product(
    std::size_t i, std::size_t j) const {
    return table_[i * dim_ + j];
}

std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Scalar>>
StructureConstants::entries() const {
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Scalar>> out;
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j)
            for (const auto& [k, c] : table_[i * dim_ + j]) out.emplace_back(i, j, k, c);
    return out;
}

Element::Element(std::vector<Scalar> coeffs, FieldId f)
    : field_(f), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_)
        if (c.field() != f) throw DimensionMismatch("element coefficient field mismatch");
}

Element Element::zero(std::size_t dim, FieldId f) {
    return Element(std::vector<Scalar>(dim, Scalar::zero(f)), f);
}

Element Element::basis(std::size_t dim, FieldId f, std::size_t i) {
    Element e = zero(dim, f);
    e[i] = Scalar::one(f);
    return e;
}

bool Element::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Scalar& c) { return c.is_zero(); });
}

Element& Element::operator+=(const Element& o) {
    if (dim() != o.dim() || field_ != o.field_)
        throw DimensionMismatch("element sum shape mismatch");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

Element& Element::operator-=(const Element& o) {
    if (dim() != o.dim() || field_ != o.field_)
        throw DimensionMismatch("element difference shape mismatch");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

Element Element::scaled(const Scalar& c) const {
    Element e = *this;
    for (auto& x : e.coeffs_) x *= c;
    return e;
}

bool operator==(const Element& a, const Element& b) {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
}

Algebra::Algebra(std::vector<std::string> labels, StructureConstants sc,
                 Element identity, std::vector<std::size_t> involution)
    : labels_(std::move(labels)),
      sc_(std::move(sc)),
      one_(std::move(identity)),
      invol_(std::move(involution)) {
    const std::size_t n = sc_.dim();
    if (labels_.size() != n) throw ValidationError("label count != dim");
    if (one_.dim() != n || one_.field() != sc_.field())
        throw ValidationError("identity vector has wrong shape");
    if (invol_.size() != n) throw ValidationError("involution permutation has wrong size");
    std::vector<bool> seen(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        if (invol_[i] >= n || seen[invol_[i]])
            throw ValidationError("involution is not a permutation");
        seen[invol_[i]] = true;
    }
    for (std::size_t i = 0; i < n; ++i)
        if (invol_[invol_[i]] != i)
            throw ValidationError("involution permutation does not square to the identity");
    for (std::size_t i = 0; i < n; ++i) {
        const Element b = basis_element(i);
        if (multiply(one_, b) != b || multiply(b, one_) != b)
            throw ValidationError("claimed identity is not a two-sided identity (basis " +
                                  labels_[i] + ")");
    }
}

Element Algebra::multiply(const Element& x, const Element& y) const {
    if (x.dim() != dim() || y.dim() != dim() || x.field() != field() ||
        y.field() != field())
        throw DimensionMismatch("multiply: element does not belong to this algebra");
    Element out = Element::zero(dim(), field());
    for (std::size_t i = 0; i < dim(); ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim(); ++j) {
            if (y[j].is_zero()) continue;
            const Scalar xy = x[i] * y[j];
            for (const auto& [k, c] : sc_.product(i, j)) out[k] += xy * c;
        }
    }
    return out;
}

Element Algebra::involution(const Element& x) const {
    if (x.dim() != dim()) throw DimensionMismatch("involution: wrong dimension");
    Element out = Element::zero(dim(), field());
    for (std::size_t i = 0; i < dim(); ++i) out[invol_[i]] = x[i];
    return out;
}

Matrix Algebra::left_mult_matrix(const Element& a) const {
    Matrix m(dim(), dim(), field());
    for (std::size_t j = 0; j < dim(); ++j) {
        const Element col = multiply(a, basis_element(j));
        for (std::size_t i = 0; i < dim(); ++i) m.at(i, j) = col[i];
    }
    return m;
}

Matrix Algebra::right_mult_matrix(const Element& a) const {
    Matrix m(dim(), dim(), field());
    for (std::size_t j = 0; j < dim(); ++j) {
        const Element col = multiply(basis_element(j), a);
        for (std::size_t i = 0; i < dim(); ++i) m.at(i, j) = col[i];
    }
    return m;
}

std::string Algebra::format(const Element& x) const {
    std::string out;
    for (std::size_t i = 0; i < dim(); ++i) {
        if (x[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        if (x[i].is_one()) {
            out += labels_[i];
        } else {
            const std::string c = x[i].str();
            out += (c.find(' ') == std::string::npos ? c : "(" + c + ")") + "*" + labels_[i];
        }
    }
    return out.empty() ? "0" : out;
}

Element find_identity(const StructureConstants& sc) {
    const std::size_t n = sc.dim();
    const FieldId f = sc.field();
    // Unknown e = sum_j e_j a_j; equations e*a_i = a_i and a_i*e = a_i,
    // one row per (side, i, k) coordinate.
    Matrix m(2 * n * n, n, f);
    Matrix b(2 * n * n, 1, f);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (const auto& [k, c] : sc.product(j, i)) m.at(i * n + k, j) += c;
            for (const auto& [k, c] : sc.product(i, j))
                m.at(n * n + i * n + k, j) += c;
        }
        b.at(i * n + i, 0) = Scalar::one(f);
        b.at(n * n + i * n + i, 0) = Scalar::one(f);
    }
    try {
        const Matrix x = solve(m, b);
        std::vector<Scalar> coeffs;
        coeffs.reserve(n);
        for (std::size_t j = 0; j < n; ++j) coeffs.push_back(x.at(j, 0));
        return Element(std::move(coeffs), f);
    } catch (const Inconsistent&) {
        throw NoIdentity("the unit equations have no solution");
    }
}

Report check_associativity(const StructureConstants& sc) {
    const std::size_t n = sc.dim();
    const FieldId f = sc.field();
    Report rep;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                std::vector<Scalar> lhs(n, Scalar::zero(f));
                std::vector<Scalar> rhs(n, Scalar::zero(f));
                for (const auto& [m, c] : sc.product(i, j))
                    for (const auto& [l, d] : sc.product(m, k)) lhs[l] += c * d;
                for (const auto& [m, c] : sc.product(j, k))
                    for (const auto& [l, d] : sc.product(i, m)) rhs[l] += c * d;
                for (std::size_t l = 0; l < n; ++l)
                    if (lhs[l] != rhs[l]) {
                        rep.fail("associativity",
                                 "witness (i,j,k,l)=(" + std::to_string(i) + "," +
                                     std::to_string(j) + "," + std::to_string(k) + "," +
                                     std::to_string(l) + "): " + lhs[l].str() +
                                     " != " + rhs[l].str());
                        return rep;
                    }
            }
    rep.pass("associativity");
    return rep;
}

Report check_anti_automorphism(const Algebra& a) {
    Report rep;
    bool ok = true;
    for (std::size_t i = 0; i < a.dim() && ok; ++i)
        for (std::size_t j = 0; j < a.dim() && ok; ++j) {
            const Element lhs =
                a.involution(a.multiply(a.basis_element(i), a.basis_element(j)));
            const Element rhs =
                a.multiply(a.involution(a.basis_element(j)), a.involution(a.basis_element(i)));
            if (lhs != rhs) {
                rep.fail("anti-automorphism",
                         "witness (i,j)=(" + std::to_string(i) + "," + std::to_string(j) +
                             "): i(a_i a_j) != i(a_j) i(a_i)");
                ok = false;
            }
        }
    if (ok) rep.pass("anti-automorphism");
    if (a.involution(a.one()) != a.one())
        rep.fail("anti-automorphism/fixes-identity");
    else
        rep.pass("anti-automorphism/fixes-identity");
    return rep;
}

} // namespace cellalg
