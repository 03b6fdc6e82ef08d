#ifndef CELLALG_ALGEBRA_HPP
#define CELLALG_ALGEBRA_HPP

#include <cstddef>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "cellalg/linalg.hpp"
#include "cellalg/report.hpp"
#include "cellalg/scalar.hpp"

namespace cellalg {

/// Sparse 3-tensor r_{ijk} with a_i a_j = sum_k r_{ijk} a_k.
/// Absent entries are zero. Per-pair product lists are kept sorted by k.
class StructureConstants {
public:
    StructureConstants(std::size_t dim, FieldId f);

    std::size_t dim() const { return dim_; }
    FieldId field() const { return field_; }

    void set(std::size_t i, std::size_t j, std::size_t k, const Scalar& c);
    Scalar get(std::size_t i, std::size_t j, std::size_t k) const;

    /// Nonzero (k, coefficient) pairs of a_i * a_j, sorted by k.
    const std::vector<std::pair<std::size_t, Scalar>>& product(std::size_t i,
                                                               std::size_t j) const;

    /// All nonzero entries as (i, j, k, coefficient), lexicographic.
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Scalar>> entries() const;

private:
    std::size_t dim_;
    FieldId field_;
    std::vector<std::vector<std::pair<std::size_t, Scalar>>> table_;
};

/// Element of the algebra as a coefficient vector over the basis.
class Element {
public:
    Element(std::vector<Scalar> coeffs, FieldId f);

    static Element zero(std::size_t dim, FieldId f);
    static Element basis(std::size_t dim, FieldId f, std::size_t i);

    std::size_t dim() const { return coeffs_.size(); }
    FieldId field() const { return field_; }
    const std::vector<Scalar>& coeffs() const { return coeffs_; }
    const Scalar& operator[](std::size_t i) const { return coeffs_[i]; }
    Scalar& operator[](std::size_t i) { return coeffs_[i]; }
    bool is_zero() const;

    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    Element scaled(const Scalar& c) const;

    friend Element operator+(Element a, const Element& b) { a += b; return a; }
    friend Element operator-(Element a, const Element& b) { a -= b; return a; }
    friend bool operator==(const Element& a, const Element& b);
    friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

private:
    FieldId field_;
    std::vector<Scalar> coeffs_;
};

/// Finite-dimensional associative unital algebra presented by structure
/// constants on an explicit basis, together with an anti-involution given
/// as a permutation of the basis.
///
/// Construction validates shapes, that the claimed identity really is a
/// two-sided identity, and that the involution permutation is involutive.
/// Associativity and the anti-automorphism law are separate report-style
/// checks (check_associativity / check_anti_automorphism) so that corrupted
/// input can be diagnosed with a witness instead of an exception.
class Algebra {
public:
    Algebra(std::vector<std::string> labels, StructureConstants sc, Element identity,
            std::vector<std::size_t> involution);

    std::size_t dim() const { return sc_.dim(); }
    FieldId field() const { return sc_.field(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const StructureConstants& sc() const { return sc_; }
    const Element& one() const { return one_; }
    const std::vector<std::size_t>& involution_perm() const { return invol_; }

    Element multiply(const Element& x, const Element& y) const;
    Element involution(const Element& x) const;
    Element basis_element(std::size_t i) const { return Element::basis(dim(), field(), i); }
    Scalar structure_constant(std::size_t i, std::size_t j, std::size_t k) const {
        return sc_.get(i, j, k);
    }

    /// Columns are the coefficients of a * a_j (resp. a_j * a).
    Matrix left_mult_matrix(const Element& a) const;
    Matrix right_mult_matrix(const Element& a) const;

    /// Renders an element as a readable combination of basis labels.
    std::string format(const Element& x) const;

private:
    std::vector<std::string> labels_;
    StructureConstants sc_;
    Element one_;
    std::vector<std::size_t> invol_;
};

/// Solves e * a_i = a_i = a_i * e for all i. Throws NoIdentity.
Element find_identity(const StructureConstants& sc);

/// Passes, or reports the first violating quadruple (i,j,k,l) with
/// sum_m r_{ijm} r_{mkl} != sum_m r_{jkm} r_{iml}.
Report check_associativity(const StructureConstants& sc);

/// i(xy) = i(y) i(x) on all basis pairs and i o i = id.
Report check_anti_automorphism(const Algebra& a);

} // namespace cellalg

#endif
