#ifndef CELLALG_TRACE_HPP
#define CELLALG_TRACE_HPP

#include <optional>

#include "cellalg/cellular.hpp"

namespace cellalg {

/// Linear functional on the algebra, stored as its values on the basis.
class TraceForm {
public:
    explicit TraceForm(std::vector<Scalar> values);

    std::size_t dim() const { return values_.size(); }
    FieldId field() const { return values_.empty() ? FieldId::rationals() : values_[0].field(); }
    const std::vector<Scalar>& values() const { return values_; }

    Scalar operator()(const Element& x) const;

private:
    std::vector<Scalar> values_;
};

/// G_{ij} = tau(a_i a_j).
Matrix trace_gram(const Algebra& a, const TraceForm& tau);

/// Symmetry tau(a_i a_j) = tau(a_j a_i) and invertibility of the Gram matrix.
Report check_trace(const Algebra& a, const TraceForm& tau);

/// Dual basis of the algebra basis: row j holds the coefficients of D_j,
/// the element with tau(D_j a_i) = delta_{ij}.
class DualBasis {
public:
    explicit DualBasis(Matrix coeffs) : coeffs_(std::move(coeffs)) {}

    const Matrix& coeffs() const { return coeffs_; }
    Element element(std::size_t j) const;

private:
    Matrix coeffs_;
};

/// Inverts the trace Gram matrix and re-verifies tau(D_j a_i) = delta_{ij}.
/// Throws DegenerateTrace if the Gram matrix is singular.
DualBasis compute_dual_basis(const Algebra& a, const TraceForm& tau);

/// The two multiplication rules moving products onto the dual basis:
///   a_i D_j = sum_k r_{kij} D_k   and   D_i a_j = sum_k r_{jki} D_k.
Report verify_dual_mult_rules(const Algebra& a, const TraceForm& tau, const DualBasis& d);

/// The eight product identities between cellular basis elements and their
/// duals (expansion rules, column/row collapse, orthogonality across
/// incomparable and strictly higher cells). Exhaustive over index tuples;
/// entries named cell-dual-identities/part1 .. part8.
Report verify_cell_dual_identities(const CellularAlgebra& ca, const TraceForm& tau,
                                   const DualBasis& d);

/// Transition between the dual bases of two admissible traces:
///   D'_i = sum_j tau(a_j D'_i) D_j,
/// checked against the independently solved dual basis of tau2.
Report verify_dual_transition(const Algebra& a, const TraceForm& tau, const TraceForm& tau2);

/// All linear functionals vanishing on commutators, i.e. candidates for a
/// trace vector, as a subspace of K^dim.
Subspace trace_functionals(const Algebra& a);

/// Deterministic alternative symmetrizing trace: walks a fixed candidate
/// list (basis perturbations from trace_functionals, then small scalings)
/// and returns the first one that is symmetric, non-degenerate and distinct
/// from tau. Empty if none of the candidates qualifies.
std::optional<TraceForm> perturbed_trace(const Algebra& a, const TraceForm& tau);

} // namespace cellalg

#endif
