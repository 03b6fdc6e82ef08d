#ifndef CELLALG_CENTER_HPP
#define CELLALG_CENTER_HPP

#include <optional>

#include "cellalg/trace.hpp"

namespace cellalg {

/// Z(A) = {v : a_i v = v a_i for all i}, as the kernel of the stacked
/// left-minus-right multiplication matrices.
Subspace compute_center(const Algebra& a);

/// sum_S C^l_{S,t} D^l_{S,t} for one fixed column t.
Element x_element(const CellularAlgebra& ca, const DualBasis& d, std::size_t lambda,
                  std::size_t t);

/// sum_t D^l_{s,t} C^l_{s,t} for one fixed row s.
Element x_element_flipped(const CellularAlgebra& ca, const DualBasis& d,
                          std::size_t lambda, std::size_t s);

/// The central element x_lambda; recomputed for every admissible column and
/// required to agree (throws Error otherwise).
Element compute_x_lambda(const CellularAlgebra& ca, const DualBasis& d,
                         std::size_t lambda);

/// The flipped element x'_lambda, row-independent by the mirrored identity.
Element compute_x_lambda_flipped(const CellularAlgebra& ca, const DualBasis& d,
                                 std::size_t lambda);

/// Spans of {x_lambda} resp. {x'_lambda}, canonical.
Subspace compute_L(const CellularAlgebra& ca, const DualBasis& d);
Subspace compute_L_prime(const CellularAlgebra& ca, const DualBasis& d);

/// The Higman ideal, computed from both printed expressions
///   span_a { sum_i D_i a a_i }   and   span_a { sum_i a_i a D_i },
/// which must coincide (throws HigmanFormsDisagree otherwise).
Subspace compute_higman(const Algebra& a, const DualBasis& d);

/// Everything the center computations produce, bundled. Construction
/// re-checks the containments H <= L <= Z, H <= L' <= Z and that every
/// x_lambda is central; a violation on verified input is an internal error.
struct CentralStructure {
    Subspace Z;
    Subspace H;
    Subspace L;
    Subspace Lprime;
    std::vector<Element> x;
    std::vector<Element> xprime;
};

CentralStructure compute_central_structure(const CellularAlgebra& ca, const DualBasis& d);

/// Checks on L = span{x_lambda}: contains the Higman ideal, sits inside the
/// center, is closed under multiplication by central elements, has the same
/// span for a second admissible trace, and has dimension at least |Lambda_0|
/// with {x_lambda : lambda in Lambda_0} linearly independent.
Report verify_center_ideal(const CellularAlgebra& ca, const TraceForm& tau,
                           const std::optional<TraceForm>& alt);

/// Mirror of verify_center_ideal for L' = span{x'_lambda}; also reports,
/// without asserting, whether L and L' coincide on this input.
Report verify_center_ideal_flipped(const CellularAlgebra& ca, const TraceForm& tau,
                                   const std::optional<TraceForm>& alt);

/// x_lambda x_mu = 0 for every ordered pair lambda != mu.
Report verify_x_orthogonality(const CellularAlgebra& ca, const DualBasis& d);

/// Schur elements per cell. The primary route is the character sum
/// sum_i chi(a_i) chi(D_i) = c * |M(lambda)|; whenever x_lambda != 0 the
/// value is cross-checked against x_lambda^2 = c x_lambda (throws
/// SchurCrossCheckFailed on disagreement). In a prime field where
/// |M(lambda)| vanishes the character route is unavailable and the relation
/// route is used alone; if x_lambda = 0 as well, the value is undefined.
struct SchurData {
    struct Cell {
        Scalar c;
        bool defined;
        std::vector<Scalar> character; // chi on each basis element
        std::size_t n;                 // |M(lambda)|
    };
    std::vector<Cell> cells;

    bool all_defined_nonzero() const;
};

SchurData schur_elements(const CellularAlgebra& ca, const TraceForm& tau,
                         const DualBasis& d);

/// {c_lambda^{-1} x_lambda}. Requires every Schur element nonzero (throws
/// NotSemisimple). The results are verified to be orthogonal idempotents
/// summing to the identity and to agree with the character-sum expression
/// c^{-1} sum_i chi(a_i) D_i elementwise.
std::vector<Element> primitive_idempotents(const CellularAlgebra& ca, const TraceForm& tau,
                                           const DualBasis& d);

/// For a = sum_lambda coeffs[lambda] x_lambda: verifies tau(x_lambda) =
/// |M(lambda)| and tau(a x_lambda) = coeffs[lambda] c_lambda tau(x_lambda),
/// then reports whether each coeffs[lambda] c_lambda |M(lambda)| is an
/// integer (rational field only; degenerate over F_p and reported as
/// not-applicable).
Report integrality_check(const CellularAlgebra& ca, const TraceForm& tau,
                         const DualBasis& d, const std::vector<Scalar>& coeffs);

/// True iff every cell Gram matrix is nonsingular; cross-validated against
/// nonvanishing of all Schur elements (throws SemisimpleCriteriaDisagree if
/// the two criteria disagree).
bool check_semisimple(const CellularAlgebra& ca, const TraceForm& tau, const DualBasis& d);

} // namespace cellalg

#endif
