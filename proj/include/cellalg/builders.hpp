#ifndef CELLALG_BUILDERS_HPP
#define CELLALG_BUILDERS_HPP

#include "cellalg/cellular.hpp"
#include "cellalg/trace.hpp"

namespace cellalg {

/// One algebra ready for verification: table, cell datum and trace vector.
struct BuiltAlgebra {
    Algebra algebra;
    CellDatum datum;
    TraceForm trace;
};

/// Zigzag quiver on n vertices (arrows both ways between neighbours) modulo
/// the relations killing length-3 paths, same-direction length-2 paths and
/// identifying the two loops at each inner vertex. Dimension 4n-2; n+1 cells
/// of sizes 1, 2, ..., 2, 1. The cell order is chosen empirically: the
/// orientation passing verify_cell_datum is emitted.
BuiltAlgebra build_quiver_zigzag(std::size_t n, FieldId field); // n >= 2

/// K[x]/(x^n) with singleton cells, higher powers lower in the order, and
/// the trace picking the coefficient of x^{n-1}.
BuiltAlgebra build_truncated_poly(std::size_t n, FieldId field); // n >= 1

/// Direct sum of full matrix algebras on the matrix-unit basis, one
/// (incomparable) cell per block, transpose involution, sum-of-traces form.
BuiltAlgebra build_matrix_blocks(const std::vector<std::size_t>& sizes, FieldId field);

/// Temperley-Lieb algebra TL_n(delta) on planar diagrams, cells indexed by
/// through-strand count, Markov trace tau(d) = delta^(loops(closure) - n).
/// Throws DegenerateTrace when the trace Gram matrix is singular at the
/// chosen delta.
BuiltAlgebra build_temperley_lieb(std::size_t n, const Scalar& delta, FieldId field);

/// Parameter block for CLI dispatch by family name.
struct BuilderParams {
    std::string family; // quiver-zigzag | truncated-poly | matrix-blocks | temperley-lieb
    std::size_t n = 0;
    std::vector<std::size_t> blocks;
    std::string delta; // scalar string, temperley-lieb only
    FieldId field;
};

BuiltAlgebra build_family(const BuilderParams& params);

} // namespace cellalg

#endif
