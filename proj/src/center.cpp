#include "cellalg/center.hpp"

namespace cellalg {

Subspace compute_center(const Algebra& a) {
    const std::size_t n = a.dim();
    Matrix stacked(n * n, n, a.field());
    for (std::size_t i = 0; i < n; ++i) {
        const Matrix diff =
            a.left_mult_matrix(a.basis_element(i)) - a.right_mult_matrix(a.basis_element(i));
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) stacked.at(i * n + r, c) = diff.at(r, c);
    }
    return kernel(stacked);
}

Element x_element(const CellularAlgebra& ca, const DualBasis& d, std::size_t lambda,
                  std::size_t t) {
    const Algebra& a = ca.algebra();
    const CellDatum& cd = ca.datum();
    Element out = Element::zero(a.dim(), a.field());
    for (std::size_t s = 0; s < cd.m_size(lambda); ++s)
        out += a.multiply(a.basis_element(cd.index(lambda, s, t)),
                          d.element(cd.index(lambda, s, t)));
    return out;
}

Element x_element_flipped(const CellularAlgebra& ca, const DualBasis& d,
                          std::size_t lambda, std::size_t s) {
    const Algebra& a = ca.algebra();
    const CellDatum& cd = ca.datum();
    Element out = Element::zero(a.dim(), a.field());
    for (std::size_t t = 0; t < cd.m_size(lambda); ++t)
        out += a.multiply(d.element(cd.index(lambda, s, t)),
                          a.basis_element(cd.index(lambda, s, t)));
    return out;
}

Element compute_x_lambda(const CellularAlgebra& ca, const DualBasis& d,
                         std::size_t lambda) {
    const Element x0 = x_element(ca, d, lambda, 0);
    for (std::size_t t = 1; t < ca.datum().m_size(lambda); ++t)
        if (x_element(ca, d, lambda, t) != x0)
            throw Error("x_lambda depends on the column choice in cell " +
                        ca.datum().poset().labels()[lambda]);
    return x0;
}

Element compute_x_lambda_flipped(const CellularAlgebra& ca, const DualBasis& d,
                                 std::size_t lambda) {
    const Element x0 = x_element_flipped(ca, d, lambda, 0);
    for (std::size_t s = 1; s < ca.datum().m_size(lambda); ++s)
        if (x_element_flipped(ca, d, lambda, s) != x0)
            throw Error("x'_lambda depends on the row choice in cell " +
                        ca.datum().poset().labels()[lambda]);
    return x0;
}

namespace {

Subspace span_of_elements(const std::vector<Element>& elems, std::size_t ambient,
                          FieldId f) {
    Matrix rows(elems.size(), ambient, f);
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = 0; j < ambient; ++j) rows.at(i, j) = elems[i][j];
    return Subspace::from_rows(rows);
}

std::vector<Element> all_x(const CellularAlgebra& ca, const DualBasis& d, bool flipped) {
    std::vector<Element> xs;
    xs.reserve(ca.cell_count());
    for (std::size_t l = 0; l < ca.cell_count(); ++l)
        xs.push_back(flipped ? compute_x_lambda_flipped(ca, d, l)
                             : compute_x_lambda(ca, d, l));
    return xs;
}

} // namespace

Subspace compute_L(const CellularAlgebra& ca, const DualBasis& d) {
    return span_of_elements(all_x(ca, d, false), ca.algebra().dim(), ca.algebra().field());
}

Subspace compute_L_prime(const CellularAlgebra& ca, const DualBasis& d) {
    return span_of_elements(all_x(ca, d, true), ca.algebra().dim(), ca.algebra().field());
}

Subspace compute_higman(const Algebra& a, const DualBasis& d) {
    const std::size_t n = a.dim();
    std::vector<Element> first, second;
    first.reserve(n);
    second.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        const Element mid = a.basis_element(j);
        Element h1 = Element::zero(n, a.field());
        Element h2 = Element::zero(n, a.field());
        for (std::size_t i = 0; i < n; ++i) {
            h1 += a.multiply(a.multiply(d.element(i), mid), a.basis_element(i));
            h2 += a.multiply(a.multiply(a.basis_element(i), mid), d.element(i));
        }
        first.push_back(std::move(h1));
        second.push_back(std::move(h2));
    }
    const Subspace s1 = span_of_elements(first, n, a.field());
    const Subspace s2 = span_of_elements(second, n, a.field());
    if (s1 != s2)
        throw HigmanFormsDisagree("the two Higman expressions span different subspaces (" +
                                  std::to_string(s1.dim()) + " vs " +
                                  std::to_string(s2.dim()) + " dims)");
    return s1;
}

CentralStructure compute_central_structure(const CellularAlgebra& ca, const DualBasis& d) {
    const Algebra& a = ca.algebra();
    CentralStructure cs{compute_center(a), compute_higman(a, d), compute_L(ca, d),
                        compute_L_prime(ca, d), all_x(ca, d, false), all_x(ca, d, true)};
    if (!cs.H.leq(cs.L) || !cs.L.leq(cs.Z) || !cs.H.leq(cs.Lprime) || !cs.Lprime.leq(cs.Z))
        throw Error("central-structure containments H <= L,L' <= Z violated");
    for (const auto& x : cs.x)
        if (!cs.Z.contains(x.coeffs())) throw Error("some x_lambda is not central");
    return cs;
}

namespace {

Report verify_ideal_common(const CellularAlgebra& ca, const TraceForm& tau,
                           const std::optional<TraceForm>& alt, bool flipped,
                           const std::string& prefix) {
    const Algebra& a = ca.algebra();
    Report rep;
    const DualBasis d = compute_dual_basis(a, tau);
    const std::vector<Element> xs = all_x(ca, d, flipped);
    const Subspace L = span_of_elements(xs, a.dim(), a.field());
    const Subspace Z = compute_center(a);
    const Subspace H = compute_higman(a, d);

    if (H.leq(L))
        rep.pass(prefix + "/contains-higman",
                 "dim H = " + std::to_string(H.dim()) + ", dim span = " +
                     std::to_string(L.dim()));
    else
        rep.fail(prefix + "/contains-higman");

    if (L.leq(Z))
        rep.pass(prefix + "/inside-center",
                 "dim span = " + std::to_string(L.dim()) + ", dim Z = " +
                     std::to_string(Z.dim()));
    else
        rep.fail(prefix + "/inside-center");

    bool closure_ok = true;
    for (std::size_t r = 0; r < Z.dim() && closure_ok; ++r) {
        const Element z(Z.basis().row(r), a.field());
        for (std::size_t l = 0; l < xs.size() && closure_ok; ++l)
            if (!L.contains(a.multiply(z, xs[l]).coeffs())) {
                rep.fail(prefix + "/ideal-closure",
                         "z (center basis row " + std::to_string(r) + ") times x_" +
                             ca.datum().poset().labels()[l] + " leaves the span");
                closure_ok = false;
            }
    }
    if (closure_ok) rep.pass(prefix + "/ideal-closure");

    if (alt) {
        const DualBasis d2 = compute_dual_basis(a, *alt);
        const Subspace L2 = span_of_elements(all_x(ca, d2, flipped), a.dim(), a.field());
        if (L == L2)
            rep.pass(prefix + "/tau-independent");
        else
            rep.fail(prefix + "/tau-independent",
                     "spans differ: dims " + std::to_string(L.dim()) + " vs " +
                         std::to_string(L2.dim()));
        if (!flipped) {
            const Subspace H2 = compute_higman(a, d2);
            if (H == H2)
                rep.pass("higman/tau-independent");
            else
                rep.fail("higman/tau-independent");
        }
    } else {
        rep.na(prefix + "/tau-independent", "no alternative trace available");
        if (!flipped) rep.na("higman/tau-independent", "no alternative trace available");
    }

    const std::vector<std::size_t> l0 = ca.lambda0();
    if (L.dim() >= l0.size())
        rep.pass(prefix + "/dim-lower-bound",
                 "dim = " + std::to_string(L.dim()) + " >= |Lambda_0| = " +
                     std::to_string(l0.size()));
    else
        rep.fail(prefix + "/dim-lower-bound",
                 "dim = " + std::to_string(L.dim()) + " < |Lambda_0| = " +
                     std::to_string(l0.size()));

    std::vector<Element> x0;
    for (std::size_t l : l0) x0.push_back(xs[l]);
    const Subspace span0 = span_of_elements(x0, a.dim(), a.field());
    if (span0.dim() == l0.size())
        rep.pass(prefix + "/x-independent-on-lambda0");
    else
        rep.fail(prefix + "/x-independent-on-lambda0",
                 "rank " + std::to_string(span0.dim()) + " < " +
                     std::to_string(l0.size()));
    return rep;
}

} // namespace

Report verify_center_ideal(const CellularAlgebra& ca, const TraceForm& tau,
                           const std::optional<TraceForm>& alt) {
    return verify_ideal_common(ca, tau, alt, false, "center-ideal");
}

Report verify_center_ideal_flipped(const CellularAlgebra& ca, const TraceForm& tau,
                                   const std::optional<TraceForm>& alt) {
    Report rep = verify_ideal_common(ca, tau, alt, true, "center-ideal-flipped");
    const DualBasis d = compute_dual_basis(ca.algebra(), tau);
    const bool same = compute_L(ca, d) == compute_L_prime(ca, d);
    rep.na("center-ideal-flipped/L-equals-L-prime",
           same ? "the two spans coincide on this input"
                : "the two spans differ on this input");
    return rep;
}

Report verify_x_orthogonality(const CellularAlgebra& ca, const DualBasis& d) {
    const Algebra& a = ca.algebra();
    Report rep;
    const std::vector<Element> xs = all_x(ca, d, false);
    bool ok = true;
    for (std::size_t l = 0; l < xs.size(); ++l)
        for (std::size_t m = 0; m < xs.size(); ++m) {
            if (l == m) continue;
            if (!a.multiply(xs[l], xs[m]).is_zero()) {
                rep.fail("x-orthogonality",
                         "x_" + ca.datum().poset().labels()[l] + " * x_" +
                             ca.datum().poset().labels()[m] + " != 0");
                ok = false;
            }
        }
    if (ok) rep.pass("x-orthogonality");
    return rep;
}

bool SchurData::all_defined_nonzero() const {
    for (const auto& c : cells)
        if (!c.defined || c.c.is_zero()) return false;
    return true;
}

SchurData schur_elements(const CellularAlgebra& ca, const TraceForm& tau,
                         const DualBasis& d) {
    const Algebra& a = ca.algebra();
    (void)tau;
    SchurData data;
    for (std::size_t l = 0; l < ca.cell_count(); ++l) {
        const CellModule& w = ca.module(l);
        SchurData::Cell cell;
        cell.n = w.size();
        cell.character.reserve(a.dim());
        for (std::size_t i = 0; i < a.dim(); ++i)
            cell.character.push_back(w.character_basis(i));

        Scalar char_sum = Scalar::zero(a.field());
        for (std::size_t i = 0; i < a.dim(); ++i) {
            if (cell.character[i].is_zero()) continue;
            char_sum += cell.character[i] * w.character(d.element(i));
        }
        const Scalar n_scalar = Scalar::of_int(static_cast<long>(cell.n), a.field());
        const Element x = compute_x_lambda(ca, d, l);

        if (!n_scalar.is_zero()) {
            cell.c = char_sum / n_scalar;
            cell.defined = true;
            if (!x.is_zero()) {
                const Element x2 = a.multiply(x, x);
                if (x2 != x.scaled(cell.c))
                    throw SchurCrossCheckFailed(
                        "character sum and x^2 = c x disagree on cell " +
                        ca.datum().poset().labels()[l]);
            }
        } else if (!x.is_zero()) {
            // |M(lambda)| vanishes in this field; extract c from the relation.
            const Element x2 = a.multiply(x, x);
            std::size_t k = 0;
            while (x[k].is_zero()) ++k;
            cell.c = x2[k] / x[k];
            cell.defined = true;
            if (x2 != x.scaled(cell.c))
                throw SchurCrossCheckFailed("x^2 is not a scalar multiple of x on cell " +
                                            ca.datum().poset().labels()[l]);
        } else {
            cell.c = Scalar::zero(a.field());
            cell.defined = false;
        }
        data.cells.push_back(std::move(cell));
    }
    return data;
}

std::vector<Element> primitive_idempotents(const CellularAlgebra& ca, const TraceForm& tau,
                                           const DualBasis& d) {
    const Algebra& a = ca.algebra();
    const SchurData schur = schur_elements(ca, tau, d);
    for (std::size_t l = 0; l < schur.cells.size(); ++l)
        if (!schur.cells[l].defined || schur.cells[l].c.is_zero())
            throw NotSemisimple("Schur element of cell " + ca.datum().poset().labels()[l] +
                                " vanishes");
    std::vector<Element> es;
    es.reserve(ca.cell_count());
    for (std::size_t l = 0; l < ca.cell_count(); ++l) {
        const Scalar cinv = schur.cells[l].c.inverse();
        const Element e = compute_x_lambda(ca, d, l).scaled(cinv);
        // Character-sum expression for the same idempotent.
        Element via_chi = Element::zero(a.dim(), a.field());
        for (std::size_t i = 0; i < a.dim(); ++i) {
            const Scalar chi = schur.cells[l].character[i];
            if (!chi.is_zero()) via_chi += d.element(i).scaled(chi);
        }
        if (via_chi.scaled(cinv) != e)
            throw Error("character-sum idempotent differs from c^{-1} x_lambda on cell " +
                        ca.datum().poset().labels()[l]);
        es.push_back(e);
    }
    Element sum = Element::zero(a.dim(), a.field());
    for (std::size_t l = 0; l < es.size(); ++l) {
        if (a.multiply(es[l], es[l]) != es[l])
            throw Error("idempotent relation e^2 = e fails on cell " +
                        ca.datum().poset().labels()[l]);
        for (std::size_t m = 0; m < es.size(); ++m)
            if (l != m && !a.multiply(es[l], es[m]).is_zero())
                throw Error("idempotents of cells " + ca.datum().poset().labels()[l] +
                            " and " + ca.datum().poset().labels()[m] +
                            " are not orthogonal");
        sum += es[l];
    }
    if (sum != a.one()) throw Error("idempotents do not sum to the identity");
    return es;
}

Report integrality_check(const CellularAlgebra& ca, const TraceForm& tau,
                         const DualBasis& d, const std::vector<Scalar>& coeffs) {
    const Algebra& a = ca.algebra();
    if (coeffs.size() != ca.cell_count())
        throw DimensionMismatch("one coefficient per cell required");
    Report rep;
    const SchurData schur = schur_elements(ca, tau, d);
    const std::vector<Element> xs = all_x(ca, d, false);

    bool trace_ok = true;
    for (std::size_t l = 0; l < xs.size(); ++l) {
        const Scalar expected =
            Scalar::of_int(static_cast<long>(ca.datum().m_size(l)), a.field());
        if (tau(xs[l]) != expected) {
            rep.fail("integrality/trace-of-x",
                     "tau(x_" + ca.datum().poset().labels()[l] + ") = " +
                         tau(xs[l]).str() + " != |M| = " + expected.str());
            trace_ok = false;
        }
    }
    if (trace_ok)
        rep.pass("integrality/trace-of-x", "tau(x_lambda) = |M(lambda)| for every cell");

    Element elem = Element::zero(a.dim(), a.field());
    for (std::size_t l = 0; l < xs.size(); ++l)
        if (!coeffs[l].is_zero()) elem += xs[l].scaled(coeffs[l]);

    bool product_ok = true;
    for (std::size_t l = 0; l < xs.size(); ++l) {
        if (!schur.cells[l].defined) continue;
        const Scalar lhs = tau(a.multiply(elem, xs[l]));
        const Scalar rhs = coeffs[l] * schur.cells[l].c * tau(xs[l]);
        if (lhs != rhs) {
            rep.fail("integrality/product-trace",
                     "tau(a x_lambda) != a_lambda c_lambda tau(x_lambda) on cell " +
                         ca.datum().poset().labels()[l]);
            product_ok = false;
        }
    }
    if (product_ok)
        rep.pass("integrality/product-trace",
                 "tau(a x_lambda) = a_lambda c_lambda tau(x_lambda) for every cell");

    for (std::size_t l = 0; l < xs.size(); ++l) {
        const std::string name = "integrality/in-ring/" + ca.datum().poset().labels()[l];
        if (!a.field().is_rational()) {
            rep.na(name, "membership is trivial over a prime field");
            continue;
        }
        if (!schur.cells[l].defined) {
            rep.na(name, "Schur element undefined");
            continue;
        }
        const Scalar value = coeffs[l] * schur.cells[l].c *
                             Scalar::of_int(static_cast<long>(schur.cells[l].n), a.field());
        if (value.is_integer())
            rep.pass(name, "a_lambda c_lambda n_lambda = " + value.str());
        else
            rep.fail(name, "a_lambda c_lambda n_lambda = " + value.str() +
                               " is not an integer");
    }
    return rep;
}

bool check_semisimple(const CellularAlgebra& ca, const TraceForm& tau, const DualBasis& d) {
    bool gram_route = true;
    for (std::size_t l = 0; l < ca.cell_count(); ++l) {
        const Matrix& g = ca.module(l).gram();
        if (rref(g).rank != g.rows()) gram_route = false;
    }
    if (gram_route && ca.lambda0().size() != ca.cell_count()) gram_route = false;

    const SchurData schur = schur_elements(ca, tau, d);
    const bool schur_route = schur.all_defined_nonzero();
    if (gram_route != schur_route)
        throw SemisimpleCriteriaDisagree(
            std::string("Gram criterion says ") + (gram_route ? "semisimple" : "not") +
            ", Schur criterion says " + (schur_route ? "semisimple" : "not"));
    return gram_route;
}

} // namespace cellalg
