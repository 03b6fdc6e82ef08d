#include "cellalg/cellular.hpp"

#include <algorithm>

namespace cellalg {

Poset::Poset(std::vector<std::string> labels,
             const std::vector<std::pair<std::size_t, std::size_t>>& covers)
    : labels_(std::move(labels)), size_(labels_.size()), leq_(size_ * size_, false) {
    for (std::size_t i = 0; i < size_; ++i) leq_[i * size_ + i] = true;
    for (const auto& [lo, hi] : covers) {
        if (lo >= size_ || hi >= size_) throw ValidationError("poset cover out of range");
        if (lo == hi) throw ValidationError("poset cover relates an element to itself");
        leq_[lo * size_ + hi] = true;
    }
    // Warshall closure.
    for (std::size_t k = 0; k < size_; ++k)
        for (std::size_t i = 0; i < size_; ++i)
            if (leq_[i * size_ + k])
                for (std::size_t j = 0; j < size_; ++j)
                    if (leq_[k * size_ + j]) leq_[i * size_ + j] = true;
    for (std::size_t i = 0; i < size_; ++i)
        for (std::size_t j = i + 1; j < size_; ++j)
            if (leq_[i * size_ + j] && leq_[j * size_ + i])
                throw ValidationError("poset relation has a cycle through " + labels_[i] +
                                      " and " + labels_[j]);
}

Poset Poset::antichain(std::vector<std::string> labels) {
    return Poset(std::move(labels), {});
}

std::vector<std::pair<std::size_t, std::size_t>> Poset::covers() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t a = 0; a < size_; ++a)
        for (std::size_t b = 0; b < size_; ++b) {
            if (!less(a, b)) continue;
            bool direct = true;
            for (std::size_t c = 0; c < size_ && direct; ++c)
                if (less(a, c) && less(c, b)) direct = false;
            if (direct) out.emplace_back(a, b);
        }
    return out;
}

CellDatum::CellDatum(Poset poset, std::vector<std::vector<std::string>> m_labels,
                     std::vector<std::vector<std::vector<std::size_t>>> index)
    : poset_(std::move(poset)), m_labels_(std::move(m_labels)), index_(std::move(index)) {
    const std::size_t cells = poset_.size();
    if (m_labels_.size() != cells || index_.size() != cells)
        throw ValidationError("cell tables do not match the poset size");
    std::size_t dim = 0;
    for (std::size_t l = 0; l < cells; ++l) {
        const std::size_t m = m_labels_[l].size();
        if (m == 0)
            throw ValidationError("cell " + poset_.labels()[l] + " has an empty M set");
        dim += m * m;
    }
    cell_of_.assign(dim, CellIndex{});
    std::vector<bool> seen(dim, false);
    for (std::size_t l = 0; l < cells; ++l) {
        const std::size_t m = m_labels_[l].size();
        if (index_[l].size() != m)
            throw ValidationError("index table of cell " + poset_.labels()[l] +
                                  " has wrong row count");
        for (std::size_t s = 0; s < m; ++s) {
            if (index_[l][s].size() != m)
                throw ValidationError("index table of cell " + poset_.labels()[l] +
                                      " is not square");
            for (std::size_t t = 0; t < m; ++t) {
                const std::size_t b = index_[l][s][t];
                if (b >= dim)
                    throw ValidationError(
                        "cell index exceeds the dimension implied by sum |M|^2 (" +
                        std::to_string(dim) + ")");
                if (seen[b])
                    throw ValidationError("basis index " + std::to_string(b) +
                                          " appears twice in the cell tables");
                seen[b] = true;
                cell_of_[b] = CellIndex{l, s, t};
            }
        }
    }
}

Report verify_cell_datum(const Algebra& a, const CellDatum& cd) {
    Report rep;
    if (a.dim() != cd.dim()) {
        rep.fail("cellularity/dimension", "sum |M(lambda)|^2 = " + std::to_string(cd.dim()) +
                                              " != dim = " + std::to_string(a.dim()));
        return rep;
    }

    const auto& poset = cd.poset();
    const auto cell_name = [&](std::size_t l) { return poset.labels()[l]; };

    // (C2) on indices: the involution permutation transposes every cell.
    bool invol_ok = true;
    for (std::size_t b = 0; b < a.dim(); ++b) {
        const CellIndex& ci = cd.cell_of(b);
        const std::size_t expected = cd.index(ci.lambda, ci.col, ci.row);
        if (a.involution_perm()[b] != expected) {
            rep.fail("cellularity/involution-transposes-cells",
                     "basis " + a.labels()[b] + " in cell " + cell_name(ci.lambda) +
                         " maps to index " + std::to_string(a.involution_perm()[b]) +
                         ", expected " + std::to_string(expected));
            invol_ok = false;
        }
    }
    if (invol_ok) rep.pass("cellularity/involution-transposes-cells");

    // (C3): for every basis element a_i and cell entry C_{S,T}, the product
    // a_i C_{S,T} may touch column T of the same cell and anything strictly
    // lower; the same-cell coefficients must not depend on T.
    bool support_ok = true;
    bool indep_ok = true;
    bool twisted_ok = true;
    for (std::size_t l = 0; l < cd.cell_count(); ++l) {
        const std::size_t m = cd.m_size(l);
        for (std::size_t i = 0; i < a.dim(); ++i) {
            // Coefficient grid r_t[s'][s] at column t; must agree for all t.
            Matrix r0(m, m, a.field());
            for (std::size_t t = 0; t < m; ++t) {
                Matrix rt(m, m, a.field());
                for (std::size_t s = 0; s < m; ++s) {
                    const Element prod =
                        a.multiply(a.basis_element(i), a.basis_element(cd.index(l, s, t)));
                    for (std::size_t b = 0; b < a.dim(); ++b) {
                        if (prod[b].is_zero()) continue;
                        const CellIndex& ci = cd.cell_of(b);
                        if (poset.less(ci.lambda, l)) continue;
                        if (ci.lambda == l && ci.col == t) {
                            rt.at(ci.row, s) = prod[b];
                            continue;
                        }
                        rep.fail("cellularity/lower-terms",
                                 "a=" + a.labels()[i] + " times C(" + cell_name(l) + "," +
                                     std::to_string(s) + "," + std::to_string(t) +
                                     ") has support on " + a.labels()[b] + " in cell " +
                                     cell_name(ci.lambda) + " which is not < " +
                                     cell_name(l) + (ci.lambda == l ? " (column mismatch)"
                                                                    : ""));
                        support_ok = false;
                    }
                }
                if (t == 0) {
                    r0 = rt;
                } else if (rt != r0) {
                    rep.fail("cellularity/r-independent-of-T",
                             "cell " + cell_name(l) + ", a=" + a.labels()[i] +
                                 ": coefficients at T=" + std::to_string(t) +
                                 " differ from T=0");
                    indep_ok = false;
                }
            }
            // Involution-twisted condition: C_{T,S} i(a_i) carries the same
            // coefficients r0[s'][s] on row T of cell l, modulo lower cells.
            const Element ia = a.involution(a.basis_element(i));
            for (std::size_t s = 0; s < m; ++s) {
                for (std::size_t t = 0; t < m; ++t) {
                    const Element prod =
                        a.multiply(a.basis_element(cd.index(l, t, s)), ia);
                    for (std::size_t b = 0; b < a.dim(); ++b) {
                        if (prod[b].is_zero()) continue;
                        const CellIndex& ci = cd.cell_of(b);
                        if (poset.less(ci.lambda, l)) continue;
                        if (ci.lambda == l && ci.row == t) continue;
                        rep.fail("cellularity/involution-twisted",
                                 "C(" + cell_name(l) + "," + std::to_string(t) + "," +
                                     std::to_string(s) + ") times i(" + a.labels()[i] +
                                     ") has support on " + a.labels()[b] +
                                     " outside row T and lower cells");
                        twisted_ok = false;
                    }
                    for (std::size_t sp = 0; sp < m; ++sp) {
                        const Scalar got = prod[cd.index(l, t, sp)];
                        if (got != r0.at(sp, s)) {
                            rep.fail("cellularity/involution-twisted",
                                     "cell " + cell_name(l) + ", a=" + a.labels()[i] +
                                         ", S=" + std::to_string(s) + ", T=" +
                                         std::to_string(t) + ", S'=" + std::to_string(sp) +
                                         ": " + got.str() + " != " + r0.at(sp, s).str());
                            twisted_ok = false;
                        }
                    }
                }
            }
        }
    }
    if (support_ok) rep.pass("cellularity/lower-terms");
    if (indep_ok) rep.pass("cellularity/r-independent-of-T");
    if (twisted_ok) rep.pass("cellularity/involution-twisted");
    return rep;
}

Scalar CellModule::character_basis(std::size_t basis_index) const {
    const Matrix& m = actions_[basis_index];
    Scalar tr = Scalar::zero(m.field());
    for (std::size_t s = 0; s < m.rows(); ++s) tr += m.at(s, s);
    return tr;
}

Scalar CellModule::character(const Element& x) const {
    Scalar tr = Scalar::zero(x.field());
    for (std::size_t i = 0; i < x.dim(); ++i)
        if (!x[i].is_zero()) tr += x[i] * character_basis(i);
    return tr;
}

namespace {

CellModule extract_module(const Algebra& a, const CellDatum& cd, std::size_t l) {
    const std::size_t m = cd.m_size(l);
    std::vector<Matrix> actions;
    actions.reserve(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        // Verification already established T-independence; read off at T=0.
        Matrix r(m, m, a.field());
        for (std::size_t s = 0; s < m; ++s) {
            const Element prod =
                a.multiply(a.basis_element(i), a.basis_element(cd.index(l, s, 0)));
            for (std::size_t sp = 0; sp < m; ++sp) r.at(sp, s) = prod[cd.index(l, sp, 0)];
        }
        actions.push_back(std::move(r));
    }
    Matrix gram(m, m, a.field());
    for (std::size_t s = 0; s < m; ++s) {
        const Element css = a.basis_element(cd.index(l, s, s));
        for (std::size_t t = 0; t < m; ++t) {
            const Element prod = a.multiply(css, a.basis_element(cd.index(l, t, t)));
            gram.at(s, t) = prod[cd.index(l, s, t)];
        }
    }
    return CellModule(l, std::move(actions), std::move(gram));
}

} // namespace

CellularAlgebra CellularAlgebra::create(Algebra a, CellDatum cd) {
    Report verification = verify_cell_datum(a, cd);
    if (!verification.all_pass()) {
        std::string msg = "cell-datum verification failed";
        for (const auto& e : verification.entries())
            if (e.status == CheckStatus::fail) {
                msg += ": " + e.name + " (" + e.detail + ")";
                break;
            }
        throw NotCellular(msg);
    }
    std::vector<CellModule> modules;
    modules.reserve(cd.cell_count());
    for (std::size_t l = 0; l < cd.cell_count(); ++l)
        modules.push_back(extract_module(a, cd, l));
    return CellularAlgebra(std::move(a), std::move(cd), std::move(verification),
                           std::move(modules));
}

std::size_t CellularAlgebra::rad_dim(std::size_t lambda) const {
    return kernel(modules_[lambda].gram()).dim();
}

std::vector<std::size_t> CellularAlgebra::lambda0() const {
    std::vector<std::size_t> out;
    for (std::size_t l = 0; l < modules_.size(); ++l)
        if (!modules_[l].gram().is_zero()) out.push_back(l);
    return out;
}

Report verify_cell_modules(const CellularAlgebra& ca) {
    const Algebra& a = ca.algebra();
    Report rep;
    bool repr_ok = true;
    bool sym_ok = true;
    for (std::size_t l = 0; l < ca.cell_count(); ++l) {
        const CellModule& w = ca.module(l);
        for (std::size_t i = 0; i < a.dim() && repr_ok; ++i)
            for (std::size_t j = 0; j < a.dim() && repr_ok; ++j) {
                Matrix rhs(w.size(), w.size(), a.field());
                for (const auto& [k, c] : a.sc().product(i, j)) {
                    Matrix term = w.action(k);
                    for (std::size_t s = 0; s < w.size(); ++s)
                        for (std::size_t t = 0; t < w.size(); ++t)
                            rhs.at(s, t) += c * term.at(s, t);
                }
                if (w.action(i) * w.action(j) != rhs) {
                    rep.fail("cell-module/representation",
                             "cell " + ca.datum().poset().labels()[l] + ", pair (" +
                                 a.labels()[i] + "," + a.labels()[j] + ")");
                    repr_ok = false;
                }
            }
        if (w.gram() != w.gram().transpose()) {
            rep.fail("cell-module/gram-symmetric", "cell " + ca.datum().poset().labels()[l]);
            sym_ok = false;
        }
    }
    if (repr_ok) rep.pass("cell-module/representation");
    if (sym_ok) rep.pass("cell-module/gram-symmetric");
    return rep;
}

} // namespace cellalg
