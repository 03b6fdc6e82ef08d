#include "cellalg/builders.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace cellalg {

namespace {

std::string num(std::size_t k) { return std::to_string(k); }

// Tries the given cover orientation first and its reverse second; the
// orientation accepted by verify_cell_datum wins.
CellDatum pick_cell_order(const Algebra& alg, std::vector<std::vector<std::string>> m_labels,
                          std::vector<std::vector<std::vector<std::size_t>>> index,
                          std::vector<std::string> cell_labels,
                          std::vector<std::pair<std::size_t, std::size_t>> covers) {
    CellDatum forward(Poset(cell_labels, covers), m_labels, index);
    if (verify_cell_datum(alg, forward).all_pass()) return forward;
    for (auto& [lo, hi] : covers) std::swap(lo, hi);
    CellDatum backward(Poset(std::move(cell_labels), covers), std::move(m_labels),
                       std::move(index));
    if (verify_cell_datum(alg, backward).all_pass()) return backward;
    throw NotCellular("neither cell-order orientation passes verification");
}

} // namespace

BuiltAlgebra build_quiver_zigzag(std::size_t n, FieldId field) {
    if (n < 2) throw ValidationError("quiver-zigzag requires n >= 2");
    const std::size_t dim = 4 * n - 2;
    // Layout: e_0..e_{n-1}, a_0..a_{n-2} (right arrows), a'_0..a'_{n-2}
    // (left arrows), l_0..l_{n-1} (one loop per vertex).
    const auto e = [&](std::size_t k) { return k; };
    const auto ar = [&](std::size_t i) { return n + i; };
    const auto al = [&](std::size_t i) { return 2 * n - 1 + i; };
    const auto lo = [&](std::size_t k) { return 3 * n - 2 + k; };

    std::vector<std::string> labels(dim);
    for (std::size_t k = 0; k < n; ++k) labels[e(k)] = "e" + num(k + 1);
    for (std::size_t i = 0; i + 1 < n; ++i) labels[ar(i)] = "a" + num(i + 1);
    for (std::size_t i = 0; i + 1 < n; ++i) labels[al(i)] = "a" + num(i + 1) + "'";
    for (std::size_t k = 0; k < n; ++k) labels[lo(k)] = "l" + num(k + 1);

    const Scalar one = Scalar::one(field);
    StructureConstants sc(dim, field);
    // Paths compose left to right; a_i runs i -> i+1, a'_i runs i+1 -> i,
    // l_k is the loop at k. Surviving products of the quotient:
    for (std::size_t k = 0; k < n; ++k) {
        sc.set(e(k), e(k), e(k), one);
        sc.set(e(k), lo(k), lo(k), one);
        sc.set(lo(k), e(k), lo(k), one);
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        sc.set(e(i), ar(i), ar(i), one);
        sc.set(ar(i), e(i + 1), ar(i), one);
        sc.set(e(i + 1), al(i), al(i), one);
        sc.set(al(i), e(i), al(i), one);
        sc.set(ar(i), al(i), lo(i), one);     // loop at i
        sc.set(al(i), ar(i), lo(i + 1), one); // the identified loop at i+1
    }

    Element identity = Element::zero(dim, field);
    for (std::size_t k = 0; k < n; ++k) identity[e(k)] = one;

    std::vector<std::size_t> invol(dim);
    for (std::size_t b = 0; b < dim; ++b) invol[b] = b;
    for (std::size_t i = 0; i + 1 < n; ++i) std::swap(invol[ar(i)], invol[al(i)]);

    Algebra alg(std::move(labels), std::move(sc), std::move(identity), std::move(invol));

    // Cells: {e_1}; then [[l_c, a_c],[a'_c, e_{c+1}]] per arrow pair; then
    // the remaining loop at the last vertex.
    std::vector<std::string> cell_labels;
    std::vector<std::vector<std::string>> m_labels;
    std::vector<std::vector<std::vector<std::size_t>>> index;
    cell_labels.push_back("L1");
    m_labels.push_back({"1"});
    index.push_back({{e(0)}});
    for (std::size_t c = 1; c < n; ++c) {
        cell_labels.push_back("L" + num(c + 1));
        m_labels.push_back({"1", "2"});
        index.push_back({{lo(c - 1), ar(c - 1)}, {al(c - 1), e(c)}});
    }
    cell_labels.push_back("L" + num(n + 1));
    m_labels.push_back({"1"});
    index.push_back({{lo(n - 1)}});

    std::vector<std::pair<std::size_t, std::size_t>> covers;
    for (std::size_t c = 0; c < n; ++c) covers.emplace_back(c + 1, c);

    CellDatum cd = pick_cell_order(alg, std::move(m_labels), std::move(index),
                                   std::move(cell_labels), std::move(covers));

    std::vector<Scalar> tau(dim, Scalar::zero(field));
    for (std::size_t k = 0; k < n; ++k) {
        tau[e(k)] = one;
        tau[lo(k)] = one;
    }
    return BuiltAlgebra{std::move(alg), std::move(cd), TraceForm(std::move(tau))};
}

BuiltAlgebra build_truncated_poly(std::size_t n, FieldId field) {
    if (n < 1) throw ValidationError("truncated-poly requires n >= 1");
    std::vector<std::string> labels(n);
    for (std::size_t k = 0; k < n; ++k)
        labels[k] = k == 0 ? "1" : (k == 1 ? "x" : "x^" + num(k));
    StructureConstants sc(n, field);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; i + j < n; ++j) sc.set(i, j, i + j, Scalar::one(field));
    Element identity = Element::basis(n, field, 0);
    std::vector<std::size_t> invol(n);
    for (std::size_t b = 0; b < n; ++b) invol[b] = b;
    Algebra alg(std::move(labels), std::move(sc), std::move(identity), std::move(invol));

    std::vector<std::string> cell_labels(n);
    std::vector<std::vector<std::string>> m_labels(n, {"1"});
    std::vector<std::vector<std::vector<std::size_t>>> index(n);
    for (std::size_t k = 0; k < n; ++k) {
        cell_labels[k] = "c" + num(k);
        index[k] = {{k}};
    }
    // Higher powers sit lower in the order.
    std::vector<std::pair<std::size_t, std::size_t>> covers;
    for (std::size_t k = 0; k + 1 < n; ++k) covers.emplace_back(k + 1, k);
    CellDatum cd(Poset(std::move(cell_labels), covers), std::move(m_labels),
                 std::move(index));

    std::vector<Scalar> tau(n, Scalar::zero(field));
    tau[n - 1] = Scalar::one(field);
    return BuiltAlgebra{std::move(alg), std::move(cd), TraceForm(std::move(tau))};
}

BuiltAlgebra build_matrix_blocks(const std::vector<std::size_t>& sizes, FieldId field) {
    if (sizes.empty()) throw ValidationError("matrix-blocks requires at least one block");
    for (std::size_t s : sizes)
        if (s == 0) throw ValidationError("matrix-blocks block sizes must be positive");
    std::size_t dim = 0;
    std::vector<std::size_t> offset(sizes.size());
    for (std::size_t b = 0; b < sizes.size(); ++b) {
        offset[b] = dim;
        dim += sizes[b] * sizes[b];
    }
    const auto unit = [&](std::size_t b, std::size_t i, std::size_t j) {
        return offset[b] + i * sizes[b] + j;
    };

    std::vector<std::string> labels(dim);
    for (std::size_t b = 0; b < sizes.size(); ++b)
        for (std::size_t i = 0; i < sizes[b]; ++i)
            for (std::size_t j = 0; j < sizes[b]; ++j)
                labels[unit(b, i, j)] =
                    "E" + num(b + 1) + "[" + num(i + 1) + "," + num(j + 1) + "]";

    StructureConstants sc(dim, field);
    for (std::size_t b = 0; b < sizes.size(); ++b)
        for (std::size_t i = 0; i < sizes[b]; ++i)
            for (std::size_t j = 0; j < sizes[b]; ++j)
                for (std::size_t k = 0; k < sizes[b]; ++k)
                    sc.set(unit(b, i, j), unit(b, j, k), unit(b, i, k), Scalar::one(field));

    Element identity = Element::zero(dim, field);
    for (std::size_t b = 0; b < sizes.size(); ++b)
        for (std::size_t i = 0; i < sizes[b]; ++i)
            identity[unit(b, i, i)] = Scalar::one(field);

    std::vector<std::size_t> invol(dim);
    for (std::size_t b = 0; b < sizes.size(); ++b)
        for (std::size_t i = 0; i < sizes[b]; ++i)
            for (std::size_t j = 0; j < sizes[b]; ++j)
                invol[unit(b, i, j)] = unit(b, j, i);

    Algebra alg(std::move(labels), std::move(sc), std::move(identity), std::move(invol));

    std::vector<std::string> cell_labels(sizes.size());
    std::vector<std::vector<std::string>> m_labels(sizes.size());
    std::vector<std::vector<std::vector<std::size_t>>> index(sizes.size());
    for (std::size_t b = 0; b < sizes.size(); ++b) {
        cell_labels[b] = "B" + num(b + 1);
        for (std::size_t i = 0; i < sizes[b]; ++i) m_labels[b].push_back(num(i + 1));
        index[b].assign(sizes[b], std::vector<std::size_t>(sizes[b]));
        for (std::size_t i = 0; i < sizes[b]; ++i)
            for (std::size_t j = 0; j < sizes[b]; ++j) index[b][i][j] = unit(b, i, j);
    }
    CellDatum cd(Poset::antichain(std::move(cell_labels)), std::move(m_labels),
                 std::move(index));

    std::vector<Scalar> tau(dim, Scalar::zero(field));
    for (std::size_t b = 0; b < sizes.size(); ++b)
        for (std::size_t i = 0; i < sizes[b]; ++i)
            tau[unit(b, i, i)] = Scalar::one(field);
    return BuiltAlgebra{std::move(alg), std::move(cd), TraceForm(std::move(tau))};
}

namespace {

// Planar (n,n)-diagram: a non-crossing perfect matching on 2n boundary
// positions, top columns 0..n-1 left to right then bottom columns right to
// left. mate[p] is the partner position.
using Mate = std::vector<int>;

// Matches points[0] to every odd-offset partner, then fills the enclosed
// and remaining segments independently; arcs never cross a chosen chord.
void enumerate_matchings(const std::vector<int>& points, Mate& mate,
                         const std::function<void()>& emit) {
    if (points.empty()) {
        emit();
        return;
    }
    const int a = points[0];
    for (std::size_t k = 1; k < points.size(); k += 2) {
        const int b = points[k];
        mate[static_cast<std::size_t>(a)] = b;
        mate[static_cast<std::size_t>(b)] = a;
        const std::vector<int> inner(points.begin() + 1,
                                     points.begin() + static_cast<long>(k));
        const std::vector<int> outer(points.begin() + static_cast<long>(k) + 1,
                                     points.end());
        enumerate_matchings(inner, mate,
                            [&] { enumerate_matchings(outer, mate, emit); });
    }
}

std::vector<Mate> all_planar_diagrams(std::size_t n) {
    std::vector<int> points(2 * n);
    for (std::size_t p = 0; p < 2 * n; ++p) points[p] = static_cast<int>(p);
    Mate mate(2 * n, -1);
    std::vector<Mate> out;
    enumerate_matchings(points, mate, [&] { out.push_back(mate); });
    return out;
}

int bottom_pos(std::size_t n, int col) { return static_cast<int>(2 * n) - 1 - col; }

// Stacks d1 above d2, follows strands through the glued middle row and
// counts closed middle loops.
std::pair<Mate, int> concat_diagrams(const Mate& m1, const Mate& m2, std::size_t n) {
    const int N = static_cast<int>(n);
    // Nodes: 0..n-1 result-top, n..2n-1 middle, 2n..3n-1 result-bottom.
    const auto node1 = [&](int p) { return p < N ? p : N + (2 * N - 1 - p); };
    const auto node2 = [&](int p) { return p < N ? N + p : 2 * N + (2 * N - 1 - p); };
    std::vector<int> adj1(3 * n, -1), adj2(3 * n, -1);
    for (int p = 0; p < 2 * N; ++p) {
        adj1[static_cast<std::size_t>(node1(p))] = node1(m1[static_cast<std::size_t>(p)]);
        adj2[static_cast<std::size_t>(node2(p))] = node2(m2[static_cast<std::size_t>(p)]);
    }
    std::vector<bool> visited(3 * n, false);
    Mate result(2 * n, -1);
    const auto node_to_pos = [&](int v) { return v < N ? v : 2 * N - 1 - (v - 2 * N); };
    for (int start = 0; start < 3 * N; ++start) {
        if (start >= N && start < 2 * N) continue; // endpoints only
        if (visited[static_cast<std::size_t>(start)]) continue;
        visited[static_cast<std::size_t>(start)] = true;
        int cur = start;
        int use = start < N ? 1 : 2;
        while (true) {
            const int nxt = (use == 1 ? adj1 : adj2)[static_cast<std::size_t>(cur)];
            visited[static_cast<std::size_t>(nxt)] = true;
            if (nxt < N || nxt >= 2 * N) {
                const int p = node_to_pos(start);
                const int q = node_to_pos(nxt);
                result[static_cast<std::size_t>(p)] = q;
                result[static_cast<std::size_t>(q)] = p;
                break;
            }
            cur = nxt;
            use = 3 - use;
        }
    }
    int loops = 0;
    for (int v = N; v < 2 * N; ++v) {
        if (visited[static_cast<std::size_t>(v)]) continue;
        ++loops;
        int cur = v;
        int use = 1;
        do {
            const int nxt = (use == 1 ? adj1 : adj2)[static_cast<std::size_t>(cur)];
            visited[static_cast<std::size_t>(nxt)] = true;
            cur = nxt;
            use = 3 - use;
        } while (cur != v);
    }
    return {std::move(result), loops};
}

// Loop count of the closure: join top column c to bottom column c.
int closure_loops(const Mate& m, std::size_t n) {
    const int N = static_cast<int>(n);
    std::vector<bool> visited(2 * n, false);
    int loops = 0;
    for (int p = 0; p < 2 * N; ++p) {
        if (visited[static_cast<std::size_t>(p)]) continue;
        ++loops;
        int cur = p;
        bool via_mate = true;
        do {
            visited[static_cast<std::size_t>(cur)] = true;
            if (via_mate) {
                cur = m[static_cast<std::size_t>(cur)];
            } else {
                cur = cur < N ? bottom_pos(n, cur) : 2 * N - 1 - cur;
            }
            via_mate = !via_mate;
        } while (cur != p || !via_mate);
    }
    return loops;
}

// Half-diagram on one row: partner column or -1 for a through strand.
using Half = std::vector<int>;

Half top_half(const Mate& m, std::size_t n) {
    Half h(n, -1);
    for (std::size_t c = 0; c < n; ++c)
        if (m[c] < static_cast<int>(n)) h[c] = m[c];
    return h;
}

Half bottom_half(const Mate& m, std::size_t n) {
    Half h(n, -1);
    for (std::size_t c = 0; c < n; ++c) {
        const int q = m[static_cast<std::size_t>(bottom_pos(n, static_cast<int>(c)))];
        if (q >= static_cast<int>(n)) h[c] = 2 * static_cast<int>(n) - 1 - q;
    }
    return h;
}

std::size_t through_count(const Half& h) {
    return static_cast<std::size_t>(std::count(h.begin(), h.end(), -1));
}

std::string half_label(const Half& h) {
    std::string arcs, thru;
    for (std::size_t c = 0; c < h.size(); ++c) {
        if (h[c] == -1) {
            if (!thru.empty()) thru += " ";
            thru += num(c);
        } else if (h[c] > static_cast<int>(c)) {
            arcs += "(" + num(c) + "-" + num(static_cast<std::size_t>(h[c])) + ")";
        }
    }
    return arcs + (thru.empty() ? "" : "|" + thru);
}

std::string diagram_label(const Mate& m, std::size_t n) {
    const auto name = [&](int p) {
        return p < static_cast<int>(n) ? "t" + num(static_cast<std::size_t>(p))
                                       : "b" + num(static_cast<std::size_t>(
                                                   2 * static_cast<int>(n) - 1 - p));
    };
    std::string out;
    for (int p = 0; p < static_cast<int>(2 * n); ++p)
        if (m[static_cast<std::size_t>(p)] > p)
            out += "[" + name(p) + "-" + name(m[static_cast<std::size_t>(p)]) + "]";
    return out;
}

Mate assemble(const Half& top, const Half& bottom, std::size_t n) {
    Mate m(2 * n, -1);
    std::vector<int> tdef, bdef;
    for (std::size_t c = 0; c < n; ++c) {
        if (top[c] == -1)
            tdef.push_back(static_cast<int>(c));
        else
            m[c] = top[c];
        if (bottom[c] == -1)
            bdef.push_back(static_cast<int>(c));
        else
            m[static_cast<std::size_t>(bottom_pos(n, static_cast<int>(c)))] =
                bottom_pos(n, bottom[c]);
    }
    for (std::size_t s = 0; s < tdef.size(); ++s) {
        const int p = tdef[s];
        const int q = bottom_pos(n, bdef[s]);
        m[static_cast<std::size_t>(p)] = q;
        m[static_cast<std::size_t>(q)] = p;
    }
    return m;
}

} // namespace

BuiltAlgebra build_temperley_lieb(std::size_t n, const Scalar& delta, FieldId field) {
    if (n < 1) throw ValidationError("temperley-lieb requires n >= 1");
    if (delta.field() != field)
        throw ValidationError("delta does not belong to the requested field");
    if (delta.is_zero()) throw ValidationError("temperley-lieb requires delta != 0");

    const std::vector<Mate> diagrams = all_planar_diagrams(n);
    std::map<Mate, std::size_t> diagram_index;
    for (std::size_t i = 0; i < diagrams.size(); ++i) diagram_index[diagrams[i]] = i;
    const std::size_t dim = diagrams.size();

    std::vector<std::string> labels(dim);
    for (std::size_t i = 0; i < dim; ++i) labels[i] = diagram_label(diagrams[i], n);

    StructureConstants sc(dim, field);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            const auto [mate, loops] = concat_diagrams(diagrams[i], diagrams[j], n);
            sc.set(i, j, diagram_index.at(mate), delta.pow(loops));
        }

    Mate id_mate(2 * n);
    for (std::size_t c = 0; c < n; ++c) {
        id_mate[c] = bottom_pos(n, static_cast<int>(c));
        id_mate[static_cast<std::size_t>(bottom_pos(n, static_cast<int>(c)))] =
            static_cast<int>(c);
    }
    Element identity = Element::basis(dim, field, diagram_index.at(id_mate));

    std::vector<std::size_t> invol(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        Mate flipped(2 * n);
        for (std::size_t p = 0; p < 2 * n; ++p)
            flipped[2 * n - 1 - p] =
                static_cast<int>(2 * n) - 1 - diagrams[i][p];
        invol[i] = diagram_index.at(flipped);
    }

    Algebra alg(std::move(labels), std::move(sc), std::move(identity), std::move(invol));

    // Cells by through-strand count, more strands higher; M(lambda) is the
    // sorted list of half-diagrams occurring with that count.
    std::map<std::size_t, std::vector<Half>, std::greater<>> halves_by_t;
    for (const auto& m : diagrams) {
        for (const Half& h : {top_half(m, n), bottom_half(m, n)}) {
            auto& list = halves_by_t[through_count(h)];
            if (std::find(list.begin(), list.end(), h) == list.end()) list.push_back(h);
        }
    }
    std::vector<std::string> cell_labels;
    std::vector<std::vector<std::string>> m_labels;
    std::vector<std::vector<std::vector<std::size_t>>> index;
    for (auto& [t, halves] : halves_by_t) {
        std::sort(halves.begin(), halves.end());
        cell_labels.push_back("t" + num(t));
        std::vector<std::string> ml;
        for (const Half& h : halves) ml.push_back(half_label(h));
        m_labels.push_back(std::move(ml));
        std::vector<std::vector<std::size_t>> idx(halves.size(),
                                                  std::vector<std::size_t>(halves.size()));
        for (std::size_t s = 0; s < halves.size(); ++s)
            for (std::size_t t2 = 0; t2 < halves.size(); ++t2)
                idx[s][t2] = diagram_index.at(assemble(halves[s], halves[t2], n));
        index.push_back(std::move(idx));
    }
    std::vector<std::pair<std::size_t, std::size_t>> covers;
    for (std::size_t c = 0; c + 1 < cell_labels.size(); ++c) covers.emplace_back(c + 1, c);
    CellDatum cd(Poset(std::move(cell_labels), covers), std::move(m_labels),
                 std::move(index));

    std::vector<Scalar> tau;
    tau.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i)
        tau.push_back(delta.pow(closure_loops(diagrams[i], n) - static_cast<int>(n)));
    TraceForm trace(std::move(tau));

    if (rref(trace_gram(alg, trace)).rank != dim)
        throw DegenerateTrace("Markov trace is degenerate at delta = " + delta.str());
    return BuiltAlgebra{std::move(alg), std::move(cd), std::move(trace)};
}

BuiltAlgebra build_family(const BuilderParams& params) {
    if (params.family == "quiver-zigzag") return build_quiver_zigzag(params.n, params.field);
    if (params.family == "truncated-poly")
        return build_truncated_poly(params.n, params.field);
    if (params.family == "matrix-blocks")
        return build_matrix_blocks(params.blocks, params.field);
    if (params.family == "temperley-lieb") {
        if (params.delta.empty())
            throw ValidationError("temperley-lieb requires --delta");
        return build_temperley_lieb(params.n, Scalar::parse(params.delta, params.field),
                                    params.field);
    }
    throw ValidationError("unknown family: " + params.family);
}

} // namespace cellalg
