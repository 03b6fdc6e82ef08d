#include <doctest.h>

#include "cellalg/builders.hpp"
#include "cellalg/cellular.hpp"

using namespace cellalg;

namespace {

const FieldId Q = FieldId::rationals();

// Rebuilds the cell datum with every covering relation reversed.
CellDatum reversed_order(const CellDatum& cd) {
    std::vector<std::pair<std::size_t, std::size_t>> covers = cd.poset().covers();
    for (auto& [lo, hi] : covers) std::swap(lo, hi);
    std::vector<std::vector<std::string>> m_labels;
    std::vector<std::vector<std::vector<std::size_t>>> index;
    for (std::size_t l = 0; l < cd.cell_count(); ++l) {
        m_labels.push_back(cd.m_labels(l));
        std::vector<std::vector<std::size_t>> idx(cd.m_size(l),
                                                  std::vector<std::size_t>(cd.m_size(l)));
        for (std::size_t s = 0; s < cd.m_size(l); ++s)
            for (std::size_t t = 0; t < cd.m_size(l); ++t) idx[s][t] = cd.index(l, s, t);
        index.push_back(std::move(idx));
    }
    return CellDatum(Poset(cd.poset().labels(), covers), std::move(m_labels),
                     std::move(index));
}

} // namespace

TEST_CASE("poset construction") {
    Poset chain({"a", "b", "c"}, {{1, 0}, {2, 1}});
    CHECK(chain.leq(2, 0));
    CHECK(chain.less(1, 0));
    CHECK(!chain.leq(0, 2));
    CHECK(chain.leq(1, 1));
    CHECK(chain.covers() == std::vector<std::pair<std::size_t, std::size_t>>{{1, 0}, {2, 1}});

    Poset anti = Poset::antichain({"x", "y"});
    CHECK(!anti.leq(0, 1));
    CHECK(!anti.leq(1, 0));

    CHECK_THROWS_AS(Poset({"a", "b"}, {{0, 1}, {1, 0}}), ValidationError);
    CHECK_THROWS_AS(Poset({"a"}, {{0, 0}}), ValidationError);
}

TEST_CASE("cell datum validation") {
    // Empty M set.
    CHECK_THROWS_AS(CellDatum(Poset::antichain({"c"}), {{}}, {{}}), ValidationError);
    // Index table not square.
    CHECK_THROWS_AS(CellDatum(Poset::antichain({"c"}), {{"1", "2"}}, {{{0, 1}}}),
                    ValidationError);
    // Duplicate basis index.
    CHECK_THROWS_AS(
        CellDatum(Poset::antichain({"c", "d"}), {{"1"}, {"1"}}, {{{0}}, {{0}}}),
        ValidationError);
    // Good singleton pair.
    const CellDatum ok(Poset::antichain({"c", "d"}), {{"1"}, {"1"}}, {{{1}}, {{0}}});
    CHECK(ok.dim() == 2);
    CHECK(ok.cell_of(1).lambda == 0);
}

TEST_CASE("builder cell data verify cleanly") {
    for (const BuiltAlgebra& b :
         {build_quiver_zigzag(4, Q), build_truncated_poly(5, Q),
          build_matrix_blocks({2, 3}, Q),
          build_temperley_lieb(3, Scalar::of_int(3, Q), Q)}) {
        const Report rep = verify_cell_datum(b.algebra, b.datum);
        CHECK(rep.all_pass());
    }
    const FieldId f5 = FieldId::prime_field(5);
    CHECK(verify_cell_datum(build_quiver_zigzag(4, f5).algebra,
                            build_quiver_zigzag(4, f5).datum)
              .all_pass());
}

TEST_CASE("reversing the quiver cell order breaks the lower-terms condition") {
    const BuiltAlgebra b = build_quiver_zigzag(3, Q);
    const CellDatum flipped = reversed_order(b.datum);
    const Report rep = verify_cell_datum(b.algebra, flipped);
    CHECK(!rep.all_pass());
    bool lower_terms_witness = false;
    for (const auto& e : rep.entries())
        if (e.name == "cellularity/lower-terms" && e.status == CheckStatus::fail &&
            !e.detail.empty())
            lower_terms_witness = true;
    CHECK(lower_terms_witness);
    CHECK_THROWS_AS(CellularAlgebra::create(b.algebra, flipped), NotCellular);
}

TEST_CASE("truncated polynomial cells must put higher powers lower") {
    const BuiltAlgebra b = build_truncated_poly(4, Q);
    CHECK(verify_cell_datum(b.algebra, b.datum).all_pass());
    CHECK(!verify_cell_datum(b.algebra, reversed_order(b.datum)).all_pass());
}

TEST_CASE("cell module action matrices form a representation") {
    for (const BuiltAlgebra& b :
         {build_quiver_zigzag(3, Q), build_truncated_poly(4, Q),
          build_matrix_blocks({2, 3}, Q),
          build_temperley_lieb(3, Scalar::of_int(3, Q), Q)}) {
        const CellularAlgebra ca = CellularAlgebra::create(b.algebra, b.datum);
        CHECK(verify_cell_modules(ca).all_pass());
    }
}

TEST_CASE("matrix block Gram forms are identity matrices") {
    const BuiltAlgebra b = build_matrix_blocks({2, 3}, Q);
    const CellularAlgebra ca = CellularAlgebra::create(b.algebra, b.datum);
    for (std::size_t l = 0; l < ca.cell_count(); ++l) {
        CHECK(ca.module(l).gram() == Matrix::identity(ca.datum().m_size(l), Q));
        CHECK(ca.rad_dim(l) == 0);
    }
    CHECK(ca.lambda0().size() == 2);
}

TEST_CASE("lambda0 of the truncated polynomial algebra is a single cell") {
    const BuiltAlgebra b = build_truncated_poly(5, Q);
    const CellularAlgebra ca = CellularAlgebra::create(b.algebra, b.datum);
    const auto l0 = ca.lambda0();
    REQUIRE(l0.size() == 1);
    // The surviving cell is the one holding the constant 1.
    CHECK(ca.datum().poset().labels()[l0[0]] == "c0");
    CHECK(ca.rad_dim(l0[0]) == 0);
    for (std::size_t l = 1; l < ca.cell_count(); ++l) CHECK(ca.rad_dim(l) == 1);
}

TEST_CASE("lambda0 of the zigzag quiver has n elements") {
    const BuiltAlgebra b = build_quiver_zigzag(4, Q);
    const CellularAlgebra ca = CellularAlgebra::create(b.algebra, b.datum);
    CHECK(ca.lambda0().size() == 4);
    // The bottom cell's form vanishes; the inner 2x2 forms are rank one.
    CHECK(ca.module(ca.cell_count() - 1).gram().is_zero());
    for (std::size_t l = 1; l + 1 < ca.cell_count(); ++l) {
        CHECK(rref(ca.module(l).gram()).rank == 1);
        CHECK(ca.rad_dim(l) == 1);
    }
}

TEST_CASE("cell module characters are compatible with involution indexing") {
    const BuiltAlgebra b = build_quiver_zigzag(3, Q);
    const Algebra& a = b.algebra;
    // The involution acts on basis indices exactly as the (S,T) -> (T,S)
    // swap of the cell datum.
    for (std::size_t i = 0; i < a.dim(); ++i) {
        const CellIndex& ci = b.datum.cell_of(i);
        CHECK(a.involution_perm()[i] == b.datum.index(ci.lambda, ci.col, ci.row));
    }
}
