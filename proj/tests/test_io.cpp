#include <doctest.h>

#include <json.hpp>

#include "cellalg/io.hpp"

using namespace cellalg;

namespace {

const FieldId Q = FieldId::rationals();

void check_round_trip(const BuiltAlgebra& b) {
    const std::string text = serialize_algebra(b);
    const BuiltAlgebra back = parse_algebra_file(text);
    CHECK(back.algebra.dim() == b.algebra.dim());
    CHECK(back.algebra.field() == b.algebra.field());
    CHECK(back.algebra.labels() == b.algebra.labels());
    CHECK(back.algebra.sc().entries() == b.algebra.sc().entries());
    CHECK(back.algebra.one() == b.algebra.one());
    CHECK(back.algebra.involution_perm() == b.algebra.involution_perm());
    CHECK(back.datum == b.datum);
    CHECK(back.trace.values() == b.trace.values());
    // Serialization is canonical, so a second pass is byte-identical.
    CHECK(serialize_algebra(back) == text);
}

nlohmann::ordered_json base_doc() {
    return nlohmann::ordered_json::parse(serialize_algebra(build_truncated_poly(3, Q)));
}

} // namespace

TEST_CASE("algebra files round trip") {
    check_round_trip(build_truncated_poly(3, Q));
    check_round_trip(build_quiver_zigzag(3, FieldId::prime_field(5)));
    check_round_trip(build_temperley_lieb(2, Scalar::of_int(2, Q), Q));
    check_round_trip(build_matrix_blocks({2, 2}, Q));
}

TEST_CASE("parsed files pass the check suite") {
    const BuiltAlgebra b =
        parse_algebra_file(serialize_algebra(build_truncated_poly(3, Q)));
    CHECK(run_check_suite(b).all_pass());
}

TEST_CASE("non-prime modulus is rejected") {
    auto doc = base_doc();
    doc["field"] = "Fp:6";
    CHECK_THROWS_AS(parse_algebra_file(doc.dump()), ValidationError);
}

TEST_CASE("cell tables must cover the dimension exactly") {
    auto doc = base_doc();
    // Drop one cell: sum |M|^2 becomes 2 != dim 3.
    doc["cells"].erase(2);
    doc["poset"] = nlohmann::ordered_json::array(
        {nlohmann::ordered_json::array({"c1", "c0"})});
    CHECK_THROWS_AS(parse_algebra_file(doc.dump()), ValidationError);
}

TEST_CASE("unknown fields are rejected") {
    auto doc = base_doc();
    doc["extra"] = 1;
    CHECK_THROWS_AS(parse_algebra_file(doc.dump()), ParseError);

    auto doc2 = base_doc();
    doc2["cells"][0]["comment"] = "hi";
    CHECK_THROWS_AS(parse_algebra_file(doc2.dump()), ParseError);
}

TEST_CASE("malformed input is a parse error") {
    CHECK_THROWS_AS(parse_algebra_file("{"), ParseError);
    CHECK_THROWS_AS(parse_algebra_file("[1,2]"), ParseError);
    auto doc = base_doc();
    doc["trace"][0] = "1.5"; // floats are not exact scalars
    CHECK_THROWS_AS(parse_algebra_file(doc.dump()), ParseError);
    auto doc2 = base_doc();
    doc2["dim"] = "three";
    CHECK_THROWS_AS(parse_algebra_file(doc2.dump()), ParseError);
}

TEST_CASE("missing identity is solved from the table") {
    auto doc = base_doc();
    doc.erase("identity");
    const BuiltAlgebra b = parse_algebra_file(doc.dump());
    CHECK(b.algebra.one() == b.algebra.basis_element(0));
}

TEST_CASE("a table without a unit fails validation") {
    nlohmann::ordered_json doc;
    doc["field"] = "Q";
    doc["dim"] = 1;
    doc["basis"] = {"a"};
    doc["structure_constants"] = nlohmann::ordered_json::array(); // a*a = 0
    doc["involution"] = {0};
    doc["cells"] = nlohmann::ordered_json::array();
    doc["cells"].push_back({{"label", "c"}, {"m", {"1"}}, {"index", {{0}}}});
    doc["poset"] = nlohmann::ordered_json::array();
    doc["trace"] = {"1"};
    CHECK_THROWS_AS(parse_algebra_file(doc.dump()), ValidationError);
}

TEST_CASE("poset entries must be known labels and acyclic") {
    auto doc = base_doc();
    doc["poset"][0][0] = "nope";
    CHECK_THROWS_AS(parse_algebra_file(doc.dump()), ValidationError);

    auto doc2 = base_doc();
    doc2["poset"] = nlohmann::ordered_json::array(
        {nlohmann::ordered_json::array({"c0", "c1"}),
         nlohmann::ordered_json::array({"c1", "c0"})});
    CHECK_THROWS_AS(parse_algebra_file(doc2.dump()), ValidationError);
}

TEST_CASE("trace files accept both accepted shapes") {
    const TraceForm bare = parse_trace_file("[\"1\",\"0\",\"0\"]", Q, 3);
    CHECK(bare.values()[0] == Scalar::one(Q));
    const TraceForm wrapped = parse_trace_file("{\"trace\": [\"1\",\"2\",\"3\"]}", Q, 3);
    CHECK(wrapped.values()[2] == Scalar::of_int(3, Q));
    CHECK_THROWS_AS(parse_trace_file("[\"1\"]", Q, 3), ValidationError);
    CHECK_THROWS_AS(parse_trace_file("{\"values\": []}", Q, 3), ParseError);
}

TEST_CASE("corrupting a structure constant is caught by the check suite") {
    auto doc = base_doc();
    doc["structure_constants"].push_back(
        nlohmann::ordered_json::array({2, 2, 1, "1"})); // x^2 * x^2 = x ?!
    const BuiltAlgebra b = parse_algebra_file(doc.dump());
    const Report rep = run_check_suite(b);
    CHECK(!rep.all_pass());
    const CheckResult* assoc = rep.find("associativity");
    REQUIRE(assoc != nullptr);
    CHECK(assoc->status == CheckStatus::fail);
    CHECK(assoc->detail.find("witness") != std::string::npos);
}

TEST_CASE("full report output is deterministic") {
    const BuiltAlgebra b = build_temperley_lieb(2, Scalar::of_int(2, Q), Q);
    bool ok1 = false, ok2 = false;
    const std::string r1 = full_report(b, std::nullopt, "json", ok1);
    const std::string r2 = full_report(b, std::nullopt, "json", ok2);
    CHECK(r1 == r2);
    CHECK(ok1);
    CHECK(ok2);
    CHECK(r1.find("\"semisimple\": true") != std::string::npos);
    // text rendering works too
    bool ok3 = false;
    const std::string text = full_report(b, std::nullopt, "text", ok3);
    CHECK(text.find("dim Z = 2") != std::string::npos);
    CHECK_THROWS_AS(full_report(b, std::nullopt, "yaml", ok3), ValidationError);
}

TEST_CASE("verify suite runs end to end from a file") {
    const BuiltAlgebra b =
        parse_algebra_file(serialize_algebra(build_quiver_zigzag(3, Q)));
    const Report rep = run_verify_suite(b, std::nullopt);
    CHECK(rep.all_pass());
    // A provided alternative trace is validated first.
    std::vector<Scalar> junk(b.algebra.dim(), Scalar::zero(Q));
    CHECK_THROWS_AS(run_verify_suite(b, TraceForm(junk)), ValidationError);
    // A genuine alternative trace drives the independence checks to pass.
    std::vector<Scalar> bumped = b.trace.values();
    bumped[0] = Scalar::of_int(2, Q);
    const Report rep2 = run_verify_suite(b, TraceForm(bumped));
    CHECK(rep2.all_pass());
    const CheckResult* indep = rep2.find("center-ideal/tau-independent");
    REQUIRE(indep != nullptr);
    CHECK(indep->status == CheckStatus::pass);
}

TEST_CASE("full report on a broken file degrades gracefully") {
    auto doc = base_doc();
    doc["structure_constants"].push_back(
        nlohmann::ordered_json::array({2, 2, 1, "1"}));
    const BuiltAlgebra b = parse_algebra_file(doc.dump());
    bool ok = true;
    const std::string rep = full_report(b, std::nullopt, "json", ok);
    CHECK(!ok);
    CHECK(rep.find("\"fail\"") != std::string::npos);
    CHECK(rep.find("dimensions") == std::string::npos);
}
