#include "cellalg/io.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

namespace cellalg {

namespace {

using json = nlohmann::ordered_json;

void require_keys(const json& obj, const std::set<std::string>& required,
                  const std::set<std::string>& optional, const std::string& where) {
    for (const auto& [key, value] : obj.items()) {
        (void)value;
        if (!required.count(key) && !optional.count(key))
            throw ParseError("unknown field \"" + key + "\" in " + where);
    }
    for (const auto& key : required)
        if (!obj.contains(key))
            throw ParseError("missing field \"" + key + "\" in " + where);
}

std::vector<Scalar> parse_scalar_array(const json& arr, FieldId field,
                                       const std::string& where) {
    if (!arr.is_array()) throw ParseError(where + " must be an array");
    std::vector<Scalar> out;
    out.reserve(arr.size());
    for (const auto& v : arr) {
        if (!v.is_string()) throw ParseError(where + " entries must be scalar strings");
        out.push_back(Scalar::parse(v.get<std::string>(), field));
    }
    return out;
}

} // namespace

BuiltAlgebra parse_algebra_file(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    try {
        if (!doc.is_object()) throw ParseError("top level must be an object");
        require_keys(doc,
                     {"field", "dim", "basis", "structure_constants", "involution",
                      "cells", "poset", "trace"},
                     {"identity"}, "algebra file");

        const FieldId field = FieldId::parse(doc.at("field").get<std::string>());
        const auto dim = doc.at("dim").get<std::size_t>();

        std::vector<std::string> labels;
        for (const auto& l : doc.at("basis")) labels.push_back(l.get<std::string>());
        if (labels.size() != dim)
            throw ValidationError("basis has " + std::to_string(labels.size()) +
                                  " labels but dim = " + std::to_string(dim));

        StructureConstants sc(dim, field);
        for (const auto& entry : doc.at("structure_constants")) {
            if (!entry.is_array() || entry.size() != 4)
                throw ParseError("structure_constants entries must be [i, j, k, scalar]");
            sc.set(entry.at(0).get<std::size_t>(), entry.at(1).get<std::size_t>(),
                   entry.at(2).get<std::size_t>(),
                   Scalar::parse(entry.at(3).get<std::string>(), field));
        }

        std::vector<std::size_t> invol;
        for (const auto& v : doc.at("involution")) invol.push_back(v.get<std::size_t>());

        Element identity = Element::zero(dim, field);
        if (doc.contains("identity")) {
            auto coeffs = parse_scalar_array(doc.at("identity"), field, "identity");
            if (coeffs.size() != dim) throw ValidationError("identity vector length != dim");
            identity = Element(std::move(coeffs), field);
        } else {
            try {
                identity = find_identity(sc);
            } catch (const NoIdentity& e) {
                throw ValidationError(std::string("no identity element: ") + e.what());
            }
        }

        Algebra alg(std::move(labels), std::move(sc), std::move(identity),
                    std::move(invol));

        std::vector<std::string> cell_labels;
        std::vector<std::vector<std::string>> m_labels;
        std::vector<std::vector<std::vector<std::size_t>>> index;
        for (const auto& cell : doc.at("cells")) {
            require_keys(cell, {"label", "m", "index"}, {}, "cell entry");
            cell_labels.push_back(cell.at("label").get<std::string>());
            std::vector<std::string> ml;
            for (const auto& m : cell.at("m")) ml.push_back(m.get<std::string>());
            m_labels.push_back(std::move(ml));
            std::vector<std::vector<std::size_t>> idx;
            for (const auto& row : cell.at("index")) {
                std::vector<std::size_t> r;
                for (const auto& v : row) r.push_back(v.get<std::size_t>());
                idx.push_back(std::move(r));
            }
            index.push_back(std::move(idx));
        }
        const auto cell_pos = [&](const std::string& label) {
            const auto it = std::find(cell_labels.begin(), cell_labels.end(), label);
            if (it == cell_labels.end())
                throw ValidationError("poset mentions unknown cell \"" + label + "\"");
            return static_cast<std::size_t>(it - cell_labels.begin());
        };
        std::vector<std::pair<std::size_t, std::size_t>> covers;
        for (const auto& pair : doc.at("poset")) {
            if (!pair.is_array() || pair.size() != 2)
                throw ParseError("poset entries must be [lower, higher] label pairs");
            covers.emplace_back(cell_pos(pair.at(0).get<std::string>()),
                                cell_pos(pair.at(1).get<std::string>()));
        }
        CellDatum cd(Poset(std::move(cell_labels), covers), std::move(m_labels),
                     std::move(index));
        if (cd.dim() != alg.dim())
            throw ValidationError("sum |M(lambda)|^2 = " + std::to_string(cd.dim()) +
                                  " does not match dim = " + std::to_string(alg.dim()));

        auto tau = parse_scalar_array(doc.at("trace"), field, "trace");
        if (tau.size() != dim) throw ValidationError("trace vector length != dim");

        return BuiltAlgebra{std::move(alg), std::move(cd), TraceForm(std::move(tau))};
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed algebra file: ") + e.what());
    }
}

std::string serialize_algebra(const BuiltAlgebra& bundle) {
    const Algebra& a = bundle.algebra;
    const CellDatum& cd = bundle.datum;
    json doc;
    doc["field"] = a.field().str();
    doc["dim"] = a.dim();
    doc["basis"] = a.labels();
    json sc_entries = json::array();
    for (const auto& [i, j, k, c] : a.sc().entries())
        sc_entries.push_back(json::array({i, j, k, c.str()}));
    doc["structure_constants"] = std::move(sc_entries);
    json identity = json::array();
    for (std::size_t i = 0; i < a.dim(); ++i) identity.push_back(a.one()[i].str());
    doc["identity"] = std::move(identity);
    doc["involution"] = a.involution_perm();
    json cells = json::array();
    for (std::size_t l = 0; l < cd.cell_count(); ++l) {
        json cell;
        cell["label"] = cd.poset().labels()[l];
        cell["m"] = cd.m_labels(l);
        json idx = json::array();
        for (std::size_t s = 0; s < cd.m_size(l); ++s) {
            json row = json::array();
            for (std::size_t t = 0; t < cd.m_size(l); ++t) row.push_back(cd.index(l, s, t));
            idx.push_back(std::move(row));
        }
        cell["index"] = std::move(idx);
        cells.push_back(std::move(cell));
    }
    doc["cells"] = std::move(cells);
    json poset = json::array();
    for (const auto& [lo, hi] : cd.poset().covers())
        poset.push_back(json::array(
            {cd.poset().labels()[lo], cd.poset().labels()[hi]}));
    doc["poset"] = std::move(poset);
    json tau = json::array();
    for (const auto& v : bundle.trace.values()) tau.push_back(v.str());
    doc["trace"] = std::move(tau);
    return doc.dump(2) + "\n";
}

TraceForm parse_trace_file(const std::string& text, FieldId field, std::size_t dim) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON trace file: ") + e.what());
    }
    const json* arr = &doc;
    if (doc.is_object()) {
        require_keys(doc, {"trace"}, {}, "trace file");
        arr = &doc.at("trace");
    }
    auto values = parse_scalar_array(*arr, field, "trace");
    if (values.size() != dim)
        throw ValidationError("trace vector length " + std::to_string(values.size()) +
                              " != dim " + std::to_string(dim));
    return TraceForm(std::move(values));
}

Report run_check_suite(const BuiltAlgebra& bundle) {
    Report rep;
    rep.merge(check_associativity(bundle.algebra.sc()));
    rep.merge(check_anti_automorphism(bundle.algebra));
    const Report cellularity = verify_cell_datum(bundle.algebra, bundle.datum);
    rep.merge(cellularity);
    if (cellularity.all_pass()) {
        const CellularAlgebra ca = CellularAlgebra::create(bundle.algebra, bundle.datum);
        rep.merge(verify_cell_modules(ca));
    } else {
        rep.na("cell-module/representation", "cell-datum verification failed");
        rep.na("cell-module/gram-symmetric", "cell-datum verification failed");
    }
    rep.merge(check_trace(bundle.algebra, bundle.trace));
    rep.finalize();
    return rep;
}

Report run_verify_suite(const BuiltAlgebra& bundle, const std::optional<TraceForm>& alt) {
    Report rep;
    const Report pre = run_check_suite(bundle);
    if (!pre.all_pass()) {
        rep.merge(pre);
        rep.na("verify", "basic checks failed; identity suites skipped");
        rep.finalize();
        return rep;
    }
    const CellularAlgebra ca = CellularAlgebra::create(bundle.algebra, bundle.datum);
    const DualBasis d = compute_dual_basis(bundle.algebra, bundle.trace);

    std::optional<TraceForm> tau2 = alt;
    if (tau2 && (!check_trace(bundle.algebra, *tau2).all_pass()))
        throw ValidationError("--alt-trace is not a symmetrizing trace");
    if (!tau2) tau2 = perturbed_trace(bundle.algebra, bundle.trace);

    rep.merge(verify_dual_mult_rules(bundle.algebra, bundle.trace, d));
    rep.merge(verify_cell_dual_identities(ca, bundle.trace, d));
    if (tau2)
        rep.merge(verify_dual_transition(bundle.algebra, bundle.trace, *tau2));
    else
        rep.na("dual-transition", "no alternative trace available");
    rep.merge(verify_center_ideal(ca, bundle.trace, tau2));
    rep.merge(verify_center_ideal_flipped(ca, bundle.trace, tau2));
    rep.merge(verify_x_orthogonality(ca, d));
    rep.finalize();
    return rep;
}

std::string full_report(const BuiltAlgebra& bundle, const std::optional<TraceForm>& alt,
                        const std::string& format, bool& all_pass) {
    const Algebra& a = bundle.algebra;
    json doc;
    doc["field"] = a.field().str();
    doc["dim"] = a.dim();

    Report checks = run_check_suite(bundle);
    const bool basics_ok = checks.all_pass();
    if (basics_ok) {
        Report verify = run_verify_suite(bundle, alt);
        checks.merge(verify);
        checks.finalize();
    }
    json check_list = json::array();
    std::size_t pass = 0, fail = 0, na = 0;
    for (const auto& e : checks.entries()) {
        json entry;
        entry["name"] = e.name;
        entry["status"] = to_string(e.status);
        entry["detail"] = e.detail;
        check_list.push_back(std::move(entry));
        if (e.status == CheckStatus::pass) ++pass;
        if (e.status == CheckStatus::fail) ++fail;
        if (e.status == CheckStatus::not_applicable) ++na;
    }
    doc["checks"] = std::move(check_list);
    doc["summary"] = json{{"pass", pass}, {"fail", fail}, {"not_applicable", na}};
    all_pass = fail == 0;

    if (basics_ok) {
        const CellularAlgebra ca = CellularAlgebra::create(bundle.algebra, bundle.datum);
        const DualBasis d = compute_dual_basis(a, bundle.trace);
        const CentralStructure cs = compute_central_structure(ca, d);
        doc["dimensions"] = json{{"Z", cs.Z.dim()},
                                 {"H", cs.H.dim()},
                                 {"L", cs.L.dim()},
                                 {"L_prime", cs.Lprime.dim()},
                                 {"lambda0", ca.lambda0().size()}};
        const SchurData schur = schur_elements(ca, bundle.trace, d);
        json cells = json::array();
        for (std::size_t l = 0; l < ca.cell_count(); ++l) {
            json cell;
            cell["label"] = ca.datum().poset().labels()[l];
            cell["m_size"] = ca.datum().m_size(l);
            cell["gram_rank"] = rref(ca.module(l).gram()).rank;
            cell["rad_dim"] = ca.rad_dim(l);
            cell["schur"] = schur.cells[l].defined ? schur.cells[l].c.str() : "undefined";
            cell["tau_x"] = bundle.trace(cs.x[l]).str();
            cell["x"] = a.format(cs.x[l]);
            cells.push_back(std::move(cell));
        }
        doc["cells"] = std::move(cells);
        try {
            doc["semisimple"] = check_semisimple(ca, bundle.trace, d);
        } catch (const SemisimpleCriteriaDisagree& e) {
            doc["semisimple"] = std::string("criteria disagree: ") + e.what();
            all_pass = false;
        }
    }

    if (format == "json") return doc.dump(2) + "\n";
    if (format != "text") throw ValidationError("unknown report format: " + format);

    std::string out;
    out += "field: " + doc["field"].get<std::string>() + "\n";
    out += "dim:   " + std::to_string(a.dim()) + "\n";
    if (doc.contains("dimensions")) {
        out += "dim Z = " + doc["dimensions"]["Z"].dump() +
               ", dim H = " + doc["dimensions"]["H"].dump() +
               ", dim L = " + doc["dimensions"]["L"].dump() +
               ", dim L' = " + doc["dimensions"]["L_prime"].dump() +
               ", |Lambda_0| = " + doc["dimensions"]["lambda0"].dump() + "\n";
        for (const auto& cell : doc["cells"]) {
            out += "cell " + cell["label"].get<std::string>() +
                   ": |M| = " + cell["m_size"].dump() +
                   ", gram rank = " + cell["gram_rank"].dump() +
                   ", rad dim = " + cell["rad_dim"].dump() +
                   ", schur = " + cell["schur"].get<std::string>() +
                   ", tau(x) = " + cell["tau_x"].get<std::string>() +
                   ", x = " + cell["x"].get<std::string>() + "\n";
        }
        out += "semisimple: " + doc["semisimple"].dump() + "\n";
    }
    for (const auto& e : doc["checks"]) {
        out += e["status"].get<std::string>() + "  " + e["name"].get<std::string>();
        const std::string detail = e["detail"].get<std::string>();
        if (!detail.empty()) out += "  (" + detail + ")";
        out += "\n";
    }
    return out;
}

} // namespace cellalg
