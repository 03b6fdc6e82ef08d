// Command-line front end: build example algebras, check and verify algebra
// files, print dual bases, center data, Schur elements and idempotents.
//
// Exit codes: 0 success / all checks pass, 2 parse error, 3 validation
// error, 4 check or computation failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "cellalg/io.hpp"

namespace {

using namespace cellalg;

constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitCheck = 4;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write file: " + path);
    out << content;
}

BuiltAlgebra load(const std::string& path) {
    return parse_algebra_file(read_input(path));
}

// Commands that compute through the dual basis need the trace invariants
// (symmetry, non-degeneracy) up front; `check` is where violations get a
// full report, here they just stop the computation.
void require_admissible_trace(const BuiltAlgebra& b) {
    const Report rep = check_trace(b.algebra, b.trace);
    for (const auto& e : rep.entries())
        if (e.status == CheckStatus::fail)
            throw Error(e.name + (e.detail.empty() ? "" : ": " + e.detail));
}

std::optional<TraceForm> load_alt_trace(const std::string& path, const BuiltAlgebra& b) {
    if (path.empty()) return std::nullopt;
    return parse_trace_file(read_input(path), b.algebra.field(), b.algebra.dim());
}

void print_subspace(const Algebra& a, const std::string& name, const Subspace& s) {
    std::cout << "dim " << name << " = " << s.dim() << "\n";
    for (std::size_t r = 0; r < s.dim(); ++r)
        std::cout << "  " << a.format(Element(s.basis().row(r), a.field())) << "\n";
}

int cmd_build(const BuilderParams& params, const std::string& out_path) {
    write_output(out_path, serialize_algebra(build_family(params)));
    return 0;
}

int cmd_check(const std::string& path) {
    const BuiltAlgebra b = load(path);
    const Report rep = run_check_suite(b);
    std::cout << rep.text();
    return rep.all_pass() ? 0 : kExitCheck;
}

int cmd_dual_basis(const std::string& path) {
    const BuiltAlgebra b = load(path);
    require_admissible_trace(b);
    const DualBasis d = compute_dual_basis(b.algebra, b.trace);
    for (std::size_t j = 0; j < b.algebra.dim(); ++j)
        std::cout << "D(" << b.algebra.labels()[j]
                  << ") = " << b.algebra.format(d.element(j)) << "\n";
    return 0;
}

int cmd_center(const std::string& path) {
    const BuiltAlgebra b = load(path);
    require_admissible_trace(b);
    const CellularAlgebra ca = CellularAlgebra::create(b.algebra, b.datum);
    const DualBasis d = compute_dual_basis(b.algebra, b.trace);
    const CentralStructure cs = compute_central_structure(ca, d);
    print_subspace(b.algebra, "Z", cs.Z);
    print_subspace(b.algebra, "H", cs.H);
    print_subspace(b.algebra, "L", cs.L);
    print_subspace(b.algebra, "L'", cs.Lprime);
    for (std::size_t l = 0; l < ca.cell_count(); ++l)
        std::cout << "x_" << ca.datum().poset().labels()[l] << " = "
                  << b.algebra.format(cs.x[l]) << "\n";
    return 0;
}

int cmd_verify(const std::string& path, const std::string& alt_path) {
    const BuiltAlgebra b = load(path);
    const Report rep = run_verify_suite(b, load_alt_trace(alt_path, b));
    std::cout << rep.text();
    return rep.all_pass() ? 0 : kExitCheck;
}

int cmd_idempotents(const std::string& path) {
    const BuiltAlgebra b = load(path);
    require_admissible_trace(b);
    const CellularAlgebra ca = CellularAlgebra::create(b.algebra, b.datum);
    const DualBasis d = compute_dual_basis(b.algebra, b.trace);
    const SchurData schur = schur_elements(ca, b.trace, d);
    for (std::size_t l = 0; l < ca.cell_count(); ++l)
        std::cout << "schur(" << ca.datum().poset().labels()[l] << ") = "
                  << (schur.cells[l].defined ? schur.cells[l].c.str() : "undefined")
                  << "\n";
    try {
        const std::vector<Element> es = primitive_idempotents(ca, b.trace, d);
        for (std::size_t l = 0; l < es.size(); ++l)
            std::cout << "e_" << ca.datum().poset().labels()[l] << " = "
                      << b.algebra.format(es[l]) << "\n";
    } catch (const NotSemisimple& e) {
        std::cout << "NotSemisimple: " << e.what() << "\n";
    }
    return 0;
}

int cmd_report(const std::string& path, const std::string& alt_path,
               const std::string& format) {
    const BuiltAlgebra b = load(path);
    bool all_pass = false;
    std::cout << full_report(b, load_alt_trace(alt_path, b), format, all_pass);
    return all_pass ? 0 : kExitCheck;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact structure-constant computations for symmetric cellular algebras"};
    app.require_subcommand(1);

    BuilderParams params;
    std::string field_spec = "Q";
    std::string out_path = "-";
    std::string blocks_spec;
    auto* build = app.add_subcommand("build", "emit an algebra file for a named family");
    build->add_option("--family", params.family,
                      "quiver-zigzag | truncated-poly | matrix-blocks | temperley-lieb")
        ->required();
    build->add_option("--n", params.n, "size parameter");
    build->add_option("--delta", params.delta, "loop parameter (temperley-lieb)");
    build->add_option("--blocks", blocks_spec, "comma-separated block sizes (matrix-blocks)");
    build->add_option("--field", field_spec, "Q or Fp:<p>");
    build->add_option("--out", out_path, "output file, - for stdout");

    std::string file;
    auto* check = app.add_subcommand("check", "run the structural check suite");
    check->add_option("file", file, "algebra file")->required();

    auto* dual = app.add_subcommand("dual-basis", "print the dual basis");
    dual->add_option("file", file, "algebra file")->required();

    auto* center = app.add_subcommand("center", "print Z, H, L, L' and the x elements");
    center->add_option("file", file, "algebra file")->required();

    std::string alt_path;
    auto* verify = app.add_subcommand("verify", "run the identity verification suites");
    verify->add_option("file", file, "algebra file")->required();
    verify->add_option("--alt-trace", alt_path, "trace vector file for independence checks");

    auto* idem = app.add_subcommand("idempotents",
                                    "Schur elements and primitive central idempotents");
    idem->add_option("file", file, "algebra file")->required();

    std::string format = "json";
    auto* report = app.add_subcommand("report", "full machine-readable report");
    report->add_option("file", file, "algebra file")->required();
    report->add_option("--alt-trace", alt_path, "trace vector file");
    report->add_option("--format", format, "text or json");

    CLI11_PARSE(app, argc, argv);

    try {
        if (build->parsed()) {
            params.field = FieldId::parse(field_spec);
            if (!blocks_spec.empty()) {
                std::stringstream ss(blocks_spec);
                std::string item;
                while (std::getline(ss, item, ','))
                    params.blocks.push_back(std::stoul(item));
            }
            return cmd_build(params, out_path);
        }
        if (check->parsed()) return cmd_check(file);
        if (dual->parsed()) return cmd_dual_basis(file);
        if (center->parsed()) return cmd_center(file);
        if (verify->parsed()) return cmd_verify(file, alt_path);
        if (idem->parsed()) return cmd_idempotents(file);
        if (report->parsed()) return cmd_report(file, alt_path, format);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheck;
    }
    return 0;
}
