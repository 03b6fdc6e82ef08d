#ifndef CELLALG_IO_HPP
#define CELLALG_IO_HPP

#include <optional>
#include <string>

#include "cellalg/builders.hpp"
#include "cellalg/center.hpp"

namespace cellalg {

/// Parses the JSON algebra format. Structural problems (bad JSON, unknown
/// keys, wrong shapes) raise ParseError; well-formed input that breaks an
/// invariant (non-prime modulus, index tables that are not a bijection,
/// sum |M|^2 != dim, no identity) raises ValidationError. Semantic axioms
/// (associativity, cellularity, trace properties) are NOT checked here;
/// run_check_suite covers those.
BuiltAlgebra parse_algebra_file(const std::string& text);

/// Canonical JSON rendering; parse(serialize(x)) reproduces x exactly and
/// serialize is byte-stable across runs.
std::string serialize_algebra(const BuiltAlgebra& bundle);

/// A trace vector for --alt-trace: either a bare JSON array of scalar
/// strings or an object {"trace": [...]}.
TraceForm parse_trace_file(const std::string& text, FieldId field, std::size_t dim);

/// Associativity, anti-automorphism, cell-datum axioms, cell-module
/// consistency and trace symmetry/non-degeneracy.
Report run_check_suite(const BuiltAlgebra& bundle);

/// The identity suites: dual multiplication rules, the eight cellular dual
/// identities, the dual-basis transition formula, both center-ideal suites
/// and x-orthogonality. `alt` supplies the second trace for independence
/// checks; when absent a deterministic perturbation is used, and the checks
/// degrade to not-applicable if none exists.
Report run_verify_suite(const BuiltAlgebra& bundle, const std::optional<TraceForm>& alt);

/// Everything: check suite, verify suite, dimensions, per-cell data, Schur
/// elements and the semisimplicity verdict, as deterministic JSON or text.
std::string full_report(const BuiltAlgebra& bundle, const std::optional<TraceForm>& alt,
                        const std::string& format, bool& all_pass);

} // namespace cellalg

#endif
