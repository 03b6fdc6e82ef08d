#ifndef CELLALG_REPORT_HPP
#define CELLALG_REPORT_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace cellalg {

enum class CheckStatus { pass, fail, not_applicable };

std::string to_string(CheckStatus s);

struct CheckResult {
    std::string name;
    CheckStatus status;
    std::string detail; // witness or computed values, may be empty
};

/// Flat list of named check outcomes. Suites append in deterministic loop
/// order; finalize() sorts by (name, detail) so serialized output never
/// depends on assembly order.
class Report {
public:
    void add(std::string name, CheckStatus status, std::string detail = "");
    void pass(std::string name, std::string detail = "");
    void fail(std::string name, std::string detail = "");
    void na(std::string name, std::string detail = "");
    void merge(const Report& o);

    bool all_pass() const; // no fail entries (not-applicable is fine)
    std::size_t fail_count() const;
    const std::vector<CheckResult>& entries() const { return entries_; }
    const CheckResult* find(const std::string& name) const;

    void finalize();
    std::string text() const;

private:
    std::vector<CheckResult> entries_;
};

} // namespace cellalg

#endif
