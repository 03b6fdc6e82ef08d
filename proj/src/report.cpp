#include "cellalg/report.hpp"

#include <algorithm>

namespace cellalg {

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::not_applicable: return "not-applicable";
    }
    return "?";
}

void Report::add(std::string name, CheckStatus status, std::string detail) {
    entries_.push_back(CheckResult{std::move(name), status, std::move(detail)});
}

void Report::pass(std::string name, std::string detail) {
    add(std::move(name), CheckStatus::pass, std::move(detail));
}

void Report::fail(std::string name, std::string detail) {
    add(std::move(name), CheckStatus::fail, std::move(detail));
}

void Report::na(std::string name, std::string detail) {
    add(std::move(name), CheckStatus::not_applicable, std::move(detail));
}

void Report::merge(const Report& o) {
    entries_.insert(entries_.end(), o.entries_.begin(), o.entries_.end());
}

bool Report::all_pass() const {
    return fail_count() == 0;
}

std::size_t Report::fail_count() const {
    std::size_t n = 0;
    for (const auto& e : entries_)
        if (e.status == CheckStatus::fail) ++n;
    return n;
}

const CheckResult* Report::find(const std::string& name) const {
    for (const auto& e : entries_)
        if (e.name == name) return &e;
    return nullptr;
}

void Report::finalize() {
    std::stable_sort(entries_.begin(), entries_.end(),
                     [](const CheckResult& a, const CheckResult& b) {
                         if (a.name != b.name) return a.name < b.name;
                         return a.detail < b.detail;
                     });
}

std::string Report::text() const {
    std::string out;
    for (const auto& e : entries_) {
        out += to_string(e.status);
        out += "  ";
        out += e.name;
        if (!e.detail.empty()) {
            out += "  (";
            out += e.detail;
            out += ")";
        }
        out += "\n";
    }
    return out;
}

} // namespace cellalg
