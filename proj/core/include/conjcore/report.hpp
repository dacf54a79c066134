#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace conjtk {

/// One verification entry: a stable check id, a verdict, and the first
/// witness when the check fails.
struct CheckResult {
    std::string id;
    bool pass = true;
    std::string witness;
};

struct Report {
    std::vector<CheckResult> checks;

    void add(std::string id, bool pass, std::string witness = "") {
        checks.push_back({std::move(id), pass, std::move(witness)});
    }
    void append(const Report& other) {
        checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    }
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass)
                return false;
        return true;
    }
    const CheckResult* find(std::string_view id) const {
        for (const auto& c : checks)
            if (c.id == id)
                return &c;
        return nullptr;
    }
};

} // namespace conjtk
