#pragma once

#include <string>
#include <utility>
#include <vector>

namespace srg {

// One named check with key/value details. Failed checks carry at least one
// witness entry so reports stay actionable.
struct Check {
    std::string name;
    bool pass = true;
    std::vector<std::pair<std::string, std::string>> details;

    Check& note(std::string key, std::string value) {
        details.emplace_back(std::move(key), std::move(value));
        return *this;
    }
    Check& note(std::string key, long long value) {
        return note(std::move(key), std::to_string(value));
    }
    Check& fail(std::string key, std::string value) {
        pass = false;
        return note(std::move(key), std::move(value));
    }
};

struct Report {
    std::vector<Check> checks;

    Check& add(std::string name) {
        checks.push_back(Check{std::move(name), true, {}});
        return checks.back();
    }
    void merge(const Report& other) {
        checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    }
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    const Check* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }
};

} // namespace srg
