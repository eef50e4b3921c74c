#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

#include "resid/poset.hpp"

namespace resid {

struct Check {
    std::string name;
    bool passed = true;
    /// Element labels of the first violating tuple, in element order; empty on pass.
    std::vector<Label> witness;

    friend bool operator==(const Check&, const Check&) = default;
};

class VerificationReport {
public:
    void add(Check check) { checks_.push_back(std::move(check)); }

    const std::vector<Check>& checks() const noexcept { return checks_; }

    bool overall() const {
        return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.passed; });
    }

    /// nullptr when no check of that name exists.
    const Check* find(std::string_view name) const {
        for (const auto& c : checks_) {
            if (c.name == name) return &c;
        }
        return nullptr;
    }

    bool passed(std::string_view name) const {
        const Check* c = find(name);
        return c != nullptr && c->passed;
    }

    void append(const VerificationReport& other) {
        checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
    }

    friend bool operator==(const VerificationReport&, const VerificationReport&) = default;

private:
    std::vector<Check> checks_;
};

}  // namespace resid
