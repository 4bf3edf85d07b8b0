#ifndef HKDV_CHECK_HPP
#define HKDV_CHECK_HPP

#include <string>
#include <vector>

namespace hkdv {

struct CheckResult {
    std::string name;
    bool passed = false;
    // First counterexample on failure; informational text on success.
    std::string detail;
};

struct VerificationReport {
    std::vector<CheckResult> checks;

    void add(std::string name, bool passed, std::string detail = {})
    {
        checks.push_back({std::move(name), passed, std::move(detail)});
    }
    void append(const VerificationReport& other)
    {
        checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    }
    bool all_passed() const
    {
        for (const auto& c : checks)
            if (!c.passed)
                return false;
        return true;
    }
};

} // namespace hkdv

#endif
