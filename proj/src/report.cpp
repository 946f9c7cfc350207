#include "kkfusion/report.hpp"

namespace kkfusion {

bool VerificationReport::all_passed() const {
    for (const auto& c : checks)
        if (!c.passed) return false;
    return true;
}

const CheckResult* VerificationReport::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

std::string VerificationReport::summary() const {
    if (all_passed()) return "pass";
    std::string out;
    for (const auto& c : checks) {
        if (c.passed) continue;
        if (!out.empty()) out += "; ";
        out += c.name;
        if (!c.witness.empty()) out += " [" + c.witness + "]";
    }
    return out;
}

}  // namespace kkfusion
