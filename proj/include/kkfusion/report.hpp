#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace kkfusion {

// One named check inside a verification report. `witness` carries the first
// counterexample found (index tuple, offending entry) and is empty on pass.
struct CheckResult {
    std::string name;
    bool passed = true;
    std::string witness;
};

struct VerificationReport {
    std::vector<CheckResult> checks;

    bool all_passed() const;
    const CheckResult* find(const std::string& name) const;
    /// "pass", or a semicolon-joined list of the failed checks with witnesses.
    std::string summary() const;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when loading refuses a model because a verification failed; the
// offending report is attached.
struct VerificationError : std::runtime_error {
    VerificationReport report;
    VerificationError(const std::string& msg, VerificationReport r)
        : std::runtime_error(msg), report(std::move(r)) {}
};

// Degenerate braiding: S is singular, classification is meaningless.
struct DegenerateBraidingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Verlinde output was not a nonnegative-integer fusion tensor.
struct VerlindeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace kkfusion
