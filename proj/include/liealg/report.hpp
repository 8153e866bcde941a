#pragma once

#include <string>
#include <vector>

namespace liealg {

enum class CheckStatus { Pass, Fail, Info };

struct CheckRecord {
    std::string id;
    std::string description;
    std::string anchor;  // reference tag for the claim being checked
    CheckStatus status = CheckStatus::Info;
    std::vector<std::string> detail;
};

// Deterministic outcome of the full verification pipeline; exit status of
// the CLI is 0 iff fail_count() == 0.
struct VerificationReport {
    std::vector<CheckRecord> checks;

    int fail_count() const;
    int pass_count() const;

    std::string render_text() const;    // human-readable summary
    std::string render_report() const;  // structured record format
};

struct VerifyOptions {
    unsigned long seed = 1;
    // Second seed used for the stability cross-check.
    unsigned long second_seed = 2;
};

// Runs the whole pipeline: catalog audits, subalgebra and transcription
// cross-checks, the contraction chain, invariant dimensions, reference
// polynomial membership with sign resolution, contracted Casimir limits,
// the printed-operator audit, rest-frame evaluations, and invariant counts.
VerificationReport run_paper_verification(const VerifyOptions& options = {});

}  // namespace liealg
