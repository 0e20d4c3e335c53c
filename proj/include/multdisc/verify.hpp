#pragma once

// Seeded invariant suites: the determinant-permanent identity, the dp ratio
// identity, root-side vs coefficient-side agreement, classification
// round-trips, homogeneity and specializations, and agreement with the
// baseline condition.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "multdisc/discriminant.hpp"
#include "multdisc/oracle.hpp"

namespace multdisc {

struct SuiteReport {
    std::string suite;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    std::size_t checks = 0;
    std::vector<std::string> failures;  ///< counterexamples, verbatim
    std::vector<std::string> notes;     ///< recorded observations that are not pass/fail

    bool ok() const { return failures.empty(); }
};

struct VerifyOptions {
    std::size_t trials = 0;  ///< 0 selects the suite default
    std::uint64_t seed = 7;
    DmuOptions dmu;
};

const std::vector<std::string>& suite_names();
std::size_t default_trials(std::string_view suite);

/// Throws UnknownSuite.
SuiteReport run_suite(std::string_view suite, const VerifyOptions& options = {});

/// Independent per-trial seed derived from the base seed.
std::uint64_t trial_seed(std::uint64_t base, std::uint64_t trial);

/// Instance t of the round-trip family: n in [4,10], m in [2,n-2].
RootSpec roundtrip_instance(std::uint64_t base_seed, std::uint64_t trial);

SuiteReport verify_lemma2(const VerifyOptions& options);
SuiteReport verify_lemma3(const VerifyOptions& options);
SuiteReport verify_lemma1(const VerifyOptions& options);
SuiteReport verify_roundtrip(const VerifyOptions& options);
SuiteReport verify_scaling(const VerifyOptions& options);
SuiteReport verify_yhz_agree(const VerifyOptions& options);

}  // namespace multdisc
