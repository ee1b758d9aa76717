#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace chordal {

/// Seeded property sweeps over the library's identities. Each suite is
/// deterministic for a fixed seed; within one platform the results are
/// byte-identical across runs.
enum class Suite { Newton, Hom, Binet, Chords, Radicals, Derivative };

inline constexpr std::array<Suite, 6> kAllSuites = {Suite::Newton, Suite::Hom,      Suite::Binet,
                                                    Suite::Chords, Suite::Radicals, Suite::Derivative};

std::string_view suite_name(Suite which);
std::optional<Suite> suite_from_name(std::string_view name);

struct SuiteResult {
    std::string name;
    int cases = 0;
    int failures = 0;
    double worst_residual = 0.0;  // residual at the worst residual/allowance ratio
    double worst_allowed = 0.0;   // the allowance at that case
    std::string worst_case;       // inputs of the worst (or first failing) case

    bool passed() const noexcept { return failures == 0; }
};

SuiteResult run_suite(Suite which, std::uint64_t seed);
std::vector<SuiteResult> run_all_suites(std::uint64_t seed);

}  // namespace chordal
