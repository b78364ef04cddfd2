#pragma once

/**
 * @file verify.hpp
 * @brief Reproduction bundles: each suite recomputes a reference table or
 * a structural property and compares against golden files / direct checks.
 *
 * Suites:
 *   p3r3        classes D_5..D_8 at 27, brute/structured/formula profile
 *               against the golden table, optimal error of weight 6
 *   p5r2        profiles at period p^2 for p = 5 and p = 3
 *   p5r3        classes D_13..D_24 at 125, formula table, coset search
 *               and constructed error of weight 40
 *   complement  complement profiles for p = 5 and p = 3 (r = 2)
 *   lemmas      quotient additivity, class projections, fiber counts,
 *               mod X^{p^2}-1 reduction, class-sum divisibility
 */

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "eqlc/lcanalysis.hpp"

namespace eqlc {

struct CheckResult {
    std::string name;
    std::string expected;
    std::string actual;
    bool pass = false;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;
    bool passed() const;
};

const std::vector<std::string_view>& suite_names();

/// Throws InvalidArgument for an unknown suite name; a missing golden file
/// is reported as a failed check, not an exception.
SuiteReport run_suite(std::string_view suite, const std::filesystem::path& golden_dir, const SearchConfig& config = {});

}  // namespace eqlc
