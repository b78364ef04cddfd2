#pragma once

/**
 * @file report.hpp
 * @brief Text forms of k-error profiles and consistency checks on them.
 *
 * Structured profile document (stable field order, one record per line):
 *
 *     # eqlc klc-profile v1
 *     p=3
 *     r=3
 *     family=euler
 *     period=27
 *     entries=9
 *     k=0 lc=24 method=brute witness=-
 *     k=7 lo=0 hi=8 method=bound
 *
 * `witness` lists the error positions separated by commas ("-" for the
 * empty error) and is present only when the route produced one.
 *
 * Values document (golden tables): a "# p=.. r=.. family=.." header and
 * one "k value" or "k lo..hi" line per entry.
 */

#include <optional>
#include <string>
#include <vector>

#include "eqlc/lcanalysis.hpp"

namespace eqlc {

std::string serialize_profile(const KlcProfile& profile);
KlcProfile parse_profile(const std::string& text);

/// Human table with runs of equal value and method merged into k-ranges.
std::string render_table(const KlcProfile& profile);

/// Values document for k in [0, k_hi] (default: all entries).
std::string render_values(const KlcProfile& profile, std::optional<std::size_t> k_hi = std::nullopt);

/// Invariant violations: entries contiguous from k = 0, lo <= hi, LC_k
/// nonincreasing (later lower bounds never exceed earlier upper bounds),
/// plus the optional endpoint checks LC_0 = lc0 and LC_weight = 0.
std::vector<std::string> check_profile(const KlcProfile& profile, std::optional<std::size_t> lc0 = std::nullopt,
                                       std::optional<std::size_t> weight = std::nullopt);

/// Mismatches between profiles at every k they share: exact values must be
/// equal, intervals must contain exact values and overlap each other.
std::vector<std::string> cross_check(const std::vector<const KlcProfile*>& profiles);

}  // namespace eqlc
