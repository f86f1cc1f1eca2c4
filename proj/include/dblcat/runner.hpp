// Copyright 2026 The dblcat Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef DBLCAT__RUNNER_HPP_
#define DBLCAT__RUNNER_HPP_

#include <optional>
#include <string>
#include <vector>

#include "dblcat/instance_file.hpp"
#include "dblcat/report.hpp"

namespace dblcat
{

inline constexpr int kReportSchema = 1;
inline constexpr int kDefaultBound = 2;
inline constexpr int kDefaultBudget = 2000;

/// coherence, companions, cotabulators, tabulators, glueing, adjunction, theorem.
const std::vector<std::string> & suite_names();

/// Command-line overrides of the file's settings.
struct RunOptions
{
  std::vector<std::string> suites;
  std::optional<int> bound;
  std::optional<int> budget;
};

/// Builds every declared carrier; throws ParseError naming the violated
/// invariant at the declaring stanza.
void validate_instance(const InstanceFile & f);

/**
 * Runs the selected suites and returns the versioned report. Throws
 * std::invalid_argument for an unknown or missing suite selection.
 */
Json run_instance(const InstanceFile & f, const RunOptions & options = {});

/// One row per suite, then the first failures of each.
std::string text_summary(const Json & report);

}  // namespace dblcat

#endif  // DBLCAT__RUNNER_HPP_
