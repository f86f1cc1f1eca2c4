// Copyright 2026 The dblcat Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef DBLCAT__REPORT_HPP_
#define DBLCAT__REPORT_HPP_

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace dblcat
{

using Json = nlohmann::ordered_json;

/// One failed check, with enough data to re-check it by hand.
struct Failure
{
  std::string check;
  Json witness;
};

/**
 * Outcome of a verification suite.
 *
 * Counts every attempted check; keeps the first `kMaxStoredFailures`
 * witnesses, plus the first witness of every other check name that fails.
 * `facts` holds named outcomes that are not pass/fail (e.g. "strong": false).
 */
struct Report
{
  static constexpr std::size_t kMaxStoredFailures = 16;

  std::string suite;
  std::size_t attempted = 0;
  std::size_t passed = 0;
  std::size_t failed_total = 0;
  std::vector<Failure> failures;
  std::map<std::string, std::size_t> failure_counts;
  bool truncated = false;
  std::size_t truncated_count = 0;
  std::map<std::string, Json> facts;
  double wall_ms = 0.0;

  Report() = default;
  explicit Report(std::string name)
  : suite(std::move(name)) {}

  bool ok() const {return failed_total == 0;}

  /// Records a check; `witness` is only invoked on failure.
  template <class WitnessFn>
  bool check(const std::string & name, bool condition, WitnessFn && witness)
  {
    ++attempted;
    if (condition) {
      ++passed;
      return true;
    }
    ++failed_total;
    if (failures.size() < kMaxStoredFailures || failure_counts[name] == 0) {
      failures.push_back({name, witness()});
    }
    ++failure_counts[name];
    return false;
  }

  bool check(const std::string & name, bool condition)
  {
    return check(name, condition, [] {return Json::object();});
  }

  void truncate(std::size_t n = 1)
  {
    truncated = true;
    truncated_count += n;
  }

  void fact(const std::string & key, Json value) {facts[key] = std::move(value);}

  /// Folds a sub-report in, prefixing its failure names.
  void absorb(const Report & other)
  {
    attempted += other.attempted;
    passed += other.passed;
    failed_total += other.failed_total;
    for (const auto & f : other.failures) {
      auto name = other.suite + "/" + f.check;
      if (failures.size() < kMaxStoredFailures || failure_counts[name] == 0) {
        failures.push_back({name, f.witness});
      }
    }
    for (const auto & [k, n] : other.failure_counts) {
      failure_counts[other.suite + "/" + k] += n;
    }
    if (other.truncated) {
      truncated = true;
      truncated_count += other.truncated_count;
    }
    for (const auto & [k, v] : other.facts) {
      facts[other.suite + "." + k] = v;
    }
  }

  /// Same counts and flags; ignores witnesses text and wall time.
  bool same_outcome(const Report & other) const
  {
    return attempted == other.attempted && passed == other.passed &&
           failed_total == other.failed_total && truncated == other.truncated &&
           truncated_count == other.truncated_count;
  }
};

Json to_json(const Report & r, bool include_time = true);

}  // namespace dblcat

#endif  // DBLCAT__REPORT_HPP_
