// Copyright 2026 The dblcat Authors
// SPDX-License-Identifier: Apache-2.0

#include "dblcat/report.hpp"

namespace dblcat
{

Json to_json(const Report & r, bool include_time)
{
  Json failures = Json::array();
  for (const auto & f : r.failures) {
    failures.push_back(Json{{"check", f.check}, {"witness", f.witness}});
  }
  Json counts = Json::object();
  for (const auto & [k, n] : r.failure_counts) {
    counts[k] = n;
  }
  Json facts = Json::object();
  for (const auto & [k, v] : r.facts) {
    facts[k] = v;
  }
  Json j{
    {"suite", r.suite},
    {"attempted", r.attempted},
    {"passed", r.passed},
    {"failed", r.failed_total},
    {"failure_counts", counts},
    {"failures", failures},
    {"truncated", r.truncated},
    {"truncated_count", r.truncated_count},
    {"facts", facts}};
  if (include_time) {
    j["wall_ms"] = r.wall_ms;
  }
  return j;
}

}  // namespace dblcat
