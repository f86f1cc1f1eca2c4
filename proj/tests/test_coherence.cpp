// Copyright 2026 The dblcat Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "dblcat/coherence.hpp"
#include "dblcat/finset.hpp"
#include "dblcat/opdual.hpp"
#include "dblcat/spancospan.hpp"
#include "fixtures.hpp"

using namespace dblcat;

namespace
{

FinSetMap map(int src, int tgt, std::vector<int> t)
{
  FinSetMap f{FinSet{src}, FinSet{tgt}, std::move(t)};
  validate(f);
  return f;
}

bool has_witness(const Report & r, const std::string & name)
{
  for (const auto & f : r.failures) {
    if (f.check == name) {return !f.witness.empty();}
  }
  return false;
}

}  // namespace

TEST_CASE("span coherence on one-point objects with apexes up to two") {
  SpanDouble<FinSetCategory> d(FinSetCategory(2), 2);
  auto r = verify_coherence(d, {1, 0});
  CHECK(r.ok());
  CHECK(r.attempted > 1000);
  CHECK_FALSE(r.facts.contains("pentagon.budget_exhausted"));
}

TEST_CASE("cospan coherence on one-point objects with apexes up to two") {
  CospanDouble<FinSetCategory> d(FinSetCategory(2), 2);
  auto r = verify_coherence(d, {1, 0});
  CHECK(r.ok());
  CHECK(r.attempted > 1000);
}

TEST_CASE("span coherence on sets of size two with apexes up to one") {
  SpanDouble<FinSetCategory> d(FinSetCategory(2), 1);
  auto r = verify_coherence(d, {2, 200000});
  CHECK(r.ok());
  CHECK(r.facts.at("pentagon.tuples") == 6444);
  CHECK(r.facts.at("associator.tuples") == 900);
}

TEST_CASE("horizontal opposite of spans is coherent") {
  HorizontalOp<SpanDouble<FinSetCategory>> d(SpanDouble<FinSetCategory>(FinSetCategory(2), 2));
  auto r = verify_coherence(d, {1, 0});
  CHECK(r.ok());
}

TEST_CASE("composites over the bound are counted, not checked") {
  SpanDouble<FinSetCategory> d(FinSetCategory(2), 2);
  auto r = verify_coherence(d, {2, 2000});
  CHECK(r.ok());
  CHECK(r.truncated);
  CHECK(r.facts.contains("pentagon.over_bound"));
}

TEST_CASE("strict vertical identities: identity associator on identity spans") {
  SpanDouble<FinSetCategory> d(FinSetCategory(2), 2);
  auto id = d.vid(FinSet{2});
  auto a = d.associator(id, id, id);
  CHECK(a.cell == d.hidentity(id));
}

TEST_CASE("twisted associator is rejected with a pentagon witness") {
  using Base = SpanDouble<FinSetCategory>;
  Base d(FinSetCategory(4), 4);
  Span<FinSetMap> m{map(2, 1, {0, 0}), map(2, 1, {0, 0})};
  auto swap = map(2, 2, {1, 0});
  Base::Cell twist{globular_frame(d, m, m), swap};
  REQUIRE(d.commutes(twist.frame, twist.witness));
  testing::TwistedAssociator<Base> bad(d, m, twist, twist);

  auto r = verify_coherence(bad, {1, 20000});
  CHECK_FALSE(r.ok());
  CHECK(r.failure_counts["pentagon"] > 0);
  CHECK(has_witness(r, "pentagon"));
  for (const auto & f : r.failures) {
    CHECK_FALSE(f.witness.empty());
  }
}
