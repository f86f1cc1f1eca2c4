// Copyright 2026 The dblcat Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <optional>

#include "dblcat/adjunction.hpp"
#include "dblcat/coherence.hpp"
#include "dblcat/finset.hpp"
#include "dblcat/poset.hpp"
#include "fixtures.hpp"

using namespace dblcat;
using dblcat::testing::FlipDouble;
using dblcat::testing::NonemptyFinSetCategory;

TEST_CASE("a horizontal morphism without companion or conjoint") {
  FlipDouble d;
  CHECK(verify_coherence(d).ok());
  CHECK(find_companion(d, testing::Flip{false}).has_value());
  CHECK(find_conjoint(d, testing::Flip{false}).has_value());
  CHECK_FALSE(find_companion(d, testing::Flip{true}).has_value());
  CHECK_FALSE(find_conjoint(d, testing::Flip{true}).has_value());
  auto search = find_companions(d);
  CHECK_FALSE(search.complete());
}

TEST_CASE("without pullbacks only the cospan side is checked") {
  using D = CospanDouble<NonemptyFinSetCategory>;
  D d(NonemptyFinSetCategory(2), 2);
  static_assert(!HasTabulators<D>);
  auto r = theorem_suite(d, {2, 2000});
  CHECK(r.ok());
  CHECK(r.facts.at("span_side") == "unavailable");
  CHECK(r.attempted > 0);
}

TEST_CASE("a cotabulator with the wrong apex is rejected") {
  PosDouble d(FinPosCategory(2));
  auto one = discrete_preorder(1);
  auto empty = OrderIdeal{one, one, {false}};
  auto good = d.cotabulator(empty);
  CHECK(verify_1cotabulator(d, good, {2, 0}).ok());

  auto chain = chain_preorder(2);
  CotabulatorData<PosDouble> bad{empty, chain, {}};
  bad.iota = d.cells({MonotoneMap{one, chain, {0}}, MonotoneMap{one, chain, {1}}, empty, d.vid(chain)}).at(0);
  auto r = verify_1cotabulator(d, bad, {2, 0});
  CHECK_FALSE(r.ok());
  REQUIRE_FALSE(r.failures.empty());
  CHECK_FALSE(r.failures.front().witness.is_null());
}

TEST_CASE("a counit from a different cell breaks a triangle identity") {
  using D = CospanDouble<FinSetCategory>;
  D d(FinSetCategory(2), 2);
  auto a = build_adjunction(d);
  Enumeration<D> e(d, 2);
  std::optional<D::VMor> target;
  std::optional<D::Cell> other;
  for (const auto & c : e.vmors()) {
    auto good = a.eps(c);
    for (const auto & cell : d.cells(good.frame)) {
      if (!(cell == good)) {
        target = c;
        other = cell;
        break;
      }
    }
    if (other) {break;}
  }
  REQUIRE(other.has_value());
  auto eps = a.eps;
  a.eps = [eps, target, other](const D::VMor & c) {
      return c == *target ? *other : eps(c);
    };
  auto r = verify_adjunction(d, a, {2, 0});
  CHECK_FALSE(r.ok());
  REQUIRE_FALSE(r.failures.empty());
  CHECK_FALSE(r.failures.front().witness.is_null());
}
