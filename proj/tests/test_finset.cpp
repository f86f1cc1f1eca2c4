// Copyright 2026 The dblcat Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <vector>

#include "dblcat/finset.hpp"

using namespace dblcat;

namespace
{

FinSetMap map(int src, int tgt, std::vector<int> t)
{
  FinSetMap f{FinSet{src}, FinSet{tgt}, std::move(t)};
  validate(f);
  return f;
}

// Connected components of the bipartite graph on tgt(f) + tgt(g), by DFS.
int component_count(const FinSetMap & f, const FinSetMap & g)
{
  int n = f.tgt.size + g.tgt.size;
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (int a = 0; a < f.src.size; ++a) {
    adj[static_cast<std::size_t>(f(a))].push_back(f.tgt.size + g(a));
    adj[static_cast<std::size_t>(f.tgt.size + g(a))].push_back(f(a));
  }
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  int comps = 0;
  for (int s = 0; s < n; ++s) {
    if (seen[static_cast<std::size_t>(s)]) {continue;}
    ++comps;
    std::vector<int> stack{s};
    seen[static_cast<std::size_t>(s)] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[static_cast<std::size_t>(v)]) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = true;
          stack.push_back(w);
        }
      }
    }
  }
  return comps;
}

}  // namespace

TEST_CASE("pushout along identities") {
  auto id = identity_map(FinSet{2});
  auto p = pushout_finset(id, id);
  CHECK(p.apex.size == 2);
  CHECK(p.in0 == id);
  CHECK(p.in1 == id);
}

TEST_CASE("pushout of two points glued at one") {
  auto f = map(1, 2, {0});
  auto p = pushout_finset(f, f);
  CHECK(p.apex.size == 3);
  CHECK(p.apex.size == component_count(f, f));
  CHECK(verify_pushout_universal(f, f, p, 3).ok());
}

TEST_CASE("pushout over the empty set is the coproduct") {
  auto e = map(0, 2, {});
  auto p = pushout_finset(e, e);
  CHECK(p.apex.size == 4);
  CHECK(p.in0.table == std::vector<int>{0, 1});
  CHECK(p.in1.table == std::vector<int>{2, 3});
}

TEST_CASE("pushout size matches component count for all maps into size 2") {
  for (int a = 0; a <= 2; ++a) {
    for (const auto & f : all_maps(FinSet{a}, FinSet{2})) {
      for (const auto & g : all_maps(FinSet{a}, FinSet{2})) {
        auto p = pushout_finset(f, g);
        CHECK(p.apex.size == component_count(f, g));
        CHECK(verify_pushout_universal(f, g, p, 3).ok());
        CHECK(pushout_finset(f, g) == p);
      }
    }
  }
}

TEST_CASE("pullback along identities is the diagonal") {
  auto id = identity_map(FinSet{3});
  auto p = pullback_finset(id, id);
  CHECK(p.apex.size == 3);
  CHECK(p.out0 == id);
  CHECK(p.out1 == id);
}

TEST_CASE("pullback over a point is the product") {
  auto f = map(2, 1, {0, 0});
  auto p = pullback_finset(f, f);
  CHECK(p.apex.size == 4);
  CHECK(p.out0.table == std::vector<int>{0, 0, 1, 1});
  CHECK(p.out1.table == std::vector<int>{0, 1, 0, 1});
  CHECK(verify_pullback_universal(f, f, p, 2).ok());
}

TEST_CASE("pullback of an identity against g is the graph of g") {
  for (const auto & g : all_maps(FinSet{3}, FinSet{2})) {
    auto p = pullback_finset(identity_map(FinSet{2}), g);
    REQUIRE(p.apex.size == 3);
    std::set<std::pair<int, int>> graph, got;
    for (int c = 0; c < 3; ++c) {
      graph.insert({g(c), c});
      got.insert({p.out0(c), p.out1(c)});
    }
    CHECK(graph == got);
    CHECK(verify_pullback_universal(identity_map(FinSet{2}), g, p, 2).ok());
  }
}

TEST_CASE("verifiers reject a non-universal cocone") {
  auto f = map(1, 2, {0});
  auto p = pushout_finset(f, f);
  Cocone<FinSet, FinSetMap> bad{FinSet{4}, map(2, 4, {0, 1}), map(2, 4, {0, 2})};
  CHECK(compose(bad.in0, f) == compose(bad.in1, f));
  CHECK_FALSE(verify_pushout_universal(f, f, bad, 2).ok());
  CHECK(p.apex.size == 3);
}

TEST_CASE("all_maps counts") {
  CHECK(all_maps(FinSet{0}, FinSet{0}).size() == 1);
  CHECK(all_maps(FinSet{2}, FinSet{0}).empty());
  CHECK(all_maps(FinSet{3}, FinSet{2}).size() == 8);
  CHECK_THROWS_AS(validate(FinSetMap{FinSet{1}, FinSet{1}, {1}}), BoundaryError);
  CHECK_THROWS_AS(pushout_finset(map(1, 1, {0}), map(2, 1, {0, 0})), BoundaryError);
}
