// Copyright 2026 The dblcat Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <utility>
#include <vector>

#include "dblcat/compcon.hpp"
#include "dblcat/finset.hpp"
#include "dblcat/functor.hpp"
#include "dblcat/opdual.hpp"
#include "dblcat/spancospan.hpp"

using namespace dblcat;

namespace
{

FinSetMap map(int src, int tgt, std::vector<int> t)
{
  FinSetMap f{FinSet{src}, FinSet{tgt}, std::move(t)};
  validate(f);
  return f;
}

using SpanD = SpanDouble<FinSetCategory>;
using CospanD = CospanDouble<FinSetCategory>;

}  // namespace

TEST_CASE("supplied span and cospan partners bind and match a search") {
  SpanD s(FinSetCategory(2), 2);
  auto rs = verify_partners(s, {2, 0});
  CHECK(rs.ok());
  CHECK(rs.attempted > 100);

  CospanD c(FinSetCategory(2), 2);
  auto rc = verify_partners(c, {2, 0});
  CHECK(rc.ok());
}

TEST_CASE("every map of small sets has a companion and a conjoint in spans") {
  SpanD s(FinSetCategory(2), 2);
  auto found = find_companions(s, 2);
  // hom-sets among {0,1,2}: 1+1+1 + 0+1+2 + 0+1+4
  CHECK(found.morphisms.size() == 11);
  CHECK(found.complete());
}

TEST_CASE("horizontal opposite exchanges companions and conjoints") {
  HorizontalOp<SpanD> op(SpanD(FinSetCategory(2), 2));
  auto r = verify_partners(op, {2, 0}, false);
  CHECK(r.ok());
  auto f = map(2, 1, {0, 0});
  CHECK(op.companion(Opp<FinSetMap>{f}).companion == op.underlying().conjoint(f).conjoint);
}

TEST_CASE("a mismatched unit and counit fail the vertical identity") {
  SpanD s(FinSetCategory(2), 2);
  auto one = FinSet{1};
  auto id1 = identity_map(one);
  // apex 2 instead of 1: the horizontal identity holds, the vertical one cannot
  Span<FinSetMap> fat{map(2, 1, {0, 0}), map(2, 1, {0, 0})};
  CompanionData<SpanD> bad{id1, fat,
    {{id1, id1, s.vid(one), fat}, map(1, 2, {0})},
    {{id1, id1, fat, s.vid(one)}, map(2, 1, {0, 0})}};
  auto r = verify_companion(s, bad);
  CHECK_FALSE(r.ok());
  CHECK(r.failure_counts.contains("vertical-composite"));
  CHECK_FALSE(r.failure_counts.contains("horizontal-composite"));

  ConjointData<SpanD> bad_k{id1, fat,
    {{id1, id1, s.vid(one), fat}, map(1, 2, {1})},
    {{id1, id1, fat, s.vid(one)}, map(2, 1, {0, 0})}};
  CHECK(verify_conjoint(s, bad_k).failure_counts.contains("vertical-composite"));
}

TEST_CASE("flips are mutually inverse on spans and cospans") {
  SpanD s(FinSetCategory(2), 2);
  auto rs = verify_flips(s, {2, 20000});
  CHECK(rs.ok());
  CHECK(rs.facts.at("cells.tuples") > 1000);

  CospanD c(FinSetCategory(2), 2);
  auto rc = verify_flips(c, {2, 20000});
  CHECK(rc.ok());
}

TEST_CASE("a flipped span cell is the pairing into the pullback") {
  SpanD s(FinSetCategory(2), 2);
  const auto & base = s.base();
  auto g = map(2, 2, {1, 0});
  auto f = map(2, 1, {0, 0});
  Span<FinSetMap> m{map(2, 2, {0, 1}), map(2, 2, {0, 1})};
  Span<FinSetMap> n{map(2, 1, {0, 0}), map(2, 2, {1, 1})};
  auto h = map(2, 2, {1, 1});
  auto cells = s.cells({base.compose(f, g), h, m, n});
  REQUIRE_FALSE(cells.empty());
  auto c = s.companion(f);
  for (const auto & phi : cells) {
    auto psi = flip_companion(s, c, phi, g);
    // f_* ; n has apex {(p, q) : f(p) = n.left(q)}; psi must send a to (g(m.left a), phi(a))
    auto pb = base.pullback(f, n.left);
    for (int a = 0; a < 2; ++a) {
      int p = psi.witness(a);
      CHECK(pb.out0(p) == g(m.left(a)));
      CHECK(pb.out1(p) == phi.witness(a));
    }
  }
}

TEST_CASE("the induced functor on spans sends a cospan to its pullback span") {
  FinSetCategory base(3);
  SpanD s(base, 3);
  auto g = induced_G(s);
  auto c0 = map(2, 3, {0, 2});
  auto c1 = map(3, 3, {2, 2, 0});
  auto v = g.on_vmor({c0, c1});
  std::multiset<std::pair<int, int>> got;
  REQUIRE(v.left.src == v.right.src);
  for (int p = 0; p < v.left.src.size; ++p) {
    got.insert({v.left(p), v.right(p)});
  }
  std::multiset<std::pair<int, int>> expected;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 3; ++b) {
      if (c0(a) == c1(b)) {expected.insert({a, b});}
    }
  }
  CHECK(got == expected);
  CHECK(got.size() == 3);
}

TEST_CASE("the induced functor from cospans to spans is normal lax") {
  FinSetCategory base(2);
  CospanD src(base, 2);
  SpanD tgt(base, 4);
  auto g = induced_G(tgt);
  auto r = verify_functor_laws(src, tgt, g, FunctorKind::normal, {1, 20000});
  CHECK(r.ok());
  CHECK(r.attempted > 100);
  auto r2 = verify_functor_laws(src, tgt, g, FunctorKind::normal, {2, 3000});
  CHECK(r2.ok());
}

TEST_CASE("the induced functor into cospans is normal lax") {
  FinSetCategory base(2);
  CospanD src(base, 2);
  CospanD tgt(base, 4);
  auto g = induced_G(tgt);
  auto r = verify_functor_laws(src, tgt, g, FunctorKind::normal, {1, 20000});
  CHECK(r.ok());
}

TEST_CASE("partners read back from the induced functor bind") {
  FinSetCategory base(2);
  CospanD src(base, 2);
  SpanD tgt(base, 4);
  auto g = induced_G(tgt);
  for (int x = 0; x <= 2; ++x) {
    for (int y = 0; y <= 2; ++y) {
      for (const auto & f : base.hom(FinSet{x}, FinSet{y})) {
        auto p = partners_from_normal_lax(tgt, src, g, f);
        REQUIRE(p.companion.has_value());
        REQUIRE(p.conjoint.has_value());
        CHECK(verify_companion(tgt, *p.companion).ok());
        CHECK(verify_conjoint(tgt, *p.conjoint).ok());
        CHECK(find_globular_iso(tgt, p.companion->companion, tgt.companion(f).companion).has_value());
      }
    }
  }
}
