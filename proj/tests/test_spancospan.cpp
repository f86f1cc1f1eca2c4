// Copyright 2026 The dblcat Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "dblcat/finset.hpp"
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

// Counts triples (f0, f, f1) of maps making both span squares commute,
// without going through the cell enumerator.
int count_span_triples(const Span<FinSetMap> & m, const Span<FinSetMap> & n)
{
  int count = 0;
  for (const auto & f0 : all_maps(m.left.tgt, n.left.tgt)) {
    for (const auto & f1 : all_maps(m.right.tgt, n.right.tgt)) {
      for (const auto & f : all_maps(m.left.src, n.left.src)) {
        bool ok = true;
        for (int a = 0; a < m.left.src.size && ok; ++a) {
          ok = n.left(f(a)) == f0(m.left(a)) && n.right(f(a)) == f1(m.right(a));
        }
        count += ok;
      }
    }
  }
  return count;
}

}  // namespace

TEST_CASE("span identity composite is unitor-isomorphic to the identity") {
  SpanDouble<FinSetCategory> d(FinSetCategory(2), 2);
  auto id = d.vid(FinSet{2});
  auto c = d.vcomp(id, id);
  CHECK(d.apex(c).size == 2);
  auto l = d.left_unitor(id);
  CHECK(l.cell.frame.left == c);
  CHECK(d.paste_horizontal(l.cell, l.inverse) == d.hidentity(c));
  CHECK(d.paste_horizontal(l.inverse, l.cell) == d.hidentity(id));
}

TEST_CASE("span composite of constant legs has a one-point apex") {
  SpanDouble<FinSetCategory> d(FinSetCategory(2), 2);
  Span<FinSetMap> m{map(1, 2, {0}), map(1, 2, {0})};
  auto c = d.vcomp(m, m);
  CHECK(d.apex(c).size == 1);
  CHECK(d.apex(c).size == pullback_finset(m.right, m.left).apex.size);
}

TEST_CASE("span cell enumeration matches the commuting-triple count") {
  SpanDouble<FinSetCategory> d(FinSetCategory(2), 2);
  auto vs = d.vmors(FinSet{1}, FinSet{2});
  std::size_t frames = 0;
  for (const auto & m : vs) {
    for (const auto & n : d.vmors(FinSet{2}, FinSet{1})) {
      std::size_t enumerated = cells_between(d, m, n).size();
      CHECK(enumerated == static_cast<std::size_t>(count_span_triples(m, n)));
      ++frames;
    }
  }
  CHECK(frames > 0);
}

TEST_CASE("horizontal pasting composes the apex maps") {
  SpanDouble<FinSetCategory> d(FinSetCategory(2), 2);
  Span<FinSetMap> m{map(2, 2, {0, 1}), map(2, 1, {0, 0})};
  for (const auto & a : cells_between(d, m, m)) {
    for (const auto & b : cells_between(d, m, m)) {
      auto c = hcompose(d, a, b);
      CHECK(c.witness == compose(b.witness, a.witness));
      CHECK(d.commutes(c.frame, c.witness));
    }
  }
}

TEST_CASE("vertical pasting gives the unique mediating map on pullbacks") {
  SpanDouble<FinSetCategory> d(FinSetCategory(2), 2);
  auto vs = d.vmors(FinSet{1}, FinSet{2});
  auto ws = d.vmors(FinSet{2}, FinSet{1});
  int checked = 0;
  for (const auto & m : vs) {
    for (const auto & m2 : ws) {
      auto top_cells = cells_between(d, m, m);
      auto bot_cells = cells_between(d, m2, m2);
      for (const auto & a : top_cells) {
        for (const auto & b : bot_cells) {
          if (!(a.frame.bottom == b.frame.top)) {continue;}
          auto c = vcompose(d, a, b);
          auto pl = pullback_finset(m.right, m2.left);
          auto pr = pullback_finset(m.right, m2.left);
          int mediating = 0;
          for (const auto & h : all_maps(pl.apex, pr.apex)) {
            if (compose(pr.out0, h) == compose(a.witness, pl.out0) &&
              compose(pr.out1, h) == compose(b.witness, pl.out1))
            {
              ++mediating;
              CHECK(h == c.witness);
            }
          }
          CHECK(mediating == 1);
          ++checked;
        }
      }
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("span associator is the unique apex bijection over the three component apexes") {
  SpanDouble<FinSetCategory> d(FinSetCategory(2), 2);
  Span<FinSetMap> m1{map(2, 1, {0, 0}), map(2, 2, {0, 1})};
  Span<FinSetMap> m2{map(2, 2, {1, 1}), map(2, 2, {0, 1})};
  Span<FinSetMap> m3{map(2, 2, {1, 0}), map(2, 1, {0, 0})};
  auto a = d.associator(m1, m2, m3);
  const auto & lhs = a.cell.frame.left;
  const auto & rhs = a.cell.frame.right;

  // projections of each bracketing onto the apexes of m1, m2, m3
  auto p12 = pullback_finset(m1.right, m2.left);
  auto pl = pullback_finset(compose(m2.right, p12.out1), m3.left);
  std::vector<FinSetMap> lproj{compose(p12.out0, pl.out0), compose(p12.out1, pl.out0), pl.out1};
  auto p23 = pullback_finset(m2.right, m3.left);
  auto pr = pullback_finset(m1.right, compose(m2.left, p23.out0));
  std::vector<FinSetMap> rproj{pr.out0, compose(p23.out0, pr.out1), compose(p23.out1, pr.out1)};

  int found = 0;
  for (const auto & h : all_maps(d.apex(lhs), d.apex(rhs))) {
    bool ok = is_bijection(h);
    for (int i = 0; i < 3 && ok; ++i) {
      ok = compose(rproj[static_cast<std::size_t>(i)], h) == lproj[static_cast<std::size_t>(i)];
    }
    if (ok) {
      ++found;
      CHECK(h == a.cell.witness);
    }
  }
  CHECK(found == 1);
  CHECK(d.commutes(a.cell.frame, a.cell.witness));
  CHECK(d.paste_horizontal(a.cell, a.inverse) == d.hidentity(lhs));
  CHECK(d.paste_horizontal(a.inverse, a.cell) == d.hidentity(rhs));
}

TEST_CASE("span companion and conjoint of a map to a point") {
  SpanDouble<FinSetCategory> d(FinSetCategory(2), 2);
  auto f = map(2, 1, {0, 0});
  auto c = d.companion(f);
  CHECK(c.companion.left == identity_map(FinSet{2}));
  CHECK(c.companion.right == f);
  CHECK(hcompose(d, c.eta, c.eps) == d.videntity(f));
  auto v = vcompose(d, c.eta, c.eps);
  auto l = d.left_unitor(c.companion);
  auto r = d.right_unitor(c.companion);
  CHECK(hcompose(d, {r.inverse, v, l.cell}) == d.hidentity(c.companion));

  auto k = d.conjoint(f);
  CHECK(hcompose(d, k.alpha, k.beta) == d.videntity(f));
  auto w = vcompose(d, k.beta, k.alpha);
  (void)w;
}

TEST_CASE("cospan companion has f as its left leg") {
  CospanDouble<FinSetCategory> d(FinSetCategory(2), 2);
  auto f = map(2, 1, {0, 0});
  auto c = d.companion(f);
  CHECK(c.companion.left == f);
  CHECK(c.companion.right == identity_map(FinSet{1}));
  CHECK(hcompose(d, c.eta, c.eps) == d.videntity(f));
  auto l = d.left_unitor(c.companion);
  auto r = d.right_unitor(c.companion);
  CHECK(hcompose(d, {r.inverse, vcompose(d, c.eta, c.eps), l.cell}) == d.hidentity(c.companion));
}

TEST_CASE("boundary mismatches are rejected") {
  SpanDouble<FinSetCategory> d(FinSetCategory(2), 2);
  auto a = d.videntity(map(1, 2, {0}));
  auto b = d.videntity(map(2, 1, {0, 0}));
  CHECK_THROWS_AS(vcompose(d, a, b), BoundaryError);
  CHECK_THROWS_AS(d.vcomp(d.vid(FinSet{1}), d.vid(FinSet{2})), BoundaryError);
}
