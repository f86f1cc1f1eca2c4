// Copyright 2026 The dblcat Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <vector>

#include "dblcat/coherence.hpp"
#include "dblcat/compcon.hpp"
#include "dblcat/cotab.hpp"
#include "dblcat/finset.hpp"
#include "dblcat/fintop.hpp"
#include "dblcat/poset.hpp"
#include "dblcat/spancospan.hpp"

using namespace dblcat;

namespace
{

// Counts order-preserving functions by trying every table.
std::size_t count_monotone(const Preorder & x, const Preorder & y)
{
  if (y.size == 0) {
    return x.size == 0 ? 1 : 0;
  }
  std::size_t total = 0;
  std::vector<int> t(static_cast<std::size_t>(x.size), 0);
  while (true) {
    bool ok = true;
    for (int a = 0; a < x.size && ok; ++a) {
      for (int b = 0; b < x.size && ok; ++b) {
        ok = !x.le(a, b) || y.le(t[a], t[b]);
      }
    }
    total += ok ? 1 : 0;
    int i = 0;
    while (i < x.size && ++t[i] == y.size) {
      t[i++] = 0;
    }
    if (i == x.size) {
      return total;
    }
  }
}

bool subset(std::uint32_t a, std::uint32_t b) {return (a & ~b) == 0;}

std::uint32_t preimage(const ContinuousMap & f, std::uint32_t v)
{
  std::uint32_t out = 0;
  for (int i = 0; i < f.src.size; ++i) {
    if (v & (1u << f(i))) {out |= 1u << i;}
  }
  return out;
}

}  // namespace

TEST_CASE("catalogs hold one object per isomorphism class") {
  CHECK(FinPosCategory(3).objects().size() == 9);
  CHECK(FinTopCategory(2).objects().size() == 5);
  CHECK(preorders_up_to_iso(3, false).size() == 9);
  CHECK(preorders_up_to_iso(4, true).size() == 16);
}

TEST_CASE("monotone maps match a brute-force count") {
  FinPosCategory c(3);
  for (const auto & x : c.objects()) {
    for (const auto & y : c.objects()) {
      CHECK(c.hom(x, y).size() == count_monotone(x, y));
    }
  }
  FinTopCategory t(2);
  for (const auto & x : t.objects()) {
    for (const auto & y : t.objects()) {
      std::size_t brute = 0;
      for (const auto & f : t.hom(x, y)) {
        bool cont = true;
        for (auto v : y.opens) {
          cont = cont && x.is_open(preimage(f, v));
        }
        brute += cont ? 1 : 0;
      }
      CHECK(brute == t.hom(x, y).size());
    }
  }
}

TEST_CASE("poset pushouts and pullbacks are universal against the catalog") {
  FinPosCategory c(2);
  const auto & objs = c.objects();
  for (const auto & a : objs) {
    for (const auto & x : objs) {
      for (const auto & y : objs) {
        for (const auto & f : c.hom(a, x)) {
          for (const auto & g : c.hom(a, y)) {
            auto po = c.pushout(f, g);
            REQUIRE(c.compose(po.in0, f) == c.compose(po.in1, g));
            for (const auto & w : objs) {
              for (const auto & q0 : c.hom(x, w)) {
                for (const auto & q1 : c.hom(y, w)) {
                  if (!(c.compose(q0, f) == c.compose(q1, g))) {continue;}
                  int mediating = 0;
                  for (const auto & h : c.hom(po.apex, w)) {
                    if (c.compose(h, po.in0) == q0 && c.compose(h, po.in1) == q1) {++mediating;}
                  }
                  CHECK(mediating == 1);
                }
              }
            }
          }
        }
      }
    }
  }
  for (const auto & x : objs) {
    for (const auto & y : objs) {
      for (const auto & b : objs) {
        for (const auto & f : c.hom(x, b)) {
          for (const auto & g : c.hom(y, b)) {
            auto pb = c.pullback(f, g);
            for (const auto & w : objs) {
              for (const auto & q0 : c.hom(w, x)) {
                for (const auto & q1 : c.hom(w, y)) {
                  if (!(c.compose(f, q0) == c.compose(g, q1))) {continue;}
                  int mediating = 0;
                  for (const auto & h : c.hom(w, pb.apex)) {
                    if (c.compose(pb.out0, h) == q0 && c.compose(pb.out1, h) == q1) {++mediating;}
                  }
                  CHECK(mediating == 1);
                }
              }
            }
          }
        }
      }
    }
  }
}

TEST_CASE("poset cell predicate matches the pairwise condition") {
  PosDouble d(FinPosCategory(2));
  const auto & c = d.base();
  std::size_t seen = 0;
  for (const auto & x0 : c.objects()) {
    for (const auto & x1 : c.objects()) {
      for (const auto & y0 : c.objects()) {
        for (const auto & y1 : c.objects()) {
          for (const auto & m : d.vmors(x0, x1)) {
            for (const auto & n : d.vmors(y0, y1)) {
              for (const auto & f0 : c.hom(x0, y0)) {
                for (const auto & f1 : c.hom(x1, y1)) {
                  bool expected = true;
                  for (int a = 0; a < x0.size; ++a) {
                    for (int b = 0; b < x1.size; ++b) {
                      expected = expected && (!m.has(a, b) || n.has(f0(a), f1(b)));
                    }
                  }
                  CHECK(d.cells({f0, f1, m, n}).size() == (expected ? 1u : 0u));
                  ++seen;
                }
              }
            }
          }
        }
      }
    }
  }
  CHECK(seen > 1000);
}

TEST_CASE("open-map cells over identities compare images pointwise") {
  TopDouble d(FinTopCategory(2));
  auto s = sierpinski_space();
  auto id = d.base().identity(s);
  auto maps = d.vmors(s, s);
  CHECK(maps.size() == all_open_maps(s, s).size());
  for (const auto & m : maps) {
    for (const auto & n : maps) {
      bool below = true;
      for (auto v : s.opens) {
        below = below && subset(n(v), m(v));
      }
      CHECK(d.cells({id, id, m, n}).empty() == !below);
    }
  }
}

TEST_CASE("space companions are the largest open with preimage inside") {
  TopDouble d(FinTopCategory(2));
  const auto & c = d.base();
  for (const auto & x : c.objects()) {
    for (const auto & y : c.objects()) {
      for (const auto & f : c.hom(x, y)) {
        auto fs = d.companion(f).companion;
        for (auto u : x.opens) {
          std::uint32_t largest = 0;
          for (auto v : y.opens) {
            if (subset(preimage(f, v), u)) {largest |= v;}
          }
          CHECK(fs(u) == largest);
        }
        auto fk = d.conjoint(f).conjoint;
        for (auto v : y.opens) {
          CHECK(fk(v) == preimage(f, v));
        }
      }
    }
  }
}

TEST_CASE("poset and space partners bind and agree with a search") {
  PosDouble p(FinPosCategory(3));
  auto rp = verify_partners(p, {3, 0});
  CHECK(rp.ok());
  CHECK_FALSE(rp.truncated);
  TopDouble t(FinTopCategory(2));
  auto rt = verify_partners(t, {2, 0});
  CHECK(rt.ok());
}

TEST_CASE("poset and space flips are mutually inverse") {
  PosDouble p(FinPosCategory(2));
  auto rp = verify_flips(p, {2, 20000});
  CHECK(rp.ok());
  CHECK(rp.attempted > 0);
  TopDouble t(FinTopCategory(2));
  auto rt = verify_flips(t, {1, 0});
  CHECK(rt.ok());
  CHECK_FALSE(rt.truncated);
}

TEST_CASE("poset and space coherence") {
  PosDouble p(FinPosCategory(2));
  CHECK(verify_coherence(p, {2, 5000}).ok());
  TopDouble t(FinTopCategory(2));
  CHECK(verify_coherence(t, {1, 0}).ok());
}

TEST_CASE("collage of the empty and the full ideal") {
  PosDouble d(FinPosCategory(1));
  auto one = discrete_preorder(1);
  auto ideals = d.vmors(one, one);
  REQUIRE(ideals.size() == 2);
  for (const auto & m : ideals) {
    auto g = d.cotabulator(m).gamma;
    CHECK(g == (m.has(0, 0) ? chain_preorder(2) : discrete_preorder(2)));
  }
}

TEST_CASE("glueing a point onto a point along the identity gives Sierpinski space") {
  TopDouble d(FinTopCategory(1));
  auto one = d.base().terminal();
  auto g = d.cotabulator(d.vid(one)).gamma;
  CHECK(g == sierpinski_space());
}

TEST_CASE("poset and space cotabulators and tabulators are universal") {
  PosDouble p(FinPosCategory(2));
  CHECK(verify_cotabulators(p, {2, 0}).ok());
  CHECK(verify_tabulators(p, {2, 0}).ok());
  TopDouble t(FinTopCategory(2));
  CHECK(verify_cotabulators(t, {2, 0}).ok());
  CHECK(verify_tabulators(t, {2, 0}).ok());
}

TEST_CASE("span and cospan cotabulators and tabulators are universal") {
  SpanDouble<FinSetCategory> s(FinSetCategory(2), 2);
  CHECK(verify_cotabulators(s, {2, 0}).ok());
  CHECK(verify_tabulators(s, {2, 0}).ok());
  CospanDouble<FinSetCategory> c(FinSetCategory(2), 2);
  CHECK(verify_cotabulators(c, {2, 0}).ok());
  CHECK(verify_tabulators(c, {2, 0}).ok());
}

TEST_CASE("poset tabulator is the set of related pairs") {
  PosDouble d(FinPosCategory(2));
  Enumeration<PosDouble> e(d, 2);
  for (const auto & m : e.vmors()) {
    auto t = d.tabulator(m);
    int pairs = 0;
    for (int a = 0; a < m.src.size; ++a) {
      for (int b = 0; b < m.tgt.size; ++b) {
        pairs += m.has(a, b) ? 1 : 0;
      }
    }
    CHECK(t.sigma.size == pairs);
  }
}

TEST_CASE("a pair of maps factors through the space tabulator iso f1^-1 m lies inside f0^-1") {
  TopDouble d(FinTopCategory(2));
  const auto & c = d.base();
  Enumeration<TopDouble> e(d, 2);
  std::size_t pairs = 0;
  for (const auto & m : e.vmors()) {
    auto t = d.tabulator(m);
    for (const auto & y : c.objects()) {
      for (const auto & f0 : c.hom(y, m.src)) {
        for (const auto & f1 : c.hom(y, m.tgt)) {
          bool criterion = true;
          for (auto u : m.src.opens) {
            criterion = criterion && subset(preimage(f1, m(u)), preimage(f0, u));
          }
          bool factors = false;
          for (const auto & h : c.hom(y, t.sigma)) {
            factors = factors ||
              (c.compose(t.tau.frame.top, h) == f0 && c.compose(t.tau.frame.bottom, h) == f1);
          }
          CHECK(factors == criterion);
          ++pairs;
        }
      }
    }
  }
  CHECK(pairs > 1000);
}

TEST_CASE("cotabulators are left adjoint and tabulators right adjoint to the diagonal") {
  PosDouble p(FinPosCategory(2));
  CHECK(check_gamma_delta_adjunction(p, {2, 5000}).ok());
  CHECK(check_delta_sigma_adjunction(p, {2, 5000}).ok());
  TopDouble t(FinTopCategory(2));
  CHECK(check_gamma_delta_adjunction(t, {2, 5000}).ok());
  CHECK(check_delta_sigma_adjunction(t, {2, 5000}).ok());
}

TEST_CASE("the object 2 is the two-chain and Sierpinski space") {
  PosDouble p(FinPosCategory(1));
  CHECK(two_object(p).gamma == chain_preorder(2));
  TopDouble t(FinTopCategory(1));
  auto two = two_object(t).gamma;
  CHECK(two == sierpinski_space());
  FinTopCategory c(2);
  for (const auto & y : c.objects()) {
    CHECK(c.hom(y, two).size() == y.opens.size());
  }
}

TEST_CASE("posets and spaces have 2-glueing") {
  PosDouble p(FinPosCategory(2));
  auto rp = verify_2glueing(p, {2, 0});
  CHECK(rp.ok());
  CHECK(rp.facts.at("two_size") == 2);
  TopDouble t(FinTopCategory(2));
  CHECK(verify_2glueing(t, {2, 0}).ok());
}

TEST_CASE("spans do not have 2-glueing: the object 2 is a point") {
  SpanDouble<FinSetCategory> s(FinSetCategory(2), 2);
  auto r = verify_2glueing(s, {2, 0});
  CHECK_FALSE(r.ok());
  CHECK(r.facts.at("two_size") == 1);
  CHECK(r.failure_counts.contains("faithful"));
  CHECK_FALSE(r.failure_counts.contains("essentially-surjective"));
}

TEST_CASE("tabulators from the exponential agree with the direct ones") {
  PosDouble p(FinPosCategory(2));
  CHECK(verify_sigma_from_exponential(p, {2, 0}).ok());
  TopDouble t(FinTopCategory(2));
  CHECK(verify_sigma_from_exponential(t, {2, 0}).ok());
}

TEST_CASE("collage and glued cotabulators are strong") {
  PosDouble p(FinPosCategory(2));
  Enumeration<PosDouble> ep(p, 2);
  for (const auto & m : ep.vmors()) {
    auto r = check_strong(p, p.cotabulator(m), {2, 0});
    CHECK(r.ok());
    CHECK(r.facts.at("strong") == true);
  }
  TopDouble t(FinTopCategory(2));
  Enumeration<TopDouble> et(t, 1);
  for (const auto & m : et.vmors()) {
    auto r = check_strong(t, t.cotabulator(m), {2, 0});
    CHECK(r.ok());
    CHECK(r.facts.at("strong") == true);
  }
}

TEST_CASE("malformed instance data is rejected by name") {
  CHECK_THROWS_WITH_AS(validate_preorder(generated_preorder(2, {{0, 1}, {1, 0}}), true),
    doctest::Contains("antisymmetry"), BoundaryError);
  CHECK_THROWS_AS(make_space(2, {0b01, 0b10}), BoundaryError);
  OrderIdeal bad{chain_preorder(2), discrete_preorder(1), {0, 1}};
  CHECK_THROWS_AS(validate(bad), BoundaryError);
}
