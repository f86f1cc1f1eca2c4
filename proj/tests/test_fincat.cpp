// Copyright 2026 The dblcat Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "dblcat/coherence.hpp"
#include "dblcat/compcon.hpp"
#include "dblcat/cotab.hpp"
#include "dblcat/fincat.hpp"

using namespace dblcat;

namespace
{

// Object and morphism tables tried exhaustively, filtered by validate.
std::size_t brute_force_functors(const FinCategory & x, const FinCategory & y)
{
  std::size_t count = 0;
  std::size_t total_o = 1;
  std::size_t total_m = 1;
  for (int i = 0; i < x.objects; ++i) {total_o *= static_cast<std::size_t>(y.objects);}
  for (int i = 0; i < x.morphisms(); ++i) {total_m *= static_cast<std::size_t>(y.morphisms());}
  for (std::size_t o = 0; o < total_o; ++o) {
    for (std::size_t mm = 0; mm < total_m; ++mm) {
      FinFunctor f{x, y, {}, {}};
      auto a = o;
      for (int i = 0; i < x.objects; ++i) {
        f.on_objects.push_back(static_cast<int>(a % static_cast<std::size_t>(y.objects)));
        a /= static_cast<std::size_t>(y.objects);
      }
      auto b = mm;
      for (int i = 0; i < x.morphisms(); ++i) {
        f.on_morphisms.push_back(static_cast<int>(b % static_cast<std::size_t>(y.morphisms())));
        b /= static_cast<std::size_t>(y.morphisms());
      }
      try {
        validate(f);
        ++count;
      } catch (const BoundaryError &) {
      }
    }
  }
  return count;
}

// Two commuting involutions on {0..s-1} up to relabelling: the Z/2-Z/2 bisets.
std::size_t biset_count(int max_size)
{
  std::size_t total = 0;
  for (int s = 0; s <= max_size; ++s) {
    std::vector<std::vector<int>> maps;
    std::vector<int> f(static_cast<std::size_t>(s), 0);
    while (true) {
      bool inv = true;
      for (int i = 0; i < s; ++i) {inv = inv && f[f[i]] == i;}
      if (inv) {maps.push_back(f);}
      int k = s - 1;
      while (k >= 0 && f[k] == s - 1) {f[k] = 0; --k;}
      if (k < 0) {break;}
      ++f[k];
    }
    std::set<std::pair<std::vector<int>, std::vector<int>>> classes;
    for (const auto & l : maps) {
      for (const auto & r : maps) {
        bool commute = true;
        for (int i = 0; i < s; ++i) {commute = commute && l[r[i]] == r[l[i]];}
        if (!commute) {continue;}
        std::vector<int> p(static_cast<std::size_t>(s));
        std::iota(p.begin(), p.end(), 0);
        std::pair<std::vector<int>, std::vector<int>> best{l, r};
        do {
          std::vector<int> l2(static_cast<std::size_t>(s)), r2(static_cast<std::size_t>(s));
          for (int i = 0; i < s; ++i) {
            l2[p[i]] = p[l[i]];
            r2[p[i]] = p[r[i]];
          }
          best = std::min(best, std::make_pair(l2, r2));
        } while (std::next_permutation(p.begin(), p.end()));
        classes.insert(best);
      }
    }
    total += classes.size();
  }
  return total;
}

// Orbits of A x B under (a . g, b) ~ (a, g . b) for the generator g.
int tensor_over_z2(const FinProfunctor & m, const FinProfunctor & n)
{
  const int a = m.elements();
  const int b = n.elements();
  std::vector<int> seen(static_cast<std::size_t>(a * b), 0);
  int orbits = 0;
  for (int start = 0; start < a * b; ++start) {
    if (seen[start]) {continue;}
    ++orbits;
    std::vector<int> stack{start};
    seen[start] = 1;
    while (!stack.empty()) {
      int p = stack.back();
      stack.pop_back();
      int e = p / b;
      int f = p % b;
      // the generator is morphism 1 of the involution monoid
      int q1 = m.right(1, e) * b + n.left(1, f);
      for (int q : {q1}) {
        if (!seen[q]) {seen[q] = 1; stack.push_back(q);}
      }
      // the relation is symmetric; the generator is its own inverse
    }
  }
  return orbits;
}

CatDouble small_cat()
{
  return CatDouble(FinCatCategory({discrete_category(1), arrow_category(), involution_monoid()}), 2);
}

}  // namespace

TEST_CASE("the standard categories are valid and distinct") {
  auto cats = standard_categories();
  CHECK(cats.size() == 6);
  for (std::size_t i = 0; i < cats.size(); ++i) {
    CHECK_NOTHROW(validate(cats[i]));
    for (std::size_t j = i + 1; j < cats.size(); ++j) {
      CHECK_FALSE(cats[i] == cats[j]);
    }
  }
}

TEST_CASE("functor enumeration matches exhaustive tables") {
  auto cats = standard_categories();
  for (const auto & x : cats) {
    for (const auto & y : cats) {
      CHECK(all_functors(x, y).size() == brute_force_functors(x, y));
    }
  }
  CHECK(all_functors(idempotent_monoid(), involution_monoid()).size() == 1);
  CHECK(all_functors(involution_monoid(), involution_monoid()).size() == 2);
  CHECK(all_functors(discrete_category(2), arrow_category()).size() == 4);
}

TEST_CASE("profunctors between groups of order two are bisets") {
  auto z2 = involution_monoid();
  auto ps = all_profunctors(z2, z2, 2);
  CHECK(ps.size() == biset_count(2));
  for (const auto & p : ps) {
    CHECK_NOTHROW(validate(p));
  }
}

TEST_CASE("composition of bisets is the tensor product") {
  auto z2 = involution_monoid();
  auto ps = all_profunctors(z2, z2, 2);
  for (const auto & m : ps) {
    for (const auto & n : ps) {
      auto c = coend(m, n);
      CHECK(c.composite.elements() == tensor_over_z2(m, n));
      CHECK_NOTHROW(validate(c.composite));
    }
  }
}

TEST_CASE("hom profunctors are units up to the unitors") {
  auto d = small_cat();
  for (const auto & x : d.objects()) {
    for (const auto & y : d.objects()) {
      for (const auto & m : d.vmors(x, y)) {
        auto l = d.left_unitor(m);
        CHECK(d.is_cell(l.cell.frame, l.cell.witness));
        CHECK(d.paste_horizontal(l.cell, l.inverse) == d.hidentity(l.cell.frame.left));
        auto r = d.right_unitor(m);
        CHECK(d.paste_horizontal(r.inverse, r.cell) == d.hidentity(m));
      }
    }
  }
}

TEST_CASE("cell enumeration agrees with the naturality predicate") {
  auto d = small_cat();
  auto z2 = involution_monoid();
  auto ps = d.vmors(z2, z2);
  auto id = d.base().identity(z2);
  for (const auto & m : ps) {
    for (const auto & n : ps) {
      Boundary<FinFunctor, FinProfunctor> b{id, id, m, n};
      std::size_t count = 0;
      std::vector<int> w(static_cast<std::size_t>(m.elements()), 0);
      while (true) {
        count += d.is_cell(b, ElementMap{w}) ? 1 : 0;
        int k = m.elements() - 1;
        while (k >= 0 && w[k] == n.elements() - 1) {w[k] = 0; --k;}
        if (k < 0 || n.elements() == 0) {break;}
        ++w[k];
      }
      if (n.elements() == 0 && m.elements() > 0) {count = 0;}
      CHECK(d.cells(b).size() == count);
    }
  }
}

TEST_CASE("Cat is coherent on small categories") {
  CatDouble monoids(FinCatCategory({discrete_category(1), involution_monoid()}), 2);
  auto r = verify_coherence(monoids, {1, 3000});
  CHECK(r.ok());
  CHECK(r.attempted > 100);
  CatDouble arrows(FinCatCategory({discrete_category(1), discrete_category(2), arrow_category()}), 1);
  CHECK(verify_coherence(arrows, {2, 3000}).ok());
}

TEST_CASE("companions and conjoints of functors") {
  auto d = small_cat();
  auto r = verify_partners(d, {2, 0});
  CHECK(r.ok());
  CHECK(r.attempted > 0);
  CHECK(verify_flips(d, {1, 2000}).ok());
}

TEST_CASE("the collage is a cotabulator") {
  auto d = small_cat();
  auto r = verify_cotabulators(d, {2, 0});
  CHECK(r.ok());
  auto t = d.objects().at(0);
  auto two = d.cotabulator(d.vid(t)).gamma;
  CHECK(two == arrow_category());
}

TEST_CASE("the category of elements is a tabulator") {
  auto d = small_cat();
  CHECK(verify_tabulators(d, {2, 0}).ok());
  auto one = discrete_category(1);
  auto two = make_profunctor(one, one, {0, 0}, {0, 0},
    [](int, int e) {return e;}, [](int, int e) {return e;});
  auto s = d.tabulator(two);
  CHECK(s.sigma == discrete_category(2));
  CHECK(verify_1tabulator(d, s, {2, 0}).ok());
}

TEST_CASE("hom-set bijections for Cat") {
  CatDouble d(FinCatCategory({discrete_category(1), arrow_category()}), 1);
  CHECK(check_gamma_delta_adjunction(d, {2, 0}).ok());
  CHECK(check_delta_sigma_adjunction(d, {2, 0}).ok());
}

TEST_CASE("Cat cotabulators are strong on small categories") {
  CatDouble d(FinCatCategory({discrete_category(1), discrete_category(2), arrow_category()}), 1);
  auto one = discrete_category(1);
  for (const auto & m : d.vmors(one, one)) {
    CHECK(check_strong(d, d.cotabulator(m), {2, 0}).ok());
  }
}

TEST_CASE("malformed categories and profunctors are rejected") {
  auto c = arrow_category();
  c.comp[0] = -1;
  CHECK_THROWS_AS(validate(c), BoundaryError);
  CHECK_THROWS_AS(make_category(1, {{0, 0}}, {{1, 1, 5}}), BoundaryError);
  auto z2 = involution_monoid();
  auto bad = make_profunctor(z2, z2, {0, 0}, {0, 0},
    [](int u, int e) {return u == 1 ? 0 : e;}, [](int, int e) {return e;});
  CHECK_THROWS_AS(validate(bad), BoundaryError);
}
