// Copyright 2026 The dblcat Authors
// SPDX-License-Identifier: Apache-2.0

#include "dblcat/fincat.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <tuple>

namespace dblcat
{

// ---------------------------------------------------------------------------
// Categories.

std::vector<int> FinCategory::hom(int a, int b) const
{
  std::vector<int> out;
  for (int i = 0; i < morphisms(); ++i) {
    if (src[i] == a && tgt[i] == b) {out.push_back(i);}
  }
  return out;
}

void to_json(Json & j, const FinCategory & c)
{
  Json arrows = Json::array();
  for (int i = 0; i < c.morphisms(); ++i) {
    arrows.push_back(Json::array({c.src[i], c.tgt[i]}));
  }
  j = Json{{"objects", c.objects}, {"morphisms", arrows}, {"ids", c.ids}, {"comp", c.comp}};
}

void validate(const FinCategory & c)
{
  const int n = c.morphisms();
  if (c.tgt.size() != c.src.size() || c.ids.size() != static_cast<std::size_t>(c.objects) ||
    c.comp.size() != static_cast<std::size_t>(n * n))
  {
    throw BoundaryError("category: table sizes do not match");
  }
  for (int i = 0; i < n; ++i) {
    if (c.src[i] < 0 || c.src[i] >= c.objects || c.tgt[i] < 0 || c.tgt[i] >= c.objects) {
      throw BoundaryError("category: morphism endpoint out of range");
    }
  }
  for (int a = 0; a < c.objects; ++a) {
    const int id = c.ids[a];
    if (id < 0 || id >= n || c.src[id] != a || c.tgt[id] != a) {
      throw BoundaryError("category: identity has the wrong endpoints");
    }
  }
  for (int g = 0; g < n; ++g) {
    for (int f = 0; f < n; ++f) {
      const int h = c.compose(g, f);
      if ((c.tgt[f] == c.src[g]) != (h >= 0)) {
        throw BoundaryError("category: composite defined exactly for composable pairs");
      }
      if (h >= n || (h >= 0 && (c.src[h] != c.src[f] || c.tgt[h] != c.tgt[g]))) {
        throw BoundaryError("category: composite has the wrong endpoints");
      }
    }
  }
  for (int f = 0; f < n; ++f) {
    if (c.compose(c.ids[c.tgt[f]], f) != f || c.compose(f, c.ids[c.src[f]]) != f) {
      throw BoundaryError("category: identity law fails");
    }
  }
  for (int h = 0; h < n; ++h) {
    for (int g = 0; g < n; ++g) {
      if (c.compose(h, g) < 0) {continue;}
      for (int f = 0; f < n; ++f) {
        if (c.compose(g, f) < 0) {continue;}
        if (c.compose(c.compose(h, g), f) != c.compose(h, c.compose(g, f))) {
          throw BoundaryError("category: composition is not associative");
        }
      }
    }
  }
}

FinCategory make_category(
  int objects, const std::vector<std::pair<int, int>> & arrows,
  const std::vector<std::vector<int>> & composites)
{
  FinCategory c;
  c.objects = objects;
  for (int a = 0; a < objects; ++a) {
    c.src.push_back(a);
    c.tgt.push_back(a);
    c.ids.push_back(a);
  }
  for (const auto & [s, t] : arrows) {
    c.src.push_back(s);
    c.tgt.push_back(t);
  }
  const int n = c.morphisms();
  c.comp.assign(static_cast<std::size_t>(n * n), -1);
  for (int f = 0; f < n; ++f) {
    c.comp[c.tgt[f] * n + f] = f;
    c.comp[f * n + c.src[f]] = f;
  }
  for (const auto & t : composites) {
    if (t.size() != 3) {
      throw BoundaryError("make_category: composites are triples");
    }
    c.comp[t[0] * n + t[1]] = t[2];
  }
  validate(c);
  return c;
}

FinCategory discrete_category(int n)
{
  return make_category(n, {}, {});
}

FinCategory arrow_category()
{
  return make_category(2, {{0, 1}}, {});
}

FinCategory idempotent_monoid()
{
  return make_category(1, {{0, 0}}, {{1, 1, 1}});
}

FinCategory involution_monoid()
{
  return make_category(1, {{0, 0}}, {{1, 1, 0}});
}

std::vector<FinCategory> standard_categories()
{
  return {discrete_category(0), discrete_category(1), discrete_category(2), arrow_category(),
    idempotent_monoid(), involution_monoid()};
}

// ---------------------------------------------------------------------------
// Functors.

void to_json(Json & j, const FinFunctor & f)
{
  j = Json{{"objects", f.on_objects}, {"morphisms", f.on_morphisms}};
}

void validate(const FinFunctor & f)
{
  const auto & x = f.src;
  const auto & y = f.tgt;
  if (f.on_objects.size() != static_cast<std::size_t>(x.objects) ||
    f.on_morphisms.size() != static_cast<std::size_t>(x.morphisms()))
  {
    throw BoundaryError("functor: table sizes do not match");
  }
  for (int a = 0; a < x.objects; ++a) {
    if (f.on_objects[a] < 0 || f.on_objects[a] >= y.objects) {
      throw BoundaryError("functor: object image out of range");
    }
    if (f.on_morphisms[x.ids[a]] != y.ids[f.on_objects[a]]) {
      throw BoundaryError("functor: identity not preserved");
    }
  }
  for (int u = 0; u < x.morphisms(); ++u) {
    const int v = f.on_morphisms[u];
    if (v < 0 || v >= y.morphisms() || y.src[v] != f.on_objects[x.src[u]] ||
      y.tgt[v] != f.on_objects[x.tgt[u]])
    {
      throw BoundaryError("functor: morphism image has the wrong endpoints");
    }
  }
  for (int g = 0; g < x.morphisms(); ++g) {
    for (int u = 0; u < x.morphisms(); ++u) {
      const int h = x.compose(g, u);
      if (h >= 0 && f.on_morphisms[h] != y.compose(f.on_morphisms[g], f.on_morphisms[u])) {
        throw BoundaryError("functor: composition not preserved");
      }
    }
  }
}

namespace
{

// Whether assigning morphism i keeps every composite among 0..i preserved.
bool consistent_up_to(const FinFunctor & f, int i)
{
  const auto & x = f.src;
  const auto & y = f.tgt;
  for (int g = 0; g <= i; ++g) {
    for (int u = 0; u <= i; ++u) {
      if (g != i && u != i) {continue;}
      const int h = x.compose(g, u);
      if (h < 0 || h > i) {continue;}
      if (f.on_morphisms[h] != y.compose(f.on_morphisms[g], f.on_morphisms[u])) {return false;}
    }
  }
  // composites landing on i from earlier pairs
  for (int g = 0; g < i; ++g) {
    for (int u = 0; u < i; ++u) {
      if (x.compose(g, u) == i &&
        f.on_morphisms[i] != y.compose(f.on_morphisms[g], f.on_morphisms[u]))
      {
        return false;
      }
    }
  }
  return true;
}

void extend_functor(FinFunctor & f, int i, std::vector<FinFunctor> & out)
{
  const auto & x = f.src;
  const auto & y = f.tgt;
  if (i == x.morphisms()) {
    out.push_back(f);
    return;
  }
  const int a = f.on_objects[x.src[i]];
  const int b = f.on_objects[x.tgt[i]];
  std::vector<int> choices;
  if (x.ids[x.src[i]] == i) {
    choices.push_back(y.ids[a]);
  } else {
    choices = y.hom(a, b);
  }
  for (int v : choices) {
    f.on_morphisms[i] = v;
    if (consistent_up_to(f, i)) {
      extend_functor(f, i + 1, out);
    }
  }
  f.on_morphisms[i] = -1;
}

}  // namespace

std::vector<FinFunctor> all_functors(const FinCategory & x, const FinCategory & y)
{
  std::vector<FinFunctor> out;
  if (x.objects > 0 && y.objects == 0) {
    return out;
  }
  FinFunctor f{x, y, std::vector<int>(static_cast<std::size_t>(x.objects), 0),
    std::vector<int>(static_cast<std::size_t>(x.morphisms()), -1)};
  while (true) {
    extend_functor(f, 0, out);
    int k = x.objects - 1;
    while (k >= 0 && f.on_objects[k] == y.objects - 1) {
      f.on_objects[k] = 0;
      --k;
    }
    if (k < 0) {break;}
    ++f.on_objects[k];
  }
  return out;
}

FinCatCategory::FinCatCategory(std::vector<FinCategory> catalog)
: catalog_(std::move(catalog))
{
  for (const auto & c : catalog_) {
    validate(c);
  }
}

FinFunctor FinCatCategory::compose(const FinFunctor & g, const FinFunctor & f) const
{
  if (!(f.tgt == g.src)) {
    throw BoundaryError("functor composition: target of first differs from source of second");
  }
  FinFunctor h{f.src, g.tgt, {}, {}};
  for (int a : f.on_objects) {
    h.on_objects.push_back(g.on_objects[a]);
  }
  for (int u : f.on_morphisms) {
    h.on_morphisms.push_back(g.on_morphisms[u]);
  }
  return h;
}

FinFunctor FinCatCategory::identity(const FinCategory & x) const
{
  FinFunctor f{x, x, std::vector<int>(static_cast<std::size_t>(x.objects)),
    std::vector<int>(static_cast<std::size_t>(x.morphisms()))};
  std::iota(f.on_objects.begin(), f.on_objects.end(), 0);
  std::iota(f.on_morphisms.begin(), f.on_morphisms.end(), 0);
  return f;
}

// ---------------------------------------------------------------------------
// Profunctors.

std::vector<int> FinProfunctor::fiber_sizes() const
{
  std::vector<int> sizes(static_cast<std::size_t>(src.objects * tgt.objects), 0);
  for (int e = 0; e < elements(); ++e) {
    ++sizes[static_cast<std::size_t>(at0[e] * tgt.objects + at1[e])];
  }
  return sizes;
}

void to_json(Json & j, const FinProfunctor & m)
{
  Json elements = Json::array();
  for (int e = 0; e < m.elements(); ++e) {
    elements.push_back(Json::array({m.at0[e], m.at1[e]}));
  }
  j = Json{{"elements", elements}, {"left", m.act0}, {"right", m.act1}};
}

namespace
{

bool profunctor_laws_hold(const FinProfunctor & m)
{
  const auto & x0 = m.src;
  const auto & x1 = m.tgt;
  const int n = m.elements();
  for (int e = 0; e < n; ++e) {
    if (m.left(x0.ids[m.at0[e]], e) != e || m.right(x1.ids[m.at1[e]], e) != e) {return false;}
    for (int u = 0; u < x0.morphisms(); ++u) {
      const int l = m.left(u, e);
      if ((x0.tgt[u] == m.at0[e]) != (l >= 0)) {return false;}
      if (l < 0) {continue;}
      if (l >= n || m.at0[l] != x0.src[u] || m.at1[l] != m.at1[e]) {return false;}
      for (int u2 = 0; u2 < x0.morphisms(); ++u2) {
        if (x0.tgt[u2] != x0.src[u]) {continue;}
        if (m.left(u2, l) != m.left(x0.compose(u, u2), e)) {return false;}
      }
      for (int v = 0; v < x1.morphisms(); ++v) {
        if (x1.src[v] != m.at1[e]) {continue;}
        if (m.right(v, l) != m.left(u, m.right(v, e))) {return false;}
      }
    }
    for (int v = 0; v < x1.morphisms(); ++v) {
      const int r = m.right(v, e);
      if ((x1.src[v] == m.at1[e]) != (r >= 0)) {return false;}
      if (r < 0) {continue;}
      if (r >= n || m.at0[r] != m.at0[e] || m.at1[r] != x1.tgt[v]) {return false;}
      for (int v2 = 0; v2 < x1.morphisms(); ++v2) {
        if (x1.src[v2] != x1.tgt[v]) {continue;}
        if (m.right(v2, r) != m.right(x1.compose(v2, v), e)) {return false;}
      }
    }
  }
  return true;
}

}  // namespace

void validate(const FinProfunctor & m)
{
  const int n = m.elements();
  if (m.at1.size() != m.at0.size() ||
    m.act0.size() != static_cast<std::size_t>(m.src.morphisms() * n) ||
    m.act1.size() != static_cast<std::size_t>(m.tgt.morphisms() * n))
  {
    throw BoundaryError("profunctor: table sizes do not match");
  }
  for (int e = 0; e < n; ++e) {
    if (m.at0[e] < 0 || m.at0[e] >= m.src.objects || m.at1[e] < 0 || m.at1[e] >= m.tgt.objects) {
      throw BoundaryError("profunctor: element coordinates out of range");
    }
  }
  if (!profunctor_laws_hold(m)) {
    throw BoundaryError("profunctor: actions are not functorial");
  }
}

FinProfunctor hom_profunctor(const FinCategory & x)
{
  return make_profunctor(x, x, x.src, x.tgt,
    [&](int u, int f) {return x.compose(f, u);},
    [&](int v, int f) {return x.compose(v, f);});
}

namespace
{

struct ProfunctorSearch
{
  FinProfunctor m;
  // (table, index, allowed values) for each free action entry
  std::vector<std::tuple<int, std::size_t, std::vector<int>>> slots;
  std::vector<std::vector<int>> fibers;
  std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
  std::vector<FinProfunctor> out;

  void canonicalize()
  {
    // relabel within each fiber, keep the least action tables
    const int n = m.elements();
    std::optional<std::pair<std::vector<int>, std::vector<int>>> best;
    std::function<void(std::size_t, std::vector<int> &)> go =
      [&](std::size_t k, std::vector<int> & sigma) {
        if (k == fibers.size()) {
          std::vector<int> a0(m.act0.size()), a1(m.act1.size());
          for (std::size_t i = 0; i < m.act0.size(); ++i) {
            const int e = static_cast<int>(i % static_cast<std::size_t>(n));
            const std::size_t row = i / static_cast<std::size_t>(n);
            a0[row * n + sigma[e]] = m.act0[i] < 0 ? -1 : sigma[m.act0[i]];
          }
          for (std::size_t i = 0; i < m.act1.size(); ++i) {
            const int e = static_cast<int>(i % static_cast<std::size_t>(n));
            const std::size_t row = i / static_cast<std::size_t>(n);
            a1[row * n + sigma[e]] = m.act1[i] < 0 ? -1 : sigma[m.act1[i]];
          }
          auto key = std::make_pair(std::move(a0), std::move(a1));
          if (!best || key < *best) {best = std::move(key);}
          return;
        }
        auto p = fibers[k];
        std::sort(p.begin(), p.end());
        do {
          for (std::size_t i = 0; i < p.size(); ++i) {
            sigma[fibers[k][i]] = p[i];
          }
          go(k + 1, sigma);
        } while (std::next_permutation(p.begin(), p.end()));
      };
    std::vector<int> sigma(static_cast<std::size_t>(n));
    go(0, sigma);
    if (seen.insert(*best).second) {
      FinProfunctor c = m;
      c.act0 = best->first;
      c.act1 = best->second;
      out.push_back(std::move(c));
    }
  }

  void fill(std::size_t k)
  {
    if (k == slots.size()) {
      if (profunctor_laws_hold(m)) {canonicalize();}
      return;
    }
    auto & [table, index, allowed] = slots[k];
    auto & t = table == 0 ? m.act0 : m.act1;
    for (int v : allowed) {
      t[index] = v;
      fill(k + 1);
    }
  }
};

}  // namespace

std::vector<FinProfunctor> all_profunctors(
  const FinCategory & x0, const FinCategory & x1, int fiber_bound)
{
  const int cells = x0.objects * x1.objects;
  std::vector<int> sizes(static_cast<std::size_t>(cells), 0);
  std::vector<FinProfunctor> out;
  while (true) {
    ProfunctorSearch s;
    std::vector<int> at0, at1;
    for (int c = 0; c < cells; ++c) {
      std::vector<int> fib;
      for (int i = 0; i < sizes[c]; ++i) {
        fib.push_back(static_cast<int>(at0.size()));
        at0.push_back(c / x1.objects);
        at1.push_back(c % x1.objects);
      }
      s.fibers.push_back(fib);
    }
    s.m = make_profunctor(x0, x1, at0, at1,
      [](int, int e) {return e;}, [](int, int e) {return e;});
    const int n = s.m.elements();
    auto fiber = [&](int a, int b) {return s.fibers[static_cast<std::size_t>(a * x1.objects + b)];};
    for (int u = 0; u < x0.morphisms(); ++u) {
      for (int e = 0; e < n; ++e) {
        if (x0.tgt[u] != at0[e]) {continue;}
        auto allowed = fiber(x0.src[u], at1[e]);
        if (x0.ids[x0.tgt[u]] == u) {allowed = {e};}
        s.slots.emplace_back(0, static_cast<std::size_t>(u * n + e), allowed);
      }
    }
    for (int v = 0; v < x1.morphisms(); ++v) {
      for (int e = 0; e < n; ++e) {
        if (x1.src[v] != at1[e]) {continue;}
        auto allowed = fiber(at0[e], x1.tgt[v]);
        if (x1.ids[x1.src[v]] == v) {allowed = {e};}
        s.slots.emplace_back(1, static_cast<std::size_t>(v * n + e), allowed);
      }
    }
    s.fill(0);
    for (auto & p : s.out) {
      out.push_back(std::move(p));
    }
    int k = cells - 1;
    while (k >= 0 && sizes[k] == fiber_bound) {
      sizes[k] = 0;
      --k;
    }
    if (k < 0) {break;}
    ++sizes[k];
  }
  return out;
}

Coend coend(const FinProfunctor & m, const FinProfunctor & n)
{
  if (!(m.tgt == n.src)) {
    throw BoundaryError("profunctor composition: target of first differs from source of second");
  }
  const auto & mid = m.tgt;
  const int em = m.elements();
  const int en = n.elements();
  std::vector<int> parent(static_cast<std::size_t>(em * en), -1);
  for (int e = 0; e < em; ++e) {
    for (int f = 0; f < en; ++f) {
      if (m.at1[e] == n.at0[f]) {parent[e * en + f] = e * en + f;}
    }
  }
  std::function<int(int)> find = [&](int p) {
      while (parent[p] != p) {
        parent[p] = parent[parent[p]];
        p = parent[p];
      }
      return p;
    };
  auto unite = [&](int p, int q) {
      p = find(p);
      q = find(q);
      if (p == q) {return;}
      if (q < p) {std::swap(p, q);}
      parent[q] = p;
    };
  for (int v = 0; v < mid.morphisms(); ++v) {
    for (int e = 0; e < em; ++e) {
      if (m.at1[e] != mid.src[v]) {continue;}
      for (int f = 0; f < en; ++f) {
        if (n.at0[f] != mid.tgt[v]) {continue;}
        unite(m.right(v, e) * en + f, e * en + n.left(v, f));
      }
    }
  }
  Coend c;
  c.class_of.assign(parent.size(), -1);
  std::vector<int> at0, at1;
  for (int p = 0; p < em * en; ++p) {
    if (parent[p] < 0) {continue;}
    const int root = find(p);
    if (root == p) {
      c.class_of[p] = static_cast<int>(c.representative.size());
      c.representative.push_back({p / en, p % en});
      at0.push_back(m.at0[p / en]);
      at1.push_back(n.at1[p % en]);
    } else {
      c.class_of[p] = c.class_of[root];
    }
  }
  c.composite = make_profunctor(m.src, n.tgt, at0, at1,
    [&](int u, int k) {
      auto [e, f] = c.representative[k];
      return c.of(m.left(u, e), f, en);
    },
    [&](int w, int k) {
      auto [e, f] = c.representative[k];
      return c.of(e, n.right(w, f), en);
    });
  return c;
}

// ---------------------------------------------------------------------------
// The double category.

void to_json(Json & j, const ElementMap & w)
{
  j = w.image;
}

FinProfunctor CatDouble::vcomp(const FinProfunctor & m, const FinProfunctor & n) const
{
  return coend(m, n).composite;
}

bool CatDouble::within_bound(const FinProfunctor & m) const
{
  for (int s : m.fiber_sizes()) {
    if (s > fiber_bound_) {return false;}
  }
  return true;
}

bool CatDouble::is_cell(const Frame & b, const Witness & w) const
{
  if (!frame_well_formed(*this, b)) {return false;}
  const auto & m = b.left;
  const auto & n = b.right;
  if (w.image.size() != static_cast<std::size_t>(m.elements())) {return false;}
  for (int e = 0; e < m.elements(); ++e) {
    const int t = w(e);
    if (t < 0 || t >= n.elements() || n.at0[t] != b.top.on_objects[m.at0[e]] ||
      n.at1[t] != b.bottom.on_objects[m.at1[e]])
    {
      return false;
    }
  }
  for (int e = 0; e < m.elements(); ++e) {
    for (int u = 0; u < m.src.morphisms(); ++u) {
      const int l = m.left(u, e);
      if (l >= 0 && w(l) != n.left(b.top.on_morphisms[u], w(e))) {return false;}
    }
    for (int v = 0; v < m.tgt.morphisms(); ++v) {
      const int r = m.right(v, e);
      if (r >= 0 && w(r) != n.right(b.bottom.on_morphisms[v], w(e))) {return false;}
    }
  }
  return true;
}

namespace
{

// Naturality constraints between elements 0..i that mention i.
bool natural_so_far(const CatDouble::Frame & b, const std::vector<int> & w, int i)
{
  const auto & m = b.left;
  const auto & n = b.right;
  auto check = [&](int e, int moved, int image) {
      if (moved > i || e > i || (moved != i && e != i)) {return true;}
      return w[moved] == image;
    };
  for (int e = 0; e <= i; ++e) {
    for (int u = 0; u < m.src.morphisms(); ++u) {
      const int l = m.left(u, e);
      if (l >= 0 && !check(e, l, n.left(b.top.on_morphisms[u], w[e]))) {return false;}
    }
    for (int v = 0; v < m.tgt.morphisms(); ++v) {
      const int r = m.right(v, e);
      if (r >= 0 && !check(e, r, n.right(b.bottom.on_morphisms[v], w[e]))) {return false;}
    }
  }
  // constraints whose source element comes later are checked when it is assigned
  return true;
}

void extend_cell(
  const CatDouble::Frame & b, std::vector<int> & w, int i, std::vector<CatDouble::Cell> & out)
{
  const auto & m = b.left;
  const auto & n = b.right;
  if (i == m.elements()) {
    out.push_back({b, {w}});
    return;
  }
  const int a0 = b.top.on_objects[m.at0[i]];
  const int a1 = b.bottom.on_objects[m.at1[i]];
  for (int t = 0; t < n.elements(); ++t) {
    if (n.at0[t] != a0 || n.at1[t] != a1) {continue;}
    w[i] = t;
    if (natural_so_far(b, w, i)) {
      extend_cell(b, w, i + 1, out);
    }
  }
  w[i] = -1;
}

}  // namespace

std::vector<CatDouble::Cell> CatDouble::cells(const Frame & b) const
{
  std::vector<Cell> out;
  if (!frame_well_formed(*this, b)) {return out;}
  std::vector<int> w(static_cast<std::size_t>(b.left.elements()), -1);
  extend_cell(b, w, 0, out);
  return out;
}

CatDouble::Cell CatDouble::paste_horizontal(const Cell & a, const Cell & b) const
{
  if (!(a.frame.right == b.frame.left)) {
    throw BoundaryError("paste_horizontal: edges differ");
  }
  ElementMap w;
  for (int t : a.witness.image) {
    w.image.push_back(b.witness(t));
  }
  return {{base_.compose(b.frame.top, a.frame.top), base_.compose(b.frame.bottom, a.frame.bottom),
      a.frame.left, b.frame.right}, w};
}

CatDouble::Cell CatDouble::paste_vertical(const Cell & a, const Cell & b) const
{
  if (!(a.frame.bottom == b.frame.top)) {
    throw BoundaryError("paste_vertical: edges differ");
  }
  auto left = coend(a.frame.left, b.frame.left);
  auto right = coend(a.frame.right, b.frame.right);
  const int en = b.frame.right.elements();
  ElementMap w;
  for (const auto & [e, f] : left.representative) {
    w.image.push_back(right.of(a.witness(e), b.witness(f), en));
  }
  return {{a.frame.top, b.frame.bottom, left.composite, right.composite}, w};
}

CatDouble::Cell CatDouble::hidentity(const FinProfunctor & m) const
{
  ElementMap w{std::vector<int>(static_cast<std::size_t>(m.elements()))};
  std::iota(w.image.begin(), w.image.end(), 0);
  return {{base_.identity(m.src), base_.identity(m.tgt), m, m}, w};
}

CatDouble::Cell CatDouble::videntity(const FinFunctor & f) const
{
  return {{f, f, vid(f.src), vid(f.tgt)}, {f.on_morphisms}};
}

IsoCell<CatDouble::Cell> CatDouble::associator(
  const FinProfunctor & a, const FinProfunctor & b, const FinProfunctor & c) const
{
  auto ab = coend(a, b);
  auto bc = coend(b, c);
  auto lhs = coend(ab.composite, c);
  auto rhs = coend(a, bc.composite);
  const int nb = b.elements();
  const int nc = c.elements();
  const int nbc = bc.composite.elements();
  ElementMap there, back;
  for (const auto & [k, e3] : lhs.representative) {
    auto [e1, e2] = ab.representative[k];
    there.image.push_back(rhs.of(e1, bc.of(e2, e3, nc), nbc));
  }
  for (const auto & [e1, k] : rhs.representative) {
    auto [e2, e3] = bc.representative[k];
    back.image.push_back(lhs.of(ab.of(e1, e2, nb), e3, nc));
  }
  auto id0 = base_.identity(a.src);
  auto id3 = base_.identity(c.tgt);
  return {{{id0, id3, lhs.composite, rhs.composite}, there},
    {{id0, id3, rhs.composite, lhs.composite}, back}};
}

IsoCell<CatDouble::Cell> CatDouble::left_unitor(const FinProfunctor & m) const
{
  auto mv = coend(m, vid(m.tgt));
  const int nv = m.tgt.morphisms();
  ElementMap there, back;
  for (const auto & [e, v] : mv.representative) {
    there.image.push_back(m.right(v, e));
  }
  for (int e = 0; e < m.elements(); ++e) {
    back.image.push_back(mv.of(e, m.tgt.ids[m.at1[e]], nv));
  }
  auto id0 = base_.identity(m.src);
  auto id1 = base_.identity(m.tgt);
  return {{{id0, id1, mv.composite, m}, there}, {{id0, id1, m, mv.composite}, back}};
}

IsoCell<CatDouble::Cell> CatDouble::right_unitor(const FinProfunctor & m) const
{
  auto vm = coend(vid(m.src), m);
  const int nm = m.elements();
  ElementMap there, back;
  for (const auto & [u, e] : vm.representative) {
    there.image.push_back(m.left(u, e));
  }
  for (int e = 0; e < nm; ++e) {
    back.image.push_back(vm.of(m.src.ids[m.at0[e]], e, nm));
  }
  auto id0 = base_.identity(m.src);
  auto id1 = base_.identity(m.tgt);
  return {{{id0, id1, vm.composite, m}, there}, {{id0, id1, m, vm.composite}, back}};
}

CompanionData<CatDouble> CatDouble::companion(const FinFunctor & f) const
{
  const auto & x = f.src;
  const auto & y = f.tgt;
  // elements (a, y) with y : f a -> b
  std::vector<int> at0, at1, arrow;
  std::map<std::pair<int, int>, int> index;
  for (int a = 0; a < x.objects; ++a) {
    for (int g = 0; g < y.morphisms(); ++g) {
      if (y.src[g] != f.on_objects[a]) {continue;}
      index[{a, g}] = static_cast<int>(at0.size());
      at0.push_back(a);
      at1.push_back(y.tgt[g]);
      arrow.push_back(g);
    }
  }
  auto fs = make_profunctor(x, y, at0, at1,
    [&](int u, int e) {return index.at({x.src[u], y.compose(arrow[e], f.on_morphisms[u])});},
    [&](int v, int e) {return index.at({at0[e], y.compose(v, arrow[e])});});
  ElementMap eta, eps{arrow};
  for (int u = 0; u < x.morphisms(); ++u) {
    eta.image.push_back(index.at({x.src[u], f.on_morphisms[u]}));
  }
  return {f, fs,
    {{base_.identity(x), f, vid(x), fs}, eta},
    {{f, base_.identity(y), fs, vid(y)}, eps}};
}

ConjointData<CatDouble> CatDouble::conjoint(const FinFunctor & f) const
{
  const auto & x = f.src;
  const auto & y = f.tgt;
  // elements (a, y) with y : b -> f a
  std::vector<int> at0, at1, arrow;
  std::map<std::pair<int, int>, int> index;
  for (int a = 0; a < x.objects; ++a) {
    for (int g = 0; g < y.morphisms(); ++g) {
      if (y.tgt[g] != f.on_objects[a]) {continue;}
      index[{a, g}] = static_cast<int>(at0.size());
      at0.push_back(y.src[g]);
      at1.push_back(a);
      arrow.push_back(g);
    }
  }
  auto fc = make_profunctor(y, x, at0, at1,
    [&](int v, int e) {return index.at({at1[e], y.compose(arrow[e], v)});},
    [&](int u, int e) {return index.at({x.tgt[u], y.compose(f.on_morphisms[u], arrow[e])});});
  ElementMap alpha, beta{arrow};
  for (int u = 0; u < x.morphisms(); ++u) {
    alpha.image.push_back(index.at({x.tgt[u], f.on_morphisms[u]}));
  }
  return {f, fc,
    {{f, base_.identity(x), vid(x), fc}, alpha},
    {{base_.identity(y), f, fc, vid(y)}, beta}};
}

CotabulatorData<CatDouble> CatDouble::cotabulator(const FinProfunctor & m) const
{
  const auto & x0 = m.src;
  const auto & x1 = m.tgt;
  const int o0 = x0.objects;
  const int m0 = x0.morphisms();
  const int m1 = x1.morphisms();
  FinCategory g;
  g.objects = o0 + x1.objects;
  for (int u = 0; u < m0; ++u) {
    g.src.push_back(x0.src[u]);
    g.tgt.push_back(x0.tgt[u]);
  }
  for (int v = 0; v < m1; ++v) {
    g.src.push_back(o0 + x1.src[v]);
    g.tgt.push_back(o0 + x1.tgt[v]);
  }
  for (int e = 0; e < m.elements(); ++e) {
    g.src.push_back(m.at0[e]);
    g.tgt.push_back(o0 + m.at1[e]);
  }
  for (int a = 0; a < o0; ++a) {
    g.ids.push_back(x0.ids[a]);
  }
  for (int b = 0; b < x1.objects; ++b) {
    g.ids.push_back(m0 + x1.ids[b]);
  }
  const int n = g.morphisms();
  g.comp.assign(static_cast<std::size_t>(n * n), -1);
  auto kind = [&](int i) {return i < m0 ? 0 : (i < m0 + m1 ? 1 : 2);};
  for (int h = 0; h < n; ++h) {
    for (int f = 0; f < n; ++f) {
      if (g.tgt[f] != g.src[h]) {continue;}
      int c = -1;
      if (kind(h) == 0 && kind(f) == 0) {
        c = x0.compose(h, f);
      } else if (kind(h) == 1 && kind(f) == 1) {
        c = m0 + x1.compose(h - m0, f - m0);
      } else if (kind(h) == 2 && kind(f) == 0) {
        c = m0 + m1 + m.left(f, h - m0 - m1);
      } else if (kind(h) == 1 && kind(f) == 2) {
        c = m0 + m1 + m.right(h - m0, f - m0 - m1);
      }
      g.comp[h * n + f] = c;
    }
  }
  validate(g);
  FinFunctor i0{x0, g, {}, {}};
  for (int a = 0; a < o0; ++a) {i0.on_objects.push_back(a);}
  for (int u = 0; u < m0; ++u) {i0.on_morphisms.push_back(u);}
  FinFunctor i1{x1, g, {}, {}};
  for (int b = 0; b < x1.objects; ++b) {i1.on_objects.push_back(o0 + b);}
  for (int v = 0; v < m1; ++v) {i1.on_morphisms.push_back(m0 + v);}
  ElementMap w;
  for (int e = 0; e < m.elements(); ++e) {
    w.image.push_back(m0 + m1 + e);
  }
  return {m, g, {{i0, i1, m, vid(g)}, w}};
}

TabulatorData<CatDouble> CatDouble::tabulator(const FinProfunctor & m) const
{
  const auto & x0 = m.src;
  const auto & x1 = m.tgt;
  // morphisms e -> e' are pairs (u, v) with v . e = e' . u
  FinCategory s;
  s.objects = m.elements();
  std::vector<int> first, second;
  std::map<std::tuple<int, int, int, int>, int> index;
  for (int e = 0; e < m.elements(); ++e) {
    for (int e2 = 0; e2 < m.elements(); ++e2) {
      for (int u : x0.hom(m.at0[e], m.at0[e2])) {
        for (int v : x1.hom(m.at1[e], m.at1[e2])) {
          if (m.right(v, e) != m.left(u, e2)) {continue;}
          index[{e, e2, u, v}] = s.morphisms();
          s.src.push_back(e);
          s.tgt.push_back(e2);
          first.push_back(u);
          second.push_back(v);
        }
      }
    }
  }
  for (int e = 0; e < m.elements(); ++e) {
    s.ids.push_back(index.at({e, e, x0.ids[m.at0[e]], x1.ids[m.at1[e]]}));
  }
  const int n = s.morphisms();
  s.comp.assign(static_cast<std::size_t>(n * n), -1);
  for (int h = 0; h < n; ++h) {
    for (int f = 0; f < n; ++f) {
      if (s.tgt[f] != s.src[h]) {continue;}
      s.comp[h * n + f] = index.at({s.src[f], s.tgt[h], x0.compose(first[h], first[f]),
          x1.compose(second[h], second[f])});
    }
  }
  validate(s);
  FinFunctor p0{s, x0, m.at0, first};
  FinFunctor p1{s, x1, m.at1, second};
  ElementMap w;
  for (int i = 0; i < n; ++i) {
    w.image.push_back(m.right(second[i], s.src[i]));
  }
  return {m, s, {{p0, p1, vid(s), m}, w}};
}

}  // namespace dblcat
