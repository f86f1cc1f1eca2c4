// Copyright 2026 The dblcat Authors
// SPDX-License-Identifier: Apache-2.0

#include "dblcat/finset.hpp"

#include <numeric>
#include <string>
#include <utility>

namespace dblcat
{

void to_json(Json & j, const FinSet & x) {j = x.size;}

void to_json(Json & j, const FinSetMap & f)
{
  j = Json{{"src", f.src.size}, {"tgt", f.tgt.size}, {"table", f.table}};
}

void validate(const FinSetMap & f)
{
  if (static_cast<int>(f.table.size()) != f.src.size) {
    throw BoundaryError("map table length " + std::to_string(f.table.size()) +
            " differs from source size " + std::to_string(f.src.size));
  }
  for (int v : f.table) {
    if (v < 0 || v >= f.tgt.size) {
      throw BoundaryError("map entry " + std::to_string(v) + " out of range for target size " +
              std::to_string(f.tgt.size));
    }
  }
}

FinSetMap identity_map(FinSet x)
{
  FinSetMap f{x, x, std::vector<int>(static_cast<std::size_t>(x.size))};
  std::iota(f.table.begin(), f.table.end(), 0);
  return f;
}

FinSetMap compose(const FinSetMap & g, const FinSetMap & f)
{
  if (!(f.tgt == g.src)) {
    throw BoundaryError("compose: target of first map differs from source of second");
  }
  FinSetMap h{f.src, g.tgt, std::vector<int>(f.table.size())};
  for (std::size_t i = 0; i < f.table.size(); ++i) {
    h.table[i] = g(f.table[i]);
  }
  return h;
}

std::vector<FinSetMap> all_maps(FinSet x, FinSet y)
{
  std::vector<FinSetMap> out;
  if (x.size == 0) {
    out.push_back({x, y, {}});
    return out;
  }
  if (y.size == 0) {
    return out;
  }
  std::vector<int> t(static_cast<std::size_t>(x.size), 0);
  while (true) {
    out.push_back({x, y, t});
    std::size_t k = t.size();
    // odometer with the last position varying fastest
    while (k > 0) {
      --k;
      if (++t[k] < y.size) {
        break;
      }
      t[k] = 0;
      if (k == 0) {
        return out;
      }
    }
  }
}

bool is_bijection(const FinSetMap & f)
{
  if (f.src.size != f.tgt.size) {
    return false;
  }
  std::vector<bool> hit(static_cast<std::size_t>(f.tgt.size), false);
  for (int v : f.table) {
    if (hit[static_cast<std::size_t>(v)]) {
      return false;
    }
    hit[static_cast<std::size_t>(v)] = true;
  }
  return true;
}

namespace
{

int find_root(std::vector<int> & parent, int x)
{
  while (parent[static_cast<std::size_t>(x)] != x) {
    auto & p = parent[static_cast<std::size_t>(x)];
    p = parent[static_cast<std::size_t>(p)];
    x = p;
  }
  return x;
}

}  // namespace

Cocone<FinSet, FinSetMap> pushout_finset(const FinSetMap & f, const FinSetMap & g)
{
  if (!(f.src == g.src)) {
    throw BoundaryError("pushout: the two maps have different sources");
  }
  const int nb = f.tgt.size;
  const int n = nb + g.tgt.size;
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  for (int a = 0; a < f.src.size; ++a) {
    int x = find_root(parent, f(a));
    int y = find_root(parent, nb + g(a));
    if (x != y) {
      // the smaller index stays the root, so roots are least elements
      if (x < y) {
        parent[static_cast<std::size_t>(y)] = x;
      } else {
        parent[static_cast<std::size_t>(x)] = y;
      }
    }
  }
  std::vector<int> cls(static_cast<std::size_t>(n), -1);
  int classes = 0;
  for (int e = 0; e < n; ++e) {
    int r = find_root(parent, e);
    if (cls[static_cast<std::size_t>(r)] < 0) {
      cls[static_cast<std::size_t>(r)] = classes++;
    }
    cls[static_cast<std::size_t>(e)] = cls[static_cast<std::size_t>(r)];
  }
  FinSet p{classes};
  FinSetMap in0{f.tgt, p, std::vector<int>(cls.begin(), cls.begin() + nb)};
  FinSetMap in1{g.tgt, p, std::vector<int>(cls.begin() + nb, cls.end())};
  return {p, std::move(in0), std::move(in1)};
}

Cone<FinSet, FinSetMap> pullback_finset(const FinSetMap & f, const FinSetMap & g)
{
  if (!(f.tgt == g.tgt)) {
    throw BoundaryError("pullback: the two maps have different targets");
  }
  std::vector<int> left, right;
  for (int b = 0; b < f.src.size; ++b) {
    for (int c = 0; c < g.src.size; ++c) {
      if (f(b) == g(c)) {
        left.push_back(b);
        right.push_back(c);
      }
    }
  }
  FinSet p{static_cast<int>(left.size())};
  return {p, FinSetMap{p, f.src, std::move(left)}, FinSetMap{p, g.src, std::move(right)}};
}

Report verify_pushout_universal(
  const FinSetMap & f, const FinSetMap & g, const Cocone<FinSet, FinSetMap> & p, int max_target)
{
  Report r("pushout-universal");
  r.check("cocone-commutes", compose(p.in0, f) == compose(p.in1, g));
  for (int q = 0; q <= max_target; ++q) {
    FinSet target{q};
    for (const auto & q0 : all_maps(f.tgt, target)) {
      for (const auto & q1 : all_maps(g.tgt, target)) {
        if (!(compose(q0, f) == compose(q1, g))) {
          continue;
        }
        int count = 0;
        for (const auto & h : all_maps(p.apex, target)) {
          if (compose(h, p.in0) == q0 && compose(h, p.in1) == q1) {
            ++count;
          }
        }
        r.check("unique-mediating-map", count == 1, [&] {
            return Json{{"q0", Json(q0)}, {"q1", Json(q1)}, {"mediating", count}};
          });
      }
    }
  }
  return r;
}

Report verify_pullback_universal(
  const FinSetMap & f, const FinSetMap & g, const Cone<FinSet, FinSetMap> & p, int max_source)
{
  Report r("pullback-universal");
  r.check("cone-commutes", compose(f, p.out0) == compose(g, p.out1));
  for (int q = 0; q <= max_source; ++q) {
    FinSet source{q};
    for (const auto & q0 : all_maps(source, f.src)) {
      for (const auto & q1 : all_maps(source, g.src)) {
        if (!(compose(f, q0) == compose(g, q1))) {
          continue;
        }
        int count = 0;
        for (const auto & h : all_maps(source, p.apex)) {
          if (compose(p.out0, h) == q0 && compose(p.out1, h) == q1) {
            ++count;
          }
        }
        r.check("unique-mediating-map", count == 1, [&] {
            return Json{{"q0", Json(q0)}, {"q1", Json(q1)}, {"mediating", count}};
          });
      }
    }
  }
  return r;
}

FinSetCategory::FinSetCategory(int max_size)
{
  for (int n = 0; n <= max_size; ++n) {
    catalog_.push_back(FinSet{n});
  }
}

FinSetCategory::FinSetCategory(std::vector<FinSet> catalog)
: catalog_(std::move(catalog))
{
  for (const auto & x : catalog_) {
    if (x.size < 0) {
      throw BoundaryError("set sizes are nonnegative");
    }
  }
}

FinSetMap FinSetCategory::compose(const FinSetMap & g, const FinSetMap & f) const
{
  return dblcat::compose(g, f);
}

Cocone<FinSet, FinSetMap> FinSetCategory::pushout(const FinSetMap & f, const FinSetMap & g) const
{
  return pushout_finset(f, g);
}

FinSetMap FinSetCategory::copair(
  const Cocone<FinSet, FinSetMap> & p, const FinSetMap & q0, const FinSetMap & q1) const
{
  FinSetMap h{p.apex, q0.tgt, std::vector<int>(static_cast<std::size_t>(p.apex.size), -1)};
  for (int b = 0; b < p.in0.src.size; ++b) {
    h.table[static_cast<std::size_t>(p.in0(b))] = q0(b);
  }
  for (int c = 0; c < p.in1.src.size; ++c) {
    h.table[static_cast<std::size_t>(p.in1(c))] = q1(c);
  }
  validate(h);
  return h;
}

Cone<FinSet, FinSetMap> FinSetCategory::pullback(const FinSetMap & f, const FinSetMap & g) const
{
  return pullback_finset(f, g);
}

FinSetMap FinSetCategory::pair(
  const Cone<FinSet, FinSetMap> & p, const FinSetMap & q0, const FinSetMap & q1) const
{
  FinSetMap h{q0.src, p.apex, std::vector<int>(static_cast<std::size_t>(q0.src.size), -1)};
  for (int x = 0; x < q0.src.size; ++x) {
    for (int e = 0; e < p.apex.size; ++e) {
      if (p.out0(e) == q0(x) && p.out1(e) == q1(x)) {
        h.table[static_cast<std::size_t>(x)] = e;
        break;
      }
    }
  }
  validate(h);
  return h;
}

}  // namespace dblcat
