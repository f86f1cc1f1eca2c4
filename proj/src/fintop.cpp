// Copyright 2026 The dblcat Authors
// SPDX-License-Identifier: Apache-2.0

#include "dblcat/fintop.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace dblcat
{

namespace
{

bool contains(std::uint32_t u, int i) {return (u >> i) & 1u;}

ContinuousMap from_table(const FinSpace & x, const FinSpace & y, std::vector<int> t)
{
  return {x, y, std::move(t)};
}

}  // namespace

bool FinSpace::is_open(std::uint32_t u) const
{
  return std::binary_search(opens.begin(), opens.end(), u);
}

std::size_t FinSpace::index_of(std::uint32_t u) const
{
  auto it = std::lower_bound(opens.begin(), opens.end(), u);
  if (it == opens.end() || *it != u) {
    throw BoundaryError("subset " + std::to_string(u) + " is not open");
  }
  return static_cast<std::size_t>(it - opens.begin());
}

void to_json(Json & j, const FinSpace & x)
{
  j = Json{{"points", x.size}, {"opens", x.opens}};
}

void validate(const FinSpace & x)
{
  if (x.size < 0 || x.size > 16) {
    throw BoundaryError("spaces are limited to 16 points");
  }
  if (!std::is_sorted(x.opens.begin(), x.opens.end()) ||
    std::adjacent_find(x.opens.begin(), x.opens.end()) != x.opens.end())
  {
    throw BoundaryError("opens must be listed in ascending order without repeats");
  }
  for (auto u : x.opens) {
    if ((u & ~x.whole()) != 0) {
      throw BoundaryError("open " + std::to_string(u) + " contains a point out of range");
    }
  }
  if (!x.is_open(0)) {
    throw BoundaryError("the empty set is not open");
  }
  if (!x.is_open(x.whole())) {
    throw BoundaryError("the whole space is not open");
  }
  for (auto u : x.opens) {
    for (auto v : x.opens) {
      if (!x.is_open(u | v)) {
        throw BoundaryError("opens are not closed under union: " + std::to_string(u) + ", " +
                std::to_string(v));
      }
      if (!x.is_open(u & v)) {
        throw BoundaryError("opens are not closed under intersection: " + std::to_string(u) + ", " +
                std::to_string(v));
      }
    }
  }
}

FinSpace make_space(int size, std::vector<std::uint32_t> opens)
{
  std::sort(opens.begin(), opens.end());
  opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
  FinSpace x{size, std::move(opens)};
  validate(x);
  return x;
}

Preorder specialization(const FinSpace & x)
{
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < x.size; ++a) {
    for (int b = 0; b < x.size; ++b) {
      bool below = true;
      for (auto u : x.opens) {
        if (contains(u, a) && !contains(u, b)) {below = false;}
      }
      if (below) {pairs.emplace_back(a, b);}
    }
  }
  return generated_preorder(x.size, pairs);
}

FinSpace alexandrov(const Preorder & p)
{
  std::vector<std::uint32_t> opens;
  const std::uint32_t limit = p.size == 0 ? 1u : (1u << p.size);
  for (std::uint32_t u = 0; u < limit; ++u) {
    bool up = true;
    for (int a = 0; a < p.size && up; ++a) {
      if (!contains(u, a)) {continue;}
      for (int b = 0; b < p.size; ++b) {
        if (p.le(a, b) && !contains(u, b)) {up = false;}
      }
    }
    if (up) {opens.push_back(u);}
  }
  return {p.size, opens};
}

FinSpace sierpinski_space()
{
  return make_space(2, {0b00, 0b01, 0b11});
}

std::uint32_t ContinuousMap::preimage(std::uint32_t v) const
{
  std::uint32_t u = 0;
  for (int i = 0; i < src.size; ++i) {
    if (contains(v, table[static_cast<std::size_t>(i)])) {u |= 1u << i;}
  }
  return u;
}

void to_json(Json & j, const ContinuousMap & f)
{
  j = Json{{"src", as_json(f.src)}, {"tgt", as_json(f.tgt)}, {"table", f.table}};
}

void validate(const ContinuousMap & f)
{
  if (f.table.size() != static_cast<std::size_t>(f.src.size)) {
    throw BoundaryError("map table length differs from the number of points");
  }
  for (int v : f.table) {
    if (v < 0 || v >= f.tgt.size) {
      throw BoundaryError("map entry " + std::to_string(v) + " out of range");
    }
  }
  for (auto v : f.tgt.opens) {
    if (!f.src.is_open(f.preimage(v))) {
      throw BoundaryError("map is not continuous: preimage of open " + std::to_string(v) + " is not open");
    }
  }
}

// ---------------------------------------------------------------------------

FinTopCategory::FinTopCategory(int max_points)
{
  for (int n = 0; n <= max_points; ++n) {
    for (const auto & p : preorders_up_to_iso(n, false)) {
      catalog_.push_back(alexandrov(p));
    }
  }
}

FinTopCategory::FinTopCategory(std::vector<FinSpace> catalog)
: catalog_(std::move(catalog))
{
  for (const auto & x : catalog_) {
    validate(x);
  }
}

std::vector<ContinuousMap> FinTopCategory::hom(const FinSpace & x, const FinSpace & y) const
{
  std::vector<ContinuousMap> out;
  for (auto & t : monotone_tables(specialization(x), specialization(y))) {
    out.push_back(from_table(x, y, std::move(t)));
  }
  return out;
}

ContinuousMap FinTopCategory::compose(const ContinuousMap & g, const ContinuousMap & f) const
{
  if (!(f.tgt == g.src)) {
    throw BoundaryError("compose: target of first map differs from source of second");
  }
  ContinuousMap h{f.src, g.tgt, std::vector<int>(f.table.size())};
  for (std::size_t i = 0; i < f.table.size(); ++i) {
    h.table[i] = g(f.table[i]);
  }
  return h;
}

ContinuousMap FinTopCategory::identity(const FinSpace & x) const
{
  ContinuousMap f{x, x, std::vector<int>(static_cast<std::size_t>(x.size))};
  for (int i = 0; i < x.size; ++i) {
    f.table[static_cast<std::size_t>(i)] = i;
  }
  return f;
}

Cocone<FinSpace, ContinuousMap> FinTopCategory::pushout(
  const ContinuousMap & f, const ContinuousMap & g) const
{
  if (!(f.src == g.src)) {
    throw BoundaryError("pushout: the two maps have different sources");
  }
  auto glued = pushout_preorder(specialization(f.tgt), specialization(g.tgt), f.table, g.table, false);
  auto apex = alexandrov(glued.apex);
  return {apex, {f.tgt, apex, glued.in0}, {g.tgt, apex, glued.in1}};
}

ContinuousMap FinTopCategory::copair(
  const Cocone<FinSpace, ContinuousMap> & p, const ContinuousMap & q0, const ContinuousMap & q1) const
{
  ContinuousMap h{p.apex, q0.tgt, std::vector<int>(static_cast<std::size_t>(p.apex.size), -1)};
  for (std::size_t i = 0; i < p.in0.table.size(); ++i) {
    h.table[static_cast<std::size_t>(p.in0.table[i])] = q0.table[i];
  }
  for (std::size_t i = 0; i < p.in1.table.size(); ++i) {
    h.table[static_cast<std::size_t>(p.in1.table[i])] = q1.table[i];
  }
  validate(h);
  return h;
}

Cone<FinSpace, ContinuousMap> FinTopCategory::pullback(
  const ContinuousMap & f, const ContinuousMap & g) const
{
  if (!(f.tgt == g.tgt)) {
    throw BoundaryError("pullback: the two maps have different targets");
  }
  auto paired = pullback_preorder(specialization(f.src), specialization(g.src), f.table, g.table);
  auto apex = alexandrov(paired.apex);
  return {apex, {apex, f.src, paired.out0}, {apex, g.src, paired.out1}};
}

ContinuousMap FinTopCategory::pair(
  const Cone<FinSpace, ContinuousMap> & p, const ContinuousMap & q0, const ContinuousMap & q1) const
{
  ContinuousMap h{q0.src, p.apex, std::vector<int>(q0.table.size(), -1)};
  for (std::size_t i = 0; i < q0.table.size(); ++i) {
    for (int k = 0; k < p.apex.size; ++k) {
      if (p.out0(k) == q0.table[i] && p.out1(k) == q1.table[i]) {h.table[i] = k;}
    }
  }
  validate(h);
  return h;
}

FinSpace FinTopCategory::sections_object(const ContinuousMap & p) const
{
  return alexandrov(sections_preorder(specialization(p.src), specialization(p.tgt), p.table).apex);
}

ContinuousMap FinTopCategory::evaluate_sections(const ContinuousMap & p, const ContinuousMap & point) const
{
  auto s = sections_preorder(specialization(p.src), specialization(p.tgt), p.table);
  ContinuousMap ev{alexandrov(s.apex), p.src, {}};
  for (const auto & sec : s.sections) {
    ev.table.push_back(sec[static_cast<std::size_t>(point(0))]);
  }
  return ev;
}

// ---------------------------------------------------------------------------

void to_json(Json & j, const OpenMap & m)
{
  Json pairs = Json::array();
  for (std::size_t i = 0; i < m.image.size(); ++i) {
    pairs.push_back({m.src.opens[i], m.image[i]});
  }
  j = Json{{"src", as_json(m.src)}, {"tgt", as_json(m.tgt)}, {"map", pairs}};
}

void validate(const OpenMap & m)
{
  if (m.image.size() != m.src.opens.size()) {
    throw BoundaryError("open map needs one value per open of the source");
  }
  for (auto v : m.image) {
    if (!m.tgt.is_open(v)) {
      throw BoundaryError("open map value " + std::to_string(v) + " is not open in the target");
    }
  }
  if (m(m.src.whole()) != m.tgt.whole()) {
    throw BoundaryError("open map does not preserve the empty intersection (whole space)");
  }
  for (auto u : m.src.opens) {
    for (auto v : m.src.opens) {
      if (m(u & v) != (m(u) & m(v))) {
        throw BoundaryError("open map does not preserve binary intersections");
      }
    }
  }
}

std::vector<OpenMap> all_open_maps(const FinSpace & x0, const FinSpace & x1)
{
  std::vector<OpenMap> out;
  const std::size_t n = x0.opens.size();
  std::vector<std::uint32_t> image(n, 0);
  // an intersection is a subset, so it precedes both factors in ascending order
  auto rec = [&](auto && self, std::size_t i) -> void {
      if (i == n) {
        if (image.back() == x1.whole()) {out.push_back({x0, x1, image});}
        return;
      }
      for (auto v : x1.opens) {
        image[i] = v;
        bool ok = true;
        for (std::size_t j = 0; j <= i && ok; ++j) {
          auto k = x0.index_of(x0.opens[i] & x0.opens[j]);
          if (image[k] != (image[i] & image[j])) {ok = false;}
        }
        if (ok) {self(self, i + 1);}
      }
    };
  rec(rec, 0);
  return out;
}

// ---------------------------------------------------------------------------

OpenMap TopDouble::vcomp(const OpenMap & m, const OpenMap & n) const
{
  if (!(m.tgt == n.src)) {
    throw BoundaryError("vcomp: target of the first map differs from source of the second");
  }
  OpenMap out{m.src, n.tgt, {}};
  for (auto v : m.image) {
    out.image.push_back(n(v));
  }
  return out;
}

bool TopDouble::holds(const Frame & b) const
{
  for (auto v : b.right.src.opens) {
    auto lhs = b.bottom.preimage(b.right(v));
    auto rhs = b.left(b.top.preimage(v));
    if ((lhs & ~rhs) != 0) {return false;}
  }
  return true;
}

std::vector<TopDouble::Cell> TopDouble::cells(const Frame & b) const
{
  if (!frame_well_formed(*this, b) || !holds(b)) {
    return {};
  }
  return {Cell{b, {}}};
}

TopDouble::Cell TopDouble::thin(const Frame & b) const
{
  if (!frame_well_formed(*this, b)) {
    throw BoundaryError("frame edges do not meet");
  }
  if (!holds(b)) {
    throw BoundaryError("cell condition fails on the frame");
  }
  return {b, {}};
}

TopDouble::Cell TopDouble::paste_horizontal(const Cell & a, const Cell & b) const
{
  if (!(a.frame.right == b.frame.left)) {
    throw BoundaryError("paste_horizontal: edges differ");
  }
  return thin({base_.compose(b.frame.top, a.frame.top), base_.compose(b.frame.bottom, a.frame.bottom),
      a.frame.left, b.frame.right});
}

TopDouble::Cell TopDouble::paste_vertical(const Cell & a, const Cell & b) const
{
  if (!(a.frame.bottom == b.frame.top)) {
    throw BoundaryError("paste_vertical: edges differ");
  }
  return thin({a.frame.top, b.frame.bottom, vcomp(a.frame.left, b.frame.left),
      vcomp(a.frame.right, b.frame.right)});
}

TopDouble::Cell TopDouble::hidentity(const OpenMap & m) const
{
  return thin({base_.identity(m.src), base_.identity(m.tgt), m, m});
}

TopDouble::Cell TopDouble::videntity(const ContinuousMap & f) const
{
  return thin({f, f, vid(f.src), vid(f.tgt)});
}

IsoCell<TopDouble::Cell> TopDouble::associator(const OpenMap & a, const OpenMap & b, const OpenMap & c) const
{
  auto cell = hidentity(vcomp(vcomp(a, b), c));
  return {cell, cell};
}

IsoCell<TopDouble::Cell> TopDouble::left_unitor(const OpenMap & m) const
{
  auto cell = hidentity(m);
  return {cell, cell};
}

IsoCell<TopDouble::Cell> TopDouble::right_unitor(const OpenMap & m) const
{
  auto cell = hidentity(m);
  return {cell, cell};
}

CompanionData<TopDouble> TopDouble::companion(const ContinuousMap & f) const
{
  OpenMap c{f.src, f.tgt, {}};
  for (auto u : f.src.opens) {
    std::uint32_t best = 0;
    for (auto v : f.tgt.opens) {
      if ((f.preimage(v) & ~u) == 0) {best |= v;}
    }
    c.image.push_back(best);
  }
  return {f, c,
    thin({base_.identity(f.src), f, vid(f.src), c}),
    thin({f, base_.identity(f.tgt), c, vid(f.tgt)})};
}

ConjointData<TopDouble> TopDouble::conjoint(const ContinuousMap & f) const
{
  OpenMap c{f.tgt, f.src, {}};
  for (auto v : f.tgt.opens) {
    c.image.push_back(f.preimage(v));
  }
  return {f, c,
    thin({f, base_.identity(f.src), vid(f.src), c}),
    thin({base_.identity(f.tgt), f, c, vid(f.tgt)})};
}

CotabulatorData<TopDouble> TopDouble::cotabulator(const OpenMap & m) const
{
  const int n0 = m.src.size;
  std::vector<std::uint32_t> opens;
  for (std::size_t i = 0; i < m.src.opens.size(); ++i) {
    for (auto u1 : m.tgt.opens) {
      if ((u1 & ~m.image[i]) == 0) {opens.push_back(m.src.opens[i] | (u1 << n0));}
    }
  }
  auto g = make_space(n0 + m.tgt.size, std::move(opens));
  ContinuousMap i0{m.src, g, {}};
  for (int a = 0; a < n0; ++a) {
    i0.table.push_back(a);
  }
  ContinuousMap i1{m.tgt, g, {}};
  for (int b = 0; b < m.tgt.size; ++b) {
    i1.table.push_back(n0 + b);
  }
  return {m, g, thin({i0, i1, m, vid(g)})};
}

TabulatorData<TopDouble> TopDouble::tabulator(const OpenMap & m) const
{
  std::vector<int> first;
  std::vector<int> second;
  for (int a = 0; a < m.src.size; ++a) {
    for (int b = 0; b < m.tgt.size; ++b) {
      bool in = true;
      for (auto u : m.src.opens) {
        if (contains(m(u), b) && !contains(u, a)) {in = false;}
      }
      if (in) {
        first.push_back(a);
        second.push_back(b);
      }
    }
  }
  auto p0 = specialization(m.src);
  auto p1 = specialization(m.tgt);
  const int n = static_cast<int>(first.size());
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      auto ui = static_cast<std::size_t>(i);
      auto uj = static_cast<std::size_t>(j);
      if (p0.le(first[ui], first[uj]) && p1.le(second[ui], second[uj])) {pairs.emplace_back(i, j);}
    }
  }
  auto s = alexandrov(generated_preorder(n, pairs));
  return {m, s, thin({{s, m.src, first}, {s, m.tgt, second}, vid(s), m})};
}

}  // namespace dblcat
