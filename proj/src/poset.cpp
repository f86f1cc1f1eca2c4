// Copyright 2026 The dblcat Authors
// SPDX-License-Identifier: Apache-2.0

#include "dblcat/poset.hpp"

#include <string>
#include <utility>

namespace dblcat
{

void to_json(Json & j, const MonotoneMap & f)
{
  j = Json{{"src", as_json(f.src)}, {"tgt", as_json(f.tgt)}, {"table", f.table}};
}

void validate(const MonotoneMap & f)
{
  if (!is_monotone(f.src, f.tgt, f.table)) {
    throw BoundaryError("map is out of range or not monotone");
  }
}

FinPosCategory::FinPosCategory(int max_size)
{
  for (int n = 0; n <= max_size; ++n) {
    for (auto & p : preorders_up_to_iso(n, true)) {
      catalog_.push_back(std::move(p));
    }
  }
}

FinPosCategory::FinPosCategory(std::vector<FinPoset> catalog)
: catalog_(std::move(catalog))
{
  for (const auto & x : catalog_) {
    validate_preorder(x, true);
  }
}

std::vector<MonotoneMap> FinPosCategory::hom(const FinPoset & x, const FinPoset & y) const
{
  std::vector<MonotoneMap> out;
  for (auto & t : monotone_tables(x, y)) {
    out.push_back({x, y, std::move(t)});
  }
  return out;
}

MonotoneMap FinPosCategory::compose(const MonotoneMap & g, const MonotoneMap & f) const
{
  if (!(f.tgt == g.src)) {
    throw BoundaryError("compose: target of first map differs from source of second");
  }
  MonotoneMap h{f.src, g.tgt, std::vector<int>(f.table.size())};
  for (std::size_t i = 0; i < f.table.size(); ++i) {
    h.table[i] = g(f.table[i]);
  }
  return h;
}

MonotoneMap FinPosCategory::identity(const FinPoset & x) const
{
  MonotoneMap f{x, x, std::vector<int>(static_cast<std::size_t>(x.size))};
  for (int i = 0; i < x.size; ++i) {
    f.table[static_cast<std::size_t>(i)] = i;
  }
  return f;
}

Cocone<FinPoset, MonotoneMap> FinPosCategory::pushout(const MonotoneMap & f, const MonotoneMap & g) const
{
  if (!(f.src == g.src)) {
    throw BoundaryError("pushout: the two maps have different sources");
  }
  auto glued = pushout_preorder(f.tgt, g.tgt, f.table, g.table, true);
  return {glued.apex, {f.tgt, glued.apex, glued.in0}, {g.tgt, glued.apex, glued.in1}};
}

MonotoneMap FinPosCategory::copair(
  const Cocone<FinPoset, MonotoneMap> & p, const MonotoneMap & q0, const MonotoneMap & q1) const
{
  if (!(q0.tgt == q1.tgt)) {
    throw BoundaryError("copair: the two maps have different targets");
  }
  MonotoneMap h{p.apex, q0.tgt, std::vector<int>(static_cast<std::size_t>(p.apex.size), -1)};
  for (std::size_t i = 0; i < p.in0.table.size(); ++i) {
    h.table[static_cast<std::size_t>(p.in0.table[i])] = q0.table[i];
  }
  for (std::size_t i = 0; i < p.in1.table.size(); ++i) {
    h.table[static_cast<std::size_t>(p.in1.table[i])] = q1.table[i];
  }
  validate(h);
  return h;
}

Cone<FinPoset, MonotoneMap> FinPosCategory::pullback(const MonotoneMap & f, const MonotoneMap & g) const
{
  if (!(f.tgt == g.tgt)) {
    throw BoundaryError("pullback: the two maps have different targets");
  }
  auto paired = pullback_preorder(f.src, g.src, f.table, g.table);
  return {paired.apex, {paired.apex, f.src, paired.out0}, {paired.apex, g.src, paired.out1}};
}

MonotoneMap FinPosCategory::pair(
  const Cone<FinPoset, MonotoneMap> & p, const MonotoneMap & q0, const MonotoneMap & q1) const
{
  MonotoneMap h{q0.src, p.apex, std::vector<int>(q0.table.size(), -1)};
  for (std::size_t i = 0; i < q0.table.size(); ++i) {
    for (int k = 0; k < p.apex.size; ++k) {
      if (p.out0(k) == q0.table[i] && p.out1(k) == q1.table[i]) {
        h.table[i] = k;
      }
    }
  }
  validate(h);
  return h;
}

FinPoset FinPosCategory::sections_object(const MonotoneMap & p) const
{
  return sections_preorder(p.src, p.tgt, p.table).apex;
}

MonotoneMap FinPosCategory::evaluate_sections(const MonotoneMap & p, const MonotoneMap & point) const
{
  auto s = sections_preorder(p.src, p.tgt, p.table);
  MonotoneMap ev{s.apex, p.src, {}};
  for (const auto & sec : s.sections) {
    ev.table.push_back(sec[static_cast<std::size_t>(point(0))]);
  }
  return ev;
}

// ---------------------------------------------------------------------------

void to_json(Json & j, const OrderIdeal & m)
{
  Json pairs = Json::array();
  for (int a = 0; a < m.src.size; ++a) {
    for (int b = 0; b < m.tgt.size; ++b) {
      if (m.has(a, b)) {pairs.push_back({a, b});}
    }
  }
  j = Json{{"src", as_json(m.src)}, {"tgt", as_json(m.tgt)}, {"ideal", pairs}};
}

namespace
{

bool closed(const OrderIdeal & m)
{
  for (int a = 0; a < m.src.size; ++a) {
    for (int b = 0; b < m.tgt.size; ++b) {
      if (!m.has(a, b)) {continue;}
      for (int a2 = 0; a2 < m.src.size; ++a2) {
        for (int b2 = 0; b2 < m.tgt.size; ++b2) {
          if (m.src.le(a2, a) && m.tgt.le(b, b2) && !m.has(a2, b2)) {return false;}
        }
      }
    }
  }
  return true;
}

}  // namespace

void validate(const OrderIdeal & m)
{
  if (m.rel.size() != static_cast<std::size_t>(m.src.size * m.tgt.size)) {
    throw BoundaryError("ideal matrix has the wrong size");
  }
  if (!closed(m)) {
    throw BoundaryError("ideal closure fails: not down-closed in the source or up-closed in the target");
  }
}

std::vector<OrderIdeal> all_ideals(const FinPoset & x0, const FinPoset & x1)
{
  const std::size_t cells = static_cast<std::size_t>(x0.size * x1.size);
  if (cells > 20) {
    throw BoundaryError("ideal enumeration is limited to 20 pairs");
  }
  std::vector<OrderIdeal> out;
  for (std::uint32_t mask = 0; mask < (1u << cells); ++mask) {
    OrderIdeal m{x0, x1, std::vector<std::uint8_t>(cells, 0)};
    for (std::size_t k = 0; k < cells; ++k) {
      m.rel[k] = (mask >> k) & 1u;
    }
    if (closed(m)) {out.push_back(std::move(m));}
  }
  return out;
}

// ---------------------------------------------------------------------------

OrderIdeal PosDouble::vid(const FinPoset & x) const
{
  return {x, x, x.leq};
}

OrderIdeal PosDouble::vcomp(const OrderIdeal & m, const OrderIdeal & n) const
{
  if (!(m.tgt == n.src)) {
    throw BoundaryError("vcomp: target of the first ideal differs from source of the second");
  }
  OrderIdeal out{m.src, n.tgt, std::vector<std::uint8_t>(static_cast<std::size_t>(m.src.size * n.tgt.size), 0)};
  for (int a = 0; a < m.src.size; ++a) {
    for (int c = 0; c < n.tgt.size; ++c) {
      for (int b = 0; b < m.tgt.size; ++b) {
        if (m.has(a, b) && n.has(b, c)) {
          out.rel[static_cast<std::size_t>(a * n.tgt.size + c)] = 1;
          break;
        }
      }
    }
  }
  return out;
}

bool PosDouble::holds(const Frame & b) const
{
  for (int a = 0; a < b.left.src.size; ++a) {
    for (int c = 0; c < b.left.tgt.size; ++c) {
      if (b.left.has(a, c) && !b.right.has(b.top(a), b.bottom(c))) {return false;}
    }
  }
  return true;
}

std::vector<PosDouble::Cell> PosDouble::cells(const Frame & b) const
{
  if (!frame_well_formed(*this, b) || !holds(b)) {
    return {};
  }
  return {Cell{b, {}}};
}

PosDouble::Cell PosDouble::thin(const Frame & b) const
{
  if (!frame_well_formed(*this, b)) {
    throw BoundaryError("frame edges do not meet");
  }
  if (!holds(b)) {
    throw BoundaryError("cell condition fails on the frame");
  }
  return {b, {}};
}

PosDouble::Cell PosDouble::paste_horizontal(const Cell & a, const Cell & b) const
{
  if (!(a.frame.right == b.frame.left)) {
    throw BoundaryError("paste_horizontal: edges differ");
  }
  return thin({base_.compose(b.frame.top, a.frame.top), base_.compose(b.frame.bottom, a.frame.bottom),
      a.frame.left, b.frame.right});
}

PosDouble::Cell PosDouble::paste_vertical(const Cell & a, const Cell & b) const
{
  if (!(a.frame.bottom == b.frame.top)) {
    throw BoundaryError("paste_vertical: edges differ");
  }
  return thin({a.frame.top, b.frame.bottom, vcomp(a.frame.left, b.frame.left),
      vcomp(a.frame.right, b.frame.right)});
}

PosDouble::Cell PosDouble::hidentity(const OrderIdeal & m) const
{
  return thin({base_.identity(m.src), base_.identity(m.tgt), m, m});
}

PosDouble::Cell PosDouble::videntity(const MonotoneMap & f) const
{
  return thin({f, f, vid(f.src), vid(f.tgt)});
}

IsoCell<PosDouble::Cell> PosDouble::associator(
  const OrderIdeal & a, const OrderIdeal & b, const OrderIdeal & c) const
{
  auto cell = hidentity(vcomp(vcomp(a, b), c));
  return {cell, cell};
}

IsoCell<PosDouble::Cell> PosDouble::left_unitor(const OrderIdeal & m) const
{
  auto cell = hidentity(vcomp(m, vid(m.tgt)));
  return {cell, cell};
}

IsoCell<PosDouble::Cell> PosDouble::right_unitor(const OrderIdeal & m) const
{
  auto cell = hidentity(vcomp(vid(m.src), m));
  return {cell, cell};
}

CompanionData<PosDouble> PosDouble::companion(const MonotoneMap & f) const
{
  OrderIdeal c{f.src, f.tgt, std::vector<std::uint8_t>(static_cast<std::size_t>(f.src.size * f.tgt.size), 0)};
  for (int x = 0; x < f.src.size; ++x) {
    for (int y = 0; y < f.tgt.size; ++y) {
      c.rel[static_cast<std::size_t>(x * f.tgt.size + y)] = f.tgt.le(f(x), y);
    }
  }
  return {f, c,
    thin({base_.identity(f.src), f, vid(f.src), c}),
    thin({f, base_.identity(f.tgt), c, vid(f.tgt)})};
}

ConjointData<PosDouble> PosDouble::conjoint(const MonotoneMap & f) const
{
  OrderIdeal c{f.tgt, f.src, std::vector<std::uint8_t>(static_cast<std::size_t>(f.src.size * f.tgt.size), 0)};
  for (int y = 0; y < f.tgt.size; ++y) {
    for (int x = 0; x < f.src.size; ++x) {
      c.rel[static_cast<std::size_t>(y * f.src.size + x)] = f.tgt.le(y, f(x));
    }
  }
  return {f, c,
    thin({f, base_.identity(f.src), vid(f.src), c}),
    thin({base_.identity(f.tgt), f, c, vid(f.tgt)})};
}

CotabulatorData<PosDouble> PosDouble::cotabulator(const OrderIdeal & m) const
{
  std::vector<std::pair<int, int>> across;
  for (int a = 0; a < m.src.size; ++a) {
    for (int b = 0; b < m.tgt.size; ++b) {
      if (m.has(a, b)) {across.emplace_back(a, b);}
    }
  }
  auto g = collage_preorder(m.src, m.tgt, across);
  MonotoneMap i0{m.src, g, {}};
  for (int a = 0; a < m.src.size; ++a) {
    i0.table.push_back(a);
  }
  MonotoneMap i1{m.tgt, g, {}};
  for (int b = 0; b < m.tgt.size; ++b) {
    i1.table.push_back(m.src.size + b);
  }
  return {m, g, thin({i0, i1, m, vid(g)})};
}

TabulatorData<PosDouble> PosDouble::tabulator(const OrderIdeal & m) const
{
  std::vector<int> first;
  std::vector<int> second;
  for (int a = 0; a < m.src.size; ++a) {
    for (int b = 0; b < m.tgt.size; ++b) {
      if (m.has(a, b)) {
        first.push_back(a);
        second.push_back(b);
      }
    }
  }
  const int n = static_cast<int>(first.size());
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      auto ui = static_cast<std::size_t>(i);
      auto uj = static_cast<std::size_t>(j);
      if (m.src.le(first[ui], first[uj]) && m.tgt.le(second[ui], second[uj])) {
        pairs.emplace_back(i, j);
      }
    }
  }
  auto s = generated_preorder(n, pairs);
  return {m, s, thin({{s, m.src, first}, {s, m.tgt, second}, vid(s), m})};
}

}  // namespace dblcat
