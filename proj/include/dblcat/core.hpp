// Copyright 2026 The dblcat Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef DBLCAT__CORE_HPP_
#define DBLCAT__CORE_HPP_

#include <concepts>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "dblcat/category.hpp"
#include "dblcat/report.hpp"

namespace dblcat
{

/**
 * The frame of a square cell.
 *
 *     X0 --top--> Y0
 *     |           |
 *   left        right      (vertical morphisms)
 *     v           v
 *     X1 -bottom-> Y1
 */
template <class H, class V>
struct Boundary
{
  H top;
  H bottom;
  V left;
  V right;

  bool operator==(const Boundary &) const = default;
};

/// A cell: its frame plus instance-specific witness data (a map of apexes,
/// a natural transformation, or nothing at all for thin instances).
template <class H, class V, class W>
struct Cell
{
  Boundary<H, V> frame;
  W witness;

  bool operator==(const Cell &) const = default;
};

/// An invertible cell recorded together with its inverse.
template <class C>
struct IsoCell
{
  C cell;
  C inverse;
};

/**
 * A finite weak double category.
 *
 * Horizontal composition is strict and lives in the base category. Vertical
 * composition is weak: `vcomp(m, n)` is m followed by n, written m ; n.
 * Globular cells (identity top and bottom edges) witness the laws:
 *
 *   associator(a, b, c) : (a ; b) ; c => a ; (b ; c)
 *   left_unitor(m)      : m ; vid => m
 *   right_unitor(m)     : vid ; m => m
 *
 * Every carrier is a value type compared extensionally.
 */
template <class D>
concept DoubleCategory = requires(
  const D & d,
  const typename D::Object & x,
  const typename D::HMor & f,
  const typename D::VMor & m,
  const typename D::Cell & c,
  const typename D::Frame & b) {
  requires Category<typename D::Base>;
  requires std::same_as<typename D::Object, typename D::Base::Object>;
  requires std::same_as<typename D::HMor, typename D::Base::Morphism>;
  requires std::same_as<typename D::Frame, Boundary<typename D::HMor, typename D::VMor>>;
  requires std::same_as<
    typename D::Cell, Cell<typename D::HMor, typename D::VMor, typename D::Witness>>;
  { d.base() } -> std::convertible_to<const typename D::Base &>;
  { d.objects() } -> std::convertible_to<std::vector<typename D::Object>>;
  { d.vsrc(m) } -> std::convertible_to<typename D::Object>;
  { d.vtgt(m) } -> std::convertible_to<typename D::Object>;
  { d.vid(x) } -> std::same_as<typename D::VMor>;
  { d.vcomp(m, m) } -> std::same_as<typename D::VMor>;
  { d.vmors(x, x) } -> std::same_as<std::vector<typename D::VMor>>;
  { d.cells(b) } -> std::same_as<std::vector<typename D::Cell>>;
  { d.paste_horizontal(c, c) } -> std::same_as<typename D::Cell>;
  { d.paste_vertical(c, c) } -> std::same_as<typename D::Cell>;
  { d.hidentity(m) } -> std::same_as<typename D::Cell>;
  { d.videntity(f) } -> std::same_as<typename D::Cell>;
  { d.associator(m, m, m) } -> std::same_as<IsoCell<typename D::Cell>>;
  { d.left_unitor(m) } -> std::same_as<IsoCell<typename D::Cell>>;
  { d.right_unitor(m) } -> std::same_as<IsoCell<typename D::Cell>>;
  { d.within_bound(m) } -> std::convertible_to<bool>;
  requires std::equality_comparable<typename D::VMor>;
};

// ---------------------------------------------------------------------------
// Checked pasting.

template <DoubleCategory D>
typename D::Cell hcompose(const D & d, const typename D::Cell & left, const typename D::Cell & right)
{
  if (!(left.frame.right == right.frame.left)) {
    throw BoundaryError("hcompose: right edge of left cell differs from left edge of right cell");
  }
  return d.paste_horizontal(left, right);
}

/// Pastes several cells left to right.
template <DoubleCategory D>
typename D::Cell hcompose(const D & d, std::initializer_list<typename D::Cell> cells)
{
  auto it = cells.begin();
  typename D::Cell acc = *it;
  for (++it; it != cells.end(); ++it) {
    acc = hcompose(d, acc, *it);
  }
  return acc;
}

template <DoubleCategory D>
typename D::Cell vcompose(const D & d, const typename D::Cell & top, const typename D::Cell & bottom)
{
  if (!(top.frame.bottom == bottom.frame.top)) {
    throw BoundaryError("vcompose: bottom edge of upper cell differs from top edge of lower cell");
  }
  return d.paste_vertical(top, bottom);
}

/// Frame of a globular cell m => n (identity top and bottom edges).
template <DoubleCategory D>
typename D::Frame globular_frame(const D & d, const typename D::VMor & m, const typename D::VMor & n)
{
  const auto & c = d.base();
  return {c.identity(d.vsrc(m)), c.identity(d.vtgt(m)), m, n};
}

template <DoubleCategory D>
bool frame_well_formed(const D & d, const typename D::Frame & b)
{
  const auto & c = d.base();
  return d.vsrc(b.left) == c.src(b.top) && d.vtgt(b.left) == c.src(b.bottom) &&
         d.vsrc(b.right) == c.tgt(b.top) && d.vtgt(b.right) == c.tgt(b.bottom);
}

/// Searches for a two-sided inverse of `cell` among cells of the reversed frame.
template <DoubleCategory D>
std::optional<typename D::Cell> find_inverse(const D & d, const typename D::Cell & cell)
{
  const auto & c = d.base();
  const auto & b = cell.frame;
  if (!is_iso(c, b.top) || !is_iso(c, b.bottom)) {
    return std::nullopt;
  }
  for (const auto & top_inv : c.hom(c.tgt(b.top), c.src(b.top))) {
    if (!(c.compose(top_inv, b.top) == c.identity(c.src(b.top)))) {continue;}
    for (const auto & bot_inv : c.hom(c.tgt(b.bottom), c.src(b.bottom))) {
      if (!(c.compose(bot_inv, b.bottom) == c.identity(c.src(b.bottom)))) {continue;}
      for (const auto & cand : d.cells({top_inv, bot_inv, b.right, b.left})) {
        if (d.paste_horizontal(cell, cand) == d.hidentity(b.left) &&
          d.paste_horizontal(cand, cell) == d.hidentity(b.right))
        {
          return cand;
        }
      }
    }
  }
  return std::nullopt;
}

/// Globular isomorphism m => n, if one exists.
template <DoubleCategory D>
std::optional<IsoCell<typename D::Cell>> find_globular_iso(
  const D & d, const typename D::VMor & m, const typename D::VMor & n)
{
  if (!(d.vsrc(m) == d.vsrc(n)) || !(d.vtgt(m) == d.vtgt(n))) {
    return std::nullopt;
  }
  for (const auto & cell : d.cells(globular_frame(d, m, n))) {
    for (const auto & inv : d.cells(globular_frame(d, n, m))) {
      if (d.paste_horizontal(cell, inv) == d.hidentity(m) &&
        d.paste_horizontal(inv, cell) == d.hidentity(n))
      {
        return IsoCell<typename D::Cell>{cell, inv};
      }
    }
  }
  return std::nullopt;
}

/// Every horizontal morphism between catalog objects.
template <DoubleCategory D>
std::vector<typename D::HMor> all_hmors(const D & d)
{
  std::vector<typename D::HMor> out;
  for (const auto & x : d.objects()) {
    for (const auto & y : d.objects()) {
      for (auto & f : d.base().hom(x, y)) {
        out.push_back(std::move(f));
      }
    }
  }
  return out;
}

/// Every vertical morphism between catalog objects that is within bound.
template <DoubleCategory D>
std::vector<typename D::VMor> all_vmors(const D & d)
{
  std::vector<typename D::VMor> out;
  for (const auto & x : d.objects()) {
    for (const auto & y : d.objects()) {
      for (auto & m : d.vmors(x, y)) {
        out.push_back(std::move(m));
      }
    }
  }
  return out;
}

/// All cells m => n with arbitrary top and bottom edges.
template <DoubleCategory D>
std::vector<typename D::Cell> cells_between(
  const D & d, const typename D::VMor & m, const typename D::VMor & n)
{
  std::vector<typename D::Cell> out;
  const auto & c = d.base();
  for (const auto & top : c.hom(d.vsrc(m), d.vsrc(n))) {
    for (const auto & bottom : c.hom(d.vtgt(m), d.vtgt(n))) {
      for (auto & cell : d.cells({top, bottom, m, n})) {
        out.push_back(std::move(cell));
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Structure carried by a horizontal or vertical morphism.

/**
 * Companion of f : X -> Y: a vertical f_* : X -> Y with
 *   eta : (top id_X, left vid_X, right f_*, bottom f)
 *   eps : (top f, left f_*, right vid_Y, bottom id_Y).
 */
template <class D>
struct CompanionData
{
  typename D::HMor f;
  typename D::VMor companion;
  typename D::Cell eta;
  typename D::Cell eps;
};

/**
 * Conjoint of f : X -> Y: a vertical f^* : Y -> X with
 *   alpha : (top f, left vid_X, right f^*, bottom id_X)
 *   beta  : (top id_Y, left f^*, right vid_Y, bottom f).
 */
template <class D>
struct ConjointData
{
  typename D::HMor f;
  typename D::VMor conjoint;
  typename D::Cell alpha;
  typename D::Cell beta;
};

/// 1-cotabulator of m : X0 -> X1: iota has left m, right vid(gamma),
/// top i0 : X0 -> gamma, bottom i1 : X1 -> gamma.
template <class D>
struct CotabulatorData
{
  typename D::VMor m;
  typename D::Object gamma;
  typename D::Cell iota;

  const typename D::HMor & i0() const {return iota.frame.top;}
  const typename D::HMor & i1() const {return iota.frame.bottom;}
};

/// 1-tabulator of m : X0 -> X1: tau has left vid(sigma), right m,
/// top p0 : sigma -> X0, bottom p1 : sigma -> X1.
template <class D>
struct TabulatorData
{
  typename D::VMor m;
  typename D::Object sigma;
  typename D::Cell tau;

  const typename D::HMor & p0() const {return tau.frame.top;}
  const typename D::HMor & p1() const {return tau.frame.bottom;}
};

template <class D>
concept HasCompanions = DoubleCategory<D> && requires(const D & d, const typename D::HMor & f) {
  { d.companion(f) } -> std::same_as<CompanionData<D>>;
  { d.conjoint(f) } -> std::same_as<ConjointData<D>>;
};

template <class D>
concept HasCotabulators = DoubleCategory<D> && requires(const D & d, const typename D::VMor & m) {
  { d.cotabulator(m) } -> std::same_as<CotabulatorData<D>>;
};

template <class D>
concept HasTabulators = DoubleCategory<D> && requires(const D & d, const typename D::VMor & m) {
  { d.tabulator(m) } -> std::same_as<TabulatorData<D>>;
};

// ---------------------------------------------------------------------------
// Witness serialization. Instances provide `to_json(Json&, const T&)` for
// their object and morphism types; thin instances use std::monostate.

template <class W>
Json witness_json(const W & w)
{
  if constexpr (std::is_same_v<W, std::monostate>) {
    return nullptr;
  } else {
    Json j;
    to_json(j, w);
    return j;
  }
}

template <class H, class V, class W>
Json cell_json(const Cell<H, V, W> & cell)
{
  Json top, bottom, left, right;
  to_json(top, cell.frame.top);
  to_json(bottom, cell.frame.bottom);
  to_json(left, cell.frame.left);
  to_json(right, cell.frame.right);
  return Json{{"top", top}, {"bottom", bottom}, {"left", left}, {"right", right},
    {"witness", witness_json(cell.witness)}};
}

template <class T>
Json as_json(const T & value)
{
  Json j;
  to_json(j, value);
  return j;
}

template <class M>
void to_json(Json & j, const Opp<M> & f)
{
  Json inner;
  to_json(inner, f.arrow);
  j = Json{{"op", inner}};
}

}  // namespace dblcat

#endif  // DBLCAT__CORE_HPP_
