// Copyright 2026 The dblcat Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef DBLCAT__COTAB_HPP_
#define DBLCAT__COTAB_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dblcat/category.hpp"
#include "dblcat/core.hpp"
#include "dblcat/enumerate.hpp"
#include "dblcat/opdual.hpp"
#include "dblcat/report.hpp"

namespace dblcat
{

template <DoubleCategory D>
Json cotabulator_json(const CotabulatorData<D> & c)
{
  return Json{{"m", as_json(c.m)}, {"gamma", as_json(c.gamma)}, {"iota", cell_json(c.iota)}};
}

template <DoubleCategory D>
Json tabulator_json(const TabulatorData<D> & t)
{
  return Json{{"m", as_json(t.m)}, {"sigma", as_json(t.sigma)}, {"tau", cell_json(t.tau)}};
}

template <DoubleCategory D>
TabulatorData<HorizontalOp<D>> mirrored(const CotabulatorData<D> & c)
{
  return {c.m, c.gamma, HorizontalOp<D>::mirror(c.iota)};
}

template <DoubleCategory D>
CotabulatorData<HorizontalOp<D>> mirrored(const TabulatorData<D> & t)
{
  return {t.m, t.sigma, HorizontalOp<D>::mirror(t.tau)};
}

/// Every h : gamma -> tgt with iota | videntity(h) = phi.
template <DoubleCategory D>
std::vector<typename D::HMor> cotabulator_factorizations(
  const D & d, const CotabulatorData<D> & c, const typename D::Cell & phi)
{
  std::vector<typename D::HMor> out;
  for (const auto & h : d.base().hom(c.gamma, d.base().tgt(phi.frame.top))) {
    if (d.paste_horizontal(c.iota, d.videntity(h)) == phi) {
      out.push_back(h);
    }
  }
  return out;
}

/// Every h : src -> sigma with videntity(h) | tau = phi.
template <DoubleCategory D>
std::vector<typename D::HMor> tabulator_factorizations(
  const D & d, const TabulatorData<D> & t, const typename D::Cell & phi)
{
  std::vector<typename D::HMor> out;
  for (const auto & h : d.base().hom(d.base().src(phi.frame.top), t.sigma)) {
    if (d.paste_horizontal(d.videntity(h), t.tau) == phi) {
      out.push_back(h);
    }
  }
  return out;
}

/// The unique h with iota | videntity(h) = phi; throws MissingStructure otherwise.
template <DoubleCategory D>
typename D::HMor factor_through(const D & d, const CotabulatorData<D> & c, const typename D::Cell & phi)
{
  auto hs = cotabulator_factorizations(d, c, phi);
  if (hs.size() != 1) {
    throw MissingStructure("cell factors through the cotabulator " + std::to_string(hs.size()) +
            " times");
  }
  return hs.front();
}

template <DoubleCategory D>
typename D::HMor factor_through(const D & d, const TabulatorData<D> & t, const typename D::Cell & phi)
{
  auto hs = tabulator_factorizations(d, t, phi);
  if (hs.size() != 1) {
    throw MissingStructure("cell factors through the tabulator " + std::to_string(hs.size()) +
            " times");
  }
  return hs.front();
}

/**
 * Gamma on a cell theta : m => n, the unique map between cotabulators
 * with iota_m | videntity(h) = theta | iota_n.
 */
template <DoubleCategory D>
typename D::HMor gamma_on_cell(
  const D & d, const CotabulatorData<D> & cm, const CotabulatorData<D> & cn, const typename D::Cell & theta)
{
  return factor_through(d, cm, d.paste_horizontal(theta, cn.iota));
}

template <DoubleCategory D>
bool cotabulator_frame_ok(const D & d, const CotabulatorData<D> & c)
{
  const auto & f = c.iota.frame;
  return f.left == c.m && f.right == d.vid(c.gamma) && frame_well_formed(d, f);
}

template <DoubleCategory D>
bool tabulator_frame_ok(const D & d, const TabulatorData<D> & t)
{
  const auto & f = t.tau.frame;
  return f.left == d.vid(t.sigma) && f.right == t.m && frame_well_formed(d, f);
}

/**
 * Universal property of a 1-cotabulator: for every catalog object Y within
 * the bound and every cell from m to vid(Y), exactly one h : gamma -> Y
 * factors it.
 */
template <DoubleCategory D>
Report verify_1cotabulator(const D & d, const CotabulatorData<D> & c, const CheckBounds & bounds = {})
{
  Report r("cotabulator");
  const auto & base = d.base();
  auto witness = [&] {return cotabulator_json(c);};
  if (!r.check("frame", cotabulator_frame_ok(d, c), witness)) {
    return r;
  }
  const auto x0 = d.vsrc(c.m);
  const auto x1 = d.vtgt(c.m);
  TupleBudget budget(r, "cells", bounds.max_tuples);
  std::size_t targets = 0;
  for (const auto & y : d.objects()) {
    if (base.carrier_size(y) > bounds.object_bound) {continue;}
    if (budget.spent()) {break;}
    ++targets;
    std::vector<typename D::Cell> images;
    for (const auto & h : base.hom(c.gamma, y)) {
      images.push_back(d.paste_horizontal(c.iota, d.videntity(h)));
    }
    for (const auto & f0 : base.hom(x0, y)) {
      for (const auto & f1 : base.hom(x1, y)) {
        for (const auto & phi : d.cells({f0, f1, c.m, d.vid(y)})) {
          if (!budget.take()) {break;}
          std::size_t n = 0;
          for (const auto & img : images) {
            n += img == phi;
          }
          r.check("factorization.exists", n >= 1, [&] {
              return Json{{"cotabulator", witness()}, {"cell", cell_json(phi)}};
            });
          r.check("factorization.unique", n <= 1, [&] {
              return Json{{"cotabulator", witness()}, {"cell", cell_json(phi)}, {"factorizations", n}};
            });
        }
      }
    }
  }
  r.fact("targets", targets);
  return r;
}

/// Universal property of a 1-tabulator, checked in the horizontal opposite.
template <DoubleCategory D>
Report verify_1tabulator(const D & d, const TabulatorData<D> & t, const CheckBounds & bounds = {})
{
  HorizontalOp<D> op(d);
  auto r = verify_1cotabulator(op, mirrored(t), bounds);
  r.suite = "tabulator";
  return r;
}

template <HasCotabulators D>
Report verify_cotabulators(const D & d, const CheckBounds & bounds = {})
{
  Report r("cotabulators");
  Enumeration<D> e(d, bounds.object_bound);
  for (const auto & m : e.vmors()) {
    r.absorb(verify_1cotabulator(d, d.cotabulator(m), bounds));
  }
  r.fact("vmors", e.size());
  return r;
}

template <HasTabulators D>
Report verify_tabulators(const D & d, const CheckBounds & bounds = {})
{
  Report r("tabulators");
  Enumeration<D> e(d, bounds.object_bound);
  for (const auto & m : e.vmors()) {
    r.absorb(verify_1tabulator(d, d.tabulator(m), bounds));
  }
  r.fact("vmors", e.size());
  return r;
}

// ---------------------------------------------------------------------------
// Gamma -| Delta and Delta -| Sigma.

/**
 * Gamma -| Delta by enumeration: |D1(m, Delta Y)| = |D0(Gamma m, Y)| for all
 * m and Y within bound; the bijection h |-> iota | videntity(h) is natural in
 * Y and in m; Gamma preserves identities and composition of cells.
 */
template <HasCotabulators D>
Report check_gamma_delta_adjunction(const D & d, const CheckBounds & bounds = {})
{
  Report r("gamma-delta");
  const auto & base = d.base();
  Enumeration<D> e(d, bounds.object_bound);
  std::vector<CotabulatorData<D>> cot;
  for (const auto & m : e.vmors()) {
    cot.push_back(d.cotabulator(m));
  }
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    const auto & m = e.vmor(i);
    const auto & c = cot[i];
    r.check("unit", d.paste_horizontal(c.iota, d.videntity(base.identity(c.gamma))) == c.iota,
      [&] {return cotabulator_json(c);});
    for (const auto & y : e.objects()) {
      ++pairs;
      std::size_t cells = 0;
      for (const auto & f0 : base.hom(d.vsrc(m), y)) {
        for (const auto & f1 : base.hom(d.vtgt(m), y)) {
          cells += d.cells({f0, f1, m, d.vid(y)}).size();
        }
      }
      auto maps = base.hom(c.gamma, y);
      r.check("hom-bijection.cardinality", cells == maps.size(), [&] {
          return Json{{"m", as_json(m)}, {"Y", as_json(y)}, {"cells", cells}, {"maps", maps.size()}};
        });
      // naturality in Y
      for (const auto & y2 : e.objects()) {
        for (const auto & k : base.hom(y, y2)) {
          for (const auto & h : maps) {
            auto lhs = d.paste_horizontal(c.iota, d.videntity(base.compose(k, h)));
            auto rhs = d.paste_horizontal(d.paste_horizontal(c.iota, d.videntity(h)), d.videntity(k));
            r.check("naturality.target", lhs == rhs, [&] {
                return Json{{"m", as_json(m)}, {"h", as_json(h)}, {"k", as_json(k)}};
              });
          }
        }
      }
    }
  }
  r.fact("pairs", pairs);

  TupleBudget budget(r, "cells", bounds.max_tuples);
  TupleBudget pair_budget(r, "cell-pairs", bounds.max_tuples);
  for (std::size_t i = 0; i < e.size() && !budget.spent(); ++i) {
    auto gid = gamma_on_cell(d, cot[i], cot[i], d.hidentity(e.vmor(i)));
    r.check("gamma.identity", gid == base.identity(cot[i].gamma), [&] {return cotabulator_json(cot[i]);});
    for (const auto & a : e.cells_from(i)) {
      if (!budget.take()) {break;}
      std::optional<typename D::HMor> ga;
      try {
        ga = gamma_on_cell(d, cot[i], cot[a.right], a.cell);
      } catch (const MissingStructure &) {
      }
      r.check("gamma.defined", ga.has_value(), [&] {return cell_json(a.cell);});
      if (!ga) {continue;}
      // naturality in m, against every map out of the target cotabulator
      for (const auto & y : e.objects()) {
        for (const auto & h : base.hom(cot[a.right].gamma, y)) {
          auto lhs = d.paste_horizontal(a.cell, d.paste_horizontal(cot[a.right].iota, d.videntity(h)));
          auto rhs = d.paste_horizontal(cot[i].iota, d.videntity(base.compose(h, *ga)));
          r.check("naturality.source", lhs == rhs, [&] {
              return Json{{"cell", cell_json(a.cell)}, {"h", as_json(h)}};
            });
        }
      }
      for (const auto & b : e.cells_from(a.right)) {
        if (!pair_budget.take()) {break;}
        auto gb = gamma_on_cell(d, cot[a.right], cot[b.right], b.cell);
        auto gab = gamma_on_cell(d, cot[i], cot[b.right], d.paste_horizontal(a.cell, b.cell));
        r.check("gamma.composition", gab == base.compose(gb, *ga), [&] {
            return Json{{"first", cell_json(a.cell)}, {"second", cell_json(b.cell)}};
          });
      }
    }
  }
  return r;
}

/// Delta -| Sigma, checked as Gamma -| Delta in the horizontal opposite.
template <HasTabulators D>
Report check_delta_sigma_adjunction(const D & d, const CheckBounds & bounds = {})
{
  HorizontalOp<D> op(d);
  auto r = check_gamma_delta_adjunction(op, bounds);
  r.suite = "delta-sigma";
  return r;
}

// ---------------------------------------------------------------------------
// Strongness.

/**
 * The tetrahedron condition for a 1-tabulator. A commutative tetrahedron
 * over n : Y0 -> Y1 and m consists of cells
 *   A : n => vid(X0) over (f0, e)    B : n => vid(X1) over (d, f1)
 *   C : vid(Y0) => m over (f0, d)    E : vid(Y1) => m over (e, f1)
 * with r^-1 | (C over B) | l = l^-1 | (A over E) | r. Since C and E factor
 * uniquely as videntity(g0) | tau and videntity(g1) | tau, tetrahedra are
 * enumerated by (n, g0, g1, A, B). The condition asks for exactly one
 * xi : n => vid(sigma) over (g0, g1) with xi | videntity(p0) = A and
 * xi | videntity(p1) = B.
 */
template <DoubleCategory D>
Report check_strong_tabulator(const D & d, const TabulatorData<D> & t, const CheckBounds & bounds = {})
{
  Report r("strong");
  const auto & base = d.base();
  Enumeration<D> e(d, bounds.object_bound);
  const auto & m = t.m;
  const auto x0 = d.vsrc(m);
  const auto x1 = d.vtgt(m);
  const auto & p0 = t.p0();
  const auto & p1 = t.p1();
  TupleBudget budget(r, "tetrahedra", bounds.max_tuples);
  std::size_t commuting = 0;
  bool strong = true;
  for (const auto & n : e.vmors()) {
    if (budget.spent()) {break;}
    const auto y0 = d.vsrc(n);
    const auto y1 = d.vtgt(n);
    auto ln_inv = d.left_unitor(n).inverse;
    auto rn_inv = d.right_unitor(n).inverse;
    auto lm = d.left_unitor(m).cell;
    auto rm = d.right_unitor(m).cell;
    for (const auto & g0 : base.hom(y0, t.sigma)) {
      auto c = d.paste_horizontal(d.videntity(g0), t.tau);
      for (const auto & g1 : base.hom(y1, t.sigma)) {
        auto ecell = d.paste_horizontal(d.videntity(g1), t.tau);
        auto xis = d.cells({g0, g1, n, d.vid(t.sigma)});
        for (const auto & a : d.cells({base.compose(p0, g0), base.compose(p0, g1), n, d.vid(x0)})) {
          for (const auto & b : d.cells({base.compose(p1, g0), base.compose(p1, g1), n, d.vid(x1)})) {
            if (!budget.take()) {break;}
            auto square1 = hcompose(d, {rn_inv, vcompose(d, c, b), lm});
            auto square2 = hcompose(d, {ln_inv, vcompose(d, a, ecell), rm});
            if (!(square1 == square2)) {continue;}
            ++commuting;
            std::size_t k = 0;
            for (const auto & xi : xis) {
              if (d.paste_horizontal(xi, d.videntity(p0)) == a &&
                d.paste_horizontal(xi, d.videntity(p1)) == b)
              {
                ++k;
              }
            }
            bool ok = r.check("tetrahedron.factors", k == 1, [&] {
                return Json{{"n", as_json(n)}, {"g0", as_json(g0)}, {"g1", as_json(g1)},
                  {"A", cell_json(a)}, {"B", cell_json(b)}, {"factorizations", k}};
              });
            strong = strong && ok;
          }
        }
      }
    }
  }
  r.fact("commuting_tetrahedra", commuting);
  r.fact("strong", strong);
  return r;
}

/// The tetrahedron condition for a 1-cotabulator, via the horizontal opposite.
template <DoubleCategory D>
Report check_strong(const D & d, const CotabulatorData<D> & c, const CheckBounds & bounds = {})
{
  HorizontalOp<D> op(d);
  return check_strong_tabulator(op, mirrored(c), bounds);
}

// ---------------------------------------------------------------------------
// The object 2 and glueing.

/// Gamma(vid(1)) with its cotabulator cell; i0 and i1 are the two points.
template <HasCotabulators D>
requires HasTerminal<typename D::Base>
CotabulatorData<D> two_object(const D & d)
{
  return d.cotabulator(d.vid(d.base().terminal()));
}

/// The unique cell m => vid(1).
template <HasCotabulators D>
requires HasTerminal<typename D::Base>
typename D::Cell cell_to_terminal(const D & d, const typename D::VMor & m)
{
  const auto & base = d.base();
  const auto one = base.terminal();
  auto to0 = base.hom(d.vsrc(m), one);
  auto to1 = base.hom(d.vtgt(m), one);
  if (to0.size() != 1 || to1.size() != 1) {
    throw MissingStructure("terminal object is not terminal");
  }
  auto cells = d.cells({to0.front(), to1.front(), m, d.vid(one)});
  if (cells.size() != 1) {
    throw MissingStructure("vid(1) is not terminal among vertical morphisms");
  }
  return cells.front();
}

/// Gamma m -> 2, the image of m => vid(1).
template <HasCotabulators D>
requires HasTerminal<typename D::Base>
typename D::HMor over_two(const D & d, const CotabulatorData<D> & cm, const CotabulatorData<D> & two)
{
  return gamma_on_cell(d, cm, two, cell_to_terminal(d, cm.m));
}

/**
 * 2-glueing: m |-> (Gamma m -> 2) is full, faithful, and essentially
 * surjective onto the slice over 2, within the bound.
 */
template <HasCotabulators D>
requires HasTerminal<typename D::Base>
Report verify_2glueing(const D & d, const CheckBounds & bounds = {})
{
  Report r("2-glueing");
  const auto & base = d.base();
  auto two = two_object(d);
  r.fact("two", as_json(two.gamma));
  r.fact("two_size", base.carrier_size(two.gamma));
  Enumeration<D> e(d, bounds.object_bound);
  std::vector<CotabulatorData<D>> cot;
  std::vector<typename D::HMor> proj;
  for (const auto & m : e.vmors()) {
    cot.push_back(d.cotabulator(m));
    proj.push_back(over_two(d, cot.back(), two));
  }

  TupleBudget budget(r, "pairs", bounds.max_tuples);
  for (std::size_t i = 0; i < e.size() && !budget.spent(); ++i) {
    std::vector<std::vector<typename D::Cell>> by_target(e.size());
    for (const auto & oc : e.cells_from(i)) {
      by_target[oc.right].push_back(oc.cell);
    }
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (!budget.take()) {break;}
      std::vector<typename D::HMor> images;
      for (const auto & theta : by_target[j]) {
        images.push_back(gamma_on_cell(d, cot[i], cot[j], theta));
      }
      std::vector<typename D::HMor> slice;
      for (const auto & h : base.hom(cot[i].gamma, cot[j].gamma)) {
        if (base.compose(proj[j], h) == proj[i]) {slice.push_back(h);}
      }
      for (std::size_t a = 0; a < images.size(); ++a) {
        for (std::size_t b = a + 1; b < images.size(); ++b) {
          r.check("faithful", !(images[a] == images[b]), [&] {
              return Json{{"first", cell_json(by_target[j][a])}, {"second", cell_json(by_target[j][b])},
                {"common_image", as_json(images[a])}, {"two", as_json(two.gamma)}};
            });
        }
      }
      for (const auto & h : slice) {
        bool hit = false;
        for (const auto & img : images) {
          hit = hit || img == h;
        }
        r.check("full", hit, [&] {
            return Json{{"m", as_json(e.vmor(i))}, {"n", as_json(e.vmor(j))}, {"slice_map", as_json(h)}};
          });
      }
    }
  }

  std::size_t objects_over_two = 0;
  for (const auto & z : e.objects()) {
    for (const auto & p : base.hom(z, two.gamma)) {
      ++objects_over_two;
      bool found = false;
      for (std::size_t i = 0; i < e.size() && !found; ++i) {
        if (base.carrier_size(cot[i].gamma) != base.carrier_size(z)) {continue;}
        for (const auto & h : base.hom(z, cot[i].gamma)) {
          if (base.compose(proj[i], h) == p && is_iso(base, h)) {
            found = true;
            break;
          }
        }
      }
      r.check("essentially-surjective", found, [&] {
          return Json{{"object", as_json(z)}, {"map", as_json(p)}};
        });
    }
  }
  r.fact("objects_over_two", objects_over_two);
  return r;
}

// ---------------------------------------------------------------------------
// Sigma from the exponential by 2.

template <DoubleCategory D>
bool unique_factor(const D & d, const typename D::HMor & through, const typename D::HMor & target,
  typename D::HMor & out)
{
  const auto & base = d.base();
  int count = 0;
  auto found = unique_such(base.hom(base.src(target), base.src(through)),
      [&](const typename D::HMor & h) {return base.compose(through, h) == target;}, &count);
  if (!found) {return false;}
  out = *found;
  return true;
}

/**
 * Sigma m as the object of sections of Gamma m -> 2, with projections the
 * evaluations at the two points of 2 factored through i0 and i1. The cell
 * must be the only one on its frame.
 */
template <HasCotabulators D>
requires HasTerminal<typename D::Base> && HasSections<typename D::Base>
TabulatorData<D> sigma_from_exponential(const D & d, const typename D::VMor & m)
{
  const auto & base = d.base();
  auto two = two_object(d);
  auto cm = d.cotabulator(m);
  auto p = over_two(d, cm, two);
  auto s = base.sections_object(p);
  auto ev0 = base.evaluate_sections(p, two.i0());
  auto ev1 = base.evaluate_sections(p, two.i1());
  typename D::HMor g0 = ev0;
  typename D::HMor g1 = ev1;
  if (!unique_factor(d, cm.i0(), ev0, g0) || !unique_factor(d, cm.i1(), ev1, g1)) {
    throw MissingStructure("evaluation does not factor through the cotabulator inclusions");
  }
  auto cells = d.cells({g0, g1, d.vid(s), m});
  if (cells.size() != 1) {
    throw MissingStructure("the tabulator cell is not determined by its frame");
  }
  return {m, s, cells.front()};
}

/// Special isomorphism of tabulators: h : sigma -> sigma' invertible with
/// videntity(h) | tau' = tau.
template <DoubleCategory D>
std::optional<typename D::HMor> tabulator_iso(
  const D & d, const TabulatorData<D> & a, const TabulatorData<D> & b)
{
  if (!(a.m == b.m)) {return std::nullopt;}
  for (const auto & h : d.base().hom(a.sigma, b.sigma)) {
    if (d.paste_horizontal(d.videntity(h), b.tau) == a.tau && is_iso(d.base(), h)) {
      return h;
    }
  }
  return std::nullopt;
}

template <DoubleCategory D>
std::optional<typename D::HMor> cotabulator_iso(
  const D & d, const CotabulatorData<D> & a, const CotabulatorData<D> & b)
{
  if (!(a.m == b.m)) {return std::nullopt;}
  for (const auto & h : d.base().hom(a.gamma, b.gamma)) {
    if (d.paste_horizontal(a.iota, d.videntity(h)) == b.iota && is_iso(d.base(), h)) {
      return h;
    }
  }
  return std::nullopt;
}

/// sigma_from_exponential passes the tabulator checks and matches d.tabulator.
template <HasCotabulators D>
requires HasTabulators<D> && HasTerminal<typename D::Base> && HasSections<typename D::Base>
Report verify_sigma_from_exponential(const D & d, const CheckBounds & bounds = {})
{
  Report r("sigma-exponential");
  Enumeration<D> e(d, bounds.object_bound);
  for (const auto & m : e.vmors()) {
    std::optional<TabulatorData<D>> t;
    try {
      t = sigma_from_exponential(d, m);
    } catch (const MissingStructure & ex) {
      r.check("constructed", false, [&] {return Json{{"m", as_json(m)}, {"error", ex.what()}};});
      continue;
    }
    r.check("constructed", true);
    r.absorb(verify_1tabulator(d, *t, bounds));
    auto direct = d.tabulator(m);
    r.check("agrees-with-direct", tabulator_iso(d, *t, direct).has_value(), [&] {
        return Json{{"exponential", tabulator_json(*t)}, {"direct", tabulator_json(direct)}};
      });
  }
  r.fact("vmors", e.size());
  return r;
}

}  // namespace dblcat

#endif  // DBLCAT__COTAB_HPP_
