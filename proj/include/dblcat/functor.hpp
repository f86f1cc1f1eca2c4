// Copyright 2026 The dblcat Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef DBLCAT__FUNCTOR_HPP_
#define DBLCAT__FUNCTOR_HPP_

#include <chrono>
#include <functional>
#include <optional>
#include <string>

#include "dblcat/core.hpp"
#include "dblcat/enumerate.hpp"
#include "dblcat/report.hpp"

namespace dblcat
{

enum class FunctorKind
{
  lax,        ///< comparisons vid => F vid and F m ; F n => F (m ; n)
  oplax,      ///< comparisons F vid => vid and F (m ; n) => F m ; F n
  normal,     ///< lax with invertible identity comparisons
  opnormal,   ///< oplax with invertible identity comparisons
};

inline bool is_lax(FunctorKind k) {return k == FunctorKind::lax || k == FunctorKind::normal;}
inline bool needs_invertible_units(FunctorKind k)
{
  return k == FunctorKind::normal || k == FunctorKind::opnormal;
}

inline const char * to_string(FunctorKind k)
{
  switch (k) {
    case FunctorKind::lax: return "lax";
    case FunctorKind::oplax: return "oplax";
    case FunctorKind::normal: return "normal";
    case FunctorKind::opnormal: return "opnormal";
  }
  return "?";
}

/**
 * A functor S -> T of double categories that is the identity on objects and
 * horizontal morphisms, with its comparison cells. All comparison cells are
 * globular; their direction depends on `kind`.
 */
template <DoubleCategory S, DoubleCategory T>
struct FunctorData
{
  FunctorKind kind = FunctorKind::lax;
  std::function<typename T::VMor(const typename S::VMor &)> on_vmor;
  std::function<typename T::Cell(const typename S::Cell &)> on_cell;
  std::function<typename T::Cell(const typename S::Object &)> unit;
  std::function<typename T::Cell(const typename S::VMor &, const typename S::VMor &)> composition;
  /// Optional recorded inverse of `unit`; searched for when absent.
  std::function<typename T::Cell(const typename S::Object &)> unit_inverse;
};

template <DoubleCategory S, DoubleCategory T>
using LaxFunctorData = FunctorData<S, T>;

template <DoubleCategory S, DoubleCategory T>
using OplaxFunctorData = FunctorData<S, T>;

/// Inverse of F's identity comparison at x, recorded or searched.
template <DoubleCategory S, DoubleCategory T>
std::optional<typename T::Cell> unit_inverse(
  const T & t, const FunctorData<S, T> & f, const typename S::Object & x)
{
  auto u = f.unit(x);
  if (f.unit_inverse) {
    auto inv = f.unit_inverse(x);
    if (inv.frame.left == u.frame.right && inv.frame.right == u.frame.left &&
      t.paste_horizontal(u, inv) == t.hidentity(u.frame.left) &&
      t.paste_horizontal(inv, u) == t.hidentity(u.frame.right))
    {
      return inv;
    }
    return std::nullopt;
  }
  return find_inverse(t, u);
}

/**
 * Checks the laws of a lax or oplax functor over tuples from `s`:
 * frames of images, preservation of horizontal pasting and horizontal
 * identities, naturality of both comparison families, unit coherence on
 * both sides and associativity coherence. Normal and opnormal kinds also
 * require every identity comparison to be invertible.
 */
template <DoubleCategory S, DoubleCategory T>
Report verify_functor_laws(
  const S & s, const T & t, const FunctorData<S, T> & f, FunctorKind kind,
  const CheckBounds & bounds = {})
{
  auto t0 = std::chrono::steady_clock::now();
  Report r(std::string("functor-") + to_string(kind));
  const bool lax = is_lax(kind);
  Enumeration<S> e(s, bounds.object_bound);
  const auto & base = s.base();
  auto in_bound = [&](const typename S::VMor & m) {return s.within_bound(m);};
  auto hcomp = [&](const typename T::Cell & a, const typename T::Cell & b) {
      return hcompose(t, a, b);
    };
  auto vcomp = [&](const typename T::Cell & a, const typename T::Cell & b) {
      return vcompose(t, a, b);
    };

  // identity comparisons
  std::size_t invertible = 0;
  for (std::size_t a = 0; a < e.objects().size(); ++a) {
    const auto & x = e.objects()[a];
    auto u = f.unit(x);
    auto fid = f.on_vmor(s.vid(x));
    auto expected = lax ? globular_frame(t, t.vid(x), fid) : globular_frame(t, fid, t.vid(x));
    if (!r.check("unit.frame", u.frame == expected,
      [&] {return Json{{"object", as_json(x)}, {"cell", cell_json(u)}};}))
    {
      continue;
    }
    bool inv = unit_inverse(t, f, x).has_value();
    invertible += inv;
    if (needs_invertible_units(kind)) {
      r.check("unit.invertible", inv, [&] {return Json{{"object", as_json(x)}, {"cell", cell_json(u)}};});
    }
  }
  r.fact("invertible_units", invertible);
  r.fact("objects", e.objects().size());

  // unit naturality in horizontal morphisms
  for (const auto & x : e.objects()) {
    for (const auto & y : e.objects()) {
      for (const auto & h : base.hom(x, y)) {
        auto image = f.on_cell(s.videntity(h));
        bool ok;
        if (lax) {
          ok = hcomp(f.unit(x), image) == hcomp(t.videntity(h), f.unit(y));
        } else {
          ok = hcomp(image, f.unit(y)) == hcomp(f.unit(x), t.videntity(h));
        }
        r.check("unit.naturality", ok, [&] {return Json{{"h", as_json(h)}, {"image", cell_json(image)}};});
      }
    }
  }

  // cells: frames, horizontal pasting, horizontal identities
  {
    TupleBudget budget(r, "cells", bounds.max_tuples);
    TupleBudget paste_budget(r, "horizontal-pasting", bounds.max_tuples);
    for (std::size_t i = 0; i < e.size() && !budget.spent(); ++i) {
      const auto & m = e.vmor(i);
      auto fm = f.on_vmor(m);
      r.check("hidentity", f.on_cell(s.hidentity(m)) == t.hidentity(fm),
        [&] {return Json{{"vmor", as_json(m)}};});
      for (const auto & phi : e.cells_from(i)) {
        if (!budget.take()) {break;}
        auto img = f.on_cell(phi.cell);
        typename T::Frame expected{phi.cell.frame.top, phi.cell.frame.bottom, fm,
          f.on_vmor(phi.cell.frame.right)};
        if (!r.check("cell.frame", img.frame == expected,
          [&] {return Json{{"cell", cell_json(phi.cell)}, {"image", cell_json(img)}};}))
        {
          continue;
        }
        for (const auto & psi : e.cells_from(phi.right)) {
          if (!paste_budget.take()) {break;}
          auto whole = f.on_cell(s.paste_horizontal(phi.cell, psi.cell));
          auto parts = t.paste_horizontal(img, f.on_cell(psi.cell));
          r.check("horizontal-pasting", whole == parts, [&] {
              return Json{{"left", cell_json(phi.cell)}, {"right", cell_json(psi.cell)},
                {"image_of_paste", cell_json(whole)}, {"paste_of_images", cell_json(parts)}};
            });
        }
      }
    }
  }

  // composition comparisons: frames, naturality, unit coherence
  {
    TupleBudget budget(r, "composition", bounds.max_tuples);
    TupleBudget nat_budget(r, "composition-naturality", bounds.max_tuples);
    for (std::size_t i = 0; i < e.size() && !budget.spent(); ++i) {
      const auto & m = e.vmor(i);
      auto fm = f.on_vmor(m);
      for (auto j : e.after(i)) {
        const auto & n = e.vmor(j);
        auto mn = s.vcomp(m, n);
        if (!in_bound(mn)) {budget.skip(); continue;}
        if (!budget.take()) {break;}
        auto fn = f.on_vmor(n);
        auto mu = f.composition(m, n);
        auto fmn = f.on_vmor(mn);
        auto expected = lax ? globular_frame(t, t.vcomp(fm, fn), fmn) :
          globular_frame(t, fmn, t.vcomp(fm, fn));
        if (!r.check("composition.frame", mu.frame == expected,
          [&] {return Json{{"m", as_json(m)}, {"n", as_json(n)}, {"cell", cell_json(mu)}};}))
        {
          continue;
        }
        for (const auto & phi : e.cells_from(i)) {
          if (nat_budget.spent()) {break;}
          for (const auto & psi : e.cells_from(j)) {
            if (!(phi.cell.frame.bottom == psi.cell.frame.top)) {continue;}
            const auto & m2 = phi.cell.frame.right;
            const auto & n2 = psi.cell.frame.right;
            if (!in_bound(s.vcomp(m2, n2))) {nat_budget.skip(); continue;}
            if (!nat_budget.take()) {break;}
            auto stacked = f.on_cell(s.paste_vertical(phi.cell, psi.cell));
            auto separate = t.paste_vertical(f.on_cell(phi.cell), f.on_cell(psi.cell));
            auto mu2 = f.composition(m2, n2);
            bool ok = lax ? hcomp(mu, stacked) == hcomp(separate, mu2) :
              hcomp(stacked, mu2) == hcomp(mu, separate);
            r.check("composition.naturality", ok, [&] {
                return Json{{"upper", cell_json(phi.cell)}, {"lower", cell_json(psi.cell)}};
              });
          }
        }
      }

      // unit coherence
      const auto x0 = s.vsrc(m);
      const auto x1 = s.vtgt(m);
      auto m_vid = s.vcomp(m, s.vid(x1));
      auto vid_m = s.vcomp(s.vid(x0), m);
      if (!in_bound(m_vid) || !in_bound(vid_m)) {budget.skip(); continue;}
      auto fl = f.on_cell(s.left_unitor(m).cell);
      auto fr = f.on_cell(s.right_unitor(m).cell);
      auto tl = t.left_unitor(fm).cell;
      auto tr = t.right_unitor(fm).cell;
      bool left_ok, right_ok;
      if (lax) {
        left_ok = hcomp(hcomp(vcomp(t.hidentity(fm), f.unit(x1)), f.composition(m, s.vid(x1))), fl) == tl;
        right_ok = hcomp(hcomp(vcomp(f.unit(x0), t.hidentity(fm)), f.composition(s.vid(x0), m)), fr) == tr;
      } else {
        left_ok = hcomp(hcomp(f.composition(m, s.vid(x1)), vcomp(t.hidentity(fm), f.unit(x1))), tl) == fl;
        right_ok = hcomp(hcomp(f.composition(s.vid(x0), m), vcomp(f.unit(x0), t.hidentity(fm))), tr) == fr;
      }
      r.check("unit-coherence.left", left_ok, [&] {return Json{{"m", as_json(m)}};});
      r.check("unit-coherence.right", right_ok, [&] {return Json{{"m", as_json(m)}};});
    }
  }

  // associativity coherence
  {
    TupleBudget budget(r, "associativity", bounds.max_tuples);
    for (std::size_t ia = 0; ia < e.size() && !budget.spent(); ++ia) {
      const auto & a = e.vmor(ia);
      for (auto ib : e.after(ia)) {
        if (budget.spent()) {break;}
        const auto & b = e.vmor(ib);
        auto ab = s.vcomp(a, b);
        if (!in_bound(ab)) {budget.skip(); continue;}
        for (auto ic : e.after(ib)) {
          const auto & c = e.vmor(ic);
          auto bc = s.vcomp(b, c);
          if (!in_bound(bc) || !in_bound(s.vcomp(ab, c)) || !in_bound(s.vcomp(a, bc))) {
            budget.skip();
            continue;
          }
          if (!budget.take()) {break;}
          auto fa = f.on_vmor(a);
          auto fb = f.on_vmor(b);
          auto fc = f.on_vmor(c);
          auto f_assoc = f.on_cell(s.associator(a, b, c).cell);
          auto t_assoc = t.associator(fa, fb, fc).cell;
          typename T::Cell lhs, rhs;
          if (lax) {
            lhs = hcomp(hcomp(vcomp(f.composition(a, b), t.hidentity(fc)), f.composition(ab, c)), f_assoc);
            rhs = hcomp(hcomp(t_assoc, vcomp(t.hidentity(fa), f.composition(b, c))), f.composition(a, bc));
          } else {
            lhs = hcomp(hcomp(f.composition(ab, c), vcomp(f.composition(a, b), t.hidentity(fc))), t_assoc);
            rhs = hcomp(hcomp(f_assoc, f.composition(a, bc)), vcomp(t.hidentity(fa), f.composition(b, c)));
          }
          r.check("associativity", lhs == rhs, [&] {
              return Json{{"a", as_json(a)}, {"b", as_json(b)}, {"c", as_json(c)},
                {"lhs", cell_json(lhs)}, {"rhs", cell_json(rhs)}};
            });
        }
      }
    }
  }

  r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace dblcat

#endif  // DBLCAT__FUNCTOR_HPP_
