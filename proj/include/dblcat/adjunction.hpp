// Copyright 2026 The dblcat Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef DBLCAT__ADJUNCTION_HPP_
#define DBLCAT__ADJUNCTION_HPP_

#include <chrono>
#include <functional>
#include <string>
#include <vector>

#include "dblcat/compcon.hpp"
#include "dblcat/cotab.hpp"
#include "dblcat/enumerate.hpp"
#include "dblcat/functor.hpp"
#include "dblcat/opdual.hpp"
#include "dblcat/report.hpp"
#include "dblcat/spancospan.hpp"

namespace dblcat
{

template <DoubleCategory D>
typename CospanDouble<typename D::Base>::VMor cotabulator_cospan(const CotabulatorData<D> & c)
{
  return {c.iota.frame.top, c.iota.frame.bottom};
}

template <DoubleCategory D>
typename SpanDouble<typename D::Base>::VMor tabulator_span(const TabulatorData<D> & t)
{
  return {t.tau.frame.top, t.tau.frame.bottom};
}

/**
 * F : D -> Cospan(D0), identity on objects and horizontal morphisms:
 * m goes to the legs of its cotabulator, a cell to the induced map of
 * cotabulators. The comparisons F vid => vid and F (m ; n) => F m ; F n
 * are the maps out of cotabulators that the universal property gives.
 */
template <HasCotabulators D>
requires HasPushouts<typename D::Base>
OplaxFunctorData<D, CospanDouble<typename D::Base>> induced_F(const D & d)
{
  using Tgt = CospanDouble<typename D::Base>;
  using TV = typename Tgt::VMor;
  using TCell = typename Tgt::Cell;
  OplaxFunctorData<D, Tgt> f;
  f.kind = FunctorKind::oplax;

  f.on_vmor = [&d](const typename D::VMor & m) {
      return cotabulator_cospan(d.cotabulator(m));
    };

  f.on_cell = [&d](const typename D::Cell & theta) {
      auto cm = d.cotabulator(theta.frame.left);
      auto cn = d.cotabulator(theta.frame.right);
      return TCell{{theta.frame.top, theta.frame.bottom, cotabulator_cospan(cm), cotabulator_cospan(cn)},
        gamma_on_cell(d, cm, cn, theta)};
    };

  f.unit = [&d](const typename D::Object & x) {
      auto c = d.cotabulator(d.vid(x));
      auto idx = d.base().identity(x);
      return TCell{{idx, idx, cotabulator_cospan(c), TV{idx, idx}},
        factor_through(d, c, d.hidentity(d.vid(x)))};
    };

  f.composition = [&d](const typename D::VMor & m, const typename D::VMor & n) {
      const auto & base = d.base();
      auto cm = d.cotabulator(m);
      auto cn = d.cotabulator(n);
      auto cmn = d.cotabulator(d.vcomp(m, n));
      auto po = base.pushout(cm.iota.frame.bottom, cn.iota.frame.top);
      auto phi = hcompose(d,
          vcompose(d, hcompose(d, cm.iota, d.videntity(po.in0)), hcompose(d, cn.iota, d.videntity(po.in1))),
          d.left_unitor(d.vid(po.apex)).cell);
      TV composite{base.compose(po.in0, cm.iota.frame.top), base.compose(po.in1, cn.iota.frame.bottom)};
      return TCell{{base.identity(d.vsrc(m)), base.identity(d.vtgt(n)), cotabulator_cospan(cmn), composite},
        factor_through(d, cmn, phi)};
    };
  return f;
}

/**
 * F : D -> Span(D0), sending m to the legs of its tabulator; lax, with
 * comparisons vid => F vid and F m ; F n => F (m ; n) into tabulators.
 */
template <HasTabulators D>
requires HasPullbacks<typename D::Base>
LaxFunctorData<D, SpanDouble<typename D::Base>> induced_F_span(const D & d)
{
  using Tgt = SpanDouble<typename D::Base>;
  using TV = typename Tgt::VMor;
  using TCell = typename Tgt::Cell;
  LaxFunctorData<D, Tgt> f;
  f.kind = FunctorKind::lax;

  f.on_vmor = [&d](const typename D::VMor & m) {
      return tabulator_span(d.tabulator(m));
    };

  f.on_cell = [&d](const typename D::Cell & theta) {
      auto tm = d.tabulator(theta.frame.left);
      auto tn = d.tabulator(theta.frame.right);
      return TCell{{theta.frame.top, theta.frame.bottom, tabulator_span(tm), tabulator_span(tn)},
        factor_through(d, tn, hcompose(d, tm.tau, theta))};
    };

  f.unit = [&d](const typename D::Object & x) {
      auto t = d.tabulator(d.vid(x));
      auto idx = d.base().identity(x);
      return TCell{{idx, idx, TV{idx, idx}, tabulator_span(t)},
        factor_through(d, t, d.hidentity(d.vid(x)))};
    };

  f.composition = [&d](const typename D::VMor & m, const typename D::VMor & n) {
      const auto & base = d.base();
      auto tm = d.tabulator(m);
      auto tn = d.tabulator(n);
      auto tmn = d.tabulator(d.vcomp(m, n));
      auto pb = base.pullback(tm.tau.frame.bottom, tn.tau.frame.top);
      auto phi = hcompose(d, d.left_unitor(d.vid(pb.apex)).inverse,
          vcompose(d, hcompose(d, d.videntity(pb.out0), tm.tau), hcompose(d, d.videntity(pb.out1), tn.tau)));
      TV composite{base.compose(tm.tau.frame.top, pb.out0), base.compose(tn.tau.frame.bottom, pb.out1)};
      return TCell{{base.identity(d.vsrc(m)), base.identity(d.vtgt(n)), composite, tabulator_span(tmn)},
        factor_through(d, tmn, phi)};
    };
  return f;
}

// ---------------------------------------------------------------------------
// The adjunction F -| G.

/**
 * Unit eta_m : m => G F m in D and counit eps_c : F G c => c in Cospan(D0),
 * both globular, alongside the functors they relate.
 */
template <DoubleCategory D>
struct AdjunctionData
{
  using Cospans = CospanDouble<typename D::Base>;

  OplaxFunctorData<D, Cospans> F;
  LaxFunctorData<Cospans, D> G;
  std::function<typename D::Cell(const typename D::VMor &)> eta;
  std::function<typename Cospans::Cell(const typename Cospans::VMor &)> eps;
};

/// The cell G c => vid A of a cospan c into A: counits of c0_* and c1^* stacked.
template <HasCompanions D>
typename D::Cell cospan_cocone(const D & d, const typename CospanDouble<typename D::Base>::VMor & c)
{
  const auto a = d.base().tgt(c.left);
  return hcompose(d,
      vcompose(d, d.companion(c.left).eps, d.conjoint(c.right).beta),
      d.left_unitor(d.vid(a)).cell);
}

/**
 * eta_m flips the cotabulator cell of m through the companion of i0 and the
 * conjoint of i1; eps_c is the map out of the cotabulator of G c induced by
 * cospan_cocone.
 */
template <HasCompanions D>
requires HasCotabulators<D> && HasPushouts<typename D::Base>
AdjunctionData<D> build_adjunction(const D & d)
{
  using TCell = typename CospanDouble<typename D::Base>::Cell;
  AdjunctionData<D> a;
  a.F = induced_F(d);
  a.G = induced_G(d);

  a.eta = [&d](const typename D::VMor & m) {
      const auto & base = d.base();
      auto c = d.cotabulator(m);
      auto i0 = d.companion(c.iota.frame.top);
      auto i1 = d.conjoint(c.iota.frame.bottom);
      auto lowered = flip_conjoint(d, i1, c.iota, base.identity(d.vtgt(m)));
      auto raised = flip_companion(d, i0, lowered, base.identity(d.vsrc(m)));
      return hcompose(d, raised,
          d.paste_vertical(d.hidentity(i0.companion), d.right_unitor(i1.conjoint).cell));
    };

  a.eps = [&d](const typename CospanDouble<typename D::Base>::VMor & c) {
      const auto & base = d.base();
      auto g = d.vcomp(d.companion(c.left).companion, d.conjoint(c.right).conjoint);
      auto cg = d.cotabulator(g);
      return TCell{{base.identity(base.src(c.left)), base.identity(base.src(c.right)),
          cotabulator_cospan(cg), c},
        factor_through(d, cg, cospan_cocone(d, c))};
    };
  return a;
}

/**
 * Checks an adjunction F -| G: frames of eta and eps, both triangle
 * identities, naturality of eta in cells of D and of eps in cells of
 * Cospan(D0), and compatibility with the identity comparisons:
 *   eta_vid | G(F unit) = G unit  and  F(G unit) | eps_vid = F unit.
 */
template <DoubleCategory D>
Report verify_adjunction(const D & d, const AdjunctionData<D> & a, const CheckBounds & bounds = {})
{
  using Cospans = CospanDouble<typename D::Base>;
  auto t0 = std::chrono::steady_clock::now();
  Report r("adjunction");
  Cospans cospans(d.base(), bounds.object_bound);
  Enumeration<D> e(d, bounds.object_bound);
  Enumeration<Cospans> ec(cospans, bounds.object_bound);

  for (const auto & m : e.vmors()) {
    auto fm = a.F.on_vmor(m);
    auto eta = a.eta(m);
    if (!r.check("unit.frame", eta.frame == globular_frame(d, m, a.G.on_vmor(fm)),
      [&] {return Json{{"m", as_json(m)}, {"eta", cell_json(eta)}};}))
    {
      continue;
    }
    auto lhs = hcompose(cospans, a.F.on_cell(eta), a.eps(fm));
    r.check("triangle.F", lhs == cospans.hidentity(fm), [&] {
        return Json{{"m", as_json(m)}, {"pasted", cell_json(lhs)}};
      });
  }

  for (const auto & c : ec.vmors()) {
    auto gc = a.G.on_vmor(c);
    auto eps = a.eps(c);
    if (!r.check("counit.frame", eps.frame == globular_frame(cospans, a.F.on_vmor(gc), c),
      [&] {return Json{{"cospan", as_json(c)}, {"eps", cell_json(eps)}};}))
    {
      continue;
    }
    auto lhs = hcompose(d, a.eta(gc), a.G.on_cell(eps));
    r.check("triangle.G", lhs == d.hidentity(gc), [&] {
        return Json{{"cospan", as_json(c)}, {"pasted", cell_json(lhs)}};
      });
  }

  {
    TupleBudget budget(r, "unit-naturality", bounds.max_tuples);
    for (std::size_t i = 0; i < e.size() && !budget.spent(); ++i) {
      auto eta_m = a.eta(e.vmor(i));
      for (const auto & oc : e.cells_from(i)) {
        if (!budget.take()) {break;}
        const auto & theta = oc.cell;
        auto lhs = hcompose(d, theta, a.eta(theta.frame.right));
        auto rhs = hcompose(d, eta_m, a.G.on_cell(a.F.on_cell(theta)));
        r.check("unit.naturality", lhs == rhs, [&] {return Json{{"cell", cell_json(theta)}};});
      }
    }
  }

  {
    TupleBudget budget(r, "counit-naturality", bounds.max_tuples);
    for (std::size_t i = 0; i < ec.size() && !budget.spent(); ++i) {
      auto eps_c = a.eps(ec.vmor(i));
      for (const auto & oc : ec.cells_from(i)) {
        if (!budget.take()) {break;}
        const auto & sigma = oc.cell;
        auto lhs = hcompose(cospans, a.F.on_cell(a.G.on_cell(sigma)), a.eps(sigma.frame.right));
        auto rhs = hcompose(cospans, eps_c, sigma);
        r.check("counit.naturality", lhs == rhs, [&] {return Json{{"cell", cell_json(sigma)}};});
      }
    }
  }

  for (const auto & x : e.objects()) {
    auto g_side = hcompose(d, a.eta(d.vid(x)), a.G.on_cell(a.F.unit(x)));
    r.check("identity-comparison.G", g_side == a.G.unit(x), [&] {
        return Json{{"object", as_json(x)}, {"pasted", cell_json(g_side)}};
      });
    auto f_side = hcompose(cospans, a.F.on_cell(a.G.unit(x)), a.eps(cospans.vid(x)));
    r.check("identity-comparison.F", f_side == a.F.unit(x), [&] {
        return Json{{"object", as_json(x)}, {"pasted", cell_json(f_side)}};
      });
  }
  r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

/**
 * Reads the structure back out of the adjunction: companions and conjoints
 * from G, and the cotabulator cell of m as eta_m followed by the cocone of
 * F m. Each must bind and match the supplied structure up to special iso.
 * G c is also compared with a companion and conjoint found by search.
 */
template <HasCompanions D>
requires HasCotabulators<D> && HasPushouts<typename D::Base>
Report verify_round_trip(const D & d, const AdjunctionData<D> & a, const CheckBounds & bounds = {})
{
  using Cospans = CospanDouble<typename D::Base>;
  Report r("round-trip");
  Cospans cospans(d.base(), bounds.object_bound);
  Enumeration<D> e(d, bounds.object_bound);
  const auto & base = d.base();

  for (const auto & x : e.objects()) {
    for (const auto & y : e.objects()) {
      for (const auto & f : base.hom(x, y)) {
        auto p = partners_from_normal_lax(d, cospans, a.G, f);
        if (!r.check("partners.extracted", p.companion.has_value() && p.conjoint.has_value(),
          [&] {return Json{{"f", as_json(f)}};}))
        {
          continue;
        }
        r.check("companion.binds", verify_companion(d, *p.companion).ok(),
          [&] {return Json{{"extracted", companion_json(*p.companion)}};});
        r.check("companion.special-iso",
          find_globular_iso(d, p.companion->companion, d.companion(f).companion).has_value(),
          [&] {return Json{{"extracted", companion_json(*p.companion)}};});
        r.check("conjoint.binds", verify_conjoint(d, *p.conjoint).ok(),
          [&] {return Json{{"extracted", conjoint_json(*p.conjoint)}};});
        r.check("conjoint.special-iso",
          find_globular_iso(d, p.conjoint->conjoint, d.conjoint(f).conjoint).has_value(),
          [&] {return Json{{"extracted", conjoint_json(*p.conjoint)}};});
      }
    }
  }

  TupleBudget budget(r, "vmors", bounds.max_tuples);
  for (const auto & m : e.vmors()) {
    if (!budget.take()) {break;}
    auto original = d.cotabulator(m);
    auto fm = a.F.on_vmor(m);
    CotabulatorData<D> recovered{m, base.tgt(fm.left),
      hcompose(d, a.eta(m), cospan_cocone(d, fm))};
    r.check("cotabulator.recovered", recovered.iota == original.iota, [&] {
        return Json{{"m", as_json(m)}, {"recovered", cell_json(recovered.iota)},
          {"original", cell_json(original.iota)}};
      });
    r.check("cotabulator.special-iso", cotabulator_iso(d, recovered, original).has_value(),
      [&] {return Json{{"m", as_json(m)}};});
  }

  Enumeration<Cospans> ec(cospans, bounds.object_bound);
  TupleBudget cbudget(r, "cospans", bounds.max_tuples);
  for (const auto & c : ec.vmors()) {
    if (!cbudget.take()) {break;}
    auto fc = find_companion(d, c.left);
    auto kc = find_conjoint(d, c.right);
    if (!r.check("searched-partners.found", fc.has_value() && kc.has_value(),
      [&] {return Json{{"cospan", as_json(c)}};}))
    {
      continue;
    }
    auto searched = d.vcomp(fc->companion, kc->conjoint);
    r.check("G.special-iso-to-searched", find_globular_iso(d, a.G.on_vmor(c), searched).has_value(),
      [&] {return Json{{"cospan", as_json(c)}, {"searched", as_json(searched)}};});
  }
  return r;
}

/// True when some law stopped at its tuple budget, so that counts depend on
/// enumeration order.
inline bool budget_exhausted(const Report & r)
{
  const std::string suffix = ".budget_exhausted";
  for (const auto & [k, v] : r.facts) {
    if (k.size() >= suffix.size() && k.compare(k.size() - suffix.size(), suffix.size(), suffix) == 0) {
      return true;
    }
  }
  return false;
}

/**
 * Span-side constructions agree with the cospan-side ones on the
 * horizontal opposite: induced_F_span(d) against induced_F(op d) on vertical
 * morphisms, cells and comparisons, and their law reports.
 */
template <HasTabulators D>
requires HasPullbacks<typename D::Base>
Report verify_span_duality(const D & d, const CheckBounds & bounds = {})
{
  using Op = HorizontalOp<D>;
  using Spans = SpanDouble<typename D::Base>;
  using OpCospans = CospanDouble<typename Op::Base>;
  Report r("span-duality");
  Op op(d);
  auto fs = induced_F_span(d);
  auto fo = induced_F(op);
  Enumeration<D> e(d, bounds.object_bound);

  auto same_span = [](const auto & span, const auto & cospan) {
      return span.left == cospan.left.arrow && span.right == cospan.right.arrow;
    };
  for (const auto & m : e.vmors()) {
    auto s = fs.on_vmor(m);
    auto c = fo.on_vmor(m);
    r.check("vmor", same_span(s, c), [&] {return Json{{"m", as_json(m)}};});
  }
  {
    TupleBudget budget(r, "cells", bounds.max_tuples);
    for (std::size_t i = 0; i < e.size() && !budget.spent(); ++i) {
      for (const auto & oc : e.cells_from(i)) {
        if (!budget.take()) {break;}
        auto s = fs.on_cell(oc.cell);
        auto c = fo.on_cell(Op::mirror(oc.cell));
        r.check("cell", s.witness == c.witness.arrow && same_span(s.frame.left, c.frame.right) &&
          same_span(s.frame.right, c.frame.left),
          [&] {return Json{{"cell", cell_json(oc.cell)}};});
      }
    }
  }
  for (const auto & x : e.objects()) {
    r.check("unit", fs.unit(x).witness == fo.unit(x).witness.arrow,
      [&] {return Json{{"object", as_json(x)}};});
  }
  {
    TupleBudget budget(r, "pairs", bounds.max_tuples);
    for (std::size_t i = 0; i < e.size() && !budget.spent(); ++i) {
      for (auto j : e.after(i)) {
        if (!budget.take()) {break;}
        const auto & m = e.vmor(i);
        const auto & n = e.vmor(j);
        r.check("composition", fs.composition(m, n).witness == fo.composition(m, n).witness.arrow,
          [&] {return Json{{"m", as_json(m)}, {"n", as_json(n)}};});
      }
    }
  }

  Spans spans(d.base(), bounds.object_bound);
  OpCospans op_cospans(op.base(), bounds.object_bound);
  auto direct = verify_functor_laws(d, spans, fs, FunctorKind::lax, bounds);
  auto mirrored = verify_functor_laws(op, op_cospans, fo, FunctorKind::oplax, bounds);
  r.check("laws.direct", direct.ok(), [&] {return to_json(direct, false);});
  r.check("laws.mirrored", mirrored.ok(), [&] {return to_json(mirrored, false);});
  if (budget_exhausted(direct) || budget_exhausted(mirrored)) {
    r.fact("laws.compared", "pass-fail");
  } else {
    r.fact("laws.compared", "counts");
    r.check("laws.same-outcome", direct.same_outcome(mirrored), [&] {
        return Json{{"direct", to_json(direct, false)}, {"mirrored", to_json(mirrored, false)}};
      });
  }
  return r;
}

/**
 * One side of the comparison between structure on D and the adjunction
 * F -| G with Cospan(D0): companions, conjoints and cotabulators are
 * detected, F and G are built and checked, the adjunction is checked, and
 * the structure is read back out of it.
 */
template <HasCompanions D>
requires HasCotabulators<D> && HasPushouts<typename D::Base>
Report cospan_side(const D & d, const std::string & name, const CheckBounds & bounds = {})
{
  using Cospans = CospanDouble<typename D::Base>;
  Report r(name);
  r.absorb(verify_partners(d, bounds));
  r.absorb(verify_cotabulators(d, bounds));
  Cospans cospans(d.base(), bounds.object_bound);
  auto a = build_adjunction(d);
  auto f_laws = verify_functor_laws(d, cospans, a.F, FunctorKind::oplax, bounds);
  f_laws.suite = "F";
  r.absorb(f_laws);
  auto g_laws = verify_functor_laws(cospans, d, a.G, FunctorKind::normal, bounds);
  g_laws.suite = "G";
  r.absorb(g_laws);
  r.absorb(verify_adjunction(d, a, bounds));
  r.absorb(verify_round_trip(d, a, bounds));
  return r;
}

/**
 * D has companions, conjoints and cotabulators iff F -| G exists with G
 * normal; checked on the cospan side, and on the span side through the
 * horizontal opposite when D has tabulators.
 */
template <HasCompanions D>
requires HasCotabulators<D> && HasPushouts<typename D::Base>
Report theorem_suite(const D & d, const CheckBounds & bounds = {})
{
  auto t0 = std::chrono::steady_clock::now();
  Report r("theorem");
  r.absorb(cospan_side(d, "cospan-side", bounds));
  if constexpr (HasTabulators<D> && HasPullbacks<typename D::Base>) {
    r.fact("span_side", "checked");
    r.absorb(cospan_side(HorizontalOp<D>(d), "span-side", bounds));
    r.absorb(verify_span_duality(d, bounds));
  } else {
    r.fact("span_side", "unavailable");
  }
  r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace dblcat

#endif  // DBLCAT__ADJUNCTION_HPP_
