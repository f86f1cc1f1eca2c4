// Copyright 2026 The dblcat Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef DBLCAT__COMPCON_HPP_
#define DBLCAT__COMPCON_HPP_

#include <optional>
#include <string>
#include <vector>

#include "dblcat/core.hpp"
#include "dblcat/enumerate.hpp"
#include "dblcat/functor.hpp"
#include "dblcat/report.hpp"
#include "dblcat/spancospan.hpp"

namespace dblcat
{

template <DoubleCategory D>
Json companion_json(const CompanionData<D> & c)
{
  return Json{{"f", as_json(c.f)}, {"companion", as_json(c.companion)},
    {"eta", cell_json(c.eta)}, {"eps", cell_json(c.eps)}};
}

template <DoubleCategory D>
Json conjoint_json(const ConjointData<D> & c)
{
  return Json{{"f", as_json(c.f)}, {"conjoint", as_json(c.conjoint)},
    {"alpha", cell_json(c.alpha)}, {"beta", cell_json(c.beta)}};
}

/**
 * Binding identities of a companion:
 *   eta | eps = videntity(f)
 *   r^-1 | (eta over eps) | l = hidentity(f_*)
 * where r : vid ; f_* => f_* and l : f_* ; vid => f_*.
 */
template <DoubleCategory D>
Report verify_companion(const D & d, const CompanionData<D> & c)
{
  Report r("companion");
  const auto & base = d.base();
  const auto x = base.src(c.f);
  const auto y = base.tgt(c.f);
  auto witness = [&] {return companion_json(c);};
  bool frames =
    r.check("eta.frame",
      c.eta.frame == typename D::Frame{base.identity(x), c.f, d.vid(x), c.companion}, witness) &&
    r.check("eps.frame",
      c.eps.frame == typename D::Frame{c.f, base.identity(y), c.companion, d.vid(y)}, witness);
  if (!frames) {
    return r;
  }
  r.check("horizontal-composite", d.paste_horizontal(c.eta, c.eps) == d.videntity(c.f), witness);
  auto stacked = d.paste_vertical(c.eta, c.eps);
  auto corrected = d.paste_horizontal(
    d.paste_horizontal(d.right_unitor(c.companion).inverse, stacked), d.left_unitor(c.companion).cell);
  r.check("vertical-composite", corrected == d.hidentity(c.companion), witness);
  return r;
}

/**
 * Binding identities of a conjoint:
 *   alpha | beta = videntity(f)
 *   l^-1 | (beta over alpha) | r = hidentity(f^*)
 */
template <DoubleCategory D>
Report verify_conjoint(const D & d, const ConjointData<D> & c)
{
  Report r("conjoint");
  const auto & base = d.base();
  const auto x = base.src(c.f);
  const auto y = base.tgt(c.f);
  auto witness = [&] {return conjoint_json(c);};
  bool frames =
    r.check("alpha.frame",
      c.alpha.frame == typename D::Frame{c.f, base.identity(x), d.vid(x), c.conjoint}, witness) &&
    r.check("beta.frame",
      c.beta.frame == typename D::Frame{base.identity(y), c.f, c.conjoint, d.vid(y)}, witness);
  if (!frames) {
    return r;
  }
  r.check("horizontal-composite", d.paste_horizontal(c.alpha, c.beta) == d.videntity(c.f), witness);
  auto stacked = d.paste_vertical(c.beta, c.alpha);
  auto corrected = d.paste_horizontal(
    d.paste_horizontal(d.left_unitor(c.conjoint).inverse, stacked), d.right_unitor(c.conjoint).cell);
  r.check("vertical-composite", corrected == d.hidentity(c.conjoint), witness);
  return r;
}

// ---------------------------------------------------------------------------
// Vertical flipping.

/**
 * Companion flip. For phi with top f . g, left m, right n, bottom h,
 * returns the cell with top g, left m, right f_* ; n, bottom h.
 */
template <DoubleCategory D>
typename D::Cell flip_companion(
  const D & d, const CompanionData<D> & c, const typename D::Cell & phi, const typename D::HMor & g)
{
  const auto & base = d.base();
  if (!(base.tgt(g) == base.src(c.f)) || !(phi.frame.top == base.compose(c.f, g))) {
    throw BoundaryError("flip_companion: top edge is not f after g");
  }
  const auto & m = phi.frame.left;
  auto lifted = vcompose(d, hcompose(d, d.videntity(g), c.eta), phi);
  return hcompose(d, d.right_unitor(m).inverse, lifted);
}

/// Inverse of flip_companion: from top g, right f_* ; n back to top f . g, right n.
template <DoubleCategory D>
typename D::Cell unflip_companion(
  const D & d, const CompanionData<D> & c, const typename D::Cell & psi, const typename D::VMor & n)
{
  auto theta = hcompose(d, vcompose(d, c.eps, d.hidentity(n)), d.right_unitor(n).cell);
  return hcompose(d, psi, theta);
}

/**
 * Conjoint flip. For phi with top g, left m, right n, bottom f . h,
 * returns the cell with top g, left m, right n ; f^*, bottom h.
 */
template <DoubleCategory D>
typename D::Cell flip_conjoint(
  const D & d, const ConjointData<D> & c, const typename D::Cell & phi, const typename D::HMor & h)
{
  const auto & base = d.base();
  if (!(base.tgt(h) == base.src(c.f)) || !(phi.frame.bottom == base.compose(c.f, h))) {
    throw BoundaryError("flip_conjoint: bottom edge is not f after h");
  }
  const auto & m = phi.frame.left;
  auto lowered = vcompose(d, phi, hcompose(d, d.videntity(h), c.alpha));
  return hcompose(d, d.left_unitor(m).inverse, lowered);
}

/// Inverse of flip_conjoint: from right n ; f^*, bottom h back to right n, bottom f . h.
template <DoubleCategory D>
typename D::Cell unflip_conjoint(
  const D & d, const ConjointData<D> & c, const typename D::Cell & psi, const typename D::VMor & n)
{
  auto theta = hcompose(d, vcompose(d, d.hidentity(n), c.beta), d.left_unitor(n).cell);
  return hcompose(d, psi, theta);
}

/**
 * Round-trips both flips on every cell from an enumerated vertical
 * morphism whose top (companion) or bottom (conjoint) edge factors through
 * a horizontal morphism with the given structure.
 */
template <HasCompanions D>
Report verify_flips(const D & d, const CheckBounds & bounds = {})
{
  Report r("flips");
  Enumeration<D> e(d, bounds.object_bound);
  const auto & base = d.base();
  TupleBudget budget(r, "cells", bounds.max_tuples);
  for (std::size_t i = 0; i < e.size() && !budget.spent(); ++i) {
    for (const auto & oc : e.cells_from(i)) {
      const auto & phi = oc.cell;
      const auto & n = phi.frame.right;
      // every factorization top = f . g through a catalog object
      for (const auto & mid : e.objects()) {
        for (const auto & g : base.hom(base.src(phi.frame.top), mid)) {
          for (const auto & f : base.hom(mid, base.tgt(phi.frame.top))) {
            if (!(base.compose(f, g) == phi.frame.top)) {continue;}
            if (!budget.take()) {break;}
            auto c = d.companion(f);
            auto psi = flip_companion(d, c, phi, g);
            r.check("companion.frame",
              psi.frame == typename D::Frame{g, phi.frame.bottom, phi.frame.left, d.vcomp(c.companion, n)},
              [&] {return Json{{"cell", cell_json(phi)}, {"flipped", cell_json(psi)}};});
            auto back = unflip_companion(d, c, psi, n);
            r.check("companion.round-trip", back == phi,
              [&] {return Json{{"cell", cell_json(phi)}, {"flipped", cell_json(psi)}, {"back", cell_json(back)}};});
            auto again = flip_companion(d, c, back, g);
            r.check("companion.round-trip-inverse", again == psi,
              [&] {return Json{{"cell", cell_json(phi)}, {"flipped", cell_json(psi)}};});
          }
        }
        for (const auto & h : base.hom(base.src(phi.frame.bottom), mid)) {
          for (const auto & f : base.hom(mid, base.tgt(phi.frame.bottom))) {
            if (!(base.compose(f, h) == phi.frame.bottom)) {continue;}
            if (!budget.take()) {break;}
            auto c = d.conjoint(f);
            auto psi = flip_conjoint(d, c, phi, h);
            r.check("conjoint.frame",
              psi.frame == typename D::Frame{phi.frame.top, h, phi.frame.left, d.vcomp(n, c.conjoint)},
              [&] {return Json{{"cell", cell_json(phi)}, {"flipped", cell_json(psi)}};});
            auto back = unflip_conjoint(d, c, psi, n);
            r.check("conjoint.round-trip", back == phi,
              [&] {return Json{{"cell", cell_json(phi)}, {"flipped", cell_json(psi)}, {"back", cell_json(back)}};});
            auto again = flip_conjoint(d, c, back, h);
            r.check("conjoint.round-trip-inverse", again == psi,
              [&] {return Json{{"cell", cell_json(phi)}, {"flipped", cell_json(psi)}};});
          }
        }
      }
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Search.

/// First companion of f under the enumerators' order, or nothing.
template <DoubleCategory D>
std::optional<CompanionData<D>> find_companion(const D & d, const typename D::HMor & f)
{
  const auto & base = d.base();
  const auto x = base.src(f);
  const auto y = base.tgt(f);
  for (const auto & v : d.vmors(x, y)) {
    for (const auto & eta : d.cells({base.identity(x), f, d.vid(x), v})) {
      for (const auto & eps : d.cells({f, base.identity(y), v, d.vid(y)})) {
        CompanionData<D> c{f, v, eta, eps};
        if (verify_companion(d, c).ok()) {
          return c;
        }
      }
    }
  }
  return std::nullopt;
}

template <DoubleCategory D>
std::optional<ConjointData<D>> find_conjoint(const D & d, const typename D::HMor & f)
{
  const auto & base = d.base();
  const auto x = base.src(f);
  const auto y = base.tgt(f);
  for (const auto & v : d.vmors(y, x)) {
    for (const auto & alpha : d.cells({f, base.identity(x), d.vid(x), v})) {
      for (const auto & beta : d.cells({base.identity(y), f, v, d.vid(y)})) {
        ConjointData<D> c{f, v, alpha, beta};
        if (verify_conjoint(d, c).ok()) {
          return c;
        }
      }
    }
  }
  return std::nullopt;
}

/// Result of searching every horizontal morphism for its partners.
template <DoubleCategory D>
struct PartnerSearch
{
  std::vector<typename D::HMor> morphisms;
  std::vector<std::optional<CompanionData<D>>> companions;
  std::vector<std::optional<ConjointData<D>>> conjoints;

  bool complete() const
  {
    for (std::size_t i = 0; i < morphisms.size(); ++i) {
      if (!companions[i] || !conjoints[i]) {return false;}
    }
    return true;
  }
};

template <DoubleCategory D>
PartnerSearch<D> find_companions(const D & d, std::size_t object_bound = static_cast<std::size_t>(-1))
{
  PartnerSearch<D> out;
  Enumeration<D> e(d, object_bound);
  for (const auto & x : e.objects()) {
    for (const auto & y : e.objects()) {
      for (const auto & f : d.base().hom(x, y)) {
        out.morphisms.push_back(f);
        out.companions.push_back(find_companion(d, f));
        out.conjoints.push_back(find_conjoint(d, f));
      }
    }
  }
  return out;
}

/**
 * Companions and conjoints supplied by the instance: each passes its
 * binding identities, agrees with a searched partner up to a globular
 * isomorphism, and (companions) any two candidates are so related.
 */
template <HasCompanions D>
Report verify_partners(const D & d, const CheckBounds & bounds = {}, bool compare_with_search = true)
{
  Report r("partners");
  Enumeration<D> e(d, bounds.object_bound);
  for (const auto & x : e.objects()) {
    for (const auto & y : e.objects()) {
      for (const auto & f : d.base().hom(x, y)) {
        auto c = d.companion(f);
        auto k = d.conjoint(f);
        auto rc = verify_companion(d, c);
        auto rk = verify_conjoint(d, k);
        r.absorb(rc);
        r.absorb(rk);
        if (!compare_with_search) {continue;}
        auto found = find_companion(d, f);
        r.check("companion.found", found.has_value(), [&] {return Json{{"f", as_json(f)}};});
        if (found) {
          r.check("companion.unique-up-to-iso",
            find_globular_iso(d, c.companion, found->companion).has_value(),
            [&] {return Json{{"supplied", companion_json(c)}, {"found", companion_json(*found)}};});
        }
        auto found_k = find_conjoint(d, f);
        r.check("conjoint.found", found_k.has_value(), [&] {return Json{{"f", as_json(f)}};});
        if (found_k) {
          r.check("conjoint.unique-up-to-iso",
            find_globular_iso(d, k.conjoint, found_k->conjoint).has_value(),
            [&] {return Json{{"supplied", conjoint_json(k)}, {"found", conjoint_json(*found_k)}};});
        }
      }
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// The normal lax functor Cospan(D0) -> D.

/// Globular f_* ; g_* => (g . f)_*.
template <HasCompanions D>
typename D::Cell companion_composite(const D & d, const typename D::HMor & f, const typename D::HMor & g)
{
  const auto & base = d.base();
  auto cf = d.companion(f);
  auto cg = d.companion(g);
  auto gf = base.compose(g, f);
  auto cgf = d.companion(gf);
  const auto z = base.tgt(g);
  // top g . f, left f_* ; g_*, right vid, bottom id
  auto e = hcompose(d,
      vcompose(d, hcompose(d, cf.eps, d.videntity(g)), cg.eps),
      d.left_unitor(d.vid(z)).cell);
  auto psi = flip_companion(d, cgf, e, base.identity(base.src(f)));
  return hcompose(d, psi, d.left_unitor(cgf.companion).cell);
}

/// Globular g^* ; f^* => (g . f)^*.
template <HasCompanions D>
typename D::Cell conjoint_composite(const D & d, const typename D::HMor & f, const typename D::HMor & g)
{
  const auto & base = d.base();
  auto kf = d.conjoint(f);
  auto kg = d.conjoint(g);
  auto gf = base.compose(g, f);
  auto kgf = d.conjoint(gf);
  const auto z = base.tgt(g);
  // top id, left g^* ; f^*, right vid, bottom g . f
  auto b = hcompose(d,
      vcompose(d, kg.beta, hcompose(d, kf.beta, d.videntity(g))),
      d.left_unitor(d.vid(z)).cell);
  auto psi = flip_conjoint(d, kgf, b, base.identity(base.src(f)));
  return hcompose(d, psi, d.right_unitor(kgf.conjoint).cell);
}

/**
 * G : Cospan(D0) -> D, identity on objects and horizontal morphisms, sending
 * a cospan (c0, c1) to c0_* ; c1^*. Cells are built by flipping; the
 * identity comparison is invertible.
 */
template <HasCompanions D>
LaxFunctorData<CospanDouble<typename D::Base>, D> induced_G(const D & d)
{
  using Src = CospanDouble<typename D::Base>;
  using SCell = typename Src::Cell;
  using SV = typename Src::VMor;
  LaxFunctorData<Src, D> g;
  g.kind = FunctorKind::normal;

  g.on_vmor = [&d](const SV & c) {
      return d.vcomp(d.companion(c.left).companion, d.conjoint(c.right).conjoint);
    };

  g.on_cell = [&d](const SCell & cell) {
      const auto & src = cell.frame.left;
      const auto & tgt = cell.frame.right;
      const auto & w = cell.witness;
      // left half: c0_* => c0'_* with top g0, bottom w
      auto c0 = d.companion(src.left);
      auto c0p = d.companion(tgt.left);
      auto up = flip_companion(d, c0p, hcompose(d, c0.eps, d.videntity(w)), cell.frame.top);
      auto psi0 = hcompose(d, up, d.left_unitor(c0p.companion).cell);
      // right half: c1^* => c1'^* with top w, bottom g1
      auto k1 = d.conjoint(src.right);
      auto k1p = d.conjoint(tgt.right);
      auto down = flip_conjoint(d, k1p, hcompose(d, k1.beta, d.videntity(w)), cell.frame.bottom);
      auto psi1 = hcompose(d, down, d.right_unitor(k1p.conjoint).cell);
      return vcompose(d, psi0, psi1);
    };

  g.unit = [&d](const typename D::Object & x) {
      const auto & base = d.base();
      auto c = d.companion(base.identity(x));
      auto k = d.conjoint(base.identity(x));
      return hcompose(d, d.left_unitor(d.vid(x)).inverse, vcompose(d, c.eta, k.alpha));
    };

  g.unit_inverse = [&d](const typename D::Object & x) {
      const auto & base = d.base();
      auto c = d.companion(base.identity(x));
      auto k = d.conjoint(base.identity(x));
      return hcompose(d, vcompose(d, c.eps, k.beta), d.left_unitor(d.vid(x)).cell);
    };

  g.composition = [&d](const SV & c, const SV & e) {
      const auto & base = d.base();
      auto po = base.pushout(c.right, e.left);
      const auto & j0 = po.in0;
      const auto & j1 = po.in1;
      auto c0s = d.companion(c.left).companion;
      auto c1c = d.conjoint(c.right).conjoint;
      auto d0s = d.companion(e.left).companion;
      auto d1c = d.conjoint(e.right).conjoint;
      auto j0s = d.companion(j0).companion;
      auto j1c = d.conjoint(j1).conjoint;
      auto hid = [&d](const typename D::VMor & m) {return d.hidentity(m);};

      // c1^* ; d0_* => j0_* ; j1^*
      auto kappa = vcompose(d,
          hcompose(d, d.conjoint(c.right).beta, d.companion(j0).eta),
          hcompose(d, d.companion(e.left).eps, d.conjoint(j1).alpha));

      auto c01 = d.vcomp(c0s, c1c);
      auto step1 = d.associator(c01, d0s, d1c).inverse;
      auto step2 = d.paste_vertical(d.associator(c0s, c1c, d0s).cell, hid(d1c));
      auto step3 = d.paste_vertical(d.paste_vertical(hid(c0s), kappa), hid(d1c));
      auto step4 = d.paste_vertical(d.associator(c0s, j0s, j1c).inverse, hid(d1c));
      auto step5 = d.associator(d.vcomp(c0s, j0s), j1c, d1c).cell;
      auto step6 = d.paste_vertical(companion_composite(d, c.left, j0),
          conjoint_composite(d, e.right, j1));
      return hcompose(d, {step1, step2, step3, step4, step5, step6});
    };
  return g;
}

/**
 * Companions and conjoints read off a normal lax functor G : Cospan(D0) -> D
 * that is the identity on D0: f_* = G(f, id) and f^* = G(id, f), with binding
 * cells from G on the evident cospan cells and the identity comparisons.
 */
template <DoubleCategory D>
struct PartnersFromFunctor
{
  std::optional<CompanionData<D>> companion;
  std::optional<ConjointData<D>> conjoint;
};

template <DoubleCategory D>
PartnersFromFunctor<D> partners_from_normal_lax(
  const D & d, const CospanDouble<typename D::Base> & cospans,
  const LaxFunctorData<CospanDouble<typename D::Base>, D> & g, const typename D::HMor & f)
{
  using SV = typename CospanDouble<typename D::Base>::VMor;
  const auto & base = d.base();
  const auto x = base.src(f);
  const auto y = base.tgt(f);
  auto idx = base.identity(x);
  auto idy = base.identity(y);
  PartnersFromFunctor<D> out;
  auto rho_y_inv = unit_inverse(d, g, y);
  if (!rho_y_inv) {
    return out;
  }
  SV star{f, idy};
  SV costar{idy, f};
  SV vid_x = cospans.vid(x);
  SV vid_y = cospans.vid(y);

  auto eta = hcompose(d, g.unit(x), g.on_cell({{idx, f, vid_x, star}, f}));
  auto eps = hcompose(d, g.on_cell({{f, idy, star, vid_y}, idy}), *rho_y_inv);
  out.companion = CompanionData<D>{f, g.on_vmor(star), eta, eps};

  auto alpha = hcompose(d, g.unit(x), g.on_cell({{f, idx, vid_x, costar}, f}));
  auto beta = hcompose(d, g.on_cell({{idy, f, costar, vid_y}, idy}), *rho_y_inv);
  out.conjoint = ConjointData<D>{f, g.on_vmor(costar), alpha, beta};
  return out;
}

}  // namespace dblcat

#endif  // DBLCAT__COMPCON_HPP_
