// Copyright 2026 The dblcat Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef DBLCAT__COHERENCE_HPP_
#define DBLCAT__COHERENCE_HPP_

#include <chrono>
#include <cstddef>
#include <string>

#include "dblcat/core.hpp"
#include "dblcat/enumerate.hpp"
#include "dblcat/report.hpp"

namespace dblcat
{

template <DoubleCategory D>
bool is_globular(const D & d, const typename D::Cell & c)
{
  const auto & b = d.base();
  return c.frame.top == b.identity(d.vsrc(c.frame.left)) &&
         c.frame.bottom == b.identity(d.vtgt(c.frame.left));
}

/// Checks that `iso` is a globular isomorphism from `from` to `to`.
template <DoubleCategory D>
bool check_iso_cell(
  const D & d, Report & r, const std::string & name, const IsoCell<typename D::Cell> & iso,
  const typename D::VMor & from, const typename D::VMor & to)
{
  auto witness = [&] {
      return Json{{"expected_from", as_json(from)}, {"expected_to", as_json(to)},
        {"cell", cell_json(iso.cell)}, {"inverse", cell_json(iso.inverse)}};
    };
  if (!r.check(name + ".frame",
    iso.cell.frame == globular_frame(d, from, to) && iso.inverse.frame == globular_frame(d, to, from),
    witness))
  {
    return false;
  }
  return r.check(name + ".inverse",
           d.paste_horizontal(iso.cell, iso.inverse) == d.hidentity(from) &&
           d.paste_horizontal(iso.inverse, iso.cell) == d.hidentity(to),
           witness);
}

/**
 * Exhaustive coherence check over objects within `bounds.object_bound` and
 * the instance's vertical-morphism enumerator:
 *
 *  - identity cells are units for pasting; vertical identities compose;
 *  - interchange of horizontal and vertical pasting;
 *  - associators and unitors are globular isomorphisms, natural in cells;
 *  - pentagon and triangle.
 *
 * A tuple is in scope only when every composite it mentions is within the
 * instance's bound; the rest are counted under `<law>.over_bound` and mark
 * the report truncated.
 */
template <DoubleCategory D>
Report verify_coherence(const D & d, const CheckBounds & bounds = {})
{
  auto t0 = std::chrono::steady_clock::now();
  Report r("coherence");
  Enumeration<D> e(d, bounds.object_bound);
  const auto & base = d.base();
  const auto & objs = e.objects();
  auto in_bound = [&](const typename D::VMor & m) {return d.within_bound(m);};

  {
    TupleBudget budget(r, "identity", bounds.max_tuples);
    for (std::size_t i = 0; i < e.size(); ++i) {
      const auto & m = e.vmor(i);
      for (const auto & oc : e.cells_from(i)) {
        if (!budget.take()) {break;}
        const auto & c = oc.cell;
        r.check("identity.hidentity", d.paste_horizontal(d.hidentity(m), c) == c &&
          d.paste_horizontal(c, d.hidentity(c.frame.right)) == c,
          [&] {return Json{{"cell", cell_json(c)}};});
      }
      for (auto j : e.after(i)) {
        const auto & n = e.vmor(j);
        auto mn = d.vcomp(m, n);
        if (!in_bound(mn)) {budget.skip(); continue;}
        if (!budget.take()) {break;}
        r.check("identity.vertical-of-hidentity",
          d.paste_vertical(d.hidentity(m), d.hidentity(n)) == d.hidentity(mn),
          [&] {return Json{{"top", as_json(m)}, {"bottom", as_json(n)}};});
      }
    }
    for (const auto & x : objs) {
      for (const auto & y : objs) {
        for (const auto & f : base.hom(x, y)) {
          for (const auto & z : objs) {
            for (const auto & g : base.hom(y, z)) {
              if (!budget.take()) {break;}
              r.check("identity.videntity-functor",
                d.paste_horizontal(d.videntity(f), d.videntity(g)) ==
                d.videntity(base.compose(g, f)),
                [&] {return Json{{"f", as_json(f)}, {"g", as_json(g)}};});
            }
          }
        }
      }
    }
  }

  {
    TupleBudget budget(r, "interchange", bounds.max_tuples);
    for (std::size_t i = 0; i < e.size() && !budget.spent(); ++i) {
      for (auto i2 : e.after(i)) {
        if (budget.spent()) {break;}
        if (!in_bound(d.vcomp(e.vmor(i), e.vmor(i2)))) {budget.skip(); continue;}
        for (const auto & phi : e.cells_from(i)) {
          for (const auto & phi2 : e.cells_from(i2)) {
            if (!(phi.cell.frame.bottom == phi2.cell.frame.top)) {continue;}
            if (!in_bound(d.vcomp(phi.cell.frame.right, phi2.cell.frame.right))) {
              budget.skip();
              continue;
            }
            for (const auto & psi : e.cells_from(phi.right)) {
              for (const auto & psi2 : e.cells_from(phi2.right)) {
                if (!(psi.cell.frame.bottom == psi2.cell.frame.top)) {continue;}
                if (!in_bound(d.vcomp(psi.cell.frame.right, psi2.cell.frame.right))) {
                  budget.skip();
                  continue;
                }
                if (!budget.take()) {break;}
                auto rows = d.paste_vertical(
                  d.paste_horizontal(phi.cell, psi.cell), d.paste_horizontal(phi2.cell, psi2.cell));
                auto cols = d.paste_horizontal(
                  d.paste_vertical(phi.cell, phi2.cell), d.paste_vertical(psi.cell, psi2.cell));
                r.check("interchange", rows == cols, [&] {
                    return Json{{"upper_left", cell_json(phi.cell)},
                      {"upper_right", cell_json(psi.cell)},
                      {"lower_left", cell_json(phi2.cell)},
                      {"lower_right", cell_json(psi2.cell)},
                      {"rows_first", cell_json(rows)}, {"columns_first", cell_json(cols)}};
                  });
              }
            }
          }
        }
      }
    }
  }

  {
    TupleBudget budget(r, "unitors", bounds.max_tuples);
    for (std::size_t i = 0; i < e.size() && !budget.spent(); ++i) {
      const auto & m = e.vmor(i);
      auto l = d.left_unitor(m);
      auto rr = d.right_unitor(m);
      auto m_vid = d.vcomp(m, d.vid(d.vtgt(m)));
      auto vid_m = d.vcomp(d.vid(d.vsrc(m)), m);
      if (!in_bound(m_vid) || !in_bound(vid_m)) {budget.skip(); continue;}
      if (!budget.take()) {break;}
      bool l_ok = check_iso_cell(d, r, "left-unitor", l, m_vid, m);
      bool r_ok = check_iso_cell(d, r, "right-unitor", rr, vid_m, m);
      for (const auto & phi : e.cells_from(i)) {
        const auto & n = phi.cell.frame.right;
        if (l_ok) {
          auto lhs = d.paste_horizontal(l.cell, phi.cell);
          auto rhs = d.paste_horizontal(
            d.paste_vertical(phi.cell, d.videntity(phi.cell.frame.bottom)), d.left_unitor(n).cell);
          r.check("left-unitor.naturality", lhs == rhs, [&] {
              return Json{{"cell", cell_json(phi.cell)}, {"lhs", cell_json(lhs)},
                {"rhs", cell_json(rhs)}};
            });
        }
        if (r_ok) {
          auto lhs = d.paste_horizontal(rr.cell, phi.cell);
          auto rhs = d.paste_horizontal(
            d.paste_vertical(d.videntity(phi.cell.frame.top), phi.cell), d.right_unitor(n).cell);
          r.check("right-unitor.naturality", lhs == rhs, [&] {
              return Json{{"cell", cell_json(phi.cell)}, {"lhs", cell_json(lhs)},
                {"rhs", cell_json(rhs)}};
            });
        }
      }
      for (auto j : e.after(i)) {
        const auto & b = e.vmor(j);
        auto vid = d.vid(d.vtgt(m));
        if (!in_bound(d.vcomp(m_vid, b)) || !in_bound(d.vcomp(m, b))) {budget.skip(); continue;}
        // (m ; vid) ; b => m ; (vid ; b) => m ; b  against  l_m ; b
        auto path = d.paste_horizontal(d.associator(m, vid, b).cell,
            d.paste_vertical(d.hidentity(m), d.right_unitor(b).cell));
        auto direct = d.paste_vertical(l.cell, d.hidentity(b));
        r.check("triangle", path == direct, [&] {
            return Json{{"a", as_json(m)}, {"b", as_json(b)},
              {"via_associator", cell_json(path)}, {"via_unitor", cell_json(direct)}};
          });
      }
    }
  }

  {
    TupleBudget budget(r, "associator", bounds.max_tuples);
    TupleBudget nat_budget(r, "associator-naturality", bounds.max_tuples);
    TupleBudget pent_budget(r, "pentagon", bounds.max_tuples);
    for (std::size_t ia = 0; ia < e.size() && !budget.spent(); ++ia) {
      const auto & a = e.vmor(ia);
      for (auto ib : e.after(ia)) {
        const auto & b = e.vmor(ib);
        auto ab = d.vcomp(a, b);
        if (!in_bound(ab)) {budget.skip(); continue;}
        for (auto ic : e.after(ib)) {
          const auto & c = e.vmor(ic);
          auto bc = d.vcomp(b, c);
          auto ab_c = d.vcomp(ab, c);
          auto a_bc = d.vcomp(a, bc);
          if (!in_bound(bc) || !in_bound(ab_c) || !in_bound(a_bc)) {budget.skip(); continue;}
          if (!budget.take()) {break;}
          auto as = d.associator(a, b, c);
          if (!check_iso_cell(d, r, "associator", as, ab_c, a_bc)) {continue;}

          for (const auto & phi1 : e.cells_from(ia)) {
            if (nat_budget.spent()) {break;}
            for (const auto & phi2 : e.cells_from(ib)) {
              if (!(phi1.cell.frame.bottom == phi2.cell.frame.top)) {continue;}
              for (const auto & phi3 : e.cells_from(ic)) {
                if (!(phi2.cell.frame.bottom == phi3.cell.frame.top)) {continue;}
                const auto & a2 = phi1.cell.frame.right;
                const auto & b2 = phi2.cell.frame.right;
                const auto & c2 = phi3.cell.frame.right;
                auto a2b2 = d.vcomp(a2, b2);
                auto b2c2 = d.vcomp(b2, c2);
                if (!in_bound(a2b2) || !in_bound(b2c2) || !in_bound(d.vcomp(a2b2, c2)) ||
                  !in_bound(d.vcomp(a2, b2c2)))
                {
                  nat_budget.skip();
                  continue;
                }
                if (!nat_budget.take()) {break;}
                auto lhs = d.paste_horizontal(as.cell,
                    d.paste_vertical(phi1.cell, d.paste_vertical(phi2.cell, phi3.cell)));
                auto rhs = d.paste_horizontal(
                  d.paste_vertical(d.paste_vertical(phi1.cell, phi2.cell), phi3.cell),
                  d.associator(a2, b2, c2).cell);
                r.check("associator.naturality", lhs == rhs, [&] {
                    return Json{{"cells", {cell_json(phi1.cell), cell_json(phi2.cell),
                      cell_json(phi3.cell)}}, {"lhs", cell_json(lhs)}, {"rhs", cell_json(rhs)}};
                  });
              }
            }
          }

          for (auto ie : e.after(ic)) {
            if (pent_budget.spent()) {break;}
            const auto & x = e.vmor(ie);
            auto cx = d.vcomp(c, x);
            auto bc_x = d.vcomp(bc, x);
            auto b_cx = d.vcomp(b, cx);
            if (!in_bound(cx) || !in_bound(bc_x) || !in_bound(b_cx) ||
              !in_bound(d.vcomp(ab_c, x)) || !in_bound(d.vcomp(ab, cx)) ||
              !in_bound(d.vcomp(a_bc, x)) || !in_bound(d.vcomp(a, bc_x)) ||
              !in_bound(d.vcomp(a, b_cx)))
            {
              pent_budget.skip();
              continue;
            }
            if (!pent_budget.take()) {break;}
            auto two_step = d.paste_horizontal(
              d.associator(ab, c, x).cell, d.associator(a, b, cx).cell);
            auto three_step = d.paste_horizontal(
              d.paste_horizontal(
                d.paste_vertical(as.cell, d.hidentity(x)), d.associator(a, bc, x).cell),
              d.paste_vertical(d.hidentity(a), d.associator(b, c, x).cell));
            r.check("pentagon", two_step == three_step, [&] {
                return Json{{"a", as_json(a)}, {"b", as_json(b)}, {"c", as_json(c)},
                  {"d", as_json(x)}, {"two_step", cell_json(two_step)},
                  {"three_step", cell_json(three_step)}};
              });
          }
        }
      }
    }
  }

  r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace dblcat

#endif  // DBLCAT__COHERENCE_HPP_
