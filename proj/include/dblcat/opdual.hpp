// Copyright 2026 The dblcat Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef DBLCAT__OPDUAL_HPP_
#define DBLCAT__OPDUAL_HPP_

#include <utility>
#include <vector>

#include "dblcat/category.hpp"
#include "dblcat/core.hpp"

namespace dblcat
{

/**
 * The horizontal opposite: horizontal morphisms reversed, vertical
 * morphisms kept, each cell mirrored left-to-right.
 *
 * A cell (top f, bottom g, left m, right n) of D is the cell
 * (top f^op, bottom g^op, left n, right m) here. Companions become
 * conjoints, tabulators become cotabulators, and Span(C) becomes
 * Cospan(C^op).
 */
template <DoubleCategory D>
class HorizontalOp
{
public:
  using Underlying = D;
  using Base = Opposite<typename D::Base>;
  using Object = typename D::Object;
  using HMor = Opp<typename D::HMor>;
  using VMor = typename D::VMor;
  using Witness = typename D::Witness;
  using Cell = dblcat::Cell<HMor, VMor, Witness>;
  using Frame = Boundary<HMor, VMor>;

  explicit HorizontalOp(D d)
  : d_(std::move(d)), base_(d_.base()) {}

  const D & underlying() const {return d_;}
  const Base & base() const {return base_;}
  std::vector<Object> objects() const {return d_.objects();}

  static Frame mirror(const typename D::Frame & b)
  {
    return {HMor{b.top}, HMor{b.bottom}, b.right, b.left};
  }

  static typename D::Frame unmirror(const Frame & b)
  {
    return {b.top.arrow, b.bottom.arrow, b.right, b.left};
  }

  static Cell mirror(const typename D::Cell & c) {return {mirror(c.frame), c.witness};}
  static typename D::Cell unmirror(const Cell & c) {return {unmirror(c.frame), c.witness};}

  Object vsrc(const VMor & m) const {return d_.vsrc(m);}
  Object vtgt(const VMor & m) const {return d_.vtgt(m);}
  VMor vid(const Object & x) const {return d_.vid(x);}
  VMor vcomp(const VMor & m, const VMor & n) const {return d_.vcomp(m, n);}
  std::vector<VMor> vmors(const Object & x0, const Object & x1) const {return d_.vmors(x0, x1);}
  bool within_bound(const VMor & m) const {return d_.within_bound(m);}

  std::vector<Cell> cells(const Frame & b) const
  {
    std::vector<Cell> out;
    for (const auto & c : d_.cells(unmirror(b))) {
      out.push_back(mirror(c));
    }
    return out;
  }

  Cell paste_horizontal(const Cell & a, const Cell & b) const
  {
    return mirror(d_.paste_horizontal(unmirror(b), unmirror(a)));
  }

  Cell paste_vertical(const Cell & a, const Cell & b) const
  {
    return mirror(d_.paste_vertical(unmirror(a), unmirror(b)));
  }

  Cell hidentity(const VMor & m) const {return mirror(d_.hidentity(m));}
  Cell videntity(const HMor & f) const {return mirror(d_.videntity(f.arrow));}

  IsoCell<Cell> associator(const VMor & m1, const VMor & m2, const VMor & m3) const
  {
    auto a = d_.associator(m1, m2, m3);
    return {mirror(a.inverse), mirror(a.cell)};
  }

  IsoCell<Cell> left_unitor(const VMor & m) const
  {
    auto a = d_.left_unitor(m);
    return {mirror(a.inverse), mirror(a.cell)};
  }

  IsoCell<Cell> right_unitor(const VMor & m) const
  {
    auto a = d_.right_unitor(m);
    return {mirror(a.inverse), mirror(a.cell)};
  }

  CompanionData<HorizontalOp> companion(const HMor & f) const
  requires HasCompanions<D>
  {
    auto k = d_.conjoint(f.arrow);
    return {f, k.conjoint, mirror(k.beta), mirror(k.alpha)};
  }

  ConjointData<HorizontalOp> conjoint(const HMor & f) const
  requires HasCompanions<D>
  {
    auto c = d_.companion(f.arrow);
    return {f, c.companion, mirror(c.eps), mirror(c.eta)};
  }

  CotabulatorData<HorizontalOp> cotabulator(const VMor & m) const
  requires HasTabulators<D>
  {
    auto t = d_.tabulator(m);
    return {m, t.sigma, mirror(t.tau)};
  }

  TabulatorData<HorizontalOp> tabulator(const VMor & m) const
  requires HasCotabulators<D>
  {
    auto t = d_.cotabulator(m);
    return {m, t.gamma, mirror(t.iota)};
  }

private:
  D d_;
  Base base_;
};

}  // namespace dblcat

#endif  // DBLCAT__OPDUAL_HPP_
