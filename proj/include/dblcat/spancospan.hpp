// Copyright 2026 The dblcat Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef DBLCAT__SPANCOSPAN_HPP_
#define DBLCAT__SPANCOSPAN_HPP_

#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

#include "dblcat/category.hpp"
#include "dblcat/core.hpp"

namespace dblcat
{

/// X0 <-left- A -right-> X1
template <class M>
struct Span
{
  M left;
  M right;
  bool operator==(const Span &) const = default;
};

/// X0 -left-> A <-right- X1
template <class M>
struct Cospan
{
  M left;
  M right;
  bool operator==(const Cospan &) const = default;
};

template <class M>
void to_json(Json & j, const Span<M> & s)
{
  j = Json{{"span", {{"left", as_json(s.left)}, {"right", as_json(s.right)}}}};
}

template <class M>
void to_json(Json & j, const Cospan<M> & s)
{
  j = Json{{"cospan", {{"left", as_json(s.left)}, {"right", as_json(s.right)}}}};
}

/**
 * Span(C): vertical morphisms are spans, composed by the base category's
 * canonical pullback. Cells are apex maps making both squares commute.
 *
 * The apex catalog bounds enumeration only; composites of any size are
 * computed, and `within_bound` reports whether an apex fits the bound.
 */
template <HasPullbacks C>
class SpanDouble
{
public:
  using Base = C;
  using Object = typename C::Object;
  using HMor = typename C::Morphism;
  using VMor = Span<HMor>;
  using Witness = HMor;
  using Cell = dblcat::Cell<HMor, VMor, Witness>;
  using Frame = Boundary<HMor, VMor>;

  explicit SpanDouble(C base, std::size_t carrier_bound = std::numeric_limits<std::size_t>::max())
  : base_(std::move(base)), carrier_bound_(carrier_bound)
  {
    for (const auto & x : base_.objects()) {
      if (base_.carrier_size(x) <= carrier_bound_) {
        apexes_.push_back(x);
      }
    }
  }

  SpanDouble(C base, std::vector<Object> apexes, std::size_t carrier_bound)
  : base_(std::move(base)), apexes_(std::move(apexes)), carrier_bound_(carrier_bound) {}

  const C & base() const {return base_;}
  std::vector<Object> objects() const {return base_.objects();}
  std::size_t carrier_bound() const {return carrier_bound_;}

  Object apex(const VMor & m) const {return base_.src(m.left);}
  Object vsrc(const VMor & m) const {return base_.tgt(m.left);}
  Object vtgt(const VMor & m) const {return base_.tgt(m.right);}
  VMor vid(const Object & x) const {return {base_.identity(x), base_.identity(x)};}

  bool within_bound(const VMor & m) const {return base_.carrier_size(apex(m)) <= carrier_bound_;}

  VMor vcomp(const VMor & m, const VMor & n) const
  {
    if (!(vtgt(m) == vsrc(n))) {
      throw BoundaryError("span composition: target of first span differs from source of second");
    }
    auto pb = base_.pullback(m.right, n.left);
    return {base_.compose(m.left, pb.out0), base_.compose(n.right, pb.out1)};
  }

  std::vector<VMor> vmors(const Object & x0, const Object & x1) const
  {
    std::vector<VMor> out;
    for (const auto & a : apexes_) {
      auto lefts = base_.hom(a, x0);
      if (lefts.empty()) {continue;}
      auto rights = base_.hom(a, x1);
      for (const auto & l : lefts) {
        for (const auto & r : rights) {
          out.push_back({l, r});
        }
      }
    }
    return out;
  }

  bool commutes(const Frame & b, const HMor & w) const
  {
    return base_.compose(b.right.left, w) == base_.compose(b.top, b.left.left) &&
           base_.compose(b.right.right, w) == base_.compose(b.bottom, b.left.right);
  }

  std::vector<Cell> cells(const Frame & b) const
  {
    std::vector<Cell> out;
    for (auto & w : base_.hom(apex(b.left), apex(b.right))) {
      if (commutes(b, w)) {
        out.push_back({b, std::move(w)});
      }
    }
    return out;
  }

  Cell paste_horizontal(const Cell & a, const Cell & b) const
  {
    return {{base_.compose(b.frame.top, a.frame.top), base_.compose(b.frame.bottom, a.frame.bottom),
        a.frame.left, b.frame.right},
      base_.compose(b.witness, a.witness)};
  }

  Cell paste_vertical(const Cell & a, const Cell & b) const
  {
    auto pl = base_.pullback(a.frame.left.right, b.frame.left.left);
    auto pr = base_.pullback(a.frame.right.right, b.frame.right.left);
    VMor left{base_.compose(a.frame.left.left, pl.out0), base_.compose(b.frame.left.right, pl.out1)};
    VMor right{base_.compose(a.frame.right.left, pr.out0),
      base_.compose(b.frame.right.right, pr.out1)};
    auto w = base_.pair(pr, base_.compose(a.witness, pl.out0), base_.compose(b.witness, pl.out1));
    return {{a.frame.top, b.frame.bottom, std::move(left), std::move(right)}, std::move(w)};
  }

  Cell hidentity(const VMor & m) const
  {
    return {{base_.identity(vsrc(m)), base_.identity(vtgt(m)), m, m}, base_.identity(apex(m))};
  }

  Cell videntity(const HMor & f) const
  {
    return {{f, f, vid(base_.src(f)), vid(base_.tgt(f))}, f};
  }

  /// (m1 ; m2) ; m3 => m1 ; (m2 ; m3)
  IsoCell<Cell> associator(const VMor & m1, const VMor & m2, const VMor & m3) const
  {
    auto p12 = base_.pullback(m1.right, m2.left);
    VMor m12{base_.compose(m1.left, p12.out0), base_.compose(m2.right, p12.out1)};
    auto pl = base_.pullback(m12.right, m3.left);
    VMor lhs{base_.compose(m12.left, pl.out0), base_.compose(m3.right, pl.out1)};

    auto p23 = base_.pullback(m2.right, m3.left);
    VMor m23{base_.compose(m2.left, p23.out0), base_.compose(m3.right, p23.out1)};
    auto pr = base_.pullback(m1.right, m23.left);
    VMor rhs{base_.compose(m1.left, pr.out0), base_.compose(m23.right, pr.out1)};

    auto la = base_.compose(p12.out0, pl.out0);
    auto lb = base_.compose(p12.out1, pl.out0);
    auto forward = base_.pair(pr, la, base_.pair(p23, lb, pl.out1));

    auto rb = base_.compose(p23.out0, pr.out1);
    auto rc = base_.compose(p23.out1, pr.out1);
    auto backward = base_.pair(pl, base_.pair(p12, pr.out0, rb), rc);

    auto id0 = base_.identity(vsrc(m1));
    auto id3 = base_.identity(vtgt(m3));
    return {{{id0, id3, lhs, rhs}, forward}, {{id0, id3, rhs, lhs}, backward}};
  }

  /// m ; vid => m
  IsoCell<Cell> left_unitor(const VMor & m) const
  {
    auto x1 = vtgt(m);
    auto pb = base_.pullback(m.right, base_.identity(x1));
    VMor lhs{base_.compose(m.left, pb.out0), base_.compose(base_.identity(x1), pb.out1)};
    auto back = base_.pair(pb, base_.identity(apex(m)), m.right);
    auto id0 = base_.identity(vsrc(m));
    auto id1 = base_.identity(x1);
    return {{{id0, id1, lhs, m}, pb.out0}, {{id0, id1, m, lhs}, back}};
  }

  /// vid ; m => m
  IsoCell<Cell> right_unitor(const VMor & m) const
  {
    auto x0 = vsrc(m);
    auto pb = base_.pullback(base_.identity(x0), m.left);
    VMor lhs{base_.compose(base_.identity(x0), pb.out0), base_.compose(m.right, pb.out1)};
    auto back = base_.pair(pb, m.left, base_.identity(apex(m)));
    auto id0 = base_.identity(x0);
    auto id1 = base_.identity(vtgt(m));
    return {{{id0, id1, lhs, m}, pb.out1}, {{id0, id1, m, lhs}, back}};
  }

  /// f_* = (X <-id- X -f-> Y)
  CompanionData<SpanDouble> companion(const HMor & f) const
  {
    auto x = base_.src(f);
    auto y = base_.tgt(f);
    VMor fs{base_.identity(x), f};
    Cell eta{{base_.identity(x), f, vid(x), fs}, base_.identity(x)};
    Cell eps{{f, base_.identity(y), fs, vid(y)}, f};
    return {f, fs, eta, eps};
  }

  /// f^* = (Y <-f- X -id-> X)
  ConjointData<SpanDouble> conjoint(const HMor & f) const
  {
    auto x = base_.src(f);
    auto y = base_.tgt(f);
    VMor fc{f, base_.identity(x)};
    Cell alpha{{f, base_.identity(x), vid(x), fc}, base_.identity(x)};
    Cell beta{{base_.identity(y), f, fc, vid(y)}, f};
    return {f, fc, alpha, beta};
  }

  /// The pushout of the legs, with cell i0 . left = i1 . right.
  CotabulatorData<SpanDouble> cotabulator(const VMor & m) const requires HasPushouts<C>
  {
    auto po = base_.pushout(m.left, m.right);
    Cell iota{{po.in0, po.in1, m, vid(po.apex)}, base_.compose(po.in0, m.left)};
    return {m, po.apex, iota};
  }

  /// The apex, with cell (left, id, right).
  TabulatorData<SpanDouble> tabulator(const VMor & m) const
  {
    auto a = apex(m);
    Cell tau{{m.left, m.right, vid(a), m}, base_.identity(a)};
    return {m, a, tau};
  }

private:
  C base_;
  std::vector<Object> apexes_;
  std::size_t carrier_bound_;
};

/**
 * Cospan(C): vertical morphisms are cospans, composed by the base
 * category's canonical pushout. Cells are apex maps commuting with the legs.
 */
template <HasPushouts C>
class CospanDouble
{
public:
  using Base = C;
  using Object = typename C::Object;
  using HMor = typename C::Morphism;
  using VMor = Cospan<HMor>;
  using Witness = HMor;
  using Cell = dblcat::Cell<HMor, VMor, Witness>;
  using Frame = Boundary<HMor, VMor>;

  explicit CospanDouble(C base, std::size_t carrier_bound = std::numeric_limits<std::size_t>::max())
  : base_(std::move(base)), carrier_bound_(carrier_bound)
  {
    for (const auto & x : base_.objects()) {
      if (base_.carrier_size(x) <= carrier_bound_) {
        apexes_.push_back(x);
      }
    }
  }

  CospanDouble(C base, std::vector<Object> apexes, std::size_t carrier_bound)
  : base_(std::move(base)), apexes_(std::move(apexes)), carrier_bound_(carrier_bound) {}

  const C & base() const {return base_;}
  std::vector<Object> objects() const {return base_.objects();}
  std::size_t carrier_bound() const {return carrier_bound_;}

  Object apex(const VMor & m) const {return base_.tgt(m.left);}
  Object vsrc(const VMor & m) const {return base_.src(m.left);}
  Object vtgt(const VMor & m) const {return base_.src(m.right);}
  VMor vid(const Object & x) const {return {base_.identity(x), base_.identity(x)};}

  bool within_bound(const VMor & m) const {return base_.carrier_size(apex(m)) <= carrier_bound_;}

  VMor vcomp(const VMor & m, const VMor & n) const
  {
    if (!(vtgt(m) == vsrc(n))) {
      throw BoundaryError("cospan composition: target of first cospan differs from source of second");
    }
    auto po = base_.pushout(m.right, n.left);
    return {base_.compose(po.in0, m.left), base_.compose(po.in1, n.right)};
  }

  std::vector<VMor> vmors(const Object & x0, const Object & x1) const
  {
    std::vector<VMor> out;
    for (const auto & a : apexes_) {
      auto lefts = base_.hom(x0, a);
      if (lefts.empty()) {continue;}
      auto rights = base_.hom(x1, a);
      for (const auto & l : lefts) {
        for (const auto & r : rights) {
          out.push_back({l, r});
        }
      }
    }
    return out;
  }

  bool commutes(const Frame & b, const HMor & w) const
  {
    return base_.compose(w, b.left.left) == base_.compose(b.right.left, b.top) &&
           base_.compose(w, b.left.right) == base_.compose(b.right.right, b.bottom);
  }

  std::vector<Cell> cells(const Frame & b) const
  {
    std::vector<Cell> out;
    for (auto & w : base_.hom(apex(b.left), apex(b.right))) {
      if (commutes(b, w)) {
        out.push_back({b, std::move(w)});
      }
    }
    return out;
  }

  Cell paste_horizontal(const Cell & a, const Cell & b) const
  {
    return {{base_.compose(b.frame.top, a.frame.top), base_.compose(b.frame.bottom, a.frame.bottom),
        a.frame.left, b.frame.right},
      base_.compose(b.witness, a.witness)};
  }

  Cell paste_vertical(const Cell & a, const Cell & b) const
  {
    auto pl = base_.pushout(a.frame.left.right, b.frame.left.left);
    auto pr = base_.pushout(a.frame.right.right, b.frame.right.left);
    VMor left{base_.compose(pl.in0, a.frame.left.left), base_.compose(pl.in1, b.frame.left.right)};
    VMor right{base_.compose(pr.in0, a.frame.right.left),
      base_.compose(pr.in1, b.frame.right.right)};
    auto w = base_.copair(pl, base_.compose(pr.in0, a.witness), base_.compose(pr.in1, b.witness));
    return {{a.frame.top, b.frame.bottom, std::move(left), std::move(right)}, std::move(w)};
  }

  Cell hidentity(const VMor & m) const
  {
    return {{base_.identity(vsrc(m)), base_.identity(vtgt(m)), m, m}, base_.identity(apex(m))};
  }

  Cell videntity(const HMor & f) const
  {
    return {{f, f, vid(base_.src(f)), vid(base_.tgt(f))}, f};
  }

  IsoCell<Cell> associator(const VMor & m1, const VMor & m2, const VMor & m3) const
  {
    auto p12 = base_.pushout(m1.right, m2.left);
    VMor m12{base_.compose(p12.in0, m1.left), base_.compose(p12.in1, m2.right)};
    auto pl = base_.pushout(m12.right, m3.left);
    VMor lhs{base_.compose(pl.in0, m12.left), base_.compose(pl.in1, m3.right)};

    auto p23 = base_.pushout(m2.right, m3.left);
    VMor m23{base_.compose(p23.in0, m2.left), base_.compose(p23.in1, m3.right)};
    auto pr = base_.pushout(m1.right, m23.left);
    VMor rhs{base_.compose(pr.in0, m1.left), base_.compose(pr.in1, m23.right)};

    auto forward = base_.copair(pl,
        base_.copair(p12, pr.in0, base_.compose(pr.in1, p23.in0)),
        base_.compose(pr.in1, p23.in1));
    auto backward = base_.copair(pr,
        base_.compose(pl.in0, p12.in0),
        base_.copair(p23, base_.compose(pl.in0, p12.in1), pl.in1));

    auto id0 = base_.identity(vsrc(m1));
    auto id3 = base_.identity(vtgt(m3));
    return {{{id0, id3, lhs, rhs}, forward}, {{id0, id3, rhs, lhs}, backward}};
  }

  IsoCell<Cell> left_unitor(const VMor & m) const
  {
    auto x1 = vtgt(m);
    auto po = base_.pushout(m.right, base_.identity(x1));
    VMor lhs{base_.compose(po.in0, m.left), base_.compose(po.in1, base_.identity(x1))};
    auto fwd = base_.copair(po, base_.identity(apex(m)), m.right);
    auto id0 = base_.identity(vsrc(m));
    auto id1 = base_.identity(x1);
    return {{{id0, id1, lhs, m}, fwd}, {{id0, id1, m, lhs}, po.in0}};
  }

  IsoCell<Cell> right_unitor(const VMor & m) const
  {
    auto x0 = vsrc(m);
    auto po = base_.pushout(base_.identity(x0), m.left);
    VMor lhs{base_.compose(po.in0, base_.identity(x0)), base_.compose(po.in1, m.right)};
    auto fwd = base_.copair(po, m.left, base_.identity(apex(m)));
    auto id0 = base_.identity(x0);
    auto id1 = base_.identity(vtgt(m));
    return {{{id0, id1, lhs, m}, fwd}, {{id0, id1, m, lhs}, po.in1}};
  }

  /// f_* = (X -f-> Y <-id- Y)
  CompanionData<CospanDouble> companion(const HMor & f) const
  {
    auto x = base_.src(f);
    auto y = base_.tgt(f);
    VMor fs{f, base_.identity(y)};
    Cell eta{{base_.identity(x), f, vid(x), fs}, f};
    Cell eps{{f, base_.identity(y), fs, vid(y)}, base_.identity(y)};
    return {f, fs, eta, eps};
  }

  /// f^* = (Y -id-> Y <-f- X)
  ConjointData<CospanDouble> conjoint(const HMor & f) const
  {
    auto x = base_.src(f);
    auto y = base_.tgt(f);
    VMor fc{base_.identity(y), f};
    Cell alpha{{f, base_.identity(x), vid(x), fc}, f};
    Cell beta{{base_.identity(y), f, fc, vid(y)}, base_.identity(y)};
    return {f, fc, alpha, beta};
  }

  /// The apex, with cell (left, id, right).
  CotabulatorData<CospanDouble> cotabulator(const VMor & m) const
  {
    auto a = apex(m);
    Cell iota{{m.left, m.right, m, vid(a)}, base_.identity(a)};
    return {m, a, iota};
  }

  /// The pullback of the legs.
  TabulatorData<CospanDouble> tabulator(const VMor & m) const requires HasPullbacks<C>
  {
    auto pb = base_.pullback(m.left, m.right);
    Cell tau{{pb.out0, pb.out1, vid(pb.apex), m}, base_.compose(m.left, pb.out0)};
    return {m, pb.apex, tau};
  }

private:
  C base_;
  std::vector<Object> apexes_;
  std::size_t carrier_bound_;
};

}  // namespace dblcat

#endif  // DBLCAT__SPANCOSPAN_HPP_
