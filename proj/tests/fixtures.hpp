// Copyright 2026 The dblcat Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef DBLCAT_TESTS__FIXTURES_HPP_
#define DBLCAT_TESTS__FIXTURES_HPP_

#include <cstddef>
#include <utility>
#include <variant>
#include <vector>

#include "dblcat/core.hpp"
#include "dblcat/finset.hpp"

namespace dblcat::testing
{

/**
 * A double category whose associator at (a, b, c) is pre-composed with an
 * automorphism of `target` whenever a == target. Each associator is still a
 * valid invertible cell; the family is no longer coherent.
 */
template <DoubleCategory D>
class TwistedAssociator : public D
{
public:
  using typename D::Cell;
  using typename D::VMor;

  TwistedAssociator(D d, VMor target, Cell twist, Cell twist_inverse)
  : D(std::move(d)), target_(std::move(target)), twist_(std::move(twist)),
    twist_inverse_(std::move(twist_inverse)) {}

  IsoCell<Cell> associator(const VMor & a, const VMor & b, const VMor & c) const
  {
    auto iso = D::associator(a, b, c);
    if (!(a == target_)) {
      return iso;
    }
    auto whisker = [&](const Cell & s) {
        return this->paste_vertical(this->paste_vertical(s, this->hidentity(b)), this->hidentity(c));
      };
    return {this->paste_horizontal(whisker(twist_), iso.cell),
      this->paste_horizontal(iso.inverse, whisker(twist_inverse_))};
  }

private:
  VMor target_;
  Cell twist_;
  Cell twist_inverse_;
};


/// FinSet restricted to nonempty sets: pushouts exist, pullbacks do not.
class NonemptyFinSetCategory
{
public:
  using Object = FinSet;
  using Morphism = FinSetMap;

  explicit NonemptyFinSetCategory(int max_size = 2)
  : sets_(max_size)
  {
    for (int n = 1; n <= max_size; ++n) {
      catalog_.push_back(FinSet{n});
    }
  }

  const std::vector<FinSet> & objects() const {return catalog_;}
  std::vector<FinSetMap> hom(FinSet x, FinSet y) const {return all_maps(x, y);}
  FinSet src(const FinSetMap & f) const {return f.src;}
  FinSet tgt(const FinSetMap & f) const {return f.tgt;}
  FinSetMap compose(const FinSetMap & g, const FinSetMap & f) const {return sets_.compose(g, f);}
  FinSetMap identity(FinSet x) const {return identity_map(x);}
  Cocone<FinSet, FinSetMap> pushout(const FinSetMap & f, const FinSetMap & g) const
  {
    return sets_.pushout(f, g);
  }
  FinSetMap copair(
    const Cocone<FinSet, FinSetMap> & p, const FinSetMap & q0, const FinSetMap & q1) const
  {
    return sets_.copair(p, q0, q1);
  }
  FinSet terminal() const {return FinSet{1};}
  std::size_t carrier_size(FinSet x) const {return static_cast<std::size_t>(x.size);}

private:
  FinSetCategory sets_;
  std::vector<FinSet> catalog_;
};

struct Point
{
  bool operator==(const Point &) const = default;
};

/// An element of the two-element group, as a morphism of its one-object category.
struct Flip
{
  bool on = false;
  bool operator==(const Flip &) const = default;
};

inline void to_json(Json & j, const Point &) {j = "*";}
inline void to_json(Json & j, const Flip & f) {j = f.on ? "a" : "e";}

class FlipCategory
{
public:
  using Object = Point;
  using Morphism = Flip;

  std::vector<Point> objects() const {return {Point{}};}
  std::vector<Flip> hom(Point, Point) const {return {Flip{false}, Flip{true}};}
  Point src(Flip) const {return {};}
  Point tgt(Flip) const {return {};}
  Flip compose(Flip g, Flip f) const {return {g.on != f.on};}
  Flip identity(Point) const {return {};}
  std::size_t carrier_size(Point) const {return 1;}
};

/**
 * One object, the two-element group horizontally, and only the identity
 * vertically. Cells are squares whose top and bottom agree, so the
 * non-identity element has neither companion nor conjoint.
 */
class FlipDouble
{
public:
  using Base = FlipCategory;
  using Object = Point;
  using HMor = Flip;
  using VMor = Point;
  using Witness = std::monostate;
  using Cell = dblcat::Cell<HMor, VMor, Witness>;
  using Frame = Boundary<HMor, VMor>;

  const FlipCategory & base() const {return base_;}
  std::vector<Point> objects() const {return {Point{}};}
  Point vsrc(Point) const {return {};}
  Point vtgt(Point) const {return {};}
  Point vid(Point) const {return {};}
  Point vcomp(Point, Point) const {return {};}
  std::vector<Point> vmors(Point, Point) const {return {Point{}};}
  bool within_bound(Point) const {return true;}

  std::vector<Cell> cells(const Frame & b) const
  {
    if (b.top == b.bottom) {
      return {Cell{b, {}}};
    }
    return {};
  }
  Cell paste_horizontal(const Cell & a, const Cell & b) const
  {
    return {{base_.compose(b.frame.top, a.frame.top), base_.compose(b.frame.bottom, a.frame.bottom),
        {}, {}}, {}};
  }
  Cell paste_vertical(const Cell & a, const Cell & b) const
  {
    return {{a.frame.top, b.frame.bottom, {}, {}}, {}};
  }
  Cell hidentity(Point) const {return {{Flip{}, Flip{}, {}, {}}, {}};}
  Cell videntity(Flip f) const {return {{f, f, {}, {}}, {}};}
  IsoCell<Cell> associator(Point, Point, Point) const {return {hidentity({}), hidentity({})};}
  IsoCell<Cell> left_unitor(Point) const {return {hidentity({}), hidentity({})};}
  IsoCell<Cell> right_unitor(Point) const {return {hidentity({}), hidentity({})};}

private:
  FlipCategory base_;
};

}  // namespace dblcat::testing

#endif  // DBLCAT_TESTS__FIXTURES_HPP_
