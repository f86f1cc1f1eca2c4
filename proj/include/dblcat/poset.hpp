// Copyright 2026 The dblcat Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef DBLCAT__POSET_HPP_
#define DBLCAT__POSET_HPP_

#include <cstdint>
#include <limits>
#include <variant>
#include <vector>

#include "dblcat/category.hpp"
#include "dblcat/core.hpp"
#include "dblcat/preorder.hpp"

namespace dblcat
{

/// A preorder that is also antisymmetric.
using FinPoset = Preorder;

struct MonotoneMap
{
  FinPoset src;
  FinPoset tgt;
  std::vector<int> table;

  bool operator==(const MonotoneMap &) const = default;
  int operator()(int i) const {return table[static_cast<std::size_t>(i)];}
};

void to_json(Json & j, const MonotoneMap & f);

/// Throws BoundaryError unless the table is in range and monotone.
void validate(const MonotoneMap & f);

/// Finite posets and monotone maps; the catalog holds one poset per
/// isomorphism class up to `max_size` elements.
class FinPosCategory
{
public:
  using Object = FinPoset;
  using Morphism = MonotoneMap;

  explicit FinPosCategory(int max_size = 2);
  /// Validates every poset.
  explicit FinPosCategory(std::vector<FinPoset> catalog);

  const std::vector<FinPoset> & objects() const {return catalog_;}
  std::vector<MonotoneMap> hom(const FinPoset & x, const FinPoset & y) const;
  FinPoset src(const MonotoneMap & f) const {return f.src;}
  FinPoset tgt(const MonotoneMap & f) const {return f.tgt;}
  MonotoneMap compose(const MonotoneMap & g, const MonotoneMap & f) const;
  MonotoneMap identity(const FinPoset & x) const;

  Cocone<FinPoset, MonotoneMap> pushout(const MonotoneMap & f, const MonotoneMap & g) const;
  MonotoneMap copair(
    const Cocone<FinPoset, MonotoneMap> & p, const MonotoneMap & q0, const MonotoneMap & q1) const;
  Cone<FinPoset, MonotoneMap> pullback(const MonotoneMap & f, const MonotoneMap & g) const;
  MonotoneMap pair(
    const Cone<FinPoset, MonotoneMap> & p, const MonotoneMap & q0, const MonotoneMap & q1) const;

  FinPoset terminal() const {return discrete_preorder(1);}
  FinPoset initial() const {return discrete_preorder(0);}
  std::size_t carrier_size(const FinPoset & x) const {return static_cast<std::size_t>(x.size);}

  /// Monotone sections of p ordered pointwise, and evaluation at a point of tgt(p).
  FinPoset sections_object(const MonotoneMap & p) const;
  MonotoneMap evaluate_sections(const MonotoneMap & p, const MonotoneMap & point) const;

private:
  std::vector<FinPoset> catalog_;
};

/**
 * An order ideal m of X0^op x X1: (x0, x1) in m, x0' <= x0 and x1 <= x1'
 * imply (x0', x1') in m. Stored row-major over X0 x X1.
 */
struct OrderIdeal
{
  FinPoset src;
  FinPoset tgt;
  std::vector<std::uint8_t> rel;

  bool has(int a, int b) const
  {
    return rel[static_cast<std::size_t>(a * tgt.size + b)] != 0;
  }
  bool operator==(const OrderIdeal &) const = default;
};

void to_json(Json & j, const OrderIdeal & m);

/// Throws BoundaryError naming the ideal closure condition when it fails.
void validate(const OrderIdeal & m);

std::vector<OrderIdeal> all_ideals(const FinPoset & x0, const FinPoset & x1);

/**
 * Pos: posets, monotone maps, order ideals composed relationally (strictly).
 * A cell over f0, f1 from m to n exists, uniquely, when
 * (x0, x1) in m implies (f0 x0, f1 x1) in n.
 */
class PosDouble
{
public:
  using Base = FinPosCategory;
  using Object = FinPoset;
  using HMor = MonotoneMap;
  using VMor = OrderIdeal;
  using Witness = std::monostate;
  using Cell = dblcat::Cell<HMor, VMor, Witness>;
  using Frame = Boundary<HMor, VMor>;

  explicit PosDouble(FinPosCategory base)
  : base_(std::move(base)) {}

  const FinPosCategory & base() const {return base_;}
  std::vector<FinPoset> objects() const {return base_.objects();}

  FinPoset vsrc(const OrderIdeal & m) const {return m.src;}
  FinPoset vtgt(const OrderIdeal & m) const {return m.tgt;}
  OrderIdeal vid(const FinPoset & x) const;
  OrderIdeal vcomp(const OrderIdeal & m, const OrderIdeal & n) const;
  std::vector<OrderIdeal> vmors(const FinPoset & x0, const FinPoset & x1) const
  {
    return all_ideals(x0, x1);
  }
  bool within_bound(const OrderIdeal &) const {return true;}

  /// The cell condition, for a well-formed frame.
  bool holds(const Frame & b) const;
  std::vector<Cell> cells(const Frame & b) const;
  Cell paste_horizontal(const Cell & a, const Cell & b) const;
  Cell paste_vertical(const Cell & a, const Cell & b) const;
  Cell hidentity(const OrderIdeal & m) const;
  Cell videntity(const MonotoneMap & f) const;
  IsoCell<Cell> associator(const OrderIdeal & a, const OrderIdeal & b, const OrderIdeal & c) const;
  IsoCell<Cell> left_unitor(const OrderIdeal & m) const;
  IsoCell<Cell> right_unitor(const OrderIdeal & m) const;

  /// f_*(x, y) = [f x <= y]
  CompanionData<PosDouble> companion(const MonotoneMap & f) const;
  /// f^*(y, x) = [y <= f x]
  ConjointData<PosDouble> conjoint(const MonotoneMap & f) const;
  /// The collage: X0 + X1 with x0 <= x1 iff (x0, x1) in m.
  CotabulatorData<PosDouble> cotabulator(const OrderIdeal & m) const;
  /// The elements of m under the product order.
  TabulatorData<PosDouble> tabulator(const OrderIdeal & m) const;

private:
  Cell thin(const Frame & b) const;

  FinPosCategory base_;
};

}  // namespace dblcat

#endif  // DBLCAT__POSET_HPP_
