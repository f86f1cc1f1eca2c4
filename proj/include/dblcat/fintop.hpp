// Copyright 2026 The dblcat Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef DBLCAT__FINTOP_HPP_
#define DBLCAT__FINTOP_HPP_

#include <cstdint>
#include <variant>
#include <vector>

#include "dblcat/category.hpp"
#include "dblcat/core.hpp"
#include "dblcat/preorder.hpp"

namespace dblcat
{

/// A topology on {0, ..., size-1}; opens are bitmasks in ascending order.
struct FinSpace
{
  int size = 0;
  std::vector<std::uint32_t> opens;

  std::uint32_t whole() const {return size == 0 ? 0u : (1u << size) - 1u;}
  bool is_open(std::uint32_t u) const;
  /// Position of an open in `opens`; throws if u is not open.
  std::size_t index_of(std::uint32_t u) const;
  bool operator==(const FinSpace &) const = default;
};

void to_json(Json & j, const FinSpace & x);

/// Throws BoundaryError naming the first failed axiom.
void validate(const FinSpace & x);

/// Builds a space from any list of opens (sorted, deduplicated, validated).
FinSpace make_space(int size, std::vector<std::uint32_t> opens);

/// x <= y iff every open containing x contains y; opens are the up-sets.
Preorder specialization(const FinSpace & x);
FinSpace alexandrov(const Preorder & p);

FinSpace sierpinski_space();

struct ContinuousMap
{
  FinSpace src;
  FinSpace tgt;
  std::vector<int> table;

  bool operator==(const ContinuousMap &) const = default;
  int operator()(int i) const {return table[static_cast<std::size_t>(i)];}
  std::uint32_t preimage(std::uint32_t v) const;
};

void to_json(Json & j, const ContinuousMap & f);
void validate(const ContinuousMap & f);

/// Finite spaces and continuous maps; one space per homeomorphism class.
class FinTopCategory
{
public:
  using Object = FinSpace;
  using Morphism = ContinuousMap;

  explicit FinTopCategory(int max_points = 2);
  /// Validates every space.
  explicit FinTopCategory(std::vector<FinSpace> catalog);

  const std::vector<FinSpace> & objects() const {return catalog_;}
  std::vector<ContinuousMap> hom(const FinSpace & x, const FinSpace & y) const;
  FinSpace src(const ContinuousMap & f) const {return f.src;}
  FinSpace tgt(const ContinuousMap & f) const {return f.tgt;}
  ContinuousMap compose(const ContinuousMap & g, const ContinuousMap & f) const;
  ContinuousMap identity(const FinSpace & x) const;

  /// Quotient topology on the glued sum.
  Cocone<FinSpace, ContinuousMap> pushout(const ContinuousMap & f, const ContinuousMap & g) const;
  ContinuousMap copair(
    const Cocone<FinSpace, ContinuousMap> & p, const ContinuousMap & q0, const ContinuousMap & q1) const;
  /// Subspace of the product.
  Cone<FinSpace, ContinuousMap> pullback(const ContinuousMap & f, const ContinuousMap & g) const;
  ContinuousMap pair(
    const Cone<FinSpace, ContinuousMap> & p, const ContinuousMap & q0, const ContinuousMap & q1) const;

  FinSpace terminal() const {return alexandrov(discrete_preorder(1));}
  FinSpace initial() const {return alexandrov(discrete_preorder(0));}
  std::size_t carrier_size(const FinSpace & x) const {return static_cast<std::size_t>(x.size);}

  /// Continuous sections of p with the exponential (pointwise) topology.
  FinSpace sections_object(const ContinuousMap & p) const;
  ContinuousMap evaluate_sections(const ContinuousMap & p, const ContinuousMap & point) const;

private:
  std::vector<FinSpace> catalog_;
};

/// A finite-intersection-preserving map O(X0) -> O(X1); image[i] is the
/// value at src.opens[i].
struct OpenMap
{
  FinSpace src;
  FinSpace tgt;
  std::vector<std::uint32_t> image;

  std::uint32_t operator()(std::uint32_t u) const {return image[src.index_of(u)];}
  bool operator==(const OpenMap &) const = default;
};

void to_json(Json & j, const OpenMap & m);
void validate(const OpenMap & m);
std::vector<OpenMap> all_open_maps(const FinSpace & x0, const FinSpace & x1);

/**
 * Top: finite spaces, continuous maps, and maps of opens composed as
 * functions (m then n is n . m). A cell over f0, f1 from m to n exists,
 * uniquely, when f1^-1 n V is contained in m f0^-1 V for every open V.
 */
class TopDouble
{
public:
  using Base = FinTopCategory;
  using Object = FinSpace;
  using HMor = ContinuousMap;
  using VMor = OpenMap;
  using Witness = std::monostate;
  using Cell = dblcat::Cell<HMor, VMor, Witness>;
  using Frame = Boundary<HMor, VMor>;

  explicit TopDouble(FinTopCategory base)
  : base_(std::move(base)) {}

  const FinTopCategory & base() const {return base_;}
  std::vector<FinSpace> objects() const {return base_.objects();}

  FinSpace vsrc(const OpenMap & m) const {return m.src;}
  FinSpace vtgt(const OpenMap & m) const {return m.tgt;}
  OpenMap vid(const FinSpace & x) const {return {x, x, x.opens};}
  OpenMap vcomp(const OpenMap & m, const OpenMap & n) const;
  std::vector<OpenMap> vmors(const FinSpace & x0, const FinSpace & x1) const
  {
    return all_open_maps(x0, x1);
  }
  bool within_bound(const OpenMap &) const {return true;}

  bool holds(const Frame & b) const;
  std::vector<Cell> cells(const Frame & b) const;
  Cell paste_horizontal(const Cell & a, const Cell & b) const;
  Cell paste_vertical(const Cell & a, const Cell & b) const;
  Cell hidentity(const OpenMap & m) const;
  Cell videntity(const ContinuousMap & f) const;
  IsoCell<Cell> associator(const OpenMap & a, const OpenMap & b, const OpenMap & c) const;
  IsoCell<Cell> left_unitor(const OpenMap & m) const;
  IsoCell<Cell> right_unitor(const OpenMap & m) const;

  /// f_* U is the largest open V with f^-1 V inside U.
  CompanionData<TopDouble> companion(const ContinuousMap & f) const;
  /// f^* V = f^-1 V.
  ConjointData<TopDouble> conjoint(const ContinuousMap & f) const;
  /// X0 + X1 with U open iff U0, U1 open and U1 inside m U0.
  CotabulatorData<TopDouble> cotabulator(const OpenMap & m) const;
  /// {(x0, x1) | x1 in m U0 implies x0 in U0 for all opens U0}, as a subspace.
  TabulatorData<TopDouble> tabulator(const OpenMap & m) const;

private:
  Cell thin(const Frame & b) const;

  FinTopCategory base_;
};

}  // namespace dblcat

#endif  // DBLCAT__FINTOP_HPP_
