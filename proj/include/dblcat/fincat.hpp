// Copyright 2026 The dblcat Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef DBLCAT__FINCAT_HPP_
#define DBLCAT__FINCAT_HPP_

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "dblcat/category.hpp"
#include "dblcat/core.hpp"

namespace dblcat
{

/**
 * A finite category as tables. Morphism i runs src[i] -> tgt[i];
 * comp[g * n + f] is g . f, or -1 when tgt[f] != src[g].
 */
struct FinCategory
{
  int objects = 0;
  std::vector<int> src;
  std::vector<int> tgt;
  std::vector<int> ids;
  std::vector<int> comp;

  int morphisms() const {return static_cast<int>(src.size());}
  int compose(int g, int f) const
  {
    return comp[static_cast<std::size_t>(g * morphisms() + f)];
  }
  std::vector<int> hom(int a, int b) const;
  bool operator==(const FinCategory &) const = default;
};

void to_json(Json & j, const FinCategory & c);

/// Throws BoundaryError naming the first failed category law.
void validate(const FinCategory & c);

/// Builds a category from its non-identity morphisms and their composites.
/// Morphism i < objects is the identity on i; arrow k is morphism objects + k.
/// `composites` lists (g, f, g . f) for every composable pair of arrows.
FinCategory make_category(
  int objects, const std::vector<std::pair<int, int>> & arrows,
  const std::vector<std::vector<int>> & composites);

FinCategory discrete_category(int n);
/// 0 -> 1.
FinCategory arrow_category();
/// One object, one idempotent e.
FinCategory idempotent_monoid();
/// One object, a with a . a = 1.
FinCategory involution_monoid();

/// The empty, terminal, two discrete objects, arrow, idempotent, involution.
std::vector<FinCategory> standard_categories();

struct FinFunctor
{
  FinCategory src;
  FinCategory tgt;
  std::vector<int> on_objects;
  std::vector<int> on_morphisms;

  bool operator==(const FinFunctor &) const = default;
};

void to_json(Json & j, const FinFunctor & f);
void validate(const FinFunctor & f);

/// Every functor x -> y, by backtracking over morphism images.
std::vector<FinFunctor> all_functors(const FinCategory & x, const FinCategory & y);

class FinCatCategory
{
public:
  using Object = FinCategory;
  using Morphism = FinFunctor;

  explicit FinCatCategory(std::vector<FinCategory> catalog = standard_categories());

  const std::vector<FinCategory> & objects() const {return catalog_;}
  std::vector<FinFunctor> hom(const FinCategory & x, const FinCategory & y) const
  {
    return all_functors(x, y);
  }
  FinCategory src(const FinFunctor & f) const {return f.src;}
  FinCategory tgt(const FinFunctor & f) const {return f.tgt;}
  FinFunctor compose(const FinFunctor & g, const FinFunctor & f) const;
  FinFunctor identity(const FinCategory & x) const;

  FinCategory terminal() const {return discrete_category(1);}
  /// Objects, so the catalog fits within a bound of two.
  std::size_t carrier_size(const FinCategory & x) const {return static_cast<std::size_t>(x.objects);}

private:
  std::vector<FinCategory> catalog_;
};

/**
 * A profunctor m : X0^op x X1 -> Set by its elements. Element e lies in
 * m(at0[e], at1[e]); act0[u * n + e] is e . u for u into at0[e] and act1[v *
 * n + e] is v . e for v out of at1[e], -1 otherwise.
 */
struct FinProfunctor
{
  FinCategory src;
  FinCategory tgt;
  std::vector<int> at0;
  std::vector<int> at1;
  std::vector<int> act0;
  std::vector<int> act1;

  int elements() const {return static_cast<int>(at0.size());}
  int left(int u, int e) const {return act0[static_cast<std::size_t>(u * elements() + e)];}
  int right(int v, int e) const {return act1[static_cast<std::size_t>(v * elements() + e)];}
  /// Number of elements in each m(a, b).
  std::vector<int> fiber_sizes() const;
  bool operator==(const FinProfunctor &) const = default;
};

void to_json(Json & j, const FinProfunctor & m);
void validate(const FinProfunctor & m);

/// Builds a profunctor from element coordinates and action functions.
template <class Left, class Right>
FinProfunctor make_profunctor(
  const FinCategory & x0, const FinCategory & x1, std::vector<int> at0, std::vector<int> at1,
  Left left, Right right)
{
  FinProfunctor m{x0, x1, std::move(at0), std::move(at1), {}, {}};
  const int n = m.elements();
  m.act0.assign(static_cast<std::size_t>(x0.morphisms() * n), -1);
  m.act1.assign(static_cast<std::size_t>(x1.morphisms() * n), -1);
  for (int e = 0; e < n; ++e) {
    for (int u = 0; u < x0.morphisms(); ++u) {
      if (x0.tgt[u] == m.at0[e]) {m.act0[u * n + e] = left(u, e);}
    }
    for (int v = 0; v < x1.morphisms(); ++v) {
      if (x1.src[v] == m.at1[e]) {m.act1[v * n + e] = right(v, e);}
    }
  }
  return m;
}

/// Profunctors with every m(a, b) of size <= fiber_bound, one per iso class.
std::vector<FinProfunctor> all_profunctors(
  const FinCategory & x0, const FinCategory & x1, int fiber_bound);

/// The hom profunctor X(a, b).
FinProfunctor hom_profunctor(const FinCategory & x);

/**
 * The coend of m and n over the middle category: pairs (e, e') with
 * at1[e] == at0[e'] modulo (v . e, e') ~ (e, e' . v). Classes are numbered by
 * their least pair; `class_of` maps pair index e * |n| + e' to its class.
 */
struct Coend
{
  FinProfunctor composite;
  std::vector<int> class_of;
  std::vector<std::pair<int, int>> representative;

  int of(int e, int f, int n_elements) const
  {
    return class_of[static_cast<std::size_t>(e * n_elements + f)];
  }
};

Coend coend(const FinProfunctor & m, const FinProfunctor & n);

/// The image of each element under a cell.
struct ElementMap
{
  std::vector<int> image;

  int operator()(int e) const {return image[static_cast<std::size_t>(e)];}
  bool operator==(const ElementMap &) const = default;
};

void to_json(Json & j, const ElementMap & w);

/**
 * Cat: finite categories, functors, and profunctors composed by coends.
 * A cell over f0, f1 from m to n is a natural map of elements
 * m(a, b) -> n(f0 a, f1 b); its witness lists the image of each element.
 */
class CatDouble
{
public:
  using Base = FinCatCategory;
  using Object = FinCategory;
  using HMor = FinFunctor;
  using VMor = FinProfunctor;
  using Witness = ElementMap;
  using Cell = dblcat::Cell<HMor, VMor, Witness>;
  using Frame = Boundary<HMor, VMor>;

  explicit CatDouble(FinCatCategory base, int fiber_bound = 2)
  : base_(std::move(base)), fiber_bound_(fiber_bound) {}

  const FinCatCategory & base() const {return base_;}
  std::vector<FinCategory> objects() const {return base_.objects();}
  int fiber_bound() const {return fiber_bound_;}

  FinCategory vsrc(const FinProfunctor & m) const {return m.src;}
  FinCategory vtgt(const FinProfunctor & m) const {return m.tgt;}
  FinProfunctor vid(const FinCategory & x) const {return hom_profunctor(x);}
  FinProfunctor vcomp(const FinProfunctor & m, const FinProfunctor & n) const;
  std::vector<FinProfunctor> vmors(const FinCategory & x0, const FinCategory & x1) const
  {
    return all_profunctors(x0, x1, fiber_bound_);
  }
  bool within_bound(const FinProfunctor & m) const;

  /// Whether a witness is a natural map for the frame.
  bool is_cell(const Frame & b, const Witness & w) const;
  std::vector<Cell> cells(const Frame & b) const;
  Cell paste_horizontal(const Cell & a, const Cell & b) const;
  Cell paste_vertical(const Cell & a, const Cell & b) const;
  Cell hidentity(const FinProfunctor & m) const;
  Cell videntity(const FinFunctor & f) const;
  IsoCell<Cell> associator(const FinProfunctor & a, const FinProfunctor & b, const FinProfunctor & c) const;
  IsoCell<Cell> left_unitor(const FinProfunctor & m) const;
  IsoCell<Cell> right_unitor(const FinProfunctor & m) const;

  /// f_*(a, b) = Y(f a, b).
  CompanionData<CatDouble> companion(const FinFunctor & f) const;
  /// f^*(b, a) = Y(b, f a).
  ConjointData<CatDouble> conjoint(const FinFunctor & f) const;
  /// The collage: X0 + X1 with the elements of m as the morphisms between.
  CotabulatorData<CatDouble> cotabulator(const FinProfunctor & m) const;
  /// The category of elements of m.
  TabulatorData<CatDouble> tabulator(const FinProfunctor & m) const;

private:
  FinCatCategory base_;
  int fiber_bound_;
};

}  // namespace dblcat

#endif  // DBLCAT__FINCAT_HPP_
