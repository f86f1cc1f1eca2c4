// Copyright 2026 The dblcat Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef DBLCAT__FINSET_HPP_
#define DBLCAT__FINSET_HPP_

#include <cstddef>
#include <vector>

#include "dblcat/category.hpp"
#include "dblcat/report.hpp"

namespace dblcat
{

/// The set {0, ..., size-1}.
struct FinSet
{
  int size = 0;
  bool operator==(const FinSet &) const = default;
};

/// A function between finite sets as a lookup table; table[i] < tgt.size.
struct FinSetMap
{
  FinSet src;
  FinSet tgt;
  std::vector<int> table;

  bool operator==(const FinSetMap &) const = default;
  int operator()(int i) const {return table[static_cast<std::size_t>(i)];}
};

void to_json(Json & j, const FinSet & x);
void to_json(Json & j, const FinSetMap & f);

/// Throws BoundaryError unless every table entry is in range.
void validate(const FinSetMap & f);

FinSetMap identity_map(FinSet x);
FinSetMap compose(const FinSetMap & g, const FinSetMap & f);
std::vector<FinSetMap> all_maps(FinSet x, FinSet y);
bool is_bijection(const FinSetMap & f);

/// Disjoint-union quotient by f(a) ~ g(a); classes are numbered by their
/// least element in the order tgt(f) then tgt(g).
Cocone<FinSet, FinSetMap> pushout_finset(const FinSetMap & f, const FinSetMap & g);

/// {(b, c) | f(b) = g(c)} in lexicographic order.
Cone<FinSet, FinSetMap> pullback_finset(const FinSetMap & f, const FinSetMap & g);

/// Checks that a cocone over (f, g) is a pushout against every competing
/// cocone into sets of size <= max_target: exactly one mediating map each.
Report verify_pushout_universal(
  const FinSetMap & f, const FinSetMap & g, const Cocone<FinSet, FinSetMap> & p, int max_target);

Report verify_pullback_universal(
  const FinSetMap & f, const FinSetMap & g, const Cone<FinSet, FinSetMap> & p, int max_source);

/// FinSet with the catalog {0, ..., max_size}.
class FinSetCategory
{
public:
  using Object = FinSet;
  using Morphism = FinSetMap;

  explicit FinSetCategory(int max_size = 2);
  explicit FinSetCategory(std::vector<FinSet> catalog);

  const std::vector<FinSet> & objects() const {return catalog_;}
  std::vector<FinSetMap> hom(FinSet x, FinSet y) const {return all_maps(x, y);}
  FinSet src(const FinSetMap & f) const {return f.src;}
  FinSet tgt(const FinSetMap & f) const {return f.tgt;}
  FinSetMap compose(const FinSetMap & g, const FinSetMap & f) const;
  FinSetMap identity(FinSet x) const {return identity_map(x);}

  Cocone<FinSet, FinSetMap> pushout(const FinSetMap & f, const FinSetMap & g) const;
  FinSetMap copair(
    const Cocone<FinSet, FinSetMap> & p, const FinSetMap & q0, const FinSetMap & q1) const;
  Cone<FinSet, FinSetMap> pullback(const FinSetMap & f, const FinSetMap & g) const;
  FinSetMap pair(
    const Cone<FinSet, FinSetMap> & p, const FinSetMap & q0, const FinSetMap & q1) const;

  FinSet terminal() const {return FinSet{1};}
  FinSet initial() const {return FinSet{0};}
  std::size_t carrier_size(FinSet x) const {return static_cast<std::size_t>(x.size);}

private:
  std::vector<FinSet> catalog_;
};

}  // namespace dblcat

#endif  // DBLCAT__FINSET_HPP_
