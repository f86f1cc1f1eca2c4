// Copyright 2026 The dblcat Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef DBLCAT__PREORDER_HPP_
#define DBLCAT__PREORDER_HPP_

#include <cstdint>
#include <utility>
#include <vector>

#include "dblcat/report.hpp"

namespace dblcat
{

/// A reflexive, transitive relation on {0, ..., size-1}; leq is row-major.
struct Preorder
{
  int size = 0;
  std::vector<std::uint8_t> leq;

  bool le(int a, int b) const
  {
    return leq[static_cast<std::size_t>(a * size + b)] != 0;
  }
  bool operator==(const Preorder &) const = default;
};

void to_json(Json & j, const Preorder & p);

Preorder discrete_preorder(int n);
Preorder chain_preorder(int n);

/// Reflexive-transitive closure of the given pairs.
Preorder generated_preorder(int n, const std::vector<std::pair<int, int>> & pairs);

/// Throws BoundaryError naming the first violated law ("reflexivity",
/// "transitivity", or with `antisymmetric` also "antisymmetry").
void validate_preorder(const Preorder & p, bool antisymmetric);

bool is_monotone(const Preorder & x, const Preorder & y, const std::vector<int> & table);

/// Every monotone table x -> y, in lexicographic order.
std::vector<std::vector<int>> monotone_tables(const Preorder & x, const Preorder & y);

/// One representative per isomorphism class of preorders on n points, each
/// the lexicographically least relabelling of its class.
std::vector<Preorder> preorders_up_to_iso(int n, bool antisymmetric);

/// Colimit injections into a quotient of x + y.
struct GluedPreorder
{
  Preorder apex;
  std::vector<int> in0;
  std::vector<int> in1;
};

/**
 * Pushout of f : a -> x and g : a -> y: the disjoint union with f(i) ~ g(i),
 * ordered by the preorder the summands generate. With `collapse`, mutually
 * related points are identified so the apex is a partial order.
 */
GluedPreorder pushout_preorder(
  const Preorder & x, const Preorder & y, const std::vector<int> & f, const std::vector<int> & g,
  bool collapse);

/// Limit projections out of a subset of x * y.
struct PairedPreorder
{
  Preorder apex;
  std::vector<int> out0;
  std::vector<int> out1;
};

/// {(b, c) | f(b) = g(c)} in lexicographic order with the product order.
PairedPreorder pullback_preorder(
  const Preorder & x, const Preorder & y, const std::vector<int> & f, const std::vector<int> & g);

/// Monotone sections s of p : z -> b (p . s = id), ordered pointwise.
struct SectionPreorder
{
  Preorder apex;
  std::vector<std::vector<int>> sections;
};

SectionPreorder sections_preorder(const Preorder & z, const Preorder & b, const std::vector<int> & p);

/// The order on the disjoint union x + y extended by x-to-y pairs.
Preorder collage_preorder(
  const Preorder & x, const Preorder & y, const std::vector<std::pair<int, int>> & across);

}  // namespace dblcat

#endif  // DBLCAT__PREORDER_HPP_
