// Copyright 2026 The dblcat Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef DBLCAT__RING_HPP_
#define DBLCAT__RING_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "dblcat/report.hpp"

namespace dblcat
{

/// Integer matrix of an additive map between free abelian groups, row major.
struct IntMatrix
{
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<long> data;

  long at(std::size_t r, std::size_t c) const {return data[r * cols + c];}

  bool operator==(const IntMatrix &) const = default;
};

IntMatrix int_matrix(std::size_t rows, std::size_t cols, std::vector<long> data);
IntMatrix zero_matrix(std::size_t rows, std::size_t cols);
IntMatrix identity_matrix(std::size_t n);
IntMatrix multiply(const IntMatrix & a, const IntMatrix & b);
/// Matrix of the tensor product of two maps.
IntMatrix kronecker(const IntMatrix & a, const IntMatrix & b);

/**
 * A commutative ring presented by the finitely many candidate images of 1
 * under maps out of the integers.
 *
 * Elements are coordinate vectors; `modulus` is 0 for integer coordinates.
 */
struct PresentedRing
{
  std::string name;
  std::size_t rank = 0;
  long modulus = 0;
  std::vector<std::vector<long>> candidates;

  std::vector<long> one() const;
  std::vector<long> multiply(const std::vector<long> & a, const std::vector<long> & b) const;
};

PresentedRing integers(long range = 2);
PresentedRing integer_pairs(long range = 2);
PresentedRing integers_mod(long n);

/// Images of 1 that define unital ring maps from the integers.
std::vector<std::vector<long>> unital_maps_from_integers(const PresentedRing & r);

/// Images of 1 that define bimodule maps from the integers; any image works.
std::vector<std::vector<long>> bimodule_maps_from_integers(const PresentedRing & r);

/// Hom counts, the tetrahedron over the zero bimodule, and the initiality witness.
Report ring_fixture_checks();

}  // namespace dblcat

#endif  // DBLCAT__RING_HPP_
