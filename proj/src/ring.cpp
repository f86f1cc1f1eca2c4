// Copyright 2026 The dblcat Authors
// SPDX-License-Identifier: Apache-2.0

#include "dblcat/ring.hpp"

#include <stdexcept>
#include <utility>

namespace dblcat
{

IntMatrix int_matrix(std::size_t rows, std::size_t cols, std::vector<long> data)
{
  if (data.size() != rows * cols) {
    throw std::invalid_argument("int_matrix: entry count does not match shape");
  }
  return {rows, cols, std::move(data)};
}

IntMatrix zero_matrix(std::size_t rows, std::size_t cols)
{
  return {rows, cols, std::vector<long>(rows * cols, 0)};
}

IntMatrix identity_matrix(std::size_t n)
{
  auto m = zero_matrix(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m.data[i * n + i] = 1;
  }
  return m;
}

IntMatrix multiply(const IntMatrix & a, const IntMatrix & b)
{
  if (a.cols != b.rows) {
    throw std::invalid_argument("multiply: shapes do not compose");
  }
  auto m = zero_matrix(a.rows, b.cols);
  for (std::size_t r = 0; r < a.rows; ++r) {
    for (std::size_t c = 0; c < b.cols; ++c) {
      long s = 0;
      for (std::size_t k = 0; k < a.cols; ++k) {
        s += a.at(r, k) * b.at(k, c);
      }
      m.data[r * m.cols + c] = s;
    }
  }
  return m;
}

IntMatrix kronecker(const IntMatrix & a, const IntMatrix & b)
{
  auto m = zero_matrix(a.rows * b.rows, a.cols * b.cols);
  for (std::size_t r = 0; r < m.rows; ++r) {
    for (std::size_t c = 0; c < m.cols; ++c) {
      m.data[r * m.cols + c] = a.at(r / b.rows, c / b.cols) * b.at(r % b.rows, c % b.cols);
    }
  }
  return m;
}

std::vector<long> PresentedRing::one() const
{
  return std::vector<long>(rank, 1);
}

std::vector<long> PresentedRing::multiply(
  const std::vector<long> & a,
  const std::vector<long> & b) const
{
  std::vector<long> out(rank);
  for (std::size_t i = 0; i < rank; ++i) {
    out[i] = a[i] * b[i];
    if (modulus != 0) {
      out[i] = ((out[i] % modulus) + modulus) % modulus;
    }
  }
  return out;
}

PresentedRing integers(long range)
{
  PresentedRing r{"Z", 1, 0, {}};
  for (long a = -range; a <= range; ++a) {
    r.candidates.push_back({a});
  }
  return r;
}

PresentedRing integer_pairs(long range)
{
  PresentedRing r{"Z+Z", 2, 0, {}};
  for (long a = -range; a <= range; ++a) {
    for (long b = -range; b <= range; ++b) {
      r.candidates.push_back({a, b});
    }
  }
  return r;
}

PresentedRing integers_mod(long n)
{
  PresentedRing r{"Z/" + std::to_string(n), 1, n, {}};
  for (long a = 0; a < n; ++a) {
    r.candidates.push_back({a});
  }
  return r;
}

std::vector<std::vector<long>> unital_maps_from_integers(const PresentedRing & r)
{
  std::vector<std::vector<long>> out;
  for (const auto & c : r.candidates) {
    if (c == r.one() && r.multiply(c, c) == c) {
      out.push_back(c);
    }
  }
  return out;
}

std::vector<std::vector<long>> bimodule_maps_from_integers(const PresentedRing & r)
{
  return r.candidates;
}

namespace
{

IntMatrix column(const std::vector<long> & v)
{
  return int_matrix(v.size(), 1, v);
}

}  // namespace

Report ring_fixture_checks()
{
  Report r("ring");

  const auto z = integers();
  const auto zz = integer_pairs();
  const auto z2 = integers_mod(2);

  // the integers are initial among the presented rings
  for (const auto * target : {&z, &zz, &z2}) {
    auto homs = unital_maps_from_integers(*target);
    r.check("initial.hom-count", homs.size() == 1, [&] {
        return Json{{"target", target->name}, {"count", homs.size()}};
      });
  }
  auto diag = unital_maps_from_integers(zz);
  r.check("hom.diagonal", diag.size() == 1 && diag.front() == std::vector<long>{1, 1},
    [&] {return Json{{"found", diag}};});

  // cells over identity ring maps are additive maps between bimodules of rank 0, 1, 2
  const IntMatrix iota1 = column({1, 0});
  const IntMatrix iota2 = column({0, 1});
  const IntMatrix zero_cell = zero_matrix(1, 0);
  const IntMatrix left = kronecker(iota1, zero_cell);
  const IntMatrix right = kronecker(zero_cell, iota2);
  r.check("tetrahedron.commutes", left == right, [&] {
      return Json{{"left", left.data}, {"right", right.data}};
    });

  // a factorization needs one cell out of the cotabulator matching both faces
  bool factors = false;
  for (const auto & phi : zz.candidates) {
    const IntMatrix p = column(phi);
    factors = factors || (p == iota1 && p == iota2);
  }
  r.check("tetrahedron.no-additive-factorization", !factors);

  Json witness = Json::object();
  if (!diag.empty()) {
    const IntMatrix phi = column(diag.front());
    Json mismatches = Json::array();
    if (!(phi == iota1)) {mismatches.push_back("iota1");}
    if (!(phi == iota2)) {mismatches.push_back("iota2");}
    witness = Json{
      {"bimodule", "0: Z -> Z"},
      {"cotabulator", "Z"},
      {"phi", diag.front()},
      {"iota1", iota1.data},
      {"iota2", iota2.data},
      {"mismatched_faces", mismatches}};
    r.check("tetrahedron.diagonal-fails", mismatches.size() == 2, [&] {return witness;});
  }
  r.fact("strong", !factors && diag.size() == 1 ? Json(false) : Json(true));
  r.fact("strong.witness", witness);

  // the identity bimodule on Z admits two maps to Z/2, so it is not initial
  auto maps = bimodule_maps_from_integers(z2);
  r.check("identity-bimodule.not-initial", maps.size() >= 2, [&] {
      return Json{{"count", maps.size()}};
    });
  r.fact("identity-bimodule.maps-to-Z/2", maps);
  r.fact("tabulators", "unavailable");
  return r;
}

}  // namespace dblcat
