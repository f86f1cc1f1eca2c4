// Copyright 2026 The dblcat Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "dblcat/ring.hpp"

using namespace dblcat;

namespace
{

// n -> n * c, checked as a ring map on sample integers.
bool is_unital_on_samples(const PresentedRing & r, const std::vector<long> & c)
{
  auto image = [&](long n) {
      std::vector<long> v(c.size());
      for (std::size_t i = 0; i < c.size(); ++i) {
        v[i] = n * c[i];
        if (r.modulus != 0) {v[i] = ((v[i] % r.modulus) + r.modulus) % r.modulus;}
      }
      return v;
    };
  if (image(1) != r.one()) {return false;}
  for (long x = -3; x <= 3; ++x) {
    for (long y = -3; y <= 3; ++y) {
      if (image(x * y) != r.multiply(image(x), image(y))) {return false;}
    }
  }
  return true;
}

}  // namespace

TEST_CASE("unital maps out of the integers match a sampled check") {
  for (const auto & r : {integers(3), integer_pairs(3), integers_mod(2), integers_mod(3)}) {
    std::size_t sampled = 0;
    for (const auto & c : r.candidates) {
      sampled += is_unital_on_samples(r, c) ? 1 : 0;
    }
    CHECK(unital_maps_from_integers(r).size() == sampled);
    CHECK(sampled == 1);
  }
  CHECK(unital_maps_from_integers(integer_pairs()) == std::vector<std::vector<long>>{{1, 1}});
}

TEST_CASE("kronecker products satisfy the mixed product rule") {
  auto a = int_matrix(2, 1, {1, 2});
  auto b = int_matrix(1, 2, {3, -1});
  auto c = int_matrix(1, 1, {2});
  auto d = int_matrix(2, 2, {0, 1, 1, 0});
  CHECK(multiply(kronecker(a, b), kronecker(c, d)) ==
    kronecker(multiply(a, c), multiply(b, d)));
  CHECK(kronecker(identity_matrix(2), identity_matrix(3)) == identity_matrix(6));
  auto z = kronecker(int_matrix(2, 1, {1, 0}), zero_matrix(1, 0));
  CHECK(z.rows == 2);
  CHECK(z.cols == 0);
}

TEST_CASE("the ring fixture is not strong") {
  auto r = ring_fixture_checks();
  CHECK(r.ok());
  CHECK(r.facts.at("strong") == false);
  const auto & w = r.facts.at("strong.witness");
  CHECK(w.at("phi") == Json::array({1, 1}));
  CHECK(w.at("mismatched_faces").size() == 2);
  CHECK(r.facts.at("identity-bimodule.maps-to-Z/2").size() == 2);
  CHECK(r.facts.at("tabulators") == "unavailable");
}

TEST_CASE("bimodule maps from the integers to Z/2") {
  CHECK(bimodule_maps_from_integers(integers_mod(2)).size() == 2);
  CHECK(unital_maps_from_integers(integers_mod(2)).size() == 1);
}

TEST_CASE("malformed matrices are rejected") {
  CHECK_THROWS(int_matrix(2, 2, {1, 2, 3}));
  CHECK_THROWS(multiply(identity_matrix(2), identity_matrix(3)));
}
