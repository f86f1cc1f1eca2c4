// Copyright 2026 The dblcat Authors
// SPDX-License-Identifier: Apache-2.0

#include "dblcat/preorder.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "dblcat/category.hpp"

namespace dblcat
{

namespace
{

std::size_t at(int n, int a, int b) {return static_cast<std::size_t>(a * n + b);}

int find_root(std::vector<int> & parent, int x)
{
  while (parent[static_cast<std::size_t>(x)] != x) {
    auto & p = parent[static_cast<std::size_t>(x)];
    p = parent[static_cast<std::size_t>(p)];
    x = p;
  }
  return x;
}

/// Number classes by first occurrence; returns the class of each element.
std::vector<int> number_classes(std::vector<int> & parent, int & count)
{
  const int n = static_cast<int>(parent.size());
  std::vector<int> label(parent.size(), -1);
  std::vector<int> cls(parent.size());
  count = 0;
  for (int i = 0; i < n; ++i) {
    int r = find_root(parent, i);
    if (label[static_cast<std::size_t>(r)] < 0) {
      label[static_cast<std::size_t>(r)] = count++;
    }
    cls[static_cast<std::size_t>(i)] = label[static_cast<std::size_t>(r)];
  }
  return cls;
}

void close_transitively(Preorder & p)
{
  const int n = p.size;
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      if (!p.leq[at(n, i, k)]) {continue;}
      for (int j = 0; j < n; ++j) {
        if (p.leq[at(n, k, j)]) {p.leq[at(n, i, j)] = 1;}
      }
    }
  }
}

Preorder relabel(const Preorder & p, const std::vector<int> & perm)
{
  Preorder q{p.size, std::vector<std::uint8_t>(p.leq.size(), 0)};
  for (int a = 0; a < p.size; ++a) {
    for (int b = 0; b < p.size; ++b) {
      q.leq[at(p.size, perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)])] =
        p.leq[at(p.size, a, b)];
    }
  }
  return q;
}

}  // namespace

void to_json(Json & j, const Preorder & p)
{
  Json pairs = Json::array();
  for (int a = 0; a < p.size; ++a) {
    for (int b = 0; b < p.size; ++b) {
      if (a != b && p.le(a, b)) {pairs.push_back({a, b});}
    }
  }
  j = Json{{"size", p.size}, {"leq", pairs}};
}

Preorder discrete_preorder(int n)
{
  return generated_preorder(n, {});
}

Preorder chain_preorder(int n)
{
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i + 1 < n; ++i) {
    pairs.emplace_back(i, i + 1);
  }
  return generated_preorder(n, pairs);
}

Preorder generated_preorder(int n, const std::vector<std::pair<int, int>> & pairs)
{
  Preorder p{n, std::vector<std::uint8_t>(static_cast<std::size_t>(n * n), 0)};
  for (int i = 0; i < n; ++i) {
    p.leq[at(n, i, i)] = 1;
  }
  for (auto [a, b] : pairs) {
    if (a < 0 || b < 0 || a >= n || b >= n) {
      throw BoundaryError("order pair (" + std::to_string(a) + ", " + std::to_string(b) +
              ") out of range for " + std::to_string(n) + " elements");
    }
    p.leq[at(n, a, b)] = 1;
  }
  close_transitively(p);
  return p;
}

void validate_preorder(const Preorder & p, bool antisymmetric)
{
  const int n = p.size;
  if (p.leq.size() != static_cast<std::size_t>(n * n)) {
    throw BoundaryError("order matrix has the wrong size");
  }
  for (int a = 0; a < n; ++a) {
    if (!p.le(a, a)) {
      throw BoundaryError("reflexivity fails at " + std::to_string(a));
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (p.le(a, b) && p.le(b, c) && !p.le(a, c)) {
          throw BoundaryError("transitivity fails at " + std::to_string(a) + " <= " +
                  std::to_string(b) + " <= " + std::to_string(c));
        }
      }
      if (antisymmetric && a != b && p.le(a, b) && p.le(b, a)) {
        throw BoundaryError("antisymmetry fails at " + std::to_string(a) + ", " + std::to_string(b));
      }
    }
  }
}

bool is_monotone(const Preorder & x, const Preorder & y, const std::vector<int> & t)
{
  if (t.size() != static_cast<std::size_t>(x.size)) {return false;}
  for (int v : t) {
    if (v < 0 || v >= y.size) {return false;}
  }
  for (int a = 0; a < x.size; ++a) {
    for (int b = 0; b < x.size; ++b) {
      if (x.le(a, b) && !y.le(t[static_cast<std::size_t>(a)], t[static_cast<std::size_t>(b)])) {
        return false;
      }
    }
  }
  return true;
}

std::vector<std::vector<int>> monotone_tables(const Preorder & x, const Preorder & y)
{
  std::vector<std::vector<int>> out;
  std::vector<int> t(static_cast<std::size_t>(x.size), 0);
  auto fits = [&](int k) {
      for (int a = 0; a < k; ++a) {
        int ta = t[static_cast<std::size_t>(a)];
        int tk = t[static_cast<std::size_t>(k)];
        if (x.le(a, k) && !y.le(ta, tk)) {return false;}
        if (x.le(k, a) && !y.le(tk, ta)) {return false;}
      }
      return true;
    };
  auto rec = [&](auto && self, int k) -> void {
      if (k == x.size) {
        out.push_back(t);
        return;
      }
      for (int v = 0; v < y.size; ++v) {
        t[static_cast<std::size_t>(k)] = v;
        if (fits(k)) {self(self, k + 1);}
      }
    };
  rec(rec, 0);
  return out;
}

std::vector<Preorder> preorders_up_to_iso(int n, bool antisymmetric)
{
  if (n < 0 || n > 4) {
    throw BoundaryError("preorder catalogs are limited to at most 4 points");
  }
  std::vector<std::pair<int, int>> slots;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a != b) {slots.emplace_back(a, b);}
    }
  }
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::set<std::vector<std::uint8_t>> seen;
  for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
    Preorder p{n, std::vector<std::uint8_t>(static_cast<std::size_t>(n * n), 0)};
    for (int i = 0; i < n; ++i) {
      p.leq[at(n, i, i)] = 1;
    }
    for (std::size_t s = 0; s < slots.size(); ++s) {
      if (mask & (1u << s)) {p.leq[at(n, slots[s].first, slots[s].second)] = 1;}
    }
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) {
      for (int b = 0; b < n && ok; ++b) {
        if (antisymmetric && a != b && p.le(a, b) && p.le(b, a)) {ok = false;}
        for (int c = 0; c < n && ok; ++c) {
          if (p.le(a, b) && p.le(b, c) && !p.le(a, c)) {ok = false;}
        }
      }
    }
    if (!ok) {continue;}
    std::iota(perm.begin(), perm.end(), 0);
    auto best = p.leq;
    do {
      auto q = relabel(p, perm);
      if (q.leq < best) {best = q.leq;}
    } while (std::next_permutation(perm.begin(), perm.end()));
    seen.insert(best);
  }
  std::vector<Preorder> out;
  for (const auto & leq : seen) {
    out.push_back({n, leq});
  }
  return out;
}

GluedPreorder pushout_preorder(
  const Preorder & x, const Preorder & y, const std::vector<int> & f, const std::vector<int> & g,
  bool collapse)
{
  if (f.size() != g.size()) {
    throw BoundaryError("pushout: the two maps have different sources");
  }
  const int n = x.size + y.size;
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  for (std::size_t a = 0; a < f.size(); ++a) {
    int r0 = find_root(parent, f[a]);
    int r1 = find_root(parent, x.size + g[a]);
    if (r0 != r1) {parent[static_cast<std::size_t>(std::max(r0, r1))] = std::min(r0, r1);}
  }
  int count = 0;
  auto cls = number_classes(parent, count);
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < x.size; ++a) {
    for (int b = 0; b < x.size; ++b) {
      if (x.le(a, b)) {pairs.emplace_back(cls[static_cast<std::size_t>(a)], cls[static_cast<std::size_t>(b)]);}
    }
  }
  for (int a = 0; a < y.size; ++a) {
    for (int b = 0; b < y.size; ++b) {
      if (y.le(a, b)) {
        pairs.emplace_back(cls[static_cast<std::size_t>(x.size + a)],
          cls[static_cast<std::size_t>(x.size + b)]);
      }
    }
  }
  auto apex = generated_preorder(count, pairs);
  if (collapse) {
    std::vector<int> p2(static_cast<std::size_t>(count));
    std::iota(p2.begin(), p2.end(), 0);
    for (int a = 0; a < count; ++a) {
      for (int b = a + 1; b < count; ++b) {
        if (apex.le(a, b) && apex.le(b, a)) {
          int ra = find_root(p2, a);
          int rb = find_root(p2, b);
          if (ra != rb) {p2[static_cast<std::size_t>(std::max(ra, rb))] = std::min(ra, rb);}
        }
      }
    }
    int count2 = 0;
    auto cls2 = number_classes(p2, count2);
    std::vector<std::pair<int, int>> pairs2;
    for (int a = 0; a < count; ++a) {
      for (int b = 0; b < count; ++b) {
        if (apex.le(a, b)) {pairs2.emplace_back(cls2[static_cast<std::size_t>(a)], cls2[static_cast<std::size_t>(b)]);}
      }
    }
    apex = generated_preorder(count2, pairs2);
    for (auto & c : cls) {
      c = cls2[static_cast<std::size_t>(c)];
    }
  }
  GluedPreorder out{apex, {}, {}};
  for (int a = 0; a < x.size; ++a) {
    out.in0.push_back(cls[static_cast<std::size_t>(a)]);
  }
  for (int a = 0; a < y.size; ++a) {
    out.in1.push_back(cls[static_cast<std::size_t>(x.size + a)]);
  }
  return out;
}

PairedPreorder pullback_preorder(
  const Preorder & x, const Preorder & y, const std::vector<int> & f, const std::vector<int> & g)
{
  PairedPreorder out;
  for (int b = 0; b < x.size; ++b) {
    for (int c = 0; c < y.size; ++c) {
      if (f[static_cast<std::size_t>(b)] == g[static_cast<std::size_t>(c)]) {
        out.out0.push_back(b);
        out.out1.push_back(c);
      }
    }
  }
  const int n = static_cast<int>(out.out0.size());
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      auto ui = static_cast<std::size_t>(i);
      auto uj = static_cast<std::size_t>(j);
      if (x.le(out.out0[ui], out.out0[uj]) && y.le(out.out1[ui], out.out1[uj])) {
        pairs.emplace_back(i, j);
      }
    }
  }
  out.apex = generated_preorder(n, pairs);
  return out;
}

SectionPreorder sections_preorder(const Preorder & z, const Preorder & b, const std::vector<int> & p)
{
  SectionPreorder out;
  for (auto & s : monotone_tables(b, z)) {
    bool section = true;
    for (int i = 0; i < b.size; ++i) {
      if (p[static_cast<std::size_t>(s[static_cast<std::size_t>(i)])] != i) {section = false;}
    }
    if (section) {out.sections.push_back(std::move(s));}
  }
  const int n = static_cast<int>(out.sections.size());
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      bool below = true;
      for (int k = 0; k < b.size; ++k) {
        auto uk = static_cast<std::size_t>(k);
        if (!z.le(out.sections[static_cast<std::size_t>(i)][uk], out.sections[static_cast<std::size_t>(j)][uk])) {
          below = false;
        }
      }
      if (below) {pairs.emplace_back(i, j);}
    }
  }
  out.apex = generated_preorder(n, pairs);
  return out;
}

Preorder collage_preorder(
  const Preorder & x, const Preorder & y, const std::vector<std::pair<int, int>> & across)
{
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < x.size; ++a) {
    for (int b = 0; b < x.size; ++b) {
      if (x.le(a, b)) {pairs.emplace_back(a, b);}
    }
  }
  for (int a = 0; a < y.size; ++a) {
    for (int b = 0; b < y.size; ++b) {
      if (y.le(a, b)) {pairs.emplace_back(x.size + a, x.size + b);}
    }
  }
  for (auto [a, b] : across) {
    pairs.emplace_back(a, x.size + b);
  }
  return generated_preorder(x.size + y.size, pairs);
}

}  // namespace dblcat
