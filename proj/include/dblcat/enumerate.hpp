// Copyright 2026 The dblcat Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef DBLCAT__ENUMERATE_HPP_
#define DBLCAT__ENUMERATE_HPP_

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dblcat/core.hpp"
#include "dblcat/report.hpp"

namespace dblcat
{

/// Enumeration limits for law checks.
struct CheckBounds
{
  /// Largest carrier of an object that may appear in a tuple.
  std::size_t object_bound = std::numeric_limits<std::size_t>::max();
  /// Per-law tuple budget; 0 means unlimited. Hitting it sets `truncated`.
  std::size_t max_tuples = 0;
};

/// Counts tuples of one law against the budget.
class TupleBudget
{
public:
  TupleBudget(Report & r, std::string law, std::size_t cap)
  : r_(r), law_(std::move(law)), cap_(cap) {}

  TupleBudget(const TupleBudget &) = delete;
  TupleBudget & operator=(const TupleBudget &) = delete;

  ~TupleBudget()
  {
    r_.fact(law_ + ".tuples", n_);
    if (skipped_ > 0) {
      r_.fact(law_ + ".over_bound", skipped_);
    }
  }

  /// False once the budget is spent; the first refusal marks truncation.
  bool take()
  {
    if (cap_ != 0 && n_ >= cap_) {
      if (!spent_) {
        spent_ = true;
        r_.truncate();
        r_.fact(law_ + ".budget_exhausted", true);
      }
      return false;
    }
    ++n_;
    return true;
  }

  /// A tuple left out because one of its composites exceeds the bound.
  void skip()
  {
    if (skipped_ == 0) {
      r_.truncate();
    }
    ++skipped_;
  }

  bool spent() const {return spent_;}
  std::size_t taken() const {return n_;}

private:
  Report & r_;
  std::string law_;
  std::size_t cap_;
  std::size_t n_ = 0;
  std::size_t skipped_ = 0;
  bool spent_ = false;
};

/**
 * Indexed view of a finite double category restricted to objects within a
 * carrier bound: vertical morphisms by index, composable successors, and
 * cached cells out of each vertical morphism.
 */
template <DoubleCategory D>
class Enumeration
{
public:
  using Object = typename D::Object;
  using VMor = typename D::VMor;
  using Cell = typename D::Cell;

  /// A cell together with the index of its right edge.
  struct OutCell
  {
    Cell cell;
    std::size_t right;
  };

  Enumeration(const D & d, std::size_t object_bound)
  : d_(d)
  {
    for (const auto & x : d.objects()) {
      if (d.base().carrier_size(x) <= object_bound) {
        objs_.push_back(x);
      }
    }
    by_src_.resize(objs_.size());
    for (std::size_t a = 0; a < objs_.size(); ++a) {
      for (std::size_t b = 0; b < objs_.size(); ++b) {
        for (auto & m : d.vmors(objs_[a], objs_[b])) {
          by_src_[a].push_back(vms_.size());
          src_.push_back(a);
          tgt_.push_back(b);
          vms_.push_back(std::move(m));
        }
      }
    }
    cells_.resize(vms_.size());
  }

  const D & dc() const {return d_;}
  const std::vector<Object> & objects() const {return objs_;}
  const std::vector<VMor> & vmors() const {return vms_;}
  const VMor & vmor(std::size_t i) const {return vms_[i];}
  std::size_t size() const {return vms_.size();}

  /// Indices of vertical morphisms starting where vms[i] ends.
  const std::vector<std::size_t> & after(std::size_t i) const {return by_src_[tgt_[i]];}
  const std::vector<std::size_t> & starting_at(std::size_t obj) const {return by_src_[obj];}

  /// Cells whose left edge is vms[i]; computed once.
  const std::vector<OutCell> & cells_from(std::size_t i)
  {
    if (!cells_[i]) {
      std::vector<OutCell> out;
      for (std::size_t j = 0; j < vms_.size(); ++j) {
        for (auto & c : cells_between(d_, vms_[i], vms_[j])) {
          out.push_back({std::move(c), j});
        }
      }
      cells_[i] = std::move(out);
    }
    return *cells_[i];
  }

  std::optional<std::size_t> object_index(const Object & x) const
  {
    for (std::size_t a = 0; a < objs_.size(); ++a) {
      if (objs_[a] == x) {return a;}
    }
    return std::nullopt;
  }

private:
  const D & d_;
  std::vector<Object> objs_;
  std::vector<VMor> vms_;
  std::vector<std::size_t> src_;
  std::vector<std::size_t> tgt_;
  std::vector<std::vector<std::size_t>> by_src_;
  std::vector<std::optional<std::vector<OutCell>>> cells_;
};

}  // namespace dblcat

#endif  // DBLCAT__ENUMERATE_HPP_
