// Copyright 2026 The dblcat Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef DBLCAT__CATEGORY_HPP_
#define DBLCAT__CATEGORY_HPP_

#include <concepts>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dblcat
{

/// Raised when an operation receives morphisms whose endpoints do not line up.
class BoundaryError : public std::logic_error
{
public:
  using std::logic_error::logic_error;
};

/// Raised when a construction needs structure an instance does not have
/// (a missing companion, a cotabulator that does not exist, ...).
class MissingStructure : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/**
 * A finite category with an explicit object catalog.
 *
 * `objects()` is the catalog used by exhaustive checks. `hom(x, y)` must list
 * every morphism x -> y exactly once for *any* pair of objects, including ones
 * that are not in the catalog (pushouts, collages, ...). `compose(g, f)` is
 * g after f.
 */
template <class C>
concept Category = requires(
  const C & c, const typename C::Object & x, const typename C::Morphism & f) {
  typename C::Object;
  typename C::Morphism;
  { c.objects() } -> std::convertible_to<std::vector<typename C::Object>>;
  { c.hom(x, x) } -> std::same_as<std::vector<typename C::Morphism>>;
  { c.src(f) } -> std::convertible_to<typename C::Object>;
  { c.tgt(f) } -> std::convertible_to<typename C::Object>;
  { c.compose(f, f) } -> std::same_as<typename C::Morphism>;
  { c.identity(x) } -> std::same_as<typename C::Morphism>;
  requires std::equality_comparable<typename C::Object>;
  requires std::equality_comparable<typename C::Morphism>;
};

/// Pushout of in0 : B -> P <- C : in1 over a span B <- A -> C.
template <class Object, class Morphism>
struct Cocone
{
  Object apex;
  Morphism in0;
  Morphism in1;
  bool operator==(const Cocone &) const = default;
};

/// Pullback B <- P -> C over a cospan B -> A <- C.
template <class Object, class Morphism>
struct Cone
{
  Object apex;
  Morphism out0;
  Morphism out1;
  bool operator==(const Cone &) const = default;
};

template <class C>
using CoconeOf = Cocone<typename C::Object, typename C::Morphism>;
template <class C>
using ConeOf = Cone<typename C::Object, typename C::Morphism>;

template <class C>
concept HasPushouts = Category<C> && requires(
  const C & c, const typename C::Morphism & f, const CoconeOf<C> & p) {
  { c.pushout(f, f) } -> std::same_as<CoconeOf<C>>;
  { c.copair(p, f, f) } -> std::same_as<typename C::Morphism>;
};

template <class C>
concept HasPullbacks = Category<C> && requires(
  const C & c, const typename C::Morphism & f, const ConeOf<C> & p) {
  { c.pullback(f, f) } -> std::same_as<ConeOf<C>>;
  { c.pair(p, f, f) } -> std::same_as<typename C::Morphism>;
};

template <class C>
concept HasTerminal = Category<C> && requires(const C & c) {
  { c.terminal() } -> std::convertible_to<typename C::Object>;
};

template <class C>
concept HasInitial = Category<C> && requires(const C & c) {
  { c.initial() } -> std::convertible_to<typename C::Object>;
};

/**
 * Global sections of p : Z -> B, as an exponential-style object S together
 * with the evaluation maps S -> Z at each global point of B.
 */
template <class C>
concept HasSections = Category<C> && requires(
  const C & c, const typename C::Morphism & p, const typename C::Morphism & pt) {
  { c.sections_object(p) } -> std::convertible_to<typename C::Object>;
  { c.evaluate_sections(p, pt) } -> std::same_as<typename C::Morphism>;
};

template <Category C>
bool is_iso(const C & c, const typename C::Morphism & f)
{
  for (const auto & g : c.hom(c.tgt(f), c.src(f))) {
    if (c.compose(g, f) == c.identity(c.src(f)) &&
      c.compose(f, g) == c.identity(c.tgt(f)))
    {
      return true;
    }
  }
  return false;
}

template <Category C>
std::optional<typename C::Morphism> find_iso(
  const C & c, const typename C::Object & x, const typename C::Object & y)
{
  for (const auto & f : c.hom(x, y)) {
    if (is_iso(c, f)) {
      return f;
    }
  }
  return std::nullopt;
}

/// The unique morphism in `candidates` satisfying `pred`, if exactly one does.
template <class M, class Pred>
std::optional<M> unique_such(const std::vector<M> & candidates, Pred pred, int * count = nullptr)
{
  std::optional<M> found;
  int n = 0;
  for (const auto & m : candidates) {
    if (pred(m)) {
      if (n == 0) {
        found = m;
      }
      ++n;
    }
  }
  if (count) {
    *count = n;
  }
  if (n != 1) {
    return std::nullopt;
  }
  return found;
}

/// Wrapper marking a morphism as living in the opposite category.
template <class M>
struct Opp
{
  M arrow;
  bool operator==(const Opp &) const = default;
};

/**
 * The opposite of a base category. Pushouts here are pullbacks there and
 * vice versa; the initial object becomes terminal.
 */
template <Category C>
class Opposite
{
public:
  using Object = typename C::Object;
  using Morphism = Opp<typename C::Morphism>;
  using Underlying = C;

  explicit Opposite(C base)
  : base_(std::move(base)) {}

  const C & underlying() const {return base_;}

  std::vector<Object> objects() const {return base_.objects();}

  std::vector<Morphism> hom(const Object & x, const Object & y) const
  {
    std::vector<Morphism> out;
    for (auto & f : base_.hom(y, x)) {
      out.push_back(Morphism{std::move(f)});
    }
    return out;
  }

  Object src(const Morphism & f) const {return base_.tgt(f.arrow);}
  Object tgt(const Morphism & f) const {return base_.src(f.arrow);}

  Morphism compose(const Morphism & g, const Morphism & f) const
  {
    return Morphism{base_.compose(f.arrow, g.arrow)};
  }

  Morphism identity(const Object & x) const {return Morphism{base_.identity(x)};}

  Cocone<Object, Morphism> pushout(const Morphism & f, const Morphism & g) const
  requires HasPullbacks<C>
  {
    auto pb = base_.pullback(f.arrow, g.arrow);
    return {pb.apex, Morphism{pb.out0}, Morphism{pb.out1}};
  }

  Morphism copair(
    const Cocone<Object, Morphism> & p, const Morphism & q0, const Morphism & q1) const
  requires HasPullbacks<C>
  {
    ConeOf<C> cone{p.apex, p.in0.arrow, p.in1.arrow};
    return Morphism{base_.pair(cone, q0.arrow, q1.arrow)};
  }

  Cone<Object, Morphism> pullback(const Morphism & f, const Morphism & g) const
  requires HasPushouts<C>
  {
    auto po = base_.pushout(f.arrow, g.arrow);
    return {po.apex, Morphism{po.in0}, Morphism{po.in1}};
  }

  Morphism pair(const Cone<Object, Morphism> & p, const Morphism & q0, const Morphism & q1) const
  requires HasPushouts<C>
  {
    CoconeOf<C> cocone{p.apex, p.out0.arrow, p.out1.arrow};
    return Morphism{base_.copair(cocone, q0.arrow, q1.arrow)};
  }

  Object terminal() const
  requires HasInitial<C>
  {
    return base_.initial();
  }

  Object initial() const
  requires HasTerminal<C>
  {
    return base_.terminal();
  }

  std::size_t carrier_size(const Object & x) const {return base_.carrier_size(x);}

private:
  C base_;
};

}  // namespace dblcat

#endif  // DBLCAT__CATEGORY_HPP_
