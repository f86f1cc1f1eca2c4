// Copyright 2026 The dblcat Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef DBLCAT__INSTANCE_FILE_HPP_
#define DBLCAT__INSTANCE_FILE_HPP_

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace dblcat
{

enum class InstanceKind
{
  finset_span,
  finset_cospan,
  finpos,
  fintop,
  fincat,
  ring_fixture,
};

std::string to_string(InstanceKind k);
std::optional<InstanceKind> parse_kind(const std::string & s);

/// 1-based line and column.
struct Position
{
  int line = 0;
  int column = 0;
};

/// A syntax or semantic error at a position, with the tokens that would
/// have been accepted there.
class ParseError : public std::runtime_error
{
public:
  ParseError(Position where, const std::string & message, std::vector<std::string> expected = {});

  Position where;
  std::vector<std::string> expected;

  /// "line:column: message (expected one of: ...)".
  std::string diagnostic() const;
};

struct ObjectDecl
{
  std::string name;
  int size = 0;
  /// finpos: pairs a <= b, reflexive pairs implied.
  std::vector<std::pair<int, int>> order;
  /// fintop: open sets; the empty set and the whole space are implied.
  std::vector<std::vector<int>> opens;
  /// fincat: (name, source, target) of each non-identity arrow.
  std::vector<std::tuple<std::string, int, int>> arrows;
  /// fincat: g . f = h by arrow name; identities are id0, id1, ...
  std::vector<std::tuple<std::string, std::string, std::string>> table;

  bool operator==(const ObjectDecl &) const = default;
};

struct HMorDecl
{
  std::string name;
  std::string src;
  std::string tgt;
  /// Image of each element, or of each object for fincat.
  std::vector<int> table;
  /// fincat: image of each non-identity arrow.
  std::vector<std::pair<std::string, std::string>> arrows;

  bool operator==(const HMorDecl &) const = default;
};

struct VMorDecl
{
  std::string name;
  std::string src;
  std::string tgt;
  /// Apex object of a span or cospan.
  std::string via;
  /// Span and cospan legs.
  std::vector<int> left;
  std::vector<int> right;
  /// finpos: related pairs.
  std::vector<std::pair<int, int>> ideal;
  /// fintop: each open of the source with its value.
  std::vector<std::pair<std::vector<int>, std::vector<int>>> opens;
  /// fincat: (name, a, b) for each element of m(a, b).
  std::vector<std::tuple<std::string, int, int>> elements;
  /// fincat: (arrow, element, result) for e . u and v . e.
  std::vector<std::tuple<std::string, std::string, std::string>> left_actions;
  std::vector<std::tuple<std::string, std::string, std::string>> right_actions;

  bool operator==(const VMorDecl &) const = default;
};

/**
 * A parsed instance description. Declared objects form the catalog; when
 * none are declared the instance uses the standard catalog up to `bound`.
 */
struct InstanceFile
{
  InstanceKind kind = InstanceKind::finpos;
  std::optional<int> bound;
  std::optional<int> budget;
  std::optional<int> fibers;
  std::vector<std::string> suites;
  std::vector<ObjectDecl> objects;
  std::vector<HMorDecl> hmors;
  std::vector<VMorDecl> vmors;
  /// Where each stanza starts, keyed "object NAME", "hmor NAME", "vmor NAME".
  std::map<std::string, Position> positions;

  /// Content equality; positions are ignored.
  bool operator==(const InstanceFile & other) const;

  Position position_of(const std::string & key) const;
};

/// Parses the line-oriented format; throws ParseError.
InstanceFile parse_instance(const std::string & text);

/// Text that parses back to an equal instance.
std::string serialize(const InstanceFile & f);

}  // namespace dblcat

#endif  // DBLCAT__INSTANCE_FILE_HPP_
