// Copyright 2026 The dblcat Authors
// SPDX-License-Identifier: Apache-2.0

#include "dblcat/instance_file.hpp"

#include <charconv>
#include <sstream>

namespace dblcat
{

namespace
{

const std::vector<std::pair<InstanceKind, std::string>> & kind_names()
{
  static const std::vector<std::pair<InstanceKind, std::string>> names{
    {InstanceKind::finset_span, "finset-span"},
    {InstanceKind::finset_cospan, "finset-cospan"},
    {InstanceKind::finpos, "finpos"},
    {InstanceKind::fintop, "fintop"},
    {InstanceKind::fincat, "fincat"},
    {InstanceKind::ring_fixture, "ring-fixture"},
  };
  return names;
}

}  // namespace

std::string to_string(InstanceKind k)
{
  for (const auto & [kind, name] : kind_names()) {
    if (kind == k) {return name;}
  }
  return "unknown";
}

std::optional<InstanceKind> parse_kind(const std::string & s)
{
  for (const auto & [kind, name] : kind_names()) {
    if (name == s) {return kind;}
  }
  return std::nullopt;
}

ParseError::ParseError(Position w, const std::string & message, std::vector<std::string> exp)
: std::runtime_error(message), where(w), expected(std::move(exp)) {}

std::string ParseError::diagnostic() const
{
  std::ostringstream out;
  out << where.line << ":" << where.column << ": " << what();
  if (!expected.empty()) {
    out << " (expected one of:";
    for (const auto & e : expected) {
      out << " " << e;
    }
    out << ")";
  }
  return out.str();
}

bool InstanceFile::operator==(const InstanceFile & o) const
{
  return kind == o.kind && bound == o.bound && budget == o.budget && fibers == o.fibers &&
         suites == o.suites && objects == o.objects && hmors == o.hmors && vmors == o.vmors;
}

Position InstanceFile::position_of(const std::string & key) const
{
  auto it = positions.find(key);
  return it == positions.end() ? Position{} : it->second;
}

namespace
{

struct Token
{
  std::string text;
  Position at;
};

std::vector<Token> tokenize(const std::string & line, int line_no)
{
  std::vector<Token> out;
  std::size_t i = 0;
  const std::size_t n = line.size();
  while (i < n) {
    const char c = line[i];
    if (c == '#') {break;}
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      continue;
    }
    Position at{line_no, static_cast<int>(i) + 1};
    if (c == '{') {
      auto close = line.find('}', i);
      if (close == std::string::npos) {
        throw ParseError(at, "unterminated set", {"}"});
      }
      out.push_back({line.substr(i, close - i + 1), at});
      i = close + 1;
      continue;
    }
    std::size_t j = i;
    while (j < n && line[j] != ' ' && line[j] != '\t' && line[j] != '\r' && line[j] != '#' &&
      line[j] != '{')
    {
      ++j;
    }
    out.push_back({line.substr(i, j - i), at});
    i = j;
  }
  return out;
}

int to_int(const Token & t)
{
  int v = 0;
  auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
  if (ec != std::errc() || p != t.text.data() + t.text.size() || v < 0) {
    throw ParseError(t.at, "expected a nonnegative integer, found '" + t.text + "'", {"<integer>"});
  }
  return v;
}

std::vector<int> to_set(const Token & t)
{
  if (t.text.size() < 2 || t.text.front() != '{' || t.text.back() != '}') {
    throw ParseError(t.at, "expected a set like {0 1}, found '" + t.text + "'", {"{...}"});
  }
  std::vector<int> out;
  auto inner = tokenize(t.text.substr(1, t.text.size() - 2), t.at.line);
  for (auto tok : inner) {
    tok.at.column += t.at.column;
    out.push_back(to_int(tok));
  }
  return out;
}

const std::vector<std::string> kHeaderKeys{"kind:", "bound:", "budget:", "fibers:", "suites:"};
const std::vector<std::string> kStanzas{"object", "hmor", "vmor"};

enum class Stanza { none, object, hmor, vmor };

std::vector<std::string> sub_keywords(InstanceKind kind, Stanza s)
{
  switch (s) {
    case Stanza::object:
      if (kind == InstanceKind::finpos) {return {"order"};}
      if (kind == InstanceKind::fintop) {return {"opens"};}
      if (kind == InstanceKind::fincat) {return {"arrow", "table"};}
      return {};
    case Stanza::hmor:
      if (kind == InstanceKind::fincat) {return {"table", "arrow"};}
      return {"table"};
    case Stanza::vmor:
      if (kind == InstanceKind::finpos) {return {"ideal"};}
      if (kind == InstanceKind::fintop) {return {"opens"};}
      if (kind == InstanceKind::fincat) {return {"element", "table"};}
      return {"table"};
    case Stanza::none:
      return {};
  }
  return {};
}

class Parser
{
public:
  InstanceFile run(const std::string & text)
  {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      auto tokens = tokenize(line, line_no);
      if (tokens.empty()) {continue;}
      line_(tokens, line_no);
    }
    if (!have_kind_) {
      throw ParseError({line_no + 1, 1}, "missing kind declaration", {"kind:"});
    }
    return f_;
  }

private:
  void need(const std::vector<Token> & t, std::size_t count, const std::string & what)
  {
    if (t.size() < count) {
      const auto & last = t.back();
      Position at{last.at.line, last.at.column + static_cast<int>(last.text.size())};
      throw ParseError(at, "incomplete line", {what});
    }
  }

  void exact(const std::vector<Token> & t, std::size_t count)
  {
    if (t.size() > count) {
      throw ParseError(t[count].at, "unexpected '" + t[count].text + "'", {"end of line"});
    }
  }

  std::vector<std::string> expected_here() const
  {
    std::vector<std::string> e = have_kind_ ? std::vector<std::string>{} : std::vector<std::string>{"kind:"};
    if (have_kind_) {
      e = kHeaderKeys;
      e.insert(e.end(), kStanzas.begin(), kStanzas.end());
      for (const auto & k : sub_keywords(f_.kind, stanza_)) {e.push_back(k);}
    }
    return e;
  }

  void header(const std::vector<Token> & t, const std::string & key)
  {
    if (!have_kind_ && key != "kind:") {
      throw ParseError(t[0].at, "the kind must be declared first", {"kind:"});
    }
    need(t, 2, "<value>");
    if (key == "kind:") {
      if (have_kind_) {throw ParseError(t[0].at, "kind declared twice");}
      auto k = parse_kind(t[1].text);
      if (!k) {
        std::vector<std::string> names;
        for (const auto & [_, name] : kind_names()) {names.push_back(name);}
        throw ParseError(t[1].at, "unknown kind '" + t[1].text + "'", names);
      }
      exact(t, 2);
      f_.kind = *k;
      have_kind_ = true;
    } else if (key == "bound:") {
      exact(t, 2);
      f_.bound = to_int(t[1]);
    } else if (key == "budget:") {
      exact(t, 2);
      f_.budget = to_int(t[1]);
    } else if (key == "fibers:") {
      exact(t, 2);
      f_.fibers = to_int(t[1]);
    } else {
      for (std::size_t i = 1; i < t.size(); ++i) {
        std::string s = t[i].text;
        std::size_t start = 0;
        while (start <= s.size()) {
          auto comma = s.find(',', start);
          auto part = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
          if (!part.empty()) {f_.suites.push_back(part);}
          if (comma == std::string::npos) {break;}
          start = comma + 1;
        }
      }
    }
    stanza_ = Stanza::none;
  }

  void declare(const std::string & key, const Token & t)
  {
    if (f_.positions.contains(key)) {
      throw ParseError(t.at, "'" + t.text + "' is declared twice");
    }
    f_.positions[key] = t.at;
  }

  void require_object(const Token & t)
  {
    if (!f_.positions.contains("object " + t.text)) {
      throw ParseError(t.at, "object '" + t.text + "' is used before it is declared");
    }
  }

  void stanza(const std::vector<Token> & t)
  {
    const auto & key = t[0].text;
    if (f_.kind == InstanceKind::ring_fixture) {
      throw ParseError(t[0].at, "the ring fixture takes no declarations", kHeaderKeys);
    }
    if (key == "object") {
      need(t, 3, "<size>");
      exact(t, 3);
      declare("object " + t[1].text, t[1]);
      ObjectDecl o;
      o.name = t[1].text;
      o.size = to_int(t[2]);
      f_.objects.push_back(o);
      stanza_ = Stanza::object;
      return;
    }
    need(t, 5, "->");
    if (t[3].text != "->") {
      throw ParseError(t[3].at, "expected '->', found '" + t[3].text + "'", {"->"});
    }
    require_object(t[2]);
    require_object(t[4]);
    if (key == "hmor") {
      exact(t, 5);
      declare("hmor " + t[1].text, t[1]);
      f_.hmors.push_back({t[1].text, t[2].text, t[4].text, {}, {}});
      stanza_ = Stanza::hmor;
      return;
    }
    const bool legs = f_.kind == InstanceKind::finset_span || f_.kind == InstanceKind::finset_cospan;
    VMorDecl v;
    v.name = t[1].text;
    v.src = t[2].text;
    v.tgt = t[4].text;
    if (legs) {
      need(t, 7, "via");
      if (t[5].text != "via") {
        throw ParseError(t[5].at, "expected 'via', found '" + t[5].text + "'", {"via"});
      }
      require_object(t[6]);
      exact(t, 7);
      v.via = t[6].text;
    } else {
      exact(t, 5);
    }
    declare("vmor " + t[1].text, t[1]);
    f_.vmors.push_back(v);
    stanza_ = Stanza::vmor;
  }

  std::vector<int> ints_from(const std::vector<Token> & t, std::size_t from)
  {
    std::vector<int> out;
    for (std::size_t i = from; i < t.size(); ++i) {
      out.push_back(to_int(t[i]));
    }
    return out;
  }

  void sub(const std::vector<Token> & t)
  {
    const auto & key = t[0].text;
    if (stanza_ == Stanza::object) {
      auto & o = f_.objects.back();
      if (key == "order") {
        need(t, 3, "<element>");
        exact(t, 3);
        o.order.push_back({to_int(t[1]), to_int(t[2])});
      } else if (key == "opens") {
        for (std::size_t i = 1; i < t.size(); ++i) {
          o.opens.push_back(to_set(t[i]));
        }
      } else if (key == "arrow") {
        need(t, 4, "<object>");
        exact(t, 4);
        o.arrows.push_back({t[1].text, to_int(t[2]), to_int(t[3])});
      } else {
        need(t, 4, "<arrow>");
        exact(t, 4);
        o.table.push_back({t[1].text, t[2].text, t[3].text});
      }
    } else if (stanza_ == Stanza::hmor) {
      auto & h = f_.hmors.back();
      if (key == "table") {
        auto more = ints_from(t, 1);
        h.table.insert(h.table.end(), more.begin(), more.end());
      } else {
        need(t, 3, "<arrow>");
        exact(t, 3);
        h.arrows.push_back({t[1].text, t[2].text});
      }
    } else {
      auto & v = f_.vmors.back();
      if (key == "ideal") {
        need(t, 3, "<element>");
        exact(t, 3);
        v.ideal.push_back({to_int(t[1]), to_int(t[2])});
      } else if (key == "opens") {
        need(t, 4, "{...}");
        exact(t, 4);
        if (t[2].text != "->") {
          throw ParseError(t[2].at, "expected '->', found '" + t[2].text + "'", {"->"});
        }
        v.opens.push_back({to_set(t[1]), to_set(t[3])});
      } else if (key == "element") {
        need(t, 4, "<object>");
        exact(t, 4);
        v.elements.push_back({t[1].text, to_int(t[2]), to_int(t[3])});
      } else if (f_.kind == InstanceKind::fincat) {
        need(t, 5, "<element>");
        exact(t, 5);
        if (t[1].text != "left" && t[1].text != "right") {
          throw ParseError(t[1].at, "expected 'left' or 'right'", {"left", "right"});
        }
        auto & acts = t[1].text == "left" ? v.left_actions : v.right_actions;
        acts.push_back({t[2].text, t[3].text, t[4].text});
      } else {
        need(t, 2, "left");
        if (t[1].text != "left" && t[1].text != "right") {
          throw ParseError(t[1].at, "expected 'left' or 'right'", {"left", "right"});
        }
        auto more = ints_from(t, 2);
        auto & leg = t[1].text == "left" ? v.left : v.right;
        leg.insert(leg.end(), more.begin(), more.end());
      }
    }
  }

  void line_(const std::vector<Token> & t, int)
  {
    std::string key = t[0].text;
    // accept "kind:finpos" as well as "kind: finpos"
    auto colon = key.find(':');
    if (colon != std::string::npos && colon + 1 < key.size()) {
      std::vector<Token> split{{key.substr(0, colon + 1), t[0].at},
        {key.substr(colon + 1), {t[0].at.line, t[0].at.column + static_cast<int>(colon) + 1}}};
      split.insert(split.end(), t.begin() + 1, t.end());
      line_(split, 0);
      return;
    }
    for (const auto & h : kHeaderKeys) {
      if (key == h) {
        header(t, key);
        return;
      }
    }
    if (!have_kind_) {
      throw ParseError(t[0].at, "the kind must be declared first", {"kind:"});
    }
    for (const auto & s : kStanzas) {
      if (key == s) {
        stanza(t);
        return;
      }
    }
    for (const auto & s : sub_keywords(f_.kind, stanza_)) {
      if (key == s) {
        sub(t);
        return;
      }
    }
    throw ParseError(t[0].at, "unexpected '" + key + "'", expected_here());
  }

  InstanceFile f_;
  bool have_kind_ = false;
  Stanza stanza_ = Stanza::none;
};

std::string set_text(const std::vector<int> & s)
{
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i > 0) {out += " ";}
    out += std::to_string(s[i]);
  }
  return out + "}";
}

}  // namespace

InstanceFile parse_instance(const std::string & text)
{
  return Parser().run(text);
}

std::string serialize(const InstanceFile & f)
{
  std::ostringstream out;
  out << "kind: " << to_string(f.kind) << "\n";
  if (f.bound) {out << "bound: " << *f.bound << "\n";}
  if (f.budget) {out << "budget: " << *f.budget << "\n";}
  if (f.fibers) {out << "fibers: " << *f.fibers << "\n";}
  if (!f.suites.empty()) {
    out << "suites:";
    for (const auto & s : f.suites) {out << " " << s;}
    out << "\n";
  }
  for (const auto & o : f.objects) {
    out << "object " << o.name << " " << o.size << "\n";
    for (const auto & [a, b] : o.order) {out << "  order " << a << " " << b << "\n";}
    for (const auto & u : o.opens) {out << "  opens " << set_text(u) << "\n";}
    for (const auto & [name, a, b] : o.arrows) {out << "  arrow " << name << " " << a << " " << b << "\n";}
    for (const auto & [g, h, k] : o.table) {out << "  table " << g << " " << h << " " << k << "\n";}
  }
  for (const auto & h : f.hmors) {
    out << "hmor " << h.name << " " << h.src << " -> " << h.tgt << "\n";
    if (!h.table.empty()) {
      out << "  table";
      for (int v : h.table) {out << " " << v;}
      out << "\n";
    }
    for (const auto & [a, b] : h.arrows) {out << "  arrow " << a << " " << b << "\n";}
  }
  for (const auto & v : f.vmors) {
    out << "vmor " << v.name << " " << v.src << " -> " << v.tgt;
    if (!v.via.empty()) {out << " via " << v.via;}
    out << "\n";
    for (const auto * leg : {&v.left, &v.right}) {
      if (leg->empty()) {continue;}
      out << "  table " << (leg == &v.left ? "left" : "right");
      for (int x : *leg) {out << " " << x;}
      out << "\n";
    }
    for (const auto & [a, b] : v.ideal) {out << "  ideal " << a << " " << b << "\n";}
    for (const auto & [u, w] : v.opens) {out << "  opens " << set_text(u) << " -> " << set_text(w) << "\n";}
    for (const auto & [name, a, b] : v.elements) {out << "  element " << name << " " << a << " " << b << "\n";}
    for (const auto & [u, e, r] : v.left_actions) {out << "  table left " << u << " " << e << " " << r << "\n";}
    for (const auto & [u, e, r] : v.right_actions) {out << "  table right " << u << " " << e << " " << r << "\n";}
  }
  return out.str();
}

}  // namespace dblcat
