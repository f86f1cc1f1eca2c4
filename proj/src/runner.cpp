// Copyright 2026 The dblcat Authors
// SPDX-License-Identifier: Apache-2.0

#include "dblcat/runner.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iomanip>
#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "dblcat/adjunction.hpp"
#include "dblcat/coherence.hpp"
#include "dblcat/compcon.hpp"
#include "dblcat/cotab.hpp"
#include "dblcat/fincat.hpp"
#include "dblcat/finset.hpp"
#include "dblcat/fintop.hpp"
#include "dblcat/poset.hpp"
#include "dblcat/ring.hpp"
#include "dblcat/spancospan.hpp"

namespace dblcat
{

const std::vector<std::string> & suite_names()
{
  static const std::vector<std::string> names{
    "coherence", "companions", "cotabulators", "tabulators", "glueing", "adjunction", "theorem"};
  return names;
}

namespace
{

template <class Fn>
auto located(const InstanceFile & f, const std::string & key, Fn && fn)
{
  try {
    return fn();
  } catch (const ParseError &) {
    throw;
  } catch (const std::exception & e) {
    throw ParseError(f.position_of(key), key + ": " + e.what());
  }
}

template <class D>
struct Built
{
  D d;
  std::vector<std::pair<std::string, typename D::Object>> objects;
  std::vector<std::pair<std::string, typename D::HMor>> hmors;
  std::vector<std::pair<std::string, typename D::VMor>> vmors;
};

template <class Object>
const Object & lookup(
  const std::vector<std::pair<std::string, Object>> & objects, const std::string & name)
{
  for (const auto & [n, o] : objects) {
    if (n == name) {return o;}
  }
  throw std::invalid_argument("unknown object '" + name + "'");
}

void check_points(const std::vector<int> & pts, int size)
{
  for (int p : pts) {
    if (p >= size) {
      throw BoundaryError("element " + std::to_string(p) + " is out of range");
    }
  }
}

// ---------------------------------------------------------------------------
// Builders.

template <class D>
Built<D> build_finset(const InstanceFile & f, int bound)
{
  std::vector<std::pair<std::string, FinSet>> objects;
  std::vector<FinSet> catalog;
  for (const auto & o : f.objects) {
    objects.push_back({o.name, FinSet{o.size}});
    catalog.push_back(FinSet{o.size});
  }
  FinSetCategory base = catalog.empty() ? FinSetCategory(bound) : FinSetCategory(catalog);
  std::size_t apex_bound = static_cast<std::size_t>(bound);
  for (const auto & o : f.objects) {
    apex_bound = std::max(apex_bound, static_cast<std::size_t>(o.size));
  }
  Built<D> b{D(base, apex_bound), objects, {}, {}};
  auto map = [&](const std::string & key, FinSet x, FinSet y, const std::vector<int> & table) {
      return located(f, key, [&] {
          FinSetMap m{x, y, table};
          validate(m);
          return m;
        });
    };
  for (const auto & h : f.hmors) {
    const auto key = "hmor " + h.name;
    b.hmors.push_back({h.name,
        map(key, lookup(objects, h.src), lookup(objects, h.tgt), h.table)});
  }
  for (const auto & v : f.vmors) {
    const auto key = "vmor " + v.name;
    const auto a = lookup(objects, v.src);
    const auto c = lookup(objects, v.tgt);
    const auto p = lookup(objects, v.via);
    typename D::VMor m;
    if constexpr (std::is_same_v<D, SpanDouble<FinSetCategory>>) {
      m = {map(key, p, a, v.left), map(key, p, c, v.right)};
    } else {
      m = {map(key, a, p, v.left), map(key, c, p, v.right)};
    }
    b.vmors.push_back({v.name, m});
  }
  return b;
}

Built<PosDouble> build_finpos(const InstanceFile & f, int bound)
{
  std::vector<std::pair<std::string, FinPoset>> objects;
  std::vector<FinPoset> catalog;
  for (const auto & o : f.objects) {
    auto p = located(f, "object " + o.name, [&] {
        Preorder q{o.size, std::vector<std::uint8_t>(static_cast<std::size_t>(o.size * o.size), 0)};
        for (int a = 0; a < o.size; ++a) {q.leq[a * o.size + a] = 1;}
        for (const auto & [a, c] : o.order) {
          check_points({a, c}, o.size);
          q.leq[a * o.size + c] = 1;
        }
        validate_preorder(q, true);
        return q;
      });
    objects.push_back({o.name, p});
    catalog.push_back(p);
  }
  PosDouble d(catalog.empty() ? FinPosCategory(bound) : FinPosCategory(catalog));
  Built<PosDouble> b{d, objects, {}, {}};
  for (const auto & h : f.hmors) {
    b.hmors.push_back({h.name, located(f, "hmor " + h.name, [&] {
        MonotoneMap m{lookup(objects, h.src), lookup(objects, h.tgt), h.table};
        validate(m);
        return m;
      })});
  }
  for (const auto & v : f.vmors) {
    b.vmors.push_back({v.name, located(f, "vmor " + v.name, [&] {
        const auto & x0 = lookup(objects, v.src);
        const auto & x1 = lookup(objects, v.tgt);
        OrderIdeal m{x0, x1, std::vector<std::uint8_t>(static_cast<std::size_t>(x0.size * x1.size), 0)};
        for (const auto & [a, c] : v.ideal) {
          check_points({a}, x0.size);
          check_points({c}, x1.size);
          m.rel[a * x1.size + c] = 1;
        }
        validate(m);
        return m;
      })});
  }
  return b;
}

std::uint32_t mask_of(const std::vector<int> & pts, int size)
{
  check_points(pts, size);
  std::uint32_t u = 0;
  for (int p : pts) {u |= 1u << p;}
  return u;
}

Built<TopDouble> build_fintop(const InstanceFile & f, int bound)
{
  std::vector<std::pair<std::string, FinSpace>> objects;
  std::vector<FinSpace> catalog;
  for (const auto & o : f.objects) {
    auto x = located(f, "object " + o.name, [&] {
        std::vector<std::uint32_t> opens{0u, o.size == 0 ? 0u : (1u << o.size) - 1u};
        for (const auto & u : o.opens) {opens.push_back(mask_of(u, o.size));}
        return make_space(o.size, opens);
      });
    objects.push_back({o.name, x});
    catalog.push_back(x);
  }
  TopDouble d(catalog.empty() ? FinTopCategory(bound) : FinTopCategory(catalog));
  Built<TopDouble> b{d, objects, {}, {}};
  for (const auto & h : f.hmors) {
    b.hmors.push_back({h.name, located(f, "hmor " + h.name, [&] {
        ContinuousMap m{lookup(objects, h.src), lookup(objects, h.tgt), h.table};
        validate(m);
        return m;
      })});
  }
  for (const auto & v : f.vmors) {
    b.vmors.push_back({v.name, located(f, "vmor " + v.name, [&] {
        const auto & x0 = lookup(objects, v.src);
        const auto & x1 = lookup(objects, v.tgt);
        std::vector<std::optional<std::uint32_t>> image(x0.opens.size());
        for (const auto & [u, w] : v.opens) {
          image[x0.index_of(mask_of(u, x0.size))] = mask_of(w, x1.size);
        }
        OpenMap m{x0, x1, {}};
        for (std::size_t i = 0; i < image.size(); ++i) {
          if (!image[i]) {
            throw BoundaryError("no value given for the open " + std::to_string(x0.opens[i]));
          }
          m.image.push_back(*image[i]);
        }
        validate(m);
        return m;
      })});
  }
  return b;
}

int arrow_index(const ObjectDecl & o, const std::string & name)
{
  if (name.starts_with("id")) {
    int k = -1;
    try {
      k = std::stoi(name.substr(2));
    } catch (const std::exception &) {
      k = -1;
    }
    if (k >= 0 && k < o.size && name == "id" + std::to_string(k)) {return k;}
  }
  for (std::size_t i = 0; i < o.arrows.size(); ++i) {
    if (std::get<0>(o.arrows[i]) == name) {return o.size + static_cast<int>(i);}
  }
  throw BoundaryError("unknown arrow '" + name + "' in " + o.name);
}

const ObjectDecl & object_decl(const InstanceFile & f, const std::string & name)
{
  for (const auto & o : f.objects) {
    if (o.name == name) {return o;}
  }
  throw std::invalid_argument("unknown object '" + name + "'");
}

Built<CatDouble> build_fincat(const InstanceFile & f, int bound)
{
  std::vector<std::pair<std::string, FinCategory>> objects;
  std::vector<FinCategory> catalog;
  for (const auto & o : f.objects) {
    auto c = located(f, "object " + o.name, [&] {
        std::vector<std::pair<int, int>> arrows;
        for (const auto & [name, s, t] : o.arrows) {
          check_points({s, t}, o.size);
          arrows.push_back({s, t});
        }
        std::vector<std::vector<int>> composites;
        for (const auto & [g, h, k] : o.table) {
          composites.push_back({arrow_index(o, g), arrow_index(o, h), arrow_index(o, k)});
        }
        return make_category(o.size, arrows, composites);
      });
    objects.push_back({o.name, c});
    catalog.push_back(c);
  }
  if (catalog.empty()) {
    for (const auto & c : standard_categories()) {
      if (c.objects <= bound) {catalog.push_back(c);}
    }
  }
  CatDouble d(FinCatCategory(catalog), f.fibers.value_or(1));
  Built<CatDouble> b{d, objects, {}, {}};
  for (const auto & h : f.hmors) {
    b.hmors.push_back({h.name, located(f, "hmor " + h.name, [&] {
        const auto & xd = object_decl(f, h.src);
        const auto & yd = object_decl(f, h.tgt);
        FinFunctor fn{lookup(objects, h.src), lookup(objects, h.tgt), h.table, {}};
        if (static_cast<int>(h.table.size()) != xd.size) {
          throw BoundaryError("table needs one image per object");
        }
        check_points(h.table, yd.size);
        fn.on_morphisms.assign(static_cast<std::size_t>(fn.src.morphisms()), -1);
        for (int a = 0; a < xd.size; ++a) {fn.on_morphisms[a] = fn.tgt.ids[h.table[a]];}
        for (const auto & [u, v] : h.arrows) {
          fn.on_morphisms[arrow_index(xd, u)] = arrow_index(yd, v);
        }
        for (int u = 0; u < fn.src.morphisms(); ++u) {
          if (fn.on_morphisms[u] < 0) {
            throw BoundaryError("no image given for arrow " + std::get<0>(xd.arrows[u - xd.size]));
          }
        }
        validate(fn);
        return fn;
      })});
  }
  for (const auto & v : f.vmors) {
    b.vmors.push_back({v.name, located(f, "vmor " + v.name, [&] {
        const auto & xd = object_decl(f, v.src);
        const auto & yd = object_decl(f, v.tgt);
        std::map<std::string, int> element;
        std::vector<int> at0, at1;
        for (const auto & [name, a, c] : v.elements) {
          check_points({a}, xd.size);
          check_points({c}, yd.size);
          if (element.contains(name)) {throw BoundaryError("element '" + name + "' declared twice");}
          element[name] = static_cast<int>(at0.size());
          at0.push_back(a);
          at1.push_back(c);
        }
        auto elem = [&](const std::string & name) {
            auto it = element.find(name);
            if (it == element.end()) {throw BoundaryError("unknown element '" + name + "'");}
            return it->second;
          };
        std::map<std::pair<int, int>, int> left, right;
        for (const auto & [u, e, r] : v.left_actions) {left[{arrow_index(xd, u), elem(e)}] = elem(r);}
        for (const auto & [u, e, r] : v.right_actions) {right[{arrow_index(yd, u), elem(e)}] = elem(r);}
        auto act = [](const std::map<std::pair<int, int>, int> & table, const FinCategory & c,
            int u, int e, const char * side) {
            if (c.ids[c.src[u]] == u) {return e;}
            auto it = table.find({u, e});
            if (it == table.end()) {
              throw BoundaryError(std::string(side) + " action of arrow " + std::to_string(u) +
                      " on element " + std::to_string(e) + " is not declared");
            }
            return it->second;
          };
        const auto & x0 = lookup(objects, v.src);
        const auto & x1 = lookup(objects, v.tgt);
        auto m = make_profunctor(x0, x1, at0, at1,
          [&](int u, int e) {return act(left, x0, u, e, "left");},
          [&](int u, int e) {return act(right, x1, u, e, "right");});
        validate(m);
        return m;
      })});
  }
  return b;
}

// ---------------------------------------------------------------------------
// Suites.

constexpr std::size_t kTextFailures = 3;

Report unavailable(const std::string & suite, const std::string & why)
{
  Report r(suite);
  r.fact("unavailable", why);
  return r;
}

template <class D>
std::optional<std::string> name_of_iso(const Built<D> & b, const typename D::Object & x)
{
  for (const auto & [name, o] : b.objects) {
    if (find_iso(b.d.base(), o, x)) {return name;}
  }
  return std::nullopt;
}

template <class D>
Report run_one(const Built<D> & b, const std::string & suite, const CheckBounds & bounds)
{
  const auto & d = b.d;
  using Base = typename D::Base;
  if (suite == "coherence") {
    return verify_coherence(d, bounds);
  }
  if (suite == "companions") {
    if constexpr (HasCompanions<D>) {
      Report r("companions");
      r.absorb(verify_partners(d, bounds));
      r.absorb(verify_flips(d, bounds));
      for (const auto & [name, f] : b.hmors) {
        Report one(name);
        one.absorb(verify_companion(d, d.companion(f)));
        one.absorb(verify_conjoint(d, d.conjoint(f)));
        r.absorb(one);
      }
      return r;
    } else {
      return unavailable(suite, "no formula-built companions for this kind");
    }
  }
  if (suite == "cotabulators") {
    if constexpr (HasCotabulators<D>) {
      Report r("cotabulators");
      r.absorb(verify_cotabulators(d, bounds));
      r.absorb(check_gamma_delta_adjunction(d, bounds));
      bool all_strong = true;
      for (const auto & [name, m] : b.vmors) {
        auto c = d.cotabulator(m);
        Report one(name);
        one.absorb(verify_1cotabulator(d, c, bounds));
        auto s = check_strong(d, c, bounds);
        r.fact("strong." + name, s.ok());
        all_strong = all_strong && s.ok();
        r.absorb(one);
      }
      if (!b.vmors.empty()) {r.fact("strong", all_strong);}
      return r;
    } else {
      return unavailable(suite, "no cotabulators for this kind");
    }
  }
  if (suite == "tabulators") {
    if constexpr (HasTabulators<D>) {
      Report r("tabulators");
      r.absorb(verify_tabulators(d, bounds));
      r.absorb(check_delta_sigma_adjunction(d, bounds));
      for (const auto & [name, m] : b.vmors) {
        Report one(name);
        one.absorb(verify_1tabulator(d, d.tabulator(m), bounds));
        r.absorb(one);
      }
      r.fact("tabulators", "checked");
      return r;
    } else {
      return unavailable(suite, "the base has no pullbacks, so there are no tabulators");
    }
  }
  if (suite == "glueing") {
    if constexpr (HasCotabulators<D> && HasTerminal<Base>) {
      auto r = verify_2glueing(d, bounds);
      r.suite = "glueing";
      auto two = two_object(d).gamma;
      auto match = name_of_iso(b, two);
      r.fact("two_object.declared_as", match ? Json(*match) : Json(nullptr));
      return r;
    } else {
      return unavailable(suite, "no cotabulators or no terminal object");
    }
  }
  if (suite == "adjunction") {
    if constexpr (HasCompanions<D> && HasCotabulators<D> && HasPushouts<Base>) {
      Report r("adjunction");
      auto a = build_adjunction(d);
      r.absorb(verify_adjunction(d, a, bounds));
      r.absorb(verify_round_trip(d, a, bounds));
      return r;
    } else {
      return unavailable(suite, "the horizontal category has no computed pushouts");
    }
  }
  if constexpr (HasCompanions<D> && HasCotabulators<D> && HasPushouts<Base>) {
    auto r = theorem_suite(d, bounds);
    r.suite = "theorem";
    return r;
  } else {
    return unavailable(suite, "the horizontal category has no computed pushouts");
  }
}

template <class Fn>
Report timed(Fn && fn)
{
  const auto start = std::chrono::steady_clock::now();
  Report r = fn();
  r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

template <class D>
std::vector<Report> run_all(
  const Built<D> & b, const std::vector<std::string> & suites, const CheckBounds & bounds)
{
  std::vector<Report> out;
  for (const auto & s : suites) {
    out.push_back(timed([&] {return run_one(b, s, bounds);}));
  }
  return out;
}

std::vector<Report> run_ring(const std::vector<std::string> & suites)
{
  std::vector<Report> out;
  for (const auto & s : suites) {
    if (s == "cotabulators" || s == "tabulators" || s == "theorem") {
      out.push_back(timed([&] {
          auto r = ring_fixture_checks();
          r.suite = s;
          return r;
        }));
    } else {
      out.push_back(unavailable(s, "the ring fixture is not a finite double category"));
    }
  }
  return out;
}

struct Settings
{
  std::vector<std::string> suites;
  CheckBounds bounds;
  int bound = kDefaultBound;
};

Settings settings(const InstanceFile & f, const RunOptions & o)
{
  Settings s;
  s.suites = o.suites.empty() ? f.suites : o.suites;
  if (s.suites.empty()) {
    throw std::invalid_argument("no suite selected");
  }
  for (const auto & name : s.suites) {
    if (std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end()) {
      throw std::invalid_argument("unknown suite '" + name + "'");
    }
  }
  s.bound = o.bound.value_or(f.bound.value_or(kDefaultBound));
  s.bounds.object_bound = static_cast<std::size_t>(s.bound);
  s.bounds.max_tuples = static_cast<std::size_t>(o.budget.value_or(f.budget.value_or(kDefaultBudget)));
  return s;
}

template <class Fn>
auto dispatch(const InstanceFile & f, int bound, Fn && fn)
{
  switch (f.kind) {
    case InstanceKind::finset_span:
      return fn(build_finset<SpanDouble<FinSetCategory>>(f, bound));
    case InstanceKind::finset_cospan:
      return fn(build_finset<CospanDouble<FinSetCategory>>(f, bound));
    case InstanceKind::finpos:
      return fn(build_finpos(f, bound));
    case InstanceKind::fintop:
      return fn(build_fintop(f, bound));
    case InstanceKind::fincat:
      return fn(build_fincat(f, bound));
    case InstanceKind::ring_fixture:
      break;
  }
  throw std::logic_error("dispatch: the ring fixture has no carriers");
}

}  // namespace

void validate_instance(const InstanceFile & f)
{
  if (f.kind == InstanceKind::ring_fixture) {return;}
  dispatch(f, f.bound.value_or(kDefaultBound), [](const auto &) {return 0;});
}

Json run_instance(const InstanceFile & f, const RunOptions & options)
{
  auto s = settings(f, options);
  std::vector<Report> reports;
  std::size_t catalog = 0;
  if (f.kind == InstanceKind::ring_fixture) {
    reports = run_ring(s.suites);
  } else {
    dispatch(f, s.bound, [&](const auto & b) {
        catalog = b.d.base().objects().size();
        reports = run_all(b, s.suites, s.bounds);
        return 0;
      });
  }
  Json suites = Json::array();
  bool ok = true;
  for (const auto & r : reports) {
    suites.push_back(to_json(r));
    ok = ok && r.ok();
  }
  return Json{
    {"schema", kReportSchema},
    {"kind", to_string(f.kind)},
    {"catalog_size", catalog},
    {"bound", s.bound},
    {"budget", s.bounds.max_tuples},
    {"ok", ok},
    {"suites", suites}};
}

std::string text_summary(const Json & report)
{
  std::ostringstream out;
  out << "kind " << report.at("kind").get<std::string>() << ", bound " << report.at("bound")
      << ", budget " << report.at("budget") << "\n";
  out << std::left << std::setw(14) << "suite" << std::right << std::setw(10) << "attempted"
      << std::setw(10) << "passed" << std::setw(10) << "failed" << "  notes\n";
  for (const auto & s : report.at("suites")) {
    std::string notes;
    if (s.at("truncated").get<bool>()) {notes += "truncated ";}
    if (s.at("facts").contains("unavailable")) {
      notes += "unavailable: " + s.at("facts").at("unavailable").get<std::string>() + " ";
    }
    if (s.at("facts").contains("two_object.declared_as") &&
      !s.at("facts").at("two_object.declared_as").is_null())
    {
      notes += "2=" + s.at("facts").at("two_object.declared_as").get<std::string>() + " ";
    }
    if (s.at("facts").contains("strong")) {
      notes += std::string("strong=") + (s.at("facts").at("strong").get<bool>() ? "true" : "false");
    }
    out << std::left << std::setw(14) << s.at("suite").get<std::string>() << std::right
        << std::setw(10) << s.at("attempted").get<std::size_t>()
        << std::setw(10) << s.at("passed").get<std::size_t>()
        << std::setw(10) << s.at("failed").get<std::size_t>() << "  " << notes << "\n";
  }
  for (const auto & s : report.at("suites")) {
    std::size_t shown = 0;
    for (const auto & f : s.at("failures")) {
      if (shown++ == kTextFailures) {break;}
      out << "  " << s.at("suite").get<std::string>() << ": " << f.at("check").get<std::string>()
          << " " << f.at("witness").dump() << "\n";
    }
    const auto failed = s.at("failed").get<std::size_t>();
    if (failed > kTextFailures) {
      out << "  " << s.at("suite").get<std::string>() << ": " << failed - kTextFailures
          << " more failures in the JSON report\n";
    }
  }
  out << (report.at("ok").get<bool>() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

}  // namespace dblcat
