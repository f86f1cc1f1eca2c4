// Copyright 2026 The dblcat Authors
// SPDX-License-Identifier: Apache-2.0

#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
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
#include "fixtures.hpp"

using namespace dblcat;

namespace
{

using SpanD = SpanDouble<FinSetCategory>;
using CospanD = CospanDouble<FinSetCategory>;

constexpr int kCoherenceSeconds = 60;

struct Outcome
{
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string & what)
  {
    if (!ok) {pass = false;}
    notes.push_back((ok ? "ok: " : "failed: ") + what);
  }

  void require(const Report & r, const std::string & what)
  {
    std::ostringstream s;
    s << what << " [" << r.passed << "/" << r.attempted << (r.truncated ? ", truncated" : "") << "]";
    if (!r.ok()) {
      pass = false;
      s << " failed: ";
      for (const auto & [check, n] : r.failure_counts) {s << check << " x" << n << " ";}
    }
    notes.push_back(s.str());
  }
};

bool all_witnessed(const Report & r)
{
  if (r.failures.empty()) {return false;}
  for (const auto & f : r.failures) {
    if (f.witness.is_null() || f.witness.empty() || f.witness.dump().empty()) {return false;}
  }
  return !to_json(r).at("failures").empty();
}

FinSetMap map(int src, int tgt, std::vector<int> t)
{
  FinSetMap f{FinSet{src}, FinSet{tgt}, std::move(t)};
  validate(f);
  return f;
}

// ---------------------------------------------------------------------------

struct Child
{
  pid_t pid = -1;
  int fd = -1;
};

// Runs an exhaustive coherence check in a child process.
template <class D>
Child start_coherence(const D & d, int object_bound)
{
  int fds[2];
  if (pipe(fds) != 0) {return {};}
  pid_t pid = fork();
  if (pid == 0) {
    close(fds[0]);
    auto r = verify_coherence(d, {static_cast<std::size_t>(object_bound), 0});
    std::ostringstream s;
    s << (r.ok() && !r.truncated ? "ok" : "fail") << " " << r.passed << "/" << r.attempted
      << (r.truncated ? " truncated" : "");
    auto text = s.str();
    [[maybe_unused]] auto n = write(fds[1], text.data(), text.size());
    _exit(0);
  }
  close(fds[1]);
  return {pid, fds[0]};
}

// Waits for the child's result until the deadline, then kills it.
std::optional<std::string> collect(Child c, std::chrono::steady_clock::time_point deadline)
{
  if (c.pid < 0) {return std::nullopt;}
  auto left = std::chrono::duration_cast<std::chrono::milliseconds>(
    deadline - std::chrono::steady_clock::now()).count();
  pollfd p{c.fd, POLLIN, 0};
  std::optional<std::string> out;
  if (poll(&p, 1, static_cast<int>(std::max<long long>(left, 0))) > 0) {
    char buf[256];
    auto n = read(c.fd, buf, sizeof(buf));
    if (n > 0) {out = std::string(buf, static_cast<std::size_t>(n));}
  }
  close(c.fd);
  kill(c.pid, SIGKILL);
  waitpid(c.pid, nullptr, 0);
  return out;
}

Outcome criterion1()
{
  Outcome o;
  SpanD span(FinSetCategory(3), 3);
  CospanD cospan(FinSetCategory(3), 3);
  o.notes.push_back("span vmors in scope: " + std::to_string(Enumeration<SpanD>(span, 3).size()));
  const auto deadline = std::chrono::steady_clock::now() + std::chrono::seconds(kCoherenceSeconds);
  std::vector<std::pair<std::string, Child>> children{
    {"span", start_coherence(span, 3)}, {"cospan", start_coherence(cospan, 3)}};
  for (const auto & [name, child] : children) {
    auto result = collect(child, deadline);
    if (!result) {
      o.require(false, name + " exhaustive run did not finish within " +
        std::to_string(kCoherenceSeconds) + " s");
    } else {
      o.notes.push_back(name + ": " + *result);
      o.require(result->starts_with("ok"), name);
    }
  }
  return o;
}

Outcome criterion2()
{
  Outcome o;
  PosDouble p(FinPosCategory(3));
  o.require(verify_partners(p, {3, 0}), "posets <= 3 partners");
  o.require(verify_flips(p, {2, 0}), "posets <= 2 flips");
  TopDouble t(FinTopCategory(2));
  o.require(verify_partners(t, {2, 0}), "spaces <= 2 partners");
  o.require(verify_flips(t, {2, 0}), "spaces <= 2 flips");
  return o;
}

std::uint32_t preimage(const ContinuousMap & f, std::uint32_t v)
{
  std::uint32_t out = 0;
  for (int i = 0; i < f.src.size; ++i) {
    if (v & (1u << f(i))) {out |= 1u << i;}
  }
  return out;
}

Outcome criterion3()
{
  Outcome o;
  PosDouble p(FinPosCategory(2));
  o.require(verify_cotabulators(p, {2, 0}), "collage");
  o.require(verify_tabulators(p, {2, 0}), "poset tabulator");
  TopDouble t(FinTopCategory(2));
  o.require(verify_cotabulators(t, {2, 0}), "glueing");
  o.require(verify_tabulators(t, {2, 0}), "space tabulator");
  SpanD s(FinSetCategory(2), 2);
  o.require(verify_cotabulators(s, {2, 0}), "span pushout");
  o.require(verify_tabulators(s, {2, 0}), "span apex");
  CospanD c(FinSetCategory(2), 2);
  o.require(verify_cotabulators(c, {2, 0}), "cospan apex");
  o.require(verify_tabulators(c, {2, 0}), "cospan pullback");
  CatDouble k(FinCatCategory({discrete_category(1), arrow_category(), involution_monoid()}), 2);
  o.require(verify_cotabulators(k, {2, 0}), "profunctor collage");
  o.require(verify_tabulators(k, {2, 0}), "category of elements");

  const auto & base = t.base();
  Enumeration<TopDouble> e(t, 2);
  std::size_t pairs = 0;
  std::size_t mismatches = 0;
  for (const auto & m : e.vmors()) {
    auto tab = t.tabulator(m);
    for (const auto & y : base.objects()) {
      for (const auto & f0 : base.hom(y, m.src)) {
        for (const auto & f1 : base.hom(y, m.tgt)) {
          bool criterion = true;
          for (auto u : m.src.opens) {
            criterion = criterion && (preimage(f1, m(u)) & ~preimage(f0, u)) == 0;
          }
          bool factors = false;
          for (const auto & h : base.hom(y, tab.sigma)) {
            factors = factors || (base.compose(tab.tau.frame.top, h) == f0 &&
              base.compose(tab.tau.frame.bottom, h) == f1);
          }
          mismatches += factors == criterion ? 0 : 1;
          ++pairs;
        }
      }
    }
  }
  o.notes.push_back("space tabulator factoring criterion on " + std::to_string(pairs) + " pairs");
  o.require(mismatches == 0 && pairs > 0, "space tabulator factoring criterion");
  return o;
}

Outcome criterion4()
{
  Outcome o;
  // the cardinality loop is exhaustive; the budget only caps functoriality pairs
  const CheckBounds bounds{2, 20000};
  auto pairs = [&](const Report & r, const std::string & what) {
      o.require(r, what);
      o.require(r.facts.at("pairs").get<std::size_t>() > 0, what + " pairs");
      o.require(!r.failure_counts.contains("hom-bijection.cardinality"), what + " cardinality");
    };
  PosDouble p(FinPosCategory(2));
  pairs(check_gamma_delta_adjunction(p, bounds), "posets Gamma -| Delta");
  pairs(check_delta_sigma_adjunction(p, bounds), "posets Delta -| Sigma");
  TopDouble t(FinTopCategory(2));
  pairs(check_gamma_delta_adjunction(t, bounds), "spaces Gamma -| Delta");
  pairs(check_delta_sigma_adjunction(t, bounds), "spaces Delta -| Sigma");
  return o;
}

Outcome criterion5()
{
  Outcome o;
  auto r = ring_fixture_checks();
  o.require(r, "ring fixture");
  o.require(r.facts.at("strong") == false, "cotabulator reported not strong");
  o.require(r.facts.contains("strong.witness"), "tetrahedron witness present");
  o.require(r.facts.at("identity-bimodule.maps-to-Z/2").size() >= 2, "two bimodule maps out of the identity");
  return o;
}

Outcome criterion6()
{
  Outcome o;
  PosDouble p(FinPosCategory(2));
  o.require(verify_2glueing(p, {2, 0}), "posets");
  TopDouble t(FinTopCategory(2));
  o.require(verify_2glueing(t, {2, 0}), "spaces");
  SpanD s(FinSetCategory(2), 2);
  auto rs = verify_2glueing(s, {2, 0});
  o.require(!rs.ok() && all_witnessed(rs), "spans rejected with a witness");
  o.require(rs.facts.at("two_size") == 1, "spans: the object 2 is a point");
  o.notes.push_back("spans: " + std::to_string(rs.failed_total) + " counterexamples, 2 has " +
    rs.facts.at("two_size").dump() + " element");
  o.require(verify_sigma_from_exponential(p, {2, 0}), "posets Sigma from 2");
  o.require(verify_sigma_from_exponential(t, {2, 0}), "spaces Sigma from 2");
  return o;
}

Outcome criterion7()
{
  Outcome o;
  auto rp = theorem_suite(PosDouble(FinPosCategory(2)), {1, 0});
  o.require(rp, "posets <= 1, no tuple budget");
  o.require(rp.facts.at("span_side") == "checked", "posets span side");
  auto rt = theorem_suite(TopDouble(FinTopCategory(2)), {1, 0});
  o.require(rt, "spaces <= 1, no tuple budget");
  o.require(rt.facts.at("span_side") == "checked", "spaces span side");
  auto rc = theorem_suite(CospanD(FinSetCategory(2), 2), {1, 0});
  o.require(rc, "cospans <= 1, no tuple budget");
  o.require(rc.facts.at("span_side") == "checked", "cospans span side");
  const CheckBounds sampled{2, 2000};
  o.require(theorem_suite(PosDouble(FinPosCategory(2)), sampled), "posets <= 2, sampled");
  o.require(theorem_suite(TopDouble(FinTopCategory(2)), sampled), "spaces <= 2, sampled");
  o.require(theorem_suite(CospanD(FinSetCategory(2), 2), sampled), "cospans <= 2, sampled");
  return o;
}

Outcome criterion8()
{
  Outcome o;
  {
    SpanD d(FinSetCategory(4), 4);
    Span<FinSetMap> m{map(2, 1, {0, 0}), map(2, 1, {0, 0})};
    SpanD::Cell twist{globular_frame(d, m, m), map(2, 2, {1, 0})};
    testing::TwistedAssociator<SpanD> bad(d, m, twist, twist);
    auto r = verify_coherence(bad, {1, 20000});
    o.require(!r.ok() && r.failure_counts["pentagon"] > 0 && all_witnessed(r), "wrong associator");
  }
  {
    SpanD s(FinSetCategory(2), 2);
    auto one = FinSet{1};
    auto id1 = identity_map(one);
    Span<FinSetMap> fat{map(2, 1, {0, 0}), map(2, 1, {0, 0})};
    CompanionData<SpanD> bad{id1, fat,
      {{id1, id1, s.vid(one), fat}, map(1, 2, {0})},
      {{id1, id1, fat, s.vid(one)}, map(2, 1, {0, 0})}};
    auto r = verify_companion(s, bad);
    o.require(!r.ok() && all_witnessed(r), "mismatched companion unit and counit");
  }
  {
    CospanD d(FinSetCategory(2), 2);
    auto a = build_adjunction(d);
    Enumeration<CospanD> e(d, 2);
    std::optional<CospanD::VMor> target;
    std::optional<CospanD::Cell> other;
    for (const auto & c : e.vmors()) {
      auto good = a.eps(c);
      for (const auto & cell : d.cells(good.frame)) {
        if (!(cell == good)) {
          target = c;
          other = cell;
          break;
        }
      }
      if (other) {break;}
    }
    auto eps = a.eps;
    a.eps = [eps, target, other](const CospanD::VMor & c) {
        return c == *target ? *other : eps(c);
      };
    auto r = verify_adjunction(d, a, {2, 0});
    o.require(other.has_value() && !r.ok() && all_witnessed(r), "mismatched adjunction counit");
  }
  {
    PosDouble d(FinPosCategory(2));
    auto one = discrete_preorder(1);
    auto chain = chain_preorder(2);
    OrderIdeal empty{one, one, {false}};
    CotabulatorData<PosDouble> bad{empty, chain, {}};
    bad.iota = d.cells({MonotoneMap{one, chain, {0}}, MonotoneMap{one, chain, {1}}, empty,
      d.vid(chain)}).at(0);
    auto r = verify_1cotabulator(d, bad, {2, 0});
    o.require(!r.ok() && all_witnessed(r), "wrong cotabulator apex");
  }
  return o;
}

}  // namespace

int main(int argc, char ** argv)
{
  CLI::App app{"Acceptance criteria"};
  std::vector<int> expected_failures;
  std::vector<int> only;
  app.add_option("--expect-fail", expected_failures,
    "Criteria known to fail; they do not affect the exit status");
  app.add_option("--only", only, "Run only these criteria");
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
    {"span and cospan coherence, carriers <= 3, within 60 s", criterion1},
    {"companions, conjoints and flips on posets and spaces", criterion2},
    {"universal properties of every shipped cotabulator and tabulator", criterion3},
    {"hom-set bijections for Gamma and Sigma", criterion4},
    {"ring counterexample to strongness", criterion5},
    {"2-glueing and Sigma from the exponential", criterion6},
    {"adjunction suite on posets, spaces and cospans", criterion7},
    {"negative controls", criterion8},
  };

  int unexpected = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int n = static_cast<int>(i) + 1;
    if (!only.empty() && std::find(only.begin(), only.end(), n) == only.end()) {continue;}
    const auto t0 = std::chrono::steady_clock::now();
    auto o = criteria[i].second();
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool expected = std::find(expected_failures.begin(), expected_failures.end(), n) !=
      expected_failures.end();
    std::printf("criterion %d: %s  %s (%.1f s)%s\n", n, o.pass ? "PASS" : "FAIL",
      criteria[i].first.c_str(), s, !o.pass && expected ? " [expected failure]" : "");
    for (const auto & note : o.notes) {
      std::printf("    %s\n", note.c_str());
    }
    std::fflush(stdout);
    if (!o.pass && !expected) {++unexpected;}
  }
  return unexpected == 0 ? 0 : 1;
}
