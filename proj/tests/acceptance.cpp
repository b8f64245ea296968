// Acceptance run: one PASS/FAIL line per criterion. Exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "cayley/classify.hpp"
#include "cayley/constructors.hpp"
#include "cayley/error.hpp"
#include "cayley/group_spec.hpp"
#include "cayley/presentation.hpp"
#include "cayley/rigidity.hpp"
#include "cayley/suites.hpp"
#include "oracles.hpp"
#include "properties.hpp"

using namespace cayley;
using Clock = std::chrono::steady_clock;

namespace {

// Wall-clock limits per criterion, in seconds.
constexpr double kThm2Seconds = 120.0;
constexpr double kQuantSeconds = 300.0;
constexpr double kIndexSeconds = 30.0;
constexpr std::size_t kRandomPairs = 200;
constexpr std::uint64_t kRandomSeed = 20240601;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::ostringstream note;
  void fail(const std::string& what) {
    if (pass) note << what;
    else if (note.str().size() < 400) note << "; " << what;
    pass = false;
  }
};

std::vector<Permutation> sorted(std::vector<Permutation> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<oracle::Images> images_of(const Stabilizer& s) {
  std::vector<oracle::Images> out;
  for (const auto& p : s.elements) out.push_back(p.images());
  std::sort(out.begin(), out.end());
  return out;
}

void criterion1(Outcome& o) {
  const auto t0 = Clock::now();
  std::size_t groups = 0;
  for (const auto& text : small_suite()) {
    const GroupSpec spec = parse_group_spec(text);
    const FiniteGroup& g = *spec.group;
    const Classification c = classify(g);
    const Stabilizer xi = xi_of_group(spec.group);
    ++groups;
    if (xi.order() != c.predicted_xi_order)
      o.fail(text + ": |xi_G| = " + std::to_string(xi.order()) + ", predicted " + std::to_string(c.predicted_xi_order));
    std::vector<Permutation> expected;
    const Permutation id = Permutation::identity(g.order());
    switch (c.group_case) {
      case GroupCase::AbelianOrderGe3: expected = {id, eta_map(g)}; break;
      case GroupCase::OtherGeneralizedDicyclic: expected = {id, psi_map(g, *c.witness)}; break;
      case GroupCase::Q8TimesBoolean:
        for (int a : {1, -1})
          for (int b : {1, -1})
            for (int d : {1, -1}) expected.push_back(lifted_phi_eps(g, *c.factors, {a, b, d}));
        break;
      default: expected = {id};
    }
    if (xi.elements != sorted(expected)) o.fail(text + ": xi_G differs from the named maps");
  }
  const double s = seconds_since(t0);
  if (s > kThm2Seconds) o.fail("took " + std::to_string(s) + " s");
  o.note << (o.pass ? "" : " | ") << groups << " groups, " << s << " s";
}

void criterion2(Outcome& o) {
  std::size_t sets = 0;
  for (const auto& text : small_suite_upto(8)) {
    const GroupSpec spec = parse_group_spec(text);
    const FiniteGroup& g = *spec.group;
    for (const auto& s : oracle::symmetric_generating_sets(g)) {
      ++sets;
      const CayleyGraph graph = build_graph(GeneratingSet(spec.group, s));
      if (images_of(xi_stabilizer(graph)) != oracle::xi(g, s)) o.fail(text + ": xi differs from brute force");
      if (full_aut(graph).order != BigOrder(oracle::aut_order(g, s))) o.fail(text + ": |Aut| differs from brute force");
    }
  }
  o.note << (o.pass ? "" : " | ") << sets << " generating sets";
}

void criterion3(Outcome& o) {
  GroupPtr q = share(quaternion());
  std::vector<Permutation> phis;
  for (int a : {1, -1})
    for (int b : {1, -1})
      for (int c : {1, -1}) phis.push_back(phi_eps(*q, {a, b, c}));
  phis = sorted(phis);
  const auto sets = oracle::symmetric_generating_sets(*q);
  for (const auto& s : sets) {
    const CayleyGraph graph = build_graph(GeneratingSet(q, s));
    const Stabilizer xi = xi_stabilizer(graph);
    if (xi.elements != phis) o.fail(GeneratingSet(q, s).to_string() + ": xi_S is not {phi_eps}");
    if (colour_group(graph, xi).order != 64) o.fail(GeneratingSet(q, s).to_string() + ": |Xi_S| != 64");
  }
  o.note << (o.pass ? "" : " | ") << sets.size() << " generating sets of Q8";
}

void criterion4(Outcome& o) {
  const auto t0 = Clock::now();
  for (const auto& inst : quant_suite()) {
    const GroupSpec spec = parse_group_spec(inst.group);
    const GeneratingSet s = make_genset(spec.group, parse_elements(*spec.group, inst.gens), true);
    const QuantitativeReport r = verify_quantitative(s);
    if (!r.pass)
      o.fail(inst.label + ": k = " + std::to_string(r.radius) + ", |xi_ball| = " + std::to_string(r.xi_ball_order) +
             ", |xi_G| = " + std::to_string(r.xi_group_order));
  }
  const double s = seconds_since(t0);
  if (s > kQuantSeconds) o.fail("took " + std::to_string(s) + " s");
  o.note << (o.pass ? "" : " | ") << quant_suite().size() << " instances, " << s << " s";
}

void criterion5(Outcome& o) {
  std::vector<CheckReport> reports;
  for (auto [m, n] : {std::pair<std::size_t, std::size_t>{3, 3}, {3, 4}, {4, 5}})
    reports.push_back(optimality_example_product(m, n));
  for (std::size_t n : {1, 2}) reports.push_back(optimality_example_q8(n));
  for (std::size_t n = 2; n <= 5; ++n) reports.push_back(optimality_example_h(n));
  for (std::size_t n : {1, 2}) reports.push_back(optimality_example_k(n));
  std::size_t checks = 0;
  for (const auto& r : reports)
    for (const auto& c : r.checks) {
      ++checks;
      if (!c.pass) o.fail(r.name + ": " + c.label + " (" + c.detail + ")");
    }
  o.note << (o.pass ? "" : " | ") << reports.size() << " examples, " << checks << " checks";
}

void criterion6(Outcome& o) {
  for (std::size_t n = 2; n <= 6; ++n) {
    const HGroup h = h_group(n);
    if (h.group->order() != (std::size_t{1} << (n + 1)))
      o.fail("|H_" + std::to_string(n) + "| = " + std::to_string(h.group->order()));
  }
  if (!oracle::isomorphism_by_permutations(*h_group(2).group, quaternion())) o.fail("H_2 not isomorphic to Q8");
  o.note << (o.pass ? "" : " | ") << "n = 2..6";
}

void criterion7(Outcome& o) {
  if (!check_boolean_factor_lemma(share(quaternion()), cyclic(2))) o.fail("Boolean factor (Q8, Z/2)");
  if (!check_boolean_factor_lemma(share(cyclic(5)), cyclic(2))) o.fail("Boolean factor (Z/5, Z/2)");
  if (!check_boolean_factor_lemma(h_group(3).group, cyclic(2))) o.fail("Boolean factor (H_3, Z/2)");

  std::size_t dicyclic = 0;
  for (const auto& text : small_suite()) {
    const GroupSpec spec = parse_group_spec(text);
    const Classification c = classify(*spec.group);
    if (!c.witness) continue;
    ++dicyclic;
    bool found = true;
    try {
      (void)find_a0(*spec.group, *c.witness);
    } catch (const Error&) {
      found = false;
    }
    if (c.group_case == GroupCase::OtherGeneralizedDicyclic && !found) o.fail(text + ": find_a0 failed");
    if (c.group_case == GroupCase::Q8TimesBoolean && found) o.fail(text + ": find_a0 succeeded on Q8 x Boolean");
  }

  {
    const GroupWithGenset q = example_q8_boolean(1);
    const FiniteGroup& g = *q.group;
    const Element s = g.parse_element("(i,1)"), t = g.parse_element("(j,1)");
    if (!check_propagation(build_graph(ball(q.genset, 3)), q.genset, {s, t, g(s, t)})) o.fail("propagation on Q8 x Z/2");
  }
  {
    GroupPtr z6 = share(cyclic(6));
    const Element one[] = {1};
    const GeneratingSet s = make_genset(z6, one, true);
    if (!check_propagation(build_graph(ball(s, 2)), s, {1})) o.fail("propagation on Z/6");
  }
  {
    const HGroup h = h_group(4);
    if (check_propagation(build_graph(ball(h.genset, 2)), h.genset, {})) o.fail("propagation on H_4 with S0 = {} should fail");
  }
  o.note << (o.pass ? "" : " | ") << dicyclic << " dicyclic groups, 3 propagation instances";
}

void criterion8(Outcome& o) {
  struct Case {
    const char* spec;
    long expected;  // -1: pin to the brute-force oracle
  };
  IndexSearchOptions opts;
  opts.mode = SearchMode::Exhaustive;
  for (const Case& c : {Case{"cyclic:5", 2}, Case{"boolean:2", 2}, Case{"cyclic:2", 1}, Case{"cyclic:6", -1}}) {
    const GroupSpec spec = parse_group_spec(c.spec);
    const BigOrder expected = c.expected >= 0 ? BigOrder(c.expected) : BigOrder(oracle::cayley_index(*spec.group));
    const auto t0 = Clock::now();
    const SearchResult r = cayley_index_search(spec.group, opts);
    const double s = seconds_since(t0);
    if (!r.exhaustive) o.fail(std::string(c.spec) + ": not exhaustive");
    if (r.best_index != expected)
      o.fail(std::string(c.spec) + ": index " + r.best_index.str() + ", expected " + expected.str());
    if (s > kIndexSeconds) o.fail(std::string(c.spec) + ": took " + std::to_string(s) + " s");
    o.note << (o.pass ? "" : " | ") << c.spec << "=" << r.best_index << " ";
  }
}

void criterion9(Outcome& o) {
  props::Violations v;
  for (const auto& p : props::random_pairs(kRandomPairs, kRandomSeed)) props::check_pair(p, v);
  for (const auto& m : v.messages) o.fail(m);
  o.note << (o.pass ? "" : " | ") << kRandomPairs << " pairs, " << v.messages.size() << " violations";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"1 xi_G prediction suite", criterion1},
      {"2 brute-force oracle equivalence", criterion2},
      {"3 Q8 stabilizer universality", criterion3},
      {"4 quantitative radius suite", criterion4},
      {"5 optimality regressions", criterion5},
      {"6 coset enumeration of H_n", criterion6},
      {"7 lemma suite", criterion7},
      {"8 Cayley index desk results", criterion8},
      {"9 structural invariants", criterion9},
  };
  int failures = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    const auto t0 = Clock::now();
    try {
      fn(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << name << "  [" << o.note.str() << "] ("
              << seconds_since(t0) << " s)" << std::endl;
    failures += !o.pass;
  }
  std::cout << (9 - failures) << "/9 criteria passed" << std::endl;
  return failures == 0 ? 0 : 1;
}
