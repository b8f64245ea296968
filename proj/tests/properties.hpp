#pragma once

// Structural invariants checked on seeded random (group, generating set) pairs.

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "cayley/aut_search.hpp"
#include "cayley/error.hpp"
#include "cayley/group_spec.hpp"
#include "cayley/suites.hpp"

namespace props {

using namespace cayley;

struct Pair {
  std::string group_text;
  GeneratingSet s;
  GeneratingSet t;  // s plus a few extra elements
};

inline std::vector<Element> random_generating(const FiniteGroup& g, std::mt19937_64& rng) {
  std::vector<Element> pool;
  for (Element e = 0; e < g.order(); ++e)
    if (e != g.identity()) pool.push_back(e);
  std::shuffle(pool.begin(), pool.end(), rng);
  std::vector<Element> out;
  for (Element e : pool) {
    out.push_back(e);
    if (subgroup_generated(g, out).size() == g.order()) break;
  }
  return out;
}

inline std::vector<Pair> random_pairs(std::size_t count, std::uint64_t seed, std::size_t max_order = 32) {
  const std::vector<std::string> suite = small_suite_upto(max_order);
  std::vector<GroupPtr> groups;
  for (const auto& text : suite) groups.push_back(parse_group_spec(text).group);
  std::mt19937_64 rng(seed);
  std::vector<Pair> out;
  while (out.size() < count) {
    const std::size_t gi = rng() % groups.size();
    const GroupPtr& g = groups[gi];
    if (g->order() < 2) continue;
    const GeneratingSet s = make_genset(g, random_generating(*g, rng), true);
    std::vector<Element> bigger = s.elements();
    const std::size_t extra = rng() % 3;
    for (std::size_t i = 0; i < extra; ++i) {
      const Element e = static_cast<Element>(rng() % g->order());
      if (e != g->identity()) bigger.push_back(e);
    }
    out.push_back({suite[gi], s, make_genset(g, bigger, true)});
  }
  return out;
}

struct Violations {
  std::vector<std::string> messages;
  void fail(const Pair& p, const std::string& what) {
    messages.push_back(p.group_text + " " + p.s.to_string() + ": " + what);
  }
};

inline bool latin_square(const FiniteGroup& g) {
  const std::size_t n = g.order();
  for (Element a = 0; a < n; ++a) {
    std::vector<bool> row(n), col(n);
    for (Element b = 0; b < n; ++b) {
      row[g(a, b)] = true;
      col[g(b, a)] = true;
    }
    for (std::size_t i = 0; i < n; ++i)
      if (!row[i] || !col[i]) return false;
  }
  return true;
}

// X is a group iff 1 in X, X g is inside X for a generating set of X, and
// those generators generate exactly |X| elements. Linear in |X| per generator,
// where the pairwise closure check is quadratic.
inline bool is_subgroup(const std::vector<Permutation>& sorted_x) {
  if (sorted_x.empty()) return false;
  const std::size_t n = sorted_x.front().size();
  auto in_x = [&](const Permutation& p) { return std::binary_search(sorted_x.begin(), sorted_x.end(), p); };
  if (!in_x(Permutation::identity(n))) return false;
  std::vector<Permutation> gens;
  std::vector<Permutation> span = {Permutation::identity(n)};
  for (const Permutation& x : sorted_x) {
    if (std::binary_search(span.begin(), span.end(), x)) continue;
    gens.push_back(x);
    try {
      span = enumerate_group(gens, n, sorted_x.size());
    } catch (const Error&) {
      return false;
    }
    std::sort(span.begin(), span.end());
  }
  if (span.size() != sorted_x.size()) return false;
  for (const Permutation& g : gens)
    for (const Permutation& x : sorted_x)
      if (!in_x(x * g)) return false;
  return true;
}

inline void check_pair(const Pair& p, Violations& v) {
  const FiniteGroup& g = p.s.group();
  if (!latin_square(g)) v.fail(p, "multiplication table is not a Latin square");

  const CayleyGraph graph = build_graph(p.s);
  const Stabilizer xi = xi_stabilizer(graph);
  if (!is_subgroup(xi.elements)) v.fail(p, "xi_S is not a group");
  for (const Permutation& phi : xi.elements)
    if (phi(g.identity()) != g.identity()) v.fail(p, "xi_S element moves the identity");

  const AutGroup colour = colour_group(graph, xi);
  if (colour.order != BigOrder(g.order()) * xi.order()) v.fail(p, "|Xi_S| != |G| |xi_S|");

  const AutGroup full = full_aut(graph);
  for (Element x = 0; x < g.order(); ++x) {
    const Permutation l = left_translation(g, x);
    if (!is_labelled_automorphism(graph, l)) v.fail(p, "left translation is not labelled");
    if (!is_colour_automorphism(graph, l)) v.fail(p, "labelled not inside colour");
    if (colour.explicit_mode() && !colour.contains(l)) v.fail(p, "labelled not inside Xi_S");
  }
  for (const Permutation& phi : xi.elements) {
    if (!is_graph_automorphism(graph, phi)) v.fail(p, "colour not inside full");
    if (full.explicit_mode() && !full.contains(phi)) v.fail(p, "xi_S not inside Aut");
  }
  if (full.order % colour.order != 0) v.fail(p, "|Xi_S| does not divide |Aut|");

  const Stabilizer xi_t = xi_stabilizer(build_graph(p.t));
  for (const Permutation& phi : xi_t.elements)
    if (!xi.contains(phi)) v.fail(p, "xi_T not inside xi_S for S in T");
}

}  // namespace props
