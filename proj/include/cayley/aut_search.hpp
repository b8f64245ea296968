#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cayley/genset.hpp"
#include "cayley/permutation.hpp"

namespace cayley {

// Automorphism group orders overflow 64 bits quickly (|Aut(K_n)| = n!).
using BigOrder = boost::multiprecision::cpp_int;

struct SearchLimits {
  std::size_t node_budget = 50'000'000;   // xi_stabilizer search nodes
  std::size_t explicit_cap = 10'000;      // store elements explicitly up to this order
  std::size_t full_aut_vertex_cap = 64;   // full_aut refuses larger graphs
};

enum class AutKind { Labelled, Colour, Full };
const char* to_string(AutKind kind);

/// An automorphism group of a Cayley graph.
///
/// `elements` is filled (sorted) when the order is at most the explicit cap;
/// otherwise only generators and the exact order are kept.
struct AutGroup {
  AutKind kind = AutKind::Labelled;
  std::uint64_t base_graph_digest = 0;
  BigOrder order = 1;
  std::vector<Permutation> generators;
  std::optional<std::vector<Permutation>> elements;

  bool explicit_mode() const noexcept { return elements.has_value(); }
  // Membership; PreconditionViolation unless explicit.
  bool contains(const Permutation& p) const;
};

/// Stabilizer of the identity vertex in the colour-preserving group (xi_S).
struct Stabilizer {
  std::uint64_t base_graph_digest = 0;
  std::vector<Permutation> elements;  // sorted lexicographically by image array

  std::size_t order() const noexcept { return elements.size(); }
  bool contains(const Permutation& p) const;
  friend bool operator==(const Stabilizer& a, const Stabilizer& b) { return a.elements == b.elements; }
};

Permutation left_translation(const FiniteGroup& group, Element g);
AutGroup left_translations(const CayleyGraph& graph);

/// All permutations fixing 1 with phi(gs) in {phi(g)s, phi(g)s^-1} for all g, s.
///
/// Depth-first over the breadth-first spanning tree from the identity: each
/// vertex gs has at most two candidate images given phi(g), and every
/// assignment immediately narrows (or forces) its unassigned neighbours.
/// Throws ResourceLimit once more than node_budget assignments are tried.
Stabilizer xi_stabilizer(const CayleyGraph& graph, std::size_t node_budget = SearchLimits{}.node_budget);

// xi_stabilizer on the full generating set G \ {1}.
Stabilizer xi_of_group(const GroupPtr& group, std::size_t node_budget = SearchLimits{}.node_budget);

// Xi_S = G . xi_S
AutGroup colour_group(const CayleyGraph& graph, const Stabilizer& xi, const SearchLimits& limits = {});

/// Full automorphism group of the uncoloured graph.
///
/// Colour refinement plus individualization backtracking builds a
/// stabilizer chain along base points; the order is the product of the basic
/// orbit lengths. Graphs above the vertex cap throw ResourceLimit.
AutGroup full_aut(const CayleyGraph& graph, const SearchLimits& limits = {});

Permutation eta_map(const FiniteGroup& group);
Permutation psi_map(const FiniteGroup& group, const DicyclicWitness& witness);

// Requires the named quaternion() group; signs are +1 or -1 for i, j, k.
Permutation phi_eps(const FiniteGroup& q8, const std::array<int, 3>& eps);

bool is_colour_automorphism(const CayleyGraph& graph, const Permutation& p);
bool is_graph_automorphism(const CayleyGraph& graph, const Permutation& p);
bool is_labelled_automorphism(const CayleyGraph& graph, const Permutation& p);

struct PropagationCheck {
  bool premise = false;     // phi|S0 = id implies phi|(S u S.S0) = id, over xi_T
  bool conclusion = false;  // phi|S0 = id implies phi = id, over xi_T
  bool holds() const noexcept { return premise && conclusion; }
  std::string diagnosis() const;
};

/// Checks the propagation lemma on a concrete instance.
///
/// graph_t is Cay(G, T) with S a subset of T (MalformedInput otherwise).
PropagationCheck check_propagation_detail(const CayleyGraph& graph_t, const GeneratingSet& s,
                                          const std::vector<Element>& s0);
bool check_propagation(const CayleyGraph& graph_t, const GeneratingSet& s, const std::vector<Element>& s0);

}  // namespace cayley
