#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cayley/aut_search.hpp"
#include "cayley/group.hpp"

namespace cayley {

enum class GroupCase {
  Boolean,
  AbelianOrderGe3,
  Q8TimesBoolean,
  OtherGeneralizedDicyclic,
  Neither,
};

const char* to_string(GroupCase c);
std::optional<GroupCase> parse_group_case(std::string_view text);

// Predicted |xi_G|: 1, 2, 8, 2, 1 in case order.
std::size_t predicted_xi_order(GroupCase c);

struct Q8BooleanFactors {
  std::vector<Element> q8;       // sorted, an internal Q8
  std::vector<Element> boolean;  // sorted, central Boolean complement
};

struct Classification {
  GroupCase group_case = GroupCase::Neither;
  std::optional<DicyclicWitness> witness;
  std::optional<Q8BooleanFactors> factors;
  std::size_t predicted_xi_order = 1;
  // Set when only the literal x^4 = 1 reading (allowing x of order 2) would make G dicyclic.
  bool dihedral_reading_only = false;
};

bool is_boolean(const FiniteGroup& group);

// Kernels of the nontrivial homomorphisms G -> Z/2, each sorted, in lexicographic order.
std::vector<std::vector<Element>> index_two_subgroups(const FiniteGroup& group);

enum class WitnessMode {
  Strict,   // x of order exactly 4
  Literal,  // x^4 = 1, so x of order 2 is admitted
};

/// Lexicographically smallest (A, x) making G generalized dicyclic, if any.
std::optional<DicyclicWitness> find_dicyclic_witness(const FiniteGroup& group, WitnessMode mode = WitnessMode::Strict);

/// Internal Q8 and Boolean complement when G = Q8 x B.
///
/// G has this form iff it is generalized dicyclic and a^2 is in {1, x^2} for
/// every a in A.
std::optional<Q8BooleanFactors> decompose_q8_times_boolean(const FiniteGroup& group);

// Smallest a in A with a^2 not in {1, x^2}; PreconditionViolation if none exists.
Element find_a0(const FiniteGroup& group, const DicyclicWitness& witness);

Classification classify(const FiniteGroup& group);

/// The stabilizer xi_G predicted by the classification, as explicit maps:
/// {id}, {id, eta}, the 8 axis inversions of the Q8 factor lifted to G,
/// {id, psi}, {id}.
std::vector<Permutation> predicted_xi(const FiniteGroup& group, const Classification& c);

// Inverts g on the chosen axes (subgroups <s> of order 4) of the Q8 factor, fixing the B part.
Permutation lifted_phi_eps(const FiniteGroup& group, const Q8BooleanFactors& factors, const std::array<int, 3>& eps);

/// xi_{G x B} is exactly {(g, b) -> (phi(g), b) : phi in xi_G}.
///
/// B must be Boolean (MalformedInput otherwise). Both stabilizers are computed
/// by search; the check is equality of the lifted set with xi_{G x B}.
bool check_boolean_factor_lemma(const GroupPtr& group, const FiniteGroup& boolean_part);

}  // namespace cayley
