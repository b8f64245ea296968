#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cayley/aut_search.hpp"
#include "cayley/classify.hpp"
#include "cayley/genset.hpp"

namespace cayley {

struct IndexReport {
  std::uint64_t group_digest = 0;
  std::string genset;
  std::size_t genset_size = 0;
  BigOrder full_aut_order = 0;
  BigOrder colour_aut_order = 0;
  BigOrder cayley_index = 0;  // full / |G|
  std::size_t colour_index = 0;  // colour / |G| = |xi_S|
};

IndexReport index_of(const GeneratingSet& genset, const SearchLimits& limits = {});

enum class SearchMode { Auto, Exhaustive, Sampled };

struct IndexSearchOptions {
  SearchMode mode = SearchMode::Auto;
  std::size_t budget = 1'000'000;  // generating sets whose graph is evaluated
  std::uint64_t seed = 1;
  SearchLimits limits;
};

struct SearchResult {
  BigOrder best_index = 0;
  std::optional<GeneratingSet> witness;
  bool exhaustive = false;
  std::size_t sets_examined = 0;
  std::optional<std::uint64_t> seed;  // sampled mode only
};

// Exhaustive searches are limited to groups of this order.
inline constexpr std::size_t kExhaustiveIndexOrderLimit = 16;

/// Minimum of [Aut(Cay(G,S)) : G] over symmetric generating sets S.
///
/// Exhaustive mode walks subsets of inverse-pair classes by ascending bitmask
/// and skips non-generating subsets before building a graph; it stops early
/// only at index 1. Sampled mode draws seeded random symmetric subsets biased
/// toward few classes. Running out of budget yields exhaustive = false.
SearchResult cayley_index_search(const GroupPtr& group, const IndexSearchOptions& options = {});

// Radius the quantitative bound uses for each case: 1, 2, 3, 3, 3.
std::size_t quantitative_radius(GroupCase c);

struct QuantitativeReport {
  GroupCase group_case = GroupCase::Neither;
  std::size_t radius = 0;
  std::size_t xi_ball_order = 0;
  std::size_t xi_group_order = 0;
  bool pass = false;
};

// xi over ball(S, k(case)) equals xi_G, element by element.
QuantitativeReport verify_quantitative(const GeneratingSet& genset);

struct Check {
  std::string label;
  bool pass = false;
  std::string detail;
};

struct CheckReport {
  std::string name;
  std::vector<Check> checks;

  bool pass() const;
  void add(std::string label, bool pass, std::string detail = {});
};

/// Z/m x Z/n with S = {+-e1, +-e2}: |xi_S| >= 4 while |xi_{S^<=2}| = 2.
CheckReport optimality_example_product(std::size_t m, std::size_t n);

/// Q8 x (Z/2)^n with S_n: the fibrewise map (x, e, z) -> (phi_e(x), e, z)
/// lies in xi_{S^<=2} but not in xi_G.
CheckReport optimality_example_q8(std::size_t n);

/// H_n with S_n: eta lies in xi_{S^<=2}; xi_{S^<=3} is trivial for n >= 4.
/// H_3 is isomorphic to Q8 x Z/2, so for n = 3 the check is xi_{S^<=3} = xi_G.
CheckReport optimality_example_h(std::size_t n);

/// K_n = H_3 x (Z/2)^n with T_n: eta lies in xi_{T_n} and xi_{T_n^<=2};
/// xi_{T_n^<=3} = xi_G.
CheckReport optimality_example_k(std::size_t n);

// Builders shared with the CLI and tests.
struct GroupWithGenset {
  GroupPtr group;
  GeneratingSet genset;
};
GroupWithGenset example_q8_boolean(std::size_t n);  // (Q8 x (Z/2)^n, S_n)
GroupWithGenset example_k_group(std::size_t n);     // (K_n, T_n)

}  // namespace cayley
