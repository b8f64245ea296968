#pragma once

#include <span>
#include <string>
#include <vector>

#include "cayley/group.hpp"

namespace cayley {

/// A symmetric, identity-free subset of a group that generates it.
class GeneratingSet {
 public:
  // Validating constructor; see make_genset.
  GeneratingSet(GroupPtr group, std::vector<Element> elements);

  const FiniteGroup& group() const noexcept { return *group_; }
  const GroupPtr& group_ptr() const noexcept { return group_; }
  const std::vector<Element>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool contains(Element g) const;
  bool subset_of(const GeneratingSet& other) const;

  // Colour classes {s, s^-1}, keyed and ordered by min(s, s^-1).
  const std::vector<Element>& colour_keys() const noexcept { return colour_keys_; }
  std::size_t colour_count() const noexcept { return colour_keys_.size(); }

  std::string to_string() const;  // "{name, name, ...}"

  friend bool operator==(const GeneratingSet& a, const GeneratingSet& b) {
    return a.group_->same_table(*b.group_) && a.elements_ == b.elements_;
  }

 private:
  GroupPtr group_;
  std::vector<Element> elements_;
  std::vector<Element> colour_keys_;
};

/// Builds a generating set, optionally adding inverses.
///
/// The identity is rejected (MalformedInput); with symmetrize the identity is
/// dropped instead. A set that fails to generate throws NotGenerating naming
/// the order of the subgroup it does generate.
GeneratingSet make_genset(GroupPtr group, std::span<const Element> elements, bool symmetrize);

// Parses comma-separated element names (commas inside parentheses are kept).
std::vector<Element> parse_elements(const FiniteGroup& group, std::string_view list);

// S^{<=k}: products of at most k elements of S, minus the identity.
GeneratingSet ball(const GeneratingSet& genset, std::size_t k);

// Smallest k with ball(S, k) = G \ {1}; 0 for the trivial group.
std::size_t saturation_radius(const GeneratingSet& genset);

// G \ {1}; DegenerateInput on the trivial group.
GeneratingSet full_genset(GroupPtr group);

/// Cayley graph with an edge {g, gs} for every s in S.
class CayleyGraph {
 public:
  explicit CayleyGraph(GeneratingSet genset);

  const FiniteGroup& group() const noexcept { return genset_.group(); }
  const GeneratingSet& genset() const noexcept { return genset_; }
  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  const std::vector<Element>& neighbours(Element g) const { return adjacency_[g]; }
  bool adjacent(Element g, Element h) const;

  // Colour key min(s, s^-1) of the edge {g, h}; MalformedInput if not an edge.
  Element colour_of_edge(Element g, Element h) const;

  // Digest of (group table, generating set).
  std::uint64_t digest() const noexcept { return digest_; }

  std::string to_dot() const;
  std::string to_csv() const;

 private:
  GeneratingSet genset_;
  std::vector<std::vector<Element>> adjacency_;
  std::size_t edge_count_ = 0;
  std::uint64_t digest_ = 0;
};

CayleyGraph build_graph(const GeneratingSet& genset);

}  // namespace cayley
