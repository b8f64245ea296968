#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cayley {

// Elements are dense indices 0..order-1 into the owning group's table.
using Element = std::uint32_t;

/// A finite group given by its complete multiplication table.
///
/// Construction validates the group axioms: the table must be a Latin square
/// with a two-sided identity and inverses, and associativity is checked on
/// every triple for order <= 512 (on 10*order seeded random triples above).
/// Instances are immutable and are usually shared through GroupPtr.
class FiniteGroup {
 public:
  static constexpr std::size_t kExhaustiveAssociativityLimit = 512;

  FiniteGroup(std::vector<Element> table, std::vector<std::string> names);

  std::size_t order() const noexcept { return order_; }
  Element identity() const noexcept { return identity_; }

  // Unchecked product; use mul() on untrusted indices.
  Element operator()(Element g, Element h) const noexcept { return table_[g * order_ + h]; }

  Element mul(Element g, Element h) const;
  Element inverse(Element g) const;
  Element power(Element g, long long exponent) const;
  std::size_t element_order(Element g) const;

  // g h g^-1
  Element conjugate(Element g, Element h) const { return (*this)((*this)(g, h), inverse(g)); }
  bool commute(Element g, Element h) const { return (*this)(g, h) == (*this)(h, g); }
  bool is_abelian() const;

  const std::string& name(Element g) const;
  std::optional<Element> find(std::string_view name) const;
  // Resolves a name, falling back to a decimal index.
  Element parse_element(std::string_view token) const;

  std::span<const Element> row(Element g) const { return {table_.data() + g * order_, order_}; }
  const std::vector<Element>& table() const noexcept { return table_; }
  const std::vector<std::string>& names() const noexcept { return names_; }

  // Content digest of the multiplication table (names excluded).
  std::uint64_t digest() const noexcept { return digest_; }

  bool same_table(const FiniteGroup& other) const { return table_ == other.table_; }

  void check_element(Element g) const;

 private:
  std::size_t order_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::vector<std::string> names_;
  Element identity_ = 0;
  std::uint64_t digest_ = 0;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

inline GroupPtr share(FiniteGroup group) { return std::make_shared<const FiniteGroup>(std::move(group)); }

/// The index-2 abelian subgroup A and the element x of a generalized dicyclic group.
struct DicyclicWitness {
  std::vector<Element> subgroup;  // sorted
  Element x = 0;

  friend bool operator==(const DicyclicWitness&, const DicyclicWitness&) = default;
};

// Throws MalformedInput listing the first violated witness invariant.
void validate_witness(const FiniteGroup& group, const DicyclicWitness& witness);

std::vector<Element> subgroup_generated(const FiniteGroup& group, std::span<const Element> gens);

// Greedy generating set, preferring elements of large order.
std::vector<Element> small_generating_set(const FiniteGroup& group);

// Elements g with g^2 = 1, including the identity.
std::vector<Element> involutions_and_identity(const FiniteGroup& group);

// Isomorphism search by backtracking over images of a small generating set.
// Limited to order <= 12 (larger inputs throw ResourceLimit).
std::optional<std::vector<Element>> find_isomorphism(const FiniteGroup& from, const FiniteGroup& to);

}  // namespace cayley
