#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cayley/group.hpp"

namespace cayley {

/// A group built from the spec mini-language.
///
///   cyclic:N            Z/N
///   abelian:N,M,...     Z/N x Z/M x ...   (abelian: alone is trivial)
///   boolean:K           (Z/2)^K
///   q8                  quaternion group
///   dic:SPEC@Y          generalized dicyclic over the abelian SPEC, x^2 = element Y
///   product:(A)x(B)...  direct product, left to right
///   hgroup:N            H_N via coset enumeration
///   sym:N alt:N dihedral:N
///   presentation:<...>  any finite presentation
///
/// `canonical` re-parses to the same multiplication table.
struct GroupSpec {
  GroupPtr group;
  std::string canonical;
  std::optional<DicyclicWitness> witness;   // dic: groups
  std::vector<Element> distinguished;      // hgroup: s1..sN
};

inline constexpr std::size_t kDefaultCosetCap = 200'000;

GroupSpec parse_group_spec(std::string_view text, std::size_t coset_cap = kDefaultCosetCap);

// Multi-line dump: canonical spec, order, element names, multiplication table.
std::string describe(const GroupSpec& spec);

}  // namespace cayley
