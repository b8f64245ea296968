#pragma once

#include <span>
#include <vector>

#include "cayley/group.hpp"

namespace cayley {

// Z/nZ, elements named "0".."n-1".
FiniteGroup cyclic(std::size_t n);

// Componentwise product; element (g, h) has index g * |H| + h.
FiniteGroup direct_product(const FiniteGroup& left, const FiniteGroup& right);

// Iterated direct product of cyclic groups; the empty list gives the trivial group.
FiniteGroup abelian(std::span<const std::size_t> factors);
FiniteGroup abelian(std::initializer_list<std::size_t> factors);

// (Z/2)^rank
FiniteGroup boolean_group(std::size_t rank);

// Elements in index order 1, -1, i, -i, j, -j, k, -k.
FiniteGroup quaternion();

struct DicyclicGroup {
  FiniteGroup group;
  DicyclicWitness witness;
};

/// Generalized dicyclic group Dic(A, y): pairs a*x^e with x^2 = y and x a x^-1 = a^-1.
///
/// A must be abelian and y an element of order exactly 2. An A of exponent <= 2
/// is rejected with DegenerateInput, since the result would be abelian.
/// Element a has index a, element a*x has index |A| + a.
DicyclicGroup generalized_dicyclic(const FiniteGroup& abelian_part, Element y);

// Groups given by permutations of {0..degree-1}; composition (pq)(i) = p(q(i)).
FiniteGroup permutation_group(std::size_t degree, std::span<const std::vector<std::size_t>> generators);
FiniteGroup symmetric(std::size_t degree);
FiniteGroup alternating(std::size_t degree);
// Symmetries of the regular n-gon, order 2n.
FiniteGroup dihedral(std::size_t n);

// Same group with elements renumbered: new index of old element g is relabel[g].
FiniteGroup relabelled(const FiniteGroup& group, std::span<const Element> relabel);

}  // namespace cayley
