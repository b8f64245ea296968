#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cayley/genset.hpp"
#include "cayley/group.hpp"

namespace cayley {

// A letter is +(g+1) for generator g and -(g+1) for its inverse.
using Letter = int;
using Word = std::vector<Letter>;

struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  std::string to_string() const;
};

/// Parses `< a, b | a^4, a b a^-1 b, a^2 = b^2 >`.
///
/// Generators are identifiers; a relator is a whitespace-separated product of
/// `gen` or `gen^k` tokens (k may be negative), and `lhs = rhs` is read as the
/// relator lhs rhs^-1. Throws ParseError with the byte offset on bad input.
Presentation parse_presentation(std::string_view text);

/// Coset table over the trivial subgroup.
///
/// Column 2g is the action of generator g and column 2g+1 that of its inverse.
/// Rows are numbered in breadth-first discovery order from coset 0, scanning
/// columns left to right, so the table is independent of enumeration history.
struct CosetTable {
  std::size_t generator_count = 0;
  std::vector<std::vector<std::size_t>> rows;

  std::size_t count() const noexcept { return rows.size(); }
  std::size_t act(std::size_t coset, Letter letter) const;
  std::size_t act(std::size_t coset, const Word& word) const;
};

struct Enumeration {
  FiniteGroup group;
  CosetTable table;
};

/// HLT coset enumeration over the trivial subgroup.
///
/// max_cosets bounds the number of simultaneously live cosets; exceeding it
/// throws ResourceLimit. Group elements are the cosets, named by their
/// breadth-first words in the generators ("1" for the identity).
Enumeration todd_coxeter(const Presentation& presentation, std::size_t max_cosets);

// Element reached from the identity by the word.
Element evaluate(const Enumeration& enumeration, const Word& word);

std::string h_group_presentation(std::size_t n);

struct HGroup {
  GroupPtr group;
  GeneratingSet genset;  // symmetric closure of {s1..sn}
  std::vector<Element> s;  // s[i] is generator s_{i+1}
  Element epsilon = 0;     // s1^2
};

/// H_n = < s1..sn | s_i s_j s_i^-1 = s_j^-1 (i != j) >, for 2 <= n <= 8.
HGroup h_group(std::size_t n);

}  // namespace cayley
