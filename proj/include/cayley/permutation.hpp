#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "cayley/group.hpp"

namespace cayley {

// Bijection of group elements, stored as its image array.
class Permutation {
 public:
  Permutation() = default;
  // MalformedInput unless images is a bijection of 0..n-1.
  explicit Permutation(std::vector<Element> images);

  static Permutation identity(std::size_t n);
  // "[0 4 3 2 1]"
  static Permutation parse(std::string_view text);

  std::size_t size() const noexcept { return images_.size(); }
  Element operator()(Element x) const { return images_[x]; }
  const std::vector<Element>& images() const noexcept { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  std::string to_string() const;

  // (p * q)(x) = p(q(x))
  friend Permutation operator*(const Permutation& p, const Permutation& q);

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  struct Unchecked {};
  Permutation(std::vector<Element> images, Unchecked) : images_(std::move(images)) {}

  std::vector<Element> images_;
};

// Closure of the generators under composition; stops with ResourceLimit past cap elements.
std::vector<Permutation> enumerate_group(const std::vector<Permutation>& generators, std::size_t degree, std::size_t cap);

// Identity present, closed under composition and inverse.
bool is_group(const std::vector<Permutation>& sorted_elements);

}  // namespace cayley
