#include "cayley/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include "cayley/error.hpp"

namespace cayley {

Permutation::Permutation(std::vector<Element> images) : images_(std::move(images)) {
  std::vector<std::uint8_t> hit(images_.size());
  for (Element x : images_) {
    if (x >= images_.size() || hit[x]) fail(ErrorKind::MalformedInput, "image array is not a bijection");
    hit[x] = 1;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<Element> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<Element>(i);
  return Permutation(std::move(images), Unchecked{});
}

Permutation Permutation::parse(std::string_view text) {
  auto begin = text.find('['), end = text.rfind(']');
  if (begin == std::string_view::npos || end == std::string_view::npos || end < begin) {
    throw ParseError(0, "permutation must be written as [i0 i1 ...]");
  }
  std::vector<Element> images;
  std::size_t pos = begin + 1;
  while (pos < end) {
    while (pos < end && (text[pos] == ' ' || text[pos] == ',')) ++pos;
    if (pos == end) break;
    Element v = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + end, v);
    if (ec != std::errc()) throw ParseError(pos, "expected an element index");
    images.push_back(v);
    pos = static_cast<std::size_t>(ptr - text.data());
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Element> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Element>(i);
  return Permutation(std::move(inv), Unchecked{});
}

std::string Permutation::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < images_.size(); ++i) out += (i ? " " : "") + std::to_string(images_[i]);
  return out + "]";
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) fail(ErrorKind::MalformedInput, "composing permutations of different degree");
  std::vector<Element> r(p.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = p.images_[q.images_[i]];
  return Permutation(std::move(r), Permutation::Unchecked{});
}

std::vector<Permutation> enumerate_group(const std::vector<Permutation>& generators, std::size_t degree, std::size_t cap) {
  std::set<Permutation> seen{Permutation::identity(degree)};
  std::vector<Permutation> frontier{Permutation::identity(degree)};
  for (std::size_t i = 0; i < frontier.size(); ++i) {
    for (const auto& g : generators) {
      Permutation p = frontier[i] * g;
      if (seen.insert(p).second) {
        if (seen.size() > cap) fail(ErrorKind::ResourceLimit, "group has more than " + std::to_string(cap) + " elements");
        frontier.push_back(std::move(p));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

bool is_group(const std::vector<Permutation>& sorted_elements) {
  if (sorted_elements.empty()) return false;
  auto has = [&](const Permutation& p) { return std::binary_search(sorted_elements.begin(), sorted_elements.end(), p); };
  if (!has(Permutation::identity(sorted_elements.front().size()))) return false;
  for (const auto& p : sorted_elements) {
    if (!has(p.inverse())) return false;
    for (const auto& q : sorted_elements)
      if (!has(p * q)) return false;
  }
  return true;
}

}  // namespace cayley
