#include "cayley/group.hpp"

#include <algorithm>
#include <charconv>
#include <random>

#include "cayley/error.hpp"

namespace cayley {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedInput: return "malformed-input";
    case ErrorKind::DegenerateInput: return "degenerate-input";
    case ErrorKind::NotGenerating: return "not-generating";
    case ErrorKind::Parse: return "parse-error";
    case ErrorKind::ResourceLimit: return "resource-limit";
    case ErrorKind::PreconditionViolation: return "precondition-violation";
  }
  return "unknown";
}

namespace {

std::uint64_t fnv1a(const std::vector<Element>& table, std::size_t order) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    for (int b = 0; b < 4; ++b) {
      h ^= (v >> (8 * b)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  mix(order);
  for (Element e : table) mix(e);
  return h;
}

}  // namespace

FiniteGroup::FiniteGroup(std::vector<Element> table, std::vector<std::string> names)
    : table_(std::move(table)), names_(std::move(names)) {
  order_ = names_.size();
  if (order_ == 0) fail(ErrorKind::MalformedInput, "group must have at least one element");
  if (table_.size() != order_ * order_) {
    fail(ErrorKind::MalformedInput, "multiplication table size does not match element count");
  }
  const std::size_t n = order_;

  // Latin square.
  std::vector<std::uint8_t> seen(n);
  for (std::size_t r = 0; r < n; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t c = 0; c < n; ++c) {
      Element v = table_[r * n + c];
      if (v >= n || seen[v]) fail(ErrorKind::MalformedInput, "table row " + std::to_string(r) + " is not a permutation");
      seen[v] = 1;
    }
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t r = 0; r < n; ++r) {
      Element v = table_[r * n + c];
      if (seen[v]) fail(ErrorKind::MalformedInput, "table column " + std::to_string(c) + " is not a permutation");
      seen[v] = 1;
    }
  }

  // Identity: in a Latin square the left identity is the row equal to 0..n-1.
  bool found = false;
  for (std::size_t e = 0; e < n && !found; ++e) {
    bool left = true, right = true;
    for (std::size_t g = 0; g < n && (left || right); ++g) {
      left = left && table_[e * n + g] == g;
      right = right && table_[g * n + e] == g;
    }
    if (left && right) {
      identity_ = static_cast<Element>(e);
      found = true;
    }
  }
  if (!found) fail(ErrorKind::MalformedInput, "table has no two-sided identity");

  inverse_.assign(n, 0);
  for (std::size_t g = 0; g < n; ++g) {
    auto r = row(static_cast<Element>(g));
    auto it = std::find(r.begin(), r.end(), identity_);
    Element h = static_cast<Element>(it - r.begin());
    if (table_[h * n + g] != identity_) fail(ErrorKind::MalformedInput, "element " + std::to_string(g) + " has no two-sided inverse");
    inverse_[g] = h;
  }

  auto assoc = [&](std::size_t a, std::size_t b, std::size_t c) {
    Element ab = table_[a * n + b], bc = table_[b * n + c];
    if (table_[ab * n + c] != table_[a * n + bc]) {
      fail(ErrorKind::MalformedInput, "associativity fails on (" + std::to_string(a) + "," + std::to_string(b) + "," +
                                          std::to_string(c) + ")");
    }
  };
  if (n <= kExhaustiveAssociativityLimit) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) assoc(a, b, c);
  } else {
    std::mt19937_64 rng(0x5eedu);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t t = 0; t < 10 * n; ++t) assoc(pick(rng), pick(rng), pick(rng));
  }

  digest_ = fnv1a(table_, n);
}

void FiniteGroup::check_element(Element g) const {
  if (g >= order_) {
    fail(ErrorKind::MalformedInput, "element index " + std::to_string(g) + " out of range for group of order " +
                                        std::to_string(order_));
  }
}

Element FiniteGroup::mul(Element g, Element h) const {
  check_element(g);
  check_element(h);
  return (*this)(g, h);
}

Element FiniteGroup::inverse(Element g) const {
  check_element(g);
  return inverse_[g];
}

Element FiniteGroup::power(Element g, long long exponent) const {
  check_element(g);
  Element base = exponent < 0 ? inverse_[g] : g;
  unsigned long long e = exponent < 0 ? static_cast<unsigned long long>(-exponent) : static_cast<unsigned long long>(exponent);
  e %= element_order(g);
  Element result = identity_;
  while (e > 0) {
    if (e & 1u) result = (*this)(result, base);
    base = (*this)(base, base);
    e >>= 1;
  }
  return result;
}

std::size_t FiniteGroup::element_order(Element g) const {
  check_element(g);
  std::size_t k = 1;
  for (Element p = g; p != identity_; p = (*this)(p, g)) ++k;
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (Element g = 0; g < order_; ++g)
    for (Element h = g + 1; h < order_; ++h)
      if (!commute(g, h)) return false;
  return true;
}

const std::string& FiniteGroup::name(Element g) const {
  check_element(g);
  return names_[g];
}

std::optional<Element> FiniteGroup::find(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<Element>(it - names_.begin());
}

Element FiniteGroup::parse_element(std::string_view token) const {
  if (auto e = find(token)) return *e;
  Element value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    fail(ErrorKind::MalformedInput, "unknown element '" + std::string(token) + "'");
  }
  check_element(value);
  return value;
}

void validate_witness(const FiniteGroup& group, const DicyclicWitness& witness) {
  const auto& a = witness.subgroup;
  auto bad = [](const std::string& why) { fail(ErrorKind::MalformedInput, "invalid dicyclic witness: " + why); };
  if (2 * a.size() != group.order()) bad("subgroup does not have index 2");
  if (!std::is_sorted(a.begin(), a.end())) bad("subgroup list is not sorted");
  for (Element e : a) group.check_element(e);
  group.check_element(witness.x);
  std::vector<std::uint8_t> in(group.order());
  for (Element e : a) in[e] = 1;
  if (in[witness.x]) bad("x lies in the subgroup");
  for (Element g : a) {
    if (!in[group.inverse(g)]) bad("subgroup not closed under inverse");
    for (Element h : a) {
      if (!in[group(g, h)]) bad("subgroup not closed under product");
      if (!group.commute(g, h)) bad("subgroup is not abelian");
    }
    if (group.conjugate(witness.x, g) != group.inverse(g)) bad("x does not invert the subgroup by conjugation");
  }
  if (!in[group(witness.x, witness.x)]) bad("x^2 is not in the subgroup");
  if (group.element_order(witness.x) != 4) bad("x does not have order 4");
}

std::vector<Element> subgroup_generated(const FiniteGroup& group, std::span<const Element> gens) {
  std::vector<std::uint8_t> in(group.order());
  std::vector<Element> members{group.identity()};
  in[group.identity()] = 1;
  for (Element g : gens) group.check_element(g);
  // Closure under right multiplication by generators suffices in a finite group.
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (Element g : gens) {
      Element p = group(members[i], g);
      if (!in[p]) {
        in[p] = 1;
        members.push_back(p);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<Element> involutions_and_identity(const FiniteGroup& group) {
  std::vector<Element> out;
  for (Element g = 0; g < group.order(); ++g)
    if (group(g, g) == group.identity()) out.push_back(g);
  return out;
}

std::vector<Element> small_generating_set(const FiniteGroup& group) {
  std::vector<Element> gens;
  std::vector<Element> current = subgroup_generated(group, gens);
  while (current.size() < group.order()) {
    // Prefer elements of large order so fewer generators are needed.
    Element best = group.identity();
    std::size_t best_order = 0;
    for (Element g = 0; g < group.order(); ++g) {
      if (std::binary_search(current.begin(), current.end(), g)) continue;
      std::size_t o = group.element_order(g);
      if (o > best_order) {
        best = g;
        best_order = o;
      }
    }
    gens.push_back(best);
    current = subgroup_generated(group, gens);
  }
  return gens;
}

namespace {

// Extends generator images to a map via words; returns nullopt if inconsistent or not bijective.
std::optional<std::vector<Element>> extend_to_homomorphism(const FiniteGroup& from, const FiniteGroup& to,
                                                           std::span<const Element> gens,
                                                           std::span<const Element> images) {
  constexpr Element kUnset = static_cast<Element>(-1);
  std::vector<Element> map(from.order(), kUnset);
  std::vector<Element> queue{from.identity()};
  map[from.identity()] = to.identity();
  for (std::size_t i = 0; i < queue.size(); ++i) {
    Element g = queue[i];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Element h = from(g, gens[k]);
      Element img = to(map[g], images[k]);
      if (map[h] == kUnset) {
        map[h] = img;
        queue.push_back(h);
      } else if (map[h] != img) {
        return std::nullopt;
      }
    }
  }
  std::vector<std::uint8_t> hit(to.order());
  for (Element v : map) {
    if (v == kUnset || hit[v]) return std::nullopt;
    hit[v] = 1;
  }
  for (Element a = 0; a < from.order(); ++a)
    for (Element b = 0; b < from.order(); ++b)
      if (map[from(a, b)] != to(map[a], map[b])) return std::nullopt;
  return map;
}

}  // namespace

std::optional<std::vector<Element>> find_isomorphism(const FiniteGroup& from, const FiniteGroup& to) {
  if (from.order() > 12 || to.order() > 12) fail(ErrorKind::ResourceLimit, "isomorphism search is limited to order <= 12");
  if (from.order() != to.order()) return std::nullopt;
  const auto gens = small_generating_set(from);
  std::vector<Element> images(gens.size());
  std::optional<std::vector<Element>> result;
  auto search = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == gens.size()) {
      result = extend_to_homomorphism(from, to, gens, images);
      return result.has_value();
    }
    const std::size_t want = from.element_order(gens[depth]);
    for (Element c = 0; c < to.order(); ++c) {
      if (to.element_order(c) != want) continue;
      images[depth] = c;
      if (self(self, depth + 1)) return true;
    }
    return false;
  };
  search(search, 0);
  return result;
}

}  // namespace cayley
