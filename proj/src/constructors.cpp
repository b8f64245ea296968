#include "cayley/constructors.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "cayley/error.hpp"

namespace cayley {

FiniteGroup cyclic(std::size_t n) {
  if (n == 0) fail(ErrorKind::MalformedInput, "cyclic group order must be >= 1");
  std::vector<Element> table(n * n);
  std::vector<std::string> names(n);
  for (std::size_t g = 0; g < n; ++g) {
    names[g] = std::to_string(g);
    for (std::size_t h = 0; h < n; ++h) table[g * n + h] = static_cast<Element>((g + h) % n);
  }
  return FiniteGroup(std::move(table), std::move(names));
}

FiniteGroup direct_product(const FiniteGroup& left, const FiniteGroup& right) {
  const std::size_t m = left.order(), k = right.order(), n = m * k;
  std::vector<Element> table(n * n);
  std::vector<std::string> names(n);
  for (std::size_t a = 0; a < n; ++a) {
    const Element g1 = static_cast<Element>(a / k), h1 = static_cast<Element>(a % k);
    names[a] = "(" + left.name(g1) + "," + right.name(h1) + ")";
    for (std::size_t b = 0; b < n; ++b) {
      const Element g2 = static_cast<Element>(b / k), h2 = static_cast<Element>(b % k);
      table[a * n + b] = static_cast<Element>(left(g1, g2) * k + right(h1, h2));
    }
  }
  return FiniteGroup(std::move(table), std::move(names));
}

FiniteGroup abelian(std::span<const std::size_t> factors) {
  if (factors.empty()) return cyclic(1);
  FiniteGroup g = cyclic(factors[0]);
  for (std::size_t i = 1; i < factors.size(); ++i) g = direct_product(g, cyclic(factors[i]));
  return g;
}

FiniteGroup abelian(std::initializer_list<std::size_t> factors) {
  return abelian(std::span<const std::size_t>(factors.begin(), factors.size()));
}

FiniteGroup boolean_group(std::size_t rank) {
  std::vector<std::size_t> twos(rank, 2);
  return abelian(twos);
}

FiniteGroup quaternion() {
  // Unit quaternions as (sign, axis) with axis 0 = 1, 1 = i, 2 = j, 3 = k; index = 2*axis + (sign < 0).
  // Products of basis units: axis_mul[a][b] = {sign, axis}.
  static constexpr int kSign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  static constexpr int kAxis[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  std::vector<Element> table(64);
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      const int sa = (a & 1) ? -1 : 1, sb = (b & 1) ? -1 : 1;
      const int xa = a / 2, xb = b / 2;
      const int sign = sa * sb * kSign[xa][xb];
      table[a * 8 + b] = static_cast<Element>(2 * kAxis[xa][xb] + (sign < 0 ? 1 : 0));
    }
  }
  return FiniteGroup(std::move(table), {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
}

DicyclicGroup generalized_dicyclic(const FiniteGroup& a, Element y) {
  a.check_element(y);
  if (!a.is_abelian()) fail(ErrorKind::MalformedInput, "dicyclic construction needs an abelian subgroup");
  if (a.element_order(y) != 2) fail(ErrorKind::MalformedInput, "y must have order exactly 2");
  bool exponent_two = true;
  for (Element g = 0; g < a.order(); ++g) exponent_two = exponent_two && a(g, g) == a.identity();
  if (exponent_two) fail(ErrorKind::DegenerateInput, "A has exponent 2, so Dic(A, y) would be abelian");

  const std::size_t m = a.order(), n = 2 * m;
  std::vector<Element> table(n * n);
  std::vector<std::string> names(n);
  for (std::size_t p = 0; p < n; ++p) {
    const Element g = static_cast<Element>(p % m);
    const bool gx = p >= m;
    names[p] = gx ? a.name(g) + "x" : a.name(g);
    for (std::size_t q = 0; q < n; ++q) {
      const Element h = static_cast<Element>(q % m);
      const bool hx = q >= m;
      // g x^e * h x^f = g (x^e h x^-e) x^(e+f)
      Element prod = a(g, gx ? a.inverse(h) : h);
      bool odd = gx != hx;
      if (gx && hx) prod = a(prod, y);
      table[p * n + q] = static_cast<Element>(prod + (odd ? m : 0));
    }
  }
  DicyclicWitness witness;
  witness.subgroup.resize(m);
  std::iota(witness.subgroup.begin(), witness.subgroup.end(), Element{0});
  witness.x = static_cast<Element>(m + a.identity());
  FiniteGroup group(std::move(table), std::move(names));
  validate_witness(group, witness);
  return {std::move(group), std::move(witness)};
}

namespace {

using Perm = std::vector<std::size_t>;

Perm compose(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
  return r;
}

std::string cycle_name(const Perm& p) {
  std::string out;
  std::vector<bool> done(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (done[i] || p[i] == i) continue;
    out += "(";
    for (std::size_t j = i; !done[j]; j = p[j]) {
      if (j != i) out += " ";
      out += std::to_string(j);
      done[j] = true;
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

bool is_even(const Perm& p) {
  std::size_t transpositions = 0;
  std::vector<bool> done(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (done[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !done[j]; j = p[j]) {
      done[j] = true;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0;
}

FiniteGroup from_permutations(std::vector<Perm> elements) {
  std::sort(elements.begin(), elements.end());
  std::map<Perm, Element> index;
  for (std::size_t i = 0; i < elements.size(); ++i) index.emplace(elements[i], static_cast<Element>(i));
  const std::size_t n = elements.size();
  std::vector<Element> table(n * n);
  std::vector<std::string> names(n);
  for (std::size_t a = 0; a < n; ++a) {
    names[a] = cycle_name(elements[a]);
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = index.at(compose(elements[a], elements[b]));
  }
  return FiniteGroup(std::move(table), std::move(names));
}

}  // namespace

FiniteGroup permutation_group(std::size_t degree, std::span<const std::vector<std::size_t>> generators) {
  Perm id(degree);
  std::iota(id.begin(), id.end(), std::size_t{0});
  for (const auto& g : generators) {
    Perm sorted = g;
    std::sort(sorted.begin(), sorted.end());
    if (g.size() != degree || sorted != id) fail(ErrorKind::MalformedInput, "generator is not a permutation of the given degree");
  }
  std::map<Perm, bool> seen{{id, true}};
  std::vector<Perm> elements{id};
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const auto& g : generators) {
      Perm p = compose(elements[i], g);
      if (seen.emplace(p, true).second) elements.push_back(std::move(p));
    }
  }
  return from_permutations(std::move(elements));
}

FiniteGroup symmetric(std::size_t degree) {
  if (degree == 0) fail(ErrorKind::MalformedInput, "symmetric group degree must be >= 1");
  std::vector<Perm> all;
  Perm p(degree);
  std::iota(p.begin(), p.end(), std::size_t{0});
  do all.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return from_permutations(std::move(all));
}

FiniteGroup alternating(std::size_t degree) {
  if (degree == 0) fail(ErrorKind::MalformedInput, "alternating group degree must be >= 1");
  std::vector<Perm> even;
  Perm p(degree);
  std::iota(p.begin(), p.end(), std::size_t{0});
  do
    if (is_even(p)) even.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return from_permutations(std::move(even));
}

FiniteGroup dihedral(std::size_t n) {
  if (n < 3) fail(ErrorKind::MalformedInput, "dihedral group needs n >= 3");
  Perm rotation(n), reflection(n);
  for (std::size_t i = 0; i < n; ++i) {
    rotation[i] = (i + 1) % n;
    reflection[i] = (n - i) % n;
  }
  std::vector<Perm> gens{rotation, reflection};
  return permutation_group(n, gens);
}

FiniteGroup relabelled(const FiniteGroup& group, std::span<const Element> relabel) {
  const std::size_t n = group.order();
  if (relabel.size() != n) fail(ErrorKind::MalformedInput, "relabelling has the wrong length");
  std::vector<Element> table(n * n);
  std::vector<std::string> names(n);
  for (Element a = 0; a < n; ++a) {
    names[relabel[a]] = group.name(a);
    for (Element b = 0; b < n; ++b) table[relabel[a] * n + relabel[b]] = relabel[group(a, b)];
  }
  return FiniteGroup(std::move(table), std::move(names));
}

}  // namespace cayley
