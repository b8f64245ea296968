#include "cayley/classify.hpp"

#include <algorithm>
#include <set>

#include "cayley/constructors.hpp"
#include "cayley/error.hpp"

namespace cayley {

const char* to_string(GroupCase c) {
  switch (c) {
    case GroupCase::Boolean: return "Boolean";
    case GroupCase::AbelianOrderGe3: return "AbelianOrderGe3";
    case GroupCase::Q8TimesBoolean: return "Q8TimesBoolean";
    case GroupCase::OtherGeneralizedDicyclic: return "OtherGeneralizedDicyclic";
    case GroupCase::Neither: return "Neither";
  }
  return "unknown";
}

std::optional<GroupCase> parse_group_case(std::string_view text) {
  for (GroupCase c : {GroupCase::Boolean, GroupCase::AbelianOrderGe3, GroupCase::Q8TimesBoolean,
                      GroupCase::OtherGeneralizedDicyclic, GroupCase::Neither})
    if (text == to_string(c)) return c;
  return std::nullopt;
}

std::size_t predicted_xi_order(GroupCase c) {
  switch (c) {
    case GroupCase::Boolean:
    case GroupCase::Neither: return 1;
    case GroupCase::AbelianOrderGe3:
    case GroupCase::OtherGeneralizedDicyclic: return 2;
    case GroupCase::Q8TimesBoolean: return 8;
  }
  return 1;
}

bool is_boolean(const FiniteGroup& group) {
  for (Element g = 0; g < group.order(); ++g)
    if (group(g, g) != group.identity()) return false;
  return true;
}

std::vector<std::vector<Element>> index_two_subgroups(const FiniteGroup& group) {
  const auto gens = small_generating_set(group);
  const std::size_t n = group.order();
  std::set<std::vector<Element>> kernels;
  for (std::size_t mask = 1; mask < (std::size_t{1} << gens.size()); ++mask) {
    // Try to extend the sign assignment on generators to a homomorphism onto Z/2.
    std::vector<int> sign(n, -1);
    std::vector<Element> queue{group.identity()};
    sign[group.identity()] = 0;
    bool ok = true;
    for (std::size_t i = 0; i < queue.size() && ok; ++i) {
      for (std::size_t k = 0; k < gens.size(); ++k) {
        const Element h = group(queue[i], gens[k]);
        const int want = sign[queue[i]] ^ static_cast<int>((mask >> k) & 1u);
        if (sign[h] == -1) {
          sign[h] = want;
          queue.push_back(h);
        } else if (sign[h] != want) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) continue;
    std::vector<Element> kernel;
    for (Element g = 0; g < n; ++g)
      if (sign[g] == 0) kernel.push_back(g);
    kernels.insert(std::move(kernel));
  }
  return {kernels.begin(), kernels.end()};
}

namespace {

bool subset_is_abelian(const FiniteGroup& group, const std::vector<Element>& subset) {
  for (std::size_t i = 0; i < subset.size(); ++i)
    for (std::size_t j = i + 1; j < subset.size(); ++j)
      if (!group.commute(subset[i], subset[j])) return false;
  return true;
}

}  // namespace

std::optional<DicyclicWitness> find_dicyclic_witness(const FiniteGroup& group, WitnessMode mode) {
  if (group.is_abelian()) return std::nullopt;
  for (const auto& a : index_two_subgroups(group)) {
    if (!subset_is_abelian(group, a)) continue;
    for (Element x = 0; x < group.order(); ++x) {
      if (std::binary_search(a.begin(), a.end(), x)) continue;
      const std::size_t ord = group.element_order(x);
      if (mode == WitnessMode::Strict ? ord != 4 : (ord != 4 && ord != 2)) continue;
      const bool inverts = std::all_of(a.begin(), a.end(), [&](Element g) { return group.conjugate(x, g) == group.inverse(g); });
      if (inverts) return DicyclicWitness{a, x};
    }
  }
  return std::nullopt;
}

std::optional<Q8BooleanFactors> decompose_q8_times_boolean(const FiniteGroup& group) {
  const auto witness = find_dicyclic_witness(group);
  if (!witness) return std::nullopt;
  const Element x2 = group(witness->x, witness->x);
  for (Element a : witness->subgroup) {
    const Element sq = group(a, a);
    if (sq != group.identity() && sq != x2) return std::nullopt;
  }

  // Two non-commuting elements of order 4 generate the Q8 factor.
  std::optional<std::pair<Element, Element>> pair;
  for (Element s = 0; s < group.order() && !pair; ++s) {
    if (group.element_order(s) != 4) continue;
    for (Element t = s + 1; t < group.order(); ++t)
      if (group.element_order(t) == 4 && !group.commute(s, t)) {
        pair.emplace(s, t);
        break;
      }
  }
  if (!pair) return std::nullopt;
  const Element gens[] = {pair->first, pair->second};
  Q8BooleanFactors out;
  out.q8 = subgroup_generated(group, gens);
  if (out.q8.size() != 8) return std::nullopt;

  // The elements of order <= 2 form the centre {+-1} x B; take a complement of <s^2> in it.
  const Element minus_one = group(pair->first, pair->first);
  const auto involutions = involutions_and_identity(group);
  std::vector<Element> basis;
  std::vector<Element> span = {group.identity()};
  for (Element z : involutions) {
    std::vector<Element> with_minus = basis;
    with_minus.push_back(minus_one);
    const auto reach = subgroup_generated(group, with_minus);
    if (std::binary_search(reach.begin(), reach.end(), z)) continue;
    basis.push_back(z);
  }
  out.boolean = subgroup_generated(group, basis);
  if (out.q8.size() * out.boolean.size() != group.order()) return std::nullopt;

  std::vector<std::uint8_t> hit(group.order());
  for (Element q : out.q8)
    for (Element b : out.boolean) {
      if (!group.commute(q, b)) return std::nullopt;
      const Element p = group(q, b);
      if (hit[p]) return std::nullopt;
      hit[p] = 1;
    }
  return out;
}

Element find_a0(const FiniteGroup& group, const DicyclicWitness& witness) {
  validate_witness(group, witness);
  const Element x2 = group(witness.x, witness.x);
  for (Element a : witness.subgroup) {
    const Element sq = group(a, a);
    if (sq != group.identity() && sq != x2) return a;
  }
  fail(ErrorKind::PreconditionViolation, "every a in A has a^2 in {1, x^2}: the group is Q8 x Boolean");
}

Classification classify(const FiniteGroup& group) {
  Classification out;
  if (is_boolean(group)) {
    out.group_case = GroupCase::Boolean;
  } else if (group.is_abelian()) {
    out.group_case = GroupCase::AbelianOrderGe3;
  } else if (auto w = find_dicyclic_witness(group)) {
    out.witness = w;
    out.factors = decompose_q8_times_boolean(group);
    out.group_case = out.factors ? GroupCase::Q8TimesBoolean : GroupCase::OtherGeneralizedDicyclic;
  } else {
    out.group_case = GroupCase::Neither;
    out.dihedral_reading_only = find_dicyclic_witness(group, WitnessMode::Literal).has_value();
  }
  out.predicted_xi_order = predicted_xi_order(out.group_case);
  return out;
}

Permutation lifted_phi_eps(const FiniteGroup& group, const Q8BooleanFactors& factors, const std::array<int, 3>& eps) {
  // Axes: the three cyclic subgroups of order 4 in the Q8 factor, ordered by their smallest generator.
  std::vector<Element> axis_of(group.order(), 3);
  std::size_t axes = 0;
  for (Element q : factors.q8) {
    if (group.element_order(q) != 4 || axis_of[q] != 3) continue;
    axis_of[q] = axis_of[group.inverse(q)] = static_cast<Element>(axes++);
  }
  if (axes != 3) fail(ErrorKind::MalformedInput, "Q8 factor does not have three cyclic subgroups of order 4");

  std::vector<Element> images(group.order());
  for (Element q : factors.q8) {
    const bool invert = axis_of[q] < 3 && eps[axis_of[q]] == -1;
    const Element img = invert ? group.inverse(q) : q;
    for (Element b : factors.boolean) images[group(q, b)] = group(img, b);
  }
  return Permutation(std::move(images));
}

std::vector<Permutation> predicted_xi(const FiniteGroup& group, const Classification& c) {
  std::vector<Permutation> out{Permutation::identity(group.order())};
  switch (c.group_case) {
    case GroupCase::Boolean:
    case GroupCase::Neither: break;
    case GroupCase::AbelianOrderGe3: out.push_back(eta_map(group)); break;
    case GroupCase::OtherGeneralizedDicyclic: out.push_back(psi_map(group, *c.witness)); break;
    case GroupCase::Q8TimesBoolean:
      out.clear();
      for (int mask = 0; mask < 8; ++mask) {
        const std::array<int, 3> eps{(mask & 1) ? -1 : 1, (mask & 2) ? -1 : 1, (mask & 4) ? -1 : 1};
        out.push_back(lifted_phi_eps(group, *c.factors, eps));
      }
      break;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool check_boolean_factor_lemma(const GroupPtr& group, const FiniteGroup& boolean_part) {
  if (!is_boolean(boolean_part)) fail(ErrorKind::MalformedInput, "second factor must be a Boolean group");
  const std::size_t m = group->order(), k = boolean_part.order();
  if (m * k == 1) return true;
  const std::vector<Permutation> xi_g =
      m == 1 ? std::vector<Permutation>{Permutation::identity(1)} : xi_of_group(group).elements;
  const Stabilizer xi_product = xi_of_group(share(direct_product(*group, boolean_part)));

  std::vector<Permutation> lifted;
  for (const auto& phi : xi_g) {
    std::vector<Element> images(m * k);
    for (Element g = 0; g < m; ++g)
      for (Element b = 0; b < k; ++b) images[g * k + b] = static_cast<Element>(phi(g) * k + b);
    lifted.emplace_back(std::move(images));
  }
  std::sort(lifted.begin(), lifted.end());
  return xi_g.size() == xi_product.order() && lifted == xi_product.elements;
}

}  // namespace cayley
