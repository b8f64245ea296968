#include "cayley/rigidity.hpp"

#include <algorithm>
#include <random>

#include "cayley/constructors.hpp"
#include "cayley/error.hpp"
#include "cayley/presentation.hpp"

namespace cayley {

IndexReport index_of(const GeneratingSet& genset, const SearchLimits& limits) {
  const CayleyGraph graph = build_graph(genset);
  const AutGroup full = full_aut(graph, limits);
  const Stabilizer xi = xi_stabilizer(graph, limits.node_budget);
  const std::size_t n = genset.group().order();
  IndexReport r;
  r.group_digest = genset.group().digest();
  r.genset = genset.to_string();
  r.genset_size = genset.size();
  r.full_aut_order = full.order;
  r.colour_aut_order = BigOrder(n) * xi.order();
  r.cayley_index = full.order / n;
  r.colour_index = xi.order();
  return r;
}

namespace {

std::vector<Element> inverse_pair_keys(const FiniteGroup& group) {
  std::vector<Element> keys;
  for (Element g = 0; g < group.order(); ++g)
    if (g != group.identity() && g <= group.inverse(g)) keys.push_back(g);
  return keys;
}

std::vector<Element> expand_classes(const FiniteGroup& group, const std::vector<Element>& keys, const std::vector<std::size_t>& chosen) {
  std::vector<Element> out;
  for (std::size_t c : chosen) {
    out.push_back(keys[c]);
    if (group.inverse(keys[c]) != keys[c]) out.push_back(group.inverse(keys[c]));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

SearchResult cayley_index_search(const GroupPtr& group, const IndexSearchOptions& options) {
  const FiniteGroup& g = *group;
  SearchResult result;
  if (g.order() == 1) {
    result.best_index = 1;
    result.witness.emplace(group, std::vector<Element>{});
    result.exhaustive = true;
    return result;
  }
  SearchMode mode = options.mode;
  if (mode == SearchMode::Auto) mode = g.order() <= kExhaustiveIndexOrderLimit ? SearchMode::Exhaustive : SearchMode::Sampled;
  if (mode == SearchMode::Exhaustive && g.order() > kExhaustiveIndexOrderLimit) {
    fail(ErrorKind::MalformedInput, "exhaustive index search is limited to groups of order <= " +
                                        std::to_string(kExhaustiveIndexOrderLimit));
  }

  const auto keys = inverse_pair_keys(g);
  auto consider = [&](std::vector<Element> elements) {
    if (subgroup_generated(g, elements).size() != g.order()) return false;
    GeneratingSet s(group, std::move(elements));
    ++result.sets_examined;
    const BigOrder index = full_aut(build_graph(s), options.limits).order / g.order();
    if (!result.witness || index < result.best_index) {
      result.best_index = index;
      result.witness.emplace(std::move(s));
    }
    return true;
  };

  if (mode == SearchMode::Exhaustive) {
    result.exhaustive = true;
    const std::size_t classes = keys.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << classes); ++mask) {
      if (result.witness && result.best_index == 1) break;
      if (result.sets_examined >= options.budget) {
        result.exhaustive = false;
        break;
      }
      std::vector<std::size_t> chosen;
      for (std::size_t c = 0; c < classes; ++c)
        if ((mask >> c) & 1u) chosen.push_back(c);
      consider(expand_classes(g, keys, chosen));
    }
    return result;
  }

  result.seed = options.seed;
  std::mt19937_64 rng(options.seed);
  std::geometric_distribution<std::size_t> extra(0.35);
  std::vector<std::size_t> order(keys.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  const std::size_t max_draws = 20 * options.budget + 100;
  for (std::size_t draw = 0; draw < max_draws && result.sets_examined < options.budget; ++draw) {
    if (result.witness && result.best_index == 1) break;
    const std::size_t size = std::min(keys.size(), 1 + extra(rng));
    // Partial Fisher-Yates for `size` distinct classes.
    for (std::size_t i = 0; i < size; ++i) {
      std::uniform_int_distribution<std::size_t> pick(i, order.size() - 1);
      std::swap(order[i], order[pick(rng)]);
    }
    std::vector<std::size_t> chosen(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(size));
    std::sort(chosen.begin(), chosen.end());
    consider(expand_classes(g, keys, chosen));
  }
  return result;
}

std::size_t quantitative_radius(GroupCase c) {
  switch (c) {
    case GroupCase::Boolean: return 1;
    case GroupCase::AbelianOrderGe3: return 2;
    default: return 3;
  }
}

QuantitativeReport verify_quantitative(const GeneratingSet& genset) {
  const FiniteGroup& g = genset.group();
  QuantitativeReport r;
  r.group_case = classify(g).group_case;
  r.radius = quantitative_radius(r.group_case);
  if (g.order() == 1) {
    r.xi_ball_order = r.xi_group_order = 1;
    r.pass = true;
    return r;
  }
  const Stabilizer xi_ball = xi_stabilizer(build_graph(ball(genset, r.radius)));
  const Stabilizer xi_group = xi_of_group(genset.group_ptr());
  r.xi_ball_order = xi_ball.order();
  r.xi_group_order = xi_group.order();
  r.pass = xi_ball == xi_group;
  return r;
}

bool CheckReport::pass() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

void CheckReport::add(std::string label, bool pass, std::string detail) {
  checks.push_back({std::move(label), pass, std::move(detail)});
}

CheckReport optimality_example_product(std::size_t m, std::size_t n) {
  if (m < 3 || n < 3) fail(ErrorKind::MalformedInput, "both factors need an element of order >= 3 (m, n >= 3)");
  const std::size_t sizes[] = {m, n};
  GroupPtr g = share(abelian(sizes));
  auto idx = [n](std::size_t a, std::size_t b) { return static_cast<Element>(a * n + b); };
  const Element gens[] = {idx(1, 0), idx(m - 1, 0), idx(0, 1), idx(0, n - 1)};
  const GeneratingSet s = make_genset(g, gens, false);

  std::vector<Element> flip_first(g->order()), flip_second(g->order());
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      flip_first[idx(a, b)] = idx((m - a) % m, b);
      flip_second[idx(a, b)] = idx(a, (n - b) % n);
    }
  const std::vector<Permutation> named{Permutation::identity(g->order()), eta_map(*g), Permutation(flip_first),
                                       Permutation(flip_second)};

  CheckReport report;
  report.name = "product:" + std::to_string(m) + "," + std::to_string(n);
  const Stabilizer xi_s = xi_stabilizer(build_graph(s));
  const Stabilizer xi_ball = xi_stabilizer(build_graph(ball(s, 2)));
  bool distinct = true;
  for (std::size_t i = 0; i < named.size(); ++i)
    for (std::size_t j = i + 1; j < named.size(); ++j) distinct = distinct && named[i] != named[j];
  report.add("id, eta, eta1 x id, id x eta2 pairwise distinct", distinct);
  report.add("all four maps in xi_S",
             std::all_of(named.begin(), named.end(), [&](const Permutation& p) { return xi_s.contains(p); }));
  report.add("|xi_S| >= 4", xi_s.order() >= 4, "|xi_S| = " + std::to_string(xi_s.order()));
  report.add("|xi_{S^<=2}| = 2", xi_ball.order() == 2, "|xi_{S^<=2}| = " + std::to_string(xi_ball.order()));
  std::vector<Permutation> id_eta{named[0], named[1]};
  std::sort(id_eta.begin(), id_eta.end());
  report.add("xi_{S^<=2} = {id, eta}", xi_ball.elements == id_eta);
  return report;
}

GroupWithGenset example_q8_boolean(std::size_t n) {
  if (n < 1 || n > 4) fail(ErrorKind::MalformedInput, "Q8 example needs 1 <= n <= 4");
  FiniteGroup g1 = direct_product(quaternion(), cyclic(2));
  const std::size_t extra = std::size_t{1} << (n - 1);
  GroupPtr g = n == 1 ? share(std::move(g1)) : share(direct_product(g1, boolean_group(n - 1)));
  // Q8 indices: i = 2, -i = 3, j = 4, -j = 5, k = ij = 6, -k = 7.
  std::vector<Element> gens;
  for (Element q = 2; q < 8; ++q) gens.push_back(static_cast<Element>((q * 2 + 1) * extra));
  for (Element z = 1; z < extra; ++z) gens.push_back(z);
  GeneratingSet s = make_genset(g, gens, false);
  return {g, std::move(s)};
}

CheckReport optimality_example_q8(std::size_t n) {
  auto [g, s] = example_q8_boolean(n);
  const std::size_t extra = std::size_t{1} << (n - 1);
  const FiniteGroup q8 = quaternion();
  std::vector<Element> images(g->order());
  for (Element q = 0; q < 8; ++q)
    for (Element e = 0; e < 2; ++e)
      for (Element z = 0; z < extra; ++z) {
        const Element img = e ? q8.inverse(q) : q;
        images[(q * 2 + e) * extra + z] = static_cast<Element>((img * 2 + e) * extra + z);
      }
  const Permutation mixed(std::move(images));

  CheckReport report;
  report.name = "q8:" + std::to_string(n);
  report.add("G is Q8 x Boolean", classify(*g).group_case == GroupCase::Q8TimesBoolean);
  const CayleyGraph ball2 = build_graph(ball(s, 2));
  const Stabilizer xi_ball2 = xi_stabilizer(ball2);
  report.add("mixed map in xi_{S^<=2}", is_colour_automorphism(ball2, mixed) && xi_ball2.contains(mixed));
  const Stabilizer xi_g = xi_of_group(g);
  report.add("mixed map not in xi_G", !xi_g.contains(mixed) && !is_colour_automorphism(build_graph(full_genset(g)), mixed));
  report.add("|xi_{S^<=2}| > 8", xi_ball2.order() > 8, "|xi_{S^<=2}| = " + std::to_string(xi_ball2.order()));
  const CayleyGraph ball3 = build_graph(ball(s, 3));
  report.add("mixed map not in xi_{S^<=3}", !is_colour_automorphism(ball3, mixed));
  report.add("xi_{S^<=3} = xi_G", xi_stabilizer(ball3) == xi_g);
  return report;
}

CheckReport optimality_example_h(std::size_t n) {
  if (n < 2 || n > 6) fail(ErrorKind::MalformedInput, "H example needs 2 <= n <= 6");
  const HGroup h = h_group(n);
  const FiniteGroup& g = *h.group;
  const Permutation eta = eta_map(g);

  CheckReport report;
  report.name = "h:" + std::to_string(n);
  report.add("|H_n| = 2^(n+1)", g.order() == (std::size_t{1} << (n + 1)), "order " + std::to_string(g.order()));
  const CayleyGraph ball2 = build_graph(ball(h.genset, 2));
  // xi_{S^<=2} itself is far too large to list once n >= 5.
  report.add("eta in xi_{S^<=2}", is_colour_automorphism(ball2, eta));
  const Stabilizer xi3 = xi_stabilizer(build_graph(ball(h.genset, 3)));
  const Classification c = classify(g);
  if (n == 2) {
    report.add("H_2 isomorphic to Q8", find_isomorphism(g, quaternion()).has_value());
  } else if (n == 3) {
    // H_3 = <s1, s2> x <s1 s2 s3> is Q8 x Z/2, so xi_{S^<=3} is the full xi_G of order 8.
    report.add("H_3 is generalized dicyclic", c.witness.has_value(), to_string(c.group_case));
    report.add("xi_{S^<=3} = xi_G", xi3 == xi_of_group(h.group), "|xi_{S^<=3}| = " + std::to_string(xi3.order()));
  } else {
    report.add("H_n neither abelian nor generalized dicyclic", c.group_case == GroupCase::Neither);
    report.add("xi_{S^<=3} trivial", xi3.order() == 1, "|xi_{S^<=3}| = " + std::to_string(xi3.order()));
  }
  return report;
}

GroupWithGenset example_k_group(std::size_t n) {
  if (n < 1 || n > 3) fail(ErrorKind::MalformedInput, "K example needs 1 <= n <= 3");
  const HGroup h = h_group(3);
  const std::size_t extra = std::size_t{1} << n;
  GroupPtr g = share(direct_product(*h.group, boolean_group(n)));
  std::vector<Element> gens;
  for (Element s : h.genset.elements()) gens.push_back(static_cast<Element>(s * extra));
  for (Element z = 1; z < extra; ++z) gens.push_back(static_cast<Element>(h.group->identity() * extra + z));
  GeneratingSet t = make_genset(g, gens, false);
  return {g, std::move(t)};
}

CheckReport optimality_example_k(std::size_t n) {
  auto [g, t] = example_k_group(n);
  const Permutation eta = eta_map(*g);
  CheckReport report;
  report.name = "k:" + std::to_string(n);
  const Classification c = classify(*g);
  report.add("K_n is generalized dicyclic", c.witness.has_value(), to_string(c.group_case));
  report.add("eta in xi_{T_n}", is_colour_automorphism(build_graph(t), eta));
  report.add("eta in xi_{T_n^<=2}", is_colour_automorphism(build_graph(ball(t, 2)), eta));
  const Stabilizer xi3 = xi_stabilizer(build_graph(ball(t, 3)));
  report.add("xi_{T_n^<=3} = xi_G", xi3 == xi_of_group(g), "|xi_{T_n^<=3}| = " + std::to_string(xi3.order()));
  return report;
}

}  // namespace cayley
