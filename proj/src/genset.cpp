#include "cayley/genset.hpp"

#include <algorithm>
#include <sstream>

#include "cayley/error.hpp"

namespace cayley {

GeneratingSet::GeneratingSet(GroupPtr group, std::vector<Element> elements)
    : group_(std::move(group)), elements_(std::move(elements)) {
  if (!group_) fail(ErrorKind::MalformedInput, "generating set needs a group");
  const FiniteGroup& g = *group_;
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  for (Element e : elements_) g.check_element(e);
  if (contains(g.identity())) fail(ErrorKind::MalformedInput, "generating set contains the identity");
  for (Element e : elements_)
    if (!contains(g.inverse(e))) fail(ErrorKind::MalformedInput, "generating set is not symmetric: missing inverse of " + g.name(e));
  const auto generated = subgroup_generated(g, elements_);
  if (generated.size() != g.order()) {
    fail(ErrorKind::NotGenerating, "set does not generate the group; it generates a subgroup of order " +
                                       std::to_string(generated.size()));
  }
  for (Element e : elements_)
    if (e <= g.inverse(e)) colour_keys_.push_back(e);
}

bool GeneratingSet::contains(Element g) const { return std::binary_search(elements_.begin(), elements_.end(), g); }

bool GeneratingSet::subset_of(const GeneratingSet& other) const {
  return group_->same_table(other.group()) &&
         std::includes(other.elements_.begin(), other.elements_.end(), elements_.begin(), elements_.end());
}

std::string GeneratingSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < elements_.size(); ++i) out += (i ? ", " : "") + group_->name(elements_[i]);
  return out + "}";
}

GeneratingSet make_genset(GroupPtr group, std::span<const Element> elements, bool symmetrize) {
  if (!group) fail(ErrorKind::MalformedInput, "generating set needs a group");
  std::vector<Element> out;
  for (Element e : elements) {
    group->check_element(e);
    if (e == group->identity()) {
      if (symmetrize) continue;
      fail(ErrorKind::MalformedInput, "generating set contains the identity");
    }
    out.push_back(e);
    if (symmetrize) out.push_back(group->inverse(e));
  }
  return GeneratingSet(std::move(group), std::move(out));
}

std::vector<Element> parse_elements(const FiniteGroup& group, std::string_view list) {
  std::vector<Element> out;
  int depth = 0;
  std::size_t start = 0;
  auto flush = [&](std::size_t end) {
    std::string_view token = list.substr(start, end - start);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    if (!token.empty()) out.push_back(group.parse_element(token));
  };
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (list[i] == '(' || list[i] == '[') ++depth;
    else if (list[i] == ')' || list[i] == ']') --depth;
    else if (list[i] == ',' && depth == 0) {
      flush(i);
      start = i + 1;
    }
  }
  flush(list.size());
  return out;
}

GeneratingSet ball(const GeneratingSet& genset, std::size_t k) {
  if (k == 0) fail(ErrorKind::MalformedInput, "ball radius must be >= 1");
  const FiniteGroup& g = genset.group();
  std::vector<std::uint8_t> in(g.order());
  std::vector<Element> frontier = genset.elements();
  for (Element e : frontier) in[e] = 1;
  // Elements of length exactly r+1 are products of frontier (length r) with S.
  for (std::size_t r = 1; r < k && !frontier.empty(); ++r) {
    std::vector<Element> next;
    for (Element a : frontier)
      for (Element s : genset.elements()) {
        const Element p = g(a, s);
        if (!in[p]) {
          in[p] = 1;
          next.push_back(p);
        }
      }
    frontier = std::move(next);
  }
  in[g.identity()] = 0;
  std::vector<Element> out;
  for (Element e = 0; e < g.order(); ++e)
    if (in[e]) out.push_back(e);
  return GeneratingSet(genset.group_ptr(), std::move(out));
}

std::size_t saturation_radius(const GeneratingSet& genset) {
  const std::size_t target = genset.group().order() - 1;
  if (target == 0) return 0;
  for (std::size_t k = 1;; ++k)
    if (ball(genset, k).size() == target) return k;
}

GeneratingSet full_genset(GroupPtr group) {
  if (!group) fail(ErrorKind::MalformedInput, "full_genset needs a group");
  if (group->order() < 2) fail(ErrorKind::DegenerateInput, "the trivial group has no non-identity elements");
  std::vector<Element> all;
  for (Element e = 0; e < group->order(); ++e)
    if (e != group->identity()) all.push_back(e);
  return GeneratingSet(std::move(group), std::move(all));
}

CayleyGraph::CayleyGraph(GeneratingSet genset) : genset_(std::move(genset)) {
  const FiniteGroup& g = genset_.group();
  adjacency_.resize(g.order());
  for (Element v = 0; v < g.order(); ++v) {
    auto& adj = adjacency_[v];
    for (Element s : genset_.elements()) adj.push_back(g(v, s));
    std::sort(adj.begin(), adj.end());
  }
  edge_count_ = g.order() * genset_.size() / 2;

  std::uint64_t h = g.digest();
  for (Element s : genset_.elements()) {
    h ^= s + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  digest_ = h;
}

bool CayleyGraph::adjacent(Element g, Element h) const {
  const auto& adj = adjacency_.at(g);
  return std::binary_search(adj.begin(), adj.end(), h);
}

Element CayleyGraph::colour_of_edge(Element g, Element h) const {
  const FiniteGroup& grp = group();
  const Element s = grp.mul(grp.inverse(g), h);
  if (!genset_.contains(s)) fail(ErrorKind::MalformedInput, "vertices are not adjacent");
  return std::min(s, grp.inverse(s));
}

std::string CayleyGraph::to_dot() const {
  static const char* kPalette[] = {"red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "cyan4", "gold3", "gray40"};
  const FiniteGroup& g = group();
  const auto& keys = genset_.colour_keys();
  std::ostringstream out;
  out << "graph cayley {\n";
  for (Element v = 0; v < g.order(); ++v) out << "  " << v << " [label=\"" << g.name(v) << "\"];\n";
  for (Element v = 0; v < g.order(); ++v) {
    for (Element w : adjacency_[v]) {
      if (w < v) continue;
      const Element key = colour_of_edge(v, w);
      const auto cls = static_cast<std::size_t>(std::lower_bound(keys.begin(), keys.end(), key) - keys.begin());
      out << "  " << v << " -- " << w << " [color=\"" << kPalette[cls % std::size(kPalette)] << "\", label=\""
          << g.name(key) << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string CayleyGraph::to_csv() const {
  const FiniteGroup& g = group();
  std::ostringstream out;
  out << "source,target,colour\n";
  for (Element v = 0; v < g.order(); ++v)
    for (Element w : adjacency_[v])
      if (v < w) out << v << "," << w << "," << colour_of_edge(v, w) << "\n";
  return out.str();
}

CayleyGraph build_graph(const GeneratingSet& genset) { return CayleyGraph(genset); }

}  // namespace cayley
