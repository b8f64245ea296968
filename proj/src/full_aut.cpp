#include <algorithm>
#include <map>

#include "cayley/aut_search.hpp"
#include "cayley/error.hpp"

namespace cayley {

namespace {

using Colouring = std::vector<std::size_t>;

// Colour refinement run jointly on two copies of one graph: vertices 0..n-1
// are the left copy, n..2n-1 the right copy. Sharing the colour names across
// both copies makes the two stable colourings directly comparable.
class Refiner {
 public:
  explicit Refiner(const CayleyGraph& graph) : graph_(graph), n_(graph.vertex_count()) {}

  void refine(Colouring& colours) const {
    std::size_t classes = count_classes(colours);
    std::vector<std::pair<std::vector<std::size_t>, std::size_t>> signatures(2 * n_);
    for (;;) {
      for (std::size_t v = 0; v < 2 * n_; ++v) {
        auto& sig = signatures[v].first;
        sig.clear();
        sig.push_back(colours[v]);
        const std::size_t offset = v < n_ ? 0 : n_;
        for (Element w : graph_.neighbours(static_cast<Element>(v - offset))) sig.push_back(colours[w + offset]);
        std::sort(sig.begin() + 1, sig.end());
        signatures[v].second = v;
      }
      std::sort(signatures.begin(), signatures.end());
      std::size_t next = 0;
      for (std::size_t i = 0; i < signatures.size(); ++i) {
        if (i > 0 && signatures[i].first != signatures[i - 1].first) ++next;
        colours[signatures[i].second] = next;
      }
      const std::size_t now = next + 1;
      if (now == classes) return;
      classes = now;
    }
  }

  // Every colour occurs equally often in both copies.
  bool balanced(const Colouring& colours) const {
    std::map<std::size_t, long> diff;
    for (std::size_t v = 0; v < n_; ++v) {
      ++diff[colours[v]];
      --diff[colours[v + n_]];
    }
    return std::all_of(diff.begin(), diff.end(), [](const auto& kv) { return kv.second == 0; });
  }

  static std::size_t count_classes(const Colouring& colours) {
    Colouring sorted = colours;
    std::sort(sorted.begin(), sorted.end());
    return static_cast<std::size_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
  }

  // Smallest colour with more than one left vertex; npos if the left copy is discrete.
  std::size_t target_cell(const Colouring& colours) const {
    std::map<std::size_t, std::size_t> sizes;
    for (std::size_t v = 0; v < n_; ++v) ++sizes[colours[v]];
    for (const auto& [c, size] : sizes)
      if (size > 1) return c;
    return npos;
  }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::size_t size() const noexcept { return n_; }

 private:
  const CayleyGraph& graph_;
  std::size_t n_;
};

class FullAutSearch {
 public:
  FullAutSearch(const CayleyGraph& graph) : graph_(graph), refiner_(graph), n_(graph.vertex_count()) {}

  AutGroup run(const SearchLimits& limits) {
    AutGroup out;
    out.kind = AutKind::Full;
    out.base_graph_digest = graph_.digest();
    out.order = 1;

    // Left translations are automorphisms; they give the first basic orbit for free.
    for (Element s : graph_.genset().elements()) generators_.push_back(left_translation(graph_.group(), s));

    std::vector<Element> base;
    for (;;) {
      Colouring colours = individualized(base, base);
      refiner_.refine(colours);
      const std::size_t cell = refiner_.target_cell(colours);
      if (cell == Refiner::npos) break;
      Element b = 0;
      while (colours[b] != cell) ++b;

      std::vector<std::uint8_t> in_orbit = orbit(b, base);
      for (Element v = 0; v < n_; ++v) {
        if (colours[v] != cell || in_orbit[v]) continue;
        std::vector<Element> left = base, right = base;
        left.push_back(b);
        right.push_back(v);
        if (auto p = find_isomorphism(left, right)) {
          generators_.push_back(std::move(*p));
          in_orbit = orbit(b, base);
        }
      }
      out.order *= static_cast<std::size_t>(std::count(in_orbit.begin(), in_orbit.end(), 1));
      base.push_back(b);
    }

    out.generators = generators_;
    if (out.order <= limits.explicit_cap) {
      out.elements = enumerate_group(generators_, n_, limits.explicit_cap);
      if (BigOrder(out.elements->size()) != out.order) fail(ErrorKind::PreconditionViolation, "stabilizer chain order mismatch");
    }
    return out;
  }

 private:
  Colouring individualized(const std::vector<Element>& left, const std::vector<Element>& right) const {
    // Fresh colours 1..k for the individualized pairs, 0 for everything else.
    Colouring colours(2 * n_, 0);
    for (std::size_t i = 0; i < left.size(); ++i) {
      colours[left[i]] = i + 1;
      colours[right[i] + n_] = i + 1;
    }
    return colours;
  }

  std::vector<std::uint8_t> orbit(Element b, const std::vector<Element>& base) const {
    std::vector<const Permutation*> stab;
    for (const auto& g : generators_)
      if (std::all_of(base.begin(), base.end(), [&](Element x) { return g(x) == x; })) stab.push_back(&g);
    std::vector<std::uint8_t> in(n_);
    std::vector<Element> queue{b};
    in[b] = 1;
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (const Permutation* g : stab) {
        const Element w = (*g)(queue[i]);
        if (!in[w]) {
          in[w] = 1;
          queue.push_back(w);
        }
      }
    return in;
  }

  std::optional<Permutation> find_isomorphism(const std::vector<Element>& left, const std::vector<Element>& right) const {
    Colouring colours = individualized(left, right);
    return search(std::move(colours), left.size() + 1);
  }

  std::optional<Permutation> search(Colouring colours, std::size_t fresh) const {
    refiner_.refine(colours);
    if (!refiner_.balanced(colours)) return std::nullopt;
    const std::size_t cell = refiner_.target_cell(colours);
    if (cell == Refiner::npos) {
      std::vector<Element> images(n_);
      std::map<std::size_t, Element> right_of;
      for (Element v = 0; v < n_; ++v) right_of[colours[v + n_]] = v;
      for (Element v = 0; v < n_; ++v) images[v] = right_of.at(colours[v]);
      Permutation p(std::move(images));
      if (is_graph_automorphism(graph_, p)) return p;
      return std::nullopt;
    }
    Element x = 0;
    while (colours[x] != cell) ++x;
    const std::size_t marker = std::max(fresh, *std::max_element(colours.begin(), colours.end()) + 1);
    for (Element y = 0; y < n_; ++y) {
      if (colours[y + n_] != cell) continue;
      Colouring next = colours;
      next[x] = marker;
      next[y + n_] = marker;
      if (auto p = search(std::move(next), marker + 1)) return p;
    }
    return std::nullopt;
  }

  const CayleyGraph& graph_;
  Refiner refiner_;
  std::size_t n_;
  std::vector<Permutation> generators_;
};

}  // namespace

AutGroup full_aut(const CayleyGraph& graph, const SearchLimits& limits) {
  if (graph.vertex_count() > limits.full_aut_vertex_cap) {
    fail(ErrorKind::ResourceLimit, "full automorphism search is capped at " + std::to_string(limits.full_aut_vertex_cap) +
                                       " vertices, graph has " + std::to_string(graph.vertex_count()));
  }
  return FullAutSearch(graph).run(limits);
}

}  // namespace cayley
