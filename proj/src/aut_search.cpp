#include "cayley/aut_search.hpp"

#include <algorithm>
#include <iostream>

#include "cayley/constructors.hpp"
#include "cayley/error.hpp"

namespace cayley {

const char* to_string(AutKind kind) {
  switch (kind) {
    case AutKind::Labelled: return "labelled";
    case AutKind::Colour: return "colour";
    case AutKind::Full: return "full";
  }
  return "unknown";
}

bool AutGroup::contains(const Permutation& p) const {
  if (!elements) fail(ErrorKind::PreconditionViolation, "membership test needs an explicitly stored group");
  return std::binary_search(elements->begin(), elements->end(), p);
}

bool Stabilizer::contains(const Permutation& p) const { return std::binary_search(elements.begin(), elements.end(), p); }

Permutation left_translation(const FiniteGroup& group, Element g) {
  auto row = group.row(g);
  return Permutation(std::vector<Element>(row.begin(), row.end()));
}

AutGroup left_translations(const CayleyGraph& graph) {
  const FiniteGroup& g = graph.group();
  AutGroup out;
  out.kind = AutKind::Labelled;
  out.base_graph_digest = graph.digest();
  out.order = g.order();
  std::vector<Permutation> all;
  for (Element h = 0; h < g.order(); ++h) all.push_back(left_translation(g, h));
  for (Element s : graph.genset().elements()) out.generators.push_back(all[s]);
  std::sort(all.begin(), all.end());
  out.elements = std::move(all);
  return out;
}

namespace {

constexpr Element kNone = static_cast<Element>(-1);

class XiSearch {
 public:
  XiSearch(const CayleyGraph& graph, std::size_t budget)
      : group_(graph.group()), gens_(graph.genset().elements()), budget_(budget) {
    const std::size_t n = group_.order();
    image_.assign(n, kNone);
    used_.assign(n, 0);
    domain_.assign(n, Domain{});
    for (Element s : gens_) inverse_.push_back(group_.inverse(s));

    // Breadth-first order from the identity, generators ascending.
    std::vector<std::uint8_t> seen(n);
    order_.push_back(group_.identity());
    seen[group_.identity()] = 1;
    for (std::size_t i = 0; i < order_.size(); ++i)
      for (Element s : gens_) {
        const Element v = group_(order_[i], s);
        if (!seen[v]) {
          seen[v] = 1;
          order_.push_back(v);
        }
      }
  }

  std::vector<Permutation> run() {
    if (assign(group_.identity(), group_.identity())) descend(0);
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

 private:
  struct Domain {
    std::array<Element, 2> cand{kNone, kNone};
    std::uint8_t count = 3;  // 3 = unconstrained
  };

  struct TrailEntry {
    Element vertex;
    bool assignment;
    Domain old;
  };

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const TrailEntry& t = trail_.back();
      if (t.assignment) {
        used_[image_[t.vertex]] = 0;
        image_[t.vertex] = kNone;
      } else {
        domain_[t.vertex] = t.old;
      }
      trail_.pop_back();
    }
  }

  // Assigns v -> w and propagates forced images; false on contradiction.
  bool assign(Element v, Element w) {
    std::vector<std::pair<Element, Element>> pending{{v, w}};
    while (!pending.empty()) {
      auto [u, img] = pending.back();
      pending.pop_back();
      if (image_[u] != kNone) {
        if (image_[u] != img) return false;
        continue;
      }
      if (used_[img]) return false;
      if (++nodes_ > budget_) {
        fail(ErrorKind::ResourceLimit, "colour-automorphism search exceeded its node budget of " + std::to_string(budget_));
      }
      image_[u] = img;
      used_[img] = 1;
      trail_.push_back({u, true, {}});

      for (std::size_t k = 0; k < gens_.size(); ++k) {
        const Element nb = group_(u, gens_[k]);
        const Element a = group_(img, gens_[k]), b = group_(img, inverse_[k]);
        if (image_[nb] != kNone) {
          if (image_[nb] != a && image_[nb] != b) return false;
          continue;
        }
        Domain& d = domain_[nb];
        Domain next;
        next.count = 0;
        auto allow = [&](Element c) {
          if (used_[c]) return;
          if (next.count == 1 && next.cand[0] == c) return;
          if (d.count != 3 && !(d.cand[0] == c && d.count >= 1) && !(d.cand[1] == c && d.count == 2)) return;
          next.cand[next.count++] = c;
        };
        allow(a);
        allow(b);
        if (next.count == 0) return false;
        if (next.count != d.count || next.cand != d.cand) {
          trail_.push_back({nb, false, d});
          d = next;
        }
        if (next.count == 1) pending.emplace_back(nb, next.cand[0]);
      }
    }
    return true;
  }

  void descend(std::size_t pos) {
    while (pos < order_.size() && image_[order_[pos]] != kNone) ++pos;
    if (pos == order_.size()) {
      found_.emplace_back(image_);
      return;
    }
    const Element v = order_[pos];
    const Domain d = domain_[v];
    // The parent of v is assigned, so its domain is constrained.
    for (std::uint8_t i = 0; i < d.count && i < 2; ++i) {
      const Element c = d.cand[i];
      if (used_[c]) continue;
      const std::size_t mark = trail_.size();
      if (assign(v, c)) descend(pos + 1);
      undo(mark);
    }
  }

  const FiniteGroup& group_;
  const std::vector<Element>& gens_;
  std::vector<Element> inverse_;
  std::size_t budget_;
  std::size_t nodes_ = 0;
  std::vector<Element> order_;
  std::vector<Element> image_;
  std::vector<std::uint8_t> used_;
  std::vector<Domain> domain_;
  std::vector<TrailEntry> trail_;
  std::vector<Permutation> found_;
};

}  // namespace

Stabilizer xi_stabilizer(const CayleyGraph& graph, std::size_t node_budget) {
  Stabilizer out;
  out.base_graph_digest = graph.digest();
  out.elements = XiSearch(graph, node_budget).run();
  return out;
}

Stabilizer xi_of_group(const GroupPtr& group, std::size_t node_budget) {
  return xi_stabilizer(build_graph(full_genset(group)), node_budget);
}

AutGroup colour_group(const CayleyGraph& graph, const Stabilizer& xi, const SearchLimits& limits) {
  const FiniteGroup& g = graph.group();
  AutGroup out;
  out.kind = AutKind::Colour;
  out.base_graph_digest = graph.digest();
  out.order = BigOrder(g.order()) * xi.order();
  for (Element s : graph.genset().elements()) out.generators.push_back(left_translation(g, s));
  for (const auto& p : xi.elements)
    if (!p.is_identity()) out.generators.push_back(p);
  if (out.order <= limits.explicit_cap) {
    std::vector<Permutation> all;
    for (Element h = 0; h < g.order(); ++h) {
      const Permutation t = left_translation(g, h);
      for (const auto& p : xi.elements) all.push_back(t * p);
    }
    std::sort(all.begin(), all.end());
    out.elements = std::move(all);
  }
  return out;
}

Permutation eta_map(const FiniteGroup& group) {
  std::vector<Element> images(group.order());
  for (Element g = 0; g < group.order(); ++g) images[g] = group.inverse(g);
  return Permutation(std::move(images));
}

Permutation psi_map(const FiniteGroup& group, const DicyclicWitness& witness) {
  validate_witness(group, witness);
  std::vector<Element> images(group.order());
  for (Element g = 0; g < group.order(); ++g) {
    const bool in_a = std::binary_search(witness.subgroup.begin(), witness.subgroup.end(), g);
    images[g] = in_a ? g : group.inverse(g);
  }
  return Permutation(std::move(images));
}

Permutation phi_eps(const FiniteGroup& q8, const std::array<int, 3>& eps) {
  static const FiniteGroup reference = quaternion();
  if (!q8.same_table(reference) || q8.names() != reference.names()) {
    fail(ErrorKind::MalformedInput, "phi_eps is defined on the named quaternion group only");
  }
  for (int e : eps)
    if (e != 1 && e != -1) fail(ErrorKind::MalformedInput, "phi_eps signs must be +1 or -1");
  // Index 2a + sign bit for axis a in {1, i, j, k}.
  std::vector<Element> images(8);
  for (Element g = 0; g < 8; ++g) {
    const std::size_t axis = g / 2;
    images[g] = (axis == 0 || eps[axis - 1] == 1) ? g : q8.inverse(g);
  }
  return Permutation(std::move(images));
}

bool is_colour_automorphism(const CayleyGraph& graph, const Permutation& p) {
  const FiniteGroup& g = graph.group();
  if (p.size() != g.order()) return false;
  for (Element v = 0; v < g.order(); ++v)
    for (Element s : graph.genset().elements()) {
      const Element img = p(g(v, s));
      if (img != g(p(v), s) && img != g(p(v), g.inverse(s))) return false;
    }
  return true;
}

bool is_graph_automorphism(const CayleyGraph& graph, const Permutation& p) {
  if (p.size() != graph.vertex_count()) return false;
  for (Element v = 0; v < graph.vertex_count(); ++v)
    for (Element w : graph.neighbours(v))
      if (!graph.adjacent(p(v), p(w))) return false;
  return true;
}

bool is_labelled_automorphism(const CayleyGraph& graph, const Permutation& p) {
  const FiniteGroup& g = graph.group();
  if (p.size() != g.order()) return false;
  for (Element v = 0; v < g.order(); ++v)
    for (Element s : graph.genset().elements())
      if (p(g(v, s)) != g(p(v), s)) return false;
  return true;
}

std::string PropagationCheck::diagnosis() const {
  if (!premise) return "premise fails: some phi fixing S0 moves an element of S u S.S0";
  if (!conclusion) return "conclusion fails: some phi fixing S0 is not the identity";
  return "premise and conclusion hold";
}

PropagationCheck check_propagation_detail(const CayleyGraph& graph_t, const GeneratingSet& s, const std::vector<Element>& s0) {
  if (!s.subset_of(graph_t.genset())) fail(ErrorKind::MalformedInput, "S must be a subset of the graph's generating set T");
  const FiniteGroup& g = graph_t.group();
  for (Element e : s0) g.check_element(e);

  std::vector<Element> region = s.elements();
  for (Element a : s.elements())
    for (Element b : s0) region.push_back(g(a, b));

  const Stabilizer xi = xi_stabilizer(graph_t);
  PropagationCheck out{true, true};
  for (const auto& phi : xi.elements) {
    const bool fixes_s0 = std::all_of(s0.begin(), s0.end(), [&](Element e) { return phi(e) == e; });
    if (!fixes_s0) continue;
    if (!std::all_of(region.begin(), region.end(), [&](Element e) { return phi(e) == e; })) out.premise = false;
    if (!phi.is_identity()) out.conclusion = false;
  }
  if (!out.holds()) std::clog << "check_propagation: " << out.diagnosis() << "\n";
  return out;
}

bool check_propagation(const CayleyGraph& graph_t, const GeneratingSet& s, const std::vector<Element>& s0) {
  const PropagationCheck c = check_propagation_detail(graph_t, s, s0);
  return c.premise && c.conclusion;
}

}  // namespace cayley
