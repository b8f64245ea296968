#include <doctest.h>

#include "cayley/constructors.hpp"
#include "cayley/error.hpp"
#include "cayley/genset.hpp"
#include "cayley/presentation.hpp"

using namespace cayley;

namespace {

GeneratingSet gens_of(const GroupPtr& g, std::initializer_list<Element> elems, bool symmetrize = true) {
  const std::vector<Element> v(elems);
  return make_genset(g, v, symmetrize);
}

}  // namespace

TEST_CASE("make_genset validates and symmetrizes") {
  GroupPtr z5 = share(cyclic(5));
  CHECK(gens_of(z5, {1}).elements() == std::vector<Element>{1, 4});

  GroupPtr q = share(quaternion());
  const Element i = *q->find("i"), j = *q->find("j");
  const GeneratingSet sq = gens_of(q, {i, j});
  CHECK(sq.size() == 4);
  CHECK(sq.to_string() == "{i, -i, j, -j}");

  GroupPtr z4 = share(cyclic(4));
  try {
    (void)gens_of(z4, {2});
    FAIL("expected not-generating");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotGenerating);
    CHECK(std::string(e.what()).find("2") != std::string::npos);
  }

  // The identity is an error unless symmetrizing, which drops it.
  CHECK_THROWS_AS(gens_of(z5, {0, 1, 4}, false), Error);
  CHECK(gens_of(z5, {0, 1}).elements() == std::vector<Element>{1, 4});
  // Without symmetrize a non-symmetric set is rejected.
  CHECK_THROWS_AS(gens_of(z5, {1}, false), Error);
  CHECK_THROWS_AS(gens_of(z5, {7}), Error);
}

TEST_CASE("colour classes") {
  GroupPtr z6 = share(cyclic(6));
  const GeneratingSet s = gens_of(z6, {1, 3});
  CHECK(s.elements() == std::vector<Element>{1, 3, 5});
  CHECK(s.colour_keys() == std::vector<Element>{1, 3});
  CHECK(s.colour_count() == 2);
}

TEST_CASE("element lists parse names, indices and parenthesized names") {
  GroupPtr s4 = share(symmetric(4));
  const auto v = parse_elements(*s4, "(0 1 2 3), (0 1), 0");
  REQUIRE(v.size() == 3);
  CHECK(v[0] == *s4->find("(0 1 2 3)"));
  CHECK(v[2] == 0);
  GroupPtr p = share(direct_product(quaternion(), cyclic(2)));
  CHECK(parse_elements(*p, "(i,1),(j,0)").size() == 2);
  CHECK_THROWS_AS(parse_elements(*p, "(i,1),(q,0)"), Error);
}

TEST_CASE("balls") {
  GroupPtr z5 = share(cyclic(5));
  const GeneratingSet s = gens_of(z5, {1});
  CHECK(ball(s, 1) == s);
  CHECK(ball(s, 2).elements() == std::vector<Element>{1, 2, 3, 4});
  CHECK(saturation_radius(s) == 2);

  GroupPtr q = share(quaternion());
  const GeneratingSet sq = gens_of(q, {*q->find("i"), *q->find("j")});
  CHECK(ball(sq, 2).size() == 7);

  // Monotone in k and stabilizing at G \ {1}.
  GroupPtr z12 = share(cyclic(12));
  const GeneratingSet t = gens_of(z12, {1});
  std::size_t prev = 0;
  for (std::size_t k = 1; k <= 8; ++k) {
    const GeneratingSet b = ball(t, k);
    CHECK(b.size() >= prev);
    CHECK(ball(t, k).subset_of(ball(t, k + 1)));
    prev = b.size();
  }
  CHECK(ball(t, 6).size() == 11);
  CHECK(saturation_radius(t) == 6);
}

TEST_CASE("full generating set") {
  CHECK(full_genset(share(cyclic(2))).elements() == std::vector<Element>{1});
  CHECK(full_genset(share(quaternion())).size() == 7);
  CHECK(full_genset(share(cyclic(5))).elements() == std::vector<Element>{1, 2, 3, 4});
  try {
    (void)full_genset(share(cyclic(1)));
    FAIL("expected degenerate input");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegenerateInput);
  }
}

TEST_CASE("Cayley graph structure") {
  GroupPtr z5 = share(cyclic(5));
  const CayleyGraph c5 = build_graph(gens_of(z5, {1}));
  CHECK(c5.vertex_count() == 5);
  CHECK(c5.edge_count() == 5);
  for (Element g = 0; g < 5; ++g) CHECK(c5.neighbours(g).size() == 2);
  CHECK(c5.adjacent(0, 1));
  CHECK_FALSE(c5.adjacent(0, 2));
  CHECK(c5.colour_of_edge(3, 4) == 1);
  CHECK_THROWS_AS(c5.colour_of_edge(0, 2), Error);

  CHECK(build_graph(gens_of(share(cyclic(4)), {1})).edge_count() == 4);
  CHECK(build_graph(full_genset(z5)).edge_count() == 10);

  // Involutions contribute |G|/2 edges each.
  GroupPtr z6 = share(cyclic(6));
  CHECK(build_graph(gens_of(z6, {1, 3})).edge_count() == 6 + 3);

  // Edge {g, h} exists exactly when g^-1 h is in S.
  GroupPtr s4 = share(symmetric(4));
  const GeneratingSet s = make_genset(s4, parse_elements(*s4, "(0 1 2 3),(0 1)"), true);
  const CayleyGraph gr = build_graph(s);
  for (Element g = 0; g < 24; ++g)
    for (Element h = 0; h < 24; ++h) {
      CHECK(gr.adjacent(g, h) == s.contains((*s4)(s4->inverse(g), h)));
      CHECK(gr.adjacent(g, h) == gr.adjacent(h, g));
    }
  CHECK_FALSE(gr.adjacent(0, 0));
}

TEST_CASE("graph exports") {
  GroupPtr z4 = share(cyclic(4));
  const CayleyGraph g = build_graph(gens_of(z4, {1, 2}));
  const std::string dot = g.to_dot();
  CHECK(dot.find("graph") != std::string::npos);
  CHECK(dot.find("color") != std::string::npos);
  const std::string csv = g.to_csv();
  std::size_t lines = 0;
  for (char c : csv) lines += c == '\n';
  CHECK(lines >= g.edge_count());
  CHECK(build_graph(gens_of(z4, {1, 2})).digest() == g.digest());
  CHECK(build_graph(gens_of(z4, {1})).digest() != g.digest());
}
