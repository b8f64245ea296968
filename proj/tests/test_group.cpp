#include <doctest.h>

#include <set>

#include "cayley/constructors.hpp"
#include "cayley/error.hpp"
#include "cayley/group_spec.hpp"
#include "cayley/presentation.hpp"
#include "oracles.hpp"

using namespace cayley;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an exception");
  return ErrorKind::MalformedInput;
}

std::vector<FiniteGroup> zoo() {
  std::vector<FiniteGroup> out;
  for (std::size_t n : {1, 2, 5, 6, 12}) out.push_back(cyclic(n));
  out.push_back(abelian({4, 2}));
  out.push_back(boolean_group(3));
  out.push_back(quaternion());
  out.push_back(direct_product(quaternion(), cyclic(2)));
  out.push_back(generalized_dicyclic(cyclic(6), 3).group);
  out.push_back(symmetric(3));
  out.push_back(symmetric(4));
  out.push_back(alternating(4));
  out.push_back(dihedral(5));
  out.push_back(*h_group(3).group);
  return out;
}

}  // namespace

TEST_CASE("multiplication, inverses and orders in small groups") {
  const FiniteGroup z5 = cyclic(5);
  CHECK(z5.mul(2, 4) == 1);
  CHECK(z5.inverse(2) == 3);
  CHECK(z5.inverse(z5.identity()) == z5.identity());

  const FiniteGroup q = quaternion();
  const Element i = *q.find("i"), j = *q.find("j"), k = *q.find("k");
  CHECK(q.mul(i, j) == k);
  CHECK(q.inverse(i) == *q.find("-i"));
  CHECK(q.element_order(*q.find("-1")) == 2);
  CHECK(q.element_order(i) == 4);
  CHECK(q.mul(q.mul(i, j), k) == *q.find("-1"));
  for (Element g = 0; g < q.order(); ++g) CHECK(q.mul(q.identity(), g) == g);

  CHECK(cyclic(6).element_order(2) == 3);
  CHECK(kind_of([&] { (void)z5.mul(5, 0); }) == ErrorKind::MalformedInput);
  CHECK(kind_of([&] { (void)z5.inverse(9); }) == ErrorKind::MalformedInput);
}

TEST_CASE("quaternion structure") {
  const FiniteGroup q = quaternion();
  std::vector<Element> order_two, centre;
  for (Element g = 0; g < 8; ++g) {
    if (q.element_order(g) == 2) order_two.push_back(g);
    bool central = true;
    for (Element h = 0; h < 8; ++h) central = central && q.commute(g, h);
    if (central) centre.push_back(g);
  }
  CHECK(order_two == std::vector<Element>{*q.find("-1")});
  CHECK(centre == std::vector<Element>{q.identity(), *q.find("-1")});
}

TEST_CASE("cyclic and abelian constructors") {
  CHECK(cyclic(1).order() == 1);
  const FiniteGroup z4 = cyclic(4);
  int twos = 0;
  for (Element g = 0; g < 4; ++g) twos += z4.element_order(g) == 2;
  CHECK(twos == 1);
  CHECK(cyclic(5).element_order(1) == 5);
  CHECK(kind_of([] { (void)cyclic(0); }) == ErrorKind::MalformedInput);

  CHECK(abelian({}).order() == 1);
  const FiniteGroup b = abelian({2, 2, 2});
  CHECK(b.order() == 8);
  for (Element g = 0; g < 8; ++g) CHECK(b(g, g) == b.identity());
  const FiniteGroup a42 = abelian({4, 2});
  bool has_four = false;
  for (Element g = 0; g < 8; ++g) has_four = has_four || a42.element_order(g) == 4;
  CHECK(has_four);
  CHECK(a42.is_abelian());
}

TEST_CASE("direct products") {
  const FiniteGroup v = direct_product(cyclic(2), cyclic(2));
  CHECK(v.order() == 4);
  for (Element g = 0; g < 4; ++g) CHECK(v(g, g) == v.identity());

  const FiniteGroup q2 = direct_product(quaternion(), cyclic(2));
  CHECK(q2.order() == 16);
  CHECK(involutions_and_identity(q2).size() == 4);

  const FiniteGroup z33 = direct_product(cyclic(3), cyclic(3));
  CHECK(z33.is_abelian());
  for (Element g = 1; g < 9; ++g) CHECK(z33.element_order(g) == 3);

  // Projections are homomorphisms: index (g, h) = g * |H| + h.
  const FiniteGroup s3 = symmetric(3), z4 = cyclic(4);
  const FiniteGroup p = direct_product(s3, z4);
  for (Element x = 0; x < p.order(); ++x)
    for (Element y = 0; y < p.order(); ++y) {
      CHECK(p(x, y) / 4 == s3(x / 4, y / 4));
      CHECK(p(x, y) % 4 == z4(x % 4, y % 4));
    }
}

TEST_CASE("generalized dicyclic constructor") {
  const DicyclicGroup d4 = generalized_dicyclic(cyclic(4), 2);
  CHECK(d4.group.order() == 8);
  CHECK(oracle::isomorphism_by_permutations(d4.group, quaternion()).has_value());

  const DicyclicGroup d6 = generalized_dicyclic(cyclic(6), 3);
  CHECK(d6.group.order() == 12);
  CHECK_FALSE(d6.group.is_abelian());
  CHECK_NOTHROW(validate_witness(d6.group, d6.witness));
  CHECK(d6.group.element_order(d6.witness.x) == 4);
  CHECK(d6.witness.subgroup.size() == 6);

  CHECK(kind_of([] { (void)generalized_dicyclic(cyclic(6), 2); }) == ErrorKind::MalformedInput);
  CHECK(kind_of([] { (void)generalized_dicyclic(boolean_group(2), 1); }) == ErrorKind::DegenerateInput);
  CHECK(kind_of([] { (void)generalized_dicyclic(symmetric(3), 1); }) == ErrorKind::MalformedInput);
}

TEST_CASE("witness validation rejects broken witnesses") {
  const FiniteGroup q = quaternion();
  const Element i = *q.find("i"), j = *q.find("j");
  const Element ij[] = {i};
  DicyclicWitness w{subgroup_generated(q, ij), j};
  CHECK_NOTHROW(validate_witness(q, w));
  DicyclicWitness inside{w.subgroup, i};
  CHECK(kind_of([&] { validate_witness(q, inside); }) == ErrorKind::MalformedInput);
  DicyclicWitness small{{q.identity(), *q.find("-1")}, j};
  CHECK(kind_of([&] { validate_witness(q, small); }) == ErrorKind::MalformedInput);

  // In S3 the only candidates x have order 2.
  const FiniteGroup s3 = symmetric(3);
  const Element rot = *s3.find("(0 1 2)"), flip = *s3.find("(0 1)");
  const Element rg[] = {rot};
  CHECK(kind_of([&] { validate_witness(s3, {subgroup_generated(s3, rg), flip}); }) == ErrorKind::MalformedInput);
}

TEST_CASE("subgroup closure") {
  const FiniteGroup q = quaternion();
  const Element i[] = {*q.find("i")};
  const auto sub = subgroup_generated(q, i);
  std::set<Element> expect{q.identity(), *q.find("-1"), *q.find("i"), *q.find("-i")};
  CHECK(std::set<Element>(sub.begin(), sub.end()) == expect);
  CHECK(subgroup_generated(q, std::span<const Element>{}) == std::vector<Element>{q.identity()});

  const HGroup h = h_group(3);
  const Element gens[] = {(*h.group)(h.s[0], h.s[1]), h.s[2], h.epsilon};
  CHECK(subgroup_generated(*h.group, gens).size() == 8);
}

TEST_CASE("axioms are enforced at construction") {
  // Not a Latin square.
  CHECK(kind_of([] { FiniteGroup({0, 1, 1, 1}, {"a", "b"}); }) == ErrorKind::MalformedInput);
  // Latin square without identity: x y = -x - y mod 3.
  CHECK(kind_of([] { FiniteGroup({0, 2, 1, 2, 1, 0, 1, 0, 2}, {"a", "b", "c"}); }) == ErrorKind::MalformedInput);
  // Latin square with identity 0 but not associative (order 5 loop).
  const std::vector<Element> loop = {0, 1, 2, 3, 4,  //
                                     1, 0, 3, 4, 2,  //
                                     2, 4, 0, 1, 3,  //
                                     3, 2, 4, 0, 1,  //
                                     4, 3, 1, 2, 0};
  CHECK(kind_of([&] { FiniteGroup(loop, {"e", "a", "b", "c", "d"}); }) == ErrorKind::MalformedInput);
  CHECK(kind_of([] { FiniteGroup({0, 1, 1}, {"a", "b"}); }) == ErrorKind::MalformedInput);
}

TEST_CASE("invariants hold on every constructed group") {
  for (const FiniteGroup& g : zoo()) {
    CAPTURE(g.order());
    const std::size_t n = g.order();
    for (Element a = 0; a < n; ++a) {
      std::set<Element> row, col;
      for (Element b = 0; b < n; ++b) {
        row.insert(g(a, b));
        col.insert(g(b, a));
      }
      CHECK(row.size() == n);
      CHECK(col.size() == n);
      CHECK(g(g.identity(), a) == a);
      CHECK(g(a, g.identity()) == a);
      CHECK(g(a, g.inverse(a)) == g.identity());
      CHECK(n % g.element_order(a) == 0);
    }
  }
}

TEST_CASE("element names and indices") {
  const FiniteGroup s4 = symmetric(4);
  CHECK(s4.order() == 24);
  CHECK(alternating(4).order() == 12);
  CHECK(dihedral(4).order() == 8);
  CHECK(s4.parse_element("(0 1 2 3)") == *s4.find("(0 1 2 3)"));
  CHECK(s4.parse_element("5") == 5);
  CHECK(kind_of([&] { (void)s4.parse_element("(0 9)"); }) == ErrorKind::MalformedInput);
  CHECK(s4.element_order(*s4.find("(0 1 2 3)")) == 4);
}

TEST_CASE("relabelling keeps the group and changes the digest") {
  const FiniteGroup q = quaternion();
  const std::vector<Element> perm = {3, 0, 7, 1, 6, 2, 5, 4};
  const FiniteGroup r = relabelled(q, perm);
  CHECK(r.order() == 8);
  CHECK(r.digest() != q.digest());
  for (Element a = 0; a < 8; ++a)
    for (Element b = 0; b < 8; ++b) CHECK(r(perm[a], perm[b]) == perm[q(a, b)]);
  CHECK(quaternion().digest() == q.digest());
}

TEST_CASE("small isomorphism search") {
  CHECK(find_isomorphism(generalized_dicyclic(cyclic(4), 2).group, quaternion()).has_value());
  CHECK_FALSE(find_isomorphism(dihedral(4), quaternion()).has_value());
  CHECK_FALSE(find_isomorphism(cyclic(6), symmetric(3)).has_value());
  CHECK(find_isomorphism(cyclic(6), direct_product(cyclic(2), cyclic(3))).has_value());
  CHECK(kind_of([] { (void)find_isomorphism(cyclic(16), cyclic(16)); }) == ErrorKind::ResourceLimit);
}

TEST_CASE("group spec language") {
  CHECK(parse_group_spec("cyclic:5").group->order() == 5);
  CHECK(parse_group_spec("abelian:4,2").group->order() == 8);
  CHECK(parse_group_spec("abelian:").group->order() == 1);
  CHECK(parse_group_spec("q8").group->same_table(quaternion()));
  const GroupSpec d = parse_group_spec("dic:abelian:6@3");
  CHECK(d.group->order() == 12);
  REQUIRE(d.witness);
  CHECK_NOTHROW(validate_witness(*d.group, *d.witness));
  CHECK(parse_group_spec("product:(q8)x(abelian:2)").group->order() == 16);
  CHECK(parse_group_spec("product:(cyclic:2)x(cyclic:3)x(cyclic:5)").group->order() == 30);
  const GroupSpec h = parse_group_spec("hgroup:4");
  CHECK(h.group->order() == 32);
  CHECK(h.distinguished.size() == 4);
  CHECK(parse_group_spec("presentation:<a, b | a^3, b^2, (a b)^2>").group->order() == 6);

  for (const char* bad : {"", "cyclic", "cyclic:", "cyclic:0", "torus:3", "product:(q8)", "dic:cyclic:5@2",
                          "cyclic:5 extra", "presentation:<a | a^3"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_group_spec(bad), Error);
  }
  try {
    (void)parse_group_spec("cyclic:4x");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 8);
  }
}

TEST_CASE("canonical specs round-trip through describe") {
  for (const char* text : {"cyclic:7", "abelian:4,2", "q8", "dic:cyclic:6@3", "product:(q8)x(boolean:1)", "hgroup:3",
                           "sym:3", "presentation:<a | a^4>"}) {
    CAPTURE(text);
    const GroupSpec first = parse_group_spec(text);
    const GroupSpec again = parse_group_spec(first.canonical);
    CHECK(again.group->same_table(*first.group));
    CHECK(describe(first) == describe(again));
    CHECK(describe(first).find("order: " + std::to_string(first.group->order())) != std::string::npos);
  }
}
