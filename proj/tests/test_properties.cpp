#include <doctest.h>

#include "cayley/constructors.hpp"
#include "properties.hpp"

TEST_CASE("structural invariants on 200 random pairs") {
  const auto pairs = props::random_pairs(200, 2024);
  props::Violations v;
  for (const auto& p : pairs) props::check_pair(p, v);
  for (const auto& m : v.messages) MESSAGE(m);
  CHECK(v.messages.empty());
}

TEST_CASE("random pairs are reproducible") {
  const auto a = props::random_pairs(20, 5);
  const auto b = props::random_pairs(20, 5);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].group_text == b[i].group_text);
    CHECK(a[i].s.elements() == b[i].s.elements());
    CHECK(a[i].s.subset_of(a[i].t));
  }
}

TEST_CASE("generator-based subgroup test agrees with pairwise closure") {
  using namespace cayley;
  GroupPtr q = share(quaternion());
  std::vector<Permutation> xi = xi_of_group(q).elements;
  CHECK(props::is_subgroup(xi));
  CHECK(is_group(xi));
  xi.pop_back();
  CHECK_FALSE(props::is_subgroup(xi));
  CHECK_FALSE(is_group(xi));
  std::vector<Permutation> pair = {Permutation::identity(5), Permutation({1, 2, 3, 4, 0})};
  CHECK_FALSE(props::is_subgroup(pair));
  CHECK_FALSE(is_group(pair));
}
