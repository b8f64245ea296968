#include "cayley/suites.hpp"

#include "cayley/group_spec.hpp"

namespace cayley {

std::vector<std::string> small_suite() {
  std::vector<std::string> out;
  for (int n = 3; n <= 12; ++n) out.push_back("cyclic:" + std::to_string(n));
  for (int k = 1; k <= 4; ++k) out.push_back("boolean:" + std::to_string(k));
  out.insert(out.end(), {
      "abelian:4,2",
      "abelian:3,3",
      "abelian:6,2",
      "q8",
      "product:(q8)x(boolean:1)",
      "product:(q8)x(boolean:2)",
      "dic:cyclic:6@3",
      "dic:abelian:4,2@1",  // y = (0,1)
      "dic:abelian:4,2@4",  // y = (2,0), which gives Q8 x Z/2
      "hgroup:3",
      "hgroup:4",
      "hgroup:5",
      "sym:3",
      "dihedral:4",
      "alt:4",
      "sym:4",
  });
  return out;
}

std::vector<std::string> small_suite_upto(std::size_t max_order) {
  std::vector<std::string> out;
  for (const auto& spec : small_suite())
    if (parse_group_spec(spec).group->order() <= max_order) out.push_back(spec);
  return out;
}

std::vector<QuantInstance> quant_suite() {
  return {
      {"(Z/2)^3 unit vectors", "boolean:3", "1,2,4"},
      {"Z/6 {+-1}", "cyclic:6", "1"},
      {"Z/3 x Z/3 unit vectors", "abelian:3,3", "(0,1),(1,0)"},
      {"Q8 x Z/2 with S_1", "product:(q8)x(boolean:1)", "(i,1),(j,1),(k,1)"},
      {"H_3 with S_3", "hgroup:3", "s1,s2,s3"},
      {"K_1 with T_1", "product:(hgroup:3)x(boolean:1)", "(s1,0),(s2,0),(s3,0),(1,1)"},
      {"H_4 with S_4", "hgroup:4", "s1,s2,s3,s4"},
      {"H_5 with S_5", "hgroup:5", "s1,s2,s3,s4,s5"},
      {"S4 with a 4-cycle and a transposition", "sym:4", "(0 1 2 3),(0 1)"},
  };
}

std::vector<std::string> example_names() {
  return {"product:3,3", "product:3,4", "product:4,5", "q8:1", "q8:2", "h:2", "h:3", "h:4", "h:5", "k:1", "k:2"};
}

}  // namespace cayley
