#pragma once

#include <string>
#include <vector>

namespace cayley {

// Group specs for the xi_G prediction family ("smallsuite").
std::vector<std::string> small_suite();

// Specs in small_suite() whose group order is at most max_order.
std::vector<std::string> small_suite_upto(std::size_t max_order);

struct QuantInstance {
  std::string label;
  std::string group;  // group spec
  std::string gens;   // element list, symmetrized before use
};

// (group, generating set) pairs checked with verify_quantitative.
std::vector<QuantInstance> quant_suite();

// Names accepted by `verify example --name`.
std::vector<std::string> example_names();

}  // namespace cayley
