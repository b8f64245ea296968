#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace cayley::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitResource = 3;

enum class Format { Table, Json, Csv };

struct RunConfig {
  std::string command;     // group, xi, aut, index, verify, report
  std::string subcommand;  // describe/classify for group; thm2/quant/example/lemma/all for verify
  std::string group;
  std::string presentation;
  std::string presentation_file;
  std::string gens;
  bool full = false;
  std::size_t radius = 1;

  std::size_t vertex_cap = 64;
  std::size_t explicit_cap = 10'000;
  std::size_t coset_cap = 200'000;
  std::size_t node_budget = 50'000'000;
  std::size_t budget = 1'000'000;

  Format format = Format::Table;
  std::optional<std::string> cache_path;
  bool no_cache = false;
  std::uint64_t seed = 1;

  bool exhaustive = false;
  bool sampled = false;
  bool with_index = false;
  bool list_elements = false;
  std::string emit_dot;
  std::string family;
  std::string name;
  std::size_t boolean_rank = 1;
};

/// Parses argv-style arguments (without the program name) and runs the command.
/// Returns one of the exit codes above; diagnostics go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cayley::cli
