#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace qalg::cli {

enum ExitCode : int { kOk = 0, kClaimFailure = 1, kUsage = 2, kBudget = 3 };

struct RunConfig {
  std::string command;  // field-info | enumerate-unitary | analyze-structure | matrix-dump | verify-paper
  int k = 1;
  std::optional<std::string> modulus;
  std::string group = "q8";
  std::optional<std::string> group_file;
  std::string mode = "brute";  // brute | structured
  std::uint64_t budget = 0;    // 0 = library default
  bool allow_large = false;
  std::optional<std::string> out;
  bool count_only = false;
  std::string format = "text";  // text | json
  std::uint64_t seed = 1;
  unsigned workers = 0;
  std::string element;  // matrix-dump
  bool blocks = false;
};

// Executes one command. Diagnostics go to err; the report goes to out.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses argv into a RunConfig and runs it.
int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace qalg::cli
