#pragma once

// End-to-end check of the structure theorems for V_*(F_{2^k} Q_8): order
// formula, center, Z * Q_8 = V_*, the C_2^{4k-1} x Q_8 splitting, the
// Hamiltonian property and the matrix representation identities.

#include <cstdint>
#include <string>
#include <vector>

#include "qalg/unitary.hpp"

namespace qalg {

enum class ClaimStatus { pass, fail, skip };

struct ClaimResult {
  std::string id;
  ClaimStatus status = ClaimStatus::skip;
  std::string measured;
};

struct VerifyOptions {
  int k = 1;
  unsigned workers = 0;
  std::uint64_t budget = kDefaultBudget;
  std::uint64_t seed = 1;
  std::size_t random_pairs = 1000;
};

// Claims run in a fixed order; the output depends only on the options'
// k, budget, seed and random_pairs, never on the worker count.
std::vector<ClaimResult> verify_paper(const VerifyOptions& opts);

std::string format_claims(const VerifyOptions& opts, const std::vector<ClaimResult>& claims);
bool all_passed(const std::vector<ClaimResult>& claims);

}  // namespace qalg
