#pragma once

// Abstract-group analysis of an enumerated unit group: center, exponent,
// element-order census, derived subgroup, the Hamiltonian test and the
// constructive splitting V_* = G x Q_8 with G elementary abelian.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qalg/unitary.hpp"

namespace qalg {

// Index-level view of a closed UnitGroup. Products are cached as a full
// Cayley table for groups up to kCayleyCacheLimit elements and computed on
// demand above that. Throws Error when a product leaves the set.
class GroupView {
 public:
  static constexpr std::size_t kCayleyCacheLimit = 1024;

  explicit GroupView(const UnitGroup& u, unsigned workers = 0);

  const UnitGroup& units() const { return units_; }
  std::size_t size() const { return units_.size(); }
  std::uint32_t identity() const { return identity_; }
  unsigned workers() const { return workers_; }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inverse(std::uint32_t a) const { return inverse_[a]; }
  std::uint32_t order(std::uint32_t a) const { return order_[a]; }

  // Greedy generating set: scanning in order, every element outside the
  // subgroup generated so far is added.
  const std::vector<std::uint32_t>& generators() const { return generators_; }

  // Membership mask of the subgroup generated by gens.
  std::vector<bool> closure(const std::vector<std::uint32_t>& gens) const;

 private:
  std::uint32_t compute_mul(std::uint32_t a, std::uint32_t b) const;

  UnitGroup units_;
  unsigned workers_;
  std::uint32_t identity_ = 0;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> inverse_;
  std::vector<std::uint32_t> order_;
  std::vector<std::uint32_t> generators_;
};

UnitGroup center_of(const UnitGroup& u, unsigned workers = 0);
std::uint64_t exponent_of(const UnitGroup& u);
std::map<std::uint32_t, std::uint64_t> order_census(const UnitGroup& u);
UnitGroup commutator_subgroup(const UnitGroup& u);

inline constexpr std::size_t kHamiltonianPairLimit = 4096;
inline constexpr std::uint64_t kHamiltonianSamples = 1000000;

struct HamiltonianOptions {
  std::size_t pair_limit = kHamiltonianPairLimit;
  std::uint64_t samples = kHamiltonianSamples;
  std::uint64_t seed = 1;
  unsigned workers = 0;
};

struct HamiltonianResult {
  bool hamiltonian = false;
  bool abelian = false;
  bool sampled = false;
  std::uint64_t pairs_checked = 0;
  // (g, h) with h g h^{-1} outside <g>; absent for abelian groups.
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

// Non-abelian and h g h^{-1} in <g> for all g, h. Exhaustive for groups up to
// pair_limit elements, otherwise checks `samples` seeded random pairs.
HamiltonianResult is_hamiltonian(const UnitGroup& u, const HamiltonianOptions& opts = {});

struct Decomposition {
  std::size_t rank_m = 0;                      // G = C_2^m
  std::vector<std::size_t> complement_basis;   // positions in U of a basis of G
  std::vector<std::size_t> q8_indices;         // positions in U of the Q_8 copy
  std::size_t complement_order = 0;
  std::size_t center_order = 0;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

struct DecompositionResult {
  std::optional<Decomposition> value;
  std::string failed_check;  // empty on success
};

// Builds an F_2-basis of Z(U) containing the involution of Q, takes G as the
// span of the remaining basis vectors and checks G n Q = 1, G central and
// G Q = U. Throws UsageError when Q is not a subgroup of U.
DecompositionResult decompose_as_c2m_times_q8(const UnitGroup& u, const std::vector<AlgebraElement>& q);

// Z n Q = {1, q0} with q0 the involution of Q, and Z Q = U as sets.
bool verify_lattice(const UnitGroup& u, const UnitGroup& z, const std::vector<AlgebraElement>& q);
bool verify_lattice(const UnitGroup& u);

struct StructureReport {
  std::uint64_t group_order = 0;
  std::uint64_t center_order = 0;
  bool center_is_elementary_abelian = false;
  std::uint64_t exponent = 0;
  std::map<std::uint32_t, std::uint64_t> order_census;
  std::uint64_t commutator_subgroup_order = 0;
  bool is_hamiltonian = false;
  bool hamiltonian_sampled = false;
  std::optional<Decomposition> decomposition;

  friend bool operator==(const StructureReport&, const StructureReport&) = default;
};

// Decomposition is attempted only for the canonical Q_8 algebra, with the
// group elements as the Q_8 copy.
StructureReport analyze_structure(const UnitGroup& u, const HamiltonianOptions& opts = {});

}  // namespace qalg
