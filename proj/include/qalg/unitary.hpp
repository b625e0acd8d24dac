#pragma once

// Normalized units V(KG) and unitary units V_*(KG): brute-force enumeration,
// the structured product Z * Q_8, and the order formula 4 |K|^{2^n} for
// generalized quaternion groups.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "qalg/group_algebra.hpp"
#include "qalg/kernels.hpp"

namespace qalg {

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 26;

struct EnumOptions {
  std::uint64_t budget = kDefaultBudget;  // max 2^{k|G|} candidate vectors
  unsigned workers = 0;                   // 0 = default_workers()
  std::optional<kernels::Isa> isa;        // unset = best_isa()
};

// Byte key of a coefficient vector; used for set membership.
std::string coeff_key(std::span<const FieldElement> c);

// A finite set of algebra elements in a fixed order with a key index.
// Subgroups produced by subgroup() share the parent's storage.
class UnitGroup {
 public:
  UnitGroup(AlgebraPtr algebra, std::vector<Coeffs> elements);
  UnitGroup(AlgebraPtr algebra, std::vector<FieldElement> flat);

  const AlgebraPtr& algebra() const { return storage_->algebra; }
  std::size_t size() const { return members_.size(); }

  std::span<const FieldElement> coeffs(std::size_t i) const {
    const std::size_t d = storage_->algebra->dim();
    return {storage_->flat.data() + std::size_t{members_[i]} * d, d};
  }
  AlgebraElement element(std::size_t i) const;

  std::optional<std::size_t> find(std::span<const FieldElement> c) const;
  std::optional<std::size_t> find(const AlgebraElement& w) const { return find(std::span(w.coeffs())); }
  bool contains(const AlgebraElement& w) const { return find(w).has_value(); }

  // Positions are indices into this group.
  UnitGroup subgroup(const std::vector<std::size_t>& positions) const;

  bool same_set(const UnitGroup& other) const;
  bool is_subset_of(const UnitGroup& other) const;

 private:
  struct Storage {
    AlgebraPtr algebra;
    std::vector<FieldElement> flat;
    std::unordered_map<std::string, std::uint32_t> index;
  };
  UnitGroup() = default;
  void init(AlgebraPtr algebra, std::vector<FieldElement> flat);

  std::shared_ptr<const Storage> storage_;
  std::vector<std::uint32_t> members_;
  // storage position -> local index, -1 when absent. Empty for the full set.
  std::shared_ptr<const std::vector<std::int32_t>> local_;
};

// Called once per found element, in ascending candidate order.
using UnitSink = std::function<void(std::span<const FieldElement>)>;

// Candidates run over all coefficient vectors of augmentation 1 in ascending
// order of the concatenated bit-vector (coefficient 0 most significant).
// Throws BudgetExceededError when 2^{k|G|} > budget. Returns the count.
std::uint64_t for_each_unitary(const AlgebraPtr& algebra, const EnumOptions& opts, const UnitSink& sink);
std::uint64_t for_each_normalized_unit(const AlgebraPtr& algebra, const EnumOptions& opts, const UnitSink& sink);

UnitGroup enumerate_unitary_units(const AlgebraPtr& algebra, const EnumOptions& opts = {});
UnitGroup enumerate_normalized_units(const AlgebraPtr& algebra, const EnumOptions& opts = {});

// 4 * |K|^{2^n}; throws UsageError when n < 2 or the value overflows 64 bits.
std::uint64_t unitary_order_formula(int n, const FieldSpec& field);

struct CenterParams {
  FieldElement r, s, t, u;
};

bool is_q8(const GroupSpec& g);

// 1 + r + s x + r x^2 + s x^3 + t y + u xy + t x^2 y + u x^3 y.
AlgebraElement center_element(const AlgebraPtr& q8_algebra, const CenterParams& p);
// All |K|^4 template elements, in (r, s, t, u) lexicographic order.
std::vector<AlgebraElement> center_template(const AlgebraPtr& q8_algebra);

// {center_element(p) * g}, deduplicated and sorted like the brute-force output.
UnitGroup structured_unitary_generation(const AlgebraPtr& q8_algebra);

// The group elements g_i as units of augmentation 1, in listing order.
UnitGroup group_basis_units(const AlgebraPtr& algebra);

// {v in U : g v = v g}; throws UsageError when g is not in U.
std::vector<AlgebraElement> centralizer(const UnitGroup& u, const AlgebraElement& g);

}  // namespace qalg
