#pragma once

// Batched inner loops of the unitary enumeration. Each kernel has a scalar
// reference version and an AVX2 version; both must agree lane for lane.
//
// Candidates are passed structure-of-arrays: coefficient h of lane l lives at
// soa[h * lanes + l]. Coefficients are single bytes, so these kernels serve
// fields with k <= 8.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace qalg {
class GroupAlgebra;
}

namespace qalg::kernels {

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa);
bool isa_supported(Isa isa);
// Widest supported ISA, unless QALG_KERNEL=scalar|avx2 overrides it.
Isa best_isa();

inline constexpr std::size_t kAvx2Lanes = 32;

struct UnitaryPlan {
  int k = 1;
  std::uint8_t reduce = 0;  // modulus without its leading term
  std::uint32_t n = 0;      // group order
  std::vector<std::uint8_t> mul_table;
  // One representative g per {g, g^{-1}}: the coefficient of g in w*w^* equals
  // that of g^{-1}, so the others need no check.
  std::vector<std::uint32_t> rows;
  std::vector<std::uint8_t> targets;    // 1 at the identity, else 0
  std::vector<std::uint32_t> partner;   // rows.size() x n, index of g^{-1} h
};

// Requires field degree <= 8.
UnitaryPlan make_unitary_plan(const GroupAlgebra& algebra);

// out[l] = 1 iff lane l satisfies w * w^* = 1.
void unitary_mask_scalar(const UnitaryPlan& plan, std::span<const std::uint8_t> soa, std::size_t lanes,
                         std::span<std::uint8_t> out);
void unitary_mask_avx2(const UnitaryPlan& plan, std::span<const std::uint8_t> soa, std::size_t lanes,
                       std::span<std::uint8_t> out);
void unitary_mask(Isa isa, const UnitaryPlan& plan, std::span<const std::uint8_t> soa, std::size_t lanes,
                  std::span<std::uint8_t> out);

// Lane-wise GF(2^k) product by shift-and-add.
void gf_mul_bytes_scalar(int k, std::uint32_t modulus, std::span<const std::uint8_t> a,
                         std::span<const std::uint8_t> b, std::span<std::uint8_t> out);
void gf_mul_bytes_avx2(int k, std::uint32_t modulus, std::span<const std::uint8_t> a,
                       std::span<const std::uint8_t> b, std::span<std::uint8_t> out);

namespace detail {
void unitary_mask_scalar_range(const UnitaryPlan& plan, const std::uint8_t* soa, std::size_t stride,
                               std::size_t begin, std::size_t end, std::uint8_t* out);
}

}  // namespace qalg::kernels
