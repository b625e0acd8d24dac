#include "qalg/error.hpp"
#include "qalg/group_algebra.hpp"
#include "qalg/kernels.hpp"

namespace qalg::kernels {

UnitaryPlan make_unitary_plan(const GroupAlgebra& algebra) {
  const FieldSpec& f = algebra.field();
  const GroupSpec& g = algebra.group();
  if (f.degree() > kTableFieldDegree) throw UsageError("unitary kernels need k <= 8");

  UnitaryPlan plan;
  plan.k = f.degree();
  plan.reduce = static_cast<std::uint8_t>(f.modulus() & f.mask());
  plan.n = static_cast<std::uint32_t>(g.order());
  plan.mul_table = *f.mul_table();
  for (std::uint32_t e = 0; e < plan.n; ++e) {
    if (g.inverse(e) < e) continue;
    plan.rows.push_back(e);
    plan.targets.push_back(e == g.identity() ? 1 : 0);
    for (std::uint32_t h = 0; h < plan.n; ++h) plan.partner.push_back(g.mul(g.inverse(e), h));
  }
  return plan;
}

namespace detail {

void unitary_mask_scalar_range(const UnitaryPlan& plan, const std::uint8_t* soa, std::size_t stride,
                               std::size_t begin, std::size_t end, std::uint8_t* out) {
  const std::uint32_t n = plan.n;
  const std::uint8_t* table = plan.mul_table.data();
  const int k = plan.k;
  for (std::size_t l = begin; l < end; ++l) {
    bool ok = true;
    for (std::size_t r = 0; r < plan.rows.size() && ok; ++r) {
      const std::uint32_t* partner = plan.partner.data() + r * n;
      std::uint8_t acc = 0;
      for (std::uint32_t h = 0; h < n; ++h) {
        const std::uint8_t a = soa[h * stride + l];
        const std::uint8_t b = soa[partner[h] * stride + l];
        acc ^= table[(std::size_t{a} << k) | b];
      }
      ok = acc == plan.targets[r];
    }
    out[l] = ok ? 1 : 0;
  }
}

}  // namespace detail

void unitary_mask_scalar(const UnitaryPlan& plan, std::span<const std::uint8_t> soa, std::size_t lanes,
                         std::span<std::uint8_t> out) {
  detail::unitary_mask_scalar_range(plan, soa.data(), lanes, 0, lanes, out.data());
}

void gf_mul_bytes_scalar(int k, std::uint32_t modulus, std::span<const std::uint8_t> a,
                         std::span<const std::uint8_t> b, std::span<std::uint8_t> out) {
  const std::uint8_t top = static_cast<std::uint8_t>(1u << (k - 1));
  const std::uint8_t mask = static_cast<std::uint8_t>((1u << k) - 1);
  const std::uint8_t reduce = static_cast<std::uint8_t>(modulus & mask);
  for (std::size_t l = 0; l < out.size(); ++l) {
    std::uint8_t x = a[l], acc = 0;
    for (int i = 0; i < k; ++i) {
      if (b[l] & (1u << i)) acc ^= x;
      const bool carry = x & top;
      x = static_cast<std::uint8_t>((x << 1) & mask);
      if (carry) x ^= reduce;
    }
    out[l] = acc;
  }
}

}  // namespace qalg::kernels
