// Compiled with -mavx2; only reached after a runtime CPU check.

#include <immintrin.h>

#include <array>

#include "qalg/kernels.hpp"

namespace qalg::kernels {

namespace {

struct GfConsts {
  int k;
  __m256i top, mask, reduce;
  std::array<__m256i, 8> bit;
};

GfConsts make_consts(int k, std::uint8_t reduce) {
  GfConsts c;
  c.k = k;
  c.top = _mm256_set1_epi8(static_cast<char>(1u << (k - 1)));
  c.mask = _mm256_set1_epi8(static_cast<char>((1u << k) - 1));
  c.reduce = _mm256_set1_epi8(static_cast<char>(reduce));
  for (int i = 0; i < 8; ++i) c.bit[i] = _mm256_set1_epi8(static_cast<char>(1u << i));
  return c;
}

inline __m256i gf_mul(__m256i a, __m256i b, const GfConsts& c) {
  __m256i acc = _mm256_setzero_si256();
  for (int i = 0; i < c.k; ++i) {
    const __m256i sel = _mm256_cmpeq_epi8(_mm256_and_si256(b, c.bit[i]), c.bit[i]);
    acc = _mm256_xor_si256(acc, _mm256_and_si256(a, sel));
    const __m256i carry = _mm256_cmpeq_epi8(_mm256_and_si256(a, c.top), c.top);
    a = _mm256_and_si256(_mm256_add_epi8(a, a), c.mask);
    a = _mm256_xor_si256(a, _mm256_and_si256(carry, c.reduce));
  }
  return acc;
}

}  // namespace

void unitary_mask_avx2(const UnitaryPlan& plan, std::span<const std::uint8_t> soa, std::size_t lanes,
                       std::span<std::uint8_t> out) {
  const GfConsts c = make_consts(plan.k, plan.reduce);
  const std::uint32_t n = plan.n;
  const std::size_t full = lanes - lanes % kAvx2Lanes;
  const __m256i one = _mm256_set1_epi8(1);
  std::vector<__m256i> w(n);

  for (std::size_t l = 0; l < full; l += kAvx2Lanes) {
    for (std::uint32_t h = 0; h < n; ++h)
      w[h] = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(soa.data() + h * lanes + l));
    __m256i ok = _mm256_set1_epi8(-1);
    for (std::size_t r = 0; r < plan.rows.size(); ++r) {
      const std::uint32_t* partner = plan.partner.data() + r * n;
      __m256i acc = _mm256_setzero_si256();
      for (std::uint32_t h = 0; h < n; ++h) acc = _mm256_xor_si256(acc, gf_mul(w[h], w[partner[h]], c));
      ok = _mm256_and_si256(ok, _mm256_cmpeq_epi8(acc, _mm256_set1_epi8(static_cast<char>(plan.targets[r]))));
      if (_mm256_testz_si256(ok, ok)) break;
    }
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.data() + l), _mm256_and_si256(ok, one));
  }
  detail::unitary_mask_scalar_range(plan, soa.data(), lanes, full, lanes, out.data());
}

void gf_mul_bytes_avx2(int k, std::uint32_t modulus, std::span<const std::uint8_t> a,
                       std::span<const std::uint8_t> b, std::span<std::uint8_t> out) {
  const std::uint8_t mask = static_cast<std::uint8_t>((1u << k) - 1);
  const GfConsts c = make_consts(k, static_cast<std::uint8_t>(modulus & mask));
  const std::size_t n = out.size();
  const std::size_t full = n - n % kAvx2Lanes;
  for (std::size_t l = 0; l < full; l += kAvx2Lanes) {
    const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a.data() + l));
    const __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b.data() + l));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.data() + l), gf_mul(x, y, c));
  }
  if (full < n) gf_mul_bytes_scalar(k, modulus, a.subspan(full), b.subspan(full), out.subspan(full));
}

}  // namespace qalg::kernels
