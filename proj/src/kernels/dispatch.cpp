#include <cstdlib>
#include <string>

#include "qalg/error.hpp"
#include "qalg/kernels.hpp"

namespace qalg::kernels {

std::string_view isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

bool isa_supported(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(QALG_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

Isa best_isa() {
  if (const char* env = std::getenv("QALG_KERNEL")) {
    const std::string want(env);
    if (want == "scalar") return Isa::scalar;
    if (want == "avx2") {
      if (!isa_supported(Isa::avx2)) throw UsageError("QALG_KERNEL=avx2 but this CPU or build lacks AVX2");
      return Isa::avx2;
    }
    if (!want.empty()) throw UsageError("QALG_KERNEL must be 'scalar' or 'avx2', got '" + want + "'");
  }
  return isa_supported(Isa::avx2) ? Isa::avx2 : Isa::scalar;
}

void unitary_mask(Isa isa, const UnitaryPlan& plan, std::span<const std::uint8_t> soa, std::size_t lanes,
                  std::span<std::uint8_t> out) {
#ifdef QALG_HAVE_AVX2
  if (isa == Isa::avx2) return unitary_mask_avx2(plan, soa, lanes, out);
#endif
  unitary_mask_scalar(plan, soa, lanes, out);
}

#ifndef QALG_HAVE_AVX2
void unitary_mask_avx2(const UnitaryPlan&, std::span<const std::uint8_t>, std::size_t, std::span<std::uint8_t>) {
  throw UsageError("built without AVX2 kernels");
}
void gf_mul_bytes_avx2(int, std::uint32_t, std::span<const std::uint8_t>, std::span<const std::uint8_t>,
                       std::span<std::uint8_t>) {
  throw UsageError("built without AVX2 kernels");
}
#endif

}  // namespace qalg::kernels
