#pragma once

// Arithmetic in GF(2^k). Elements are polynomials over GF(2) of degree < k
// stored as plain bit-vectors (bit i = coefficient of x^i).

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qalg {

inline constexpr int kMaxFieldDegree = 16;
// Fields up to this degree carry a full multiplication table.
inline constexpr int kTableFieldDegree = 8;

struct FieldElement {
  std::uint16_t bits = 0;

  constexpr FieldElement() = default;
  constexpr explicit FieldElement(std::uint32_t b) : bits(static_cast<std::uint16_t>(b)) {}

  constexpr bool is_zero() const { return bits == 0; }
  friend constexpr bool operator==(FieldElement, FieldElement) = default;
  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

inline constexpr FieldElement kZero{0u};
inline constexpr FieldElement kOne{1u};

class FieldSpec {
 public:
  int degree() const { return k_; }
  std::uint32_t modulus() const { return modulus_; }
  std::uint32_t order() const { return 1u << k_; }
  std::uint32_t mask() const { return order() - 1; }

  bool contains(FieldElement a) const { return a.bits < order(); }

  FieldElement mul(FieldElement a, FieldElement b) const {
    if (table_) return FieldElement{(*table_)[(std::size_t{a.bits} << k_) | b.bits]};
    return mul_slow(a, b);
  }

  // Row-major 2^k x 2^k product table, present only when k <= kTableFieldDegree.
  const std::vector<std::uint8_t>* mul_table() const { return table_.get(); }

  friend bool operator==(const FieldSpec& x, const FieldSpec& y) {
    return x.k_ == y.k_ && x.modulus_ == y.modulus_;
  }

 private:
  friend FieldSpec make_field(int k, std::optional<std::uint32_t> modulus);
  FieldSpec(int k, std::uint32_t modulus);
  FieldElement mul_slow(FieldElement a, FieldElement b) const;

  int k_;
  std::uint32_t modulus_;
  std::shared_ptr<const std::vector<std::uint8_t>> table_;
};

// Validates (or picks) the modulus. Without one, the smallest irreducible
// polynomial of degree k with nonzero constant term is used.
FieldSpec make_field(int k, std::optional<std::uint32_t> modulus = std::nullopt);

bool is_irreducible(std::uint32_t poly);
int poly_degree(std::uint32_t poly);

// Carry-less product followed by reduction; independent of FieldSpec tables.
std::uint32_t clmul_reduce(std::uint32_t a, std::uint32_t b, std::uint32_t modulus, int k);

inline FieldElement add(const FieldSpec&, FieldElement a, FieldElement b) {
  return FieldElement{static_cast<std::uint32_t>(a.bits ^ b.bits)};
}
inline FieldElement mul(const FieldSpec& f, FieldElement a, FieldElement b) { return f.mul(a, b); }
FieldElement pow(const FieldSpec& f, FieldElement a, std::uint64_t e);
// Throws FieldError on zero.
FieldElement inv(const FieldSpec& f, FieldElement a);

std::vector<FieldElement> enumerate_field(const FieldSpec& f);

// "x^2+x+1"
std::string poly_to_string(std::uint32_t poly);
// Accepts "x^2+x+1", "0x7" or decimal.
std::uint32_t parse_poly(std::string_view text);
// "0x3"
std::string element_to_hex(FieldElement a);
FieldElement parse_element(const FieldSpec& f, std::string_view text);

}  // namespace qalg
