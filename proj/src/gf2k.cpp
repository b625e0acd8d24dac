#include "qalg/gf2k.hpp"

#include <bit>
#include <charconv>
#include <cctype>

#include "qalg/error.hpp"

namespace qalg {

int poly_degree(std::uint32_t poly) {
  return poly == 0 ? -1 : 31 - std::countl_zero(poly);
}

namespace {

std::uint32_t poly_mod(std::uint32_t a, std::uint32_t m) {
  const int dm = poly_degree(m);
  for (int da = poly_degree(a); da >= dm; da = poly_degree(a)) a ^= m << (da - dm);
  return a;
}

}  // namespace

std::uint32_t clmul_reduce(std::uint32_t a, std::uint32_t b, std::uint32_t modulus, int k) {
  std::uint32_t acc = 0;
  const std::uint32_t top = 1u << (k - 1);
  const std::uint32_t mask = (1u << k) - 1;
  for (int i = 0; i < k; ++i) {
    if (b & (1u << i)) acc ^= a;
    const bool carry = (a & top) != 0;
    a = (a << 1) & mask;
    if (carry) a ^= modulus & mask;
  }
  return acc;
}

bool is_irreducible(std::uint32_t poly) {
  const int d = poly_degree(poly);
  if (d < 1) return false;
  for (std::uint32_t q = 2; poly_degree(q) <= d / 2; ++q) {
    if (poly_mod(poly, q) == 0) return false;
  }
  return true;
}

FieldSpec::FieldSpec(int k, std::uint32_t modulus) : k_(k), modulus_(modulus) {
  if (k_ <= kTableFieldDegree) {
    const std::uint32_t q = order();
    auto table = std::make_shared<std::vector<std::uint8_t>>(std::size_t{q} * q);
    for (std::uint32_t a = 0; a < q; ++a)
      for (std::uint32_t b = 0; b < q; ++b)
        (*table)[(std::size_t{a} << k_) | b] = static_cast<std::uint8_t>(clmul_reduce(a, b, modulus_, k_));
    table_ = std::move(table);
  }
}

FieldElement FieldSpec::mul_slow(FieldElement a, FieldElement b) const {
  return FieldElement{clmul_reduce(a.bits, b.bits, modulus_, k_)};
}

FieldSpec make_field(int k, std::optional<std::uint32_t> modulus) {
  if (k < 1 || k > kMaxFieldDegree)
    throw FieldError("field degree must be in 1.." + std::to_string(kMaxFieldDegree) + ", got " +
                     std::to_string(k));
  if (modulus) {
    if (poly_degree(*modulus) != k)
      throw FieldError("modulus " + poly_to_string(*modulus) + " does not have degree " + std::to_string(k));
    if (!is_irreducible(*modulus)) throw FieldError("modulus " + poly_to_string(*modulus) + " is reducible");
    return FieldSpec(k, *modulus);
  }
  for (std::uint32_t p = (1u << k) | 1u; p < (2u << k); p += 2) {
    if (is_irreducible(p)) return FieldSpec(k, p);
  }
  throw FieldError("no irreducible polynomial of degree " + std::to_string(k));  // unreachable
}

FieldElement pow(const FieldSpec& f, FieldElement a, std::uint64_t e) {
  FieldElement result = kOne;
  while (e) {
    if (e & 1) result = f.mul(result, a);
    a = f.mul(a, a);
    e >>= 1;
  }
  return result;
}

FieldElement inv(const FieldSpec& f, FieldElement a) {
  if (!f.contains(a)) throw FieldError("element " + element_to_hex(a) + " is not in the field");
  if (a.is_zero()) throw FieldError("zero has no multiplicative inverse");
  return pow(f, a, f.order() - 2);
}

std::vector<FieldElement> enumerate_field(const FieldSpec& f) {
  std::vector<FieldElement> out;
  out.reserve(f.order());
  for (std::uint32_t b = 0; b < f.order(); ++b) out.emplace_back(b);
  return out;
}

std::string poly_to_string(std::uint32_t poly) {
  if (poly == 0) return "0";
  std::string out;
  for (int d = poly_degree(poly); d >= 0; --d) {
    if (!(poly & (1u << d))) continue;
    if (!out.empty()) out += '+';
    if (d == 0)
      out += '1';
    else if (d == 1)
      out += 'x';
    else
      out += "x^" + std::to_string(d);
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::uint32_t parse_uint(std::string_view s, std::string_view what) {
  s = trim(s);
  int base = 10;
  if (s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) {
    s.remove_prefix(2);
    base = 16;
  }
  std::uint32_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value, base);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
    throw FieldError("cannot parse " + std::string(what) + " '" + std::string(s) + "'");
  return value;
}

}  // namespace

std::uint32_t parse_poly(std::string_view text) {
  text = trim(text);
  if (text.find('x') == std::string_view::npos || text.starts_with("0x")) return parse_uint(text, "polynomial");
  std::uint32_t poly = 0;
  while (!text.empty()) {
    const auto plus = text.find('+');
    std::string_view term = trim(text.substr(0, plus));
    text = plus == std::string_view::npos ? std::string_view{} : text.substr(plus + 1);
    int d = 0;
    if (term == "1") {
      d = 0;
    } else if (term == "x") {
      d = 1;
    } else if (term.starts_with("x^")) {
      d = static_cast<int>(parse_uint(term.substr(2), "exponent"));
    } else {
      throw FieldError("cannot parse polynomial term '" + std::string(term) + "'");
    }
    if (d > 30) throw FieldError("polynomial degree too large");
    poly ^= 1u << d;
  }
  return poly;
}

std::string element_to_hex(FieldElement a) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string digits;
  std::uint32_t b = a.bits;
  do {
    digits.insert(digits.begin(), kDigits[b & 0xF]);
    b >>= 4;
  } while (b);
  return "0x" + digits;
}

FieldElement parse_element(const FieldSpec& f, std::string_view text) {
  text = trim(text);
  std::string hex(text);
  if (!(hex.size() > 2 && hex[0] == '0' && (hex[1] == 'x' || hex[1] == 'X'))) hex = "0x" + hex;
  const std::uint32_t v = parse_uint(hex, "field element");
  if (v >= f.order())
    throw FieldError("element " + std::string(text) + " out of range for GF(2^" + std::to_string(f.degree()) + ")");
  return FieldElement{v};
}

}  // namespace qalg
