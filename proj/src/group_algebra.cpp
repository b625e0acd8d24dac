#include "qalg/group_algebra.hpp"

#include <algorithm>

#include "qalg/gmatrix.hpp"

namespace qalg {

GroupAlgebra::GroupAlgebra(FieldSpec field, GroupSpec group) : field_(std::move(field)), group_(std::move(group)) {}

void GroupAlgebra::multiply(std::span<const FieldElement> a, std::span<const FieldElement> b,
                            std::span<FieldElement> out) const {
  const std::size_t n = dim();
  std::fill(out.begin(), out.end(), kZero);
  const auto& table = group_.table();
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    const std::uint32_t* row = table.data() + i * n;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j].is_zero()) continue;
      out[row[j]].bits ^= field_.mul(a[i], b[j]).bits;
    }
  }
}

AlgebraPtr make_algebra(FieldSpec field, GroupSpec group) {
  return std::make_shared<const GroupAlgebra>(std::move(field), std::move(group));
}

AlgebraElement::AlgebraElement(AlgebraPtr algebra, Coeffs coeffs)
    : algebra_(std::move(algebra)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != algebra_->dim())
    throw MismatchError("element has " + std::to_string(coeffs_.size()) + " coefficients, group order is " +
                        std::to_string(algebra_->dim()));
  for (auto c : coeffs_)
    if (!algebra_->field().contains(c)) throw FieldError("coefficient " + element_to_hex(c) + " not in field");
}

AlgebraElement AlgebraElement::zero(AlgebraPtr algebra) {
  Coeffs c(algebra->dim());
  return AlgebraElement(std::move(algebra), std::move(c));
}

AlgebraElement AlgebraElement::one(AlgebraPtr algebra) { return basis(algebra, algebra->group().identity()); }

AlgebraElement AlgebraElement::basis(AlgebraPtr algebra, std::uint32_t i) {
  Coeffs c(algebra->dim());
  c.at(i) = kOne;
  return AlgebraElement(std::move(algebra), std::move(c));
}

namespace {

void require_same(const AlgebraElement& u, const AlgebraElement& w) {
  if (!u.algebra()->same_as(*w.algebra())) throw MismatchError("operands belong to different group algebras");
}

}  // namespace

AlgebraElement ga_add(const AlgebraElement& u, const AlgebraElement& w) {
  require_same(u, w);
  Coeffs c(u.coeffs());
  for (std::size_t i = 0; i < c.size(); ++i) c[i].bits ^= w.coeff(i).bits;
  return AlgebraElement(u.algebra(), std::move(c));
}

AlgebraElement ga_mul(const AlgebraElement& u, const AlgebraElement& w) {
  require_same(u, w);
  Coeffs c(u.coeffs().size());
  u.algebra()->multiply(u.coeffs(), w.coeffs(), c);
  return AlgebraElement(u.algebra(), std::move(c));
}

AlgebraElement ga_scale(FieldElement s, const AlgebraElement& w) {
  Coeffs c(w.coeffs());
  for (auto& x : c) x = w.field().mul(s, x);
  return AlgebraElement(w.algebra(), std::move(c));
}

FieldElement augmentation(const AlgebraElement& w) {
  std::uint32_t sum = 0;
  for (auto c : w.coeffs()) sum ^= c.bits;
  return FieldElement{sum};
}

AlgebraElement star(const AlgebraElement& w) {
  Coeffs c(w.coeffs().size());
  for (std::uint32_t i = 0; i < c.size(); ++i) c[i] = w.coeff(w.group().inverse(i));
  return AlgebraElement(w.algebra(), std::move(c));
}

bool is_unit(const AlgebraElement& w) { return rank(rg_matrix(w)) == w.algebra()->dim(); }

AlgebraElement ga_inverse(const AlgebraElement& w) {
  auto m = mat_invert(rg_matrix(w));
  if (!m) throw NotAUnitError("element " + to_hex_string(w) + " is not a unit");
  // Row of the identity: g_e^{-1} g_j = g_j, so it is the coefficient vector.
  const std::size_t e = w.group().identity();
  Coeffs c(w.coeffs().size());
  for (std::size_t j = 0; j < c.size(); ++j) c[j] = m->at(e, j);
  return AlgebraElement(w.algebra(), std::move(c));
}

bool is_unitary(const AlgebraElement& w) {
  if (augmentation(w) != kOne) return false;
  return ga_mul(w, star(w)) == AlgebraElement::one(w.algebra());
}

std::string to_hex_string(const AlgebraElement& w) {
  std::string out;
  for (std::size_t i = 0; i < w.coeffs().size(); ++i) {
    if (i) out += ',';
    out += element_to_hex(w.coeff(i));
  }
  return out;
}

AlgebraElement parse_hex_element(AlgebraPtr algebra, std::string_view text) {
  Coeffs c;
  while (true) {
    const auto comma = text.find(',');
    c.push_back(parse_element(algebra->field(), text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  if (c.size() != algebra->dim())
    throw UsageError("expected " + std::to_string(algebra->dim()) + " coefficients, got " + std::to_string(c.size()));
  return AlgebraElement(std::move(algebra), std::move(c));
}

std::string pretty(const AlgebraElement& w) {
  std::string out;
  for (std::uint32_t i = 0; i < w.coeffs().size(); ++i) {
    const FieldElement c = w.coeff(i);
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    const bool is_identity = i == w.group().identity();
    if (c == kOne) {
      out += is_identity ? "1" : w.group().label(i);
    } else {
      out += element_to_hex(c);
      if (!is_identity) out += "*" + w.group().label(i);
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace qalg
