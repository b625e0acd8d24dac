#pragma once

// The group algebra KG with K = GF(2^k). An element is the coefficient vector
// over the group's fixed listing; coeffs[i] multiplies g_i.

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qalg/gf2k.hpp"
#include "qalg/groups.hpp"

namespace qalg {

using Coeffs = std::vector<FieldElement>;

class GroupAlgebra {
 public:
  GroupAlgebra(FieldSpec field, GroupSpec group);

  const FieldSpec& field() const { return field_; }
  const GroupSpec& group() const { return group_; }
  std::size_t dim() const { return group_.order(); }

  // out = a * b (convolution). out must not alias a or b.
  void multiply(std::span<const FieldElement> a, std::span<const FieldElement> b,
                std::span<FieldElement> out) const;

  bool same_as(const GroupAlgebra& other) const {
    return this == &other || (field_ == other.field_ && group_ == other.group_);
  }

 private:
  FieldSpec field_;
  GroupSpec group_;
};

using AlgebraPtr = std::shared_ptr<const GroupAlgebra>;

AlgebraPtr make_algebra(FieldSpec field, GroupSpec group);

class AlgebraElement {
 public:
  AlgebraElement(AlgebraPtr algebra, Coeffs coeffs);

  static AlgebraElement zero(AlgebraPtr algebra);
  static AlgebraElement one(AlgebraPtr algebra);
  // The basis element g_i (coefficient 1 at position i).
  static AlgebraElement basis(AlgebraPtr algebra, std::uint32_t i);

  const AlgebraPtr& algebra() const { return algebra_; }
  const FieldSpec& field() const { return algebra_->field(); }
  const GroupSpec& group() const { return algebra_->group(); }
  const Coeffs& coeffs() const { return coeffs_; }
  FieldElement coeff(std::size_t i) const { return coeffs_[i]; }

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.algebra_->same_as(*b.algebra_) && a.coeffs_ == b.coeffs_;
  }

 private:
  AlgebraPtr algebra_;
  Coeffs coeffs_;
};

AlgebraElement ga_add(const AlgebraElement& u, const AlgebraElement& w);
AlgebraElement ga_mul(const AlgebraElement& u, const AlgebraElement& w);
AlgebraElement ga_scale(FieldElement c, const AlgebraElement& w);
FieldElement augmentation(const AlgebraElement& w);
AlgebraElement star(const AlgebraElement& w);

// Unit test through the rank of the RG-matrix.
bool is_unit(const AlgebraElement& w);
// First row of the inverse RG-matrix; throws NotAUnitError.
AlgebraElement ga_inverse(const AlgebraElement& w);
// Augmentation 1 and w * w^* = 1.
bool is_unitary(const AlgebraElement& w);

// "0x1,0x0,..." in listing order.
std::string to_hex_string(const AlgebraElement& w);
AlgebraElement parse_hex_element(AlgebraPtr algebra, std::string_view text);
// "1 + x + 0x3*x^2*y"
std::string pretty(const AlgebraElement& w);

}  // namespace qalg
