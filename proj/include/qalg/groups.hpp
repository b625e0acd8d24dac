#pragma once

// Finite groups given by a fixed listing of their elements and a Cayley table.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qalg/error.hpp"

namespace qalg {

struct GroupElement {
  std::uint32_t index = 0;
  friend bool operator==(GroupElement, GroupElement) = default;
};

class GroupTableError : public Error {
 public:
  enum class Kind { parse, latin_square, associativity, identity };

  GroupTableError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// Groups above this order are checked for associativity by random sampling.
inline constexpr std::size_t kFullAssociativityLimit = 64;
inline constexpr std::size_t kAssociativitySamples = 100000;

class GroupSpec {
 public:
  // Validates the table; throws GroupTableError.
  GroupSpec(std::vector<std::string> labels, std::vector<std::uint32_t> table);

  std::size_t order() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  std::uint32_t identity() const { return identity_; }

  std::uint32_t mul(std::uint32_t g, std::uint32_t h) const { return table_[g * order() + h]; }
  std::uint32_t inverse(std::uint32_t g) const { return inverse_[g]; }
  const std::vector<std::uint32_t>& table() const { return table_; }

  std::optional<std::uint32_t> find_label(std::string_view label) const;

  friend bool operator==(const GroupSpec& a, const GroupSpec& b) {
    return a.labels_ == b.labels_ && a.table_ == b.table_;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<std::uint32_t> table_;
  std::uint32_t identity_ = 0;
  std::vector<std::uint32_t> inverse_;
};

// Generalized quaternion group of order 2^{n+1}, 2 <= n <= 5, listed as
// [1, x, ..., x^{2^n-1}, y, x*y, ..., x^{2^n-1}*y] with x^{2^n} = 1,
// y^2 = x^{2^{n-1}} and y x y^{-1} = x^{-1}.
GroupSpec quaternion_group(int n);

GroupElement multiply(const GroupSpec& g, GroupElement a, GroupElement b);
GroupElement inverse_of(const GroupSpec& g, GroupElement a);
std::uint32_t element_order(const GroupSpec& g, GroupElement a);

// Text format: "order n", a line of n labels, then n rows of 0-based indices.
GroupSpec load_group_table(std::string_view text);
std::string serialize_group_table(const GroupSpec& g);

// "q8" | "q16" | "q32" | "q64".
GroupSpec builtin_group(std::string_view name);

}  // namespace qalg
