#pragma once

// Dense matrices over GF(2^k) and the regular representation
// sigma(w) = M(RG, w), whose (i, j) entry is the coefficient of g_i^{-1} g_j.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qalg/gf2k.hpp"
#include "qalg/group_algebra.hpp"
#include "qalg/groups.hpp"

namespace qalg {

class Matrix {
 public:
  Matrix(FieldSpec field, std::size_t n);
  Matrix(FieldSpec field, std::size_t n, std::vector<FieldElement> row_major);

  static Matrix identity(const FieldSpec& field, std::size_t n);

  std::size_t size() const { return n_; }
  const FieldSpec& field() const { return field_; }

  FieldElement at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  FieldElement& at(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  const std::vector<FieldElement>& entries() const { return entries_; }

  bool is_zero() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.n_ == b.n_ && a.field_ == b.field_ && a.entries_ == b.entries_;
  }

 private:
  FieldSpec field_;
  std::size_t n_;
  std::vector<FieldElement> entries_;
};

// Entry (i, j) = index of g_i^{-1} g_j.
class GroupMatrix {
 public:
  explicit GroupMatrix(const GroupSpec& g);

  std::size_t size() const { return n_; }
  std::uint32_t at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

 private:
  std::size_t n_;
  std::vector<std::uint32_t> entries_;
};

// Row i is first_row cyclically shifted right by i places.
Matrix circulant(const FieldSpec& field, std::span<const FieldElement> first_row);

GroupMatrix group_matrix(const GroupSpec& g);
Matrix rg_matrix(const AlgebraElement& w);

Matrix mat_add(const Matrix& x, const Matrix& y);
Matrix mat_mul(const Matrix& x, const Matrix& y);
Matrix transpose(const Matrix& m);

std::size_t rank(Matrix m);
// Gauss-Jordan; nullopt when singular.
std::optional<Matrix> mat_invert(const Matrix& m);

// Top-left, top-right and bottom-left 4x4 blocks of sigma(w) for w in KQ_8.
struct Q8Blocks {
  Matrix a;
  Matrix b;
  Matrix c;
};

class BlockStructureError : public Error {
 public:
  using Error::Error;
};

// Checks that the blocks are circ(a0..a3), circ(b0..b3), circ(b2,b1,b0,b3)
// and that the bottom-right block is A^T. Throws BlockStructureError.
Q8Blocks q8_block_decompose(const Matrix& m);

// Rows of hex field elements separated by spaces.
std::string to_string(const Matrix& m);

}  // namespace qalg
