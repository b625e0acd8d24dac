#include "qalg/gmatrix.hpp"

#include <utility>

namespace qalg {

Matrix::Matrix(FieldSpec field, std::size_t n) : field_(std::move(field)), n_(n), entries_(n * n) {}

Matrix::Matrix(FieldSpec field, std::size_t n, std::vector<FieldElement> row_major)
    : field_(std::move(field)), n_(n), entries_(std::move(row_major)) {
  if (entries_.size() != n_ * n_) throw MismatchError("matrix entry count does not match dimension");
}

Matrix Matrix::identity(const FieldSpec& field, std::size_t n) {
  Matrix m(field, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = kOne;
  return m;
}

bool Matrix::is_zero() const {
  for (auto e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

GroupMatrix::GroupMatrix(const GroupSpec& g) : n_(g.order()), entries_(n_ * n_) {
  for (std::uint32_t i = 0; i < n_; ++i)
    for (std::uint32_t j = 0; j < n_; ++j) entries_[i * n_ + j] = g.mul(g.inverse(i), j);
}

Matrix circulant(const FieldSpec& field, std::span<const FieldElement> first_row) {
  const std::size_t n = first_row.size();
  if (n == 0) throw UsageError("circulant needs a nonempty first row");
  Matrix m(field, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = first_row[(j + n - i) % n];
  return m;
}

GroupMatrix group_matrix(const GroupSpec& g) { return GroupMatrix(g); }

Matrix rg_matrix(const AlgebraElement& w) {
  const GroupMatrix gm(w.group());
  const std::size_t n = gm.size();
  Matrix m(w.field(), n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = w.coeff(gm.at(i, j));
  return m;
}

namespace {

void require_conforming(const Matrix& x, const Matrix& y) {
  if (x.size() != y.size()) throw MismatchError("matrix dimensions differ");
  if (!(x.field() == y.field())) throw MismatchError("matrices are over different fields");
}

}  // namespace

Matrix mat_add(const Matrix& x, const Matrix& y) {
  require_conforming(x, y);
  Matrix out(x);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) out.at(i, j).bits ^= y.at(i, j).bits;
  return out;
}

Matrix mat_mul(const Matrix& x, const Matrix& y) {
  require_conforming(x, y);
  const std::size_t n = x.size();
  const FieldSpec& f = x.field();
  Matrix out(f, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < n; ++l) {
      const FieldElement a = x.at(i, l);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) out.at(i, j).bits ^= f.mul(a, y.at(l, j)).bits;
    }
  return out;
}

Matrix transpose(const Matrix& m) {
  Matrix out(m.field(), m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) out.at(j, i) = m.at(i, j);
  return out;
}

namespace {

// Reduces m to reduced row echelon form, applying the same row operations to
// aug when given. Returns the rank.
std::size_t eliminate(Matrix& m, Matrix* aug) {
  const std::size_t n = m.size();
  const FieldSpec& f = m.field();
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t pivot = row;
    while (pivot < n && m.at(pivot, col).is_zero()) ++pivot;
    if (pivot == n) continue;
    if (pivot != row) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m.at(pivot, j), m.at(row, j));
        if (aug) std::swap(aug->at(pivot, j), aug->at(row, j));
      }
    }
    const FieldElement scale = inv(f, m.at(row, col));
    for (std::size_t j = 0; j < n; ++j) {
      m.at(row, j) = f.mul(scale, m.at(row, j));
      if (aug) aug->at(row, j) = f.mul(scale, aug->at(row, j));
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == row) continue;
      const FieldElement factor = m.at(r, col);
      if (factor.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        m.at(r, j).bits ^= f.mul(factor, m.at(row, j)).bits;
        if (aug) aug->at(r, j).bits ^= f.mul(factor, aug->at(row, j)).bits;
      }
    }
    ++row;
  }
  return row;
}

}  // namespace

std::size_t rank(Matrix m) { return eliminate(m, nullptr); }

std::optional<Matrix> mat_invert(const Matrix& m) {
  Matrix work(m);
  Matrix result = Matrix::identity(m.field(), m.size());
  if (eliminate(work, &result) != m.size()) return std::nullopt;
  return result;
}

namespace {

Matrix block(const Matrix& m, std::size_t r0, std::size_t c0) {
  Matrix out(m.field(), 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) out.at(i, j) = m.at(r0 + i, c0 + j);
  return out;
}

std::vector<FieldElement> first_row(const Matrix& m) { return {m.entries().begin(), m.entries().begin() + 4}; }

}  // namespace

Q8Blocks q8_block_decompose(const Matrix& m) {
  if (m.size() != 8) throw BlockStructureError("expected an 8x8 matrix, got " + std::to_string(m.size()));
  Matrix a = block(m, 0, 0), b = block(m, 0, 4), c = block(m, 4, 0), d = block(m, 4, 4);
  const auto ar = first_row(a), br = first_row(b);
  if (!(a == circulant(m.field(), ar))) throw BlockStructureError("top-left block is not circulant");
  if (!(b == circulant(m.field(), br))) throw BlockStructureError("top-right block is not circulant");
  const std::vector<FieldElement> cr{br[2], br[1], br[0], br[3]};
  if (!(c == circulant(m.field(), cr))) throw BlockStructureError("bottom-left block is not circ(b2,b1,b0,b3)");
  if (!(d == transpose(a))) throw BlockStructureError("bottom-right block is not the transpose of the top-left");
  return {std::move(a), std::move(b), std::move(c)};
}

std::string to_string(const Matrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (j) out += ' ';
      out += element_to_hex(m.at(i, j));
    }
    out += '\n';
  }
  return out;
}

}  // namespace qalg
