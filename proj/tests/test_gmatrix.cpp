#include <doctest.h>

#include "qalg/gmatrix.hpp"
#include "test_helpers.hpp"

using namespace qalg;
using test::sum_of;

namespace {

Matrix from_bits(const FieldSpec& f, std::size_t n, std::initializer_list<std::uint32_t> bits) {
  std::vector<FieldElement> e;
  for (auto b : bits) e.push_back(FieldElement{b});
  return Matrix(f, n, std::move(e));
}

}  // namespace

TEST_CASE("circulant rows shift right") {
  const auto f = make_field(3);
  const std::vector<FieldElement> row{FieldElement{1u}, FieldElement{2u}, FieldElement{3u}, FieldElement{4u}};
  const auto c = circulant(f, row);
  CHECK(c == from_bits(f, 4, {1, 2, 3, 4, 4, 1, 2, 3, 3, 4, 1, 2, 2, 3, 4, 1}));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) CHECK(c.at(i, j) == row[(j + 4 - i) % 4]);
}

TEST_CASE("circulants commute") {
  const auto f = make_field(2);
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<std::uint32_t> pick(0, 3);
  for (int t = 0; t < 50; ++t) {
    std::vector<FieldElement> r1(5), r2(5);
    for (auto& x : r1) x = FieldElement{pick(rng)};
    for (auto& x : r2) x = FieldElement{pick(rng)};
    const auto a = circulant(f, r1), b = circulant(f, r2);
    REQUIRE(mat_mul(a, b) == mat_mul(b, a));
  }
}

TEST_CASE("group_matrix of Q_8") {
  const auto q = quaternion_group(2);
  const auto m = group_matrix(q);
  for (std::uint32_t i = 0; i < 8; ++i) {
    CHECK(m.at(i, i) == q.identity());
    for (std::uint32_t j = 0; j < 8; ++j) CHECK(m.at(i, j) == q.mul(q.inverse(i), j));
  }
  // Row of x: x^{-1} g_j = x^3 g_j.
  CHECK(m.at(1, 0) == 3);
  CHECK(m.at(1, 4) == *q.find_label("x^3*y"));
}

TEST_CASE("rg_matrix basics") {
  const auto a = make_algebra(make_field(1), quaternion_group(2));
  CHECK(rg_matrix(AlgebraElement::one(a)) == Matrix::identity(a->field(), 8));
  CHECK(rg_matrix(AlgebraElement::zero(a)).is_zero());
  // sigma(g) is a permutation matrix.
  for (std::uint32_t g = 0; g < 8; ++g) {
    const auto m = rg_matrix(AlgebraElement::basis(a, g));
    for (std::size_t i = 0; i < 8; ++i) {
      int ones = 0;
      for (std::size_t j = 0; j < 8; ++j) ones += m.at(i, j) == kOne;
      CHECK(ones == 1);
    }
  }
}

TEST_CASE("sigma is a ring homomorphism on F_8 Q_8 and F_4 Q_16") {
  std::mt19937_64 rng(17);
  const auto check = [&](const AlgebraPtr& a, int pairs) {
    for (int i = 0; i < pairs; ++i) {
      const auto u = test::random_element(a, rng), w = test::random_element(a, rng);
      REQUIRE(rg_matrix(ga_mul(u, w)) == mat_mul(rg_matrix(u), rg_matrix(w)));
      REQUIRE(rg_matrix(ga_add(u, w)) == mat_add(rg_matrix(u), rg_matrix(w)));
      REQUIRE(rg_matrix(star(u)) == transpose(rg_matrix(u)));
    }
  };
  check(make_algebra(make_field(3), quaternion_group(2)), 1000);
  check(make_algebra(make_field(2), quaternion_group(3)), 200);
}

TEST_CASE("star is transpose on every built-in group") {
  std::mt19937_64 rng(23);
  for (int n = 2; n <= 5; ++n) {
    const auto a = make_algebra(make_field(2), quaternion_group(n));
    for (int i = 0; i < 20; ++i) {
      const auto u = test::random_element(a, rng);
      REQUIRE(rg_matrix(star(u)) == transpose(rg_matrix(u)));
    }
  }
}

TEST_CASE("Q_8 block form") {
  const auto a = make_algebra(make_field(1), quaternion_group(2));
  const auto f = a->field();

  const auto bx = q8_block_decompose(rg_matrix(sum_of(a, {"x"})));
  CHECK(bx.a == from_bits(f, 4, {0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 1, 0, 0, 0}));
  CHECK(bx.b.is_zero());
  CHECK(bx.c.is_zero());

  const auto by = q8_block_decompose(rg_matrix(sum_of(a, {"y"})));
  CHECK(by.a.is_zero());
  CHECK(by.b == from_bits(f, 4, {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1}));
  // C = circ(b2, b1, b0, b3) with b = (1, 0, 0, 0).
  CHECK(by.c == from_bits(f, 4, {0, 0, 1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 1, 0, 0}));

  std::mt19937_64 rng(4);
  const auto f8q8 = make_algebra(make_field(3), quaternion_group(2));
  for (int i = 0; i < 500; ++i) {
    const auto w = test::random_element(f8q8, rng);
    const auto blocks = q8_block_decompose(rg_matrix(w));
    for (std::size_t j = 0; j < 4; ++j) {
      REQUIRE(blocks.a.at(0, j) == w.coeff(j));
      REQUIRE(blocks.b.at(0, j) == w.coeff(4 + j));
    }
  }

  auto m = Matrix::identity(f, 8);
  m.at(0, 5) = kOne;
  CHECK_THROWS_AS(q8_block_decompose(m), BlockStructureError);
  CHECK_THROWS_AS(q8_block_decompose(Matrix::identity(f, 4)), BlockStructureError);
}

TEST_CASE("rank and inversion") {
  const auto a = make_algebra(make_field(1), quaternion_group(2));
  CHECK_FALSE(mat_invert(rg_matrix(sum_of(a, {"1", "x^2"}))).has_value());
  CHECK(rank(rg_matrix(sum_of(a, {"1", "x^2"}))) == 4);
  CHECK(rank(rg_matrix(AlgebraElement::zero(a))) == 0);

  const auto f = make_field(2);
  const auto m = from_bits(f, 3, {1, 2, 0, 0, 1, 3, 2, 0, 1});
  const auto inv = mat_invert(m);
  REQUIRE(inv.has_value());
  CHECK(mat_mul(m, *inv) == Matrix::identity(f, 3));
  CHECK(mat_mul(*inv, m) == Matrix::identity(f, 3));

  std::mt19937_64 rng(8);
  const auto f4q8 = make_algebra(f, quaternion_group(2));
  for (int i = 0; i < 200; ++i) {
    const auto w = test::random_element(f4q8, rng);
    const auto mi = mat_invert(rg_matrix(w));
    REQUIRE(mi.has_value() == (augmentation(w) != kZero));
    if (mi) REQUIRE(*mi == rg_matrix(ga_inverse(w)));
  }
}

TEST_CASE("dimension and field mismatches") {
  const auto f2 = make_field(1), f4 = make_field(2);
  CHECK_THROWS_AS(mat_mul(Matrix::identity(f2, 2), Matrix::identity(f2, 3)), MismatchError);
  CHECK_THROWS_AS(mat_add(Matrix::identity(f2, 2), Matrix::identity(f4, 2)), MismatchError);
  CHECK_THROWS_AS(Matrix(f2, 2, std::vector<FieldElement>(3)), MismatchError);
}

TEST_CASE("to_string") {
  const auto f = make_field(2);
  CHECK(to_string(from_bits(f, 2, {1, 3, 0, 2})) == "0x1 0x3\n0x0 0x2\n");
}
