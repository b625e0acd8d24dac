#include <doctest.h>

#include "oracles.hpp"
#include "qalg/group_algebra.hpp"
#include "test_helpers.hpp"

using namespace qalg;
using test::sum_of;

namespace {

AlgebraPtr f2q8() { return make_algebra(make_field(1), quaternion_group(2)); }

}  // namespace

TEST_CASE("ga_add") {
  const auto a = f2q8();
  std::mt19937_64 rng(1);
  const auto w = test::random_element(a, rng);
  CHECK(ga_add(w, w) == AlgebraElement::zero(a));
  CHECK(ga_add(w, AlgebraElement::zero(a)) == w);
  CHECK(ga_add(sum_of(a, {"1", "x"}), sum_of(a, {"x", "y"})) == sum_of(a, {"1", "y"}));
}

TEST_CASE("ga_mul examples") {
  const auto a = f2q8();
  CHECK(ga_mul(sum_of(a, {"x"}), sum_of(a, {"y"})) == sum_of(a, {"x*y"}));
  const auto n = sum_of(a, {"1", "x^2"});
  CHECK(ga_mul(n, n) == AlgebraElement::zero(a));
}

TEST_CASE("xv - vx for a generic v over F_4") {
  // v = sum a_i x^i + sum b_j x^j y; the commutator only involves the b_j.
  const auto a = make_algebra(make_field(2), quaternion_group(2));
  std::mt19937_64 rng(3);
  const auto x = AlgebraElement::basis(a, 1);
  for (int trial = 0; trial < 50; ++trial) {
    const auto v = test::random_element(a, rng);
    const auto c = ga_add(ga_mul(x, v), ga_mul(v, x));
    const auto& f = a->field();
    const auto b = [&](int j) { return v.coeff(4 + j); };
    const Coeffs expected{kZero, kZero, kZero, kZero, add(f, b(3), b(1)), add(f, b(0), b(2)), add(f, b(1), b(3)),
                          add(f, b(2), b(0))};
    REQUIRE(c.coeffs() == expected);
  }
}

TEST_CASE("ga_mul matches the coefficient-formula oracle") {
  std::mt19937_64 rng(11);
  for (int n : {2, 3}) {
    for (int k = 1; k <= 3; ++k) {
      const auto a = make_algebra(make_field(k), quaternion_group(n));
      for (int i = 0; i < 100; ++i) {
        const auto u = test::random_element(a, rng), w = test::random_element(a, rng);
        REQUIRE(test::bits_of(ga_mul(u, w)) ==
                oracle::convolve(a->group(), test::bits_of(u), test::bits_of(w), a->field().modulus()));
      }
    }
  }
}

TEST_CASE("ring laws on random triples, k <= 3") {
  std::mt19937_64 rng(5);
  for (int n : {2, 3, 4}) {
    for (int k = 1; k <= 3; ++k) {
      const auto a = make_algebra(make_field(k), quaternion_group(n));
      for (int i = 0; i < 30; ++i) {
        const auto u = test::random_element(a, rng), v = test::random_element(a, rng),
                   w = test::random_element(a, rng);
        REQUIRE(ga_mul(ga_mul(u, v), w) == ga_mul(u, ga_mul(v, w)));
        REQUIRE(ga_mul(u, ga_add(v, w)) == ga_add(ga_mul(u, v), ga_mul(u, w)));
        REQUIRE(ga_mul(ga_add(u, v), w) == ga_add(ga_mul(u, w), ga_mul(v, w)));
        REQUIRE(star(ga_mul(u, v)) == ga_mul(star(v), star(u)));
        REQUIRE(star(star(u)) == u);
        REQUIRE(augmentation(ga_mul(u, v)) == a->field().mul(augmentation(u), augmentation(v)));
        REQUIRE(augmentation(ga_add(u, v)) == add(a->field(), augmentation(u), augmentation(v)));
      }
    }
  }
}

TEST_CASE("augmentation and star examples") {
  const auto a = f2q8();
  for (std::uint32_t g = 0; g < 8; ++g) CHECK(augmentation(AlgebraElement::basis(a, g)) == kOne);
  CHECK(augmentation(sum_of(a, {"1", "x", "y"})) == kOne);
  CHECK(star(AlgebraElement::one(a)) == AlgebraElement::one(a));
  CHECK(star(sum_of(a, {"x"})) == sum_of(a, {"x^3"}));
}

TEST_CASE("is_unit and ga_inverse") {
  const auto a = f2q8();
  CHECK(is_unit(sum_of(a, {"x"})));
  CHECK_FALSE(is_unit(sum_of(a, {"1", "x^2"})));
  CHECK_FALSE(is_unit(AlgebraElement::zero(a)));
  CHECK(ga_inverse(sum_of(a, {"x"})) == sum_of(a, {"x^3"}));
  for (std::uint32_t g = 0; g < 8; ++g)
    CHECK(ga_inverse(AlgebraElement::basis(a, g)) == AlgebraElement::basis(a, a->group().inverse(g)));
  CHECK_THROWS_AS(ga_inverse(sum_of(a, {"1", "x^2"})), NotAUnitError);

  const auto f4q8 = make_algebra(make_field(2), quaternion_group(2));
  std::mt19937_64 rng(9);
  int found = 0;
  while (found < 100) {
    const auto w = test::random_element(f4q8, rng);
    if (!is_unit(w)) continue;
    ++found;
    const auto inv = ga_inverse(w);
    REQUIRE(ga_mul(w, inv) == AlgebraElement::one(f4q8));
    REQUIRE(ga_mul(inv, w) == AlgebraElement::one(f4q8));
  }
}

TEST_CASE("ga_inverse agrees with exhaustive search on F_2 Q_8") {
  const auto a = f2q8();
  const auto all = test::all_elements(a);
  const auto one = AlgebraElement::one(a);
  for (const auto& w : all) {
    std::optional<AlgebraElement> found;
    for (const auto& u : all)
      if (ga_mul(w, u) == one) {
        found = u;
        break;
      }
    REQUIRE(is_unit(w) == found.has_value());
    if (found) REQUIRE(ga_inverse(w) == *found);
  }
}

TEST_CASE("is_unitary") {
  const auto a = f2q8();
  for (std::uint32_t g = 0; g < 8; ++g) CHECK(is_unitary(AlgebraElement::basis(a, g)));
  const auto w = sum_of(a, {"1", "x", "y"});
  CHECK(ga_mul(w, star(w)) == sum_of(a, {"1", "x", "x^3", "y", "x*y", "x^2*y", "x^3*y"}));
  CHECK_FALSE(is_unitary(w));

  const auto f4q8 = make_algebra(make_field(2), quaternion_group(2));
  const auto& f = f4q8->field();
  for (std::uint32_t r = 1; r < 4; ++r) {
    const FieldElement rr{r};
    const AlgebraElement e(f4q8, {add(f, kOne, rr), kZero, rr, kZero, kZero, kZero, kZero, kZero});
    CHECK(is_unitary(e));
  }
}

TEST_CASE("mismatched operands are rejected") {
  const auto a = f2q8();
  const auto b = make_algebra(make_field(2), quaternion_group(2));
  const auto c = make_algebra(make_field(1), quaternion_group(3));
  CHECK_THROWS_AS(ga_add(AlgebraElement::one(a), AlgebraElement::one(b)), MismatchError);
  CHECK_THROWS_AS(ga_mul(AlgebraElement::one(a), AlgebraElement::one(c)), MismatchError);
  // Structurally equal algebras interoperate.
  const auto a2 = f2q8();
  CHECK(ga_mul(AlgebraElement::one(a), AlgebraElement::one(a2)) == AlgebraElement::one(a));
  CHECK_THROWS_AS(AlgebraElement(a, Coeffs(3)), MismatchError);
  CHECK_THROWS_AS(AlgebraElement(a, Coeffs(8, FieldElement{2u})), FieldError);
}

TEST_CASE("text formats") {
  const auto a = make_algebra(make_field(2), quaternion_group(2));
  const AlgebraElement w(a, {kOne, kOne, kZero, kZero, kZero, kZero, FieldElement{3u}, kZero});
  CHECK(to_hex_string(w) == "0x1,0x1,0x0,0x0,0x0,0x0,0x3,0x0");
  CHECK(parse_hex_element(a, to_hex_string(w)) == w);
  CHECK(pretty(w) == "1 + x + 0x3*x^2*y");
  CHECK(pretty(AlgebraElement::zero(a)) == "0");
  CHECK_THROWS_AS(parse_hex_element(a, "0x1,0x0"), UsageError);
}
