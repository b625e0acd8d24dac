#include <doctest.h>

#include <fstream>
#include <sstream>

#include "qalg/report.hpp"
#include "qalg/structure.hpp"
#include "qalg/verify.hpp"
#include "test_helpers.hpp"

using namespace qalg;
using test::sum_of;
using Census = std::map<std::uint32_t, std::uint64_t>;

namespace {

UnitGroup v_star(int k) { return enumerate_unitary_units(make_algebra(make_field(k), quaternion_group(2))); }

GroupSpec d8() {
  std::ifstream in(std::string(QALG_TEST_DATA) + "/d8.txt");
  std::stringstream s;
  s << in.rdbuf();
  return load_group_table(s.str());
}

// Closed set of group elements of an arbitrary table group, as units.
UnitGroup as_units(const GroupSpec& g) { return group_basis_units(make_algebra(make_field(1), g)); }

// Reference center: commute with every element, no generating set.
std::size_t naive_center_size(const UnitGroup& u) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const auto z = u.element(i);
    bool central = true;
    for (std::size_t j = 0; j < u.size() && central; ++j) {
      const auto w = u.element(j);
      central = ga_mul(z, w) == ga_mul(w, z);
    }
    n += central;
  }
  return n;
}

}  // namespace

TEST_CASE("GroupView") {
  const auto u = v_star(1);
  const GroupView g(u);
  CHECK(g.size() == 64);
  CHECK(u.element(g.identity()) == AlgebraElement::one(u.algebra()));
  for (std::uint32_t a = 0; a < 64; ++a) {
    CHECK(g.mul(a, g.inverse(a)) == g.identity());
    CHECK(u.element(g.inverse(a)) == star(u.element(a)));
  }
  const auto all = g.closure(g.generators());
  CHECK(std::count(all.begin(), all.end(), true) == 64);
  // Rank of V_*(F_2 Q_8) is small; the greedy set stays short.
  CHECK(g.generators().size() <= 6);
}

TEST_CASE("center") {
  const auto u1 = v_star(1);
  const auto z1 = center_of(u1);
  CHECK(z1.size() == 16);
  CHECK(naive_center_size(u1) == 16);
  const auto z2 = center_of(v_star(2));
  CHECK(z2.size() == 256);
  const auto a = u1.algebra();
  for (const auto& t : center_template(a)) CHECK(z1.contains(t));
  CHECK(center_of(as_units(quaternion_group(2))).size() == 2);
  CHECK(center_of(as_units(d8())).size() == 2);
}

TEST_CASE("exponent and census") {
  CHECK(exponent_of(v_star(1)) == 4);
  CHECK(exponent_of(center_of(v_star(1))) == 2);
  CHECK(order_census(v_star(1)) == Census{{1, 1}, {2, 15}, {4, 48}});
  CHECK(order_census(v_star(2)) == Census{{1, 1}, {2, 255}, {4, 768}});
  CHECK(order_census(as_units(quaternion_group(2))) == Census{{1, 1}, {2, 1}, {4, 6}});
  CHECK(order_census(as_units(quaternion_group(3))) == Census{{1, 1}, {2, 1}, {4, 10}, {8, 4}});
  CHECK(order_census(as_units(d8())) == Census{{1, 1}, {2, 5}, {4, 2}});
  CHECK(exponent_of(as_units(quaternion_group(3))) == 8);
}

TEST_CASE("commutator subgroup") {
  const auto q = as_units(quaternion_group(2));
  const auto c = commutator_subgroup(q);
  CHECK(c.size() == 2);
  CHECK(c.contains(sum_of(q.algebra(), {"x^2"})));
  CHECK(commutator_subgroup(v_star(1)).size() == 2);
  CHECK(commutator_subgroup(v_star(2)).size() == 2);
  CHECK(commutator_subgroup(as_units(load_group_table("order 2\n1 t\n0 1\n1 0\n"))).size() == 1);
}

TEST_CASE("Hamiltonian test") {
  const auto q = is_hamiltonian(as_units(quaternion_group(2)));
  CHECK(q.hamiltonian);
  CHECK_FALSE(q.abelian);
  CHECK_FALSE(q.sampled);
  CHECK(q.pairs_checked == 64);

  const auto d = as_units(d8());
  const auto hd = is_hamiltonian(d);
  CHECK_FALSE(hd.hamiltonian);
  REQUIRE(hd.witness.has_value());
  const auto [gi, hi] = *hd.witness;
  // h g h^{-1} is outside <g>, and g is a reflection.
  const auto g = d.element(gi), h = d.element(hi);
  const auto conj = ga_mul(ga_mul(h, g), ga_inverse(h));
  CHECK(conj != g);
  CHECK(conj != AlgebraElement::one(d.algebra()));

  const auto c4 = is_hamiltonian(as_units(load_group_table("order 4\na b c d\n0 1 2 3\n1 2 3 0\n2 3 0 1\n3 0 1 2\n")));
  CHECK_FALSE(c4.hamiltonian);
  CHECK(c4.abelian);
  CHECK_FALSE(c4.witness.has_value());

  CHECK_FALSE(is_hamiltonian(as_units(quaternion_group(3))).hamiltonian);

  const auto v1 = is_hamiltonian(v_star(1));
  CHECK(v1.hamiltonian);
  CHECK(v1.pairs_checked == 4096);

  HamiltonianOptions sampled{.pair_limit = 16, .samples = 5000, .seed = 3};
  const auto s = is_hamiltonian(v_star(1), sampled);
  CHECK(s.sampled);
  CHECK(s.hamiltonian);
  CHECK(s.pairs_checked == 5000);
  CHECK_FALSE(is_hamiltonian(d, {.pair_limit = 4, .samples = 5000, .seed = 3}).hamiltonian);
}

TEST_CASE("splitting C_2^m x Q_8") {
  for (int k = 1; k <= 2; ++k) {
    const auto u = v_star(k);
    std::vector<AlgebraElement> q;
    for (std::uint32_t g = 0; g < 8; ++g) q.push_back(AlgebraElement::basis(u.algebra(), g));
    const auto r = decompose_as_c2m_times_q8(u, q);
    REQUIRE_MESSAGE(r.value.has_value(), r.failed_check);
    CHECK(r.value->rank_m == static_cast<std::size_t>(4 * k - 1));
    CHECK(r.value->complement_order == std::size_t{1} << (4 * k - 1));
    CHECK(r.value->center_order == std::size_t{1} << (4 * k));
    CHECK(r.value->q8_indices.size() == 8);
    // The basis elements are central involutions.
    for (auto i : r.value->complement_basis) {
      const auto z = u.element(i);
      CHECK(ga_mul(z, z) == AlgebraElement::one(u.algebra()));
      CHECK(z != sum_of(u.algebra(), {"x^2"}));
    }
  }
}

TEST_CASE("splitting rejects a non-subgroup") {
  const auto u = v_star(1);
  const auto a = u.algebra();
  std::vector<AlgebraElement> q{AlgebraElement::one(a), sum_of(a, {"x"})};
  CHECK_THROWS_AS(decompose_as_c2m_times_q8(u, q), UsageError);
}

TEST_CASE("lattice") {
  const auto u = v_star(1);
  CHECK(verify_lattice(u));
  const auto a = u.algebra();
  std::vector<AlgebraElement> q;
  for (std::uint32_t g = 0; g < 8; ++g) q.push_back(AlgebraElement::basis(a, g));
  CHECK(verify_lattice(u, center_of(u), q));
  // Negative control: Q in place of Z gives Z n Q = Q.
  CHECK_FALSE(verify_lattice(u, group_basis_units(a), q));
  CHECK(verify_lattice(v_star(2)));
}

TEST_CASE("analyze_structure and JSON") {
  const auto r = analyze_structure(v_star(1));
  CHECK(r.group_order == 64);
  CHECK(r.center_order == 16);
  CHECK(r.center_is_elementary_abelian);
  CHECK(r.exponent == 4);
  CHECK(r.commutator_subgroup_order == 2);
  CHECK(r.is_hamiltonian);
  CHECK_FALSE(r.hamiltonian_sampled);
  REQUIRE(r.decomposition.has_value());
  CHECK(r.decomposition->rank_m == 3);

  const nlohmann::json j = r;
  CHECK(j["hamiltonian_mode"] == "exhaustive");
  CHECK(j["order_census"]["4"] == 48);
  CHECK(j.get<StructureReport>() == r);

  const auto rq16 = analyze_structure(enumerate_unitary_units(make_algebra(make_field(1), quaternion_group(3))));
  CHECK(rq16.group_order == 1024);
  CHECK_FALSE(rq16.decomposition.has_value());
  const nlohmann::json j16 = rq16;
  CHECK(j16["decomposition"].is_null());
  CHECK(j16.get<StructureReport>() == rq16);

  auto bad = j;
  bad["hamiltonian_mode"] = "guessed";
  CHECK_THROWS_AS(bad.get<StructureReport>(), Error);
}

TEST_CASE("full claim chain over F_4") {
  const auto claims = verify_paper({.k = 2});
  for (const auto& c : claims) {
    INFO(c.id << ": " << c.measured);
    CHECK(c.status != ClaimStatus::fail);
  }
  const auto z = std::find_if(claims.begin(), claims.end(), [](const auto& c) { return c.id == "center.equals-center-of-V"; });
  REQUIRE(z != claims.end());
  CHECK(z->status == ClaimStatus::pass);
}
