#include "qalg/verify.hpp"

#include <cstdio>
#include <random>
#include <sstream>

#include "qalg/gmatrix.hpp"
#include "qalg/structure.hpp"

namespace qalg {

namespace {

std::string str(std::uint64_t v) { return std::to_string(v); }

ClaimResult claim(std::string id, bool ok, std::string measured) {
  return {std::move(id), ok ? ClaimStatus::pass : ClaimStatus::fail, std::move(measured)};
}

ClaimResult skipped(std::string id, std::string why) { return {std::move(id), ClaimStatus::skip, std::move(why)}; }

AlgebraElement random_element(const AlgebraPtr& a, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> pick(0, a->field().mask());
  Coeffs c(a->dim());
  for (auto& x : c) x = FieldElement{pick(rng)};
  return AlgebraElement(a, std::move(c));
}

// Every element of KG when there are at most `limit`, else `limit` random ones.
template <typename Fn>
std::pair<std::uint64_t, bool> for_elements(const AlgebraPtr& a, std::uint64_t limit, std::mt19937_64& rng, Fn&& fn) {
  const std::uint64_t bits = std::uint64_t{a->dim()} * a->field().degree();
  if (bits < 63 && (std::uint64_t{1} << bits) <= limit) {
    const std::uint64_t total = std::uint64_t{1} << bits;
    const int k = a->field().degree();
    Coeffs c(a->dim());
    for (std::uint64_t v = 0; v < total; ++v) {
      for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = FieldElement{static_cast<std::uint32_t>(v >> ((c.size() - 1 - i) * k)) & a->field().mask()};
      fn(AlgebraElement(a, c));
    }
    return {total, true};
  }
  for (std::uint64_t s = 0; s < limit; ++s) fn(random_element(a, rng));
  return {limit, false};
}

std::string census_string(const std::map<std::uint32_t, std::uint64_t>& c) {
  std::string out = "{";
  for (const auto& [o, n] : c) out += (out.size() > 1 ? ", " : "") + str(o) + ":" + str(n);
  return out + "}";
}

}  // namespace

std::vector<ClaimResult> verify_paper(const VerifyOptions& opts) {
  std::vector<ClaimResult> out;
  const FieldSpec field = make_field(opts.k);
  const int k = opts.k;
  const AlgebraPtr q8 = make_algebra(field, quaternion_group(2));
  EnumOptions eo;
  eo.budget = opts.budget;
  eo.workers = opts.workers;
  std::mt19937_64 rng(opts.seed);

  // Order formula.
  const UnitGroup v_star = enumerate_unitary_units(q8, eo);
  const std::uint64_t expected_order = unitary_order_formula(2, field);
  out.push_back(claim("order-formula.q8", v_star.size() == expected_order,
                      "|V_*| = " + str(v_star.size()) + ", 4|K|^4 = " + str(expected_order)));
  {
    const AlgebraPtr q16 = make_algebra(field, quaternion_group(3));
    const std::uint64_t bits = 16ull * static_cast<std::uint64_t>(k);
    if (bits <= 62 && (1ull << bits) <= opts.budget) {
      const std::uint64_t count = for_each_unitary(q16, eo, [](std::span<const FieldElement>) {});
      const std::uint64_t f = unitary_order_formula(3, field);
      out.push_back(claim("order-formula.q16", count == f, "|V_*| = " + str(count) + ", 4|K|^8 = " + str(f)));
    } else {
      out.push_back(skipped("order-formula.q16", "2^" + str(bits) + " candidates exceed budget"));
    }
  }

  // Center.
  const UnitGroup z = center_of(v_star, opts.workers);
  const std::uint64_t z_expected = 1ull << (4 * k);
  out.push_back(claim("center.order", z.size() == z_expected,
                      "|Z(V_*)| = " + str(z.size()) + ", 2^{4k} = " + str(z_expected)));
  const std::uint64_t z_exp = exponent_of(z);
  out.push_back(claim("center.exponent", z_exp == 2, "exponent = " + str(z_exp)));
  const UnitGroup templ(q8, [&] {
    std::vector<Coeffs> c;
    for (const auto& e : center_template(q8)) c.push_back(e.coeffs());
    return c;
  }());
  out.push_back(claim("center.template", templ.same_set(z), "template image " + str(templ.size()) +
                                                                 " elements, equal to Z(V_*): " +
                                                                 (templ.same_set(z) ? "yes" : "no")));
  {
    bool all_unitary = true;
    const auto one = AlgebraElement::one(q8);
    for (const auto& e : center_template(q8)) {
      const Matrix s = rg_matrix(e);
      all_unitary = all_unitary && mat_mul(s, transpose(s)) == Matrix::identity(field, 8) && is_unitary(e);
    }
    out.push_back(claim("center.template-unitary", all_unitary,
                        "sigma(a) sigma(a)^T = I for all " + str(templ.size()) + " template elements"));
  }

  // Z(V) against Z(V_*), and the centralizer of x in V.
  if (k <= 2) {
    const UnitGroup v = enumerate_normalized_units(q8, eo);
    const std::size_t d = q8->dim();
    Coeffs ab(d), ba(d);
    auto commute = [&](std::span<const FieldElement> a, std::span<const FieldElement> b) {
      q8->multiply(a, b, ab);
      q8->multiply(b, a, ba);
      return ab == ba;
    };
    const auto x = AlgebraElement::basis(q8, 1), y = AlgebraElement::basis(q8, 4);
    std::vector<std::size_t> candidates;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (commute(v.coeffs(i), x.coeffs()) && commute(v.coeffs(i), y.coeffs())) candidates.push_back(i);
    std::vector<Coeffs> zv;
    for (auto i : candidates) {
      bool central = true;
      for (std::size_t j = 0; j < v.size() && central; ++j) central = commute(v.coeffs(i), v.coeffs(j));
      if (central) zv.push_back(v.element(i).coeffs());
    }
    const UnitGroup z_of_v(q8, std::move(zv));
    out.push_back(claim("center.equals-center-of-V", z_of_v.same_set(z),
                        "|V| = " + str(v.size()) + ", |Z(V)| = " + str(z_of_v.size())));

    const auto cx = centralizer(v, x);
    bool form = true;
    for (const auto& e : cx) form = form && e.coeff(4) == e.coeff(6) && e.coeff(5) == e.coeff(7);
    out.push_back(claim("centralizer.x-form", form, "|C_V(x)| = " + str(cx.size()) + ", all with b0=b2, b1=b3"));
  } else {
    out.push_back(skipped("center.equals-center-of-V", "|V| too large for exhaustive center"));
    out.push_back(skipped("centralizer.x-form", "|V| too large"));
  }

  // Circulant condition from the center computation.
  if (k <= 3) {
    bool ok = true;
    const auto elems = enumerate_field(field);
    const std::size_t q = elems.size();
    const std::uint64_t total = q * q * q * q;
    auto row = [&](std::uint64_t v) {
      return std::vector<FieldElement>{elems[v / (q * q * q)], elems[v / (q * q) % q], elems[v / q % q], elems[v % q]};
    };
    for (std::uint64_t av = 0; av < total && ok; ++av) {
      const auto a = row(av);
      const Matrix am = circulant(field, a);
      const Matrix diff = mat_add(am, transpose(am));
      bool annihilated = true;
      for (std::uint64_t dv = 0; dv < total && annihilated; ++dv) {
        const auto dr = row(dv);
        const std::vector<FieldElement> er{dr[2], dr[1], dr[0], dr[3]};
        annihilated = mat_mul(circulant(field, dr), diff).is_zero() && mat_mul(circulant(field, er), diff).is_zero();
      }
      ok = annihilated == (a[1] == a[3]);
    }
    out.push_back(claim("center.circulant-condition", ok,
                        "D(A-A^T)=0 for all D iff a1=a3, over " + str(total) + " circulants A"));
  } else {
    out.push_back(skipped("center.circulant-condition", "k > 3"));
  }

  // Z * Q_8 = V_*.
  const UnitGroup structured = structured_unitary_generation(q8);
  const std::uint64_t vq_expected = 1ull << (4 * k + 2);
  out.push_back(claim("product.structured-equals-brute",
                      structured.same_set(v_star) && structured.size() == vq_expected,
                      "|Z Q_8| = " + str(structured.size()) + ", 2^{4k+2} = " + str(vq_expected)));
  const UnitGroup q_units = group_basis_units(q8);
  std::vector<AlgebraElement> q_elems;
  for (std::size_t i = 0; i < q_units.size(); ++i) q_elems.push_back(q_units.element(i));
  out.push_back(claim("lattice.intersection-and-product", verify_lattice(v_star, z, q_elems),
                      "Z n Q_8 = {1, x^2}, Z Q_8 = V_*"));

  // Splitting and invariants.
  const auto dec = decompose_as_c2m_times_q8(v_star, q_elems);
  const std::uint64_t m_expected = 4 * static_cast<std::uint64_t>(k) - 1;
  out.push_back(claim("splitting.c2m-times-q8", dec.value && dec.value->rank_m == m_expected,
                      dec.value ? "m = " + str(dec.value->rank_m) + ", |G| = " + str(dec.value->complement_order)
                                : "failed: " + dec.failed_check));
  const auto census = order_census(v_star);
  const std::map<std::uint32_t, std::uint64_t> census_expected{
      {1, 1}, {2, (1ull << (4 * k)) - 1}, {4, 6ull << (4 * k - 1)}};
  out.push_back(claim("splitting.order-census", census == census_expected, "census " + census_string(census)));

  HamiltonianOptions ho;
  ho.seed = opts.seed;
  ho.workers = opts.workers;
  const auto ham = is_hamiltonian(v_star, ho);
  const std::uint64_t derived = commutator_subgroup(v_star).size();
  out.push_back(claim("hamiltonian", ham.hamiltonian && derived == 2,
                      std::string(ham.sampled ? "sampled " : "exhaustive ") + str(ham.pairs_checked) +
                          " pairs, |[V_*,V_*]| = " + str(derived)));
  const std::uint64_t exp = exponent_of(v_star);
  const bool baer_premise = ham.hamiltonian && v_star.size() == vq_expected && exp == 4;
  out.push_back(claim("hamiltonian.consistency", baer_premise && dec.value.has_value(),
                      "hamiltonian, |V_*| = 2^{4k+2}, exponent " + str(exp) + "; splitting " +
                          (dec.value ? "found" : "missing")));

  // Matrix representation.
  {
    bool hom = true;
    for (int n : {2, 3}) {
      const AlgebraPtr a = make_algebra(field, quaternion_group(n));
      hom = hom && rg_matrix(AlgebraElement::one(a)) == Matrix::identity(field, a->dim());
      for (std::size_t i = 0; i < opts.random_pairs && hom; ++i) {
        const auto u = random_element(a, rng), w = random_element(a, rng);
        hom = rg_matrix(ga_mul(u, w)) == mat_mul(rg_matrix(u), rg_matrix(w)) &&
              rg_matrix(ga_add(u, w)) == mat_add(rg_matrix(u), rg_matrix(w));
      }
    }
    out.push_back(claim("sigma.ring-homomorphism", hom, str(opts.random_pairs) + " random pairs each in KQ_8, KQ_16"));
  }
  {
    bool agree = true;
    std::uint64_t checked = 0;
    if (k == 1) {
      std::vector<AlgebraElement> all;
      std::mt19937_64 unused(0);
      for_elements(q8, 256, unused, [&](const AlgebraElement& w) { all.push_back(w); });
      const auto one = AlgebraElement::one(q8);
      for (const auto& w : all) {
        bool found = false;
        for (const auto& u : all)
          if (ga_mul(w, u) == one) {
            found = true;
            break;
          }
        agree = agree && found == is_unit(w);
        ++checked;
      }
      out.push_back(claim("sigma.unit-criterion", agree, "matrix rank vs inverse search on " + str(checked) + " elements"));
    } else {
      for (std::size_t i = 0; i < opts.random_pairs; ++i) {
        const auto w = random_element(q8, rng);
        const bool unit = is_unit(w);
        if (unit) agree = agree && ga_mul(w, ga_inverse(w)) == AlgebraElement::one(q8);
        // KQ_8 is local in characteristic 2: units are exactly augmentation != 0.
        agree = agree && unit == !augmentation(w).is_zero();
        ++checked;
      }
      out.push_back(claim("sigma.unit-criterion", agree, "sampled " + str(checked) + " elements"));
    }
  }
  {
    bool transpose_ok = true, blocks_ok = true;
    const auto [count, exhaustive] = for_elements(q8, 1ull << 16, rng, [&](const AlgebraElement& w) {
      const Matrix s = rg_matrix(w);
      transpose_ok = transpose_ok && rg_matrix(star(w)) == transpose(s);
      try {
        const auto b = q8_block_decompose(s);
        const auto& c = w.coeffs();
        const std::vector<FieldElement> ar{c[0], c[1], c[2], c[3]}, br{c[4], c[5], c[6], c[7]},
            cr{c[6], c[5], c[4], c[7]};
        blocks_ok = blocks_ok && b.a == circulant(field, ar) && b.b == circulant(field, br) &&
                    b.c == circulant(field, cr);
      } catch (const BlockStructureError&) {
        blocks_ok = false;
      }
    });
    const std::string scope = (exhaustive ? "all " : "sampled ") + str(count) + " elements";
    out.push_back(claim("sigma.star-is-transpose", transpose_ok, scope));
    out.push_back(claim("sigma.q8-block-form", blocks_ok, scope));
  }
  return out;
}

std::string format_claims(const VerifyOptions& opts, const std::vector<ClaimResult>& claims) {
  std::ostringstream s;
  const FieldSpec f = make_field(opts.k);
  s << "verify-paper k=" << opts.k << " modulus=" << poly_to_string(f.modulus()) << " seed=" << opts.seed << "\n";
  std::size_t pass = 0, fail = 0, skip = 0;
  for (const auto& c : claims) {
    const char* tag = c.status == ClaimStatus::pass ? "PASS" : c.status == ClaimStatus::fail ? "FAIL" : "SKIP";
    (c.status == ClaimStatus::pass ? pass : c.status == ClaimStatus::fail ? fail : skip)++;
    char id[40];
    std::snprintf(id, sizeof id, "%-34s", c.id.c_str());
    s << tag << "  " << id << "  " << c.measured << "\n";
  }
  s << pass << " passed, " << fail << " failed, " << skip << " skipped\n";
  return s.str();
}

bool all_passed(const std::vector<ClaimResult>& claims) {
  for (const auto& c : claims)
    if (c.status == ClaimStatus::fail) return false;
  return true;
}

}  // namespace qalg
