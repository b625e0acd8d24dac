#include "qalg/structure.hpp"

#include <numeric>
#include <random>

#include "qalg/parallel.hpp"

namespace qalg {

// ---------------------------------------------------------------------------
// GroupView

GroupView::GroupView(const UnitGroup& u, unsigned workers)
    : units_(u), workers_(workers ? workers : default_workers()) {
  const std::size_t n = units_.size();
  const auto id = units_.find(AlgebraElement::one(units_.algebra()));
  if (!id) throw Error("unit group does not contain 1");
  identity_ = static_cast<std::uint32_t>(*id);

  if (n <= kCayleyCacheLimit) {
    table_.resize(n * n);
    parallel_for(n, workers_, [&](std::size_t b, std::size_t e) {
      for (std::size_t a = b; a < e; ++a)
        for (std::size_t c = 0; c < n; ++c)
          table_[a * n + c] = compute_mul(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(c));
    });
  }

  order_.resize(n);
  inverse_.resize(n);
  parallel_for(n, workers_, [&](std::size_t b, std::size_t e) {
    for (std::size_t a = b; a < e; ++a) {
      const auto g = static_cast<std::uint32_t>(a);
      std::uint32_t prev = identity_, p = g, m = 1;
      while (p != identity_) {
        if (m > n) throw Error("element has no finite order inside the set");
        prev = p;
        p = mul(p, g);
        ++m;
      }
      order_[a] = m;
      inverse_[a] = m == 1 ? identity_ : prev;
    }
  });

  std::vector<bool> in(n, false);
  std::vector<std::uint32_t> members{identity_};
  in[identity_] = true;
  for (std::uint32_t g = 0; g < n; ++g) {
    if (in[g]) continue;
    generators_.push_back(g);
    const std::size_t old = members.size();
    for (std::size_t idx = 0; idx < members.size(); ++idx) {
      const std::uint32_t x = members[idx];
      auto extend = [&](std::uint32_t gen) {
        const std::uint32_t y = mul(x, gen);
        if (!in[y]) {
          in[y] = true;
          members.push_back(y);
        }
      };
      if (idx < old) {
        extend(g);
      } else {
        for (auto gen : generators_) extend(gen);
      }
    }
  }
}

std::uint32_t GroupView::compute_mul(std::uint32_t a, std::uint32_t b) const {
  const auto& alg = *units_.algebra();
  Coeffs out(alg.dim());
  alg.multiply(units_.coeffs(a), units_.coeffs(b), out);
  const auto pos = units_.find(out);
  if (!pos) throw Error("unit group is not closed under multiplication");
  return static_cast<std::uint32_t>(*pos);
}

std::uint32_t GroupView::mul(std::uint32_t a, std::uint32_t b) const {
  if (!table_.empty()) return table_[std::size_t{a} * size() + b];
  return compute_mul(a, b);
}

std::vector<bool> GroupView::closure(const std::vector<std::uint32_t>& gens) const {
  std::vector<bool> in(size(), false);
  std::vector<std::uint32_t> members{identity_};
  in[identity_] = true;
  for (std::size_t idx = 0; idx < members.size(); ++idx) {
    for (auto g : gens) {
      const std::uint32_t y = mul(members[idx], g);
      if (!in[y]) {
        in[y] = true;
        members.push_back(y);
      }
    }
  }
  return in;
}

// ---------------------------------------------------------------------------
// Invariants

namespace {

std::vector<std::size_t> center_positions(const GroupView& v) {
  const auto& gens = v.generators();
  std::vector<char> central(v.size(), 0);
  parallel_for(v.size(), v.workers(), [&](std::size_t b, std::size_t e) {
    for (std::size_t z = b; z < e; ++z) {
      bool ok = true;
      for (auto g : gens) {
        const auto zz = static_cast<std::uint32_t>(z);
        if (v.mul(zz, g) != v.mul(g, zz)) {
          ok = false;
          break;
        }
      }
      central[z] = ok;
    }
  });
  std::vector<std::size_t> out;
  for (std::size_t z = 0; z < v.size(); ++z)
    if (central[z]) out.push_back(z);
  return out;
}

std::map<std::uint32_t, std::uint64_t> census(const GroupView& v) {
  std::map<std::uint32_t, std::uint64_t> out;
  for (std::uint32_t a = 0; a < v.size(); ++a) ++out[v.order(a)];
  return out;
}

std::uint64_t exponent(const GroupView& v) {
  std::uint64_t e = 1;
  for (std::uint32_t a = 0; a < v.size(); ++a) e = std::lcm(e, std::uint64_t{v.order(a)});
  return e;
}

std::vector<std::size_t> commutator_positions(const GroupView& v) {
  const auto& gens = v.generators();
  auto comm = [&](std::uint32_t a, std::uint32_t b) {
    return v.mul(v.mul(v.inverse(a), v.inverse(b)), v.mul(a, b));
  };
  std::vector<std::uint32_t> s;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      const std::uint32_t c = comm(gens[i], gens[j]);
      if (c != v.identity()) s.push_back(c);
    }
  auto in = v.closure(s);
  // Close <s> under conjugation by the generators of the whole group.
  for (std::size_t idx = 0; idx < s.size(); ++idx) {
    for (auto g : gens) {
      const std::uint32_t c = v.mul(v.mul(v.inverse(g), s[idx]), g);
      if (!in[c]) {
        s.push_back(c);
        in = v.closure(s);
      }
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < v.size(); ++a)
    if (in[a]) out.push_back(a);
  return out;
}

bool is_abelian(const GroupView& v) {
  const auto& gens = v.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (v.mul(gens[i], gens[j]) != v.mul(gens[j], gens[i])) return false;
  return true;
}

// h g h^{-1} in <g>.
bool conjugate_in_cyclic(const GroupView& v, std::uint32_t g, std::uint32_t h) {
  const std::uint32_t c = v.mul(v.mul(h, g), v.inverse(h));
  std::uint32_t p = g;
  for (std::uint32_t m = 0; m < v.order(g); ++m) {
    if (p == c) return true;
    p = v.mul(p, g);
  }
  return false;
}

HamiltonianResult hamiltonian(const GroupView& v, const HamiltonianOptions& opts) {
  HamiltonianResult r;
  if (is_abelian(v)) {
    r.abelian = true;
    return r;
  }
  const std::size_t n = v.size();
  if (n <= opts.pair_limit) {
    constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    std::vector<std::size_t> first_bad(n, kNone);
    parallel_for(n, opts.workers ? opts.workers : v.workers(), [&](std::size_t b, std::size_t e) {
      for (std::size_t g = b; g < e; ++g)
        for (std::size_t h = 0; h < n; ++h)
          if (!conjugate_in_cyclic(v, static_cast<std::uint32_t>(g), static_cast<std::uint32_t>(h))) {
            first_bad[g] = h;
            break;
          }
    });
    r.pairs_checked = std::uint64_t{n} * n;
    for (std::size_t g = 0; g < n; ++g)
      if (first_bad[g] != kNone) {
        r.witness = std::pair{g, first_bad[g]};
        break;
      }
  } else {
    r.sampled = true;
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(n - 1));
    for (std::uint64_t s = 0; s < opts.samples; ++s) {
      const std::uint32_t g = pick(rng), h = pick(rng);
      ++r.pairs_checked;
      if (!conjugate_in_cyclic(v, g, h)) {
        r.witness = std::pair{std::size_t{g}, std::size_t{h}};
        break;
      }
    }
  }
  r.hamiltonian = !r.witness.has_value();
  return r;
}

}  // namespace

UnitGroup center_of(const UnitGroup& u, unsigned workers) {
  const GroupView v(u, workers);
  return u.subgroup(center_positions(v));
}

std::uint64_t exponent_of(const UnitGroup& u) { return exponent(GroupView(u)); }

std::map<std::uint32_t, std::uint64_t> order_census(const UnitGroup& u) { return census(GroupView(u)); }

UnitGroup commutator_subgroup(const UnitGroup& u) {
  const GroupView v(u);
  return u.subgroup(commutator_positions(v));
}

HamiltonianResult is_hamiltonian(const UnitGroup& u, const HamiltonianOptions& opts) {
  return hamiltonian(GroupView(u, opts.workers), opts);
}

// ---------------------------------------------------------------------------
// Decomposition

namespace {

// Elements of the F_2-span of `basis`, basis being independent generators of
// an elementary abelian subgroup.
std::vector<std::uint32_t> span_of(const GroupView& v, const std::vector<std::uint32_t>& basis) {
  std::vector<std::uint32_t> span{v.identity()};
  for (auto b : basis) {
    const std::size_t m = span.size();
    for (std::size_t i = 0; i < m; ++i) span.push_back(v.mul(span[i], b));
  }
  return span;
}

DecompositionResult decompose(const GroupView& v, const std::vector<AlgebraElement>& q) {
  auto fail = [](std::string why) { return DecompositionResult{std::nullopt, std::move(why)}; };
  const UnitGroup& u = v.units();

  std::vector<std::uint32_t> qpos;
  std::vector<bool> in_q(v.size(), false);
  for (const auto& e : q) {
    const auto p = u.find(e);
    if (!p) throw UsageError("designated Q element " + to_hex_string(e) + " is not in the unit group");
    if (in_q[*p]) throw UsageError("designated Q contains duplicates");
    in_q[*p] = true;
    qpos.push_back(static_cast<std::uint32_t>(*p));
  }
  for (auto a : qpos)
    for (auto b : qpos)
      if (!in_q[v.mul(a, b)]) throw UsageError("designated Q is not closed under multiplication");

  std::vector<std::uint32_t> q_involutions;
  bool q_abelian = true;
  for (auto a : qpos) {
    if (v.order(a) == 2) q_involutions.push_back(a);
    for (auto b : qpos) q_abelian = q_abelian && v.mul(a, b) == v.mul(b, a);
  }
  if (qpos.size() != 8 || q_involutions.size() != 1 || q_abelian) return fail("designated Q is not a copy of Q_8");
  const std::uint32_t q0 = q_involutions.front();

  const auto zpos = center_positions(v);
  std::vector<bool> in_z(v.size(), false);
  for (auto z : zpos) in_z[z] = true;
  for (auto z : zpos)
    if (v.order(static_cast<std::uint32_t>(z)) > 2) return fail("center is not elementary abelian");
  if (!in_z[q0]) return fail("involution of Q is not central");

  // Basis of Z over F_2 starting from q0.
  std::vector<std::uint32_t> basis{q0};
  std::vector<bool> in_span(v.size(), false);
  for (auto s : span_of(v, basis)) in_span[s] = true;
  for (auto z : zpos) {
    if (in_span[z]) continue;
    basis.push_back(static_cast<std::uint32_t>(z));
    for (auto s : span_of(v, basis)) in_span[s] = true;
  }
  if ((std::size_t{1} << basis.size()) != zpos.size()) return fail("center order is not 2^rank");

  const std::vector<std::uint32_t> complement_basis(basis.begin() + 1, basis.end());
  const auto g = span_of(v, complement_basis);
  std::vector<bool> in_g(v.size(), false);
  for (auto x : g) {
    if (in_g[x]) return fail("complement basis is not independent");
    in_g[x] = true;
  }
  for (auto a : qpos)
    if (in_g[a] && a != v.identity()) return fail("G n Q is not trivial");
  for (auto x : g)
    if (!in_z[x]) return fail("G is not central");

  std::vector<bool> hit(v.size(), false);
  std::size_t distinct = 0;
  for (auto x : g)
    for (auto a : qpos) {
      const auto p = v.mul(x, a);
      if (!hit[p]) {
        hit[p] = true;
        ++distinct;
      }
    }
  if (distinct != v.size()) return fail("G Q does not cover the unit group");

  Decomposition d;
  d.rank_m = complement_basis.size();
  d.complement_basis.assign(complement_basis.begin(), complement_basis.end());
  d.q8_indices.assign(qpos.begin(), qpos.end());
  d.complement_order = g.size();
  d.center_order = zpos.size();
  return {d, {}};
}

std::vector<AlgebraElement> basis_elements(const AlgebraPtr& a) {
  std::vector<AlgebraElement> out;
  for (std::uint32_t i = 0; i < a->dim(); ++i) out.push_back(AlgebraElement::basis(a, i));
  return out;
}

}  // namespace

DecompositionResult decompose_as_c2m_times_q8(const UnitGroup& u, const std::vector<AlgebraElement>& q) {
  return decompose(GroupView(u), q);
}

bool verify_lattice(const UnitGroup& u, const UnitGroup& z, const std::vector<AlgebraElement>& q) {
  const auto one = AlgebraElement::one(u.algebra());
  std::vector<AlgebraElement> involutions;
  for (const auto& e : q)
    if (!(e == one) && ga_mul(e, e) == one) involutions.push_back(e);
  if (involutions.size() != 1) return false;

  std::size_t shared = 0;
  for (const auto& e : q) {
    if (!z.contains(e)) continue;
    if (!(e == one || e == involutions.front())) return false;
    ++shared;
  }
  if (shared != 2) return false;

  std::vector<bool> hit(u.size(), false);
  std::size_t distinct = 0;
  Coeffs prod(u.algebra()->dim());
  for (std::size_t i = 0; i < z.size(); ++i)
    for (const auto& e : q) {
      u.algebra()->multiply(z.coeffs(i), e.coeffs(), prod);
      const auto p = u.find(prod);
      if (!p) return false;
      if (!hit[*p]) {
        hit[*p] = true;
        ++distinct;
      }
    }
  return distinct == u.size();
}

bool verify_lattice(const UnitGroup& u) {
  return verify_lattice(u, center_of(u), basis_elements(u.algebra()));
}

StructureReport analyze_structure(const UnitGroup& u, const HamiltonianOptions& opts) {
  const GroupView v(u, opts.workers);
  StructureReport r;
  r.group_order = v.size();
  const auto zpos = center_positions(v);
  r.center_order = zpos.size();
  r.center_is_elementary_abelian = true;
  for (auto z : zpos) r.center_is_elementary_abelian &= v.order(static_cast<std::uint32_t>(z)) <= 2;
  r.exponent = exponent(v);
  r.order_census = census(v);
  r.commutator_subgroup_order = commutator_positions(v).size();
  const auto h = hamiltonian(v, opts);
  r.is_hamiltonian = h.hamiltonian;
  r.hamiltonian_sampled = h.sampled;
  if (is_q8(u.algebra()->group())) r.decomposition = decompose(v, basis_elements(u.algebra())).value;
  return r;
}

}  // namespace qalg
