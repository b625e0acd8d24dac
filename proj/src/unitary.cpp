#include "qalg/unitary.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "qalg/parallel.hpp"

namespace qalg {

unsigned default_workers() {
  if (const char* env = std::getenv("QALG_WORKERS")) {
    const int w = std::atoi(env);
    if (w > 0) return static_cast<unsigned>(w);
  }
  return 1;
}

std::string coeff_key(std::span<const FieldElement> c) {
  std::string key(c.size() * 2, '\0');
  for (std::size_t i = 0; i < c.size(); ++i) {
    key[2 * i] = static_cast<char>(c[i].bits & 0xFF);
    key[2 * i + 1] = static_cast<char>(c[i].bits >> 8);
  }
  return key;
}

// ---------------------------------------------------------------------------
// UnitGroup

UnitGroup::UnitGroup(AlgebraPtr algebra, std::vector<Coeffs> elements) {
  std::vector<FieldElement> flat;
  flat.reserve(elements.size() * algebra->dim());
  for (const auto& e : elements) {
    if (e.size() != algebra->dim()) throw MismatchError("element length does not match group order");
    flat.insert(flat.end(), e.begin(), e.end());
  }
  init(std::move(algebra), std::move(flat));
}

UnitGroup::UnitGroup(AlgebraPtr algebra, std::vector<FieldElement> flat) {
  init(std::move(algebra), std::move(flat));
}

void UnitGroup::init(AlgebraPtr algebra, std::vector<FieldElement> flat) {
  const std::size_t d = algebra->dim();
  if (flat.size() % d != 0) throw MismatchError("flat storage is not a multiple of the group order");
  auto storage = std::make_shared<Storage>();
  storage->algebra = std::move(algebra);
  storage->flat = std::move(flat);
  const std::size_t count = storage->flat.size() / d;
  storage->index.reserve(count);
  members_.resize(count);
  for (std::uint32_t i = 0; i < count; ++i) {
    const std::span<const FieldElement> c(storage->flat.data() + std::size_t{i} * d, d);
    if (!storage->index.emplace(coeff_key(c), i).second)
      throw Error("duplicate element in unit group: " + to_hex_string(AlgebraElement(storage->algebra, {c.begin(), c.end()})));
    members_[i] = i;
  }
  storage_ = std::move(storage);
}

AlgebraElement UnitGroup::element(std::size_t i) const {
  const auto c = coeffs(i);
  return AlgebraElement(storage_->algebra, Coeffs(c.begin(), c.end()));
}

std::optional<std::size_t> UnitGroup::find(std::span<const FieldElement> c) const {
  if (c.size() != storage_->algebra->dim()) return std::nullopt;
  const auto it = storage_->index.find(coeff_key(c));
  if (it == storage_->index.end()) return std::nullopt;
  if (!local_) return it->second;
  const std::int32_t local = (*local_)[it->second];
  if (local < 0) return std::nullopt;
  return static_cast<std::size_t>(local);
}

UnitGroup UnitGroup::subgroup(const std::vector<std::size_t>& positions) const {
  UnitGroup sub;
  sub.storage_ = storage_;
  auto local = std::make_shared<std::vector<std::int32_t>>(storage_->flat.size() / storage_->algebra->dim(), -1);
  sub.members_.reserve(positions.size());
  for (std::size_t p : positions) {
    const std::uint32_t pos = members_.at(p);
    if ((*local)[pos] >= 0) throw Error("subgroup positions contain duplicates");
    (*local)[pos] = static_cast<std::int32_t>(sub.members_.size());
    sub.members_.push_back(pos);
  }
  sub.local_ = std::move(local);
  return sub;
}

bool UnitGroup::is_subset_of(const UnitGroup& other) const {
  if (!algebra()->same_as(*other.algebra())) return false;
  for (std::size_t i = 0; i < size(); ++i)
    if (!other.find(coeffs(i))) return false;
  return true;
}

bool UnitGroup::same_set(const UnitGroup& other) const { return size() == other.size() && is_subset_of(other); }

// ---------------------------------------------------------------------------
// Enumeration

namespace {

constexpr std::uint64_t kBlockPrefixes = 1u << 14;

struct Layout {
  std::uint32_t n;
  int k;
  std::uint32_t mask;
  std::uint64_t prefixes;
};

Layout check_budget(const GroupAlgebra& a, const EnumOptions& opts) {
  const std::uint32_t n = static_cast<std::uint32_t>(a.dim());
  const int k = a.field().degree();
  const std::uint64_t bits = std::uint64_t{n} * static_cast<std::uint64_t>(k);
  if (bits > 62 || (std::uint64_t{1} << bits) > opts.budget)
    throw BudgetExceededError("exhaustive search over 2^" + std::to_string(bits) +
                              " candidates exceeds the budget of " + std::to_string(opts.budget) +
                              "; use structured mode or raise the budget");
  return {n, k, a.field().mask(), std::uint64_t{1} << (static_cast<std::uint64_t>(k) * (n - 1))};
}

// Coefficients of the candidate with the given prefix; the last coefficient
// is fixed by augmentation 1.
template <typename Out>
void decode(const Layout& L, std::uint64_t prefix, Out&& out) {
  std::uint32_t sum = 0;
  for (std::uint32_t i = 0; i + 1 < L.n; ++i) {
    const std::uint32_t c = static_cast<std::uint32_t>(prefix >> ((L.n - 2 - i) * L.k)) & L.mask;
    sum ^= c;
    out(i, c);
  }
  out(L.n - 1, sum ^ 1u);
}

using BlockEval = std::function<void(std::uint64_t first, std::uint64_t count, std::vector<FieldElement>& found)>;

std::uint64_t drive(const Layout& L, const EnumOptions& opts, const BlockEval& eval, const UnitSink& sink) {
  const unsigned workers = opts.workers ? opts.workers : default_workers();
  const std::uint64_t blocks = (L.prefixes + kBlockPrefixes - 1) / kBlockPrefixes;
  std::uint64_t total = 0;
  for (std::uint64_t start = 0; start < blocks; start += workers) {
    const std::size_t round = static_cast<std::size_t>(std::min<std::uint64_t>(workers, blocks - start));
    std::vector<std::vector<FieldElement>> found(round);
    parallel_for(round, workers, [&](std::size_t b, std::size_t e) {
      for (std::size_t i = b; i < e; ++i) {
        const std::uint64_t first = (start + i) * kBlockPrefixes;
        eval(first, std::min(kBlockPrefixes, L.prefixes - first), found[i]);
      }
    });
    for (const auto& f : found) {
      for (std::size_t off = 0; off < f.size(); off += L.n) {
        sink(std::span<const FieldElement>(f.data() + off, L.n));
        ++total;
      }
    }
  }
  return total;
}

}  // namespace

std::uint64_t for_each_unitary(const AlgebraPtr& algebra, const EnumOptions& opts, const UnitSink& sink) {
  const Layout L = check_budget(*algebra, opts);

  if (L.k > kTableFieldDegree) {
    return drive(L, opts, [&](std::uint64_t first, std::uint64_t count, std::vector<FieldElement>& found) {
      Coeffs c(L.n);
      for (std::uint64_t p = first; p < first + count; ++p) {
        decode(L, p, [&](std::uint32_t i, std::uint32_t v) { c[i] = FieldElement{v}; });
        if (is_unitary(AlgebraElement(algebra, c))) found.insert(found.end(), c.begin(), c.end());
      }
    }, sink);
  }

  const kernels::UnitaryPlan plan = kernels::make_unitary_plan(*algebra);
  const kernels::Isa isa = opts.isa ? *opts.isa : kernels::best_isa();
  if (!kernels::isa_supported(isa)) throw UsageError("requested kernel ISA is not supported here");

  return drive(L, opts, [&](std::uint64_t first, std::uint64_t count, std::vector<FieldElement>& found) {
    const std::size_t lanes = static_cast<std::size_t>(count);
    std::vector<std::uint8_t> soa(lanes * L.n), mask(lanes);
    for (std::size_t l = 0; l < lanes; ++l)
      decode(L, first + l, [&](std::uint32_t i, std::uint32_t v) { soa[i * lanes + l] = static_cast<std::uint8_t>(v); });
    kernels::unitary_mask(isa, plan, soa, lanes, mask);
    for (std::size_t l = 0; l < lanes; ++l) {
      if (!mask[l]) continue;
      for (std::uint32_t i = 0; i < L.n; ++i) found.emplace_back(std::uint32_t{soa[i * lanes + l]});
    }
  }, sink);
}

std::uint64_t for_each_normalized_unit(const AlgebraPtr& algebra, const EnumOptions& opts, const UnitSink& sink) {
  const Layout L = check_budget(*algebra, opts);
  return drive(L, opts, [&](std::uint64_t first, std::uint64_t count, std::vector<FieldElement>& found) {
    Coeffs c(L.n);
    for (std::uint64_t p = first; p < first + count; ++p) {
      decode(L, p, [&](std::uint32_t i, std::uint32_t v) { c[i] = FieldElement{v}; });
      if (is_unit(AlgebraElement(algebra, c))) found.insert(found.end(), c.begin(), c.end());
    }
  }, sink);
}

namespace {

UnitGroup collect(const AlgebraPtr& algebra, const EnumOptions& opts,
                  std::uint64_t (*each)(const AlgebraPtr&, const EnumOptions&, const UnitSink&)) {
  std::vector<FieldElement> flat;
  each(algebra, opts, [&](std::span<const FieldElement> c) { flat.insert(flat.end(), c.begin(), c.end()); });
  return UnitGroup(algebra, std::move(flat));
}

}  // namespace

UnitGroup enumerate_unitary_units(const AlgebraPtr& algebra, const EnumOptions& opts) {
  return collect(algebra, opts, &for_each_unitary);
}

UnitGroup enumerate_normalized_units(const AlgebraPtr& algebra, const EnumOptions& opts) {
  return collect(algebra, opts, &for_each_normalized_unit);
}

std::uint64_t unitary_order_formula(int n, const FieldSpec& field) {
  if (n < 2) throw UsageError("order formula needs n >= 2");
  const std::uint64_t exponent = static_cast<std::uint64_t>(field.degree()) << n;  // log2 |K|^{2^n}
  if (n > 6 || exponent + 2 > 63) throw UsageError("4 |K|^{2^n} does not fit in 64 bits");
  return std::uint64_t{1} << (exponent + 2);
}

// ---------------------------------------------------------------------------
// Structured generation

bool is_q8(const GroupSpec& g) {
  static const GroupSpec q8 = quaternion_group(2);
  return g == q8;
}

namespace {

void require_q8(const AlgebraPtr& a) {
  if (!is_q8(a->group())) throw UsageError("operation is defined for the canonical Q_8 listing only");
}

}  // namespace

AlgebraElement center_element(const AlgebraPtr& q8_algebra, const CenterParams& p) {
  require_q8(q8_algebra);
  const FieldSpec& f = q8_algebra->field();
  for (auto e : {p.r, p.s, p.t, p.u})
    if (!f.contains(e)) throw FieldError("center parameter " + element_to_hex(e) + " not in field");
  const FieldElement one_plus_r = add(f, kOne, p.r);
  return AlgebraElement(q8_algebra, {one_plus_r, p.s, p.r, p.s, p.t, p.u, p.t, p.u});
}

std::vector<AlgebraElement> center_template(const AlgebraPtr& q8_algebra) {
  require_q8(q8_algebra);
  const auto elems = enumerate_field(q8_algebra->field());
  std::vector<AlgebraElement> out;
  out.reserve(elems.size() * elems.size() * elems.size() * elems.size());
  for (auto r : elems)
    for (auto s : elems)
      for (auto t : elems)
        for (auto u : elems) out.push_back(center_element(q8_algebra, {r, s, t, u}));
  return out;
}

UnitGroup structured_unitary_generation(const AlgebraPtr& q8_algebra) {
  require_q8(q8_algebra);
  const std::size_t d = q8_algebra->dim();
  std::vector<Coeffs> products;
  Coeffs out(d);
  for (const auto& z : center_template(q8_algebra)) {
    for (std::uint32_t g = 0; g < d; ++g) {
      const auto basis = AlgebraElement::basis(q8_algebra, g);
      q8_algebra->multiply(z.coeffs(), basis.coeffs(), out);
      products.push_back(out);
    }
  }
  std::sort(products.begin(), products.end());
  products.erase(std::unique(products.begin(), products.end()), products.end());
  return UnitGroup(q8_algebra, std::move(products));
}

UnitGroup group_basis_units(const AlgebraPtr& algebra) {
  std::vector<Coeffs> elems;
  for (std::uint32_t g = 0; g < algebra->dim(); ++g) elems.push_back(AlgebraElement::basis(algebra, g).coeffs());
  return UnitGroup(algebra, std::move(elems));
}

std::vector<AlgebraElement> centralizer(const UnitGroup& u, const AlgebraElement& g) {
  if (!u.contains(g)) throw UsageError("centralizer: element " + to_hex_string(g) + " is not in the group");
  const std::size_t d = u.algebra()->dim();
  Coeffs gv(d), vg(d);
  std::vector<AlgebraElement> out;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const auto v = u.coeffs(i);
    u.algebra()->multiply(g.coeffs(), v, gv);
    u.algebra()->multiply(v, g.coeffs(), vg);
    if (gv == vg) out.push_back(u.element(i));
  }
  return out;
}

}  // namespace qalg
