#include "qalg/groups.hpp"

#include <random>
#include <sstream>

namespace qalg {

namespace {

using Kind = GroupTableError::Kind;

std::string cell(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

GroupSpec::GroupSpec(std::vector<std::string> labels, std::vector<std::uint32_t> table)
    : labels_(std::move(labels)), table_(std::move(table)) {
  const std::size_t n = labels_.size();
  if (n == 0) throw GroupTableError(Kind::parse, "group must have at least one element");
  if (table_.size() != n * n)
    throw GroupTableError(Kind::parse, "table has " + std::to_string(table_.size()) + " cells, expected " +
                                           std::to_string(n * n));
  for (std::size_t c = 0; c < table_.size(); ++c) {
    if (table_[c] >= n)
      throw GroupTableError(Kind::parse, "entry " + std::to_string(table_[c]) + " at cell " + cell(c / n, c % n) +
                                             " is out of range");
  }

  // Latin square: every row and column a permutation.
  std::vector<std::uint32_t> seen(n);
  std::uint32_t stamp = 0;
  for (std::size_t i = 0; i < n; ++i) {
    ++stamp;
    for (std::size_t j = 0; j < n; ++j) {
      auto& s = seen[table_[i * n + j]];
      if (s == stamp)
        throw GroupTableError(Kind::latin_square, "row " + std::to_string(i) + " repeats entry " +
                                                      std::to_string(table_[i * n + j]) + " at cell " + cell(i, j));
      s = stamp;
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    ++stamp;
    for (std::size_t i = 0; i < n; ++i) {
      auto& s = seen[table_[i * n + j]];
      if (s == stamp)
        throw GroupTableError(Kind::latin_square, "column " + std::to_string(j) + " repeats entry " +
                                                      std::to_string(table_[i * n + j]) + " at cell " + cell(i, j));
      s = stamp;
    }
  }

  // In a Latin square the identity is the unique e with e*e = e, provided
  // its row is the identity permutation.
  bool found = false;
  for (std::uint32_t e = 0; e < n && !found; ++e) {
    if (mul(e, e) != e) continue;
    bool ok = true;
    for (std::uint32_t j = 0; j < n && ok; ++j) ok = mul(e, j) == j && mul(j, e) == j;
    if (ok) {
      identity_ = e;
      found = true;
    }
  }
  if (!found) throw GroupTableError(Kind::identity, "table has no two-sided identity");

  inverse_.resize(n);
  for (std::uint32_t g = 0; g < n; ++g)
    for (std::uint32_t h = 0; h < n; ++h)
      if (mul(g, h) == identity_) inverse_[g] = h;

  auto check = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
    if (mul(mul(a, b), c) != mul(a, mul(b, c)))
      throw GroupTableError(Kind::associativity, "associativity fails for triple (" + labels_[a] + ", " +
                                                     labels_[b] + ", " + labels_[c] + ") = indices (" +
                                                     std::to_string(a) + "," + std::to_string(b) + "," +
                                                     std::to_string(c) + ")");
  };
  if (n <= kFullAssociativityLimit) {
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t b = 0; b < n; ++b)
        for (std::uint32_t c = 0; c < n; ++c) check(a, b, c);
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(n - 1));
    for (std::size_t s = 0; s < kAssociativitySamples; ++s) check(pick(rng), pick(rng), pick(rng));
  }
}

std::optional<std::uint32_t> GroupSpec::find_label(std::string_view label) const {
  for (std::uint32_t i = 0; i < order(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

GroupSpec quaternion_group(int n) {
  if (n < 2 || n > 5) throw UsageError("quaternion_group: n must be in 2..5, got " + std::to_string(n));
  const std::uint32_t m = 1u << n;  // order of x
  const std::uint32_t half = m / 2;
  const std::uint32_t order = 2 * m;

  std::vector<std::string> labels(order);
  for (std::uint32_t e = 0; e < 2; ++e) {
    for (std::uint32_t i = 0; i < m; ++i) {
      std::string s;
      if (i == 1) s = "x";
      if (i > 1) s = "x^" + std::to_string(i);
      if (e == 1) s += s.empty() ? "y" : "*y";
      labels[i + e * m] = s.empty() ? "1" : s;
    }
  }

  // (x^i y^e)(x^j y^f): y x^j = x^{-j} y, and y^2 = x^{half}.
  std::vector<std::uint32_t> table(std::size_t{order} * order);
  for (std::uint32_t g = 0; g < order; ++g) {
    const std::uint32_t i = g % m, e = g / m;
    for (std::uint32_t h = 0; h < order; ++h) {
      const std::uint32_t j = h % m, f = h / m;
      std::uint32_t power = e == 0 ? i + j : i + m - j;
      std::uint32_t ypow = e + f;
      if (ypow == 2) {
        power += half;
        ypow = 0;
      }
      table[std::size_t{g} * order + h] = power % m + ypow * m;
    }
  }
  return GroupSpec(std::move(labels), std::move(table));
}

GroupSpec builtin_group(std::string_view name) {
  if (name == "q8") return quaternion_group(2);
  if (name == "q16") return quaternion_group(3);
  if (name == "q32") return quaternion_group(4);
  if (name == "q64") return quaternion_group(5);
  throw UsageError("unknown built-in group '" + std::string(name) + "' (expected q8, q16, q32 or q64)");
}

GroupElement multiply(const GroupSpec& g, GroupElement a, GroupElement b) { return {g.mul(a.index, b.index)}; }

GroupElement inverse_of(const GroupSpec& g, GroupElement a) { return {g.inverse(a.index)}; }

std::uint32_t element_order(const GroupSpec& g, GroupElement a) {
  std::uint32_t m = 1;
  for (std::uint32_t p = a.index; p != g.identity(); p = g.mul(p, a.index)) ++m;
  return m;
}

GroupSpec load_group_table(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  auto next_line = [&](const char* what) {
    while (std::getline(in, line)) {
      if (line.find_first_not_of(" \t\r") != std::string::npos) return;
    }
    throw GroupTableError(Kind::parse, std::string("unexpected end of input while reading ") + what);
  };

  next_line("header");
  std::istringstream header(line);
  std::string keyword;
  long long n = 0;
  if (!(header >> keyword >> n) || keyword != "order" || n <= 0)
    throw GroupTableError(Kind::parse, "first line must be 'order n', got '" + line + "'");

  next_line("labels");
  std::vector<std::string> labels;
  {
    std::istringstream ls(line);
    for (std::string l; ls >> l;) labels.push_back(l);
  }
  if (labels.size() != static_cast<std::size_t>(n))
    throw GroupTableError(Kind::parse, "expected " + std::to_string(n) + " labels, got " +
                                           std::to_string(labels.size()));

  std::vector<std::uint32_t> table;
  table.reserve(static_cast<std::size_t>(n * n));
  for (long long i = 0; i < n; ++i) {
    next_line("table row");
    std::istringstream rs(line);
    long long v = 0;
    long long count = 0;
    while (rs >> v) {
      if (v < 0 || v >= n)
        throw GroupTableError(Kind::parse, "row " + std::to_string(i) + ": entry " + std::to_string(v) +
                                               " out of range");
      table.push_back(static_cast<std::uint32_t>(v));
      ++count;
    }
    if (!rs.eof() || count != n)
      throw GroupTableError(Kind::parse, "row " + std::to_string(i) + " must hold " + std::to_string(n) +
                                             " integers: '" + line + "'");
  }
  return GroupSpec(std::move(labels), std::move(table));
}

std::string serialize_group_table(const GroupSpec& g) {
  std::ostringstream out;
  const std::size_t n = g.order();
  out << "order " << n << "\n";
  for (std::size_t i = 0; i < n; ++i) out << (i ? " " : "") << g.label(i);
  out << "\n";
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out << (j ? " " : "") << g.table()[i * n + j];
    out << "\n";
  }
  return out.str();
}

}  // namespace qalg
