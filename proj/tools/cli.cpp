#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "qalg/gmatrix.hpp"
#include "qalg/report.hpp"
#include "qalg/structure.hpp"
#include "qalg/unitary.hpp"
#include "qalg/verify.hpp"

namespace qalg::cli {

namespace {

FieldSpec field_of(const RunConfig& c) {
  if (c.modulus) return make_field(c.k, parse_poly(*c.modulus));
  return make_field(c.k);
}

GroupSpec load_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open group file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return load_group_table(buf.str());
}

bool is_builtin(const std::string& name) { return name == "q8" || name == "q16" || name == "q32" || name == "q64"; }

// --group takes a built-in name or, failing that, a table path.
GroupSpec group_of(const RunConfig& c) {
  if (c.group_file) return load_table_file(*c.group_file);
  if (!is_builtin(c.group) && std::ifstream(c.group)) return load_table_file(c.group);
  return builtin_group(c.group);
}

std::string group_name(const RunConfig& c) { return c.group_file ? *c.group_file : c.group; }

EnumOptions enum_options(const RunConfig& c) {
  EnumOptions o;
  if (c.budget) o.budget = c.budget;
  if (c.allow_large) o.budget = ~std::uint64_t{0};
  o.workers = c.workers;
  return o;
}

void validate(const RunConfig& c) {
  if (c.k < 1) throw UsageError("--k must be at least 1");
  if (c.mode != "brute" && c.mode != "structured") throw UsageError("--mode must be brute or structured");
  if (c.format != "text" && c.format != "json") throw UsageError("--format must be text or json");
  if (c.mode == "structured" && (c.group_file || c.group != "q8"))
    throw UsageError("--mode structured is only available for --group q8");
}

UnitGroup unitary_group(const RunConfig& c, const AlgebraPtr& a) {
  if (c.mode == "structured") return structured_unitary_generation(a);
  return enumerate_unitary_units(a, enum_options(c));
}

int field_info(const RunConfig& c, std::ostream& out) {
  const FieldSpec f = field_of(c);
  if (c.format == "json") {
    nlohmann::json j{{"k", f.degree()}, {"modulus", poly_to_string(f.modulus())}, {"order", f.order()}};
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << "field GF(2^" << f.degree() << ")\n";
  out << "modulus " << poly_to_string(f.modulus()) << "\n";
  out << "order " << f.order() << "\n";
  if (f.degree() <= 4) {
    out << "multiplication table\n";
    for (auto a : enumerate_field(f)) {
      for (auto b : enumerate_field(f)) out << (b.bits ? " " : "") << element_to_hex(f.mul(a, b));
      out << "\n";
    }
  }
  return kOk;
}

int enumerate(const RunConfig& c, std::ostream& out) {
  const AlgebraPtr a = make_algebra(field_of(c), group_of(c));
  std::ofstream file;
  std::ostream* sink = &out;
  if (c.out && !c.count_only) {
    file.open(*c.out);
    if (!file) throw UsageError("cannot write '" + *c.out + "'");
    sink = &file;
  }
  auto emit = [&](std::span<const FieldElement> coeffs) {
    for (std::size_t i = 0; i < coeffs.size(); ++i) *sink << (i ? "," : "") << element_to_hex(coeffs[i]);
    *sink << "\n";
  };

  std::uint64_t count = 0;
  if (c.mode == "structured") {
    const UnitGroup u = structured_unitary_generation(a);
    count = u.size();
    if (!c.count_only)
      for (std::size_t i = 0; i < u.size(); ++i) emit(u.coeffs(i));
  } else if (c.count_only) {
    count = for_each_unitary(a, enum_options(c), [](std::span<const FieldElement>) {});
  } else {
    count = for_each_unitary(a, enum_options(c), emit);
  }
  if (c.count_only) out << count << "\n";
  return kOk;
}

int analyze(const RunConfig& c, std::ostream& out) {
  const FieldSpec f = field_of(c);
  const AlgebraPtr a = make_algebra(f, group_of(c));
  const UnitGroup u = unitary_group(c, a);
  HamiltonianOptions ho;
  ho.seed = c.seed;
  ho.workers = c.workers;
  const StructureReport r = analyze_structure(u, ho);
  if (c.format == "json") {
    nlohmann::json j = r;
    j["group"] = group_name(c);
    j["k"] = f.degree();
    j["modulus"] = poly_to_string(f.modulus());
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << "group " << group_name(c) << " over GF(2^" << f.degree() << "), modulus " << poly_to_string(f.modulus())
      << "\n";
  out << "group_order " << r.group_order << "\n";
  out << "center_order " << r.center_order << "\n";
  out << "center_is_elementary_abelian " << (r.center_is_elementary_abelian ? "true" : "false") << "\n";
  out << "exponent " << r.exponent << "\n";
  out << "order_census";
  for (const auto& [o, n] : r.order_census) out << " " << o << ":" << n;
  out << "\n";
  out << "commutator_subgroup_order " << r.commutator_subgroup_order << "\n";
  out << "is_hamiltonian " << (r.is_hamiltonian ? "true" : "false") << " ("
      << (r.hamiltonian_sampled ? "sampled" : "exhaustive") << ")\n";
  if (r.decomposition)
    out << "decomposition C_2^" << r.decomposition->rank_m << " x Q_8\n";
  else
    out << "decomposition none\n";
  return kOk;
}

int matrix_dump(const RunConfig& c, std::ostream& out) {
  const AlgebraPtr a = make_algebra(field_of(c), group_of(c));
  const AlgebraElement w = c.element.empty() ? AlgebraElement::one(a) : parse_hex_element(a, c.element);
  const Matrix m = rg_matrix(w);
  out << to_string(m);
  if (c.blocks) {
    if (!is_q8(a->group())) throw UsageError("--blocks needs --group q8");
    const auto b = q8_block_decompose(m);
    out << "A\n" << to_string(b.a) << "B\n" << to_string(b.b) << "C\n" << to_string(b.c);
  }
  return kOk;
}

int verify(const RunConfig& c, std::ostream& out) {
  VerifyOptions o;
  o.k = c.k;
  o.seed = c.seed;
  o.workers = c.workers;
  if (c.budget) o.budget = c.budget;
  const auto claims = verify_paper(o);
  out << format_claims(o, claims);
  return all_passed(claims) ? kOk : kClaimFailure;
}

}  // namespace

int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
  try {
    validate(c);
    if (c.command == "field-info") return field_info(c, out);
    if (c.command == "enumerate-unitary") return enumerate(c, out);
    if (c.command == "analyze-structure") return analyze(c, out);
    if (c.command == "matrix-dump") return matrix_dump(c, out);
    if (c.command == "verify-paper") return verify(c, out);
    throw UsageError("unknown command '" + c.command + "'");
  } catch (const BudgetExceededError& e) {
    err << "error: " << e.what() << "\n";
    return kBudget;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Unit groups of modular group algebras F_{2^k} G"};
  app.require_subcommand(1);
  RunConfig c;

  auto add_field = [&](CLI::App* s) {
    s->add_option("--k", c.k, "Extension degree of GF(2^k)")->check(CLI::Range(1, kMaxFieldDegree));
    s->add_option("--modulus", c.modulus, "Irreducible modulus, e.g. x^3+x^2+1");
  };
  auto add_group = [&](CLI::App* s) {
    auto* g = s->add_option("--group", c.group, "Built-in group (q8, q16, q32, q64) or group table path");
    s->add_option("--group-file", c.group_file, "Group table file")->excludes(g);
  };
  auto add_run = [&](CLI::App* s) {
    s->add_option("--workers", c.workers, "Worker threads (default: QALG_WORKERS or 1)");
    s->add_option("--budget", c.budget, "Maximum number of candidate vectors");
    s->add_option("--seed", c.seed, "Seed for sampled checks");
  };

  auto* field_info = app.add_subcommand("field-info", "Print the field modulus and tables");
  add_field(field_info);
  field_info->add_option("--format", c.format)->check(CLI::IsMember({"text", "json"}));

  auto* enumerate = app.add_subcommand("enumerate-unitary", "List the unitary units");
  add_field(enumerate);
  add_group(enumerate);
  add_run(enumerate);
  enumerate->add_option("--mode", c.mode)->check(CLI::IsMember({"brute", "structured"}));
  enumerate->add_option("--out", c.out, "Output file (default stdout)");
  enumerate->add_flag("--count-only", c.count_only, "Print only the number of elements");
  enumerate->add_flag("--allow-large", c.allow_large, "Lift the enumeration budget");

  auto* analyze = app.add_subcommand("analyze-structure", "Structure report for V_*");
  add_field(analyze);
  add_group(analyze);
  add_run(analyze);
  analyze->add_option("--mode", c.mode)->check(CLI::IsMember({"brute", "structured"}));
  analyze->add_option("--format", c.format)->check(CLI::IsMember({"text", "json"}));
  bool json = false;
  analyze->add_flag("--json", json, "Same as --format json");

  auto* dump = app.add_subcommand("matrix-dump", "Print sigma(w) for an element");
  add_field(dump);
  add_group(dump);
  dump->add_option("--element", c.element, "Comma-separated hex coefficients (default 1)");
  dump->add_flag("--blocks", c.blocks, "Also print the Q_8 blocks A, B, C");

  auto* verify = app.add_subcommand("verify-paper", "Check every structure claim; nonzero exit on failure");
  add_field(verify);
  add_run(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  if (json) c.format = "json";
  c.command = app.get_subcommands().front()->get_name();
  if (c.command == "verify-paper" && c.modulus) {
    err << "error: verify-paper uses the default modulus\n";
    return kUsage;
  }
  return run(c, out, err);
}

}  // namespace qalg::cli
