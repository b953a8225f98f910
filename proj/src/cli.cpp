#include "codegree/cli.hpp"

#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "codegree/catalog.hpp"
#include "codegree/chartab.hpp"
#include "codegree/criterion.hpp"
#include "codegree/cyclotomic.hpp"
#include "codegree/verifier.hpp"

namespace codegree::cli {

namespace {

using nlohmann::ordered_json;

struct Options {
  bool json = false;
  std::string k_text;
  unsigned s = 2;
  bool allow_equalities = false;
  bool serial = false;
  GridConfig grid;

  std::string verify_which;
  std::string family;
  std::optional<unsigned> n;
  std::optional<std::string> q;
  std::optional<unsigned> m;
  std::optional<std::string> name;
  std::string table_file;
  unsigned cyclotomic_n = 1;
  std::optional<std::string> at;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

Rational resolve_k(const Options& o) {
  if (o.k_text.empty()) return constant_a();
  Rational k;
  try {
    k = Rational::parse(o.k_text);
  } catch (const std::exception& e) {
    throw UsageError(std::string("--k: ") + e.what());
  }
  if (k.sign() <= 0) throw UsageError("--k must be positive");
  return k;
}

ordered_json case_json(const CaseRecord& c) {
  return {{"params", c.params}, {"lhs", c.lhs}, {"relation", c.relation}, {"rhs", c.rhs}, {"strict_claimed", c.strict_claimed}};
}

ordered_json report_json(const VerifyReport& r) {
  ordered_json j;
  j["check_name"] = r.check_name;
  j["cases_checked"] = r.cases_checked;
  j["strict_passes"] = r.strict_passes;
  j["equalities"] = ordered_json::array();
  for (const auto& c : r.equalities) j["equalities"].push_back(case_json(c));
  j["failures"] = ordered_json::array();
  for (const auto& c : r.failures) j["failures"].push_back(case_json(c));
  j["facts"] = ordered_json::array();
  for (const auto& f : r.facts) j["facts"].push_back({{"name", f.name}, {"holds", f.holds}});
  return j;
}

void print_header(std::ostream& out, const Rational& k) {
  out << "k = " << k.str() << " (~" << k.decimal() << ")\n";
  out << "a = " << constant_a().str() << " (~" << constant_a().decimal() << ")\n";
}

void print_report(std::ostream& out, const VerifyReport& r, bool allow_equalities) {
  out << "[" << r.check_name << "] cases=" << r.cases_checked << " strict=" << r.strict_passes
      << " equalities=" << r.equalities.size() << " failures=" << r.failures.size() << " -> "
      << (r.clean(allow_equalities) ? "PASS" : "FAIL") << "\n";
  for (const auto& c : r.equalities)
    out << "  EQUALITY " << c.params << ": " << c.lhs << " = " << c.rhs << " (claimed " << c.relation
        << (c.strict_claimed ? ", strict" : ", boundary allowed") << ")\n";
  for (const auto& c : r.failures)
    out << "  FAILURE  " << c.params << ": claimed " << c.lhs << " " << c.relation << " " << c.rhs << "\n";
  for (const auto& f : r.facts) out << "  fact: " << f.name << ": " << (f.holds ? "yes" : "NO") << "\n";
}

int cmd_verify(const Options& o, std::ostream& out) {
  GridConfig cfg = o.grid;
  cfg.k = resolve_k(o);
  try {
    cfg.validate();
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  const Execution exec = o.serial ? Execution::serial : Execution::parallel;
  const Catalog& catalog = Catalog::bundled();
  std::vector<VerifyReport> reports;
  const std::string& w = o.verify_which;
  const bool all = w == "all";
  if (all || w == "p1") reports.push_back(verify_lemma_p1(cfg, catalog, exec));
  if (all || w == "an-algebra") reports.push_back(verify_an_algebra(cfg, catalog, exec));
  if (all || w == "arith") reports.push_back(verify_lemma_arith(cfg, exec));
  if (all || w == "simple") reports.push_back(verify_lemma_simple(cfg));
  if (all || w == "cases") reports.push_back(verify_theorem_cases(cfg, catalog, exec));
  if (all || w == "simple-g") reports.push_back(verify_simple_g_cases(cfg, catalog, exec));

  bool ok = true;
  for (const auto& r : reports) ok = ok && r.clean(o.allow_equalities);
  if (o.json) {
    ordered_json j;
    j["k"] = cfg.k.str();
    j["a"] = constant_a().str();
    j["ok"] = ok;
    j["reports"] = ordered_json::array();
    for (const auto& r : reports) j["reports"].push_back(report_json(r));
    out << j.dump(2) << "\n";
  } else {
    print_header(out, cfg.k);
    for (const auto& r : reports) print_report(out, r, o.allow_equalities);
  }
  return ok ? kOk : kViolation;
}

int cmd_sharpness(const Options& o, std::ostream& out) {
  const auto rep = sharpness_scan(Catalog::bundled());
  const Rational& a = constant_a();
  if (o.json) {
    ordered_json j;
    j["a"] = a.str();
    j["maximum"] = rep.maximum.str();
    j["argmax"] = rep.argmax;
    j["maximum_is_a"] = rep.maximum_is_a;
    j["unique_at_on"] = rep.unique_at_on;
    auto row_json = [](const SharpnessRow& r) {
      return ordered_json{{"name", r.name},
                          {"degree", to_string(r.degree)},
                          {"order", r.order.str()},
                          {"ratio", r.ratio.str()},
                          {"ratio_decimal", r.ratio.decimal()},
                          {"versus_a", std::string(ordering_name(r.versus_a))}};
    };
    j["fi22"] = row_json(rep.fi22);
    j["fi22_exceeds_a"] = rep.fi22_exceeds_a;
    j["rows"] = ordered_json::array();
    for (const auto& r : rep.rows) j["rows"].push_back(row_json(r));
    j["ok"] = rep.ok();
    out << j.dump(2) << "\n";
  } else {
    out << "a = " << a.str() << " (~" << a.decimal() << ")\n";
    for (const auto& r : rep.rows)
      out << "  " << r.name << ": degree " << to_string(r.degree) << ", degree^3/|S| = " << r.ratio.str() << " (~"
          << r.ratio.decimal() << ") " << ordering_name(r.versus_a) << " than a\n";
    out << "maximum = " << rep.maximum.str() << " at";
    for (const auto& n : rep.argmax) out << " " << n;
    out << (rep.maximum_is_a ? " (equals a)" : " (differs from a)") << (rep.unique_at_on ? ", unique at ON" : "") << "\n";
    out << "Fi22 (excluded): degree " << to_string(rep.fi22.degree) << ", ratio " << rep.fi22.ratio.str() << " ("
        << ordering_name(rep.fi22.versus_a) << " than a)\n";
    out << (rep.ok() ? "PASS" : "FAIL") << "\n";
  }
  return rep.ok() ? kOk : kViolation;
}

GroupDescriptor descriptor_from(const Options& o) {
  auto fam = parse_family(o.family);
  if (!fam) throw UsageError("unknown family '" + o.family + "'");
  auto need_n = [&]() -> unsigned {
    if (!o.n) throw UsageError("family " + o.family + " needs --n");
    return *o.n;
  };
  auto need_q = [&]() -> BigInt {
    if (!o.q) throw UsageError("family " + o.family + " needs --q");
    try {
      return parse_bigint(*o.q);
    } catch (const std::exception& e) {
      throw UsageError(std::string("--q: ") + e.what());
    }
  };
  switch (*fam) {
    case Family::Alt:
      return GroupDescriptor::alternating(need_n());
    case Family::Tits:
      return GroupDescriptor::tits();
    case Family::Sporadic:
      if (!o.name) throw UsageError("Sporadic needs --name");
      return GroupDescriptor::sporadic(*o.name);
    case Family::Suzuki:
    case Family::Ree:
    case Family::ReeF4:
      if (!o.m) throw UsageError("family " + o.family + " needs --m");
      return GroupDescriptor::suzuki_ree(*fam, *o.m);
    case Family::A:
    case Family::TwistedA:
    case Family::B:
    case Family::C:
    case Family::D:
    case Family::TwistedD:
      return GroupDescriptor::lie(*fam, need_n(), need_q());
    default:
      return GroupDescriptor::lie(*fam, 0, need_q());
  }
}

int cmd_group(const Options& o, std::ostream& out) {
  const auto d = descriptor_from(o);
  const Catalog& catalog = Catalog::bundled();
  ordered_json j;
  j["group"] = d.str();
  j["family"] = std::string(family_name(d.family()));
  const auto order = catalog.order(d);
  j["order"] = to_string(order.value());
  j["order_factored"] = order.str();
  if (is_lie_type(d.family())) {
    j["characteristic"] = to_string(d.p());
    j["steinberg_degree"] = to_string(catalog.steinberg_degree(d));
  }
  if (has_theta1(d.family()) && !(d.family() == Family::A && d.n() < 2))
    j["theta1_degree"] = to_string(theta1_degree(d));
  if (d.family() == Family::Alt) j["alternating_theta"] = to_string(alternating_theta(d.n()));
  if (d.family() == Family::Sporadic || d.family() == Family::Tits) {
    const auto& row = catalog.sporadic_row(d.sporadic_name());
    j["min_ext_degree"] = to_string(row.min_ext_degree);
    j["char_label"] = row.char_label;
    j["out"] = row.out_exact;
  }
  try {
    j["out_bound"] = to_string(out_bound(d));
  } catch (const DomainError&) {
    // no bound used for this family
  }
  if (o.json) {
    out << j.dump(2) << "\n";
  } else {
    for (const auto& [key, value] : j.items())
      out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
  }
  return kOk;
}

int cmd_table_check(const Options& o, std::ostream& out) {
  const Rational k = resolve_k(o);
  CharacterTable t;
  try {
    t = load_table(o.table_file);
  } catch (const TableError& e) {
    throw UsageError(e.what());
  }
  const auto spectrum = codegree_spectrum(t);
  const auto v = theorem_a_check(t, k, o.s);
  const bool ok = v.hypothesis_holds && v.consistent_with_theorem && !v.metadata_mismatch;
  auto case_j = [](const CriterionCase& c) {
    return ordered_json{{"label", c.entry.label},
                        {"degree", to_string(c.entry.degree)},
                        {"kernel_index", to_string(c.entry.kernel_index)},
                        {"lhs", c.lhs.str()},
                        {"rhs", to_string(c.rhs)}};
  };
  if (o.json) {
    ordered_json j;
    j["name"] = t.name;
    j["k"] = k.str();
    j["a"] = constant_a().str();
    j["s"] = o.s;
    j["spectrum"] = ordered_json::array();
    for (const auto& e : spectrum)
      j["spectrum"].push_back({{"label", e.label},
                               {"degree", e.degree},
                               {"kernel_order", e.kernel_order},
                               {"codegree", to_string(e.codegree)}});
    j["hypothesis_holds"] = v.hypothesis_holds;
    j["violations"] = ordered_json::array();
    for (const auto& c : v.criterion.violations) j["violations"].push_back(case_j(c));
    j["equalities"] = ordered_json::array();
    for (const auto& c : v.criterion.equalities) j["equalities"].push_back(case_j(c));
    j["solvable"] = v.solvable;
    j["metadata_mismatch"] = v.metadata_mismatch;
    j["theorem_applies"] = v.theorem_applies;
    j["consistent_with_theorem"] = v.consistent_with_theorem;
    out << j.dump(2) << "\n";
  } else {
    print_header(out, k);
    out << "table " << t.name << " (order " << t.order << "), s = " << o.s << "\n";
    for (const auto& e : spectrum)
      out << "  " << e.label << ": degree " << e.degree << ", |ker| " << e.kernel_order << ", cod "
          << to_string(e.codegree) << "\n";
    for (const auto& c : v.criterion.violations)
      out << "  VIOLATION " << c.entry.label << ": k*cod = " << c.lhs.str() << " > degree^s = " << to_string(c.rhs)
          << "\n";
    for (const auto& c : v.criterion.equalities)
      out << "  EQUALITY  " << c.entry.label << ": k*cod = degree^s = " << to_string(c.rhs) << "\n";
    out << "hypothesis " << (v.hypothesis_holds ? "holds" : "fails") << "; solvable " << (v.solvable ? "yes" : "no")
        << "; consistent with theorem " << (v.consistent_with_theorem ? "yes" : "NO") << "\n";
    if (v.metadata_mismatch) out << "solvable flag in the file disagrees with the lattice\n";
  }
  return ok ? kOk : kViolation;
}

int cmd_cyclotomic(const Options& o, std::ostream& out) {
  if (o.cyclotomic_n < 1) throw UsageError("n must be >= 1");
  const auto& p = cyclotomic(o.cyclotomic_n);
  ordered_json j;
  j["n"] = o.cyclotomic_n;
  j["polynomial"] = p.str();
  j["degree"] = p.degree();
  if (o.at) {
    BigInt x;
    try {
      x = parse_bigint(*o.at);
    } catch (const std::exception& e) {
      throw UsageError(std::string("--at: ") + e.what());
    }
    j["at"] = to_string(x);
    j["value"] = to_string(eval_poly(p, x));
  }
  if (o.json) {
    out << j.dump(2) << "\n";
  } else {
    out << "Phi_" << o.cyclotomic_n << "(x) = " << p.str() << "\n";
    if (o.at) out << "Phi_" << o.cyclotomic_n << "(" << j["at"].get<std::string>() << ") = " << j["value"].get<std::string>() << "\n";
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact verification of codegree solvability bounds", "codegree"};
  app.require_subcommand(1);
  app.add_flag("--json", o.json, "Machine-readable output");
  app.add_option("--k", o.k_text, "Constant k as num/den or integer (default: a)");
  app.add_option("--s", o.s, "Exponent s in k*cod(chi) <= chi(1)^s")->check(CLI::PositiveNumber);
  app.add_flag("--allow-equalities", o.allow_equalities, "Treat boundary equalities as warnings");
  app.add_flag("--serial", o.serial, "Use the serial reference path for grid checks");
  app.add_option("--q-max", o.grid.q_max, "Largest field size on the grid");
  app.add_option("--n-max", o.grid.n_max, "Largest rank on the grid");
  app.add_option("--alt-max", o.grid.alt_max, "Largest alternating degree");
  app.add_option("--m-max", o.grid.m_max, "Largest m for Suzuki/Ree families");
  app.add_option("--f-max", o.grid.f_max, "Largest exponent f in q = p^f");
  app.add_option("--p-max", o.grid.p_max, "Largest prime p");
  app.add_option("--t-max", o.grid.t_max, "Largest number of simple factors t");

  auto* verify = app.add_subcommand("verify", "Re-verify inequality chains over parameter grids");
  verify->add_option("check", o.verify_which, "p1 | an-algebra | arith | simple | cases | simple-g | all")
      ->required()
      ->check(CLI::IsMember({"p1", "an-algebra", "arith", "simple", "cases", "simple-g", "all"}));

  auto* sharp = app.add_subcommand("sharpness", "Scan sporadic degree ratios for the maximum degree^3/|S|");

  auto* group = app.add_subcommand("group", "Order and degrees of a simple group");
  group->add_option("family", o.family, "Alt, A, 2A, B, C, D, 2D, 3D4, G2, F4, E6, 2E6, E7, E8, 2B2, 2G2, 2F4, Tits, Sporadic")
      ->required();
  group->add_option("--n", o.n, "Rank, or degree for Alt");
  group->add_option("--q", o.q, "Field size (Q for 2D, 2E6, 3D4)");
  group->add_option("--m", o.m, "Q = p^(2m+1) for 2B2, 2G2, 2F4");
  group->add_option("--name", o.name, "Sporadic group name");

  auto* table = app.add_subcommand("table", "Character-table tools");
  table->require_subcommand(1);
  auto* check = table->add_subcommand("check", "Codegree spectrum and criterion on a table file");
  check->add_option("file", o.table_file, "Table JSON file")->required();

  auto* cyclo = app.add_subcommand("cyclotomic", "Cyclotomic polynomial Phi_n");
  cyclo->add_option("n", o.cyclotomic_n, "Index n >= 1")->required()->check(CLI::PositiveNumber);
  cyclo->add_option("--at", o.at, "Evaluate at an integer");

  for (auto* sub : {verify, sharp, group, table, check, cyclo}) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (verify->parsed()) return cmd_verify(o, out);
    if (sharp->parsed()) return cmd_sharpness(o, out);
    if (group->parsed()) return cmd_group(o, out);
    if (check->parsed()) return cmd_table_check(o, out);
    if (cyclo->parsed()) return cmd_cyclotomic(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  err << "error: no command\n";
  return kUsage;
}

}  // namespace codegree::cli
