#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ctk/analysis.hpp"
#include "ctk/chartab.hpp"
#include "ctk/dixon.hpp"
#include "ctk/families.hpp"
#include "ctk/numtheory.hpp"
#include "ctk/permgroup.hpp"
#include "json.hpp"

namespace {

using nlohmann::ordered_json;
using namespace ctk;

// Invocation problems that are not library errors: missing files, bad flag
// combinations.  Mapped to exit code 1.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string suite;
  std::string gens, table, out, name, fixtures;
  std::vector<std::string> tables;
  std::vector<int64_t> sweep;
  int64_t q = 0;
  int n = 0;
  int64_t cap = 0;
  int64_t count = 1000;
  bool json = false;
  bool nilpotent = false;
  bool verbose = false;
};

int64_t effective_cap(int64_t flag_cap) {
  if (flag_cap > 0) return flag_cap;
  if (const char* env = std::getenv("CTK_ENUM_CAP")) {
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return kDefaultEnumCap;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string stem_of(const std::string& path) {
  return std::filesystem::path(path).stem().string();
}

CharacterTable table_from_gens(const Options& opt, const std::string& path) {
  if (opt.verbose) std::cerr << "enumerating " << path << "\n";
  GroupData g = enumerate(parse_gens(read_file(path)).generators,
                          effective_cap(opt.cap));
  if (opt.verbose)
    std::cerr << "group of order " << g.order() << ", " << g.num_classes()
              << " classes\n";
  std::string name = opt.name.empty() ? stem_of(path) : opt.name;
  return character_table(g, name);
}

std::string rat_line(const Rational& q) {
  return rational_str(q) + " = " + decimal_str(q, 10);
}

ordered_json rat_json(const Rational& q) {
  return ordered_json{{"rational", rational_str(q)},
                      {"decimal", decimal_str(q, 10)}};
}

bool all_pass(const std::vector<Verdict>& v) {
  return std::all_of(v.begin(), v.end(),
                     [](const Verdict& x) { return x.pass; });
}

void print_verdicts(std::ostream& os, const std::vector<Verdict>& v) {
  for (const auto& x : v) {
    os << "  " << x.name << ": " << (x.pass ? "PASS" : "FAIL");
    if (!x.pass && !x.detail.empty()) os << " (" << x.detail << ")";
    os << "\n";
  }
}

ordered_json verdicts_json(const std::vector<Verdict>& v) {
  ordered_json arr = ordered_json::array();
  for (const auto& x : v)
    arr.push_back(ordered_json{
        {"name", x.name}, {"pass", x.pass}, {"detail", x.detail}});
  return arr;
}

void emit_json(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

void write_output(const std::string& out, const std::string& text) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw UsageError("cannot write " + out);
  f << text;
}

// ---------------------------------------------------------------------------

int run_table(const Options& opt) {
  CharacterTable t = table_from_gens(opt, opt.gens);
  write_output(opt.out, render_table(t));
  return 0;
}

int run_analyze(const Options& opt) {
  if (opt.gens.empty() == opt.table.empty())
    throw UsageError("analyze needs exactly one of --gens or --table");
  CharacterTable t;
  bool nilp = false;
  if (!opt.gens.empty()) {
    GroupData g = enumerate(parse_gens(read_file(opt.gens)).generators,
                            effective_cap(opt.cap));
    nilp = is_nilpotent(g);
    t = character_table(g, opt.name.empty() ? stem_of(opt.gens) : opt.name);
  } else {
    t = parse_table(read_file(opt.table));
    nilp = opt.nilpotent;
  }
  AnalysisReport r = analyze(t, nilp);
  if (opt.json) {
    ordered_json j{{"schema", 1}};
    j.update(report_json(r));
    emit_json(j);
  } else {
    std::cout << "name: " << r.name << "\n"
              << "order: " << r.group_order << "\n"
              << "nilpotent: " << (r.nilpotent ? "yes" : "no") << "\n"
              << "theta: " << rat_line(r.theta) << "\n"
              << "theta_prime: " << rat_line(r.theta_prime) << "\n"
              << "verdicts:\n";
    print_verdicts(std::cout, r.verdicts);
  }
  return all_pass(r.verdicts) ? 0 : 4;
}

struct VerifyTarget {
  std::string name;
  CharacterTable table;
  bool nilpotent_known = false;
  bool nilpotent = false;
};

int run_verify(const Options& opt) {
  bool want_classical = opt.suite == "classical" || opt.suite == "all";
  bool want_nilpotent = opt.suite == "nilpotent" || opt.suite == "all";
  bool want_primepower = opt.suite == "primepower" || opt.suite == "all";
  bool want_congruence = opt.suite == "congruence" || opt.suite == "all";

  std::vector<VerifyTarget> targets;
  if (!opt.fixtures.empty()) {
    std::vector<std::string> paths;
    for (const auto& entry : std::filesystem::directory_iterator(opt.fixtures))
      if (entry.path().extension() == ".gens")
        paths.push_back(entry.path().string());
    if (paths.empty())
      throw UsageError("no .gens files under " + opt.fixtures);
    std::sort(paths.begin(), paths.end());
    for (const auto& p : paths) {
      if (opt.verbose) std::cerr << "computing table for " << p << "\n";
      GroupData g =
          enumerate(parse_gens(read_file(p)).generators, effective_cap(opt.cap));
      VerifyTarget t;
      t.name = stem_of(p);
      t.nilpotent_known = true;
      t.nilpotent = is_nilpotent(g);
      t.table = character_table(g, t.name);
      targets.push_back(std::move(t));
    }
  } else if (!opt.gens.empty()) {
    GroupData g = enumerate(parse_gens(read_file(opt.gens)).generators,
                            effective_cap(opt.cap));
    VerifyTarget t;
    t.name = stem_of(opt.gens);
    t.nilpotent_known = true;
    t.nilpotent = is_nilpotent(g);
    t.table = character_table(g, t.name);
    targets.push_back(std::move(t));
  } else if (!opt.table.empty()) {
    VerifyTarget t;
    t.name = stem_of(opt.table);
    t.table = parse_table(read_file(opt.table));
    t.nilpotent_known = opt.nilpotent;  // flag is the only evidence
    t.nilpotent = opt.nilpotent;
    targets.push_back(std::move(t));
  } else if (!want_congruence || opt.suite != "congruence") {
    throw UsageError("verify needs --fixtures, --gens, or --table");
  }

  if (opt.suite == "nilpotent" && !targets.empty()) {
    bool any = false;
    for (const auto& t : targets) any = any || (t.nilpotent_known && t.nilpotent);
    if (!any)
      throw UsageError(
          "no nilpotent target: pass --nilpotent with --table, or a nilpotent "
          "group");
  }

  int64_t checked = 0, failed = 0;
  ordered_json jtargets = ordered_json::array();
  for (const auto& t : targets) {
    std::vector<Verdict> v;
    if (want_classical) {
      auto a = verify_galois_mean_identities(t.table);
      v.insert(v.end(), a.begin(), a.end());
      auto b = verify_classical_bounds(t.table);
      v.insert(v.end(), b.begin(), b.end());
    }
    if (want_primepower) {
      auto a = verify_prime_power_lemmas(t.table);
      v.insert(v.end(), a.begin(), a.end());
    }
    if (want_nilpotent && t.nilpotent_known && t.nilpotent) {
      auto a = verify_nilpotent_theorems(t.table, true);
      v.insert(v.end(), a.begin(), a.end());
    }
    checked += static_cast<int64_t>(v.size());
    for (const auto& x : v)
      if (!x.pass) ++failed;
    if (opt.json) {
      jtargets.push_back(ordered_json{{"name", t.name},
                                      {"nilpotent", t.nilpotent_known
                                                        ? ordered_json(t.nilpotent)
                                                        : ordered_json(nullptr)},
                                      {"verdicts", verdicts_json(v)}});
    } else {
      std::cout << t.name << ":\n";
      print_verdicts(std::cout, v);
    }
  }

  int64_t congruence_failures = 0;
  if (want_congruence) {
    congruence_failures = congruence_suite(opt.count, 1);
    checked += opt.count;
    failed += congruence_failures;
    if (!opt.json)
      std::cout << "congruence: "
                << (congruence_failures == 0 ? "PASS" : "FAIL") << " ("
                << opt.count << " instances, " << congruence_failures
                << " failures)\n";
  }

  if (opt.json) {
    ordered_json j{{"schema", 1}, {"suite", opt.suite}, {"targets", jtargets}};
    if (want_congruence)
      j["congruence"] = ordered_json{{"instances", opt.count},
                                     {"failures", congruence_failures}};
    j["checked"] = checked;
    j["failed"] = failed;
    j["pass"] = failed == 0;
    emit_json(j);
  } else {
    std::cout << "summary: " << checked << " checks, " << failed
              << " failures\n";
  }
  return failed == 0 ? 0 : 4;
}

int run_family_suz(const Options& opt) {
  SuzData d = suz_data(opt.q);
  Rational th = suz_theta(opt.q), tp = suz_theta_prime(opt.q);
  std::vector<Verdict> v = suz_consistency(opt.q);
  auto g = suz_gamma_classification(opt.q);
  v.insert(v.end(), g.begin(), g.end());
  if (opt.json) {
    ordered_json j{{"schema", 1},
                   {"family", "suz"},
                   {"q", d.q},
                   {"r", d.r},
                   {"order", d.group_order.get_str()},
                   {"class_count", d.class_count},
                   {"a_orders", d.a_orders},
                   {"fused_sizes",
                    {d.fused_sizes[0].get_str(), d.fused_sizes[1].get_str(),
                     d.fused_sizes[2].get_str()}},
                   {"theta", rat_json(th)},
                   {"theta_prime", rat_json(tp)},
                   {"verdicts", verdicts_json(v)}};
    emit_json(j);
  } else {
    std::cout << "family: suz\nq: " << d.q << "\nr: " << d.r
              << "\norder: " << d.group_order.get_str()
              << "\nclass_count: " << d.class_count << "\na_orders: "
              << d.a_orders[0] << " " << d.a_orders[1] << " " << d.a_orders[2]
              << "\nfused_sizes: " << d.fused_sizes[0].get_str() << " "
              << d.fused_sizes[1].get_str() << " "
              << d.fused_sizes[2].get_str() << "\ntheta: " << rat_line(th)
              << "\ntheta_prime: " << rat_line(tp) << "\nverdicts:\n";
    print_verdicts(std::cout, v);
  }
  return all_pass(v) ? 0 : 4;
}

int run_family_l2(const Options& opt) {
  if (!opt.sweep.empty()) {
    int64_t lo = std::max<int64_t>(opt.sweep[0], 4), hi = opt.sweep[1];
    std::vector<int64_t> qs = prime_powers_in(lo, hi);
    std::vector<int64_t> bad = l2_scan_parallel(lo, hi);
    if (opt.json) {
      ordered_json j{{"schema", 1},       {"family", "l2"},
                     {"sweep", {lo, hi}}, {"checked", qs.size()},
                     {"failures", bad},   {"pass", bad.empty()}};
      emit_json(j);
    } else {
      std::cout << "family: l2\nsweep: [" << lo << ", " << hi << "]\n"
                << "checked: " << qs.size() << " prime powers\n"
                << "failures: " << bad.size() << "\n";
    }
    return bad.empty() ? 0 : 4;
  }
  if (opt.q == 0) throw UsageError("family l2 needs --q or --sweep");
  L2Bounds b = l2_bounds(opt.q);
  std::vector<Verdict> v;
  Rational half = make_rational(1, 2);
  v.push_back({"l2-theta-bound", b.lb_theta > half,
               b.lb_theta > half ? "" : "lower bound at or below 1/2"});
  v.push_back({"l2-theta-prime-bound", b.lb_theta_prime > half,
               b.lb_theta_prime > half ? "" : "lower bound at or below 1/2"});
  if (opt.json) {
    ordered_json j{{"schema", 1},
                   {"family", "l2"},
                   {"q", opt.q},
                   {"order", b.census.group_order.get_str()},
                   {"class_count", b.census.class_count},
                   {"g0", b.census.g0.get_str()},
                   {"g1", b.census.g1.get_str()},
                   {"lb_theta", rat_json(b.lb_theta)},
                   {"lb_theta_prime", rat_json(b.lb_theta_prime)},
                   {"verdicts", verdicts_json(v)}};
    emit_json(j);
  } else {
    std::cout << "family: l2\nq: " << opt.q
              << "\norder: " << b.census.group_order.get_str()
              << "\nclass_count: " << b.census.class_count
              << "\ng0: " << b.census.g0.get_str()
              << "\ng1: " << b.census.g1.get_str()
              << "\nlb_theta: " << rat_line(b.lb_theta)
              << "\nlb_theta_prime: " << rat_line(b.lb_theta_prime)
              << "\nverdicts:\n";
    print_verdicts(std::cout, v);
  }
  return all_pass(v) ? 0 : 4;
}

int run_family_alt(const Options& opt) {
  CharacterTable t = alt_table(opt.n);
  Rational th = theta(t), tp = theta_prime(t);
  std::vector<Verdict> v = alt_verify(opt.n);
  if (opt.json) {
    ordered_json j{{"schema", 1},       {"family", "alt"},
                   {"n", opt.n},        {"order", t.group_order},
                   {"theta", rat_json(th)}, {"theta_prime", rat_json(tp)},
                   {"verdicts", verdicts_json(v)}};
    emit_json(j);
  } else {
    std::cout << "family: alt\nn: " << opt.n << "\norder: " << t.group_order
              << "\ntheta: " << rat_line(th)
              << "\ntheta_prime: " << rat_line(tp) << "\nverdicts:\n";
    print_verdicts(std::cout, v);
  }
  return all_pass(v) ? 0 : 4;
}

int run_product(const Options& opt) {
  if (opt.tables.size() < 2)
    throw UsageError("product needs at least two --tables");
  CharacterTable t = parse_table(read_file(opt.tables[0]));
  for (size_t i = 1; i < opt.tables.size(); ++i)
    t = direct_product(t, parse_table(read_file(opt.tables[i])));
  write_output(opt.out, render_table(t));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"character table toolkit"};
  app.require_subcommand(1);
  app.add_flag("-v,--verbose", opt.verbose, "progress notes on stderr");

  auto* tbl = app.add_subcommand("table", "compute a character table");
  tbl->add_option("--gens", opt.gens, "generator file")->required();
  tbl->add_option("--out", opt.out, "output path (default stdout)");
  tbl->add_option("--name", opt.name, "table name (default file stem)");
  tbl->add_option("--cap", opt.cap, "enumeration cap");

  auto* ana = app.add_subcommand("analyze", "value statistics and verdicts");
  ana->add_option("--gens", opt.gens, "generator file");
  ana->add_option("--table", opt.table, "table file");
  ana->add_option("--name", opt.name, "table name");
  ana->add_option("--cap", opt.cap, "enumeration cap");
  ana->add_flag("--json", opt.json, "JSON report");
  ana->add_flag("--nilpotent", opt.nilpotent,
                "assert the table's group is nilpotent");

  auto* ver = app.add_subcommand("verify", "run a verification suite");
  ver->add_option("suite", opt.suite, "suite to run")
      ->required()
      ->check(CLI::IsMember(
          {"classical", "nilpotent", "primepower", "congruence", "all"}));
  ver->add_option("--fixtures", opt.fixtures, "directory of .gens files");
  ver->add_option("--gens", opt.gens, "generator file");
  ver->add_option("--table", opt.table, "table file");
  ver->add_option("--cap", opt.cap, "enumeration cap");
  ver->add_option("--count", opt.count, "congruence instances");
  ver->add_flag("--json", opt.json, "JSON report");
  ver->add_flag("--nilpotent", opt.nilpotent,
                "assert the table's group is nilpotent");

  auto* fam = app.add_subcommand("family", "closed-form family results");
  fam->require_subcommand(1);
  auto* suz = fam->add_subcommand("suz", "Suzuki groups");
  suz->add_option("--q", opt.q, "field size 2^e, e odd >= 3")->required();
  suz->add_flag("--json", opt.json, "JSON report");
  auto* l2 = fam->add_subcommand("l2", "projective groups L2(q)");
  l2->add_option("--q", opt.q, "prime power >= 4");
  l2->add_option("--sweep", opt.sweep, "check every prime power in [lo, hi]")
      ->expected(2);
  l2->add_flag("--json", opt.json, "JSON report");
  auto* alt = fam->add_subcommand("alt", "alternating groups");
  alt->add_option("--n", opt.n, "degree in [5, 9]")->required();
  alt->add_flag("--json", opt.json, "JSON report");

  auto* prod = app.add_subcommand("product", "Kronecker product of tables");
  prod->add_option("--tables", opt.tables, "two or more table files")
      ->required();
  prod->add_option("--out", opt.out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*tbl) return run_table(opt);
    if (*ana) return run_analyze(opt);
    if (*ver) return run_verify(opt);
    if (*suz) return run_family_suz(opt);
    if (*l2) return run_family_l2(opt);
    if (*alt) return run_family_alt(opt);
    if (*prod) return run_product(opt);
    return 1;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const TableParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const CycParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
