// springer: Green polynomial tables, root-of-unity evaluations, regular
// elements and verification runs for the induction identities.
//
// Exit status: 0 when every dispatched check passes, 1 when a check fails,
// 2 on invalid input or an exceeded enumeration bound.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "springer/report.hpp"
#include "springer/springer.hpp"

namespace {

using namespace springer;

struct Options {
  std::string family = "A";
  bool family_given = false;
  int rank = 0;
  int n = 0;
  std::string mu;
  std::string nu;
  std::string nu0;
  std::string pi_L;
  std::string a;
  std::string kase;
  int e = 1;
  int m = 0;
  int k = 0;
  std::string variant = "a";
  std::optional<long> j;
  std::vector<std::string> checks;
  std::string format = "text";
  int jobs = 1;
  std::optional<std::size_t> bound;
};

std::size_t effective_bound(const Options& o) {
  if (o.bound) return *o.bound;
  if (const char* env = std::getenv("SPRINGER_ENUM_BOUND")) {
    try {
      return static_cast<std::size_t>(std::stoull(env));
    } catch (const std::exception&) {
      throw ConfigError(std::string("SPRINGER_ENUM_BOUND is not a number: ") + env);
    }
  }
  return kDefaultEnumerationBound;
}

std::vector<int> parse_index_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    const int v = std::stoi(tok);
    if (v < 1) throw ConfigError("simple-root indices are 1-based");
    out.push_back(v - 1);
  }
  return out;
}

Partition mu_from(const Options& o) {
  if (o.mu.empty()) throw ConfigError("--mu is required");
  const Partition mu = parse_partition(o.mu);
  if (o.n && o.n != mu.size()) throw ConfigError("--n " + std::to_string(o.n) + " does not match |mu| = " + std::to_string(mu.size()));
  return mu;
}

void check_n(int n, std::size_t bound) {
  Integer f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  if (f > Integer(std::to_string(bound)))
    throw BoundExceeded("n! = " + f.get_str() + " exceeds the enumeration bound " + std::to_string(bound));
}

/// Builds a type A (or, with --pi-L and --a, general) induction configuration
/// from the flags.
InductionConfig build_config(const Options& o) {
  const Family f = parse_family(o.family);
  if (!o.pi_L.empty()) {
    int rank = o.rank;
    if (f == Family::A && o.n) rank = o.n - 1;
    if (rank < 1) throw ConfigError("--rank (or --n for type A) is required with --pi-L");
    auto rs = std::make_shared<const RootSystem>(build_root_system(f, rank));
    InductionConfig cfg;
    cfg.levi = levi_config(rs, parse_index_list(o.pi_L));
    cfg.e = o.e;
    if (!o.a.empty()) {
      if (f > Family::D) throw ConfigError("--a is given in cycle notation, classical families only");
      cfg.a = WeylElt::from_signed_perm(SignedPerm::from_cycles(rs->ambient_dim(), parse_cycles(o.a)));
    } else if (f == Family::A) {
      cfg.a = case_b_element(cfg.levi, o.e);
    } else {
      throw ConfigError("--a is required outside type A");
    }
    cfg.u = parse_unipotent_spec(o.nu);
    return cfg;
  }
  if (f != Family::A) throw ConfigError("configurations outside type A need --pi-L and --a");
  if (o.kase == "a") {
    if (!o.n || !o.m) throw ConfigError("case (a) needs --n and --m");
    return make_case_a_config(o.n, o.m, o.e, o.nu.empty() ? UnipotentSpec{} : case_a_spec(o.m, parse_partition(o.nu)));
  }
  if (!o.mu.empty() && o.nu.empty()) return config_from_mu(mu_from(o), o.e);
  if (o.m) {
    UnipotentSpec u;
    if (!o.nu.empty() || !o.nu0.empty()) {
      const Partition nu = o.nu.empty() ? Partition{o.m} : parse_partition(o.nu);
      const Partition nu0 = o.nu0.empty() ? (o.k ? Partition{o.k} : Partition{}) : parse_partition(o.nu0);
      u = cyclic_spec(o.k, nu0, o.m, nu, o.e);
    }
    InductionConfig cfg = make_cyclic_config(o.k, o.m, o.e, u);
    if (o.n && o.n != o.k + o.e * o.m) throw ConfigError("--n does not match k + e*m");
    return cfg;
  }
  throw ConfigError("no configuration given: use --mu, --m (with --k, --nu), --case a, or --pi-L");
}

std::vector<Partition> parse_block_types(const std::string& s) {
  std::vector<Partition> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ':')) out.push_back(parse_partition(tok));
  if (out.empty()) throw ConfigError("--nu must list one partition per block, separated by ':'");
  return out;
}

int finish(const std::vector<VerificationReport>& reports, const Options& o) {
  write_report(std::cout, reports, parse_format(o.format));
  for (const auto& r : reports)
    if (!r.pass) return 1;
  return 0;
}

int cmd_green(const Options& o) {
  const Partition mu = mu_from(o);
  check_n(mu.size(), effective_bound(o));
  const GradedCharacter g = springer_graded_char(mu);
  const Format f = parse_format(o.format);
  if (f == Format::Json) {
    nlohmann::json j;
    j["mu"] = mu.to_string();
    j["n"] = std::to_string(mu.size());
    auto rows = nlohmann::json::array();
    for (const auto& rho : partitions_of(mu.size())) rows.push_back({{"class", rho.to_string()}, {"coefficients", poly_to_json(g[rho])}});
    j["rows"] = rows;
    std::cout << j.dump(2) << "\n";
  } else if (f == Format::Csv) {
    std::cout << "class,coefficients\n";
    for (const auto& rho : partitions_of(mu.size())) {
      std::string cs;
      for (const auto& c : g[rho].coefficients()) cs += (cs.empty() ? "" : " ") + c.get_str();
      std::cout << csv_field(rho.to_string()) << "," << (cs.empty() ? "0" : cs) << "\n";
    }
  } else {
    std::cout << "Green polynomials Q^" << mu.to_string() << "_rho(q)\n";
    for (const auto& rho : partitions_of(mu.size())) std::cout << "  " << rho.to_string() << "  " << g[rho].to_string() << "\n";
  }
  return 0;
}

int cmd_eval(const Options& o) {
  const Partition mu = mu_from(o);
  const int n = mu.size();
  check_n(n, effective_bound(o));
  if (o.e < 1) throw ConfigError("e must be positive");
  std::optional<TypeALayout> lay;
  std::vector<CosetClassSums> sums;
  if (!o.pi_L.empty() || o.m || o.kase == "a") {
    Options copy = o;
    lay = type_a_layout(build_config(copy), effective_bound(o));
    if (lay->mu != mu) throw ConfigError("the Levi configuration has Jordan type " + lay->mu.to_string() + ", not " + mu.to_string());
    if (!detail::u_is_regular(*lay)) throw ConfigError("coset counts apply to u regular in L");
    for (int j = 0; j < o.e; ++j) sums.push_back(coset_class_sums(*lay, nullptr, j));
  }
  std::vector<long> js;
  if (o.j) js.push_back(positive_mod(*o.j, o.e));
  else
    for (int j = 0; j < o.e; ++j) js.push_back(j);
  bool ok = true;
  nlohmann::json rows = nlohmann::json::array();
  std::ostringstream text, csv;
  csv << "class,j,value" << (lay ? ",count" : "") << "\n";
  text << "Q^" << mu.to_string() << "_rho(zeta^j), e=" << o.e << "\n";
  for (const auto& rho : partitions_of(n)) {
    nlohmann::json row;
    row["class"] = rho.to_string();
    auto vals = nlohmann::json::array();
    auto counts = nlohmann::json::array();
    text << "  " << rho.to_string() << " ";
    for (long j : js) {
      const Cyclotomic v = green_at_root(mu, rho, o.e, j);
      std::string vs = v.to_string();
      if (!v.is_integer()) ok = false;
      vals.push_back(vs);
      text << " " << vs;
      csv << csv_field(rho.to_string()) << "," << j << "," << csv_field(vs);
      if (lay) {
        const auto& cnt = sums[static_cast<std::size_t>(j)].count;
        const Integer hits = cnt.count(rho.to_string()) ? cnt.at(rho.to_string()) : Integer(0);
        const Rational c = make_rational(hits * rho.centralizer_order(), static_cast<unsigned long>(lay->W_L.size()));
        if (Cyclotomic(o.e, c) != v) ok = false;
        counts.push_back(c.get_str());
        text << " [" << c.get_str() << "]";
        csv << "," << c.get_str();
      }
      csv << "\n";
    }
    text << "\n";
    row["values"] = vals;
    if (lay) row["counts"] = counts;
    rows.push_back(row);
  }
  const Format f = parse_format(o.format);
  if (f == Format::Json) {
    nlohmann::json j;
    j["mu"] = mu.to_string();
    j["e"] = std::to_string(o.e);
    auto jj = nlohmann::json::array();
    for (long x : js) jj.push_back(std::to_string(x));
    j["j"] = jj;
    j["rows"] = rows;
    j["status"] = ok ? "pass" : "fail";
    std::cout << j.dump(2) << "\n";
  } else if (f == Format::Csv) {
    std::cout << csv.str();
  } else {
    std::cout << text.str();
    if (!ok) std::cout << "  values are not rational integers or disagree with coset counts\n";
  }
  return ok ? 0 : 1;
}

const std::vector<std::string> kChecks = {"theorem17", "prop33", "prop37", "cor35", "prop332", "induction_e1", "remark38", "lemma15"};

VerificationReport run_check(const std::string& name, const Options& o) {
  SweepOptions sw{o.jobs, effective_bound(o)};
  if (name == "remark38") {
    if (!o.m || o.e < 1) throw ConfigError("remark38 needs --m and --e");
    return check_remark38(o.m, o.e, sw);
  }
  if (name == "lemma15") {
    std::optional<Family> f;
    std::optional<int> r;
    if (o.family_given) f = parse_family(o.family);
    if (o.rank) r = o.rank;
    return check_lemma15_catalog(f, r);
  }
  if (name == "induction_e1") {
    if (o.nu.empty()) throw ConfigError("induction_e1 needs --nu with one partition per block, e.g. 2,1:2");
    return check_induction_e1(parse_block_types(o.nu), sw);
  }
  const InductionConfig cfg = build_config(o);
  if (name == "theorem17") return check_theorem17(cfg, sw);
  if (name == "prop33") return check_prop33_dims(cfg, sw);
  if (name == "prop37") return check_prop37(cfg, sw);
  if (name == "cor35") return check_cor35(cfg, sw);
  if (name == "prop332") return check_prop332_case_a(cfg, sw);
  throw ConfigError("unknown check '" + name + "'");
}

int cmd_verify(const Options& o) {
  std::vector<std::string> names;
  for (const auto& c : o.checks) {
    if (c == "all") {
      // every check that applies to the given configuration
      const InductionConfig cfg = build_config(o);
      const TypeALayout lay = type_a_layout(cfg, effective_bound(o));
      names = {"theorem17", "prop33"};
      if (detail::u_is_regular(lay)) names.insert(names.end(), {"prop37", "cor35"});
      if (lay.kind == InductionCase::A) names.push_back("prop332");
    } else {
      names.push_back(c);
    }
  }
  if (names.empty()) throw ConfigError("no check named; choose from theorem17, prop33, prop37, cor35, prop332, induction_e1, remark38, lemma15, all");
  std::vector<VerificationReport> reports;
  for (const auto& nm : names) reports.push_back(run_check(nm, o));
  return finish(reports, o);
}

int cmd_regular(const Options& o) {
  const Family f = parse_family(o.family);
  if (o.rank < 1) throw ConfigError("--rank is required");
  if (o.variant.size() != 1) throw ConfigError("--variant is a single letter");
  const WeylElt a = regular_element(f, o.rank, o.e, o.variant[0]);
  const RootSystem rs = build_root_system(f, o.rank);
  const bool reg = is_regular(a, o.e, rs);
  const int mult = cyclotomic_multiplicity(characteristic_polynomial(*a.perm_form()), o.e);
  const Format fmt = parse_format(o.format);
  if (fmt == Format::Json) {
    nlohmann::json j{{"family", o.family},    {"rank", std::to_string(o.rank)},    {"e", std::to_string(o.e)},
                     {"variant", o.variant},  {"element", a.to_string()},          {"order", std::to_string(a.order())},
                     {"regular", reg},        {"a_e", std::to_string(mult)}};
    std::cout << j.dump(2) << "\n";
  } else if (fmt == Format::Csv) {
    std::cout << "element,order,regular,a_e\n" << csv_field(a.to_string()) << "," << a.order() << "," << (reg ? "true" : "false") << "," << mult << "\n";
  } else {
    std::cout << a.to_string() << ", " << (reg ? "regular" : "not regular") << ", a(e)=" << mult << "\n";
  }
  return reg && a.order() == o.e ? 0 : 1;
}

int cmd_config_validate(const Options& o) {
  const InductionConfig cfg = build_config(o);
  const InductionCase c = validate_config(cfg);
  const Format fmt = parse_format(o.format);
  if (fmt == Format::Json) {
    nlohmann::json j{{"family", cfg.root_system().name()}, {"e", std::to_string(cfg.e)},      {"a", cfg.a.to_string()},
                     {"case", case_name(c)},               {"pi_prime", cfg.levi.prime_type}, {"u", cfg.u.to_string()},
                     {"status", "valid"}};
    std::cout << j.dump(2) << "\n";
  } else if (fmt == Format::Csv) {
    std::cout << "root_system,e,a,case,u\n"
              << cfg.root_system().name() << "," << cfg.e << "," << csv_field(cfg.a.to_string()) << "," << case_name(c) << ","
              << csv_field(cfg.u.to_string()) << "\n";
  } else {
    std::cout << "valid: " << cfg.root_system().name() << ", e=" << cfg.e << ", a=" << cfg.a.to_string() << ", case (" << case_name(c)
              << ")\n";
  }
  return 0;
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  sub->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  sub->add_option("--bound", o.bound, "enumeration bound (default 10^7, or SPRINGER_ENUM_BOUND)");
}

void add_config(CLI::App* sub, Options& o) {
  sub->add_option("--family", o.family, "root system family A..G");
  sub->add_option("--rank", o.rank, "rank");
  sub->add_option("--n", o.n, "n for GL_n");
  sub->add_option("--mu", o.mu, "Jordan type of u, e.g. 2,2");
  sub->add_option("--nu", o.nu, "Jordan types on Levi blocks: a partition, or per-component list 1,1:2, or 'regular'");
  sub->add_option("--nu0", o.nu0, "Jordan type on the fixed block X_0");
  sub->add_option("--pi-L", o.pi_L, "simple roots of L, 1-based, comma separated");
  sub->add_option("--a", o.a, "the element a in cycle notation, e.g. (12)(34) or -(12)");
  sub->add_option("--case", o.kase, "a: W_L = S_m on the trailing letters")->check(CLI::IsMember({"a", "b"}));
  sub->add_option("--e", o.e, "order of a");
  sub->add_option("--m", o.m, "block size m");
  sub->add_option("--k", o.k, "size of the fixed block X_0");
  sub->add_option("--j", o.j, "root exponent");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Springer representations and induction from Levi subgroups"};
  app.require_subcommand(1);
  Options o;

  auto* green = app.add_subcommand("green", "Green polynomial table for a Jordan type");
  green->add_option("--n", o.n, "n");
  green->add_option("--mu", o.mu, "Jordan type, e.g. 2,2")->required();
  add_common(green, o);

  auto* eval = app.add_subcommand("eval", "Green polynomials at powers of a primitive e-th root of unity");
  add_config(eval, o);
  add_common(eval, o);

  auto* verify = app.add_subcommand("verify", "run verification checks");
  verify->add_option("name", o.checks, "theorem17, prop33, prop37, cor35, prop332, induction_e1, remark38, lemma15, all");
  verify->add_option("--check", o.checks, "check name (repeatable)");
  add_config(verify, o);
  add_common(verify, o);

  auto* regular = app.add_subcommand("regular", "catalog regular element of a classical Weyl group");
  regular->add_option("--family", o.family, "A, B, C or D")->required();
  regular->add_option("--rank", o.rank, "rank")->required();
  regular->add_option("--e", o.e, "order")->required();
  regular->add_option("--variant", o.variant, "catalog variant a, b, c or d");
  add_common(regular, o);

  auto* validate = app.add_subcommand("config-validate", "check the hypotheses of an induction configuration");
  add_config(validate, o);
  add_common(validate, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  // lemma15 without --family sweeps every family
  o.family_given = verify->parsed() && verify->count("--family") > 0;

  try {
    if (green->parsed()) return cmd_green(o);
    if (eval->parsed()) return cmd_eval(o);
    if (verify->parsed()) return cmd_verify(o);
    if (regular->parsed()) return cmd_regular(o);
    if (validate->parsed()) return cmd_config_validate(o);
  } catch (const ConfigError& e) {
    std::cerr << "invalid configuration: " << e.what() << "\n";
    return 2;
  } catch (const BoundExceeded& e) {
    std::cerr << "bound exceeded: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
