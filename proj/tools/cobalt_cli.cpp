#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <map>

#include "cobalt/combinat/combinat.hpp"
#include "cobalt/gram/gram.hpp"
#include "cobalt/io/parser.hpp"
#include "cobalt/io/reports.hpp"
#include "cobalt/realize/realize.hpp"
#include "cobalt/skein/skein.hpp"

using namespace cobalt;

namespace {

enum Exit { ok = 0, usage = 2, mismatch = 3, undetermined = 4 };

struct Config {
  std::string format = "text";
  uint64_t seed = VerifyOptions{}.seed;
  std::size_t size_limit = 100;
  std::string num = "1", den = "1", params;
};

std::string text(const Rational& r) { return r.get_str(); }
std::string text(const MultiPoly& p) { return p.str(); }

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string r = "\"";
  for (char c : s) r += c == '"' ? std::string("\"\"") : std::string(1, c);
  return r + "\"";
}

// Prints an ordered list of key/value pairs in the chosen format.
void emit(const Config& cfg, const Json& j) {
  if (cfg.format == "json") {
    std::cout << j.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    std::string head, row;
    for (auto it = j.begin(); it != j.end(); ++it) {
      head += (head.empty() ? "" : ",") + it.key();
      row += (row.empty() ? "" : ",") + csv_quote(it->is_string() ? it->get<std::string>() : it->dump());
    }
    std::cout << head << "\n" << row << "\n";
  } else {
    for (auto it = j.begin(); it != j.end(); ++it)
      std::cout << it.key() << ": " << (it->is_string() ? it->get<std::string>() : it->dump()) << "\n";
  }
}

template <class C>
Json series_json(const RationalSeries<C>& z, std::size_t coeffs) {
  Json j;
  j["schema"] = 1;
  j["P"] = z.numerator().str();
  j["Q"] = z.denominator().str();
  j["N"] = z.N();
  j["M"] = z.M();
  j["K"] = z.K();
  j["handle_polynomial"] = handle_polynomial(z).poly.str("x");
  Json c = Json::array();
  for (const auto& a : z.coefficients(coeffs)) c.push_back(text(a));
  j["coefficients"] = c;
  return j;
}

int cmd_series(const Config& cfg, std::size_t coeffs) {
  auto params = split_names(cfg.params);
  if (params.empty()) emit(cfg, series_json(parse_series(cfg.num, cfg.den), coeffs));
  else emit(cfg, series_json(parse_series(cfg.num, cfg.den, params), coeffs));
  return ok;
}

// "beta=2,gamma=1/3" in ring order.
std::vector<Rational> parse_point(const std::string& assignments, const std::vector<std::string>& params) {
  std::map<std::string, Rational> vals;
  for (const auto& item : split_names(assignments)) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("expected name=value in '" + item + "'");
    vals[item.substr(0, eq)] = parse_multipoly(item.substr(eq + 1), make_ring({})).as_constant().value();
  }
  std::vector<Rational> pt;
  for (const auto& p : params) {
    auto it = vals.find(p);
    if (it == vals.end()) throw std::invalid_argument("no value given for parameter " + p);
    pt.push_back(it->second);
    vals.erase(it);
  }
  if (!vals.empty()) throw std::invalid_argument("unknown parameter " + vals.begin()->first);
  return pt;
}

struct GramArgs {
  int n = 1;
  std::string spanning = "full";
  bool symbolic = false;
  std::string rank_at, claim_file;
};

int cmd_gram(const Config& cfg, const GramArgs& a) {
  GramReport rep;
  rep.n = a.n;
  std::optional<ClaimRow> claim;
  GoldenTable table;
  std::string num = cfg.num, den = cfg.den, spanning = a.spanning;
  auto params = split_names(cfg.params);
  if (!a.claim_file.empty()) {
    table = load_golden(a.claim_file);
    num = table.num;
    den = table.den;
    params = table.params;
    spanning = table.spanning;
    const ClaimRow* row = table.row(a.n);
    if (!row && table.rows.size() == 1) row = &table.rows[0];
    if (!row) throw std::invalid_argument("claim file has no row for n = " + std::to_string(a.n));
    claim = *row;
    rep.n = row->n;
  }
  auto z = parse_series(num, den, params);
  auto set = parse_spanning(spanning, std::max(1, z.K()));
  auto surfaces = spanning_surfaces(rep.n, set);
  rep.series = z.str();
  rep.spanning_set_id = set.id();
  rep.matrix_size = surfaces.size();
  if (params.empty()) rep.rank = gram_rank(surfaces, specialize(z, {}));
  if (!a.rank_at.empty()) rep.rank = gram_rank(surfaces, specialize(z, parse_point(a.rank_at, params)));
  if (a.symbolic) {
    GramDetOptions opts;
    opts.size_limit = cfg.size_limit;
    rep.determinant = gram_det(surfaces, z, opts).str();
    rep.mode = "exact";
  }
  int code = ok;
  if (claim) {
    VerifyOptions opts;
    opts.seed = cfg.seed;
    opts.symbolic_limit = cfg.size_limit;
    opts.mode = claim->mode == "pit" ? VerifyMode::pit : VerifyMode::automatic;
    auto v = verify_factorization(claim->claim, surfaces, z, opts);
    rep.claim = claim->claim.str();
    rep.claim_verified = v.verified;
    rep.mode = v.mode;
    rep.probabilistic = v.probabilistic;
    if (v.determinant && !rep.determinant) rep.determinant = v.determinant->str();
    if (!v.verified) code = mismatch;
  }
  auto j = to_json(rep);
  if (claim && rep.probabilistic) j["factorization"]["seed"] = cfg.seed;
  if (cfg.format == "json") {
    emit(cfg, j);
  } else {
    Json flat;
    for (auto it = j.begin(); it != j.end(); ++it)
      if (it.key() == "det" && it->is_object()) flat["det"] = (*it)["terms"];
      else if (it.key() == "factorization")
        for (auto f = it->begin(); f != it->end(); ++f) flat[f.key() == "claim" ? "claim" : "claim_" + f.key()] = *f;
      else flat[it.key()] = *it;
    emit(cfg, flat);
  }
  return code;
}

int cmd_abelian(const Config& cfg, uint64_t characteristic) {
  auto report = check_abelian(parse_series(cfg.num, cfg.den), characteristic);
  auto j = to_json(report);
  if (cfg.format == "json") {
    emit(cfg, j);
  } else if (cfg.format == "csv") {
    std::cout << "pole,value,degree,in_prime_field\n";
    for (const auto& e : report.residues)
      std::cout << csv_quote(e.pole) << "," << csv_quote(e.value) << "," << e.degree << "," << (e.in_prime_field ? "true" : "false")
                << "\n";
  } else {
    for (auto key : {"characteristic", "series", "cond_rational", "cond_separable", "cond_degree", "cond_residues", "verdict"}) {
      const auto& v = j[key];
      std::cout << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
    for (const auto& e : report.residues)
      std::cout << "residue at " << e.pole << ": " << e.value << (e.in_prime_field ? "" : " (not in prime field)") << "\n";
    for (const auto& w : report.witnesses) std::cout << "witness (" << w.condition << "): " << w.explanation << "\n";
  }
  return report.verdict == Verdict::undetermined ? undetermined : ok;
}

template <class C>
Json skein_json(const SkeinAlgebra<C>& a) {
  Json j;
  j["schema"] = 1;
  j["K"] = a.K();
  j["dim"] = a.dim();
  j["associative"] = a.is_associative();
  j["trace_symmetric"] = a.trace_is_symmetric();
  j["bar_anti_automorphism"] = a.bar_is_anti_automorphism();
  // Symbolic determinants blow up quickly with the number of parameters.
  if (is_field_v<C> || a.dim() <= 6) j["trace_gram_det"] = text(det_fraction_free(a.trace_gram()));
  return j;
}

int cmd_skein(const Config& cfg, int symbolic_K) {
  if (symbolic_K > 0) {
    emit(cfg, skein_json(build_symbolic_BS(symbolic_K)));
    return ok;
  }
  auto params = split_names(cfg.params);
  if (!params.empty()) {
    emit(cfg, skein_json(build_BS(parse_series(cfg.num, cfg.den, params))));
    return ok;
  }
  auto a = build_BS(parse_series(cfg.num, cfg.den));
  auto j = skein_json(a);
  auto q = radical_quotient(a);
  j["radical_dimension"] = q.radical_dimension;
  j["quotient_dimension"] = q.dimension;
  emit(cfg, j);
  return ok;
}

int cmd_meander(const Config& cfg, int n) {
  auto ry = make_ring({"y1", "y2"});
  auto det = det_fraction_free(meander_matrix_y(n, ry));
  auto formula = meander_formula(n, ry);
  Json j;
  j["schema"] = 1;
  j["n"] = n;
  j["size"] = static_cast<std::size_t>(catalan(n).get_ui());
  j["formula"] = formula.str();
  j["result"] = det == formula ? "agree" : "disagree";
  emit(cfg, j);
  return det == formula ? ok : mismatch;
}

int cmd_tables(const Config& cfg, const std::string& name, int max_n, const std::string& data_dir) {
  if (name.rfind("sequence:", 0) == 0) {
    auto t = sequence_table(name.substr(9), max_n);
    std::cout << "n," << t.name << "\n";
    for (std::size_t n = 0; n < t.values.size(); ++n) std::cout << n << "," << t.values[n].get_str() << "\n";
    return ok;
  }
  if (name == "predictors") {
    std::cout << "n,s,dim_at_s,exp_beta1_minus_s,exp_beta1,conjectural\n";
    for (int n = 1; n <= max_n; ++n)
      for (long s : {2L, 3L, 4L}) {
        auto p = linear_conjecture_predictors(n, s);
        std::cout << n << "," << s << "," << p.dim_at_s << "," << p.exp_beta1_minus_s.get_str() << "," << p.exp_beta1.get_str()
                  << "," << (p.conjectural ? "true" : "false") << "\n";
      }
    return ok;
  }
  auto t = load_golden(data_dir + "/golden/" + name + ".json");
  std::cout << "table,n,size,mode,claim,status\n";
  bool all = true;
  for (const auto& row : t.rows) {
    if (row.n > max_n) continue;
    auto v = verify_golden_row(t, row, cfg.seed);
    all = all && v.verified;
    std::cout << t.id << "," << row.n << "," << v.matrix_size << "," << v.mode << "," << csv_quote(row.claim.str()) << ","
              << (v.verified ? "PASS" : "FAIL") << "\n";
  }
  return all ? ok : mismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gram determinants, realizability and skein algebras for rational surface theories"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  std::string data_dir = COBALT_DATA_DIR;
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--seed", cfg.seed, "Seed for random evaluation points (COBALT_SEED overrides)");
  app.add_option("--size-limit", cfg.size_limit, "Largest matrix for symbolic determinants");
  app.add_option("--data", data_dir, "Directory holding golden tables");
  auto series_opts = [&](CLI::App* sub) {
    sub->add_option("--num", cfg.num, "Numerator P(T)");
    sub->add_option("--den", cfg.den, "Denominator Q(T)");
  };

  auto* series = app.add_subcommand("series", "Normalize a series and print its invariants");
  series_opts(series);
  series->add_option("--params", cfg.params, "Comma-separated parameter names");
  std::size_t coeffs = 5;
  series->add_option("--coeffs", coeffs, "Print alpha_0 .. alpha_N");

  auto* gram = app.add_subcommand("gram", "Gram matrix rank, determinant and claim verification");
  series_opts(gram);
  gram->add_option("--params", cfg.params, "Comma-separated parameter names");
  GramArgs ga;
  gram->add_option("--n", ga.n, "Number of boundary circles")->check(CLI::Range(0, 12));
  gram->add_option("--spanning", ga.spanning, "full, full:K, Am:m or crossingless");
  gram->add_flag("--symbolic", ga.symbolic, "Compute the exact determinant");
  gram->add_option("--rank-at", ga.rank_at, "Rank at parameter values, e.g. beta=2,gamma=3");
  gram->add_option("--verify-claim", ga.claim_file, "JSON claim file (series and spanning set taken from it)");

  auto* abelian = app.add_subcommand("abelian", "Check the conditions for an abelian realization");
  series_opts(abelian);
  uint64_t characteristic = 0;
  abelian->add_option("--char", characteristic, "0 or a prime");

  auto* skein = app.add_subcommand("skein", "Build the algebra B_S and check its structure");
  series_opts(skein);
  skein->add_option("--params", cfg.params, "Comma-separated parameter names");
  int symbolic_K = 0;
  skein->add_option("--symbolic-K", symbolic_K, "Generic algebra of rank K")->check(CLI::Range(1, 6));

  auto* meander = app.add_subcommand("meander", "Compare the meander determinant with the product formula");
  int meander_n = 3;
  meander->add_option("--n", meander_n, "Number of arcs")->check(CLI::Range(1, 6));

  auto* tables = app.add_subcommand("tables", "Reproduce a stored table as CSV");
  std::string table_name;
  int max_n = 4;
  tables->add_option("--table", table_name,
                     "rank1, rank2-square, rank2-linear-numerator, rank2-split, linear, quadratic, cubic, "
                     "predictors or sequence:{bell,catalan,a,bell2}")
      ->required();
  tables->add_option("--max-n", max_n, "Largest n");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? ok : usage;
  }
  if (const char* env = std::getenv("COBALT_SEED")) {
    try {
      cfg.seed = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "COBALT_SEED is not an unsigned integer\n";
      return usage;
    }
  }

  try {
    if (*series) return cmd_series(cfg, coeffs);
    if (*gram) return cmd_gram(cfg, ga);
    if (*abelian) return cmd_abelian(cfg, characteristic);
    if (*skein) return cmd_skein(cfg, symbolic_K);
    if (*meander) return cmd_meander(cfg, meander_n);
    if (*tables) return cmd_tables(cfg, table_name, max_n, data_dir);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  }
  return usage;
}
