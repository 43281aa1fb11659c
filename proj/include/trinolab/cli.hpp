// Command-line front end. run() is the whole program minus argv handling,
// so tests can drive it in-process.
#pragma once

#include <cstdlib>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "trinolab/report.hpp"

namespace trinolab::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kAssertion = 2 };

class UsageError : public Error {
 public:
  using Error::Error;
};

struct RunConfig {
  std::string command;
  std::vector<unsigned> k;
  std::vector<std::uint64_t> l;
  std::vector<int> family;
  std::optional<std::uint64_t> d;
  std::optional<std::string> t;  // "all" or a decimal encoding
  std::optional<std::string> poly;
  Format format = Format::Json;
  std::optional<std::string> output;
  unsigned max_k = kDefaultMaxK;
  unsigned parallelism = 1;
  std::optional<TritVector> modulus;
};

/// Report plus every proven-claim assertion that failed while building it.
struct Outcome {
  Report report;
  std::vector<std::string> failures;
};

// ---- argument conversion ---------------------------------------------------

template <class T>
std::vector<T> parse_list(const std::string& text, const char* flag) {
  std::vector<T> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const std::string tok = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    try {
      const auto v = parse_u64(tok);
      if (v > static_cast<std::uint64_t>(std::numeric_limits<T>::max())) throw Error("out of range");
      out.push_back(static_cast<T>(v));
    } catch (const Error&) {
      throw UsageError(std::string("malformed value for ") + flag + ": " + text);
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

inline unsigned env_max_k() {
  const char* env = std::getenv("TRINOLAB_MAX_K");
  if (env == nullptr || *env == '\0') return kDefaultMaxK;
  try {
    return static_cast<unsigned>(std::min<std::uint64_t>(parse_u64(env), kMaxSupportedK + 1));
  } catch (const Error&) {
    throw UsageError(std::string("malformed TRINOLAB_MAX_K: ") + env);
  }
}

/// Parses argv-style arguments (without the program name). Returns nullopt
/// after printing help.
inline std::optional<RunConfig> parse_args(const std::vector<std::string>& args, std::ostream& out) {
  CLI::App app{"Exact checks for characteristic-3 permutation trinomials", "trinolab"};
  app.require_subcommand(1);
  std::string k, l, family, format = "json", max_k, parallelism, modulus;
  std::optional<std::uint64_t> d;
  std::optional<std::string> t, poly, output;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--k", k, "extension degree k (q = 3^k); comma list for sweep")->required();
    sub->add_option("--format", format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--output", output, "write the report here instead of stdout");
    sub->add_option("--max-k", max_k, "raise the k safety cap (large k is slow)");
    sub->add_option("--parallelism", parallelism, "worker threads (default: available cores)");
    sub->add_option("--modulus", modulus, "irreducible modulus as trits, low degree first");
  };
  auto fam = [&](CLI::App* sub, bool required) {
    auto* o = sub->add_option("--family", family, "trinomial family 1, 2 or 3");
    if (required) o->required();
  };

  auto* field_info = app.add_subcommand("field-info", "field parameters and special constants");
  common(field_info);
  auto* mu = app.add_subcommand("mu", "list the d-th roots of unity");
  common(mu);
  mu->add_option("--d", d, "subgroup order (default q+1)");
  auto* check_trinomial = app.add_subcommand("check-trinomial", "permutation check of one trinomial, all routes");
  common(check_trinomial);
  fam(check_trinomial, true);
  check_trinomial->add_option("--l", l, "trinomial parameter l")->required();
  auto* check_g = app.add_subcommand("check-g", "does g permute mu_{q+1}");
  common(check_g);
  fam(check_g, true);
  auto* count_roots = app.add_subcommand("count-roots", "roots in mu_{q+1} of the degree 5/7 equations");
  common(count_roots);
  fam(count_roots, true);
  count_roots->add_option("--t", t, "'all' or an element encoding in mu_{q+1}")->required();
  auto* factors = app.add_subcommand("factors", "quadratic factors of a polynomial");
  common(factors);
  fam(factors, false);
  factors->add_option("--t", t, "element encoding in mu_{q+1} (with --family)");
  factors->add_option("--poly", poly, "coefficients c0,c1,... as element encodings");
  auto* lemma_verify = app.add_subcommand("lemma-verify", "harvest quadratic-factor witnesses and classify them");
  common(lemma_verify);
  fam(lemma_verify, true);
  auto* uv_scan = app.add_subcommand("uv-scan", "(u,v) identity over family 1 quadratic factors");
  common(uv_scan);
  auto* sweep_cmd = app.add_subcommand("sweep", "batch over family x k x l");
  common(sweep_cmd);
  fam(sweep_cmd, true);
  sweep_cmd->add_option("--l", l, "comma list of l")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return std::nullopt;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  RunConfig cfg;
  cfg.command = app.get_subcommands().front()->get_name();
  const bool multi = cfg.command == "sweep";
  auto single = [&](const char* flag, const std::string& text) {
    if (!multi && text.find(',') != std::string::npos)
      throw UsageError(std::string(flag) + " takes a single value for " + cfg.command);
  };
  single("--k", k);
  cfg.k = parse_list<unsigned>(k, "--k");
  if (!l.empty()) {
    single("--l", l);
    cfg.l = parse_list<std::uint64_t>(l, "--l");
  }
  if (!family.empty()) {
    single("--family", family);
    for (auto f : parse_list<unsigned>(family, "--family")) {
      if (f < 1 || f > 3) throw UsageError("--family must be 1, 2 or 3");
      cfg.family.push_back(static_cast<int>(f));
    }
  }
  cfg.d = d;
  cfg.t = t;
  cfg.poly = poly;
  cfg.output = output;
  cfg.format = parse_format(format);

  cfg.max_k = max_k.empty() ? env_max_k() : parse_list<unsigned>(max_k, "--max-k").at(0);
  if (cfg.max_k > kMaxSupportedK)
    throw UsageError("--max-k may not exceed " + std::to_string(kMaxSupportedK));
  for (unsigned kv : cfg.k)
    if (kv < 1 || kv > cfg.max_k)
      throw UsageError("k=" + std::to_string(kv) + " outside [1, " + std::to_string(cfg.max_k) +
                       "]; raise --max-k to allow it");

  cfg.parallelism = parallelism.empty() ? default_parallelism() : parse_list<unsigned>(parallelism, "--parallelism").at(0);
  if (cfg.parallelism == 0) throw UsageError("--parallelism must be positive");
  if (!modulus.empty()) {
    try {
      cfg.modulus = parse_trits(modulus);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  }

  if (cfg.d && *cfg.d == 0) throw UsageError("--d must be positive");
  if (cfg.t && *cfg.t != "all") {
    try {
      parse_u64(*cfg.t);
    } catch (const Error&) {
      throw UsageError("malformed element encoding for --t: " + *cfg.t);
    }
  }
  if (cfg.command == "factors") {
    if (cfg.poly && (!cfg.family.empty() || cfg.t)) throw UsageError("factors takes --poly or --family/--t, not both");
    if (!cfg.poly && (cfg.family.empty() || !cfg.t)) throw UsageError("factors needs --poly or both --family and --t");
    if (cfg.t && *cfg.t == "all") throw UsageError("factors needs a single --t");
  }
  if (cfg.command == "lemma-verify" && cfg.family.front() == 1)
    throw UsageError("lemma-verify covers families 2 and 3; use uv-scan for family 1");
  return cfg;
}

// ---- commands ----------------------------------------------------------------

inline json enc(const Element& x) { return x.encoding(); }

inline json enc(const std::optional<Element>& x) { return x ? json(x->encoding()) : json(nullptr); }

inline json encs(const std::vector<Element>& xs) {
  json arr = json::array();
  for (const auto& x : xs) arr.push_back(x.encoding());
  return arr;
}

inline std::string join_encodings(const std::vector<Element>& xs) {
  std::string s;
  for (const auto& x : xs) {
    if (!s.empty()) s += ';';
    s += to_string(x);
  }
  return s;
}

inline std::string cell(const json& v) { return v.is_null() ? "" : scalar_text(v); }

/// Families whose permutation property is proven for this k.
inline bool claimed(conjlab::Family family, unsigned k) {
  return family == conjlab::Family::Two || (family == conjlab::Family::Three && k % 4 != 2);
}

inline FieldPtr make_field(const RunConfig& cfg, unsigned k) { return FieldCtx::create(k, cfg.modulus, cfg.max_k); }

/// Parses --t and checks it lies in mu_{q+1}.
inline Element unit_circle_element(const UnityGroup& mu, const FieldCtx& ctx, const std::string& text) {
  const Element t = ctx.from_encoding(parse_u64(text));
  if (!mu.contains(t)) throw Error("t=" + text + " is not in mu_{q+1}");
  return t;
}

inline Outcome field_info(const RunConfig& cfg) {
  const auto ctx = make_field(cfg, cfg.k.front());
  const auto sc = special_constants(*ctx);
  json body;
  body["k"] = ctx->k();
  body["q"] = ctx->q();
  body["size"] = ctx->size();
  body["modulus"] = format_trits(ctx->modulus());
  body["primitive_element"] = enc(ctx->alpha());
  body["group_order"] = ctx->group_order();
  body["group_order_primes"] = ctx->group_order_primes();
  body["epsilon"] = enc(sc.epsilon);
  body["theta"] = enc(sc.theta);
  body["theta_roots"] = encs(theta_roots(*ctx));
  body["sqrt_eps_minus_1"] = enc(sc.sqrt_eps_minus_1);
  body["sqrt_theta"] = enc(sc.sqrt_theta);
  return {{body, {}}, {}};
}

inline Outcome mu_cmd(const RunConfig& cfg) {
  const auto ctx = make_field(cfg, cfg.k.front());
  const std::uint64_t d = cfg.d.value_or(ctx->q() + 1);
  const auto mu = mu_enumerate(*ctx, d);
  json body;
  body["k"] = ctx->k();
  body["d"] = d;
  body["size"] = mu.size();
  body["elements"] = encs(mu.elements());
  Table table{{"index", "element"}, {}};
  for (std::size_t i = 0; i < mu.size(); ++i) table.rows.push_back({std::to_string(i), to_string(mu.elements()[i])});
  return {{body, table}, {}};
}

inline Outcome check_trinomial(const RunConfig& cfg) {
  using namespace conjlab;
  const auto ctx = make_field(cfg, cfg.k.front());
  const Family family = family_from_int(cfg.family.front());
  const auto spec = trinomial_spec(family, cfg.l.front(), *ctx);
  const auto dec = trinomial_decompose(spec, *ctx);
  const auto mu = mu_q_plus_1(*ctx);
  const auto crit = zieve_criterion(*ctx, dec.r, mu.d(), dec.h);
  const auto direct = trinomial_permutes_field(spec, *ctx);
  const auto fibers = g_fibers(family, mu);
  bool g_bij = !fibers.denominator_vanishes;
  for (auto s : fibers.sizes) g_bij = g_bij && s == 1;

  json body;
  body["family"] = cfg.family.front();
  body["k"] = ctx->k();
  body["l"] = spec.l;
  body["q"] = spec.q;
  body["exponents"] = spec.exponents;
  body["signs"] = spec.signs;
  body["gcd_ok"] = spec.gcd_ok;
  body["r"] = dec.r;
  body["d"] = mu.d();
  body["h"] = format_poly(dec.h);
  body["direct_bijection"] = direct.is_bijection;
  body["collision"] = direct.collision ? json::array({enc(direct.collision->first), enc(direct.collision->second)})
                                       : json(nullptr);
  body["missed"] = enc(direct.missed);
  body["zieve_cond1"] = crit.cond1;
  body["zieve_cond2"] = crit.cond2;
  body["g_bijection"] = g_bij;
  const bool agree = direct.is_bijection == (crit.cond1 && crit.cond2) && crit.cond2 == g_bij;
  body["routes_agree"] = agree;

  Outcome outcome{{body, {}}, {}};
  if (!agree) outcome.failures.push_back("direct check, criterion and g disagree");
  if (claimed(family, ctx->k()) && spec.gcd_ok && !direct.is_bijection)
    outcome.failures.push_back("trinomial does not permute the field although it is proven to");
  if (!spec.gcd_ok && direct.is_bijection) outcome.failures.push_back("permutes the field although gcd condition fails");
  return outcome;
}

inline Outcome check_g(const RunConfig& cfg) {
  using namespace conjlab;
  const auto ctx = make_field(cfg, cfg.k.front());
  const Family family = family_from_int(cfg.family.front());
  const auto mu = mu_q_plus_1(*ctx);
  const auto g = fractional_map(family, *ctx);
  const auto zeros = roots_in_set(g.denominator, mu.elements());

  json body;
  body["family"] = cfg.family.front();
  body["k"] = ctx->k();
  body["denominator_nonvanishing"] = zeros.empty();
  body["denominator_zeros"] = encs(zeros);
  std::vector<std::size_t> fiber_sizes;
  bool bijection = false, images_in_mu = false;
  std::size_t max_fiber = 0;
  if (zeros.empty()) {
    const auto rep = g_permutes_mu(family, mu);
    bijection = rep.map.is_bijection;
    images_in_mu = rep.images_in_mu;
    fiber_sizes = rep.fiber_sizes;
    max_fiber = rep.max_fiber_size;
  } else {
    fiber_sizes = g_fibers(family, mu).sizes;
    for (auto s : fiber_sizes) max_fiber = std::max(max_fiber, s);
  }
  body["g_bijection"] = bijection;
  body["images_in_mu"] = images_in_mu;
  body["max_fiber_size"] = max_fiber;
  body["fiber_sizes"] = fiber_sizes;
  Table table{{"t", "fiber_size"}, {}};
  for (std::size_t i = 0; i < mu.size(); ++i)
    table.rows.push_back({to_string(mu.elements()[i]), std::to_string(fiber_sizes[i])});

  Outcome outcome{{body, table}, {}};
  if (claimed(family, ctx->k())) {
    if (!zeros.empty()) outcome.failures.push_back("denominator vanishes on mu_{q+1}");
    if (!bijection || max_fiber != 1) outcome.failures.push_back("g does not permute mu_{q+1}");
    if (zeros.empty() && !images_in_mu) outcome.failures.push_back("g maps outside mu_{q+1}");
  }
  return outcome;
}

inline Outcome count_roots(const RunConfig& cfg) {
  using namespace conjlab;
  const auto ctx = make_field(cfg, cfg.k.front());
  const Family family = family_from_int(cfg.family.front());
  const auto mu = mu_q_plus_1(*ctx);
  std::vector<Element> ts;
  if (*cfg.t == "all") {
    ts = mu.elements();
  } else {
    ts.push_back(unit_circle_element(mu, *ctx, *cfg.t));
  }
  json body;
  body["family"] = cfg.family.front();
  body["k"] = ctx->k();
  body["t"] = *cfg.t == "all" ? json("all") : enc(ts.front());
  json counts = json::array();
  Table table{{"t", "count", "roots"}, {}};
  std::size_t max_count = 0;
  Outcome outcome;
  for (const auto& t : ts) {
    const auto sol = count_solutions(family, t, mu);
    max_count = std::max(max_count, sol.count);
    counts.push_back({{"t", enc(t)}, {"count", sol.count}, {"roots", encs(sol.roots)}});
    table.rows.push_back({to_string(t), std::to_string(sol.count), join_encodings(sol.roots)});
    if (claimed(family, ctx->k()) && sol.count != 1)
      outcome.failures.push_back("t=" + to_string(t) + " has " + std::to_string(sol.count) + " solutions, expected 1");
  }
  body["counts"] = counts;
  body["max_count"] = max_count;
  outcome.report = {body, table};
  return outcome;
}

inline Outcome factors_cmd(const RunConfig& cfg) {
  using namespace conjlab;
  const auto ctx = make_field(cfg, cfg.k.front());
  json body;
  body["k"] = ctx->k();
  Poly p(*ctx);
  if (cfg.poly) {
    p = parse_poly(*ctx, *cfg.poly);
  } else {
    const auto mu = mu_q_plus_1(*ctx);
    const Element t = unit_circle_element(mu, *ctx, *cfg.t);
    p = target_polynomial(family_from_int(cfg.family.front()), t);
    body["family"] = cfg.family.front();
    body["t"] = enc(t);
  }
  if (p.degree() < 2) throw Error("polynomial must have degree at least 2");
  body["poly"] = format_poly(p);
  json arr = json::array();
  Table table{{"a", "b", "x1", "x2"}, {}};
  for (const auto& qf : quadratic_factors(p)) {
    const auto [x1, x2] = quadratic_roots(qf.a, qf.b);
    arr.push_back({{"a", enc(qf.a)}, {"b", enc(qf.b)}, {"x1", enc(x1)}, {"x2", enc(x2)}});
    table.rows.push_back({to_string(qf.a), to_string(qf.b), cell(enc(x1)), cell(enc(x2))});
  }
  body["factors"] = arr;
  body["factor_count"] = arr.size();
  return {{body, table}, {}};
}

inline Outcome lemma_verify(const RunConfig& cfg) {
  using namespace conjlab;
  const auto ctx = make_field(cfg, cfg.k.front());
  const Family family = family_from_int(cfg.family.front());
  const int degree = family == Family::Three ? 5 : 7;
  const auto mu = mu_q_plus_1(*ctx);
  const auto harvest = harvest_witnesses(degree, mu);

  std::map<std::string, std::size_t> histogram;
  if (degree == 5) {
    histogram = {{"FifthDegreeRelation", 0}, {"NoMatch", 0}};
  } else {
    histogram = {{"EpsilonCase", 0}, {"ThetaCase", 0}, {"NoMatch", 0}};
  }
  std::size_t derivation_failures = 0, case_failures = 0;
  json witnesses = json::array();
  Table table{{"t", "a", "b", "lemma_case", "x1", "x2", "derivation_ok"}, {}};
  for (const auto& w : harvest.witnesses) {
    ++histogram[to_string(w.lemma_case)];
    const bool derivation = degree == 5 ? verify_lemma2_derivation(w.a, w.b, w.t, *ctx)
                                        : verify_lemma4_derivation(w.a, w.b, w.t, *ctx);
    const bool cases = degree == 5 ? lemma2_cases_excluded(w.a, w.b) : lemma4_case1_excluded(w.a, w.b);
    derivation_failures += !derivation;
    case_failures += !cases;
    witnesses.push_back({{"t", enc(w.t)},
                         {"a", enc(w.a)},
                         {"b", enc(w.b)},
                         {"lemma_case", to_string(w.lemma_case)},
                         {"x1", enc(w.x1)},
                         {"x2", enc(w.x2)},
                         {"derivation_ok", derivation}});
    table.rows.push_back({to_string(w.t), to_string(w.a), to_string(w.b), to_string(w.lemma_case), cell(enc(w.x1)),
                          cell(enc(w.x2)), derivation ? "true" : "false"});
  }

  json body;
  body["family"] = cfg.family.front();
  body["k"] = ctx->k();
  body["degree"] = degree;
  body["witness_count"] = harvest.witnesses.size();
  body["excluded_count"] = harvest.excluded.size();
  body["lemma_case_histogram"] = histogram;
  body["derivation_failures"] = derivation_failures;
  body["case_exclusion_failures"] = case_failures;
  body["witnesses"] = witnesses;

  Outcome outcome;
  if (histogram["NoMatch"] != 0) outcome.failures.push_back("witness matched no lemma case");
  if (derivation_failures != 0) outcome.failures.push_back("coefficient-system derivation failed");
  if (case_failures != 0) outcome.failures.push_back("an excluded proof case occurred");
  if (degree == 7 && ctx->k() % 3 != 0 && histogram["ThetaCase"] != 0)
    outcome.failures.push_back("ThetaCase without theta in the field");

  if (claimed(family, ctx->k())) {
    const auto ex = distinct_root_exclusion(family, *ctx);
    body["exclusion"] = {{"max_count", ex.max_count},
                         {"counterexamples", ex.counterexamples.size()},
                         {"witnesses_in_mu", ex.witnesses_in_mu},
                         {"sqrt_eps_minus_1_absent", optional_json(ex.sqrt_eps_minus_1_absent)},
                         {"sqrt_eps_minus_1_power_one", optional_json(ex.sqrt_eps_minus_1_power_one)},
                         {"theta_half_power_one", optional_json(ex.theta_half_power_one)},
                         {"ok", ex.ok()}};
    if (!ex.ok()) outcome.failures.push_back("distinct-root exclusion failed");
  } else {
    body["exclusion"] = nullptr;
  }
  outcome.report = {body, table};
  return outcome;
}

inline Outcome uv_scan(const RunConfig& cfg) {
  const auto ctx = make_field(cfg, cfg.k.front());
  const auto rep = conjlab::uv_identity_check(*ctx);
  json body;
  body["k"] = ctx->k();
  body["witness_count"] = rep.witnesses.size();
  body["excluded_count"] = rep.excluded;
  body["sextic_ok"] = rep.sextic_ok;
  body["cubic_ok"] = rep.cubic_ok;
  body["shifted_ok"] = rep.shifted_ok;
  body["definitions_ok"] = rep.definitions_ok;
  json arr = json::array();
  Table table{{"t", "a", "b", "u", "v"}, {}};
  for (const auto& w : rep.witnesses) {
    arr.push_back({{"t", enc(w.t)}, {"a", enc(w.a)}, {"b", enc(w.b)}, {"u", enc(w.u)}, {"v", enc(w.v)}});
    table.rows.push_back({to_string(w.t), to_string(w.a), to_string(w.b), to_string(w.u), to_string(w.v)});
  }
  body["witnesses"] = arr;
  Outcome outcome{{body, table}, {}};
  if (!rep.ok()) outcome.failures.push_back("(u,v) identities failed");
  return outcome;
}

inline Outcome sweep_cmd(const RunConfig& cfg) {
  conjlab::SweepOptions opts{cfg.max_k, cfg.parallelism, cfg.modulus};
  const auto rows = conjlab::sweep(cfg.family, cfg.k, cfg.l, opts);
  Outcome outcome{sweep_report(rows), {}};
  for (const auto& r : rows)
    if (!conjlab::row_meets_claims(r))
      outcome.failures.push_back("row family=" + std::to_string(r.family) + " k=" + std::to_string(r.k) +
                                 " l=" + std::to_string(r.l) + " contradicts the proven claims");
  return outcome;
}

inline Outcome execute(const RunConfig& cfg) {
  const std::string& c = cfg.command;
  if (c == "field-info") return field_info(cfg);
  if (c == "mu") return mu_cmd(cfg);
  if (c == "check-trinomial") return check_trinomial(cfg);
  if (c == "check-g") return check_g(cfg);
  if (c == "count-roots") return count_roots(cfg);
  if (c == "factors") return factors_cmd(cfg);
  if (c == "lemma-verify") return lemma_verify(cfg);
  if (c == "uv-scan") return uv_scan(cfg);
  if (c == "sweep") return sweep_cmd(cfg);
  throw UsageError("unknown command: " + c);
}

/// Writes the report, then lists failed assertions. The report is written
/// even when assertions fail.
inline int emit(const Outcome& outcome, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    report_write(outcome.report, cfg.format, cfg.output, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  for (const auto& f : outcome.failures) err << "assertion failed: " << f << "\n";
  return outcome.failures.empty() ? kOk : kAssertion;
}

/// Exit 0 on success, 1 on usage or input errors, 2 when a proven claim fails.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::optional<RunConfig> cfg;
  Outcome outcome;
  try {
    cfg = parse_args(args, out);
    if (!cfg) return kOk;
    outcome = execute(*cfg);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return emit(outcome, *cfg, out, err);
}

}  // namespace trinolab::cli
