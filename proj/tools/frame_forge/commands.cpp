#include "commands.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <memory>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <sstream>
#include <thread>

#include "frameforge/envelopes.hpp"
#include "frameforge/frames.hpp"
#include "frameforge/graded.hpp"
#include "frameforge/hermite.hpp"
#include "frameforge/jaffard.hpp"
#include "frameforge/json_io.hpp"
#include "frameforge/linalg.hpp"
#include "frameforge/matrix_io.hpp"

namespace frameforge::cli {

namespace fs = std::filesystem;

namespace {

// Verification outcome of a command; the report is written either way.
struct Result {
  Json body = Json::object();
  bool passed = true;
  std::string summary;
};

struct Context {
  const Options& options;
  Json config;
  fs::path config_dir;

  fs::path resolve(const std::string& p) const {
    fs::path path(p);
    return path.is_absolute() ? path : config_dir / path;
  }

  fs::path output(const std::string& name) const { return options.out / name; }

  std::uint64_t seed() const {
    if (options.seed) return *options.seed;
    if (config.contains("seed")) {
      const Json& s = config["seed"];
      if (s.is_number_unsigned()) return s.get<std::uint64_t>();
      if (s.is_number_integer() && s.get<long long>() >= 0) return s.get<std::uint64_t>();
      throw InvalidArgument("seed must be a nonnegative integer");
    }
    throw InvalidArgument("seed required (config field 'seed' or --seed)");
  }

  std::optional<std::uint64_t> seed_if_any() const {
    if (options.seed || config.contains("seed")) return seed();
    return std::nullopt;
  }
};

Json load_config(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config " + path.string());
  try {
    Json j = Json::parse(in);
    if (!j.is_object()) throw InvalidArgument("config must be a JSON object");
    return j;
  } catch (const nlohmann::json::parse_error& e) {
    throw IoError("malformed config " + path.string() + ": " + e.what());
  }
}

const Json& require(const Json& j, const char* key) {
  if (!j.contains(key)) throw InvalidArgument(std::string("config field '") + key + "' is required");
  return j.at(key);
}

double get_number(const Json& j, const char* key, double fallback) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_number()) throw InvalidArgument(std::string("config field '") + key + "' must be a number");
  return j[key].get<double>();
}

Index get_index(const Json& j, const char* key, Index fallback) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_number_integer()) throw InvalidArgument(std::string("config field '") + key + "' must be an integer");
  return j[key].get<Index>();
}

Index truncation_size(const Json& cfg) {
  const Json& n = require(cfg, "n");
  if (!n.is_number_integer()) throw InvalidArgument("config field 'n' must be an integer");
  const auto v = n.get<Index>();
  if (v < 16) throw InvalidArgument("truncation size n must be at least 16");
  return v;
}

std::vector<double> get_levels(const Json& cfg, std::vector<double> fallback) {
  if (!cfg.contains("levels")) return fallback;
  std::vector<double> out;
  for (const Json& x : cfg["levels"]) out.push_back(number_from_json(x));
  return out;
}

NormFamily get_family(const Json& cfg) {
  return cfg.contains("family") ? family_from_json(cfg["family"]) : NormFamily::poly();
}

std::string fmt(double x) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void write_file(const fs::path& path, const std::string& text) {
  fs::create_directories(path.parent_path().empty() ? fs::path(".") : path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  if (!out) throw IoError("write failed for " + path.string());
}

// ---------------------------------------------------------------------------
// Inputs

Matrix generated_matrix(const Json& g) {
  const std::string kind = require(g, "kind").get<std::string>();
  const Index n = truncation_size(g);
  if (kind == "identity") return Matrix::Identity(n, n);
  if (kind == "tridiagonal") {
    const double lo = get_number(g, "sub", 0.3);
    const double mid = get_number(g, "diag", 1.0);
    const double hi = get_number(g, "super", 0.3);
    Matrix m = Matrix::Zero(n, n);
    for (Index i = 0; i < n; ++i) {
      m(i, i) = mid;
      if (i > 0) m(i, i - 1) = lo;
      if (i + 1 < n) m(i, i + 1) = hi;
    }
    return m;
  }
  if (kind == "diagonal") return Matrix::Identity(n, n) * get_number(g, "value", 1.0);
  if (kind == "exponential") {
    const auto env = DecayEnvelope::jaffard(get_number(g, "gamma", 1.0), get_number(g, "beta", 1.0),
                                            get_number(g, "c", 1.0));
    return TruncatedMatrix::generate(n, [&](Index a, Index b) { return env.value(a, b); }).entries();
  }
  throw InvalidArgument("unknown generated matrix kind '" + kind + "'");
}

TruncatedMatrix matrix_from_config(const Context& ctx) {
  const Json& src = require(ctx.config, "matrix");
  TruncatedMatrix a = src.is_string()
                          ? read_matrix(ctx.resolve(src.get<std::string>()))
                          : TruncatedMatrix(generated_matrix(require(src, "generate")));
  if (ctx.config.contains("margin")) a = a.with_margin(get_index(ctx.config, "margin", 0));
  return a;
}

struct SystemInput {
  FrameSystem system;
  std::optional<PerturbationSpec> spec;
  Index dropped = 0;
};

SystemInput system_from_config(const Context& ctx) {
  const Json& cfg = ctx.config;
  if (cfg.contains("perturbation")) {
    const Index n = truncation_size(cfg);
    PerturbationSpec spec = perturbation_spec_from_json(cfg["perturbation"]);
    PerturbedBasis b = build_perturbed_basis(spec, n);
    return {std::move(b.system), std::move(spec), b.dropped};
  }
  const Json& src = require(cfg, "system");
  if (!src.is_string()) throw InvalidArgument("config field 'system' must be \"onb\" or a path");
  if (src == "onb") {
    const Index n = truncation_size(cfg);
    PerturbationSpec spec = PerturbationSpec::constant(1, 0.0);
    PerturbedBasis b = build_perturbed_basis(spec, n);
    return {FrameSystem(b.system.coeffs(), "onb"), std::move(spec), 0};
  }
  FrameSystem e = read_frame_system(ctx.resolve(src.get<std::string>()));
  if (e.size() < 16) throw InvalidArgument("truncation size n must be at least 16");
  return {std::move(e), std::nullopt, 0};
}

Index hermite_nmax(const Json& cfg, Index n) {
  return get_index(cfg, "nmax", std::max<Index>(512, n));
}

// ---------------------------------------------------------------------------
// Commands

Result cmd_gen(const Context& ctx) {
  const Index n = truncation_size(ctx.config);
  const PerturbationSpec spec = perturbation_spec_from_json(require(ctx.config, "perturbation"));
  PerturbedBasis b = build_perturbed_basis(spec, n);
  const std::string label = ctx.config.value("label", b.system.label());
  const FrameSystem system(b.system.coeffs(), label);

  const std::string format = ctx.config.value("format", "csv");
  if (format != "csv" && format != "binary") throw InvalidArgument("format must be csv or binary");
  const std::string name = ctx.config.value("output", format == "csv" ? "system.csv" : "system.ffmx");
  const fs::path path = ctx.output(name);
  write_frame_system(path, system, format == "csv" ? MatrixFormat::csv : MatrixFormat::binary);

  Result r;
  r.body["label"] = label;
  r.body["n"] = n;
  r.body["perturbation"] = to_json(spec);
  r.body["dropped_terms"] = b.dropped;
  r.body["matrix"] = name;
  r.body["frame_bounds"] = to_json(frame_bounds(system));
  r.summary = "wrote " + path.string();
  return r;
}

Result cmd_fit(const Context& ctx) {
  const TruncatedMatrix a = matrix_from_config(ctx);
  std::vector<double> betas = {1.0};
  if (ctx.config.contains("betas")) {
    betas.clear();
    for (const Json& b : ctx.config["betas"]) betas.push_back(number_from_json(b));
  }
  std::ostringstream csv;
  csv << "beta,gamma_fit,C_fit,residual\n";
  Result r;
  r.body["n"] = a.size();
  r.body["margin"] = a.margin();
  r.body["fits"] = Json::array();
  for (double beta : betas) {
    const DecayFit fit = fit_decay(a, beta);
    csv << fmt(beta) << ',' << fmt(fit.gamma) << ',' << fmt(fit.c) << ',' << fmt(fit.residual) << '\n';
    Json row = to_json(fit);
    row["beta"] = beta;
    r.body["fits"].push_back(std::move(row));
  }
  write_file(ctx.output("fit.csv"), csv.str());
  r.body["csv"] = "fit.csv";
  r.summary = std::to_string(betas.size()) + " fit(s)";
  return r;
}

Result cmd_schur(const Context& ctx) {
  const TruncatedMatrix a = matrix_from_config(ctx);
  std::vector<double> ps = {1.0, 2.0, std::numeric_limits<double>::infinity()};
  if (ctx.config.contains("p")) {
    ps.clear();
    for (const Json& p : ctx.config["p"]) ps.push_back(number_from_json(p));
  }
  Result r;
  r.body["n"] = a.size();
  r.body["bounds"] = Json::array();
  for (double p : ps) r.body["bounds"].push_back({{"p", json_number(p)}, {"bound", schur_bound(a, p)}});
  const double norm = spectral_norm(a.entries());
  const double bound2 = schur_bound(a, 2.0);
  r.body["spectral_norm"] = norm;
  r.passed = bound2 + 1e-10 >= norm;
  r.body["bound_dominates_norm"] = r.passed;
  r.summary = "p=2 bound " + fmt(bound2) + " vs norm " + fmt(norm);
  return r;
}

Result cmd_jaffard(const Context& ctx) {
  const TruncatedMatrix a = matrix_from_config(ctx);
  const Json& cfg = ctx.config;
  JaffardParameters params;
  params.beta = get_number(cfg, "beta", 1.0);
  params.eps_free = get_number(cfg, "eps", 0.5);
  if (cfg.contains("gamma_prime")) params.gamma_prime = get_number(cfg, "gamma_prime", 0.0);
  if (cfg.contains("gamma_dprime")) params.gamma_dprime = get_number(cfg, "gamma_dprime", 0.0);

  std::string source = "config";
  if (cfg.contains("gamma")) {
    params.gamma = get_number(cfg, "gamma", 1.0);
  } else {
    const DecayFit fit = localization_fit(a, params.beta);
    if (std::isfinite(fit.gamma) && fit.gamma > 0.0) {
      params.gamma = fit.gamma;
      source = "fit";
    } else {
      params.gamma = 1.0;  // banded: a member of every class
      source = "banded-default";
    }
  }

  const JaffardReport rep = jaffard_predict(a, params);
  const InverseDecayCheck check = verify_inverse_decay(a, rep);
  Result r;
  r.body["n"] = a.size();
  r.body["margin"] = a.margin();
  r.body["gamma_source"] = source;
  r.body["report"] = to_json(rep);
  r.body["inverse"] = to_json(check);
  r.body["violations"] = check.violations;
  r.passed = check.violations == 0;
  r.summary = "gamma1_pred " + fmt(rep.gamma1_pred) + ", violations " + std::to_string(check.violations);
  return r;
}

Json dual_localization_json(const FrameSystem& e, const Json& cfg) {
  std::optional<double> beta = 1.0;
  if (cfg.contains("beta")) {
    if (cfg["beta"] == "poly")
      beta.reset();
    else
      beta = number_from_json(cfg["beta"]);
  }
  return to_json(dual_localization_check(e, beta));
}

Result cmd_dual(const Context& ctx) {
  SystemInput in = system_from_config(ctx);
  const FrameSystem& e = in.system;
  const FrameSystem d = canonical_dual(e);
  write_frame_system(ctx.output("dual.csv"), d);

  Result r;
  const double bio = biorthogonality_error(e);
  const Json loc = dual_localization_json(e, ctx.config);
  r.body["n"] = e.size();
  r.body["label"] = e.label();
  r.body["frame_bounds"] = to_json(frame_bounds(e));
  r.body["biorthogonality_error"] = bio;
  r.body["localization"] = loc;
  r.body["matrix"] = "dual.csv";
  const double gamma_dual = number_from_json(loc["dual"]["gamma"]);
  r.passed = bio < 1e-8 && gamma_dual > 0.0;
  r.summary = "biorthogonality " + fmt(bio) + ", dual rate " + fmt(gamma_dual);
  return r;
}

struct CurveSummary {
  Json json;
  bool exact = true;
};

CurveSummary expansion_summary(const std::vector<ErrorPoint>& curve, const std::vector<double>& levels,
                               Index n) {
  CurveSummary s;
  s.json = Json::array();
  for (double k : levels) {
    double prev = std::numeric_limits<double>::infinity();
    bool monotone = true;
    double last = 0.0;
    for (const ErrorPoint& p : curve) {
      if (p.level != k) continue;
      if (p.error > prev + 1e-10) monotone = false;
      prev = p.error;
      if (p.m == n) last = p.error;
    }
    s.exact = s.exact && last < 1e-8;
    s.json.push_back({{"level", k}, {"nonincreasing", monotone}, {"final_error", last}});
  }
  return s;
}

std::string curve_csv(const std::vector<ErrorPoint>& curve) {
  std::ostringstream csv;
  csv << "M,k,error\n";
  for (const ErrorPoint& p : curve) csv << p.m << ',' << fmt(p.level) << ',' << fmt(p.error) << '\n';
  return csv.str();
}

Result cmd_expand(const Context& ctx) {
  SystemInput in = system_from_config(ctx);
  const FrameSystem& e = in.system;
  const Json& cfg = ctx.config;
  const Index n = e.size();
  const HermiteContext hermite(hermite_nmax(cfg, n));
  const TestFunction f = test_function_from_json(require(cfg, "function"));
  const CoefficientSequence coeffs = project(hermite, f, n);
  const NormFamily family = get_family(cfg);
  const std::vector<double> levels = get_levels(cfg, {0, 1, 2, 3, 4});

  std::vector<Index> checkpoints = default_checkpoints(n);
  if (cfg.contains("checkpoints")) checkpoints = cfg["checkpoints"].get<std::vector<Index>>();
  ExpansionSide side = ExpansionSide::dual_coefficients;
  if (cfg.value("side", "dual") == "primal") side = ExpansionSide::primal_coefficients;

  const auto curve = expansion_error_curve(coeffs, e, family, levels, checkpoints, side);
  write_file(ctx.output("expand.csv"), curve_csv(curve));
  const CurveSummary summary = expansion_summary(curve, levels, n);

  Result r;
  r.body["n"] = n;
  r.body["function"] = to_json(f);
  r.body["family"] = to_json(family);
  r.body["side"] = side == ExpansionSide::dual_coefficients ? "dual" : "primal";
  r.body["levels"] = summary.json;
  r.body["csv"] = "expand.csv";
  r.passed = summary.exact;
  if (cfg.contains("permutations")) {
    const auto perm = permutation_stability(e, coeffs, get_index(cfg, "permutations", 0), ctx.seed());
    r.body["permutation"] = to_json(perm);
    r.passed = r.passed && perm.max_total_deviation <= 1e-10;
  }
  r.summary = std::to_string(curve.size()) + " curve points";
  return r;
}

Json fframe_json(const FrameSystem& e, const Json& cfg, std::uint64_t seed, bool& ok) {
  const Index n = e.size();
  const HermiteContext hermite(hermite_nmax(cfg, n));
  const auto samples =
      default_fframe_samples(hermite, n, get_index(cfg, "random_samples", 500), seed);
  const NormFamily family = get_family(cfg);
  Json out = Json::array();
  ok = true;
  for (double k : get_levels(cfg, {0, 1, 2, 3, 4})) {
    const FFrameInterval iv = fframe_bounds_estimate(e, samples, family, k);
    ok = ok && iv.lower > 0.0 && iv.lower <= iv.upper && std::isfinite(iv.upper);
    out.push_back(to_json(iv));
  }
  return out;
}

Result cmd_fframe(const Context& ctx) {
  SystemInput in = system_from_config(ctx);
  Result r;
  bool ok = true;
  r.body["n"] = in.system.size();
  r.body["intervals"] = fframe_json(in.system, ctx.config, ctx.seed(), ok);
  r.passed = ok;
  r.summary = std::to_string(r.body["intervals"].size()) + " level(s)";
  return r;
}

// ---------------------------------------------------------------------------
// report

struct Step {
  std::string name;
  std::function<Json()> run;  // returns {"status": ..., ...}
};

Json guarded(const Step& step) {
  Json out;
  try {
    out = step.run();
  } catch (const InvalidArgument& e) {
    out = {{"status", "rejected"}, {"message", e.what()}};
  } catch (const SingularMatrix& e) {
    out = {{"status", "rejected"}, {"message", e.what()}};
  } catch (const std::exception& e) {
    out = {{"status", "error"}, {"message", e.what()}};
  }
  Json named = {{"name", step.name}};
  named.update(out);
  return named;
}

const char* verdict(bool ok) { return ok ? "pass" : "fail"; }

Result cmd_report(const Context& ctx) {
  const Json& cfg = ctx.config;
  SystemInput in = system_from_config(ctx);
  const FrameSystem e = in.system;
  const Index n = e.size();
  const std::uint64_t seed = ctx.seed();
  const double beta = get_number(cfg, "beta", 1.0);
  const auto hermite = std::make_shared<const HermiteContext>(hermite_nmax(cfg, n));

  std::vector<Step> steps;
  steps.push_back({"envelope_chain", [&] {
    const ImplicationChain c = check_implication_chain(e.coeffs(), get_number(cfg, "chain_gamma", 2.0));
    const double slack = 1.0 + 1e-12;
    const bool ordered = c.c_tstar <= c.c_dstar * slack && c.c_dstar <= c.c_star * slack;
    return Json{{"status", verdict(ordered)}, {"detail", to_json(c)}};
  }});
  steps.push_back({"schur", [&] {
    const double bound = schur_bound(e.coeffs(), 2.0);
    const double norm = spectral_norm(e.entries());
    return Json{{"status", verdict(bound + 1e-10 >= norm)},
                {"detail", {{"bound", bound}, {"spectral_norm", norm}}}};
  }});
  steps.push_back({"frame_bounds", [&] {
    const FrameBounds b = frame_bounds(e);
    return Json{{"status", verdict(b.lower > 0.0)}, {"detail", to_json(b)}};
  }});
  steps.push_back({"dual_biorthogonality", [&] {
    const double err = biorthogonality_error(e);
    return Json{{"status", verdict(err < 1e-8)}, {"detail", {{"max_error", err}}}};
  }});
  steps.push_back({"dual_localization", [&] {
    const Json loc = dual_localization_json(e, cfg);
    return Json{{"status", verdict(number_from_json(loc["dual"]["gamma"]) > 0.0)}, {"detail", loc}};
  }});
  steps.push_back({"example_inequalities", [&] {
    if (!in.spec) return Json{{"status", "skipped"}, {"message", "system is not a perturbed basis"}};
    const ExampleReport rep =
        verify_example_inequalities(*in.spec, n, get_index(cfg, "example_trials", 1000), seed);
    return Json{{"status", verdict(rep.violations() == 0)}, {"detail", to_json(rep)}};
  }});
  const TestFunction f =
      cfg.contains("function") ? test_function_from_json(cfg["function"]) : TestFunction{Gaussian{3.0}};
  const NormFamily family = get_family(cfg);
  const std::vector<double> levels = get_levels(cfg, {0, 1, 2, 3, 4});
  steps.push_back({"expansion", [&] {
    const CoefficientSequence coeffs = project(*hermite, f, n);
    const auto curve = expansion_error_curve(coeffs, e, family, levels, default_checkpoints(n));
    write_file(ctx.output("report_expansion.csv"), curve_csv(curve));
    const CurveSummary s = expansion_summary(curve, levels, n);
    return Json{{"status", verdict(s.exact)},
                {"detail", {{"levels", s.json}, {"csv", "report_expansion.csv"}}}};
  }});
  steps.push_back({"permutation", [&] {
    const CoefficientSequence coeffs = project(*hermite, f, n);
    const auto perm = permutation_stability(e, coeffs, get_index(cfg, "permutations", 50), seed);
    return Json{{"status", verdict(perm.max_total_deviation <= 1e-10)}, {"detail", to_json(perm)}};
  }});
  steps.push_back({"fframe_bounds", [&] {
    bool ok = true;
    Json iv = fframe_json(e, cfg, seed, ok);
    return Json{{"status", verdict(ok)}, {"detail", std::move(iv)}};
  }});
  if (cfg.contains("weight")) {
    steps.push_back({"weighted_norms", [&] {
      const Weight w = weight_from_json(cfg["weight"]);
      const auto norms = weighted_operator_norms(e, w, get_number(cfg, "weight_p", 2.0), beta,
                                                 get_index(cfg, "weight_trials", 100), seed);
      const bool ok = std::isfinite(norms.analysis) && std::isfinite(norms.synthesis) &&
                      std::isfinite(norms.frame_operator) && norms.frame_operator_min > 0.0;
      return Json{{"status", verdict(ok)}, {"detail", to_json(norms)}};
    }});
  }

  // Bounded concurrency; results are collected in step order.
  std::vector<Json> results(steps.size());
  const std::size_t budget = std::max(1u, thread_budget());
  for (std::size_t start = 0; start < steps.size(); start += budget) {
    const std::size_t stop = std::min(steps.size(), start + budget);
    std::vector<std::future<Json>> running;
    for (std::size_t i = start; i < stop; ++i)
      running.push_back(std::async(budget == 1 ? std::launch::deferred : std::launch::async,
                                   [&steps, i] { return guarded(steps[i]); }));
    for (std::size_t i = start; i < stop; ++i) results[i] = running[i - start].get();
  }

  Result r;
  r.body["n"] = n;
  r.body["label"] = e.label();
  r.body["steps"] = Json::array();
  std::size_t passed = 0;
  for (Json& s : results) {
    const std::string status = s["status"];
    if (status == "pass" || status == "skipped") ++passed;
    else r.passed = false;
    r.body["steps"].push_back(std::move(s));
  }
  r.summary = std::to_string(passed) + "/" + std::to_string(results.size()) + " steps passed";
  return r;
}

using Command = Result (*)(const Context&);

Command find_command(const std::string& name) {
  if (name == "gen") return cmd_gen;
  if (name == "fit") return cmd_fit;
  if (name == "schur") return cmd_schur;
  if (name == "jaffard") return cmd_jaffard;
  if (name == "dual") return cmd_dual;
  if (name == "expand") return cmd_expand;
  if (name == "fframe") return cmd_fframe;
  if (name == "report") return cmd_report;
  return nullptr;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {"gen",  "fit",    "schur",  "jaffard",
                                                 "dual", "expand", "fframe", "report"};
  return names;
}

unsigned thread_budget() {
  if (const char* env = std::getenv("FRAME_FORGE_THREADS")) {
    unsigned v = 0;
    const std::string_view s(env);
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec == std::errc() && res.ptr == s.data() + s.size() && v > 0) return v;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

int run(const Options& options, std::ostream& out, std::ostream& err) {
  const Command command = find_command(options.command);
  if (!command) {
    err << "frame-forge: unknown command '" << options.command << "'\n";
    return kInvalidInput;
  }
  try {
    Context ctx{options, load_config(options.config), options.config.parent_path()};
    Result result = command(ctx);

    Json report;
    report["command"] = options.command;
    report["status"] = result.passed ? "pass" : "fail";
    if (const auto seed = ctx.seed_if_any()) report["seed"] = *seed;
    if (options.timestamp) report["generated_at"] = utc_timestamp();
    report["result"] = std::move(result.body);
    write_file(ctx.output(options.command + ".json"), report.dump(2) + "\n");

    out << options.command << ": " << (result.passed ? "pass" : "FAIL") << " (" << result.summary
        << ")\n";
    return result.passed ? kPass : kVerificationFailure;
  } catch (const IoError& e) {
    err << "frame-forge " << options.command << ": " << e.what() << '\n';
    return kIoError;
  } catch (const InvalidArgument& e) {
    err << "frame-forge " << options.command << ": " << e.what() << '\n';
    return kInvalidInput;
  } catch (const SingularMatrix& e) {
    err << "frame-forge " << options.command << ": " << e.what() << '\n';
    return kInvalidInput;
  } catch (const nlohmann::json::exception& e) {
    err << "frame-forge " << options.command << ": invalid config: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const fs::filesystem_error& e) {
    err << "frame-forge " << options.command << ": " << e.what() << '\n';
    return kIoError;
  } catch (const std::exception& e) {
    err << "frame-forge " << options.command << ": " << e.what() << '\n';
    return kVerificationFailure;
  }
}

}  // namespace frameforge::cli
