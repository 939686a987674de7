#include "frameforge/json_io.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace frameforge {

namespace {

[[noreturn]] void schema_error(const std::string& what) { throw InvalidArgument(what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    schema_error(std::string("missing field '") + key + "'");
  return j.at(key);
}

double number_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number()) schema_error(std::string("field '") + key + "' must be a number");
  return v.get<double>();
}

double number_or(const Json& j, const char* key, double fallback) {
  return j.contains(key) ? number_field(j, key) : fallback;
}

std::vector<double> number_list(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_array()) schema_error(std::string("field '") + key + "' must be an array");
  std::vector<double> out;
  for (const Json& x : v) {
    if (!x.is_number()) schema_error(std::string("field '") + key + "' must hold numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

std::string string_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) schema_error(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

}  // namespace

Json json_number(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  return x;
}

double number_from_json(const Json& j) {
  if (j.is_number()) return j.get<double>();
  if (j == "inf") return std::numeric_limits<double>::infinity();
  if (j == "-inf") return -std::numeric_limits<double>::infinity();
  schema_error("expected a number");
}

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  schema_error("complex value must be a number or [re, im]");
}

Json to_json(Complex z) {
  if (z.imag() == 0.0) return z.real();
  return Json::array({z.real(), z.imag()});
}

TestFunction test_function_from_json(const Json& j) {
  const std::string kind = string_field(j, "kind");
  TestFunction f;
  if (kind == "gaussian") {
    f = Gaussian{number_field(j, "a")};
  } else if (kind == "hermite_combo") {
    HermiteCombo h;
    const Json& c = field(j, "coeffs");
    if (!c.is_array()) schema_error("field 'coeffs' must be an array");
    for (const Json& x : c) h.coeffs.push_back(complex_from_json(x));
    f = std::move(h);
  } else if (kind == "sampled") {
    f = Sampled{number_list(j, "grid"), number_list(j, "values")};
  } else {
    schema_error("unknown test function kind '" + kind + "'");
  }
  validate(f);
  return f;
}

Json to_json(const TestFunction& f) {
  Json j;
  if (const auto* g = std::get_if<Gaussian>(&f)) {
    j["kind"] = "gaussian";
    j["a"] = g->a;
  } else if (const auto* h = std::get_if<HermiteCombo>(&f)) {
    j["kind"] = "hermite_combo";
    j["coeffs"] = Json::array();
    for (const Complex& z : h->coeffs) j["coeffs"].push_back(to_json(z));
  } else {
    const auto& s = std::get<Sampled>(f);
    j["kind"] = "sampled";
    j["grid"] = s.grid;
    j["values"] = s.values;
  }
  return j;
}

PerturbationSpec perturbation_spec_from_json(const Json& j) {
  const Json& rj = field(j, "r");
  if (!rj.is_number_integer() || rj.get<long long>() < 1)
    schema_error("field 'r' must be a positive integer");
  const int r = rj.get<int>();
  std::vector<double> eps;
  if (j.contains("eps")) eps = number_list(j, "eps");

  const Json& aj = field(j, "a");
  PerturbationSpec spec;
  if (aj.is_object()) {
    spec = PerturbationSpec::constant(r, complex_from_json(field(aj, "constant")), eps);
  } else if (aj.is_array()) {
    spec.r = r;
    spec.eps = eps.empty() ? std::vector<double>(static_cast<std::size_t>(r), 1.0 / (r + 1.0))
                           : eps;
    for (const Json& seq : aj) {
      if (!seq.is_array()) schema_error("field 'a' must be a list of sequences");
      std::vector<Complex> row;
      for (const Json& x : seq) row.push_back(complex_from_json(x));
      spec.a.push_back(std::move(row));
    }
  } else {
    schema_error("field 'a' must be a list of sequences or {\"constant\": v}");
  }
  spec.validate();
  return spec;
}

Json to_json(const PerturbationSpec& s) {
  Json j;
  j["r"] = s.r;
  j["eps"] = s.eps;
  if (s.constant_value) {
    j["a"] = {{"constant", to_json(*s.constant_value)}};
  } else {
    j["a"] = Json::array();
    for (const auto& seq : s.a) {
      Json row = Json::array();
      for (const Complex& z : seq) row.push_back(to_json(z));
      j["a"].push_back(std::move(row));
    }
  }
  return j;
}

Weight weight_from_json(const Json& j) {
  const std::string kind = string_field(j, "kind");
  const double c = number_or(j, "c", 1.0);
  if (kind == "moderate") return Weight::moderate(number_field(j, "k"), c);
  if (kind == "subexponential")
    return Weight::subexponential(number_field(j, "beta"), number_field(j, "gamma"), c);
  if (kind == "exponential") return Weight::exponential(number_field(j, "gamma"), c);
  schema_error("unknown weight kind '" + kind + "'");
}

Json to_json(const Weight& w) {
  Json j;
  switch (w.kind()) {
    case WeightKind::moderate:
      j["kind"] = "moderate";
      j["k"] = w.order();
      break;
    case WeightKind::subexponential:
      j["kind"] = "subexponential";
      j["beta"] = w.beta();
      j["gamma"] = w.gamma();
      break;
    case WeightKind::exponential:
      j["kind"] = "exponential";
      j["gamma"] = w.gamma();
      break;
  }
  j["c"] = w.admissibility_constant();
  return j;
}

DecayEnvelope envelope_from_json(const Json& j) {
  DecayEnvelope e;
  e.kind = envelope_kind_from_string(string_field(j, "kind"));
  e.gamma = number_or(j, "gamma", e.gamma);
  e.gamma0 = number_or(j, "gamma0", e.gamma0);
  e.gamma1 = number_or(j, "gamma1", e.gamma1);
  e.beta = number_or(j, "beta", e.beta);
  e.eps = number_or(j, "eps", e.eps);
  e.c = number_or(j, "c", e.c);
  e.c0 = number_or(j, "c0", e.c0);
  e.c1 = number_or(j, "c1", e.c1);
  e.validate();
  return e;
}

Json to_json(const DecayEnvelope& e) {
  return {{"kind", std::string(to_string(e.kind))},
          {"gamma", e.gamma},
          {"gamma0", e.gamma0},
          {"gamma1", e.gamma1},
          {"beta", e.beta},
          {"eps", e.eps},
          {"c", e.c},
          {"c0", e.c0},
          {"c1", e.c1}};
}

NormFamily family_from_json(const Json& j) {
  if (j.is_string()) {
    if (j == "poly") return NormFamily::poly();
    schema_error("family must be \"poly\" or {\"subexp\": beta}");
  }
  if (j.is_object() && j.contains("subexp")) return NormFamily::subexp(number_field(j, "subexp"));
  schema_error("family must be \"poly\" or {\"subexp\": beta}");
}

Json to_json(const NormFamily& f) {
  if (f.kind == NormFamily::Kind::poly) return "poly";
  return {{"subexp", f.beta}};
}

Json to_json(const DecayFit& fit) {
  return {{"gamma", json_number(fit.gamma)},
          {"c", json_number(fit.c)},
          {"residual", json_number(fit.residual)},
          {"usable", fit.usable}};
}

Json to_json(const ImplicationChain& c) {
  return {{"c_star", c.c_star},
          {"c_dstar", c.c_dstar},
          {"c_tstar", c.c_tstar},
          {"c_star_half", c.c_star_half},
          {"c_dstar_half", c.c_dstar_half},
          {"c_tstar_half", c.c_tstar_half},
          {"star_diverges", c.star_diverges},
          {"dstar_diverges", c.dstar_diverges},
          {"tstar_diverges", c.tstar_diverges}};
}

Json to_json(const FrameBounds& b) { return {{"lower", b.lower}, {"upper", b.upper}}; }

Json to_json(const ExampleReport& r) {
  return {{"trials", r.trials},
          {"contraction_constant", r.contraction_constant},
          {"max_contraction_ratio", r.max_contraction_ratio},
          {"max_growth_ratio", r.max_growth_ratio},
          {"min_lower_ratio", json_number(r.min_lower_ratio)},
          {"contraction_violations", r.contraction_violations},
          {"growth_violations", r.growth_violations},
          {"lower_violations", r.lower_violations},
          {"dropped_terms", r.dropped}};
}

Json to_json(const PermutationStability& r) {
  return {{"permutations", r.permutations},
          {"max_total_deviation", r.max_total_deviation},
          {"max_partial_norm", r.max_partial_norm}};
}

Json to_json(const WeightedOperatorNorms& r) {
  Json j = {{"trials", r.trials},
            {"analysis", r.analysis},
            {"synthesis", r.synthesis},
            {"frame_operator", r.frame_operator},
            {"frame_operator_min", json_number(r.frame_operator_min)}};
  if (r.analysis_exact) {
    j["exact"] = {{"analysis", *r.analysis_exact},
                  {"synthesis", *r.synthesis_exact},
                  {"frame_operator", *r.frame_operator_exact},
                  {"frame_operator_min", *r.frame_operator_min_exact}};
  }
  return j;
}

Json to_json(const DualLocalization& r) {
  return {{"family", r.poly ? "poly" : "exp"}, {"primal", to_json(r.primal)}, {"dual", to_json(r.dual)}};
}

Json to_json(const JaffardReport& r) {
  return {{"beta", r.beta},
          {"gamma", r.gamma},
          {"gamma_prime", r.gamma_prime},
          {"gamma_dprime", r.gamma_dprime},
          {"eps_free", r.eps_free},
          {"c_a", r.c_a},
          {"norm_AAs", r.norm_aas},
          {"r_contraction", r.r_contraction},
          {"C_AAs", r.c_aas},
          {"C1", r.c1},
          {"P", r.p},
          {"K", r.k},
          {"log_ratio", r.log_ratio},
          {"neumann_factor", r.neumann},
          {"gamma1_pred", r.gamma1_pred},
          {"C_inv_pred", r.c_inv_pred}};
}

Json to_json(const InverseDecayCheck& r) {
  return {{"violations", r.violations}, {"max_ratio", r.max_ratio}, {"fit", to_json(r.fit)}};
}

Json to_json(const GradedNormProfile& p) {
  Json norms = Json::array();
  for (double x : p.norms) norms.push_back(json_number(x));
  Json half = Json::array();
  for (double x : p.half_norms) half.push_back(json_number(x));
  return {{"family", to_json(p.family)},
          {"levels", p.levels},
          {"norms", norms},
          {"half_norms", half},
          {"diverging", p.diverging}};
}

Json to_json(const FFrameInterval& r) {
  return {{"level", r.level}, {"lower", json_number(r.lower)}, {"upper", json_number(r.upper)}};
}

Json to_json(const Pairing& p) {
  return {{"value", Json::array({p.value.real(), p.value.imag()})},
          {"tail_bound", json_number(p.tail_bound)},
          {"decay_level", p.decay_level}};
}

Json to_json(const PgReport& r) {
  return {{"trials", r.trials}, {"agreements", r.agreements}};
}

Json to_json(const FixedLevelContinuity& r) {
  return {{"level", r.level}, {"max_trial_ratio", r.max_trial_ratio}, {"exact_norm", json_number(r.exact_norm)}};
}

Json to_json(const ProductCheck& r) {
  return {{"c_emp", r.c_emp}, {"c_pred", r.c_pred}, {"violations", r.violations}};
}

}  // namespace frameforge
