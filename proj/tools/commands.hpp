#pragma once

#include <cstddef>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "ore/ore.hpp"
#include "session.hpp"

namespace cli {

using Json = nlohmann::ordered_json;

/// 0 ok, 1 negative verdict under --strict.
inline int verdict(const SessionConfig& cfg, bool positive) { return cfg.strict && !positive ? 1 : 0; }

template <ore::Ring R>
std::vector<ore::Scalar<R>> parse_points(const ore::Context<R>& ctx, const std::vector<std::string>& texts) {
  if (texts.empty()) throw ore::InvalidInput("at least one point is required");
  std::vector<ore::Scalar<R>> out;
  for (const auto& t : texts) out.push_back(ctx.parse(t));
  return out;
}

template <ore::Ring R>
std::vector<std::string> strings(const std::vector<ore::Scalar<R>>& xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) out.push_back(x.str());
  return out;
}

template <ore::Ring R>
void print_matrix(std::ostream& out, const std::string& name, const ore::DivMatrix<R>& m) {
  out << name << ":\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << "  ";
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? "  " : "") << m(i, j).str();
    out << "\n";
  }
}

inline std::string joined(const std::vector<std::string>& xs, const std::string& sep = ", ") {
  std::string out;
  for (std::size_t k = 0; k < xs.size(); ++k) out += (k ? sep : "") + xs[k];
  return out;
}

template <ore::Ring R>
int cmd_llcm(const ore::Context<R>& ctx, const SessionConfig& cfg, const std::vector<std::string>& args,
             std::ostream& out) {
  auto points = parse_points(ctx, args);
  auto trace = ore::llcm_set(points);
  const auto& p = trace.result();
  std::optional<ore::SymmetricTable<R>> table;
  std::optional<bool> viete;
  if (!trace.has_degenerate_step()) {
    table = ore::symmetric_functions(trace);
    viete = ore::viete_check(trace);
  }
  if (cfg.json) {
    Json j;
    j["context"] = ctx->describe();
    j["points"] = strings(points);
    j["polynomial"] = p.str();
    j["degree"] = p.degree();
    j["independent"] = trace.independent();
    Json steps = Json::array();
    for (const auto& s : trace.steps)
      steps.push_back({{"point", s.point.str()}, {"value", s.value.str()},
                       {"root", s.root ? Json(s.root->str()) : Json(nullptr)}});
    j["steps"] = steps;
    if (table) {
      Json rows = Json::array();
      for (const auto& row : table->lambda) rows.push_back(strings(row));
      j["lambda"] = rows;
    } else {
      j["lambda"] = nullptr;
    }
    j["viete"] = viete ? Json(*viete) : Json(nullptr);
    out << j.dump(2) << "\n";
  } else {
    out << "context: " << ctx->describe() << "\n";
    out << "llcm: " << p.str() << "\n";
    out << "degree: " << p.degree() << (trace.independent() ? " (independent)" : " (dependent)") << "\n";
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
      const auto& s = trace.steps[i];
      if (s.root)
        out << "y_" << i + 1 << " = " << s.root->str() << "\n";
      else
        out << "warning: x_" << i + 1 << " = " << s.point.str() << " is a root of p_" << i
            << "; degenerate step skipped\n";
    }
    if (table) {
      out << "lambda:\n";
      for (std::size_t i = 0; i < table->lambda.size(); ++i)
        out << "  n=" << i << ": " << joined(strings(table->lambda[i])) << "\n";
      out << "viete: " << (*viete ? "ok" : "FAILED") << "\n";
    }
  }
  return verdict(cfg, trace.independent());
}

template <ore::Ring R>
int cmd_factor(const ore::Context<R>& ctx, const SessionConfig& cfg, const std::string& text, std::ostream& out) {
  auto f = ore::SkewPoly<R>::parse(ctx, text);
  if (!f.is_monic()) throw ore::InvalidInput("factor needs a monic polynomial");
  if constexpr (ore::PrimeLinearField<R>) {
    auto report = ore::is_w_polynomial(f);
    std::vector<ore::Factorization<R>> facs;
    if (report.is_wedderburn) facs = ore::enumerate_factorizations(f, report.classes, cfg.jobs);
    if (cfg.json) {
      Json j;
      j["polynomial"] = f.str();
      Json classes = Json::array();
      for (const auto& c : report.classes)
        classes.push_back({{"representative", c.representative.str()}, {"dim", c.dim},
                           {"centralizer_order", c.centralizer_order}});
      j["classes"] = classes;
      j["weight"] = report.weight;
      j["is_wedderburn"] = report.is_wedderburn;
      Json list = Json::array();
      for (const auto& fac : facs) list.push_back(fac.printed());
      j["factorizations"] = list;
      j["flag_count"] = facs.size();
      out << j.dump(2) << "\n";
    } else {
      out << "polynomial: " << f.str() << "\n";
      for (const auto& c : report.classes)
        out << "class of " << c.representative.str() << ": roots " << joined(strings(c.roots)) << ", dim " << c.dim
            << ", |C| = " << c.centralizer_order << "\n";
      out << "weight: " << report.weight << " of degree " << f.degree() << "\n";
      out << (report.is_wedderburn ? "W-polynomial" : "not a W-polynomial") << "\n";
      if (report.is_wedderburn) {
        out << "factorizations: " << facs.size() << "\n";
        for (const auto& fac : facs) out << "  " << fac.str() << "\n";
      }
    }
    return verdict(cfg, report.is_wedderburn);
  } else {
    if (cfg.candidates.empty())
      throw ore::InvalidInput("factoring over " + ctx->describe() + " needs --candidates");
    auto candidates = parse_points(ctx, cfg.candidates);
    auto roots = ore::root_set(f, std::optional(candidates));
    auto classes = ore::class_decomposition(f, roots);
    if (cfg.json) {
      Json j;
      j["polynomial"] = f.str();
      j["roots"] = strings(roots);
      Json cls = Json::array();
      for (const auto& c : classes) cls.push_back({{"representative", c.representative.str()}, {"roots", strings(c.roots)}});
      j["classes"] = cls;
      j["is_wedderburn"] = nullptr;
      out << j.dump(2) << "\n";
    } else {
      out << "polynomial: " << f.str() << "\n";
      out << "roots among candidates: " << joined(strings(roots)) << "\n";
      for (const auto& c : classes)
        out << "class of " << c.representative.str() << ": " << joined(strings(c.roots)) << "\n";
      out << "W-verdict needs a finite field\n";
    }
    return 0;
  }
}

template <ore::Ring R>
int cmd_pindep(const ore::Context<R>& ctx, const SessionConfig& cfg, const std::vector<std::string>& args,
               std::ostream& out) {
  auto points = parse_points(ctx, args);
  auto result = ore::pindep_test(points);
  if (cfg.json) {
    Json j;
    j["points"] = strings(points);
    j["independent"] = result.independent;
    j["u"] = result.u.to_strings();
    j["factor_roots"] = result.factor_roots ? Json(strings(*result.factor_roots)) : Json(nullptr);
    j["llcm"] = result.llcm ? Json(result.llcm->str()) : Json(nullptr);
    out << j.dump(2) << "\n";
  } else {
    out << (result.independent ? "independent" : "dependent") << "\n";
    print_matrix(out, "U", result.u);
    if (result.factor_roots) {
      ore::Factorization<R> fac{*result.factor_roots};
      out << "llcm: " << result.llcm->str() << " = " << fac.str() << "\n";
    }
  }
  return verdict(cfg, result.independent);
}

template <ore::Ring R>
int cmd_vdm(const ore::Context<R>& ctx, const SessionConfig& cfg, const std::vector<std::string>& args,
            std::ostream& out) {
  auto points = parse_points(ctx, args);
  auto v = ore::vandermonde(points);
  auto lu = ore::lu_vandermonde(points);
  bool independent = ore::pindep_test(points).independent;
  std::optional<ore::VandermondeInverse<R>> inv;
  std::vector<ore::Scalar<R>> dependence;
  if (independent)
    inv = ore::inverse_vandermonde_via_F(points);
  else
    dependence = ore::gauss_invert(v).dependence;
  if (cfg.json) {
    Json j;
    j["points"] = strings(points);
    j["independent"] = independent;
    j["V"] = v.to_strings();
    j["C"] = inv ? Json(inv->c.to_strings()) : Json(nullptr);
    j["diag"] = inv ? Json(strings(inv->pivots)) : Json(nullptr);
    j["inverse"] = inv ? Json(inv->inverse.to_strings()) : Json(nullptr);
    j["lu"] = {{"lower", lu.lower.to_strings()}, {"upper", lu.upper.to_strings()}, {"pivots", strings(lu.pivots)}};
    j["dependence"] = inv ? Json(nullptr) : Json(strings(dependence));
    out << j.dump(2) << "\n";
  } else {
    print_matrix(out, "V", v);
    if (inv) {
      print_matrix(out, "C", inv->c);
      out << "diag(g_i(x_i)): " << joined(strings(inv->pivots)) << "\n";
      print_matrix(out, "V^-1", inv->inverse);
    } else {
      out << "V is singular; row dependence: " << joined(strings(dependence)) << "\n";
    }
    print_matrix(out, "Lambda", lu.lower);
    print_matrix(out, "U", lu.upper);
    out << "pivots: " << joined(strings(lu.pivots)) << "\n";
  }
  return verdict(cfg, independent);
}

template <ore::Ring R>
int cmd_duo(const ore::Context<R>& ctx, const SessionConfig& cfg, const std::string& ring_name,
            const std::string& a_text, const std::string& b_text, std::ostream& out) {
  auto a = ctx.parse(a_text);
  auto b = ctx.parse(b_text);
  auto result = ore::llcm2_exists(a, b);
  std::optional<bool> universal;
  std::optional<std::pair<ore::Scalar<R>, ore::Scalar<R>>> counterexample;
  std::optional<bool> left_duo;
  if constexpr (ore::FiniteRing<R>) {
    if (ctx->order() <= 64) {
      counterexample = ore::condition3_counterexample(ctx);
      universal = !counterexample;
      left_duo = ore::is_left_duo(ctx);
    }
  }
  if (cfg.json) {
    Json j;
    j["ring"] = ring_name;
    j["description"] = ctx->describe();
    j["a"] = a.str();
    j["b"] = b.str();
    j["exists"] = result.exists;
    j["c"] = result.c ? Json(result.c->str()) : Json(nullptr);
    j["d"] = result.d ? Json(result.d->str()) : Json(nullptr);
    j["method"] = result.solution.method;
    j["certificate"] = result.solution.certificate;
    Json cond = Json::object();
    cond["checked"] = universal.has_value();
    cond["universal"] = universal ? Json(*universal) : Json(nullptr);
    cond["counterexample"] =
        counterexample ? Json{{"r", counterexample->first.str()}, {"b", counterexample->second.str()}} : Json(nullptr);
    cond["left_duo"] = left_duo ? Json(*left_duo) : Json(nullptr);
    j["condition3"] = cond;
    out << j.dump(2) << "\n";
  } else {
    out << "ring: " << ctx->describe() << "\n";
    if (result.exists) {
      out << "exists: (t - " << result.c->str() << ")(t - " << a.str() << ") = (t - " << result.d->str() << ")(t - "
          << b.str() << ")\n";
    } else {
      out << "exists: no monic degree-2 common left multiple\n";
      if (!result.solution.certificate.empty()) out << "certificate: " << result.solution.certificate << "\n";
    }
    out << "method: " << result.solution.method << "\n";
    if (universal) {
      out << "condition 3 universal: " << (*universal ? "yes" : "no");
      if (counterexample)
        out << " (r = " << counterexample->first.str() << ", b = " << counterexample->second.str() << ")";
      out << "\nleft duo: " << (*left_duo ? "yes" : "no") << "\n";
    }
  }
  return verdict(cfg, result.exists);
}

namespace detail {

template <ore::SampleableRing R>
ore::SkewPoly<R> random_poly(const ore::Context<R>& ctx, std::mt19937_64& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::vector<ore::Scalar<R>> coeffs;
  for (int k = 0, d = deg(rng); k <= d; ++k) coeffs.push_back(ctx.random(rng));
  return ore::SkewPoly<R>(ctx, std::move(coeffs));
}

}  // namespace detail

/// Randomized laws of the twist and of evaluation; any failure exits 1.
template <ore::Ring R>
int cmd_check(const ore::Context<R>& ctx, const SessionConfig& cfg, std::size_t samples, std::ostream& out) {
  if constexpr (!ore::SampleableRing<R>) {
    throw ore::Unsupported("random checks need a sampleable ring");
  } else {
    std::mt19937_64 rng(cfg.seed);
    struct Law {
      std::string name;
      std::size_t failures = 0;
    };
    std::vector<Law> laws{{"S-derivation"}, {"S multiplicative"}, {"conjugation"}, {"operator"},
                          {"product formula"}, {"round trip"}};
    for (std::size_t n = 0; n < samples; ++n) {
      auto a = ctx.random(rng);
      auto b = ctx.random(rng);
      auto c = ctx.random(rng);
      if (!(apply_D(a * b) == apply_S(a) * apply_D(b) + apply_D(a) * b)) ++laws[0].failures;
      if (!(apply_S(a * b) == apply_S(a) * apply_S(b))) ++laws[1].failures;
      if (!b.is_zero() && !c.is_zero() &&
          !(ore::sd_conjugate(ore::sd_conjugate(a, b), c) == ore::sd_conjugate(a, c * b)))
        ++laws[2].failures;
      auto f = detail::random_poly(ctx, rng, 3);
      auto g = detail::random_poly(ctx, rng, 3);
      if (!b.is_zero() && !(ore::operator_apply(f, a, b) == ore::eval(f, ore::sd_conjugate(a, b)) * b))
        ++laws[3].failures;
      if (!(ore::eval(f * g, a) == ore::product_formula(f, g, a))) ++laws[4].failures;
      if (!(ctx.parse(a.str()) == a) || !(ore::SkewPoly<R>::parse(ctx, f.str()) == f)) ++laws[5].failures;
    }
    bool ok = true;
    if (cfg.json) {
      Json j;
      j["context"] = ctx->describe();
      j["seed"] = cfg.seed;
      j["samples"] = samples;
      Json results = Json::object();
      for (const auto& law : laws) results[law.name] = law.failures;
      j["failures"] = results;
      out << j.dump(2) << "\n";
    } else {
      out << "context: " << ctx->describe() << ", seed " << cfg.seed << ", " << samples << " samples\n";
      for (const auto& law : laws) out << law.name << ": " << (law.failures ? "FAILED " : "ok ") << law.failures << "\n";
    }
    for (const auto& law : laws) ok = ok && law.failures == 0;
    return ok ? 0 : 1;
  }
}

}  // namespace cli
