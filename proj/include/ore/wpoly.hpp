#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <future>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "ore/conjugacy.hpp"
#include "ore/errors.hpp"
#include "ore/fp_linear.hpp"
#include "ore/ring.hpp"
#include "ore/scalar.hpp"
#include "ore/skew_poly.hpp"
#include "ore/symmetric.hpp"

namespace ore {

/// Right roots of f: every element of a finite context, or the given candidates.
template <Ring R>
std::vector<Scalar<R>> root_set(const SkewPoly<R>& f, const std::optional<std::vector<Scalar<R>>>& candidates = {}) {
  std::vector<Scalar<R>> domain;
  if (candidates) {
    domain = *candidates;
  } else if constexpr (FiniteRing<R>) {
    domain = f.context().elements();
  } else {
    throw InvalidInput("root search in an infinite context needs candidate roots");
  }
  std::vector<Scalar<R>> roots;
  for (const auto& a : domain) {
    if (!(a.context() == f.context())) throw ContextMismatch();
    if (!eval(f, a).is_zero()) continue;
    bool seen = false;
    for (const auto& r : roots)
      if (r == a) seen = true;
    if (!seen) roots.push_back(a);
  }
  return roots;
}

/// One conjugacy class of roots of f.
///
/// The centralizer and exponent data are filled in only over finite fields,
/// where E(f, a) = Ker f(T_a) and C = C^{S,D}(a) are F_p-subspaces of K.
template <Ring R>
struct ClassData {
  Scalar<R> representative;
  std::vector<Scalar<R>> roots;
  std::vector<Scalar<R>> centralizer_basis;  // over the prime field
  std::vector<Scalar<R>> exponent_basis;     // right C-basis of E(f, a)
  std::size_t dim = 0;                       // dim_C E(f, a)
  std::uint64_t centralizer_order = 0;       // |C| including 0
  std::optional<fp::Subspace> centralizer;
  std::optional<fp::Subspace> exponents;
};

namespace detail {

/// The F_p-span of v C for v in `vectors`.
template <PrimeLinearField R>
fp::Subspace c_span(const Context<R>& ctx, const fp::Subspace& centralizer, const std::vector<Scalar<R>>& vectors) {
  fp::Subspace span(ctx->prime(), static_cast<std::size_t>(ctx->dimension()));
  auto c_basis = to_scalars(ctx, centralizer);
  for (const auto& v : vectors)
    for (const auto& c : c_basis) span.insert(coordinates(v * c));
  return span;
}

template <PrimeLinearField R>
std::uint64_t subspace_order(const fp::Subspace& s) {
  std::uint64_t order = 1;
  for (std::size_t k = 0; k < s.dim(); ++k) order *= static_cast<std::uint64_t>(s.prime());
  return order;
}

}  // namespace detail

/// Ker f(T_a) with its right C^{S,D}(a)-basis found by greedy sifting.
template <Ring R>
ClassData<R> exponent_space(const SkewPoly<R>& f, const Scalar<R>& a) {
  if constexpr (!PrimeLinearField<R>) {
    throw Unsupported("exponent spaces are computed only over finite fields");
  } else {
    const auto& ctx = a.context();
    ClassData<R> data{a, {}, {}, {}, 0, 0, std::nullopt, std::nullopt};
    fp::Subspace c = centralizer_space(a);
    fp::Subspace e = prime_kernel(ctx, [&](const Scalar<R>& x) { return operator_apply(f, a, x); });
    fp::Subspace sifted(ctx->prime(), static_cast<std::size_t>(ctx->dimension()));
    for (const auto& v : to_scalars(ctx, e)) {
      if (sifted.contains(coordinates(v))) continue;
      data.exponent_basis.push_back(v);
      sifted = detail::c_span(ctx, c, data.exponent_basis);
    }
    data.dim = data.exponent_basis.size();
    data.centralizer_basis = to_scalars(ctx, c);
    data.centralizer_order = detail::subspace_order<R>(c);
    data.centralizer = std::move(c);
    data.exponents = std::move(e);
    return data;
  }
}

/// Partitions roots of f by (S,D)-conjugacy, first-seen roots as representatives.
template <Ring R>
std::vector<ClassData<R>> class_decomposition(const SkewPoly<R>& f, const std::vector<Scalar<R>>& roots) {
  std::vector<ClassData<R>> classes;
  for (const auto& r : roots) {
    if (!eval(f, r).is_zero()) throw InvalidInput(r.str() + " is not a root");
    bool placed = false;
    for (auto& cls : classes) {
      if (are_conjugate(cls.representative, r)) {
        cls.roots.push_back(r);
        placed = true;
        break;
      }
    }
    if (placed) continue;
    if constexpr (PrimeLinearField<R>) {
      classes.push_back(exponent_space(f, r));
    } else {
      classes.push_back(ClassData<R>{r, {}, {}, {}, 0, 0, std::nullopt, std::nullopt});
    }
    classes.back().roots.push_back(r);
  }
  return classes;
}

template <Ring R>
struct WReport {
  bool is_wedderburn = false;
  std::size_t weight = 0;
  std::vector<ClassData<R>> classes;
};

/// weight = sum_i dim_{C_i} E(f, a_i) <= deg f, with equality iff f is a W-polynomial.
template <Ring R>
WReport<R> is_w_polynomial(const SkewPoly<R>& f) {
  if (!f.is_monic()) throw InvalidInput("W-polynomial test needs a monic polynomial");
  if constexpr (!PrimeLinearField<R>) {
    throw Unsupported("the weight criterion is computed only over finite fields");
  } else {
    WReport<R> report;
    report.classes = class_decomposition(f, root_set(f));
    for (const auto& cls : report.classes) report.weight += cls.dim;
    report.is_wedderburn = static_cast<int>(report.weight) == f.degree();
    return report;
  }
}

/// A linear factorization (t - b_n) ... (t - b_1), stored rightmost first.
template <Ring R>
struct Factorization {
  std::vector<Scalar<R>> roots;  // b_1, ..., b_n

  SkewPoly<R> product(const Context<R>& ctx) const { return SkewPoly<R>::from_linear_factors(ctx, roots); }

  /// b_n, ..., b_1 as printed in reports.
  std::vector<std::string> printed() const {
    std::vector<std::string> out;
    for (auto it = roots.rbegin(); it != roots.rend(); ++it) out.push_back(it->str());
    return out;
  }

  std::string str() const {
    std::string out;
    for (auto it = roots.rbegin(); it != roots.rend(); ++it) {
      std::string b = it->str();
      bool atomic = b.find_first_of("+-*/ ") == std::string::npos;
      out += "(t - " + (atomic ? b : "(" + b + ")") + ")";
    }
    return out;
  }

  friend bool operator==(const Factorization& a, const Factorization& b) {
    if (a.roots.size() != b.roots.size()) return false;
    for (std::size_t k = 0; k < a.roots.size(); ++k)
      if (!(a.roots[k] == b.roots[k])) return false;
    return true;
  }
};

/// M_1 ⊂ ... ⊂ M_n in E(f) = prod_i E(f, a_i); steps[k][i] is the class-i
/// component of M_{k+1} as an F_p-subspace.
struct FlagChain {
  std::vector<std::vector<fp::Subspace>> steps;
  std::vector<std::size_t> weights;  // wt(M_k)

  friend bool operator==(const FlagChain& a, const FlagChain& b) { return a.steps == b.steps; }
};

namespace detail {

template <PrimeLinearField R>
std::size_t c_dimension(const ClassData<R>& cls, const fp::Subspace& u) {
  return u.dim() / cls.centralizer->dim();
}

}  // namespace detail

/// The flag Ker p_1(T_{a_i}) ⊂ Ker p_2(T_{a_i}) ⊂ ..., per class, of the
/// partial products p_k = (t - b_k) ... (t - b_1).
template <PrimeLinearField R>
FlagChain flag_from_factorization(const SkewPoly<R>& f, const std::vector<ClassData<R>>& classes,
                                  const Factorization<R>& fac) {
  const auto& ctx = f.context();
  if (!(fac.product(ctx) == f)) throw InvalidInput("factorization does not multiply to f");
  FlagChain flag;
  SkewPoly<R> p = SkewPoly<R>::constant(ctx.one());
  for (const auto& b : fac.roots) {
    p = SkewPoly<R>::linear(b) * p;
    std::vector<fp::Subspace> step;
    std::size_t weight = 0;
    for (const auto& cls : classes) {
      const auto& a = cls.representative;
      step.push_back(prime_kernel(ctx, [&](const Scalar<R>& x) { return operator_apply(p, a, x); }));
      weight += detail::c_dimension(cls, step.back());
    }
    flag.steps.push_back(std::move(step));
    flag.weights.push_back(weight);
  }
  return flag;
}

/// Successive LLCM steps along the flag: when class i grows at step k by a
/// vector v, the new factor is t - a_i^{p_{k-1}(T_{a_i})(v)}.
template <PrimeLinearField R>
Factorization<R> factorization_from_flag(const SkewPoly<R>& f, const std::vector<ClassData<R>>& classes,
                                         const FlagChain& flag) {
  const auto& ctx = f.context();
  const std::size_t r = classes.size();
  std::vector<fp::Subspace> prev;
  for (std::size_t i = 0; i < r; ++i) prev.emplace_back(ctx->prime(), static_cast<std::size_t>(ctx->dimension()));
  Factorization<R> fac;
  SkewPoly<R> p = SkewPoly<R>::constant(ctx.one());
  for (const auto& step : flag.steps) {
    if (step.size() != r) throw InvalidInput("flag step has the wrong number of classes");
    std::optional<std::size_t> grown;
    for (std::size_t i = 0; i < r; ++i) {
      if (!step[i].contains(prev[i]) || !classes[i].exponents->contains(step[i]))
        throw InvalidInput("flag is not an increasing chain inside E(f)");
      if (step[i] == prev[i]) continue;
      if (grown || detail::c_dimension(classes[i], step[i]) != detail::c_dimension(classes[i], prev[i]) + 1)
        throw InvalidInput("flag step does not increase the weight by exactly one");
      grown = i;
    }
    if (!grown) throw InvalidInput("flag is not strictly increasing");
    const auto& cls = classes[*grown];
    std::optional<Scalar<R>> v;
    for (const auto& row : step[*grown].rows())
      if (!prev[*grown].contains(row)) {
        v = ctx(ctx->from_coordinates(row));
        break;
      }
    Scalar<R> z = operator_apply(p, cls.representative, *v);
    Scalar<R> b = sd_conjugate(cls.representative, z);
    fac.roots.push_back(b);
    p = SkewPoly<R>::linear(b) * p;
    prev = step;
  }
  for (std::size_t i = 0; i < r; ++i)
    if (!(prev[i] == *classes[i].exponents)) throw InvalidInput("flag does not end at E(f)");
  if (!(p == f)) throw InvalidInput("flag does not produce a factorization of f");
  return fac;
}

/// One class: f = (t - a^{p_{n-1}(T_a)(u_n)}) ... (t - a^{u_1}) for right
/// C-independent u_1, ..., u_n.
template <Ring R>
Factorization<R> factorization_from_basis(const Scalar<R>& a, const std::vector<Scalar<R>>& us) {
  Factorization<R> fac;
  SkewPoly<R> p = SkewPoly<R>::constant(a.context().one());
  for (std::size_t k = 0; k < us.size(); ++k) {
    Scalar<R> z = operator_apply(p, a, us[k]);
    if (z.is_zero()) throw InvalidInput("u_" + std::to_string(k + 1) + " depends on the earlier elements");
    Scalar<R> b = sd_conjugate(a, z);
    fac.roots.push_back(b);
    p = SkewPoly<R>::linear(b) * p;
  }
  return fac;
}

namespace detail {

template <PrimeLinearField R>
struct FlagSearch {
  const SkewPoly<R>& f;
  const std::vector<ClassData<R>>& classes;
  std::vector<std::vector<Scalar<R>>> exponent_elements;  // all of E(f, a_i)

  /// Distinct subspaces U + vC for v in E_i \ U, each with one generator v.
  std::vector<std::pair<fp::Subspace, Scalar<R>>> extensions(std::size_t i, const fp::Subspace& u) const {
    const auto& ctx = f.context();
    std::vector<std::pair<fp::Subspace, Scalar<R>>> out;
    std::set<std::vector<fp::Vec>> seen;
    auto c_basis = to_scalars(ctx, *classes[i].centralizer);
    for (const auto& v : exponent_elements[i]) {
      if (u.contains(coordinates(v))) continue;
      fp::Subspace next = u;
      for (const auto& c : c_basis) next.insert(coordinates(v * c));
      if (seen.insert(next.rows()).second) out.emplace_back(std::move(next), v);
    }
    return out;
  }

  void run(std::vector<fp::Subspace>& current, const SkewPoly<R>& p, Factorization<R>& fac,
           std::vector<Factorization<R>>& out) const {
    if (p.degree() == f.degree()) {
      out.push_back(fac);
      return;
    }
    for (std::size_t i = 0; i < classes.size(); ++i) {
      if (current[i] == *classes[i].exponents) continue;
      for (auto& [next, v] : extensions(i, current[i])) {
        Scalar<R> b = sd_conjugate(classes[i].representative, operator_apply(p, classes[i].representative, v));
        fp::Subspace saved = current[i];
        current[i] = next;
        fac.roots.push_back(b);
        run(current, SkewPoly<R>::linear(b) * p, fac, out);
        fac.roots.pop_back();
        current[i] = saved;
      }
    }
  }
};

}  // namespace detail

/// Every linear factorization of a W-polynomial over a finite field, one per
/// complete flag of E(f), sorted by printed factors (b_n first).
///
/// With jobs > 1 the top-level branches run concurrently; the merged list
/// is sorted, so the result does not depend on scheduling.
template <PrimeLinearField R>
std::vector<Factorization<R>> enumerate_factorizations(const SkewPoly<R>& f, const std::vector<ClassData<R>>& classes,
                                                       unsigned jobs = 1) {
  std::size_t weight = 0;
  for (const auto& cls : classes) weight += cls.dim;
  if (!f.is_monic() || static_cast<int>(weight) != f.degree()) throw InvalidInput("not a W-polynomial");
  const auto& ctx = f.context();
  detail::FlagSearch<R> search{f, classes, {}};
  for (const auto& cls : classes) {
    std::vector<Scalar<R>> elems;
    for (const auto& v : cls.exponents->elements()) elems.push_back(ctx(ctx->from_coordinates(v)));
    search.exponent_elements.push_back(std::move(elems));
  }
  std::vector<fp::Subspace> start;
  for (std::size_t i = 0; i < classes.size(); ++i)
    start.emplace_back(ctx->prime(), static_cast<std::size_t>(ctx->dimension()));
  const SkewPoly<R> one = SkewPoly<R>::constant(ctx.one());

  std::vector<Factorization<R>> result;
  if (f.degree() == 0) {
    result.push_back({});
  } else if (jobs <= 1) {
    std::vector<fp::Subspace> current = start;
    Factorization<R> fac;
    search.run(current, one, fac, result);
  } else {
    // one task per first step (class, line)
    std::vector<std::future<std::vector<Factorization<R>>>> tasks;
    std::vector<std::tuple<std::size_t, fp::Subspace, Scalar<R>>> firsts;
    for (std::size_t i = 0; i < classes.size(); ++i)
      for (auto& [next, v] : search.extensions(i, start[i])) firsts.emplace_back(i, next, v);
    std::size_t next_task = 0;
    auto worker = [&](std::size_t idx) {
      auto& [i, next, v] = firsts[idx];
      std::vector<fp::Subspace> current = start;
      current[i] = next;
      Scalar<R> b = sd_conjugate(classes[i].representative, v);
      Factorization<R> fac{{b}};
      std::vector<Factorization<R>> out;
      search.run(current, SkewPoly<R>::linear(b), fac, out);
      return out;
    };
    while (next_task < firsts.size()) {
      std::vector<std::future<std::vector<Factorization<R>>>> batch;
      for (unsigned k = 0; k < jobs && next_task < firsts.size(); ++k)
        batch.push_back(std::async(std::launch::async, worker, next_task++));
      for (auto& fut : batch)
        for (auto& fac : fut.get()) result.push_back(std::move(fac));
    }
  }
  std::sort(result.begin(), result.end(),
            [](const Factorization<R>& a, const Factorization<R>& b) { return a.printed() < b.printed(); });
  return result;
}

template <PrimeLinearField R>
std::vector<Factorization<R>> enumerate_factorizations(const SkewPoly<R>& f, unsigned jobs = 1) {
  auto report = is_w_polynomial(f);
  if (!report.is_wedderburn) throw InvalidInput("not a W-polynomial");
  return enumerate_factorizations(f, report.classes, jobs);
}

/// x_{B,i} = x_i^{p_B(x_i)} with p_B = [t - x_b | b in B]_l; throws on p_B(x_i) = 0.
template <Ring R>
Scalar<R> exponent_point(const std::vector<Scalar<R>>& points, const std::vector<std::size_t>& subset, std::size_t i) {
  const auto& ctx = points.front().context();
  SkewPoly<R> p = SkewPoly<R>::constant(ctx.one());
  if (!subset.empty()) {
    std::vector<Scalar<R>> chosen;
    for (auto b : subset) chosen.push_back(points.at(b));
    auto trace = llcm_set(chosen);
    if (trace.has_degenerate_step()) throw DegenerateTrace("points indexed by the subset are P-dependent");
    p = trace.result();
  }
  Scalar<R> value = eval(p, points.at(i));
  if (value.is_zero()) throw DegenerateTrace("x_" + std::to_string(i) + " is a root of the partial LLCM");
  return sd_conjugate(points[i], value);
}

/// Both orders of adding t - x_i and t - x_j to p_A give the same degree-two
/// left factor, so with u = x_{A+j,i}, v = x_{A,j}, u' = x_{A+i,j}, v' = x_{A,i}:
///   u + S(v) = u' + S(v')   and   u v - D(v) = u' v' - D(v').
/// With S = id, D = 0 these are the classical quadratic relations.
template <Ring R>
bool quadratic_relations_check(const std::vector<Scalar<R>>& points, const std::vector<std::size_t>& subset,
                               std::size_t i, std::size_t j) {
  for (auto b : subset)
    if (b == i || b == j) throw InvalidInput("i and j must lie outside the subset");
  if (i == j) throw InvalidInput("i and j must differ");
  std::vector<std::size_t> with_i = subset;
  with_i.push_back(i);
  std::vector<std::size_t> with_j = subset;
  with_j.push_back(j);
  Scalar<R> u = exponent_point(points, with_j, i);
  Scalar<R> v = exponent_point(points, subset, j);
  Scalar<R> u2 = exponent_point(points, with_i, j);
  Scalar<R> v2 = exponent_point(points, subset, i);
  bool additive = u + apply_S(v) == u2 + apply_S(v2);
  bool multiplicative = u * v - apply_D(v) == u2 * v2 - apply_D(v2);
  return additive && multiplicative;
}

}  // namespace ore
