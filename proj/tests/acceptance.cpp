// Acceptance checks, one PASS/FAIL line per criterion. All comparisons are
// exact equality of canonical forms; each check also has a wall-clock limit.

#include <chrono>
#include <cstdio>
#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "toric/error.hpp"
#include "toric/lifting.hpp"
#include "toric/pade.hpp"
#include "toric/projection.hpp"
#include "toric/resolution.hpp"
#include "toric/support_analysis.hpp"
#include "toric/text.hpp"

using namespace toric;

namespace {

SparsePoly P(const std::string& s, std::size_t n) { return parse_poly(s, n); }
RatFun R(const std::string& s, std::size_t n) { return parse_ratfun(s, n); }

UniPoly<Rat> UQ(const std::vector<std::string>& c) {
  std::vector<Rat> v;
  for (const auto& s : c) v.push_back(parse_rat(s));
  return UniPoly<Rat>(std::move(v));
}

UniPoly<RatFun> UR(const std::vector<std::string>& c, std::size_t n) {
  std::vector<RatFun> v;
  for (const auto& s : c) v.push_back(R(s, n));
  return UniPoly<RatFun>(std::move(v));
}

std::vector<SparsePoly> curve() {
  return {P("2+3*X1*X2-X2*X3", 3), P("-1+2*X1^2*X2*X3+2*X2^2+X1*X2*X3", 3)};
}

std::vector<SparsePoly> five_var(const std::vector<long>& c = {3, 2, -1, 5, 2, -3, 7}) {
  auto t = [](long v) { return (v < 0 ? "" : "+") + std::to_string(v); };
  return {P(t(c[0]) + t(c[1]) + "*X1*X2*X3" + t(c[2]) + "*X1^2*X4^4*X5^2" + t(c[3]) + "*X4^8*X5^4", 5),
          P(t(c[4]) + "*X1*X3*X4*X5^2" + t(c[5]) + "*X2*X3^2*X4^5*X5^4" + t(c[6]) + "*X1*X2^3*X4^5*X5^4", 5)};
}

ProjectionProblem five_var_problem(long b) {
  ProjectionProblem p;
  p.system = five_var();
  p.ell = 3;
  p.options.b = std::vector<Integer>{b};
  p.options.lambda = std::vector<Integer>{0, 1};
  p.options.mu = std::vector<Integer>{1};
  return p;
}

ZeroDimSolution curve_base() {
  std::vector<SparsePoly> g;
  for (const auto& f : curve()) g.push_back(f.eval_partial({{0, Rat(1)}}).select_vars({1, 2}));
  return solve_toric_0d_rat(g, {0, 1});
}

struct Outcome {
  bool ok;
  std::string detail;
};

int failures = 0;

void report(int id, const std::string& what, double limit_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs > limit_s) {
    o.ok = false;
    o.detail += (o.detail.empty() ? "" : "; ") + std::string("over the time limit");
  }
  if (!o.ok) ++failures;
  std::printf("[%s] criterion %d: %s (%.2f s, limit %.0f s)%s%s\n", o.ok ? "PASS" : "FAIL", id, what.c_str(), secs,
              limit_s, o.detail.empty() ? "" : " -- ", o.detail.c_str());
  std::fflush(stdout);
}

// Adds 1 to coefficient k of p, growing p if needed.
UniPoly<RatFun> bump(const UniPoly<RatFun>& p, std::size_t k, std::size_t n) {
  std::vector<RatFun> c = p.coeffs();
  if (c.size() <= k) c.resize(k + 1, RatFun(n, Rat(0)));
  c[k] = c[k] + RatFun(n, Rat(1));
  return UniPoly<RatFun>(std::move(c));
}

// Every single-coefficient mutation of q or of a parametrization must be
// rejected by the checker. Returns the first one that slips through.
std::string undetected_mutation(const GeometricResolution& g,
                                const std::function<bool(const GeometricResolution&)>& passes) {
  const std::size_t n = g.ambient;
  for (std::size_t k = 0; k <= g.degree(); ++k) {
    GeometricResolution m = g;
    m.q = bump(g.q, k, n);
    if (passes(m)) return "q coefficient " + std::to_string(k);
  }
  for (std::size_t j = 0; j < g.params.size(); ++j) {
    for (std::size_t k = 0; k < g.degree(); ++k) {
      GeometricResolution m = g;
      m.params[j] = bump(g.params[j], k, n);
      if (passes(m)) return "parametrization " + std::to_string(j) + " coefficient " + std::to_string(k);
    }
  }
  return "";
}

std::vector<SparsePoly> specialize(const std::vector<SparsePoly>& sys, const ProjectionResult& r) {
  std::map<std::size_t, Rat> bind;
  for (std::size_t i = 0; i < r.specialized_vars.size(); ++i) bind[r.specialized_vars[i]] = Rat(r.provenance.b[i]);
  std::vector<SparsePoly> out;
  for (const auto& f : sys) out.push_back(f.eval_partial(bind));
  return out;
}

}  // namespace

int main() {
  report(1, "zero-dimensional step of the curve example", 1, [] {
    const std::vector<SparsePoly> sys{P("2+3*X2-X2*X3", 3).select_vars({1, 2}),
                                      P("-1+3*X2*X3+2*X2^2", 3).select_vars({1, 2})};
    const ZeroDimSolution z = solve_toric_0d_rat(sys, {0, 1});
    const bool ok = z.q == UQ({"-1/5", "-12/5", "1"}) && z.params[0] == UQ({"-3/4", "-5/4"}) &&
                    z.params[1] == UQ({"0", "1"});
    return Outcome{ok, ok ? "" : "q = " + to_string(z.q)};
  });

  report(2, "Newton-Hensel lifting of the curve example to precision 12", 10, [] {
    const LiftedResolution l = newton_hensel_lift(curve(), {0}, {1, 2}, {0, 1}, curve_base(), {Rat(1)}, 12);
    const std::vector<std::string> q1{"-12/5",       "-18/5",        "18/25",         "-24/25",
                                      "168/125",     "-48/25",       "1728/625",      "-2496/625",
                                      "18048/3125",  "-26112/3125",  "188928/15625",  "-273408/15625",
                                      "1978368/78125"};
    for (std::size_t d = 0; d <= 12; ++d) {
      if (l.q.coeff(1).component(d)[0] != parse_rat(q1[d])) return Outcome{false, "q1 differs in degree " + std::to_string(d)};
    }
    const std::vector<std::string> w21{"-5/4", "-5/2", "-1"}, w20{"-3/4", "-3/4"};
    for (std::size_t d = 0; d <= 12; ++d) {
      const Rat a = d < w21.size() ? parse_rat(w21[d]) : Rat(0);
      const Rat b = d < w20.size() ? parse_rat(w20[d]) : Rat(0);
      if (l.params[0].coeff(1).component(d)[0] != a || l.params[0].coeff(0).component(d)[0] != b) {
        return Outcome{false, "X2 parametrization differs in degree " + std::to_string(d)};
      }
    }
    return Outcome{true, ""};
  });

  report(3, "Pade reconstruction of the lifted curve resolution", 5, [] {
    const LiftedResolution l = newton_hensel_lift(curve(), {0}, {1, 2}, {0, 1}, curve_base(), {Rat(1)}, 12);
    auto rebuild = [](const UniPoly<TruncSeries>& p) {
      std::vector<RatFun> c;
      for (const auto& s : p.coeffs()) c.push_back(pade_univariate(s, 6));
      return UniPoly<RatFun>(std::move(c));
    };
    const bool ok = rebuild(l.q) == UR({"(-9*X1^2+8)/(4*X1^2+2*X1-1)", "(-12*X1^3-6*X1^2+6*X1)/(4*X1^2+2*X1-1)", "1"}, 3) &&
                    rebuild(l.params[0]) == UR({"-3/4*X1", "-X1^2-1/2*X1+1/4"}, 3) &&
                    rebuild(l.params[1]) == UR({"0", "1"}, 3);
    return Outcome{ok, ok ? "" : "Q = " + to_string(rebuild(l.q))};
  });

  ProjectionResult pinned;
  report(4, "five-variable projection with b = 1, lambda = X5, mu = X3", 120, [&] {
    pinned = q_projection(five_var_problem(1));
    const std::size_t n = 5;
    const auto q5 = UR({"4/25*X1^2", "0", "(-4*X1^4+27-28*X1^3*X2^4)/(75)", "0", "2/75*X1^2", "0", "(X1^4+30)/(25)",
                        "0", "-2/5*X1^2", "0", "1"},
                       n);
    const auto w3 = UR({"(-3)/(2*X1*X2)", "0", "(X1)/(2*X2)", "0", "(-5)/(2*X1*X2)"}, n);
    const auto q3 = UR({"(49*X1*X2^3)/(6)", "(49*X1^2*X2^4+7*X1^3)/(9)", "(-63*X2^4+10*X1)/(9*X2^3)",
                        "(-14*X1*X2^4-X1^2)/(3*X2^2)", "(3)/(2*X1*X2)", "1"},
                       n);
    if (pinned.parametric.q != q5) return Outcome{false, "intermediate q differs"};
    if (pinned.parametric.param_of(2) != w3 || pinned.parametric.param_of(4) != UR({"0", "1"}, n)) {
      return Outcome{false, "intermediate parametrization differs"};
    }
    if (pinned.resolution.q != q3) return Outcome{false, "final q = " + to_string(pinned.resolution.q)};
    if (pinned.resolution.param_of(2) != UR({"0", "1"}, n)) return Outcome{false, "final v3 differs"};
    return Outcome{true, "degree " + std::to_string(pinned.resolution.degree()) + " <= mixed volume bound " +
                             pinned.provenance.mv_bound.get_str()};
  });

  report(5, "mixed volume 6 for the curve supports", 5, [] {
    const Integer mv = mixed_volume(supports_of(curve()).with_simplices(1));
    return Outcome{mv == 6, "MV = " + mv.get_str()};
  });
  report(5, "transcendence basis {1, 2, 4} for the five-variable supports", 5, [] {
    const auto tb = trans_basis(supports_of(five_var())).indices;
    return Outcome{tb == std::vector<std::size_t>{0, 1, 3}, ""};
  });

  std::vector<std::pair<std::vector<SparsePoly>, GeometricResolution>> random_outputs;
  report(6, "Bernstein count on random square systems", 600, [&] {
    std::mt19937_64 g(20261016);
    auto uni = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(g); };
    int trials = 0, matches = 0, flagged = 0, silent = 0;
    while (trials < 60) {
      const std::size_t n = static_cast<std::size_t>(uni(1, 3));
      std::vector<SparsePoly> sys;
      for (std::size_t j = 0; j < n; ++j) {
        SparsePoly f(n);
        const long k = uni(2, 5);
        for (long i = 0; i < k; ++i) {
          ExpVec e(n);
          for (std::size_t v = 0; v < n; ++v) e.set(v, static_cast<std::uint32_t>(uni(0, 2)));
          long c = 0;
          while (c == 0) c = uni(-30, 30);
          f += SparsePoly::monomial(e, Rat(c));
        }
        sys.push_back(f);
      }
      if (std::any_of(sys.begin(), sys.end(), [](const SparsePoly& f) { return f.size() < 2; })) continue;
      const Integer mv = mixed_volume(supports_of(sys));
      if (mv == 0) continue;
      ++trials;
      std::vector<Integer> lambda;
      for (std::size_t v = 0; v < n; ++v) lambda.push_back(uni(1, 50));
      try {
        const GeometricResolution res = solve_toric_0d(sys, lambda);
        if (Integer(static_cast<unsigned long>(res.degree())) == mv && !res.multiplicity_warning) {
          ++matches;
          random_outputs.emplace_back(sys, res);
        } else if (res.multiplicity_warning) {
          ++flagged;
        } else {
          ++silent;
        }
      } catch (const GenericityError&) {
        ++flagged;
      }
    }
    const bool ok = silent == 0 && matches * 100 >= 95 * trials;
    return Outcome{ok, std::to_string(matches) + "/" + std::to_string(trials) + " match, " + std::to_string(flagged) +
                           " flagged, " + std::to_string(silent) + " silent"};
  });

  report(7, "verification of pipeline outputs and single-coefficient mutations", 600, [&] {
    int outputs = 0;
    std::string why;
    auto check = [&](const GeometricResolution& g, const std::vector<SparsePoly>& sys) {
      ++outputs;
      auto passes = [&](const GeometricResolution& x) { return verify_resolution(x, sys).ok(); };
      if (!passes(g)) {
        why = "rejected as is";
        return false;
      }
      why = undetected_mutation(g, passes);
      if (!why.empty()) why = "undetected mutation of " + why;
      return why.empty();
    };
    auto check_proj = [&](const ProjectionResult& r, const std::vector<SparsePoly>& sys) {
      if (!check(r.parametric, specialize(sys, r))) return false;
      ++outputs;
      auto passes = [&](const GeometricResolution& x) { return verify_projection(x, r.parametric).ok(); };
      if (!passes(r.resolution)) {
        why = "projection rejected as is";
        return false;
      }
      why = undetected_mutation(r.resolution, passes);
      if (!why.empty()) why = "undetected mutation of projected " + why;
      return why.empty();
    };
    // Golden outputs.
    {
      PipelineOptions opts;
      opts.xi = std::vector<Rat>{Rat(1)};
      Sampler s(1);
      if (!check(parametric_toric_geomres(curve(), {0}, {1, 2}, {0, 1}, opts, s).resolution, curve())) {
        return Outcome{false, std::string("curve resolution") + ": " + why};
      }
    }
    if (pinned.resolution.q.is_zero()) pinned = q_projection(five_var_problem(1));
    if (!check_proj(pinned, five_var())) return Outcome{false, std::string("five-variable projection") + ": " + why};
    // Random outputs: zero-dimensional solutions and random-coefficient
    // instances of both example families.
    for (const auto& [sys, res] : random_outputs) {
      if (!check(res, sys)) return Outcome{false, "random zero-dimensional output: " + why + " for q = " + to_string(res.q)};
    }
    std::mt19937_64 g(7);
    auto coeff = [&] {
      long c = 0;
      while (c == 0) c = std::uniform_int_distribution<long>(-9, 9)(g);
      return c;
    };
    for (int it = 0; it < 3; ++it) {
      auto t = [&] {
        const long v = coeff();
        return (v < 0 ? "" : "+") + std::to_string(v);
      };
      ProjectionProblem p;
      const std::string f1 = t() + t() + "*X1*X2" + t() + "*X2*X3";
      const std::string f2 = t() + t() + "*X1^2*X2*X3" + t() + "*X2^2" + t() + "*X1*X2*X3";
      p.system = {P(f1, 3), P(f2, 3)};
      p.ell = 2;
      p.options.seed = 100 + it;
      if (!check_proj(q_projection(p), p.system)) return Outcome{false, std::string("random curve projection") + ": " + why};
    }
    {
      std::vector<long> c;
      for (int i = 0; i < 7; ++i) c.push_back(coeff());
      ProjectionProblem p;
      p.system = five_var(c);
      p.ell = 3;
      p.options.seed = 5;
      // A dense separating form makes exact lifting to 2 MV intractable for
      // this family, so the form stays X5 while everything else is drawn.
      p.options.lambda = std::vector<Integer>{0, 1};
      if (!check_proj(q_projection(p), p.system)) return Outcome{false, std::string("random five-variable projection") + ": " + why};
    }
    return Outcome{true, std::to_string(outputs) + " outputs"};
  });

  report(8, "Pade round trip on 100 random rational functions", 120, [] {
    std::mt19937_64 g(8);
    auto uni = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(g); };
    int done = 0;
    while (done < 100) {
      const std::size_t t = static_cast<std::size_t>(uni(1, 2));
      auto random_poly = [&] {
        SparsePoly p(t);
        const long terms = uni(1, 4);
        for (long i = 0; i < terms; ++i) {
          ExpVec e(t);
          long left = uni(0, 4);
          for (std::size_t v = 0; v < t; ++v) {
            const long take = v + 1 == t ? left : uni(0, left);
            e.set(v, static_cast<std::uint32_t>(take));
            left -= take;
          }
          p += SparsePoly::monomial(e, make_rat(uni(-9, 9), uni(1, 4)));
        }
        return p;
      };
      const SparsePoly num = random_poly(), den = random_poly();
      if (den.is_zero()) continue;
      const RatFun f = RatFun::normalize(num, den);
      std::vector<Rat> shift;
      std::vector<std::size_t> vars;
      for (std::size_t v = 0; v < t; ++v) {
        shift.emplace_back(uni(-3, 3));
        vars.push_back(v);
      }
      if (sgn(f.den().eval(shift)) == 0) continue;
      const std::size_t d = std::max(f.num().total_degree(), f.den().total_degree());
      auto ring = std::make_shared<const SeriesRing>(t, vars, shift, 2 * d);
      const TruncSeries s =
          TruncSeries::expand(ring, 2 * d, f.num()) * series_inv(TruncSeries::expand(ring, 2 * d, f.den()));
      const RatFun back = t == 1 ? pade_univariate(s, d) : pade_multivariate(s, d);
      if (back != f) return Outcome{false, to_string(f) + " came back as " + to_string(back)};
      ++done;
    }
    return Outcome{true, ""};
  });

  report(9, "projection independent of the specialization value b", 600, [&] {
    if (pinned.resolution.q.is_zero()) pinned = q_projection(five_var_problem(1));
    for (long b : {2, 3, 5}) {
      const ProjectionResult r = q_projection(five_var_problem(b));
      if (r.resolution.q != pinned.resolution.q) return Outcome{false, "b = " + std::to_string(b) + " differs"};
    }
    return Outcome{true, "b = 1, 2, 3, 5 agree"};
  });

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
