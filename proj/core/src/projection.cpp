#include "toric/projection.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "toric/error.hpp"
#include "toric/lifting.hpp"
#include "toric/linalg.hpp"
#include "toric/pade.hpp"
#include "toric/support_analysis.hpp"

namespace toric {

std::uint64_t Sampler::below(std::uint64_t n) {
  // Rejection keeps the draw exactly uniform and independent of the
  // standard library's distribution implementations.
  const std::uint64_t threshold = (std::numeric_limits<std::uint64_t>::max() - n + 1) % n;
  std::uint64_t x;
  do {
    x = gen_();
  } while (x < threshold);
  return x % n;
}

namespace {

std::uint64_t to_u64(const Integer& b) {
  if (sgn(b) <= 0 || !b.fits_ulong_p()) throw InputError("sampling bound must be a positive machine integer");
  return b.get_ui();
}

Integer from_u64(std::uint64_t v) { return Integer(static_cast<unsigned long>(v)); }

}  // namespace

Integer Sampler::positive(const Integer& bound) { return from_u64(below(to_u64(bound)) + 1); }

Integer Sampler::nonzero(const Integer& bound) {
  const std::uint64_t b = to_u64(bound);
  const std::uint64_t k = below(2 * b);
  return k < b ? Integer(-from_u64(k + 1)) : from_u64(k - b + 1);
}

std::vector<Integer> Sampler::positive_vector(std::size_t n, const Integer& bound) {
  std::vector<Integer> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(positive(bound));
  return v;
}

std::vector<Integer> Sampler::nonzero_vector(std::size_t n, const Integer& bound) {
  std::vector<Integer> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(nonzero(bound));
  return v;
}

SupportFamily supports_of(const std::vector<SparsePoly>& system) {
  if (system.empty()) throw InputError("empty system");
  const std::size_t n = system.front().ambient();
  std::vector<Support> members;
  for (const auto& f : system) {
    if (f.is_zero()) throw InputError("empty support");
    members.emplace_back(n, f.support());
  }
  return SupportFamily(n, std::move(members));
}

namespace {

using RPoly = UniPoly<RatFun>;

std::vector<std::size_t> sorted_union(std::vector<std::size_t> a, const std::vector<std::size_t>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  return a;
}

RPoly constant_resolution_poly(const UniPoly<Rat>& p, std::size_t ambient) {
  return p.map<RatFun>([ambient](const Rat& c) { return RatFun(ambient, c); });
}

// Reconstructs every coefficient of a lifted resolution; nullopt when some
// coefficient has no approximant within the degree bound.
std::optional<GeometricResolution> reconstruct(const LiftedResolution& lifted, std::size_t d, std::size_t ambient) {
  auto one = [&](const TruncSeries& s) {
    return lifted.free_vars.size() == 1 ? pade_univariate(s, d) : pade_multivariate(s, d);
  };
  auto convert = [&](const UniPoly<TruncSeries>& p, bool monic) {
    std::vector<RatFun> c;
    const std::size_t top = p.coeffs().size();
    for (std::size_t i = 0; i < top; ++i) {
      c.push_back(monic && i + 1 == top ? RatFun(ambient, Rat(1)) : one(p.coeff(i)));
    }
    return RPoly(std::move(c));
  };
  try {
    GeometricResolution res;
    res.ambient = ambient;
    res.free_vars = lifted.free_vars;
    res.dependent_vars = lifted.dependent_vars;
    res.lambda = lifted.lambda;
    res.q = convert(lifted.q, true);
    for (const auto& p : lifted.params) res.params.push_back(convert(p, false));
    return res;
  } catch (const GenericityError& e) {
    if (e.issue() != GenericityIssue::kNoValidApproximant) throw;
    return std::nullopt;
  }
}

std::vector<std::size_t> newton_levels(std::size_t cap) {
  std::vector<std::size_t> levels;
  for (std::size_t p = 1; p < cap; p = 2 * p + 1) levels.push_back(p);
  levels.push_back(cap);
  return levels;
}

}  // namespace

ParametricResult parametric_toric_geomres(const std::vector<SparsePoly>& system,
                                          const std::vector<std::size_t>& free_vars,
                                          const std::vector<std::size_t>& dependent_vars,
                                          const std::vector<Integer>& lambda, const PipelineOptions& opts,
                                          Sampler& sampler) {
  if (system.empty()) throw InputError("empty system");
  const std::size_t n = system.front().ambient();
  const std::size_t t = free_vars.size();
  const std::size_t r = dependent_vars.size();
  if (system.size() != r) throw InputError("need one equation per dependent variable");
  if (lambda.size() != r) throw InputError("separating form has the wrong length");
  if (opts.xi && opts.xi->size() != t) throw InputError("lifting point has the wrong length");

  ParametricResult out;
  {
    const auto keep = sorted_union(free_vars, dependent_vars);
    out.lift_bound = mixed_volume(project_supports(supports_of(system), keep).with_simplices(t));
  }
  std::vector<Integer> lam = lambda;
  unsigned xi_draws = 0, lambda_draws = 0;
  std::string last;
  for (;;) {
    std::vector<Rat> xi;
    if (opts.xi) {
      xi = *opts.xi;
    } else {
      for (const auto& v : sampler.positive_vector(t, opts.bound)) xi.emplace_back(v);
    }
    try {
      std::map<std::size_t, Rat> bind;
      for (std::size_t i = 0; i < t; ++i) bind[free_vars[i]] = xi[i];
      std::vector<SparsePoly> g;
      for (const auto& f : system) g.push_back(f.eval_partial(bind).select_vars(dependent_vars));
      const ZeroDimSolution z = solve_toric_0d_rat(g, lam);
      if (z.multiplicity_warning) {
        throw GenericityError(GenericityIssue::kNonGenericInput, "multiple roots over the lifting point");
      }
      if (Integer(static_cast<unsigned long>(z.q.degree())) > out.lift_bound) {
        throw MathError("more roots than the mixed volume allows");
      }
      if (t == 0 || z.q.degree() == 0) {
        GeometricResolution res;
        res.ambient = n;
        res.free_vars = free_vars;
        res.dependent_vars = dependent_vars;
        res.lambda = lam;
        res.q = constant_resolution_poly(z.q, n);
        for (const auto& p : z.params) res.params.push_back(constant_resolution_poly(p, n));
        const auto rep = verify_resolution(res, system);
        if (!rep.ok()) {
          throw GenericityError(GenericityIssue::kVerificationFailed, rep.first_failure());
        }
        out.resolution = std::move(res);
        out.xi = xi;
        return out;
      }
      const std::size_t cap = opts.precision ? *opts.precision : 2 * out.lift_bound.get_ui();
      HenselLifter lifter(system, free_vars, dependent_vars, lam, z, xi, cap);
      const auto levels = opts.precision ? std::vector<std::size_t>{cap} : newton_levels(cap);
      GenericityIssue issue = GenericityIssue::kNoValidApproximant;
      std::string detail = "no reconstruction up to precision " + std::to_string(cap);
      for (auto level : levels) {
        lifter.lift_to(level);
        const std::size_t d = std::min<std::size_t>(out.lift_bound.get_ui(), level / 2);
        auto cand = reconstruct(lifter.current(), d, n);
        if (!cand) continue;
        const auto rep = verify_resolution(*cand, system);
        if (!rep.ok()) {
          issue = GenericityIssue::kVerificationFailed;
          detail = rep.first_failure() + " at precision " + std::to_string(level);
          continue;
        }
        out.resolution = std::move(*cand);
        out.xi = xi;
        out.precision = level;
        return out;
      }
      throw GenericityError(issue, detail);
    } catch (const GenericityError& e) {
      ++out.retries;
      last = e.what();
      if (e.issue() == GenericityIssue::kLambdaNotSeparating) {
        if (opts.lambda || ++lambda_draws > opts.retry_limit) throw GenericityFailure(last);
        lam = sampler.nonzero_vector(r, opts.bound);
      } else {
        if (opts.xi || ++xi_draws > opts.retry_limit) throw GenericityFailure(last);
      }
    }
  }
}

GeometricResolution geom_res_proj(const GeometricResolution& res, const std::vector<std::size_t>& projected,
                                  const std::vector<Integer>& mu) {
  if (mu.size() != projected.size()) throw InputError("projection form has the wrong length");
  const std::size_t n = res.ambient;
  const RatFun zero(n, Rat(0));
  const std::size_t D = res.degree();

  GeometricResolution out;
  out.ambient = n;
  out.free_vars = res.free_vars;
  out.dependent_vars = projected;
  out.lambda = mu;
  out.multiplicity_warning = res.multiplicity_warning;

  RPoly p_mu;
  for (std::size_t k = 0; k < projected.size(); ++k) {
    if (sgn(mu[k]) != 0) p_mu += res.param_of(projected[k]) * RatFun(n, Rat(mu[k]));
  }
  auto vec = [&](const RPoly& p) {
    std::vector<RatFun> v(D, zero);
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) v[i] = p.coeff(i);
    return v;
  };

  IncrementalBasis<RatFun> basis(zero);
  RPoly power = rem_monic(RPoly({RatFun(n, Rat(1))}), res.q);
  for (std::size_t i = 0; i <= D; ++i) {
    if (auto c = basis.add(vec(power))) {
      // p_mu^i = sum c_j p_mu^j, so q_mu = Y^i - sum c_j Y^j.
      std::vector<RatFun> coeffs(i + 1, zero);
      for (std::size_t j = 0; j < i; ++j) coeffs[j] = -(*c)[j];
      coeffs[i] = RatFun(n, Rat(1));
      out.q = RPoly(std::move(coeffs));
      break;
    }
    power = mulmod(power, p_mu, res.q);
  }
  for (auto var : projected) {
    auto c = basis.express(vec(res.param_of(var)));
    if (!c) {
      throw GenericityError(GenericityIssue::kMuNotPrimitive,
                            "X" + std::to_string(var + 1) + " is not a polynomial in the projection form");
    }
    out.params.push_back(RPoly(std::move(*c)));
  }
  return out;
}

ProjectionResult q_projection(const ProjectionProblem& problem) {
  const auto& sys = problem.system;
  const auto& opts = problem.options;
  const SupportFamily family = supports_of(sys);
  const std::size_t n = family.ambient_dim();
  const std::size_t r = sys.size();
  const std::size_t ell = problem.ell;
  if (r > n) throw InputError("more equations than variables");
  if (ell < 1 || ell >= n) throw InputError("projection width must satisfy 1 <= ell < n");

  ProjectionResult out;
  out.ambient = n;
  out.ell = ell;
  Provenance& prov = out.provenance;
  prov.seed = opts.seed;
  prov.bound = opts.bound;

  const auto tb = trans_basis(family).indices;
  prov.trans_basis = tb;
  std::vector<std::size_t> projected;
  for (std::size_t i = 0; i < n; ++i) {
    const bool in_tb = std::find(tb.begin(), tb.end(), i) != tb.end();
    if (in_tb && i < ell) out.free_vars.push_back(i);
    if (in_tb && i >= ell) out.specialized_vars.push_back(i);
    if (!in_tb) out.dependent_vars.push_back(i);
    if (!in_tb && i < ell) projected.push_back(i);
  }
  prov.permutation = out.free_vars;
  prov.permutation.insert(prov.permutation.end(), out.dependent_vars.begin(), out.dependent_vars.end());
  prov.permutation.insert(prov.permutation.end(), out.specialized_vars.begin(), out.specialized_vars.end());
  prov.mv_bound = mixed_volume(family.with_simplices(n - r));
  if (out.free_vars.size() == ell) {
    out.dense_image = true;
    return out;
  }

  auto check_len = [](const auto& v, std::size_t len, const char* what) {
    if (v && v->size() != len) {
      throw InputError(std::string(what) + " needs " + std::to_string(len) + " entries");
    }
  };
  check_len(opts.b, out.specialized_vars.size(), "--b");
  check_len(opts.lambda, r, "--lambda");
  check_len(opts.mu, projected.size(), "--mu");

  Sampler sampler(opts.seed);
  std::vector<Integer> b = opts.b ? *opts.b : sampler.positive_vector(out.specialized_vars.size(), opts.bound);
  std::vector<Integer> lambda = opts.lambda ? *opts.lambda : sampler.nonzero_vector(r, opts.bound);
  std::vector<Integer> mu = opts.mu ? *opts.mu : sampler.nonzero_vector(projected.size(), opts.bound);
  unsigned b_draws = 0, mu_draws = 0;

  for (;;) {
    std::map<std::size_t, Rat> bind;
    for (std::size_t i = 0; i < b.size(); ++i) bind[out.specialized_vars[i]] = Rat(b[i]);
    std::vector<SparsePoly> specialized_sys;
    for (const auto& f : sys) specialized_sys.push_back(f.eval_partial(bind));
    ParametricResult par;
    try {
      if (std::any_of(specialized_sys.begin(), specialized_sys.end(),
                      [](const SparsePoly& f) { return f.is_zero(); })) {
        throw GenericityFailure("an equation vanishes after specialization");
      }
      par = parametric_toric_geomres(specialized_sys, out.free_vars, out.dependent_vars, lambda, opts, sampler);
    } catch (const GenericityFailure&) {
      ++prov.retries;
      if (opts.b || b.empty() || ++b_draws > opts.retry_limit) throw;
      b = sampler.positive_vector(out.specialized_vars.size(), opts.bound);
      continue;
    }
    prov.retries += par.retries;
    for (;;) {
      try {
        out.resolution = geom_res_proj(par.resolution, projected, mu);
        break;
      } catch (const GenericityError& e) {
        ++prov.retries;
        if (opts.mu || ++mu_draws > opts.retry_limit) throw GenericityFailure(e.what());
        mu = sampler.nonzero_vector(projected.size(), opts.bound);
      }
    }
    if (Integer(static_cast<unsigned long>(out.resolution.degree())) > prov.mv_bound) {
      throw MathError("projected degree exceeds the mixed volume bound");
    }
    const auto rep = verify_projection(out.resolution, par.resolution);
    if (!rep.ok()) throw MathError("projection verification failed: " + rep.first_failure());
    out.parametric = std::move(par.resolution);
    prov.xi = par.xi;
    prov.b = b;
    prov.lambda = out.parametric.lambda;
    prov.mu = mu;
    prov.precision = par.precision;
    prov.lift_bound = par.lift_bound;
    return out;
  }
}

}  // namespace toric
