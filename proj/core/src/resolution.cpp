#include "toric/resolution.hpp"

#include <algorithm>
#include <map>

#include "toric/error.hpp"

namespace toric {

bool VerificationReport::ok() const { return first_failure().empty(); }

std::string VerificationReport::first_failure() const {
  for (const auto& c : checks) {
    if (!c.passed) return c.name;
  }
  return {};
}

namespace {

using RPoly = UniPoly<RatFun>;

std::string var_name(std::size_t i) { return "X" + std::to_string(i + 1); }

void shape_checks(const GeometricResolution& res, VerificationReport& rep) {
  const bool monic = !res.q.is_zero() && res.q.lead() == one_like(res.q.lead());
  rep.checks.push_back({"q monic", monic});
  for (std::size_t k = 0; k < res.params.size(); ++k) {
    rep.checks.push_back({"deg param " + var_name(res.dependent_vars[k]) + " < deg q",
                          res.params[k].degree() < res.q.degree()});
  }
  if (res.lambda.size() != res.params.size()) {
    rep.checks.push_back({"separating form length", false});
    return;
  }
  if (!monic) return;
  const std::size_t n = res.ambient;
  RPoly form({RatFun(n, Rat(0)), RatFun(n, Rat(-1))});
  for (std::size_t k = 0; k < res.params.size(); ++k) {
    if (sgn(res.lambda[k]) != 0) form += res.params[k] * RatFun(n, Rat(res.lambda[k]));
  }
  rep.checks.push_back({"separating form equals Y mod q", rem_monic(form, res.q).is_zero()});
}

}  // namespace

RPoly substitute_mod(const SparsePoly& f, const GeometricResolution& res) {
  const std::size_t n = res.ambient;
  if (f.ambient() != n) throw InputError("equation and resolution live in different rings");
  const RPoly one = rem_monic(RPoly({RatFun(n, Rat(1))}), res.q);
  std::vector<std::vector<RPoly>> powers(res.dependent_vars.size());
  std::map<std::size_t, std::size_t> slot;
  for (std::size_t k = 0; k < res.dependent_vars.size(); ++k) slot[res.dependent_vars[k]] = k;

  // Group terms by their dependent-variable exponents.
  std::map<std::vector<std::uint32_t>, std::vector<SparsePoly::Term>> groups;
  for (const auto& [e, c] : f.terms()) {
    std::vector<std::uint32_t> key(res.dependent_vars.size(), 0);
    ExpVec rest = e;
    for (std::size_t i = 0; i < n; ++i) {
      if (e[i] == 0) continue;
      auto it = slot.find(i);
      if (it != slot.end()) {
        key[it->second] = e[i];
        rest.set(i, 0);
      } else if (std::find(res.free_vars.begin(), res.free_vars.end(), i) == res.free_vars.end()) {
        throw InputError(var_name(i) + " is neither free nor dependent in the resolution");
      }
    }
    groups[key].emplace_back(rest, c);
  }
  RPoly acc;
  for (auto& [key, terms] : groups) {
    RPoly m = one;
    for (std::size_t k = 0; k < key.size(); ++k) {
      if (key[k] == 0) continue;
      auto& pw = powers[k];
      if (pw.empty()) pw.push_back(one);
      while (pw.size() <= key[k]) pw.push_back(mulmod(pw.back(), res.params[k], res.q));
      m = mulmod(m, pw[key[k]], res.q);
    }
    acc += m * RatFun(SparsePoly::from_terms(n, std::move(terms)));
  }
  return acc;
}

VerificationReport verify_resolution(const GeometricResolution& res, const std::vector<SparsePoly>& system) {
  VerificationReport rep;
  shape_checks(res, rep);
  if (!rep.ok()) return rep;
  for (std::size_t k = 0; k < system.size(); ++k) {
    rep.checks.push_back({"f" + std::to_string(k + 1) + " vanishes mod q", substitute_mod(system[k], res).is_zero()});
  }
  return rep;
}

VerificationReport verify_projection(const GeometricResolution& projected, const GeometricResolution& parent) {
  VerificationReport rep;
  shape_checks(projected, rep);
  if (!rep.ok()) return rep;
  RPoly p_mu;
  for (std::size_t k = 0; k < projected.dependent_vars.size(); ++k) {
    if (sgn(projected.lambda[k]) == 0) continue;
    p_mu += parent.param_of(projected.dependent_vars[k]) * RatFun(parent.ambient, Rat(projected.lambda[k]));
  }
  p_mu = rem_monic(p_mu, parent.q);
  rep.checks.push_back({"q_mu(p_mu) vanishes mod q_lambda", compose_mod(projected.q, p_mu, parent.q).is_zero()});
  for (std::size_t k = 0; k < projected.dependent_vars.size(); ++k) {
    const std::size_t var = projected.dependent_vars[k];
    const RPoly lhs = compose_mod(projected.params[k], p_mu, parent.q);
    rep.checks.push_back({"v_" + var_name(var) + "(p_mu) = w_" + var_name(var), lhs == parent.param_of(var)});
  }
  return rep;
}

}  // namespace toric
