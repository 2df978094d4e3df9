#include "toric/lifting.hpp"

#include <algorithm>

#include "toric/error.hpp"

namespace toric {

namespace {

using SPoly = UniPoly<TruncSeries>;

SPoly pad(const SPoly& p, std::size_t prec) {
  return p.map<TruncSeries>([prec](const TruncSeries& s) { return s.with_precision(prec); });
}

SPoly one_poly(const std::shared_ptr<const SeriesRing>& ring, std::size_t prec) {
  return SPoly({TruncSeries::constant(ring, prec, Rat(1))});
}

SPoly det_mod(const std::vector<std::vector<SPoly>>& m, const SPoly& q) {
  const std::size_t r = m.size();
  if (r == 1) return m[0][0];
  if (r == 2) return rem_monic(m[0][0] * m[1][1] - m[0][1] * m[1][0], q);
  SPoly acc;
  for (std::size_t j = 0; j < r; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<SPoly>> minor;
    for (std::size_t i = 1; i < r; ++i) {
      std::vector<SPoly> row;
      for (std::size_t k = 0; k < r; ++k) {
        if (k != j) row.push_back(m[i][k]);
      }
      minor.push_back(std::move(row));
    }
    SPoly term = mulmod(m[0][j], det_mod(minor, q), q);
    if (j % 2 == 0) {
      acc += term;
    } else {
      acc -= term;
    }
  }
  return acc;
}

std::vector<std::vector<SPoly>> adjugate_mod(const std::vector<std::vector<SPoly>>& m, const SPoly& q,
                                             const SPoly& one) {
  const std::size_t r = m.size();
  std::vector<std::vector<SPoly>> adj(r, std::vector<SPoly>(r));
  if (r == 1) {
    adj[0][0] = one;
    return adj;
  }
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      std::vector<std::vector<SPoly>> minor;
      for (std::size_t a = 0; a < r; ++a) {
        if (a == j) continue;
        std::vector<SPoly> row;
        for (std::size_t b = 0; b < r; ++b) {
          if (b != i) row.push_back(m[a][b]);
        }
        minor.push_back(std::move(row));
      }
      SPoly d = det_mod(minor, q);
      adj[i][j] = (i + j) % 2 == 0 ? d : -d;
    }
  }
  return adj;
}

UniPoly<Rat> constant_terms(const SPoly& p) {
  return p.map<Rat>([](const TruncSeries& s) { return s.constant_term(); });
}

}  // namespace

HenselLifter::HenselLifter(std::vector<SparsePoly> system, std::vector<std::size_t> free_vars,
                           std::vector<std::size_t> dependent_vars, std::vector<Integer> lambda,
                           const ZeroDimSolution& base, std::vector<Rat> xi, std::size_t max_precision)
    : system_(std::move(system)), free_(std::move(free_vars)), dep_(std::move(dependent_vars)),
      lambda_(std::move(lambda)) {
  const std::size_t r = dep_.size();
  if (system_.size() != r || lambda_.size() != r || base.params.size() != r) {
    throw InputError("lifting needs one equation and one parametrization per dependent variable");
  }
  if (xi.size() != free_.size()) throw InputError("lifting point has the wrong length");
  if (!std::is_sorted(dep_.begin(), dep_.end())) throw InputError("dependent variables must be increasing");
  const std::size_t ambient = system_.front().ambient();
  ring_ = std::make_shared<SeriesRing>(ambient, free_, xi, max_precision);

  for (const auto& f : system_) {
    f_.push_back(group(f));
    std::vector<Grouped> row;
    for (auto j : dep_) row.push_back(group(f.derivative(j)));
    jac_.push_back(std::move(row));
  }

  res_.free_vars = free_;
  res_.dependent_vars = dep_;
  res_.lambda = lambda_;
  res_.xi = std::move(xi);
  res_.precision = 0;
  auto embed = [this](const UniPoly<Rat>& p) {
    return p.map<TruncSeries>([this](const Rat& c) { return TruncSeries::constant(ring_, 0, c); });
  };
  res_.q = embed(base.q);
  for (const auto& p : base.params) res_.params.push_back(embed(p));
  if (base.q.degree() <= 0) return;  // no roots: nothing to lift

  if (gcd(base.q, base.q.derivative()).degree() != 0) {
    throw MathError("base resolution has multiple roots");
  }
  for (const auto& fx : evaluate(f_, res_.params, res_.q, 0)) {
    if (!fx.is_zero()) throw MathError("base resolution does not solve the system at the lifting point");
  }
  // Jacobian determinant inverse modulo q at the base point.
  std::vector<std::vector<SPoly>> jac;
  for (const auto& row : jac_) jac.push_back(evaluate(row, res_.params, res_.q, 0));
  const auto det = constant_terms(det_mod(jac, res_.q));
  const auto [g, s] = half_gcdex(det, base.q, Rat(1));
  if (g.degree() != 0) {
    throw GenericityError(GenericityIssue::kSingularJacobian, "Jacobian vanishes at a root over the lifting point");
  }
  det_inv_ = embed(s);
  det_inv_prec_ = 0;
}

HenselLifter::Grouped HenselLifter::group(const SparsePoly& f) const {
  std::map<std::vector<std::uint32_t>, std::vector<SparsePoly::Term>> groups;
  for (const auto& [e, c] : f.terms()) {
    std::vector<std::uint32_t> key;
    ExpVec rest = e;
    for (auto j : dep_) {
      key.push_back(e[j]);
      rest.set(j, 0);
    }
    for (std::size_t i = 0; i < rest.size(); ++i) {
      if (rest[i] > 0 && std::find(free_.begin(), free_.end(), i) == free_.end()) {
        throw InputError("X" + std::to_string(i + 1) + " is neither free nor dependent");
      }
    }
    groups[key].emplace_back(rest, c);
  }
  Grouped out;
  for (auto& [key, terms] : groups) {
    out.emplace_back(key, SparsePoly::from_terms(f.ambient(), std::move(terms)));
  }
  return out;
}

std::vector<HenselLifter::SPoly> HenselLifter::evaluate(const std::vector<Grouped>& polys,
                                                        const std::vector<SPoly>& v, const SPoly& q,
                                                        std::size_t prec) const {
  const std::size_t r = dep_.size();
  std::vector<std::vector<SPoly>> powers(r);
  std::map<std::vector<std::uint32_t>, SPoly> products;
  const SPoly one = rem_monic(one_poly(ring_, prec), q);
  auto power = [&](std::size_t j, std::uint32_t k) -> const SPoly& {
    auto& pw = powers[j];
    if (pw.empty()) pw.push_back(one);
    while (pw.size() <= k) pw.push_back(mulmod(pw.back(), v[j], q));
    return pw[k];
  };
  auto product = [&](const std::vector<std::uint32_t>& key) -> const SPoly& {
    auto it = products.find(key);
    if (it != products.end()) return it->second;
    SPoly acc = one;
    bool first = true;
    for (std::size_t j = 0; j < r; ++j) {
      if (key[j] == 0) continue;
      acc = first ? power(j, key[j]) : mulmod(acc, power(j, key[j]), q);
      first = false;
    }
    return products.emplace(key, std::move(acc)).first->second;
  };
  std::vector<SPoly> out;
  for (const auto& g : polys) {
    SPoly acc;
    for (const auto& [key, coeff] : g) {
      const TruncSeries c = TruncSeries::expand(ring_, prec, coeff);
      if (c.is_zero()) continue;
      acc += product(key) * c;
    }
    out.push_back(std::move(acc));
  }
  return out;
}

void HenselLifter::step(std::size_t new_prec) {
  const std::size_t p0 = res_.precision;
  const std::size_t r = dep_.size();
  const SPoly& q_low = res_.q;
  const auto& v_low = res_.params;

  // Jacobian inverse, needed only to the old precision.
  std::vector<std::vector<SPoly>> jac;
  for (const auto& row : jac_) jac.push_back(evaluate(row, v_low, q_low, p0));
  const SPoly det = det_mod(jac, q_low);
  while (det_inv_prec_ < p0) {
    const std::size_t np = std::min(2 * det_inv_prec_ + 1, p0);
    const SPoly qn = pad(q_low, np);
    const SPoly u = pad(det_inv_, np);
    const SPoly e = one_poly(ring_, np) - mulmod(pad(det, np), u, qn);
    det_inv_ = u + mulmod(u, e, qn);
    det_inv_prec_ = np;
  }
  const auto adj = adjugate_mod(jac, q_low, rem_monic(one_poly(ring_, p0), q_low));

  const SPoly q = pad(res_.q, new_prec);
  std::vector<SPoly> v;
  for (const auto& p : res_.params) v.push_back(pad(p, new_prec));
  const auto fv = evaluate(f_, v, q, new_prec);

  std::vector<SPoly> w = v;
  for (std::size_t j = 0; j < r; ++j) {
    for (std::size_t k = 0; k < r; ++k) {
      if (fv[k].is_zero()) continue;
      const SPoly jinv = pad(mulmod(adj[j][k], det_inv_, q_low), new_prec);
      w[j] -= mulmod(jinv, fv[k], q);
    }
  }
  SPoly delta = SPoly::monomial(TruncSeries::constant(ring_, new_prec, Rat(-1)), 1);
  for (std::size_t j = 0; j < r; ++j) {
    if (sgn(lambda_[j]) != 0) delta += w[j] * Rat(lambda_[j]);
  }
  delta = rem_monic(delta, q);
  for (std::size_t j = 0; j < r; ++j) v[j] = w[j] - mulmod(w[j].derivative(), delta, q);
  SPoly q_new = q - mulmod(q.derivative(), delta, q);
  if (q_new.degree() != q.degree() || q_new.lead() != one_like(q_new.lead())) {
    throw MathError("lifted minimal polynomial is not monic");
  }
  for (const auto& fx : evaluate(f_, v, q_new, new_prec)) {
    if (!fx.is_zero()) {
      throw MathError("lifting residual check failed at precision " + std::to_string(new_prec));
    }
  }
  res_.q = std::move(q_new);
  res_.params = std::move(v);
  res_.precision = new_prec;
  ++steps_;
}

void HenselLifter::lift_to(std::size_t kappa) {
  if (kappa > ring_->max_precision()) throw InputError("lifting precision beyond the series ring");
  if (res_.q.degree() <= 0) {
    // Nothing to lift; just record the precision.
    res_.q = pad(res_.q, kappa);
    for (auto& p : res_.params) p = pad(p, kappa);
    res_.precision = std::max(res_.precision, kappa);
    return;
  }
  while (res_.precision < kappa) step(std::min(2 * res_.precision + 1, kappa));
}

LiftedResolution newton_hensel_lift(const std::vector<SparsePoly>& system, const std::vector<std::size_t>& free_vars,
                                    const std::vector<std::size_t>& dependent_vars,
                                    const std::vector<Integer>& lambda, const ZeroDimSolution& base,
                                    const std::vector<Rat>& xi, std::size_t kappa) {
  HenselLifter lifter(system, free_vars, dependent_vars, lambda, base, xi, kappa);
  lifter.lift_to(kappa);
  return lifter.current();
}

}  // namespace toric
