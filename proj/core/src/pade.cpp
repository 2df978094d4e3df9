#include "toric/pade.hpp"

#include "toric/error.hpp"
#include "toric/linalg.hpp"
#include "toric/uni_poly.hpp"

namespace toric {

namespace {

RatFun from_shifted(const TruncSeries& like, const SparsePoly& p, const SparsePoly& q) {
  const auto& ring = *like.ring();
  return RatFun::normalize(unshift(p, ring.shift(), ring.var_indices(), ring.ambient()),
                           unshift(q, ring.shift(), ring.var_indices(), ring.ambient()));
}

void check_precision(const TruncSeries& s, std::size_t d) {
  if (s.precision() < 2 * d) {
    throw InputError("series precision " + std::to_string(s.precision()) + " is below twice the degree bound " +
                     std::to_string(d));
  }
}

}  // namespace

RatFun pade_univariate(const TruncSeries& s, std::size_t d) {
  if (s.vars() != 1) throw InputError("univariate reconstruction of a multivariate series");
  check_precision(s, d);
  const std::size_t k = s.precision();
  std::vector<Rat> coeffs;
  for (std::size_t i = 0; i <= k; ++i) coeffs.push_back(s.component(i)[0]);
  using P = UniPoly<Rat>;
  P r0 = P::monomial(Rat(1), k + 1), r1(coeffs);
  P t0, t1({Rat(1)});
  // Remainders r_i = t_i * s mod Z^(k+1); stop at the first of degree <= d.
  while (r1.degree() > static_cast<long>(d)) {
    auto [quo, rem] = divrem(r0, r1);
    P t2 = t0 - quo * t1;
    r0 = std::move(r1);
    r1 = std::move(rem);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (t1.degree() > static_cast<long>(d) || t1.is_zero() || sgn(t1.coeff(0)) == 0) {
    throw GenericityError(GenericityIssue::kNoValidApproximant, "denominator vanishes at the expansion point");
  }
  auto to_sparse = [](const P& p) {
    std::vector<SparsePoly::Term> terms;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
      terms.emplace_back(ExpVec{static_cast<std::uint32_t>(i)}, p.coeff(i));
    }
    return SparsePoly::from_terms(1, std::move(terms));
  };
  return from_shifted(s, to_sparse(r1), to_sparse(t1));
}

RatFun pade_multivariate(const TruncSeries& s, std::size_t d) {
  check_precision(s, d);
  const SeriesRing& ring = *s.ring();
  const std::size_t k = s.precision();
  const std::size_t t = s.vars();
  for (std::size_t e = 0; e <= d; ++e) {
    // Unknowns: coefficients of q in degrees 1..e (q has constant term 1).
    std::vector<ExpVec> qmons;
    for (std::size_t dq = 1; dq <= e; ++dq) {
      for (const auto& m : ring.monomials(dq)) qmons.push_back(m);
    }
    // Components e+1..k of q*s vanish: for each monomial u of such a degree,
    // s_u + sum_m q_m s_{u-m} = 0.
    Matrix<Rat> a;
    std::vector<Rat> b;
    for (std::size_t deg = e + 1; deg <= k; ++deg) {
      for (const auto& u : ring.monomials(deg)) {
        std::vector<Rat> row(qmons.size(), Rat(0));
        bool any = false;
        for (std::size_t c = 0; c < qmons.size(); ++c) {
          if (!qmons[c].divides(u)) continue;
          row[c] = s.coeff(u - qmons[c]);
          any = any || sgn(row[c]) != 0;
        }
        const Rat rhs = -s.coeff(u);
        if (!any && sgn(rhs) == 0) continue;
        a.push_back(std::move(row));
        b.push_back(rhs);
      }
    }
    std::vector<Rat> qc;
    if (!qmons.empty()) {
      if (!a.empty()) {
        auto sol = solve(a, b, Rat(0));
        if (!sol) continue;
        qc = std::move(*sol);
      } else {
        qc.assign(qmons.size(), Rat(0));
      }
    } else {
      bool consistent = true;
      for (const auto& x : b) consistent = consistent && sgn(x) == 0;
      if (!consistent) continue;
    }
    std::vector<SparsePoly::Term> qterms{{ExpVec(t), Rat(1)}};
    for (std::size_t c = 0; c < qmons.size(); ++c) qterms.emplace_back(qmons[c], qc[c]);
    const SparsePoly q = SparsePoly::from_terms(t, std::move(qterms));
    // p is q*s truncated at degree e.
    std::vector<SparsePoly::Term> pterms;
    for (const auto& [qm, qv] : q.terms()) {
      for (std::size_t deg = 0; deg + qm.degree() <= e; ++deg) {
        const auto& comp = s.component(deg);
        for (std::size_t i = 0; i < comp.size(); ++i) {
          if (sgn(comp[i]) != 0) pterms.emplace_back(ring.monomials(deg)[i] + qm, qv * comp[i]);
        }
      }
    }
    const SparsePoly p = SparsePoly::from_terms(t, std::move(pterms));
    return from_shifted(s, p, q);
  }
  throw GenericityError(GenericityIssue::kNoValidApproximant,
                        "no fraction of degree at most " + std::to_string(d) + " matches the series");
}

}  // namespace toric
