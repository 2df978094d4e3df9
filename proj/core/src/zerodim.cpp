// Toric roots of a square system: saturate by T*X1*...*Xm - 1, take a
// Groebner basis, and read the resolution off the multiplication operators
// of the finite-dimensional quotient algebra.

#include "toric/zerodim.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <unordered_map>

#include "toric/error.hpp"
#include "toric/groebner.hpp"

namespace toric {

const UniPoly<RatFun>& GeometricResolution::param_of(std::size_t var) const {
  for (std::size_t k = 0; k < dependent_vars.size(); ++k) {
    if (dependent_vars[k] == var) return params[k];
  }
  throw InputError("X" + std::to_string(var + 1) + " is not a dependent variable");
}

namespace {

using Vec = std::vector<Rat>;

bool is_zero_vec(const Vec& v) {
  for (const auto& x : v) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

class Quotient {
 public:
  explicit Quotient(const std::vector<SparsePoly>& gens) : gb_(gens) {
    if (!gb_.zero_dimensional()) {
      throw GenericityError(GenericityIssue::kNonGenericInput, "saturated ideal is not zero-dimensional");
    }
    basis_ = gb_.standard_monomials();
    for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);
    tables_.resize(gb_.ambient());
  }

  std::size_t dim() const { return basis_.size(); }
  std::size_t vars() const { return gb_.ambient(); }

  Vec coords(const SparsePoly& p) const {
    Vec v(dim(), Rat(0));
    const SparsePoly r = gb_.normal_form(p);
    for (const auto& [e, c] : r.terms()) v[index_.at(e)] = c;
    return v;
  }

  // Multiplication by a linear form sum coeffs[i] * X_i.
  Vec multiply(const std::vector<Rat>& coeffs, const Vec& v) {
    Vec out(dim(), Rat(0));
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      if (sgn(coeffs[i]) == 0) continue;
      const auto& t = table(i);
      for (std::size_t b = 0; b < dim(); ++b) {
        if (sgn(v[b]) == 0) continue;
        const Rat f = coeffs[i] * v[b];
        for (std::size_t c = 0; c < dim(); ++c) {
          if (sgn(t[b][c]) != 0) out[c] += f * t[b][c];
        }
      }
    }
    return out;
  }

 private:
  const std::vector<Vec>& table(std::size_t var) {
    auto& t = tables_[var];
    if (!t.empty() || dim() == 0) return t;
    for (const auto& b : basis_) {
      const ExpVec m = b + ExpVec::unit(vars(), var);
      auto it = index_.find(m);
      if (it != index_.end()) {
        Vec v(dim(), Rat(0));
        v[it->second] = 1;
        t.push_back(std::move(v));
      } else {
        t.push_back(coords(SparsePoly::monomial(m, Rat(1))));
      }
    }
    return t;
  }

  GroebnerBasis gb_;
  std::vector<ExpVec> basis_;
  std::unordered_map<ExpVec, std::size_t, ExpVecHash> index_;
  std::vector<std::vector<Vec>> tables_;
};

// Krylov sequence v, Av, A^2 v, ... kept in echelon form together with the
// combination of powers producing each row.
class Krylov {
 public:
  Krylov(std::size_t dim, const std::function<Vec(const Vec&)>& apply, Vec start) {
    Vec v = std::move(start);
    for (std::size_t k = 0;; ++k) {
      Vec r = v;
      Vec combo(k + 1, Rat(0));
      combo[k] = 1;
      eliminate(r, combo, -1);
      if (is_zero_vec(r)) {
        minpoly_ = UniPoly<Rat>(std::move(combo));
        return;
      }
      std::size_t p = 0;
      while (sgn(r[p]) == 0) ++p;
      rows_.push_back(std::move(r));
      combos_.push_back(std::move(combo));
      pivots_.push_back(p);
      if (k + 1 > dim) throw MathError("Krylov sequence did not terminate");
      v = apply(v);
    }
  }

  const UniPoly<Rat>& minpoly() const { return minpoly_; }

  // Coefficients c with w = sum c_i A^i v, if w lies in the span.
  std::optional<Vec> express(Vec w) const {
    Vec combo(rows_.size(), Rat(0));
    eliminate(w, combo, 1);
    if (!is_zero_vec(w)) return std::nullopt;
    return combo;
  }

 private:
  void eliminate(Vec& r, Vec& combo, int sign) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (sgn(r[pivots_[i]]) == 0) continue;
      const Rat f = r[pivots_[i]] / rows_[i][pivots_[i]];
      for (std::size_t c = 0; c < r.size(); ++c) {
        if (sgn(rows_[i][c]) != 0) r[c] -= f * rows_[i][c];
      }
      for (std::size_t c = 0; c < combos_[i].size(); ++c) {
        if (sign < 0) {
          combo[c] -= f * combos_[i][c];
        } else {
          combo[c] += f * combos_[i][c];
        }
      }
    }
  }

  std::vector<Vec> rows_, combos_;
  std::vector<std::size_t> pivots_;
  UniPoly<Rat> minpoly_;
};

std::vector<SparsePoly> saturated_generators(const std::vector<SparsePoly>& system) {
  const std::size_t m = system.size();
  std::vector<std::size_t> ident(m);
  for (std::size_t i = 0; i < m; ++i) ident[i] = i;
  std::vector<SparsePoly> gens;
  for (const auto& f : system) {
    if (f.ambient() != m) throw InputError("system is not square");
    gens.push_back(f.remap_vars(ident, m + 1));
  }
  ExpVec all(m + 1);
  for (std::size_t i = 0; i <= m; ++i) all.set(i, 1);
  gens.push_back(SparsePoly::monomial(all, Rat(1)) - SparsePoly::constant(m + 1, Rat(1)));
  return gens;
}

Krylov krylov_of(Quotient& quo, const std::vector<Rat>& form) {
  const Vec one = quo.coords(SparsePoly::constant(quo.vars(), Rat(1)));
  return Krylov(quo.dim(), [&](const Vec& v) { return quo.multiply(form, v); }, one);
}

std::vector<Rat> unit_form(std::size_t n, std::size_t i) {
  std::vector<Rat> f(n, Rat(0));
  f[i] = 1;
  return f;
}

bool squarefree(const UniPoly<Rat>& p) { return p.degree() <= 0 || gcd(p, p.derivative()).degree() == 0; }

// Adds the squarefree part of every non-squarefree coordinate minimal
// polynomial; the result is the radical (Seidenberg).
std::vector<SparsePoly> radical_generators(Quotient& quo, std::vector<SparsePoly> gens) {
  const std::size_t n = quo.vars();
  for (std::size_t i = 0; i < n; ++i) {
    const auto mp = krylov_of(quo, unit_form(n, i)).minpoly();
    if (squarefree(mp)) continue;
    const auto sf = squarefree_part(mp);
    SparsePoly p(n);
    for (std::size_t k = 0; k < sf.coeffs().size(); ++k) {
      p += SparsePoly::monomial(ExpVec::unit(n, i, static_cast<std::uint32_t>(k)), sf.coeff(k));
    }
    gens.push_back(std::move(p));
  }
  return gens;
}

}  // namespace

ZeroDimSolution solve_toric_0d_rat(const std::vector<SparsePoly>& system, const std::vector<Integer>& lambda) {
  const std::size_t m = system.size();
  if (m == 0) throw InputError("empty system");
  if (lambda.size() != m) throw InputError("separating form has the wrong length");
  auto gens = saturated_generators(system);
  std::vector<Rat> form(m + 1, Rat(0));
  for (std::size_t i = 0; i < m; ++i) form[i] = Rat(lambda[i]);

  ZeroDimSolution out;
  auto quo = std::make_unique<Quotient>(gens);
  out.multiplicity_count = quo->dim();
  auto kr = std::make_unique<Krylov>(krylov_of(*quo, form));
  if (static_cast<std::size_t>(kr->minpoly().degree()) != quo->dim() || !squarefree(kr->minpoly())) {
    gens = radical_generators(*quo, std::move(gens));
    quo = std::make_unique<Quotient>(gens);
    out.multiplicity_warning = quo->dim() < out.multiplicity_count;
    kr = std::make_unique<Krylov>(krylov_of(*quo, form));
    if (static_cast<std::size_t>(kr->minpoly().degree()) != quo->dim()) {
      throw GenericityError(GenericityIssue::kLambdaNotSeparating,
                            "minimal polynomial of degree " + std::to_string(kr->minpoly().degree()) +
                                " for " + std::to_string(quo->dim()) + " roots");
    }
  }
  out.q = kr->minpoly();
  for (std::size_t j = 0; j < m; ++j) {
    auto c = kr->express(quo->coords(SparsePoly::variable(m + 1, j)));
    if (!c) throw MathError("coordinate outside the Krylov span");
    out.params.push_back(UniPoly<Rat>(std::move(*c)));
  }
  return out;
}

GeometricResolution solve_toric_0d(const std::vector<SparsePoly>& system, const std::vector<Integer>& lambda) {
  const auto z = solve_toric_0d_rat(system, lambda);
  const std::size_t m = system.size();
  auto lift = [m](const UniPoly<Rat>& p) {
    return p.map<RatFun>([m](const Rat& c) { return RatFun(m, c); });
  };
  GeometricResolution r;
  r.ambient = m;
  for (std::size_t j = 0; j < m; ++j) r.dependent_vars.push_back(j);
  r.lambda = lambda;
  r.q = lift(z.q);
  for (const auto& p : z.params) r.params.push_back(lift(p));
  r.multiplicity_warning = z.multiplicity_warning;
  return r;
}

std::size_t count_toric_roots(const std::vector<SparsePoly>& system) {
  if (system.empty()) throw InputError("empty system");
  auto gens = saturated_generators(system);
  Quotient quo(gens);
  Quotient rad(radical_generators(quo, gens));
  return rad.dim();
}

}  // namespace toric
