#include "toric/series.hpp"

#include <algorithm>

#include "toric/error.hpp"

namespace toric {

namespace {

// Degree-d monomials in t variables, graded-lex descending.
std::vector<ExpVec> monomials_of_degree(std::size_t t, std::size_t d) {
  std::vector<ExpVec> out;
  ExpVec e(t);
  // First variable takes the largest exponent first.
  auto rec = [&](auto&& self, std::size_t i, std::size_t left) -> void {
    if (i + 1 == t) {
      e.set(i, static_cast<std::uint32_t>(left));
      out.push_back(e);
      return;
    }
    for (std::size_t k = left + 1; k-- > 0;) {
      e.set(i, static_cast<std::uint32_t>(k));
      self(self, i + 1, left - k);
    }
    e.set(i, 0);
  };
  if (t == 0) {
    if (d == 0) out.push_back(e);
    return out;
  }
  rec(rec, 0, d);
  return out;
}

}  // namespace

SeriesRing::SeriesRing(std::size_t vars, std::size_t max_precision)
    : SeriesRing(vars, {}, std::vector<Rat>(vars, Rat(0)), max_precision) {}

SeriesRing::SeriesRing(std::size_t ambient, std::vector<std::size_t> vars, std::vector<Rat> shift,
                       std::size_t max_precision)
    : t_(shift.size()), kappa_(max_precision), ambient_(ambient), var_indices_(std::move(vars)),
      shift_(std::move(shift)) {
  if (var_indices_.empty()) {
    for (std::size_t i = 0; i < t_; ++i) var_indices_.push_back(i);
  }
  if (var_indices_.size() != t_) throw InputError("series variables and shift differ in length");
  for (auto v : var_indices_) {
    if (v >= ambient_) throw InputError("series variable outside the ambient ring");
  }
  std::size_t table_size = 0;
  for (std::size_t d = 0; d <= kappa_; ++d) {
    monomials_.push_back(monomials_of_degree(t_, d));
    index_.emplace_back();
    for (std::size_t k = 0; k < monomials_[d].size(); ++k) index_[d].emplace(monomials_[d][k], k);
  }
  for (std::size_t i = 0; i <= kappa_; ++i) {
    for (std::size_t j = 0; i + j <= kappa_; ++j) table_size += width(i) * width(j);
  }
  if (table_size > (std::size_t{1} << 26)) {
    throw InputError("series precision " + std::to_string(kappa_) + " in " + std::to_string(t_) +
                     " variables is too large");
  }
  tables_.resize(kappa_ + 1);
  for (std::size_t i = 0; i <= kappa_; ++i) {
    tables_[i].resize(kappa_ + 1 - i);
    for (std::size_t j = 0; i + j <= kappa_; ++j) {
      auto& tab = tables_[i][j];
      tab.reserve(width(i) * width(j));
      for (const auto& u : monomials_[i]) {
        for (const auto& v : monomials_[j]) tab.push_back(static_cast<std::uint32_t>(index_[i + j].at(u + v)));
      }
    }
  }
}

std::size_t SeriesRing::index(const ExpVec& e) const { return index_.at(e.degree()).at(e); }

TruncSeries::TruncSeries(std::shared_ptr<const SeriesRing> ring, std::size_t precision)
    : ring_(std::move(ring)), prec_(precision) {
  if (prec_ > ring_->max_precision()) throw InputError("precision exceeds the series ring");
  comp_.resize(prec_ + 1);
  for (std::size_t d = 0; d <= prec_; ++d) comp_[d].assign(ring_->width(d), Rat(0));
}

TruncSeries TruncSeries::constant(std::shared_ptr<const SeriesRing> ring, std::size_t precision, const Rat& c) {
  TruncSeries s(std::move(ring), precision);
  s.comp_[0][0] = c;
  return s;
}

TruncSeries TruncSeries::variable(std::shared_ptr<const SeriesRing> ring, std::size_t precision, std::size_t i) {
  TruncSeries s(std::move(ring), precision);
  if (precision >= 1) s.set_coeff(ExpVec::unit(s.vars(), i), Rat(1));
  return s;
}

TruncSeries TruncSeries::expand(std::shared_ptr<const SeriesRing> ring, std::size_t precision, const SparsePoly& p) {
  const std::size_t t = ring->vars();
  const auto& vars = ring->var_indices();
  const auto& shift = ring->shift();
  if (p.ambient() != ring->ambient()) throw InputError("expansion in the wrong number of variables");
  for (auto v : p.support_vars()) {
    if (std::find(vars.begin(), vars.end(), v) == vars.end()) {
      throw InputError("X" + std::to_string(v + 1) + " is not a series variable");
    }
  }
  // Powers of (shift_i + Z_i) on demand.
  std::vector<std::vector<TruncSeries>> powers(t);
  auto power = [&](std::size_t i, std::uint32_t k) -> const TruncSeries& {
    auto& pw = powers[i];
    if (pw.empty()) pw.push_back(constant(ring, precision, Rat(1)));
    while (pw.size() <= k) {
      TruncSeries base = variable(ring, precision, i);
      base.comp_[0][0] = shift[i];
      pw.push_back(pw.back() * base);
    }
    return pw[k];
  };
  TruncSeries out(ring, precision);
  for (const auto& [e, c] : p.terms()) {
    TruncSeries term = constant(ring, precision, c);
    for (std::size_t i = 0; i < t; ++i) {
      if (e[vars[i]] > 0) term = term * power(i, e[vars[i]]);
    }
    out += term;
  }
  return out;
}

Rat TruncSeries::coeff(const ExpVec& e) const {
  if (e.degree() > prec_) return Rat(0);
  return comp_[e.degree()][ring_->index(e)];
}

void TruncSeries::set_coeff(const ExpVec& e, const Rat& c) {
  if (e.degree() > prec_) throw InputError("coefficient beyond the precision");
  comp_[e.degree()][ring_->index(e)] = c;
}

bool TruncSeries::is_zero() const { return valuation() > prec_; }

std::size_t TruncSeries::valuation() const {
  for (std::size_t d = 0; d <= prec_; ++d) {
    for (const auto& c : comp_[d]) {
      if (sgn(c) != 0) return d;
    }
  }
  return prec_ + 1;
}

TruncSeries TruncSeries::with_precision(std::size_t p) const {
  TruncSeries s(ring_, p);
  for (std::size_t d = 0; d <= std::min(p, prec_); ++d) s.comp_[d] = comp_[d];
  return s;
}

SparsePoly TruncSeries::to_poly() const {
  std::vector<SparsePoly::Term> terms;
  for (std::size_t d = 0; d <= prec_; ++d) {
    for (std::size_t k = 0; k < comp_[d].size(); ++k) {
      if (sgn(comp_[d][k]) != 0) terms.emplace_back(ring_->monomials(d)[k], comp_[d][k]);
    }
  }
  return SparsePoly::from_terms(vars(), std::move(terms));
}

SparsePoly TruncSeries::to_ambient_poly() const {
  return unshift(to_poly(), ring_->shift(), ring_->var_indices(), ring_->ambient());
}

void TruncSeries::check_compatible(const TruncSeries& o) const {
  if (ring_ == o.ring_) return;
  if (ring_->var_indices() != o.ring_->var_indices() || ring_->shift() != o.ring_->shift() ||
      ring_->ambient() != o.ring_->ambient()) {
    throw InputError("series in different variables");
  }
}

TruncSeries TruncSeries::operator-() const {
  TruncSeries s = *this;
  for (auto& comp : s.comp_) {
    for (auto& c : comp) c = -c;
  }
  return s;
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
  check_compatible(o);
  if (o.prec_ < prec_) {
    prec_ = o.prec_;
    comp_.resize(prec_ + 1);
  }
  for (std::size_t d = 0; d <= prec_; ++d) {
    for (std::size_t k = 0; k < comp_[d].size(); ++k) {
      if (sgn(o.comp_[d][k]) != 0) comp_[d][k] += o.comp_[d][k];
    }
  }
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o) {
  check_compatible(o);
  if (o.prec_ < prec_) {
    prec_ = o.prec_;
    comp_.resize(prec_ + 1);
  }
  for (std::size_t d = 0; d <= prec_; ++d) {
    for (std::size_t k = 0; k < comp_[d].size(); ++k) {
      if (sgn(o.comp_[d][k]) != 0) comp_[d][k] -= o.comp_[d][k];
    }
  }
  return *this;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  a.check_compatible(b);
  const std::size_t p = std::min(a.prec_, b.prec_);
  const SeriesRing& ring = a.ring_->max_precision() >= b.ring_->max_precision() ? *a.ring_ : *b.ring_;
  TruncSeries out(a.ring_->max_precision() >= b.ring_->max_precision() ? a.ring_ : b.ring_, p);
  std::vector<std::size_t> nz_a, nz_b;
  for (std::size_t d = 0; d <= p; ++d) {
    if (std::any_of(a.comp_[d].begin(), a.comp_[d].end(), [](const Rat& x) { return sgn(x) != 0; })) {
      nz_a.push_back(d);
    }
    if (std::any_of(b.comp_[d].begin(), b.comp_[d].end(), [](const Rat& x) { return sgn(x) != 0; })) {
      nz_b.push_back(d);
    }
  }
  Rat prod;
  for (auto i : nz_a) {
    for (auto j : nz_b) {
      if (i + j > p) break;
      const auto& tab = ring.product_table(i, j);
      const auto& ai = a.comp_[i];
      const auto& bj = b.comp_[j];
      auto& c = out.comp_[i + j];
      const std::size_t wj = bj.size();
      for (std::size_t u = 0; u < ai.size(); ++u) {
        if (sgn(ai[u]) == 0) continue;
        for (std::size_t v = 0; v < wj; ++v) {
          if (sgn(bj[v]) == 0) continue;
          mpq_mul(prod.get_mpq_t(), ai[u].get_mpq_t(), bj[v].get_mpq_t());
          auto& dst = c[tab[u * wj + v]];
          mpq_add(dst.get_mpq_t(), dst.get_mpq_t(), prod.get_mpq_t());
        }
      }
    }
  }
  return out;
}

TruncSeries operator*(TruncSeries a, const Rat& c) {
  for (auto& comp : a.comp_) {
    for (auto& x : comp) {
      if (sgn(x) != 0) x *= c;
    }
  }
  return a;
}

bool operator==(const TruncSeries& a, const TruncSeries& b) {
  return a.prec_ == b.prec_ && a.vars() == b.vars() && a.comp_ == b.comp_;
}

TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b) {
  if (a.precision() != b.precision()) throw InputError("series of different precision");
  return a * b;
}

TruncSeries series_inv(const TruncSeries& a) {
  if (sgn(a.constant_term()) == 0) throw MathError("non-unit series");
  const std::size_t target = a.precision();
  TruncSeries u = TruncSeries::constant(a.ring(), 0, Rat(1) / a.constant_term());
  std::size_t p = 0;
  while (p < target) {
    p = std::min(2 * p + 1, target);
    TruncSeries up = u.with_precision(p);
    const TruncSeries e = TruncSeries::constant(a.ring(), p, Rat(1)) - a.with_precision(p) * up;
    u = up + up * e;
  }
  return u;
}

SparsePoly unshift(const SparsePoly& p, const std::vector<Rat>& shift, const std::vector<std::size_t>& vars,
                   std::size_t ambient) {
  if (shift.size() != vars.size() || p.ambient() != vars.size()) {
    throw InputError("unshift in the wrong number of variables");
  }
  std::vector<std::vector<SparsePoly>> powers(vars.size());
  SparsePoly out(ambient);
  for (const auto& [e, c] : p.terms()) {
    SparsePoly term = SparsePoly::constant(ambient, c);
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (e[i] == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(SparsePoly::constant(ambient, Rat(1)));
      const SparsePoly base = SparsePoly::variable(ambient, vars[i]) - SparsePoly::constant(ambient, shift[i]);
      while (pw.size() <= e[i]) pw.push_back(pw.back() * base);
      term = term * pw[e[i]];
    }
    out += term;
  }
  return out;
}

}  // namespace toric
