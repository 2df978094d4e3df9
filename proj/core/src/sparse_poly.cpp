#include "toric/sparse_poly.hpp"

#include <algorithm>

#include "toric/error.hpp"

namespace toric {

namespace {

// Sorts by descending grlex, merges equal exponents, drops zeros.
std::vector<SparsePoly::Term> canonicalize(std::vector<SparsePoly::Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return grlex_compare(a.first, b.first) > 0; });
  std::vector<SparsePoly::Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().first == t.first) {
      out.back().second += t.second;
    } else {
      if (!out.empty() && sgn(out.back().second) == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && sgn(out.back().second) == 0) out.pop_back();
  return out;
}

void check_ambient(const SparsePoly& a, const SparsePoly& b) {
  if (a.ambient() != b.ambient()) throw InputError("polynomials over different variable sets");
}

}  // namespace

SparsePoly SparsePoly::constant(std::size_t ambient, const Rat& c) {
  SparsePoly p(ambient);
  if (sgn(c) != 0) p.terms_.emplace_back(ExpVec(ambient), c);
  return p;
}

SparsePoly SparsePoly::variable(std::size_t ambient, std::size_t index) {
  if (index >= ambient) throw InputError("variable index out of range");
  return monomial(ExpVec::unit(ambient, index), Rat(1));
}

SparsePoly SparsePoly::monomial(ExpVec e, const Rat& c) {
  SparsePoly p(e.size());
  if (sgn(c) != 0) p.terms_.emplace_back(std::move(e), c);
  return p;
}

SparsePoly SparsePoly::from_terms(std::size_t ambient, std::vector<Term> terms) {
  for (const auto& t : terms) {
    if (t.first.size() != ambient) throw InputError("exponent vector has wrong arity");
  }
  SparsePoly p(ambient);
  p.terms_ = canonicalize(std::move(terms));
  return p;
}

bool SparsePoly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().first.is_zero());
}

Rat SparsePoly::constant_term() const {
  if (!terms_.empty() && terms_.back().first.is_zero()) return terms_.back().second;
  return Rat(0);
}

Rat SparsePoly::coeff(const ExpVec& e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e, [](const Term& t, const ExpVec& key) {
    return grlex_compare(t.first, key) > 0;
  });
  if (it != terms_.end() && it->first == e) return it->second;
  return Rat(0);
}

std::uint32_t SparsePoly::total_degree() const {
  return terms_.empty() ? 0 : terms_.front().first.degree();
}

std::uint32_t SparsePoly::degree_in(std::size_t var) const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.first[var]);
  return d;
}

std::vector<std::size_t> SparsePoly::support_vars() const {
  std::vector<std::size_t> vars;
  for (std::size_t i = 0; i < n_; ++i) {
    if (degree_in(i) > 0) vars.push_back(i);
  }
  return vars;
}

std::vector<ExpVec> SparsePoly::support() const {
  std::vector<ExpVec> s;
  s.reserve(terms_.size());
  for (const auto& t : terms_) s.push_back(t.first);
  return s;
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) {
    *this = o;
    return *this;
  }
  check_ambient(*this, o);
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    int c = a == terms_.end() ? -1 : b == o.terms_.end() ? 1 : grlex_compare(a->first, b->first);
    if (c > 0) {
      out.push_back(std::move(*a++));
    } else if (c < 0) {
      out.push_back(*b++);
    } else {
      a->second += b->second;
      if (sgn(a->second) != 0) out.push_back(std::move(*a));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) { return *this += -o; }

SparsePoly& SparsePoly::operator*=(const Rat& c) {
  if (sgn(c) == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.second *= c;
  }
  return *this;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  if (a.is_zero()) return SparsePoly(std::max(a.n_, b.n_));
  if (b.is_zero()) return SparsePoly(a.n_);
  check_ambient(a, b);
  if (a.size() == 1) return b.mul_term(a.terms_[0].first, a.terms_[0].second);
  if (b.size() == 1) return a.mul_term(b.terms_[0].first, b.terms_[0].second);
  std::vector<SparsePoly::Term> prod;
  prod.reserve(a.size() * b.size());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) prod.emplace_back(ea + eb, ca * cb);
  }
  SparsePoly r(a.n_);
  r.terms_ = canonicalize(std::move(prod));
  return r;
}

SparsePoly SparsePoly::mul_term(const ExpVec& e, const Rat& c) const {
  SparsePoly r(n_);
  if (sgn(c) == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& [et, ct] : terms_) r.terms_.emplace_back(et + e, ct * c);
  return r;
}

SparsePoly SparsePoly::pow(unsigned k) const {
  SparsePoly result = constant(n_, Rat(1));
  SparsePoly base = *this;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

bool operator==(const SparsePoly& a, const SparsePoly& b) {
  if (a.terms_.empty() && b.terms_.empty()) return true;
  return a.n_ == b.n_ && a.terms_ == b.terms_;
}

SparsePoly SparsePoly::eval_partial(const std::map<std::size_t, Rat>& bindings, bool reindex) const {
  for (const auto& [var, value] : bindings) {
    if (var >= n_) throw InputError("binding for a variable index out of range");
  }
  std::vector<std::size_t> survivors;
  for (std::size_t i = 0; i < n_; ++i) {
    if (!bindings.count(i)) survivors.push_back(i);
  }
  const std::size_t out_n = reindex ? survivors.size() : n_;
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [e, c] : terms_) {
    Rat coeff = c;
    for (const auto& [var, value] : bindings) {
      if (e[var] == 0) continue;
      Rat p;
      mpz_pow_ui(p.get_num_mpz_t(), value.get_num_mpz_t(), e[var]);
      mpz_pow_ui(p.get_den_mpz_t(), value.get_den_mpz_t(), e[var]);
      coeff *= p;
    }
    if (sgn(coeff) == 0) continue;
    std::vector<std::uint32_t> ne(out_n, 0);
    if (reindex) {
      for (std::size_t k = 0; k < survivors.size(); ++k) ne[k] = e[survivors[k]];
    } else {
      for (std::size_t i = 0; i < n_; ++i) ne[i] = bindings.count(i) ? 0 : e[i];
    }
    out.emplace_back(ExpVec(std::move(ne)), std::move(coeff));
  }
  return from_terms(out_n, std::move(out));
}

Rat SparsePoly::eval(const std::vector<Rat>& point) const {
  if (point.size() != n_) throw InputError("evaluation point has wrong arity");
  Rat acc = 0;
  for (const auto& [e, c] : terms_) {
    Rat m = c;
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::uint32_t k = 0; k < e[i]; ++k) m *= point[i];
    }
    acc += m;
  }
  return acc;
}

SparsePoly SparsePoly::derivative(std::size_t var) const {
  std::vector<Term> out;
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    ExpVec d = e;
    d.set(var, e[var] - 1);
    out.emplace_back(std::move(d), c * Rat(e[var]));
  }
  return from_terms(n_, std::move(out));
}

SparsePoly SparsePoly::select_vars(const std::vector<std::size_t>& keep) const {
  std::vector<bool> kept(n_, false);
  for (auto k : keep) kept.at(k) = true;
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < n_; ++i) {
      if (!kept[i] && e[i] != 0) throw InputError("select_vars would drop an occurring variable");
    }
    std::vector<std::uint32_t> ne(keep.size());
    for (std::size_t k = 0; k < keep.size(); ++k) ne[k] = e[keep[k]];
    out.emplace_back(ExpVec(std::move(ne)), c);
  }
  return from_terms(keep.size(), std::move(out));
}

SparsePoly SparsePoly::remap_vars(const std::vector<std::size_t>& mapping, std::size_t new_ambient) const {
  if (mapping.size() != n_) throw InputError("variable mapping has wrong length");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [e, c] : terms_) {
    std::vector<std::uint32_t> ne(new_ambient, 0);
    for (std::size_t i = 0; i < n_; ++i) {
      if (e[i] == 0) continue;
      if (mapping[i] >= new_ambient) throw InputError("variable mapping out of range");
      ne[mapping[i]] += e[i];
    }
    out.emplace_back(ExpVec(std::move(ne)), c);
  }
  return from_terms(new_ambient, std::move(out));
}

std::vector<SparsePoly> SparsePoly::coefficients_in(std::size_t var) const {
  std::vector<std::vector<Term>> buckets(degree_in(var) + 1);
  for (const auto& [e, c] : terms_) {
    ExpVec r = e;
    r.set(var, 0);
    buckets[e[var]].emplace_back(std::move(r), c);
  }
  std::vector<SparsePoly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) {
    // Terms stay in relative grlex order only up to the removed variable;
    // from_terms re-sorts.
    out.push_back(from_terms(n_, std::move(b)));
  }
  return out;
}

SparsePoly SparsePoly::from_coefficients_in(std::size_t var, const std::vector<SparsePoly>& coeffs) {
  std::size_t n = 0;
  for (const auto& c : coeffs) n = std::max(n, c.ambient());
  std::vector<Term> out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    for (const auto& [e, c] : coeffs[k].terms()) {
      ExpVec r = e;
      r.set(var, e[var] + static_cast<std::uint32_t>(k));
      out.emplace_back(std::move(r), c);
    }
  }
  return from_terms(n, std::move(out));
}

Rat SparsePoly::rational_content() const {
  if (terms_.empty()) return Rat(0);
  Integer g = 0, l = 1;
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.second.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.second.get_den_mpz_t());
  }
  return make_rat(abs(g), l);
}

std::pair<Rat, SparsePoly> SparsePoly::integer_primitive() const {
  if (terms_.empty()) return {Rat(0), *this};
  Rat c = rational_content();
  if (sgn(leading_coeff()) < 0) c = -c;
  if (c == 1) return {c, *this};
  SparsePoly p = *this;
  const Rat inv = 1 / c;
  for (auto& t : p.terms_) t.second *= inv;
  return {c, p};
}

std::optional<SparsePoly> try_divide(const SparsePoly& a, const SparsePoly& b) {
  if (b.is_zero()) throw MathError("division by zero polynomial");
  if (a.is_zero()) return SparsePoly(a.ambient());
  check_ambient(a, b);
  const auto& [lb, cb] = b.leading_term();
  if (b.is_monomial()) {
    std::vector<SparsePoly::Term> out;
    out.reserve(a.size());
    const Rat inv = 1 / cb;
    for (const auto& [e, c] : a.terms()) {
      if (!lb.divides(e)) return std::nullopt;
      out.emplace_back(e - lb, c * inv);
    }
    return SparsePoly::from_terms(a.ambient(), std::move(out));
  }
  SparsePoly rem = a;
  std::vector<SparsePoly::Term> quo;
  const Rat inv = 1 / cb;
  while (!rem.is_zero()) {
    const auto& [lr, cr] = rem.leading_term();
    if (!lb.divides(lr) || lr.degree() < lb.degree()) return std::nullopt;
    ExpVec e = lr - lb;
    Rat c = cr * inv;
    rem -= b.mul_term(e, c);
    quo.emplace_back(std::move(e), std::move(c));
  }
  return SparsePoly::from_terms(a.ambient(), std::move(quo));
}

SparsePoly divide_exact(const SparsePoly& a, const SparsePoly& b) {
  auto q = try_divide(a, b);
  if (!q) throw MathError("inexact polynomial division");
  return *std::move(q);
}

std::string to_string(const SparsePoly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const bool neg = sgn(c) < 0;
    const Rat mag = abs(c);
    if (neg) {
      s += '-';
    } else if (!first) {
      s += '+';
    }
    first = false;
    bool wrote = false;
    if (mag != 1 || e.is_zero()) {
      s += to_string(mag);
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) s += '*';
      s += 'X' + std::to_string(i + 1);
      if (e[i] > 1) s += '^' + std::to_string(e[i]);
      wrote = true;
    }
  }
  return s;
}

}  // namespace toric
