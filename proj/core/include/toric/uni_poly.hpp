#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "toric/error.hpp"
#include "toric/rational.hpp"

namespace toric {

// Coefficient adapters. A coefficient type F must provide is_zero(F),
// zero_like(F), one_like(F), F * Rat and the ring operators; division needs
// inverse(F) as well. "like" carries context (ambient variables, series
// precision) that a bare zero cannot know.
inline bool is_zero(const Rat& r) { return sgn(r) == 0; }
inline Rat zero_like(const Rat&) { return Rat(0); }
inline Rat one_like(const Rat&) { return Rat(1); }
inline Rat inverse(const Rat& r) {
  if (sgn(r) == 0) throw MathError("division by zero");
  return Rat(1) / r;
}

namespace detail {
// Unqualified so that argument-dependent lookup finds the adapter of any
// coefficient type, including ones declared after this header.
template <class F>
bool coeff_is_zero(const F& x) {
  return is_zero(x);
}
}  // namespace detail

/// Dense univariate polynomial in Y, lowest degree first, with no trailing
/// zero coefficients. The zero polynomial has no coefficients.
template <class F>
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }

  /// c * Y^k
  static UniPoly monomial(const F& c, std::size_t k) {
    if (detail::coeff_is_zero(c)) return {};
    std::vector<F> v(k + 1, zero_like(c));
    v[k] = c;
    return UniPoly(std::move(v));
  }

  bool is_zero() const noexcept { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  const std::vector<F>& coeffs() const noexcept { return c_; }
  const F& coeff(std::size_t i) const { return c_.at(i); }
  const F& lead() const { return c_.back(); }

  /// Coefficient of Y^i, or zero_like(like) past the degree.
  F coeff_or(std::size_t i, const F& like) const {
    return i < c_.size() ? c_[i] : zero_like(like);
  }

  UniPoly operator-() const {
    UniPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  UniPoly& operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) {
      const std::size_t old = c_.size();
      c_.resize(o.c_.size(), zero_like(o.c_.front()));
      for (std::size_t i = old; i < c_.size(); ++i) c_[i] = zero_like(o.c_[i]);
    }
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  UniPoly& operator-=(const UniPoly& o) { return *this += -o; }
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }

  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<F> r(a.c_.size() + b.c_.size() - 1, zero_like(a.c_.front()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (detail::coeff_is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return UniPoly(std::move(r));
  }
  friend UniPoly operator*(UniPoly a, const F& s) {
    for (auto& x : a.c_) x = x * s;
    a.trim();
    return a;
  }
  friend UniPoly operator*(UniPoly a, const Rat& s)
    requires(!std::is_same_v<F, Rat>)
  {
    for (auto& x : a.c_) x = x * s;
    a.trim();
    return a;
  }

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

  UniPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<F> r;
    r.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i] * Rat(static_cast<long>(i)));
    return UniPoly(std::move(r));
  }

  /// Horner evaluation at a coefficient-ring element.
  F operator()(const F& y) const {
    if (c_.empty()) return zero_like(y);
    F acc = c_.back();
    for (std::size_t i = c_.size() - 1; i-- > 0;) acc = acc * y + c_[i];
    return acc;
  }

  /// Applies f to every coefficient.
  template <class G, class Fn>
  UniPoly<G> map(Fn&& f) const {
    std::vector<G> r;
    r.reserve(c_.size());
    for (const auto& x : c_) r.push_back(f(x));
    return UniPoly<G>(std::move(r));
  }

 private:
  void trim() {
    while (!c_.empty() && detail::coeff_is_zero(c_.back())) c_.pop_back();
  }

  std::vector<F> c_;
};

/// a = quotient * b + remainder with deg(remainder) < deg(b).
/// Throws MathError("zero divisor") when b is zero.
template <class F>
std::pair<UniPoly<F>, UniPoly<F>> divrem(const UniPoly<F>& a, const UniPoly<F>& b) {
  if (b.is_zero()) throw MathError("zero divisor");
  if (a.degree() < b.degree()) return {UniPoly<F>{}, a};
  const F inv_lead = inverse(b.lead());
  std::vector<F> rem = a.coeffs();
  const std::size_t db = static_cast<std::size_t>(b.degree());
  std::vector<F> quo(rem.size() - db, zero_like(b.lead()));
  for (std::size_t k = rem.size(); k-- > db;) {
    if (is_zero(rem[k])) continue;
    F f = rem[k] * inv_lead;
    for (std::size_t i = 0; i <= db; ++i) rem[k - db + i] -= f * b.coeff(i);
    quo[k - db] = std::move(f);
  }
  rem.resize(db);
  return {UniPoly<F>(std::move(quo)), UniPoly<F>(std::move(rem))};
}

/// Remainder modulo a monic polynomial; needs no inverses, so it also works
/// over coefficient rings such as truncated series.
template <class F>
UniPoly<F> rem_monic(const UniPoly<F>& a, const UniPoly<F>& q) {
  if (q.is_zero()) throw MathError("zero divisor");
  if (a.degree() < q.degree()) return a;
  std::vector<F> rem = a.coeffs();
  const std::size_t dq = static_cast<std::size_t>(q.degree());
  for (std::size_t k = rem.size(); k-- > dq;) {
    if (is_zero(rem[k])) continue;
    const F f = rem[k];
    for (std::size_t i = 0; i < dq; ++i) rem[k - dq + i] -= f * q.coeff(i);
    rem[k] = zero_like(f);
  }
  rem.resize(dq);
  return UniPoly<F>(std::move(rem));
}

template <class F>
UniPoly<F> mulmod(const UniPoly<F>& a, const UniPoly<F>& b, const UniPoly<F>& q) {
  return rem_monic(a * b, q);
}

template <class F>
UniPoly<F> powmod(UniPoly<F> base, unsigned k, const UniPoly<F>& q, const F& like) {
  UniPoly<F> result = rem_monic(UniPoly<F>({one_like(like)}), q);
  base = rem_monic(base, q);
  while (k > 0) {
    if (k & 1U) result = mulmod(result, base, q);
    k >>= 1U;
    if (k > 0) base = mulmod(base, base, q);
  }
  return result;
}

template <class F>
UniPoly<F> monic(const UniPoly<F>& a) {
  if (a.is_zero()) return a;
  return a * inverse(a.lead());
}

/// Monic gcd; gcd(a, 0) is a made monic. Throws when both are zero.
template <class F>
UniPoly<F> gcd(UniPoly<F> a, UniPoly<F> b) {
  if (a.is_zero() && b.is_zero()) throw MathError("gcd of two zero polynomials");
  while (!b.is_zero()) {
    auto r = divrem(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

/// Squarefree part p / gcd(p, p'), monic.
template <class F>
UniPoly<F> squarefree_part(const UniPoly<F>& p) {
  if (p.degree() <= 0) return monic(p);
  const auto g = gcd(p, p.derivative());
  return monic(divrem(p, g).first);
}

/// s with s*a == g (mod b) where g = gcd(a, b) monic; returns {g, s}.
template <class F>
std::pair<UniPoly<F>, UniPoly<F>> half_gcdex(UniPoly<F> a, UniPoly<F> b, const F& like) {
  UniPoly<F> s0({one_like(like)}), s1;
  while (!b.is_zero()) {
    auto [quo, rem] = divrem(a, b);
    auto s2 = s0 - quo * s1;
    a = std::move(b);
    b = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (a.is_zero()) return {a, s0};
  const F inv = inverse(a.lead());
  return {a * inv, s0 * inv};
}

/// p(r(Y)) mod q for monic q.
template <class F>
UniPoly<F> compose_mod(const UniPoly<F>& p, const UniPoly<F>& r, const UniPoly<F>& q) {
  if (p.is_zero()) return {};
  UniPoly<F> acc({p.lead()});
  for (std::size_t i = static_cast<std::size_t>(p.degree()); i-- > 0;) {
    acc = mulmod(acc, r, q) + UniPoly<F>({p.coeff(i)});
  }
  return rem_monic(acc, q);
}

}  // namespace toric
