#pragma once

#include <string>

#include "toric/sparse_poly.hpp"

namespace toric {

/// Reduced fraction num/den of polynomials over Q.
///
/// Canonical form: gcd(num, den) is constant and den has coprime integer
/// coefficients with a positive graded-lex leading coefficient; any rational
/// content lives in num. Equal fractions therefore have identical
/// representations.
class RatFun {
 public:
  RatFun() : RatFun(SparsePoly()) {}
  explicit RatFun(SparsePoly p);
  RatFun(std::size_t ambient, const Rat& c) : RatFun(SparsePoly::constant(ambient, c)) {}

  /// Reduces and normalizes num/den. Throws MathError("zero denominator").
  static RatFun normalize(const SparsePoly& num, const SparsePoly& den);

  const SparsePoly& num() const noexcept { return num_; }
  const SparsePoly& den() const noexcept { return den_; }
  std::size_t ambient() const noexcept { return num_.ambient(); }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const noexcept { return den_.is_constant(); }
  bool is_constant() const noexcept { return num_.is_constant() && den_.is_constant(); }

  RatFun operator-() const;
  RatFun& operator+=(const RatFun& o);
  RatFun& operator-=(const RatFun& o);
  RatFun& operator*=(const RatFun& o);
  friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
  friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
  friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
  friend RatFun operator*(RatFun a, const Rat& c);
  friend RatFun operator/(const RatFun& a, const RatFun& b);

  friend bool operator==(const RatFun& a, const RatFun& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

  /// Value at a point; throws MathError when the denominator vanishes.
  Rat eval(const std::vector<Rat>& point) const;

 private:
  RatFun(SparsePoly num, SparsePoly den, int) : num_(std::move(num)), den_(std::move(den)) {}

  SparsePoly num_;
  SparsePoly den_;
};

inline bool is_zero(const RatFun& r) { return r.is_zero(); }
inline RatFun zero_like(const RatFun& r) { return RatFun(SparsePoly(r.ambient())); }
inline RatFun one_like(const RatFun& r) { return RatFun(r.ambient(), Rat(1)); }
RatFun inverse(const RatFun& r);

/// "num" when den = 1, otherwise "(num)/(den)".
std::string to_string(const RatFun& r);

}  // namespace toric
