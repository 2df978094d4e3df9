#include "toric/rat_fun.hpp"

#include "toric/error.hpp"

namespace toric {

namespace {

// Moves the rational content and sign of den into num.
std::pair<SparsePoly, SparsePoly> fix_denominator(SparsePoly num, const SparsePoly& den) {
  auto [c, primitive] = den.integer_primitive();
  if (c != 1) num *= Rat(1) / c;
  return {std::move(num), std::move(primitive)};
}

}  // namespace

RatFun::RatFun(SparsePoly p) : num_(std::move(p)), den_(SparsePoly::constant(num_.ambient(), Rat(1))) {}

RatFun RatFun::normalize(const SparsePoly& num, const SparsePoly& den) {
  if (den.is_zero()) throw MathError("zero denominator");
  if (num.is_zero()) return RatFun(SparsePoly(std::max(num.ambient(), den.ambient())));
  if (den.is_constant()) return RatFun(num * (Rat(1) / den.constant_term()));
  const SparsePoly g = gcd(num, den);
  if (g.is_constant()) {
    auto [n, d] = fix_denominator(num, den);
    return RatFun(std::move(n), std::move(d), 0);
  }
  auto [n, d] = fix_denominator(divide_exact(num, g), divide_exact(den, g));
  if (d.is_constant()) return RatFun(n * (Rat(1) / d.constant_term()));
  return RatFun(std::move(n), std::move(d), 0);
}

RatFun RatFun::operator-() const { return RatFun(-num_, den_, 0); }

RatFun& RatFun::operator+=(const RatFun& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (is_polynomial() && o.is_polynomial()) {
    num_ += o.num_;
    if (num_.is_zero()) den_ = SparsePoly::constant(num_.ambient(), Rat(1));
    return *this;
  }
  if (den_ == o.den_) return *this = normalize(num_ + o.num_, den_);
  if (o.is_polynomial()) return *this = RatFun(num_ + o.num_ * den_, den_, 0);
  if (is_polynomial()) return *this = RatFun(num_ * o.den_ + o.num_, o.den_, 0);
  const SparsePoly g = gcd(den_, o.den_);
  const SparsePoly a = g.is_constant() ? den_ : divide_exact(den_, g);
  const SparsePoly b = g.is_constant() ? o.den_ : divide_exact(o.den_, g);
  const SparsePoly num = num_ * b + o.num_ * a;
  if (g.is_constant()) {
    // Denominators coprime: the sum is already reduced.
    auto [n, d] = fix_denominator(num, den_ * o.den_);
    return *this = RatFun(std::move(n), std::move(d), 0);
  }
  return *this = normalize(num, den_ * b);
}

RatFun& RatFun::operator-=(const RatFun& o) { return *this += -o; }

RatFun& RatFun::operator*=(const RatFun& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = o;
  if (is_polynomial() && o.is_polynomial()) {
    num_ = num_ * o.num_;
    return *this;
  }
  const SparsePoly g1 = gcd(num_, o.den_);
  const SparsePoly g2 = gcd(o.num_, den_);
  const SparsePoly n1 = g1.is_constant() ? num_ : divide_exact(num_, g1);
  const SparsePoly d2 = g1.is_constant() ? o.den_ : divide_exact(o.den_, g1);
  const SparsePoly n2 = g2.is_constant() ? o.num_ : divide_exact(o.num_, g2);
  const SparsePoly d1 = g2.is_constant() ? den_ : divide_exact(den_, g2);
  auto [n, d] = fix_denominator(n1 * n2, d1 * d2);
  if (d.is_constant()) return *this = RatFun(n * (Rat(1) / d.constant_term()));
  num_ = std::move(n);
  den_ = std::move(d);
  return *this;
}

RatFun operator*(RatFun a, const Rat& c) {
  a.num_ *= c;
  if (a.num_.is_zero()) a.den_ = SparsePoly::constant(a.num_.ambient(), Rat(1));
  return a;
}

RatFun inverse(const RatFun& r) {
  if (r.is_zero()) throw MathError("division by zero rational function");
  return RatFun::normalize(r.den(), r.num());
}

RatFun operator/(const RatFun& a, const RatFun& b) { return a * inverse(b); }

Rat RatFun::eval(const std::vector<Rat>& point) const {
  const Rat d = den_.eval(point);
  if (sgn(d) == 0) throw MathError("rational function evaluated at a pole");
  return num_.eval(point) / d;
}

std::string to_string(const RatFun& r) {
  if (r.is_polynomial()) return to_string(r.num());
  return "(" + to_string(r.num()) + ")/(" + to_string(r.den()) + ")";
}

}  // namespace toric
