// Multivariate gcd over Q by content / primitive-part recursion on the
// highest occurring variable, with a primitive pseudo-remainder sequence.

#include <algorithm>

#include "toric/error.hpp"
#include "toric/sparse_poly.hpp"

namespace toric {

namespace {

SparsePoly one(std::size_t n) { return SparsePoly::constant(n, Rat(1)); }

SparsePoly normalized(const SparsePoly& p) { return p.integer_primitive().second; }

long highest_var(const SparsePoly& p) {
  for (std::size_t i = p.ambient(); i-- > 0;) {
    if (p.degree_in(i) > 0) return static_cast<long>(i);
  }
  return -1;
}

// gcd(X^e, p) is the monomial with exponents min(e, every term of p).
SparsePoly monomial_gcd(const ExpVec& e, const SparsePoly& p) {
  ExpVec g = e;
  for (const auto& t : p.terms()) g = ExpVec::gcd(g, t.first);
  return SparsePoly::monomial(g, Rat(1));
}

SparsePoly gcd_impl(const SparsePoly& a, const SparsePoly& b);

SparsePoly content_in(const SparsePoly& p, std::size_t var) {
  const auto coeffs = p.coefficients_in(var);
  SparsePoly g(p.ambient());
  for (const auto& c : coeffs) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? normalized(c) : gcd_impl(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

SparsePoly primitive_in(const SparsePoly& p, std::size_t var) {
  if (p.is_zero()) return p;
  const SparsePoly c = content_in(p, var);
  return normalized(c.is_constant() ? p : divide_exact(p, c));
}

// lc(b)^k * a - q * b with deg_var < deg_var(b).
SparsePoly pseudo_rem(SparsePoly a, const SparsePoly& b, std::size_t var) {
  const std::uint32_t db = b.degree_in(var);
  const auto bc = b.coefficients_in(var);
  const SparsePoly& lcb = bc.back();
  while (!a.is_zero()) {
    const std::uint32_t da = a.degree_in(var);
    if (da < db) break;
    const SparsePoly lca = a.coefficients_in(var).back();
    a = lcb * a - (lca * b).mul_term(ExpVec::unit(a.ambient(), var, da - db), Rat(1));
    a = normalized(a);
  }
  return a;
}

SparsePoly gcd_impl(const SparsePoly& a, const SparsePoly& b) {
  const std::size_t n = std::max(a.ambient(), b.ambient());
  if (a.is_zero()) return normalized(b);
  if (b.is_zero()) return normalized(a);
  if (a.is_constant() || b.is_constant()) return one(n);
  if (a.is_monomial()) return monomial_gcd(a.leading_term().first, b);
  if (b.is_monomial()) return monomial_gcd(b.leading_term().first, a);
  if (a == b) return normalized(a);

  const long va = highest_var(a), vb = highest_var(b);
  const auto var = static_cast<std::size_t>(std::max(va, vb));
  if (a.degree_in(var) == 0) return gcd_impl(a, content_in(b, var));
  if (b.degree_in(var) == 0) return gcd_impl(content_in(a, var), b);

  const SparsePoly ca = content_in(a, var);
  const SparsePoly cb = content_in(b, var);
  const SparsePoly c = gcd_impl(ca, cb);
  SparsePoly pa = normalized(ca.is_constant() ? a : divide_exact(a, ca));
  SparsePoly pb = normalized(cb.is_constant() ? b : divide_exact(b, cb));
  if (pa.degree_in(var) < pb.degree_in(var)) std::swap(pa, pb);

  // Cheap exits before running the remainder sequence.
  if (auto q = try_divide(pa, pb)) return normalized(c * pb);

  while (!pb.is_zero()) {
    SparsePoly r = pseudo_rem(pa, pb, var);
    pa = std::move(pb);
    if (r.is_zero()) {
      pb = SparsePoly(n);
    } else if (r.degree_in(var) == 0) {
      // A nonzero remainder free of var: primitive parts are coprime in var.
      return c;
    } else {
      pb = primitive_in(r, var);
    }
  }
  return normalized(c * primitive_in(pa, var));
}

}  // namespace

SparsePoly gcd(const SparsePoly& a, const SparsePoly& b) {
  if (a.is_zero() && b.is_zero()) throw MathError("gcd of two zero polynomials");
  return gcd_impl(a, b);
}

}  // namespace toric
