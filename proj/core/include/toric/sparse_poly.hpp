#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "toric/exp_vec.hpp"
#include "toric/rational.hpp"

namespace toric {

/// Multivariate polynomial over Q in a fixed ambient number of variables.
///
/// Terms are kept sorted in descending graded-lex order (X1 > X2 > ...) and
/// no stored coefficient is zero, so structural equality is polynomial
/// equality. Variables are addressed by 0-based index; they render as
/// X1..Xn.
class SparsePoly {
 public:
  using Term = std::pair<ExpVec, Rat>;

  SparsePoly() = default;
  explicit SparsePoly(std::size_t ambient) : n_(ambient) {}

  static SparsePoly constant(std::size_t ambient, const Rat& c);
  static SparsePoly variable(std::size_t ambient, std::size_t index);
  static SparsePoly monomial(ExpVec e, const Rat& c);
  /// Builds from arbitrary (possibly repeated, unsorted) terms; merges
  /// duplicates and drops zeros. Throws InputError on an arity mismatch.
  static SparsePoly from_terms(std::size_t ambient, std::vector<Term> terms);

  std::size_t ambient() const noexcept { return n_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  /// Constant term value; zero if absent.
  Rat constant_term() const;
  Rat coeff(const ExpVec& e) const;

  const Term& leading_term() const { return terms_.front(); }
  const Rat& leading_coeff() const { return terms_.front().second; }
  std::uint32_t total_degree() const;
  std::uint32_t degree_in(std::size_t var) const;
  /// Indices of variables that occur with positive exponent.
  std::vector<std::size_t> support_vars() const;
  std::vector<ExpVec> support() const;

  SparsePoly operator-() const;
  SparsePoly& operator+=(const SparsePoly& o);
  SparsePoly& operator-=(const SparsePoly& o);
  SparsePoly& operator*=(const Rat& c);
  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
  friend SparsePoly operator*(SparsePoly a, const Rat& c) { return a *= c; }
  friend SparsePoly operator*(const Rat& c, SparsePoly a) { return a *= c; }
  /// Multiply by the monomial c*X^e.
  SparsePoly mul_term(const ExpVec& e, const Rat& c) const;
  SparsePoly pow(unsigned k) const;

  friend bool operator==(const SparsePoly& a, const SparsePoly& b);
  friend bool operator!=(const SparsePoly& a, const SparsePoly& b) { return !(a == b); }

  /// Substitutes values for some variables. With `reindex` the bound
  /// variables are dropped and the survivors renumbered in order; otherwise
  /// the ambient dimension is kept and the bound slots stay unused.
  SparsePoly eval_partial(const std::map<std::size_t, Rat>& bindings, bool reindex = false) const;
  Rat eval(const std::vector<Rat>& point) const;
  SparsePoly derivative(std::size_t var) const;

  /// Keeps the listed variables (in that order) as the new variables and
  /// drops every other one; the dropped variables must not occur.
  SparsePoly select_vars(const std::vector<std::size_t>& keep) const;
  /// Moves every variable i to slot mapping[i] of a new ambient space.
  SparsePoly remap_vars(const std::vector<std::size_t>& mapping, std::size_t new_ambient) const;

  /// Coefficients of the powers of `var`: result[k] is free of `var`.
  std::vector<SparsePoly> coefficients_in(std::size_t var) const;
  static SparsePoly from_coefficients_in(std::size_t var, const std::vector<SparsePoly>& coeffs);

  /// gcd of all numerators over lcm of all denominators, positive.
  Rat rational_content() const;
  /// The unique rational multiple with coprime integer coefficients and a
  /// positive graded-lex leading coefficient. Returns the factor c with
  /// *this == c * result.
  std::pair<Rat, SparsePoly> integer_primitive() const;

 private:
  std::size_t n_ = 0;
  std::vector<Term> terms_;
};

/// Exact quotient a / b; throws MathError when b does not divide a.
SparsePoly divide_exact(const SparsePoly& a, const SparsePoly& b);
/// Quotient when b divides a, std::nullopt otherwise.
std::optional<SparsePoly> try_divide(const SparsePoly& a, const SparsePoly& b);

/// Greatest common divisor over Q[X], normalized as integer-primitive with a
/// positive leading coefficient; gcd(0, 0) throws.
SparsePoly gcd(const SparsePoly& a, const SparsePoly& b);

/// Canonical text: graded-lex descending terms, e.g. "-12*X1^3+6*X1-1/2".
std::string to_string(const SparsePoly& p);

}  // namespace toric
