#pragma once

#include <cstddef>
#include <memory>
#include <unordered_map>
#include <vector>

#include "toric/exp_vec.hpp"
#include "toric/rational.hpp"
#include "toric/sparse_poly.hpp"

namespace toric {

/// Series variables Z_i = X_{vars[i]} - shift[i] of an ambient polynomial
/// ring, with the monomial bookkeeping up to a maximal precision: the
/// degree-d monomials in graded-lex descending order and the index tables
/// used by multiplication. Immutable once built.
class SeriesRing {
 public:
  /// Variables 0..t-1 of a t-variable ring, expanded around 0.
  SeriesRing(std::size_t vars, std::size_t max_precision);
  SeriesRing(std::size_t ambient, std::vector<std::size_t> vars, std::vector<Rat> shift, std::size_t max_precision);

  std::size_t vars() const noexcept { return t_; }
  std::size_t ambient() const noexcept { return ambient_; }
  const std::vector<std::size_t>& var_indices() const noexcept { return var_indices_; }
  const std::vector<Rat>& shift() const noexcept { return shift_; }
  std::size_t max_precision() const noexcept { return kappa_; }
  /// Number of monomials of degree d.
  std::size_t width(std::size_t d) const { return monomials_.at(d).size(); }
  const std::vector<ExpVec>& monomials(std::size_t d) const { return monomials_.at(d); }
  std::size_t index(const ExpVec& e) const;
  /// Position of u + v in degree i + j for u of degree i, v of degree j.
  const std::vector<std::uint32_t>& product_table(std::size_t i, std::size_t j) const {
    return tables_[i][j];
  }

 private:
  std::size_t t_, kappa_;
  std::size_t ambient_;
  std::vector<std::size_t> var_indices_;
  std::vector<Rat> shift_;
  std::vector<std::vector<ExpVec>> monomials_;
  std::vector<std::unordered_map<ExpVec, std::size_t, ExpVecHash>> index_;
  std::vector<std::vector<std::vector<std::uint32_t>>> tables_;
};

/// Power series in Z_1..Z_t (Z_i = X_i - shift_i) truncated after total
/// degree `precision`, stored as the dense vectors of its homogeneous
/// components.
class TruncSeries {
 public:
  TruncSeries() = default;
  TruncSeries(std::shared_ptr<const SeriesRing> ring, std::size_t precision);

  static TruncSeries constant(std::shared_ptr<const SeriesRing> ring, std::size_t precision, const Rat& c);
  /// Z_i
  static TruncSeries variable(std::shared_ptr<const SeriesRing> ring, std::size_t precision, std::size_t i);
  /// Expansion around the ring's shift of a polynomial of the ambient ring
  /// involving only the series variables.
  static TruncSeries expand(std::shared_ptr<const SeriesRing> ring, std::size_t precision, const SparsePoly& p);

  const std::shared_ptr<const SeriesRing>& ring() const noexcept { return ring_; }
  std::size_t precision() const noexcept { return prec_; }
  std::size_t vars() const { return ring_->vars(); }
  const std::vector<Rat>& component(std::size_t d) const { return comp_.at(d); }
  Rat coeff(const ExpVec& e) const;
  void set_coeff(const ExpVec& e, const Rat& c);
  const Rat& constant_term() const { return comp_[0][0]; }
  bool is_zero() const;
  /// Lowest degree with a nonzero component, or precision + 1.
  std::size_t valuation() const;

  /// Truncated or zero-padded copy.
  TruncSeries with_precision(std::size_t p) const;
  /// The components as a polynomial in Z_1..Z_t.
  SparsePoly to_poly() const;
  /// The truncation as a polynomial in the ambient variables X.
  SparsePoly to_ambient_poly() const;

  TruncSeries operator-() const;
  TruncSeries& operator+=(const TruncSeries& o);
  TruncSeries& operator-=(const TruncSeries& o);
  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator*(TruncSeries a, const Rat& c);

  friend bool operator==(const TruncSeries& a, const TruncSeries& b);
  friend bool operator!=(const TruncSeries& a, const TruncSeries& b) { return !(a == b); }

 private:
  void check_compatible(const TruncSeries& o) const;

  std::shared_ptr<const SeriesRing> ring_;
  std::size_t prec_ = 0;
  std::vector<std::vector<Rat>> comp_;
};

/// Product truncated at the common precision; throws InputError when the
/// operands live in different rings.
TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b);
/// Newton iteration u <- u(2 - a u); throws MathError("non-unit series").
TruncSeries series_inv(const TruncSeries& a);

inline bool is_zero(const TruncSeries& s) { return s.is_zero(); }
inline TruncSeries zero_like(const TruncSeries& s) { return TruncSeries(s.ring(), s.precision()); }
inline TruncSeries one_like(const TruncSeries& s) { return TruncSeries::constant(s.ring(), s.precision(), Rat(1)); }
inline TruncSeries inverse(const TruncSeries& s) { return series_inv(s); }

/// p(X - shift) for p in t variables, placing variable i at slot vars[i]
/// of an ambient ring with `ambient` variables.
SparsePoly unshift(const SparsePoly& p, const std::vector<Rat>& shift, const std::vector<std::size_t>& vars,
                   std::size_t ambient);

}  // namespace toric
