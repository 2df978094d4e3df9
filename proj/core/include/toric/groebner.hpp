#pragma once

#include <cstddef>
#include <vector>

#include "toric/sparse_poly.hpp"

namespace toric {

/// Degree-reverse-lex comparison with X1 > X2 > ... ; <0, 0, >0.
int grevlex_compare(const ExpVec& a, const ExpVec& b);

/// Reduced Groebner basis over Q in degree-reverse-lex order, computed by
/// Buchberger's algorithm with sugar pair selection.
class GroebnerBasis {
 public:
  explicit GroebnerBasis(const std::vector<SparsePoly>& generators);

  std::size_t ambient() const noexcept { return n_; }
  /// Monic elements sorted by increasing leading monomial.
  const std::vector<SparsePoly>& elements() const noexcept { return basis_; }
  const std::vector<ExpVec>& leading_monomials() const noexcept { return lead_; }

  bool is_unit() const;
  /// True when every variable has a pure power among the leading monomials.
  bool zero_dimensional() const;
  /// Monomials outside the initial ideal, increasing; requires
  /// zero_dimensional().
  std::vector<ExpVec> standard_monomials() const;

  SparsePoly normal_form(const SparsePoly& p) const;

 private:
  std::size_t n_ = 0;
  std::vector<SparsePoly> basis_;
  std::vector<ExpVec> lead_;
};

}  // namespace toric
