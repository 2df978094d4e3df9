#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "toric/rat_fun.hpp"
#include "toric/sparse_poly.hpp"
#include "toric/uni_poly.hpp"

namespace toric {

/// Parses the canonical polynomial rendering ("-12*X1^3+6*X1-1/2") over
/// `ambient` variables. Accepts any term order and repeated monomials.
/// Throws InputError with the offending column on malformed text.
SparsePoly parse_poly(std::string_view text, std::size_t ambient);

/// Parses "p" or "(p)/(q)" and normalizes the result.
RatFun parse_ratfun(std::string_view text, std::size_t ambient);

/// Human-readable univariate rendering in Y, highest degree first, e.g.
/// "Y^2 + ((-12*X1^3)/(4*X1^2-1))*Y + 3".
template <class F>
std::string to_string(const UniPoly<F>& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (long k = p.degree(); k >= 0; --k) {
    const F& c = p.coeff(static_cast<std::size_t>(k));
    if (is_zero(c)) continue;
    const std::string cs = to_string(c);
    if (!s.empty()) s += " + ";
    if (k == 0) {
      s += cs;
      continue;
    }
    if (cs != "1") s += "(" + cs + ")*";
    s += k == 1 ? "Y" : "Y^" + std::to_string(k);
  }
  return s;
}

}  // namespace toric
