#pragma once

#include <cstddef>

#include "toric/rat_fun.hpp"
#include "toric/series.hpp"

namespace toric {

/// Rational function p/q with deg p, deg q <= d and q(shift) != 0 whose
/// expansion agrees with the one-variable series s through degree 2d, by the
/// extended Euclidean algorithm stopped at degree d. The result is expressed
/// in the ambient variables of the series ring. Requires precision >= 2d.
/// Throws GenericityError(kNoValidApproximant) when no such fraction exists.
RatFun pade_univariate(const TruncSeries& s, std::size_t d);

/// Same for any number of variables, with total degrees <= d: the smallest
/// e <= d admitting p, q of total degree <= e with q(shift) = 1 and
/// p - q s = 0 through the precision of s. Requires precision >= 2d.
RatFun pade_multivariate(const TruncSeries& s, std::size_t d);

}  // namespace toric
