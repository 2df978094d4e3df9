#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace toric {

using Integer = mpz_class;
/// Exact rational; GMP keeps it canonical (coprime, positive denominator).
using Rat = mpq_class;

/// num/den in lowest terms. Throws MathError on a zero denominator.
Rat make_rat(const Integer& num, const Integer& den);

/// "p/q" or "p"; the denominator is omitted when it is 1.
std::string to_string(const Rat& r);

/// Accepts an optionally signed integer or fraction ("-12", "3/4").
/// Throws InputError on anything else, MathError on a zero denominator.
Rat parse_rat(std::string_view text);

/// lcm of the denominators of the given rationals.
Integer common_denominator(const std::vector<Rat>& values);

}  // namespace toric
