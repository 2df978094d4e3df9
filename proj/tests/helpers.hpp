#pragma once

#include <random>
#include <string>
#include <vector>

#include "toric/rat_fun.hpp"
#include "toric/text.hpp"
#include "toric/uni_poly.hpp"

namespace testing_util {

using namespace toric;

inline SparsePoly P(const std::string& s, std::size_t n) { return parse_poly(s, n); }
inline RatFun R(const std::string& s, std::size_t n) { return parse_ratfun(s, n); }

/// Coefficients listed from degree 0 upwards.
inline UniPoly<Rat> UQ(const std::vector<std::string>& c) {
  std::vector<Rat> v;
  for (const auto& s : c) v.push_back(parse_rat(s));
  return UniPoly<Rat>(std::move(v));
}

inline UniPoly<RatFun> UR(const std::vector<std::string>& c, std::size_t n) {
  std::vector<RatFun> v;
  for (const auto& s : c) v.push_back(R(s, n));
  return UniPoly<RatFun>(std::move(v));
}

/// Small deterministic generator for randomized tests.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}
  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(g_); }
  long nonzero(long b) {
    long v = 0;
    while (v == 0) v = uniform(-b, b);
    return v;
  }
  Rat rat(long b) { return make_rat(uniform(-b, b), uniform(1, b)); }

  /// Random polynomial with up to `terms` terms of total degree <= deg.
  SparsePoly poly(std::size_t n, unsigned deg, std::size_t terms, long coeff_bound) {
    SparsePoly p(n);
    for (std::size_t i = 0; i < terms; ++i) {
      std::vector<std::uint32_t> e(n, 0);
      unsigned left = static_cast<unsigned>(uniform(0, deg));
      for (std::size_t k = 0; k < n && left > 0; ++k) {
        const auto take = static_cast<std::uint32_t>(uniform(0, left));
        e[k] = take;
        left -= take;
      }
      p += SparsePoly::monomial(ExpVec(e), Rat(nonzero(coeff_bound)));
    }
    return p;
  }

 private:
  std::mt19937_64 g_;
};

}  // namespace testing_util
