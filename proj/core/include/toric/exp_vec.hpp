#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace toric {

/// Exponent vector of a monomial in a fixed number of variables.
class ExpVec {
 public:
  ExpVec() = default;
  explicit ExpVec(std::size_t n) : e_(n, 0) {}
  ExpVec(std::initializer_list<std::uint32_t> e);
  explicit ExpVec(std::vector<std::uint32_t> e);

  static ExpVec unit(std::size_t n, std::size_t i, std::uint32_t power = 1);

  std::size_t size() const noexcept { return e_.size(); }
  std::uint32_t operator[](std::size_t i) const { return e_[i]; }
  void set(std::size_t i, std::uint32_t v);
  std::uint32_t degree() const noexcept { return deg_; }
  const std::vector<std::uint32_t>& data() const noexcept { return e_; }
  bool is_zero() const noexcept { return deg_ == 0; }

  /// True when every exponent of *this is <= the one of `other`.
  bool divides(const ExpVec& other) const;

  ExpVec& operator+=(const ExpVec& o);
  friend ExpVec operator+(ExpVec a, const ExpVec& b) { return a += b; }
  /// Componentwise difference; requires b.divides(a).
  friend ExpVec operator-(const ExpVec& a, const ExpVec& b);

  friend bool operator==(const ExpVec& a, const ExpVec& b) { return a.e_ == b.e_; }
  /// Plain lexicographic order, only for use as an ordered-container key.
  friend bool operator<(const ExpVec& a, const ExpVec& b) { return a.e_ < b.e_; }

  static ExpVec lcm(const ExpVec& a, const ExpVec& b);
  static ExpVec gcd(const ExpVec& a, const ExpVec& b);

 private:
  std::vector<std::uint32_t> e_;
  std::uint32_t deg_ = 0;
};

/// Graded lexicographic comparison with X1 > X2 > ... ; returns <0, 0, >0.
int grlex_compare(const ExpVec& a, const ExpVec& b);

/// Strict "a comes first" in descending graded-lex order.
struct GrlexGreater {
  bool operator()(const ExpVec& a, const ExpVec& b) const { return grlex_compare(a, b) > 0; }
};

struct ExpVecHash {
  std::size_t operator()(const ExpVec& e) const noexcept;
};

}  // namespace toric
