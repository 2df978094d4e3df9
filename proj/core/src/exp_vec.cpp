#include "toric/exp_vec.hpp"

#include <algorithm>
#include <numeric>

#include "toric/error.hpp"

namespace toric {

ExpVec::ExpVec(std::initializer_list<std::uint32_t> e) : e_(e) {
  deg_ = std::accumulate(e_.begin(), e_.end(), 0U);
}

ExpVec::ExpVec(std::vector<std::uint32_t> e) : e_(std::move(e)) {
  deg_ = std::accumulate(e_.begin(), e_.end(), 0U);
}

ExpVec ExpVec::unit(std::size_t n, std::size_t i, std::uint32_t power) {
  ExpVec e(n);
  e.set(i, power);
  return e;
}

void ExpVec::set(std::size_t i, std::uint32_t v) {
  deg_ = deg_ - e_.at(i) + v;
  e_[i] = v;
}

bool ExpVec::divides(const ExpVec& other) const {
  if (deg_ > other.deg_) return false;
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] > other.e_[i]) return false;
  }
  return true;
}

ExpVec& ExpVec::operator+=(const ExpVec& o) {
  if (o.e_.size() != e_.size()) throw InputError("exponent vectors of different length");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
  deg_ += o.deg_;
  return *this;
}

ExpVec operator-(const ExpVec& a, const ExpVec& b) {
  ExpVec r = a;
  for (std::size_t i = 0; i < r.e_.size(); ++i) {
    if (b.e_[i] > r.e_[i]) throw MathError("negative exponent in monomial quotient");
    r.e_[i] -= b.e_[i];
  }
  r.deg_ -= b.deg_;
  return r;
}

ExpVec ExpVec::lcm(const ExpVec& a, const ExpVec& b) {
  std::vector<std::uint32_t> r(a.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = std::max(a[i], b[i]);
  return ExpVec(std::move(r));
}

ExpVec ExpVec::gcd(const ExpVec& a, const ExpVec& b) {
  std::vector<std::uint32_t> r(a.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = std::min(a[i], b[i]);
  return ExpVec(std::move(r));
}

int grlex_compare(const ExpVec& a, const ExpVec& b) {
  if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
  }
  return 0;
}

std::size_t ExpVecHash::operator()(const ExpVec& e) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (auto x : e.data()) h = (h ^ x) * 0x100000001b3ULL;
  return h;
}

}  // namespace toric
