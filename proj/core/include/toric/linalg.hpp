#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "toric/rat_fun.hpp"
#include "toric/rational.hpp"
#include "toric/uni_poly.hpp"

namespace toric {

template <class F>
using Matrix = std::vector<std::vector<F>>;

// Pivot preference: smaller is cheaper to eliminate with.
inline std::size_t pivot_cost(const Rat& r) {
  return mpz_sizeinbase(r.get_num_mpz_t(), 2) + mpz_sizeinbase(r.get_den_mpz_t(), 2);
}
inline std::size_t pivot_cost(const RatFun& r) { return r.num().size() + r.den().size(); }

/// Gaussian elimination of A (rows x cols) with an augmented right-hand side
/// block. On return `pivots[k]` is the pivot column of row k.
template <class F>
struct Echelon {
  Matrix<F> rows;
  std::vector<std::size_t> pivots;
};

template <class F>
Echelon<F> row_echelon(Matrix<F> m, std::size_t cols) {
  Echelon<F> e;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t best = m.size();
    for (std::size_t i = r; i < m.size(); ++i) {
      if (is_zero(m[i][c])) continue;
      if (best == m.size() || pivot_cost(m[i][c]) < pivot_cost(m[best][c])) best = i;
    }
    if (best == m.size()) continue;
    std::swap(m[r], m[best]);
    const F inv = inverse(m[r][c]);
    for (auto& x : m[r]) x = x * inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || is_zero(m[i][c])) continue;
      const F f = m[i][c];
      for (std::size_t k = c; k < m[i].size(); ++k) {
        if (!is_zero(m[r][k])) m[i][k] -= f * m[r][k];
      }
    }
    e.pivots.push_back(c);
    ++r;
  }
  e.rows = std::move(m);
  return e;
}

template <class F>
std::size_t rank(const Matrix<F>& m) {
  if (m.empty()) return 0;
  return row_echelon(m, m.front().size()).pivots.size();
}

/// A particular solution of A x = b with every free unknown set to zero, or
/// nullopt when the system is inconsistent.
template <class F>
std::optional<std::vector<F>> solve(const Matrix<F>& a, const std::vector<F>& b, const F& like) {
  const std::size_t cols = a.empty() ? 0 : a.front().size();
  Matrix<F> aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  auto e = row_echelon(std::move(aug), cols);
  for (std::size_t i = e.pivots.size(); i < e.rows.size(); ++i) {
    if (!is_zero(e.rows[i][cols])) return std::nullopt;
  }
  std::vector<F> x(cols, zero_like(like));
  for (std::size_t k = 0; k < e.pivots.size(); ++k) x[e.pivots[k]] = e.rows[k][cols];
  return x;
}

/// Span of a growing list of vectors b_0, b_1, ... kept in echelon form,
/// each row remembering which combination of the b_i produced it.
template <class F>
class IncrementalBasis {
 public:
  explicit IncrementalBasis(F like) : like_(std::move(like)) {}

  std::size_t size() const noexcept { return rows_.size(); }

  /// Appends v as b_k when independent and returns nullopt; otherwise leaves
  /// the basis unchanged and returns c with v = sum_{i<k} c_i b_i.
  std::optional<std::vector<F>> add(std::vector<F> v) {
    const std::size_t k = rows_.size();
    std::vector<F> combo(k + 1, zero_like(like_));
    combo[k] = one_like(like_);
    eliminate(v, combo);
    std::size_t p = 0;
    while (p < v.size() && is_zero(v[p])) ++p;
    if (p == v.size()) {
      combo.pop_back();
      for (auto& x : combo) x = -x;
      return combo;
    }
    rows_.push_back(std::move(v));
    combos_.push_back(std::move(combo));
    pivots_.push_back(p);
    return std::nullopt;
  }

  /// c with v = sum c_i b_i, or nullopt when v is outside the span.
  std::optional<std::vector<F>> express(std::vector<F> v) const {
    std::vector<F> combo(rows_.size(), zero_like(like_));
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (is_zero(v[pivots_[i]])) continue;
      const F f = v[pivots_[i]] * inverse(rows_[i][pivots_[i]]);
      for (std::size_t c = 0; c < v.size(); ++c) {
        if (!is_zero(rows_[i][c])) v[c] -= f * rows_[i][c];
      }
      for (std::size_t c = 0; c < combos_[i].size(); ++c) {
        if (!is_zero(combos_[i][c])) combo[c] += f * combos_[i][c];
      }
    }
    for (const auto& x : v) {
      if (!is_zero(x)) return std::nullopt;
    }
    return combo;
  }

 private:
  void eliminate(std::vector<F>& v, std::vector<F>& combo) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (is_zero(v[pivots_[i]])) continue;
      const F f = v[pivots_[i]] * inverse(rows_[i][pivots_[i]]);
      for (std::size_t c = 0; c < v.size(); ++c) {
        if (!is_zero(rows_[i][c])) v[c] -= f * rows_[i][c];
      }
      for (std::size_t c = 0; c < combos_[i].size(); ++c) {
        if (!is_zero(combos_[i][c])) combo[c] -= f * combos_[i][c];
      }
    }
  }

  F like_;
  std::vector<std::vector<F>> rows_, combos_;
  std::vector<std::size_t> pivots_;
};

}  // namespace toric
