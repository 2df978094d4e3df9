#include "toric/support_analysis.hpp"

#include <algorithm>

#include "toric/error.hpp"

namespace toric {

namespace {

// Affine dimension of sum_{j} sets[j]: translate every set so that they share
// one point and measure the union.
long sum_dimension(const std::vector<const std::vector<ExpVec>*>& sets, std::size_t n) {
  if (sets.empty()) return 0;
  ExpVec base(n);
  for (const auto* s : sets) base += s->front();
  std::vector<ExpVec> pts;
  for (const auto* s : sets) {
    const ExpVec shift = base - s->front();
    for (const auto& a : *s) pts.push_back(a + shift);
  }
  return affine_dimension(pts);
}

bool dimension_condition(const std::vector<const std::vector<ExpVec>*>& sets, std::size_t n) {
  const std::size_t r = sets.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << r); ++mask) {
    std::vector<const std::vector<ExpVec>*> chosen;
    for (std::size_t j = 0; j < r; ++j) {
      if (mask >> j & 1) chosen.push_back(sets[j]);
    }
    if (sum_dimension(chosen, n) < static_cast<long>(chosen.size())) return false;
  }
  return true;
}

std::vector<std::size_t> complement(std::size_t n, const std::vector<std::size_t>& drop) {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < n; ++i) {
    if (std::find(drop.begin(), drop.end(), i) == drop.end()) keep.push_back(i);
  }
  return keep;
}

}  // namespace

bool standing_hypothesis(const SupportFamily& a) {
  if (a.size() > 24) throw InputError("too many supports for the dimension check");
  std::vector<const std::vector<ExpVec>*> sets;
  for (const auto& m : a.members()) sets.push_back(&m.points());
  return dimension_condition(sets, a.ambient_dim());
}

SupportFamily segment_projected_family(const SupportFamily& a, const std::vector<std::size_t>& segs,
                                       std::size_t extra_simplices) {
  const auto keep = complement(a.ambient_dim(), segs);
  std::vector<Support> members;
  for (const auto& m : a.members()) members.push_back(m.project(keep));
  for (std::size_t i = 0; i < extra_simplices; ++i) members.push_back(Support::simplex(keep.size()));
  return SupportFamily(keep.size(), std::move(members));
}

TransBasisResult trans_basis(const SupportFamily& a, const MixedVolumeOptions& opts) {
  const std::size_t n = a.ambient_dim();
  const std::size_t r = a.size();
  if (r > n || !standing_hypothesis(a)) {
    throw MathError("degenerate support family (empty toric variety)");
  }
  TransBasisResult out;
  for (std::size_t k = 0; out.indices.size() < n - r; ++k) {
    if (k >= n) throw MathError("degenerate support family (empty toric variety)");
    auto segs = out.indices;
    segs.push_back(k);
    const std::size_t extra = n - r - out.indices.size() - 1;
    const bool ok = segs.size() == n || mv_positive(segment_projected_family(a, segs, extra), opts);
    out.trace.push_back({k, ok});
    if (ok) out.indices.push_back(k);
  }
  return out;
}

std::vector<GammaComponent> gamma_decomposition(const SupportFamily& a, const GammaOptions& opts) {
  const std::size_t n = a.ambient_dim();
  const std::size_t r = a.size();
  if (n > opts.max_dim) {
    throw InputError("gamma decomposition dimension " + std::to_string(n) + " exceeds limit " +
                     std::to_string(opts.max_dim));
  }
  const std::size_t subsets = std::size_t{1} << n;

  // Zero patterns of every point, per support.
  std::vector<std::vector<std::size_t>> zeros(r);
  for (std::size_t j = 0; j < r; ++j) {
    for (const auto& p : a[j].points()) {
      std::size_t z = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (p[i] == 0) z |= std::size_t{1} << i;
      }
      zeros[j].push_back(z);
    }
  }
  auto j_of = [&](std::size_t I) {
    std::vector<std::size_t> J;
    for (std::size_t j = 0; j < r; ++j) {
      for (auto z : zeros[j]) {
        if ((I & z) == I) {
          J.push_back(j);
          break;
        }
      }
    }
    return J;
  };

  // s(I) = #J_I + #I; the second condition says s(I) is minimal over the
  // subsets of I. Subset minima by the usual sum-over-subsets sweep.
  std::vector<int> s(subsets), low(subsets);
  for (std::size_t I = 0; I < subsets; ++I) {
    s[I] = static_cast<int>(j_of(I).size()) + __builtin_popcountll(I);
    low[I] = s[I];
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t I = 0; I < subsets; ++I) {
      if (I >> i & 1) low[I] = std::min(low[I], low[I ^ (std::size_t{1} << i)]);
    }
  }

  std::vector<GammaComponent> out;
  for (std::size_t I = 0; I < subsets; ++I) {
    if (s[I] > low[I]) continue;
    GammaComponent c;
    for (std::size_t i = 0; i < n; ++i) {
      if (I >> i & 1) {
        c.I.push_back(i);
      } else {
        c.surviving.push_back(i);
      }
    }
    c.J = j_of(I);
    if (!c.surviving.empty()) {
      for (auto j : c.J) {
        std::vector<ExpVec> pts;
        for (const auto& p : a[j].points()) {
          bool zero = true;
          for (auto i : c.I) zero = zero && p[i] == 0;
          if (zero) pts.push_back(p);
        }
        c.projected.push_back(Support(n, std::move(pts)).project(c.surviving));
      }
    }
    std::vector<const std::vector<ExpVec>*> sets;
    for (const auto& m : c.projected) sets.push_back(&m.points());
    if (c.surviving.empty()) {
      // Every restricted support is the single point {()}, of dimension 0.
      if (!c.J.empty()) continue;
    } else if (!dimension_condition(sets, c.surviving.size())) {
      continue;
    }
    out.push_back(std::move(c));
  }
  std::stable_sort(out.begin(), out.end(), [](const GammaComponent& x, const GammaComponent& y) {
    if (x.I.size() != y.I.size()) return x.I.size() < y.I.size();
    return x.I < y.I;
  });
  return out;
}

SupportFamily project_supports(const SupportFamily& a, const std::vector<std::size_t>& keep) {
  if (keep.empty()) throw InputError("projection onto no coordinates");
  for (auto k : keep) {
    if (k >= a.ambient_dim()) throw InputError("projection coordinate out of range");
  }
  std::vector<Support> members;
  for (const auto& m : a.members()) members.push_back(m.project(keep));
  return SupportFamily(keep.size(), std::move(members));
}

}  // namespace toric
