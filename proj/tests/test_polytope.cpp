#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "helpers.hpp"
#include "toric/error.hpp"
#include "toric/polytope.hpp"

using namespace toric;
using namespace testing_util;

namespace {

Support S(std::size_t n, std::vector<std::vector<std::uint32_t>> pts) {
  std::vector<ExpVec> v;
  for (auto& p : pts) v.emplace_back(std::move(p));
  return Support(n, std::move(v));
}

// Twice the area of the convex hull, by monotone chain and shoelace.
long long twice_area(std::vector<std::pair<long long, long long>> p) {
  std::sort(p.begin(), p.end());
  p.erase(std::unique(p.begin(), p.end()), p.end());
  if (p.size() < 3) return 0;
  auto cross = [](auto o, auto a, auto b) {
    return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
  };
  std::vector<std::pair<long long, long long>> h(2 * p.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], p[i]) <= 0) --k;
    h[k++] = p[i];
  }
  for (std::size_t i = p.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], p[i]) <= 0) --k;
    h[k++] = p[i];
  }
  h.resize(k - 1);
  long long s = 0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    const auto& a = h[i];
    const auto& b = h[(i + 1) % h.size()];
    s += a.first * b.second - a.second * b.first;
  }
  return s < 0 ? -s : s;
}

std::vector<std::pair<long long, long long>> pairs(const Support& s) {
  std::vector<std::pair<long long, long long>> out;
  for (const auto& e : s.points()) out.emplace_back(e[0], e[1]);
  return out;
}

// Mixed area 2D: area(P+Q) - area(P) - area(Q).
long long mixed_area_oracle(const Support& a, const Support& b) {
  std::vector<std::pair<long long, long long>> sum;
  for (auto p : pairs(a)) {
    for (auto q : pairs(b)) sum.emplace_back(p.first + q.first, p.second + q.second);
  }
  const long long twice = twice_area(sum) - twice_area(pairs(a)) - twice_area(pairs(b));
  return twice / 2;
}

Support box(std::vector<std::uint32_t> sides) {
  const std::size_t n = sides.size();
  std::vector<ExpVec> pts;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    ExpVec e(n);
    for (std::size_t k = 0; k < n; ++k) {
      if (mask >> k & 1) e.set(k, sides[k]);
    }
    pts.push_back(e);
  }
  return Support(n, std::move(pts));
}

long long permanent(const std::vector<std::vector<long long>>& m) {
  std::vector<std::size_t> perm(m.size());
  std::iota(perm.begin(), perm.end(), 0);
  long long total = 0;
  do {
    long long prod = 1;
    for (std::size_t i = 0; i < m.size(); ++i) prod *= m[i][perm[i]];
    total += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace

TEST_SUITE("polytope-engine") {

TEST_CASE("support validation") {
  CHECK_THROWS_AS(Support(2, {}), InputError);
  CHECK_THROWS_AS(S(2, {{1, 2, 3}}), InputError);
  CHECK(S(2, {{1, 0}, {0, 0}, {1, 0}}).size() == 2);
}

TEST_CASE("hull volume") {
  CHECK(hull_volume(Support::simplex(2)) == make_rat(1, 2));
  CHECK(hull_volume(S(2, {{0, 0}, {1, 1}})) == 0);
  CHECK(hull_volume(S(2, {{0, 0}, {2, 0}, {1, 1}})) == 1);
  CHECK(hull_volume(Support::simplex(3)) == make_rat(1, 6));
  CHECK(hull_volume(box({2, 3, 1})) == 6);
  CHECK(hull_volume(S(1, {{3}, {7}, {5}})) == 4);
}

TEST_CASE("minkowski sum") {
  const Support a = S(2, {{0, 0}, {1, 0}, {1, 1}});
  CHECK(minkowski_sum(a, S(2, {{0, 0}})) == a);
  CHECK(minkowski_sum(S(2, {{0, 0}, {1, 0}}), S(2, {{0, 0}, {0, 1}})) ==
        S(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
  CHECK(minkowski_sum(Support::simplex(2), Support::simplex(2)) ==
        S(2, {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}}));
  CHECK_THROWS_AS(minkowski_sum(Support::simplex(2), Support::simplex(3)), InputError);
}

TEST_CASE("mixed volume examples") {
  const Support s1 = S(3, {{0, 0, 0}, {1, 1, 0}, {0, 1, 1}});
  const Support s2 = S(3, {{0, 0, 0}, {2, 1, 1}, {0, 2, 0}, {1, 1, 1}});
  CHECK(mixed_volume(SupportFamily(3, {s1, s2, Support::simplex(3)})) == 6);
  CHECK(mixed_volume(SupportFamily(2, {Support::simplex(2), Support::simplex(2)})) == 1);
  CHECK(mixed_volume(SupportFamily(2, {S(2, {{0, 0}, {1, 0}, {1, 1}}), S(2, {{0, 0}, {1, 1}, {2, 0}})})) == 2);
  CHECK(mixed_volume(SupportFamily(1, {S(1, {{2}})})) == 0);
  CHECK_FALSE(mv_positive(SupportFamily(1, {S(1, {{2}})})));
  CHECK_THROWS_AS(mixed_volume(SupportFamily(2, {Support::simplex(2)})), InputError);
}

TEST_CASE("mixed volume is symmetric and translation invariant") {
  const Support a = S(2, {{0, 0}, {3, 1}, {1, 2}});
  const Support b = S(2, {{1, 0}, {0, 2}, {2, 2}, {0, 0}});
  const Integer ab = mixed_volume(SupportFamily(2, {a, b}));
  CHECK(ab == mixed_volume(SupportFamily(2, {b, a})));
  CHECK(ab == mixed_volume(SupportFamily(2, {a.translated(ExpVec{4, 1}), b})));
  CHECK(mixed_volume(SupportFamily(2, {a, a})) == 2 * hull_volume(a));
}

TEST_CASE("mixed area against an independent 2D oracle") {
  Rng rng(5);
  for (int it = 0; it < 60; ++it) {
    std::vector<Support> fam;
    for (int j = 0; j < 2; ++j) {
      std::vector<ExpVec> pts;
      const long k = rng.uniform(1, 5);
      for (long i = 0; i < k; ++i) {
        pts.push_back(ExpVec{static_cast<std::uint32_t>(rng.uniform(0, 4)), static_cast<std::uint32_t>(rng.uniform(0, 4))});
      }
      fam.emplace_back(2, pts);
    }
    CHECK(mixed_volume(SupportFamily(2, fam)) == static_cast<long>(mixed_area_oracle(fam[0], fam[1])));
  }
}

TEST_CASE("scaled simplices give the Bezout number") {
  for (std::uint32_t a = 1; a <= 3; ++a) {
    for (std::uint32_t b = 1; b <= 3; ++b) {
      std::vector<Support> fam;
      for (std::uint32_t d : {a, b, 2u}) {
        std::vector<ExpVec> pts{ExpVec(3)};
        for (std::size_t k = 0; k < 3; ++k) pts.push_back(ExpVec::unit(3, k, d));
        fam.emplace_back(3, pts);
      }
      CHECK(mixed_volume(SupportFamily(3, fam)) == a * b * 2);
    }
  }
}

TEST_CASE("boxes give the permanent of their side lengths") {
  Rng rng(9);
  for (int it = 0; it < 10; ++it) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(2, 4));
    std::vector<std::vector<long long>> m(n, std::vector<long long>(n));
    std::vector<Support> fam;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::uint32_t> sides;
      for (std::size_t k = 0; k < n; ++k) {
        m[i][k] = rng.uniform(1, 3);
        sides.push_back(static_cast<std::uint32_t>(m[i][k]));
      }
      fam.push_back(box(sides));
    }
    CHECK(mixed_volume(SupportFamily(n, fam)) == static_cast<long>(permanent(m)));
  }
}

TEST_CASE("large coordinates do not overflow") {
  const std::uint32_t big = 3000000;
  const Support a = S(2, {{0, 0}, {big, 0}, {0, big}});
  CHECK(mixed_volume(SupportFamily(2, {a, a})) == Integer(static_cast<unsigned long>(big)) * big);
}

TEST_CASE("dimension cap") {
  MixedVolumeOptions opts;
  opts.max_dim = 2;
  std::vector<Support> fam(3, Support::simplex(3));
  CHECK_THROWS_AS(mixed_volume(SupportFamily(3, fam), opts), InputError);
}

}  // TEST_SUITE
