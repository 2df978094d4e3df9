// Exact volumes by a placing (beneath-beyond) triangulation. Orientation
// tests run on int64 with overflow checks and restart on GMP integers if any
// product overflows.

#include "toric/polytope.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <type_traits>

#include "toric/error.hpp"

namespace toric {

Support::Support(std::size_t ambient_dim, std::vector<ExpVec> points) : n_(ambient_dim) {
  if (points.empty()) throw InputError("empty support");
  for (const auto& p : points) {
    if (p.size() != n_) {
      throw InputError("support point has " + std::to_string(p.size()) + " coordinates, expected " +
                       std::to_string(n_));
    }
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  points_ = std::move(points);
}

Support Support::simplex(std::size_t n) {
  std::vector<ExpVec> pts{ExpVec(n)};
  for (std::size_t i = 0; i < n; ++i) pts.push_back(ExpVec::unit(n, i));
  return Support(n, std::move(pts));
}

Support Support::segment(std::size_t n, std::size_t i) {
  return Support(n, {ExpVec(n), ExpVec::unit(n, i)});
}

Support Support::translated(const ExpVec& shift) const {
  std::vector<ExpVec> pts;
  pts.reserve(points_.size());
  for (const auto& p : points_) pts.push_back(p + shift);
  return Support(n_, std::move(pts));
}

Support Support::project(const std::vector<std::size_t>& keep) const {
  std::vector<ExpVec> pts;
  pts.reserve(points_.size());
  for (const auto& p : points_) {
    ExpVec q(keep.size());
    for (std::size_t k = 0; k < keep.size(); ++k) q.set(k, p[keep[k]]);
    pts.push_back(std::move(q));
  }
  return Support(keep.size(), std::move(pts));
}

SupportFamily::SupportFamily(std::size_t ambient_dim, std::vector<Support> members)
    : n_(ambient_dim), members_(std::move(members)) {
  for (const auto& m : members_) {
    if (m.ambient_dim() != n_) throw InputError("support family dimension mismatch");
  }
}

SupportFamily SupportFamily::with_simplices(std::size_t copies) const {
  auto m = members_;
  for (std::size_t i = 0; i < copies; ++i) m.push_back(Support::simplex(n_));
  return SupportFamily(n_, std::move(m));
}

namespace {

struct Overflow {};

inline long long mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline long long add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline long long sub(long long a, long long b) {
  long long r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline Integer mul(const Integer& a, const Integer& b) { return a * b; }
inline Integer add(const Integer& a, const Integer& b) { return a + b; }
inline Integer sub(const Integer& a, const Integer& b) { return a - b; }

template <class Int>
Int make_int(long long v) {
  if constexpr (std::is_same_v<Int, long long>) {
    return v;
  } else {
    return Int(static_cast<long>(v));
  }
}

inline int sign(long long a) { return (a > 0) - (a < 0); }
inline int sign(const Integer& a) { return sgn(a); }

template <class Int>
using Mat = std::vector<std::vector<Int>>;

// Fraction-free Bareiss determinant; destroys m.
template <class Int>
Int bareiss_det(Mat<Int>& m) {
  const std::size_t k = m.size();
  if (k == 0) return Int(1);
  Int prev(1);
  int s = 1;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t p = c;
    while (p < k && sign(m[p][c]) == 0) ++p;
    if (p == k) return Int(0);
    if (p != c) {
      std::swap(m[p], m[c]);
      s = -s;
    }
    for (std::size_t i = c + 1; i < k; ++i) {
      for (std::size_t j = c + 1; j < k; ++j) {
        m[i][j] = sub(mul(m[i][j], m[c][c]), mul(m[i][c], m[c][j]));
        m[i][j] /= prev;
      }
    }
    prev = m[c][c];
  }
  return s < 0 ? Int(0) - m[k - 1][k - 1] : m[k - 1][k - 1];
}

long long rank_of(Mat<Integer> m) {
  if (m.empty()) return 0;
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && sgn(m[p][c]) == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (sgn(m[i][c]) == 0) continue;
      for (std::size_t j = c + 1; j < cols; ++j) m[i][j] = m[i][j] * m[r][c] - m[r][j] * m[i][c];
      m[i][c] = 0;
    }
    ++r;
  }
  return static_cast<long long>(r);
}

// Placing triangulation of a full-dimensional point set.
template <class Int>
class Placer {
 public:
  Placer(const std::vector<std::vector<long long>>& pts, std::size_t n) : n_(n) {
    pts_.reserve(pts.size());
    for (const auto& p : pts) {
      std::vector<Int> q;
      for (auto x : p) q.push_back(make_int<Int>(x));
      pts_.push_back(std::move(q));
    }
  }

  // n! times the volume, or nothing if the points are not full-dimensional.
  // Also records the vertices of the boundary.
  bool run(Int& volume, std::vector<std::size_t>& vertices) {
    std::vector<std::size_t> simplex = initial_simplex();
    if (simplex.size() != n_ + 1) return false;

    interior_.assign(n_, Int(0));
    for (auto v : simplex) {
      for (std::size_t k = 0; k < n_; ++k) interior_[k] = add(interior_[k], pts_[v][k]);
    }
    scale_ = make_int<Int>(static_cast<long long>(n_ + 1));

    volume = Int(0);
    for (std::size_t skip = 0; skip <= n_; ++skip) {
      std::vector<std::size_t> f;
      for (std::size_t i = 0; i <= n_; ++i) {
        if (i != skip) f.push_back(simplex[i]);
      }
      add_facet(std::move(f));
    }
    {
      // Any facet plus the opposite vertex is the initial simplex.
      const Facet& f0 = facets_.front();
      volume = sub(dot(f0.normal, pts_[simplex[0]]), f0.offset);
      if (sign(volume) < 0) volume = Int(0) - volume;
    }

    std::vector<bool> in_simplex(pts_.size(), false);
    for (auto v : simplex) in_simplex[v] = true;
    for (std::size_t p = 0; p < pts_.size(); ++p) {
      if (!in_simplex[p]) place(p, volume);
    }

    std::set<std::size_t> vs;
    for (const auto& f : facets_) vs.insert(f.verts.begin(), f.verts.end());
    vertices.assign(vs.begin(), vs.end());
    return true;
  }

 private:
  struct Facet {
    std::vector<std::size_t> verts;  // sorted
    std::vector<Int> normal;
    Int offset;
  };

  Int dot(const std::vector<Int>& a, const std::vector<Int>& b) const {
    Int s(0);
    for (std::size_t k = 0; k < n_; ++k) s = add(s, mul(a[k], b[k]));
    return s;
  }

  std::vector<std::size_t> initial_simplex() const {
    std::vector<std::size_t> chosen{0};
    Mat<Integer> rows;
    for (std::size_t p = 1; p < pts_.size() && chosen.size() <= n_; ++p) {
      std::vector<Integer> d(n_);
      for (std::size_t k = 0; k < n_; ++k) d[k] = to_integer(sub(pts_[p][k], pts_[0][k]));
      rows.push_back(d);
      if (rank_of(rows) == static_cast<long long>(rows.size())) {
        chosen.push_back(p);
      } else {
        rows.pop_back();
      }
    }
    return chosen;
  }

  static Integer to_integer(long long v) { return Integer(static_cast<long>(v)); }
  static Integer to_integer(const Integer& v) { return v; }

  // Normal of the hyperplane through the facet vertices, as the vector of
  // signed maximal minors of the edge matrix, so that normal . (p - v0) is
  // the determinant [edges; p - v0].
  void add_facet(std::vector<std::size_t> verts) {
    std::sort(verts.begin(), verts.end());
    const auto& v0 = pts_[verts[0]];
    Mat<Int> edges;
    for (std::size_t i = 1; i < verts.size(); ++i) {
      std::vector<Int> e(n_);
      for (std::size_t k = 0; k < n_; ++k) e[k] = sub(pts_[verts[i]][k], v0[k]);
      edges.push_back(std::move(e));
    }
    std::vector<Int> normal(n_);
    for (std::size_t col = 0; col < n_; ++col) {
      Mat<Int> minor;
      for (const auto& e : edges) {
        std::vector<Int> row;
        for (std::size_t k = 0; k < n_; ++k) {
          if (k != col) row.push_back(e[k]);
        }
        minor.push_back(std::move(row));
      }
      Int d = bareiss_det(minor);
      // Cofactor sign for expansion along the last row of an n x n matrix.
      if ((n_ - 1 + col) % 2 == 1) d = Int(0) - d;
      normal[col] = d;
    }
    Int offset = dot(normal, v0);
    // Orient outward: the interior point must lie strictly below.
    if (sign(sub(dot(normal, interior_), mul(scale_, offset))) > 0) {
      for (auto& x : normal) x = Int(0) - x;
      offset = Int(0) - offset;
    }
    facets_.push_back(Facet{std::move(verts), std::move(normal), std::move(offset)});
  }

  void place(std::size_t p, Int& volume) {
    std::vector<Facet> keep;
    std::vector<const Facet*> visible;
    std::vector<Facet> all = std::move(facets_);
    facets_.clear();
    std::map<std::vector<std::size_t>, int> ridges;
    std::vector<bool> is_visible(all.size(), false);
    for (std::size_t i = 0; i < all.size(); ++i) {
      const Int h = sub(dot(all[i].normal, pts_[p]), all[i].offset);
      if (sign(h) > 0) {
        is_visible[i] = true;
        volume = add(volume, h);
        const auto& vs = all[i].verts;
        for (std::size_t drop = 0; drop < vs.size(); ++drop) {
          std::vector<std::size_t> r;
          for (std::size_t j = 0; j < vs.size(); ++j) {
            if (j != drop) r.push_back(vs[j]);
          }
          ++ridges[r];
        }
      }
    }
    bool any = false;
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (is_visible[i]) {
        any = true;
      } else {
        facets_.push_back(std::move(all[i]));
      }
    }
    if (!any) return;
    for (const auto& [r, count] : ridges) {
      if (count != 1) continue;
      auto f = r;
      f.push_back(p);
      add_facet(std::move(f));
    }
  }

  std::size_t n_;
  std::vector<std::vector<Int>> pts_;
  std::vector<Int> interior_;
  Int scale_;
  std::vector<Facet> facets_;
};

struct HullResult {
  Integer scaled_volume;  // n! * volume
  std::vector<std::size_t> vertices;
  bool full_dim = false;
};

HullResult hull(const std::vector<std::vector<long long>>& pts, std::size_t n) {
  HullResult out;
  if (pts.size() < n + 1) return out;
  if (n == 1) {
    long long lo = pts[0][0], hi = pts[0][0];
    std::size_t ilo = 0, ihi = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (pts[i][0] < lo) lo = pts[i][0], ilo = i;
      if (pts[i][0] > hi) hi = pts[i][0], ihi = i;
    }
    if (hi == lo) return out;
    out.scaled_volume = Integer(static_cast<long>(hi - lo));
    out.vertices = {std::min(ilo, ihi), std::max(ilo, ihi)};
    out.full_dim = true;
    return out;
  }
  try {
    Placer<long long> placer(pts, n);
    long long v = 0;
    out.full_dim = placer.run(v, out.vertices);
    out.scaled_volume = Integer(static_cast<long>(v));
    return out;
  } catch (const Overflow&) {
  }
  Placer<Integer> placer(pts, n);
  out.vertices.clear();
  out.full_dim = placer.run(out.scaled_volume, out.vertices);
  return out;
}

std::vector<std::vector<long long>> as_rows(const std::vector<ExpVec>& pts) {
  std::vector<std::vector<long long>> rows;
  rows.reserve(pts.size());
  for (const auto& p : pts) {
    std::vector<long long> r(p.size());
    for (std::size_t k = 0; k < p.size(); ++k) r[k] = p[k];
    rows.push_back(std::move(r));
  }
  return rows;
}

Integer factorial(std::size_t n) {
  Integer f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= static_cast<unsigned long>(i);
  return f;
}

std::vector<ExpVec> sum_points(const std::vector<ExpVec>& a, const std::vector<ExpVec>& b) {
  std::vector<ExpVec> out;
  out.reserve(a.size() * b.size());
  for (const auto& p : a) {
    for (const auto& q : b) out.push_back(p + q);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

long affine_dimension(const std::vector<ExpVec>& points) {
  if (points.empty()) return -1;
  Mat<Integer> rows;
  for (std::size_t i = 1; i < points.size(); ++i) {
    std::vector<Integer> d(points[i].size());
    for (std::size_t k = 0; k < d.size(); ++k) {
      d[k] = Integer(static_cast<long>(points[i][k])) - Integer(static_cast<long>(points[0][k]));
    }
    rows.push_back(std::move(d));
  }
  return static_cast<long>(rank_of(std::move(rows)));
}

Rat hull_volume(const Support& s) {
  const auto h = hull(as_rows(s.points()), s.ambient_dim());
  if (!h.full_dim) return Rat(0);
  return make_rat(h.scaled_volume, factorial(s.ambient_dim()));
}

Support minkowski_sum(const Support& a, const Support& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw InputError("Minkowski sum dimension mismatch");
  return Support(a.ambient_dim(), sum_points(a.points(), b.points()));
}

Integer mixed_volume(const SupportFamily& f, const MixedVolumeOptions& opts) {
  const std::size_t n = f.ambient_dim();
  if (f.size() != n) throw InputError("square family required");
  if (n == 0) return 1;
  if (n > opts.max_dim) {
    throw InputError("mixed volume dimension " + std::to_string(n) + " exceeds limit " +
                     std::to_string(opts.max_dim));
  }
  // Sum over nonempty J of (-1)^(n-|J|) vol(sum_{j in J} A_j), building each
  // sum from a smaller one reduced to its vertices.
  const std::size_t subsets = std::size_t{1} << n;
  std::vector<std::vector<ExpVec>> reduced(subsets);
  Integer total = 0;
  for (std::size_t mask = 1; mask < subsets; ++mask) {
    const std::size_t top = static_cast<std::size_t>(63 - __builtin_clzll(mask));
    const std::size_t rest = mask & ~(std::size_t{1} << top);
    std::vector<ExpVec> pts = rest == 0 ? f[top].points() : sum_points(reduced[rest], f[top].points());
    const auto rows = as_rows(pts);
    const auto h = hull(rows, n);
    if (h.full_dim) {
      std::vector<ExpVec> verts;
      verts.reserve(h.vertices.size());
      for (auto i : h.vertices) verts.push_back(pts[i]);
      reduced[mask] = std::move(verts);
      const int size = __builtin_popcountll(mask);
      if ((n - static_cast<std::size_t>(size)) % 2 == 0) {
        total += h.scaled_volume;
      } else {
        total -= h.scaled_volume;
      }
    } else {
      reduced[mask] = std::move(pts);
    }
  }
  // Each term is n! vol; the alternating sum of Euclidean volumes is
  // already the normalized mixed volume.
  const Integer nf = factorial(n);
  if (total % nf != 0) throw MathError("mixed volume is not an integer");
  return total / nf;
}

bool mv_positive(const SupportFamily& f, const MixedVolumeOptions& opts) {
  return sgn(mixed_volume(f, opts)) > 0;
}

}  // namespace toric
