#pragma once

#include <cstddef>
#include <vector>

#include "toric/exp_vec.hpp"
#include "toric/rational.hpp"

namespace toric {

/// Finite nonempty set of lattice points in (Z>=0)^n, stored sorted and
/// without duplicates.
class Support {
 public:
  /// Throws InputError on an empty set or a point of the wrong length.
  Support(std::size_t ambient_dim, std::vector<ExpVec> points);

  /// Vertex set {0, e_1, ..., e_n} of the standard simplex.
  static Support simplex(std::size_t n);
  /// {0, e_i}
  static Support segment(std::size_t n, std::size_t i);

  std::size_t ambient_dim() const noexcept { return n_; }
  const std::vector<ExpVec>& points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }

  /// Every point shifted by a lattice vector.
  Support translated(const ExpVec& shift) const;
  /// Keeps the listed coordinates, in that order, merging duplicates.
  Support project(const std::vector<std::size_t>& keep) const;

  friend bool operator==(const Support& a, const Support& b) {
    return a.n_ == b.n_ && a.points_ == b.points_;
  }

 private:
  std::size_t n_;
  std::vector<ExpVec> points_;
};

/// Ordered family (A_1, ..., A_r) of supports in a common ambient space.
class SupportFamily {
 public:
  SupportFamily(std::size_t ambient_dim, std::vector<Support> members);

  std::size_t ambient_dim() const noexcept { return n_; }
  const std::vector<Support>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  const Support& operator[](std::size_t i) const { return members_.at(i); }

  /// The family with `copies` standard simplices appended.
  SupportFamily with_simplices(std::size_t copies) const;

 private:
  std::size_t n_;
  std::vector<Support> members_;
};

/// Dimension of the affine hull of the points (-1 for none).
long affine_dimension(const std::vector<ExpVec>& points);

/// Exact Euclidean volume of conv(points); zero for lower-dimensional hulls.
Rat hull_volume(const Support& s);

/// {p + q}; throws InputError on a dimension mismatch.
Support minkowski_sum(const Support& a, const Support& b);

struct MixedVolumeOptions {
  /// Inclusion-exclusion is exponential in the dimension; larger inputs are
  /// rejected rather than left running.
  std::size_t max_dim = 12;
};

/// Normalized mixed volume, MV(Delta, ..., Delta) = 1, so that it equals the
/// generic number of toric roots of a square system with these supports.
/// Throws InputError("square family required") unless there are exactly
/// ambient_dim members.
Integer mixed_volume(const SupportFamily& f, const MixedVolumeOptions& opts = {});

bool mv_positive(const SupportFamily& f, const MixedVolumeOptions& opts = {});

}  // namespace toric
