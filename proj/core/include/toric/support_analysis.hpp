#pragma once

#include <cstddef>
#include <vector>

#include "toric/polytope.hpp"

namespace toric {

/// Variable indices here are 0-based; text output adds one.
struct TransBasisResult {
  struct Step {
    std::size_t k;
    bool accepted;
  };
  /// Strictly increasing, n - r entries.
  std::vector<std::size_t> indices;
  /// Every candidate examined, in order.
  std::vector<Step> trace;
};

/// dim(sum_{j in J} A_j) >= #J for every J; without it the toric variety is
/// empty.
bool standing_hypothesis(const SupportFamily& a);

/// Greedy transcendence basis of the toric variety of a generic system with
/// supports `a` (r members in n variables). Candidate k is kept when the
/// family extended by the segments {0, e_i} (i in TB and k) and simplices
/// has positive mixed volume; the segments are eliminated by projecting
/// their coordinates away before the test.
/// Throws MathError("degenerate support family (empty toric variety)").
TransBasisResult trans_basis(const SupportFamily& a, const MixedVolumeOptions& opts = {});

/// The family of (A_1, ..., A_r, {0,e_i} for i in segs, Delta^extra) reduced
/// to the coordinates not in segs. Exposed for testing.
SupportFamily segment_projected_family(const SupportFamily& a, const std::vector<std::size_t>& segs,
                                       std::size_t extra_simplices);

struct GammaComponent {
  std::vector<std::size_t> I;
  std::vector<std::size_t> J;
  /// Coordinates surviving the restriction, in increasing order.
  std::vector<std::size_t> surviving;
  /// A_j^I for j in J, in the surviving coordinates. Empty when J is empty.
  std::vector<Support> projected;
};

struct GammaOptions {
  std::size_t max_dim = 20;
};

/// Every I subset of {0..n-1} indexing a coordinate subspace whose toric part
/// contributes to V(f), in increasing order of (#I, I).
std::vector<GammaComponent> gamma_decomposition(const SupportFamily& a, const GammaOptions& opts = {});

/// Drops the coordinates outside `keep` (given in increasing order).
SupportFamily project_supports(const SupportFamily& a, const std::vector<std::size_t>& keep);

}  // namespace toric
