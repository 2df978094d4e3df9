#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "toric/polytope.hpp"
#include "toric/resolution.hpp"
#include "toric/zerodim.hpp"

namespace toric {

/// Seeded source of the random choices of the pipeline. The draws depend
/// only on the seed and the sequence of requests.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : gen_(seed) {}

  /// Uniform in {1..bound}.
  Integer positive(const Integer& bound);
  /// Uniform in {-bound..bound} \ {0}.
  Integer nonzero(const Integer& bound);
  std::vector<Integer> positive_vector(std::size_t n, const Integer& bound);
  std::vector<Integer> nonzero_vector(std::size_t n, const Integer& bound);

 private:
  std::uint64_t below(std::uint64_t n);
  std::mt19937_64 gen_;
};

struct PipelineOptions {
  std::uint64_t seed = 1;
  /// Sampling bound B.
  Integer bound = 100;
  /// Fresh draws allowed per random vector.
  unsigned retry_limit = 5;
  /// Fixed lifting precision instead of the adaptive schedule.
  std::optional<std::size_t> precision;
  /// Pinned choices; a pinned vector is never redrawn.
  std::optional<std::vector<Rat>> xi;
  std::optional<std::vector<Integer>> lambda;
  std::optional<std::vector<Integer>> mu;
  std::optional<std::vector<Integer>> b;
};

struct ParametricResult {
  GeometricResolution resolution;
  std::vector<Rat> xi;
  std::size_t precision = 0;
  /// MV(S, Delta^t), bounding the degree and fixing the maximal precision.
  Integer lift_bound;
  unsigned retries = 0;
};

/// Resolution of V*(system) with the given free variables: solve at a random
/// point xi of the free variables, lift by Newton-Hensel, reconstruct every
/// coefficient by Pade approximation and verify exactly. The precision grows
/// by Newton steps up to 2 MV(S, Delta^t) and stops at the first level whose
/// reconstruction verifies; options.precision forces a single level instead.
/// Redraws xi (or lambda when not pinned) on detected genericity failures.
ParametricResult parametric_toric_geomres(const std::vector<SparsePoly>& system,
                                          const std::vector<std::size_t>& free_vars,
                                          const std::vector<std::size_t>& dependent_vars,
                                          const std::vector<Integer>& lambda, const PipelineOptions& opts,
                                          Sampler& sampler);

/// Resolution of the projection onto the free variables and `projected`
/// (a subset of res.dependent_vars) associated with sum mu_k X_projected[k].
/// Throws GenericityError(kMuNotPrimitive) when mu does not separate.
GeometricResolution geom_res_proj(const GeometricResolution& res, const std::vector<std::size_t>& projected,
                                  const std::vector<Integer>& mu);

struct ProjectionProblem {
  std::vector<SparsePoly> system;
  /// Projection onto X_1..X_ell.
  std::size_t ell = 0;
  PipelineOptions options;
};

struct Provenance {
  std::uint64_t seed = 0;
  Integer bound;
  unsigned retries = 0;
  std::vector<Rat> xi;
  std::vector<Integer> b, lambda, mu;
  std::size_t precision = 0;
  std::vector<std::size_t> trans_basis;
  /// Variables in the renamed order (free, dependent, specialized), as
  /// original indices.
  std::vector<std::size_t> permutation;
  Integer lift_bound;
  /// MV(A, Delta^(n-r)), the bound on the degree of the output.
  Integer mv_bound;
};

struct ProjectionResult {
  std::size_t ambient = 0;
  std::size_t ell = 0;
  /// The projection is dense in the target space (t = ell); no resolution.
  bool dense_image = false;
  std::vector<std::size_t> free_vars;
  std::vector<std::size_t> dependent_vars;
  std::vector<std::size_t> specialized_vars;
  /// Resolution of the specialized toric variety before projecting.
  GeometricResolution parametric;
  /// Resolution of the closure of the projection.
  GeometricResolution resolution;
  Provenance provenance;
};

/// The rational-coefficient projection pipeline: transcendence basis,
/// specialization of the basis variables beyond X_ell at random b,
/// parametric resolution, projection. Verified before returning.
ProjectionResult q_projection(const ProjectionProblem& problem);

/// Supports of the equations; throws InputError("empty support") on a zero
/// polynomial.
SupportFamily supports_of(const std::vector<SparsePoly>& system);

}  // namespace toric
