#pragma once

#include <string>
#include <vector>

#include "toric/zerodim.hpp"

namespace toric {

struct IdentityCheck {
  std::string name;
  bool passed;
};

struct VerificationReport {
  std::vector<IdentityCheck> checks;

  bool ok() const;
  /// Name of the first failing identity, empty when all pass.
  std::string first_failure() const;
};

/// f_k(X_free, params(Y)) == 0 mod q(Y) over Q(X_free) for every equation,
/// plus the shape conditions (q monic, deg params < deg q).
VerificationReport verify_resolution(const GeometricResolution& res, const std::vector<SparsePoly>& system);

/// q_mu(p_mu(Y)) == 0 and v_j(p_mu(Y)) == w_j(Y) mod q_lambda(Y), where
/// p_mu = sum mu_j w_j over the projected variables of `projected`.
VerificationReport verify_projection(const GeometricResolution& projected, const GeometricResolution& parent);

/// f(X_free, params(Y)) mod q(Y), the residual behind verify_resolution.
UniPoly<RatFun> substitute_mod(const SparsePoly& f, const GeometricResolution& res);

}  // namespace toric
