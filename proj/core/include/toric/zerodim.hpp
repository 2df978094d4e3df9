#pragma once

#include <cstddef>
#include <vector>

#include "toric/rat_fun.hpp"
#include "toric/sparse_poly.hpp"
#include "toric/uni_poly.hpp"

namespace toric {

/// Geometric resolution of an equidimensional variety with the listed free
/// variables as parameters: coordinate dependent_vars[k] equals
/// params[k](Y) at the roots Y of q. Coefficients are rational functions in
/// the free variables, living in the same ambient ring as the system.
struct GeometricResolution {
  std::size_t ambient = 0;
  std::vector<std::size_t> free_vars;
  std::vector<std::size_t> dependent_vars;
  /// Separating form sum lambda[k] * X_{dependent_vars[k]}.
  std::vector<Integer> lambda;
  UniPoly<RatFun> q;
  std::vector<UniPoly<RatFun>> params;
  /// Set when the saturated ideal was not radical and its radical was used.
  bool multiplicity_warning = false;

  std::size_t degree() const { return static_cast<std::size_t>(q.degree()); }
  /// Parametrization of a dependent variable; throws if it is free.
  const UniPoly<RatFun>& param_of(std::size_t var) const;
};

/// Resolution of the toric zeros of a square system, all over Q.
struct ZeroDimSolution {
  UniPoly<Rat> q;
  std::vector<UniPoly<Rat>> params;  // one per variable
  /// Quotient dimension before passing to the radical.
  std::size_t multiplicity_count = 0;
  bool multiplicity_warning = false;
};

/// Exact resolution of {x in (C*)^m : system(x) = 0} associated with the
/// linear form lambda. Throws GenericityError with kLambdaNotSeparating or
/// kNonGenericInput.
ZeroDimSolution solve_toric_0d_rat(const std::vector<SparsePoly>& system, const std::vector<Integer>& lambda);

/// Same, packaged as a GeometricResolution with no free variables.
GeometricResolution solve_toric_0d(const std::vector<SparsePoly>& system, const std::vector<Integer>& lambda);

/// Number of distinct toric roots of a square system with finitely many.
std::size_t count_toric_roots(const std::vector<SparsePoly>& system);

}  // namespace toric
