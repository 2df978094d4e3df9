#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <vector>

#include "toric/series.hpp"
#include "toric/uni_poly.hpp"
#include "toric/zerodim.hpp"

namespace toric {

/// Resolution whose coefficients are power series in the free variables
/// around xi, exact through total degree `precision`.
struct LiftedResolution {
  std::vector<std::size_t> free_vars;
  std::vector<std::size_t> dependent_vars;
  std::vector<Integer> lambda;
  std::vector<Rat> xi;
  UniPoly<TruncSeries> q;
  std::vector<UniPoly<TruncSeries>> params;
  std::size_t precision = 0;
};

/// Newton-Hensel lifting of the resolution of system(xi, X_dep) = 0 to a
/// resolution over the series ring in X_free - xi. Precision roughly doubles
/// per step; after every step the lifted parametrization is checked to
/// annihilate the system modulo q.
class HenselLifter {
 public:
  /// `system` lives in an ambient ring containing the free and dependent
  /// variables; dependent_vars is increasing and matches the variable order
  /// of `base`. Throws GenericityError(kSingularJacobian) when the Jacobian
  /// is not invertible at the base roots.
  HenselLifter(std::vector<SparsePoly> system, std::vector<std::size_t> free_vars,
               std::vector<std::size_t> dependent_vars, std::vector<Integer> lambda, const ZeroDimSolution& base,
               std::vector<Rat> xi, std::size_t max_precision);

  /// Continues lifting until the precision reaches kappa (<= max_precision).
  void lift_to(std::size_t kappa);
  const LiftedResolution& current() const noexcept { return res_; }
  /// Newton steps taken so far.
  std::size_t steps() const noexcept { return steps_; }

 private:
  using SPoly = UniPoly<TruncSeries>;
  // A polynomial grouped by its exponents in the dependent variables; the
  // remaining factor only involves free variables.
  using Grouped = std::vector<std::pair<std::vector<std::uint32_t>, SparsePoly>>;

  Grouped group(const SparsePoly& f) const;
  std::vector<SPoly> evaluate(const std::vector<Grouped>& polys, const std::vector<SPoly>& v, const SPoly& q,
                              std::size_t prec) const;
  void step(std::size_t new_prec);

  std::vector<SparsePoly> system_;
  std::vector<std::size_t> free_, dep_;
  std::vector<Integer> lambda_;
  std::shared_ptr<const SeriesRing> ring_;
  std::vector<Grouped> f_;
  std::vector<std::vector<Grouped>> jac_;  // jac_[k][j] = d f_k / d X_dep[j]
  LiftedResolution res_;
  SPoly det_inv_;
  std::size_t det_inv_prec_ = 0;
  std::size_t steps_ = 0;
};

/// One-shot lifting to precision kappa.
LiftedResolution newton_hensel_lift(const std::vector<SparsePoly>& system, const std::vector<std::size_t>& free_vars,
                                    const std::vector<std::size_t>& dependent_vars,
                                    const std::vector<Integer>& lambda, const ZeroDimSolution& base,
                                    const std::vector<Rat>& xi, std::size_t kappa);

}  // namespace toric
