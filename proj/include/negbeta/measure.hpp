#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include "negbeta/core.hpp"

namespace negbeta {

// ---------------------------------------------------------------------------
// Supports
// ---------------------------------------------------------------------------

/// The case-selected forward-invariant interval around alpha that contains
/// the support of the acim.
Interval invariant_window(const ExpansionParams& p);

/// Image of a closed interval under R, split at alpha; closures of the
/// branch images, clamped into [M-, M+].
std::vector<Interval> image_R(const ExpansionParams& p, const Interval& iv);
IntervalSet image_R(const ExpansionParams& p, const IntervalSet& set);

enum class SupportStatus { Stabilized, MaxIterReached };
const char* to_string(SupportStatus s);

struct SupportResult {
  IntervalSet support;
  std::size_t iterations = 0;
  SupportStatus status = SupportStatus::MaxIterReached;
  /// sup over y in R(support) of dist(y, support)
  double invariance_residual = 0.0;
};

/// Grows A -> A ∪ closure(R(A)) from the two one-sided images of a small
/// neighbourhood of alpha until the set stops changing (symmetric difference
/// below tol).
SupportResult support(const ExpansionParams& p, std::size_t max_iter = 1000,
                      double tol = 1e-10);

// ---------------------------------------------------------------------------
// Piecewise affine maps and the Hofbauer factor construction
// ---------------------------------------------------------------------------

struct AffineBranch {
  Interval domain;
  double slope = 0.0;
  double intercept = 0.0;

  double operator()(double x) const { return slope * x + intercept; }
};

/// Branches are listed left to right; the map value at a shared endpoint is
/// taken from the first branch that contains it.
struct PiecewiseAffineMap {
  std::vector<AffineBranch> branches;

  double operator()(double x) const;
  Interval domain() const;
};

/// R as a two-branch affine map on [M-, M+].
PiecewiseAffineMap piecewise_R(const ExpansionParams& p);

enum class BreakConvention {
  R,  // lower branch on [0, c)
  L,  // lower branch on [0, c]
};

/// phi shifts [M-, M+] onto [0, 1/(beta-1)]; W is R in those coordinates;
/// T on [0, 2/(beta-1)] is the increasing lift with W∘tau = tau∘T.
class FactorMaps {
 public:
  explicit FactorMaps(const ExpansionParams& p,
                      BreakConvention convention = BreakConvention::R);

  double phi(double x) const { return x + shift_; }
  double phi_inverse(double u) const { return u - shift_; }
  double W(double u) const;
  double T(double x) const;
  double tau(double x) const;

  double half() const { return half_; }  // 1/(beta-1)
  double full() const { return 2.0 * half_; }
  /// Cut point of W, phi(alpha).
  double w_break() const { return cut_; }
  /// Discontinuities of T inside (0, 2/(beta-1)).
  std::vector<double> t_breakpoints() const;

  PiecewiseAffineMap W_map() const;
  PiecewiseAffineMap T_map() const;

 private:
  double beta_;
  double shift_;
  double half_;
  double cut_;
  BreakConvention convention_;
};

// ---------------------------------------------------------------------------
// Densities
// ---------------------------------------------------------------------------

/// Piecewise-constant probability density on equal-width bins.
struct DensityEstimate {
  Interval domain;
  Eigen::VectorXd bin_edges;  // size bins + 1
  Eigen::VectorXd mass;       // size bins, sums to 1
  double stationarity_residual = 0.0;
  std::size_t iterations = 0;

  Eigen::Index bins() const { return mass.size(); }
  double bin_width() const { return domain.length() / static_cast<double>(mass.size()); }
  Eigen::VectorXd density() const { return mass / bin_width(); }
};

/// Row-stochastic Ulam matrix: entry (i, j) is the fraction of bin i that the
/// map sends into bin j, computed exactly from the affine branches. Mass sent
/// outside the domain is dropped, so rows may sum to less than 1.
Eigen::SparseMatrix<double, Eigen::RowMajor> ulam_matrix(const PiecewiseAffineMap& map,
                                                         const Interval& domain,
                                                         std::size_t bins);

/// Stationary vector of the Ulam matrix by damped power iteration from the
/// uniform distribution. Throws NonConvergence if the L1 step residual is
/// still above tol after max_power_iters.
DensityEstimate ulam_density(const PiecewiseAffineMap& map, const Interval& domain,
                             std::size_t bins, double tol = 1e-12,
                             std::size_t max_power_iters = 100000);

/// Invariant density h of the lift T on [0, 2/(beta-1)].
DensityEstimate density_T(const ExpansionParams& p, std::size_t bins);

/// Density of R on [M-, M+] obtained as k(x) = 2 h(phi(x)), renormalised.
/// Uses 2 * bins bins for T so that k has `bins` bins.
DensityEstimate density_R_via_factor(const ExpansionParams& p, std::size_t bins = 4096);

/// sum_i |a_i - b_i| over bin masses (both estimates on the same bins).
double l1_distance(const DensityEstimate& a, const DensityEstimate& b);

/// Mass assigned to points outside `set`, assuming uniform mass inside bins.
double mass_outside(const DensityEstimate& d, const IntervalSet& set);

}  // namespace negbeta
