#pragma once

#include <vector>

#include "rieffel/deformation.hpp"

namespace rieffel {

/// Gaussian damping strengths for the regularized product integral, and the
/// degree of the polynomial extrapolation to zero damping.
class DampingSchedule {
 public:
  /// Throws DomainError unless there are >= 2 positive, strictly decreasing
  /// entries and at least extrapolation_order + 1 of them.
  DampingSchedule(std::vector<double> epsilons, int extrapolation_order);

  /// eps in {1e-4, 3e-5, 1e-5, 3e-6, 1e-6}, quadratic extrapolation.
  static DampingSchedule default_schedule();

  const std::vector<double>& epsilons() const noexcept { return epsilons_; }
  int extrapolation_order() const noexcept { return order_; }

 private:
  std::vector<double> epsilons_;
  int order_;
};

/// (pi hbar)^{-2n} integral over R^{4n} of
///   exp(i k.u + i l.v + (2i/hbar) u.theta.v - eps |u|^2 - eps |v|^2) du dv,
/// evaluated exactly as a complex Gaussian integral.
Complex damped_phase_integral(const DeformationContext& ctx, const LatticeVector& k,
                              const LatticeVector& l, double epsilon);

struct PhaseEstimate {
  Complex value;
  double error_estimate;
};

/// Polynomial (Neville) extrapolation of damped_phase_integral to eps = 0.
/// error_estimate is the change of the extrapolant when the window is moved
/// one damping value coarser.
PhaseEstimate extrapolated_phase(const DeformationContext& ctx, const LatticeVector& k,
                                 const LatticeVector& l,
                                 const DampingSchedule& schedule = DampingSchedule::default_schedule());

struct OracleProduct {
  FourierElement element;
  double error_bound;  ///< sum over pairs of |a_k| |b_l| error_estimate(k, l)
};

/// a * b assembled from extrapolated phases, pair by pair.
OracleProduct oracle_star(const DeformationContext& ctx, const FourierElement& a,
                          const FourierElement& b,
                          const DampingSchedule& schedule = DampingSchedule::default_schedule());

}  // namespace rieffel
