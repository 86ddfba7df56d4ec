#include "rieffel/oscillatory_oracle.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "rieffel/errors.hpp"

namespace rieffel {

namespace {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

// Neville's scheme evaluated at 0 for the nodes xs[first .. first + degree].
Complex extrapolate_to_zero(const std::vector<double>& xs, const std::vector<Complex>& ys,
                            std::size_t first, std::size_t degree) {
  std::vector<Complex> p(ys.begin() + static_cast<std::ptrdiff_t>(first),
                         ys.begin() + static_cast<std::ptrdiff_t>(first + degree + 1));
  for (std::size_t level = 1; level <= degree; ++level) {
    for (std::size_t i = 0; i + level <= degree; ++i) {
      const double xi = xs[first + i];
      const double xj = xs[first + i + level];
      p[i] = (-xj * p[i] + xi * p[i + 1]) / (xi - xj);
    }
  }
  return p[0];
}

}  // namespace

DampingSchedule::DampingSchedule(std::vector<double> epsilons, int extrapolation_order)
    : epsilons_(std::move(epsilons)), order_(extrapolation_order) {
  if (epsilons_.size() < 2) throw DomainError("damping schedule needs at least two entries");
  if (order_ < 0) throw DomainError("extrapolation order must be nonnegative");
  if (epsilons_.size() < static_cast<std::size_t>(order_) + 1)
    throw DomainError("damping schedule too short for the extrapolation order");
  for (std::size_t i = 0; i < epsilons_.size(); ++i) {
    if (!(epsilons_[i] > 0.0)) throw DomainError("damping strengths must be positive");
    if (i > 0 && !(epsilons_[i] < epsilons_[i - 1]))
      throw DomainError("damping strengths must be strictly decreasing");
  }
}

DampingSchedule DampingSchedule::default_schedule() {
  return DampingSchedule({1e-4, 3e-5, 1e-5, 3e-6, 1e-6}, 2);
}

Complex damped_phase_integral(const DeformationContext& ctx, const LatticeVector& k,
                              const LatticeVector& l, double epsilon) {
  const double hbar = ctx.hbar();
  if (hbar <= 0.0) throw DomainError("the oscillatory integral needs hbar > 0");
  if (!(epsilon > 0.0)) throw DomainError("damping epsilon must be positive");
  if (epsilon < 1e-8 * (2.0 / hbar))
    throw DomainError("damping epsilon below the conditioning safeguard 1e-8 * 2/hbar");
  const auto& s = ctx.structure();
  if (k.size() != s.dim() || l.size() != s.dim())
    throw DimensionError("wave numbers do not match the structure dimension");

  const auto m = static_cast<Eigen::Index>(s.dim());
  const int n = s.dim_n();

  // Exponent = -w^T Q w + i b.w with w = (u, v), b = (k, l).
  CMatrix Q = CMatrix::Zero(2 * m, 2 * m);
  Q.diagonal().setConstant(Complex(epsilon, 0.0));
  const Complex coupling(0.0, -1.0 / hbar);
  Q.topRightCorner(m, m) += coupling * s.theta().cast<Complex>();
  Q.bottomLeftCorner(m, m) += coupling * s.theta().transpose().cast<Complex>();

  CVector b(2 * m);
  for (Eigen::Index i = 0; i < m; ++i) {
    b(i) = k[static_cast<std::size_t>(i)];
    b(m + i) = l[static_cast<std::size_t>(i)];
  }

  Eigen::FullPivLU<CMatrix> lu(Q);
  if (!lu.isInvertible() || lu.rcond() < 1e-14)
    throw DomainError("damped quadratic form is numerically singular");

  // Re Q is positive definite, so every eigenvalue has positive real part and
  // the product of principal square roots is the branch reached continuously
  // from the real positive-definite case.
  Eigen::ComplexEigenSolver<CMatrix> eig(Q, false);
  Complex sqrt_det = 1.0;
  for (Eigen::Index i = 0; i < eig.eigenvalues().size(); ++i) {
    const Complex lambda = eig.eigenvalues()(i);
    if (lambda.real() <= 0.0) throw DomainError("damped quadratic form lost definiteness");
    sqrt_det *= std::sqrt(lambda);
  }

  const Complex quad = b.dot(lu.solve(b));  // b^T Q^{-1} b; b is real so dot's conjugation is harmless
  const double pi = std::numbers::pi;
  const Complex gaussian = std::pow(pi, 2 * n) / sqrt_det * std::exp(-0.25 * quad);
  return gaussian / std::pow(pi * hbar, 2 * n);
}

PhaseEstimate extrapolated_phase(const DeformationContext& ctx, const LatticeVector& k,
                                 const LatticeVector& l, const DampingSchedule& schedule) {
  // Smallest damping first.
  std::vector<double> xs(schedule.epsilons().rbegin(), schedule.epsilons().rend());
  std::vector<Complex> ys;
  ys.reserve(xs.size());
  for (double eps : xs) ys.push_back(damped_phase_integral(ctx, k, l, eps));

  const auto order = static_cast<std::size_t>(schedule.extrapolation_order());
  const Complex best = extrapolate_to_zero(xs, ys, 0, order);
  double error;
  if (xs.size() >= order + 2) {
    error = std::abs(best - extrapolate_to_zero(xs, ys, 1, order));
  } else if (order > 0) {
    error = std::abs(best - extrapolate_to_zero(xs, ys, 0, order - 1));
  } else {
    error = std::abs(ys[0] - ys[1]);
  }
  return {best, error};
}

OracleProduct oracle_star(const DeformationContext& ctx, const FourierElement& a,
                          const FourierElement& b, const DampingSchedule& schedule) {
  require_same_dim(a, b);
  if (a.dim_n() != ctx.dim_n()) throw DimensionError("element and context dimensions differ");
  OracleProduct out{FourierElement(a.dim_n()), 0.0};
  for (const auto& [k, ak] : a.terms()) {
    for (const auto& [l, bl] : b.terms()) {
      const auto phase = extrapolated_phase(ctx, k, l, schedule);
      out.element.add_term(k + l, ak * bl * phase.value);
      out.error_bound += std::abs(ak) * std::abs(bl) * phase.error_estimate;
    }
  }
  return out;
}

}  // namespace rieffel
