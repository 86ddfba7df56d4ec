#include "rieffel/norms.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <vector>

#include "rieffel/errors.hpp"
#include "rieffel/random.hpp"

namespace rieffel {

double l1_upper(const FourierElement& a) { return a.l1_norm(); }

TwistedCompression::TwistedCompression(const DeformationContext& ctx, const FourierElement& a,
                                       int box_N)
    : box_N_(box_N), lattice_dim_(a.lattice_dim()) {
  if (box_N < 1) throw DomainError("box_N must be at least 1");
  if (a.dim_n() != ctx.dim_n()) throw DimensionError("element and context dimensions differ");
  const double side = 2.0 * box_N + 1.0;
  const double dim = std::pow(side, static_cast<double>(lattice_dim_));
  if (dim > 2e7) throw DomainError("compression box too large");
  const auto n_rows = static_cast<Eigen::Index>(dim);

  std::vector<Eigen::Triplet<Complex>> triplets;
  triplets.reserve(static_cast<std::size_t>(n_rows) * a.size());
  for (Eigen::Index col = 0; col < n_rows; ++col) {
    const LatticeVector m = lattice_point(col);
    for (const auto& [k, c] : a.terms()) {
      const Eigen::Index row = index_of(m + k);
      if (row < 0) continue;
      triplets.emplace_back(row, col, c * cocycle(ctx, k, m));
    }
  }
  matrix_.resize(n_rows, n_rows);
  matrix_.setFromTriplets(triplets.begin(), triplets.end());
}

Eigen::Index TwistedCompression::index_of(const LatticeVector& m) const {
  if (m.size() != lattice_dim_) throw DimensionError("lattice vector does not match the box");
  const Eigen::Index side = 2 * box_N_ + 1;
  Eigen::Index index = 0;
  for (std::size_t j = lattice_dim_; j-- > 0;) {
    if (m[j] < -box_N_ || m[j] > box_N_) return -1;
    index = index * side + (m[j] + box_N_);
  }
  return index;
}

LatticeVector TwistedCompression::lattice_point(Eigen::Index index) const {
  const Eigen::Index side = 2 * box_N_ + 1;
  std::vector<int> c(lattice_dim_);
  for (std::size_t j = 0; j < lattice_dim_; ++j) {
    c[j] = static_cast<int>(index % side) - box_N_;
    index /= side;
  }
  return LatticeVector(std::move(c));
}

double rep_lower(const DeformationContext& ctx, const FourierElement& a, int box_N) {
  if (box_N < 1) throw DomainError("box_N must be at least 1");
  if (a.is_zero()) return 0.0;
  if (a.size() == 1) {
    // A single mode compresses to a partial permutation times unit phases.
    const auto& [k, c] = *a.terms().begin();
    return k.max_abs() <= 2 * box_N ? std::abs(c) : 0.0;
  }

  const TwistedCompression M(ctx, a, box_N);
  constexpr double kTolerance = 1e-10;
  constexpr int kMaxIterations = 10000;  // products with M^* M
  constexpr Eigen::Index kKrylov = 60;

  if (M.dimension() <= 1000) {
    // Small boxes: the full spectrum of M^* M.
    const Eigen::MatrixXcd gram = Eigen::MatrixXcd(M.matrix().adjoint() * M.matrix());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> dense(gram, Eigen::EigenvaluesOnly);
    return std::sqrt(std::max(dense.eigenvalues().maxCoeff(), 0.0));
  }

  using CVector = TwistedCompression::CVector;
  Rng rng(0x5eedULL);
  CVector x(M.dimension());
  for (Eigen::Index i = 0; i < x.size(); ++i) x(i) = rng.unit_disc();
  x.normalize();

  // Restarted Lanczos on M^* M, i.e. power iteration accelerated over its
  // Krylov space. Ritz values never exceed the top eigenvalue, so every
  // iterate is a lower bound. Stop on a small Ritz residual.
  const Eigen::Index m = std::min<Eigen::Index>(kKrylov, M.dimension());
  double best = 0.0;
  int products = 0;
  while (products < kMaxIterations) {
    std::vector<CVector> V{x};
    Eigen::VectorXd alpha(m), beta(m);
    Eigen::Index steps = 0;
    double last_beta = 0.0;
    for (Eigen::Index j = 0; j < m; ++j) {
      CVector w = M.apply_adjoint(M.apply(V[static_cast<std::size_t>(j)]));
      ++products;
      alpha(j) = V[static_cast<std::size_t>(j)].dot(w).real();
      // Full reorthogonalization, twice.
      for (int pass = 0; pass < 2; ++pass)
        for (const auto& v : V) w -= v.dot(w) * v;
      steps = j + 1;
      last_beta = w.norm();
      if (j + 1 == m || last_beta <= 1e-14 * std::max(alpha(j), 1e-300)) break;
      beta(j) = last_beta;
      V.push_back(w / last_beta);
    }
    Eigen::MatrixXd T = Eigen::MatrixXd::Zero(steps, steps);
    for (Eigen::Index j = 0; j < steps; ++j) {
      T(j, j) = alpha(j);
      if (j + 1 < steps) T(j, j + 1) = T(j + 1, j) = beta(j);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(T);
    const Eigen::Index top = steps - 1;
    const double theta = std::max(eig.eigenvalues()(top), 0.0);
    best = std::max(best, std::sqrt(theta));
    if (theta == 0.0) return 0.0;
    const double residual = last_beta * std::abs(eig.eigenvectors()(top, top));
    if (steps == M.dimension() || residual <= kTolerance * theta) return best;
    CVector y = CVector::Zero(M.dimension());
    for (Eigen::Index j = 0; j < steps; ++j) y += eig.eigenvectors()(j, top) * V[static_cast<std::size_t>(j)];
    x = y.normalized();
  }
  throw ConvergenceError("rep_lower: no convergence within 10000 products with M^* M");
}

NormCurve norm_curve(const SymplecticStructure& structure, const FourierElement& a,
                     const HbarGrid& grid, int box_N) {
  NormCurve curve{{}, 0.0, std::nullopt, true};
  const double upper = l1_upper(a);
  for (double hbar : grid.values()) {
    const double lower = rep_lower(DeformationContext(structure, hbar), a, box_N);
    curve.points.push_back({hbar, {lower, upper, box_N}});
  }
  for (std::size_t i = 1; i < curve.points.size(); ++i)
    curve.max_adjacent_jump =
        std::max(curve.max_adjacent_jump,
                 std::abs(curve.points[i].estimate.lower - curve.points[i - 1].estimate.lower));

  const int refinement = a.dim_n() == 1 ? 64 : 12;
  const auto sup = sup_norm_estimate(a, refinement);
  curve.classical = sup;
  const double lower0 = curve.points.front().estimate.lower;
  curve.classical_consistent = lower0 <= sup.upper + 1e-10 && sup.lower <= upper + 1e-10;
  return curve;
}

}  // namespace rieffel
