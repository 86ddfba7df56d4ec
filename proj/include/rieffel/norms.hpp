#pragma once

#include <optional>
#include <vector>

#include <Eigen/SparseCore>

#include "rieffel/algebra.hpp"
#include "rieffel/deformation.hpp"
#include "rieffel/states.hpp"

namespace rieffel {

/// Bracket for the deformed C*-norm |a|_hbar.
struct NormEstimate {
  double lower;
  double upper;
  int rep_size;  ///< box half-width N of the compression behind `lower`
};

/// sum_k |a_k|; dominates |a|_hbar because every character has norm 1.
double l1_upper(const FourierElement& a);

/// Compression of the twisted left regular representation,
/// M(a) e_m = a * e_m = sum_k a_k sigma(k, m) e_{m+k}, to the coefficient box
/// {-N..N}^{2n}.
class TwistedCompression {
 public:
  using CVector = Eigen::VectorXcd;

  TwistedCompression(const DeformationContext& ctx, const FourierElement& a, int box_N);

  Eigen::Index dimension() const noexcept { return matrix_.rows(); }
  int box_N() const noexcept { return box_N_; }
  const Eigen::SparseMatrix<Complex>& matrix() const noexcept { return matrix_; }

  CVector apply(const CVector& x) const { return matrix_ * x; }
  CVector apply_adjoint(const CVector& x) const { return matrix_.adjoint() * x; }

  /// Box index of m, or -1 outside the box.
  Eigen::Index index_of(const LatticeVector& m) const;
  LatticeVector lattice_point(Eigen::Index index) const;

 private:
  int box_N_;
  std::size_t lattice_dim_;
  Eigen::SparseMatrix<Complex> matrix_;
};

/// Largest singular value of the box-N compression: a lower bound for
/// |a|_hbar, nondecreasing in box_N. Restarted Lanczos power iteration on
/// M^* M to relative tolerance 1e-10 (cap 10000 products, ConvergenceError
/// beyond).
double rep_lower(const DeformationContext& ctx, const FourierElement& a, int box_N);

struct NormCurvePoint {
  double hbar;
  NormEstimate estimate;
};

struct NormCurve {
  std::vector<NormCurvePoint> points;
  double max_adjacent_jump;  ///< of the lower curve
  /// Grid sup-norm bounds at hbar = 0, where |.|_0 is the sup norm.
  std::optional<SupNormBounds> classical;
  bool classical_consistent = true;  ///< lower(0) <= sup upper and sup lower <= upper
};

NormCurve norm_curve(const SymplecticStructure& structure, const FourierElement& a,
                     const HbarGrid& grid, int box_N);

}  // namespace rieffel
