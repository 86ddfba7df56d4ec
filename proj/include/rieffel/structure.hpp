#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "rieffel/lattice.hpp"

namespace rieffel {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

inline constexpr double kStructureTolerance = 1e-12;

/// Residuals of each invariant of a (theta, g, J) triple, so tests can assert
/// them one at a time.
struct StructureDiagnostics {
  bool shapes_ok = false;
  double theta_antisymmetry = 0.0;  ///< max |theta + theta^T|
  double theta_abs_det = 0.0;       ///< |det theta|
  double g_asymmetry = 0.0;         ///< max |g - g^T|
  double g_min_eigenvalue = 0.0;
  double j_square_residual = 0.0;   ///< max |J J + I|
  double compatibility_residual = 0.0;  ///< max |g - theta J|

  bool ok(double tol = kStructureTolerance) const;
};

StructureDiagnostics diagnose_structure(int dim_n, const Matrix& theta, const Matrix& metric_g,
                                        const Matrix& complex_J);

/// Compatible triple (theta, g, J) on R^{2n} with g = theta J and J^2 = -1.
/// The Poisson tensor -theta^{-1} is computed once at construction.
class SymplecticStructure {
 public:
  /// Throws StructureError if any invariant fails at `tol`.
  SymplecticStructure(int dim_n, Matrix theta, Matrix metric_g, Matrix complex_J,
                      double tol = kStructureTolerance);

  /// Builds the triple whose canonical coordinates are w = P u: theta = P^T theta_0 P,
  /// J = P^{-1} J_0 P, g = P^T P.
  static SymplecticStructure from_basis_change(const Matrix& basis_change);

  int dim_n() const noexcept { return dim_n_; }
  std::size_t dim() const noexcept { return 2 * static_cast<std::size_t>(dim_n_); }
  const Matrix& theta() const noexcept { return theta_; }
  const Matrix& metric_g() const noexcept { return metric_g_; }
  const Matrix& complex_J() const noexcept { return complex_J_; }
  const Matrix& poisson() const noexcept { return poisson_; }
  const Matrix& inverse_metric() const noexcept { return inverse_metric_; }

 private:
  int dim_n_;
  Matrix theta_;
  Matrix metric_g_;
  Matrix complex_J_;
  Matrix poisson_;
  Matrix inverse_metric_;
};

/// theta = [[0, I], [-I, 0]], J = [[0, -I], [I, 0]], g = I.
SymplecticStructure make_standard_structure(int n);

/// pi = -theta^{-1}. Throws StructureError when theta is singular.
Matrix poisson_tensor(const Matrix& theta);
inline const Matrix& poisson_tensor(const SymplecticStructure& s) { return s.poisson(); }

/// k . pi . l, the symplectic pairing of two wave numbers.
double symplectic_pairing(const SymplecticStructure& s, const LatticeVector& k,
                          const LatticeVector& l);

/// k . G^{-1} . k
double inverse_metric_form(const SymplecticStructure& s, const LatticeVector& k);

/// Canonical coordinates for J: basis_change maps input coordinates u to
/// w = basis_change * u, in which J is [[0,-I],[I,0]] and g is the identity.
class ComplexFrame {
 public:
  ComplexFrame(int dim_n, Matrix basis_change);

  int dim_n() const noexcept { return dim_n_; }
  const Matrix& basis_change() const noexcept { return basis_change_; }

  /// Wave number in canonical coordinates, basis_change^{-T} k.
  Vector transformed(const LatticeVector& k) const;
  /// lambda_j = k'_j + i k'_{n+j}, with k' = transformed(k).
  std::vector<std::complex<double>> lambda_of(const LatticeVector& k) const;

 private:
  int dim_n_;
  Matrix basis_change_;
  Matrix dual_change_;  // basis_change^{-T}
};

/// Symplectic Gram-Schmidt: picks g-orthonormal f_1..f_n with J f_j completing
/// the basis. The standard structure yields the identity.
ComplexFrame complex_frame(const SymplecticStructure& s);

}  // namespace rieffel
