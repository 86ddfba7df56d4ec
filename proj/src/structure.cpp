#include "rieffel/structure.hpp"

#include <cmath>

#include "rieffel/errors.hpp"

namespace rieffel {

namespace {

Matrix standard_theta(int n) {
  Matrix t = Matrix::Zero(2 * n, 2 * n);
  t.topRightCorner(n, n) = Matrix::Identity(n, n);
  t.bottomLeftCorner(n, n) = -Matrix::Identity(n, n);
  return t;
}

Matrix standard_J(int n) { return -standard_theta(n); }

Vector to_vector(const LatticeVector& k) {
  Vector v(static_cast<Eigen::Index>(k.size()));
  for (std::size_t i = 0; i < k.size(); ++i) v(static_cast<Eigen::Index>(i)) = k[i];
  return v;
}

void check_lattice(const SymplecticStructure& s, const LatticeVector& k) {
  if (k.size() != s.dim())
    throw DimensionError("lattice vector " + k.to_string() + " does not match structure dimension " +
                         std::to_string(s.dim()));
}

}  // namespace

bool StructureDiagnostics::ok(double tol) const {
  return shapes_ok && theta_antisymmetry <= tol && theta_abs_det > tol && g_asymmetry <= tol &&
         g_min_eigenvalue > 0.0 && j_square_residual <= tol && compatibility_residual <= tol;
}

StructureDiagnostics diagnose_structure(int dim_n, const Matrix& theta, const Matrix& metric_g,
                                        const Matrix& complex_J) {
  StructureDiagnostics d;
  const Eigen::Index m = 2 * static_cast<Eigen::Index>(dim_n);
  d.shapes_ok = dim_n >= 1 && theta.rows() == m && theta.cols() == m && metric_g.rows() == m &&
                metric_g.cols() == m && complex_J.rows() == m && complex_J.cols() == m;
  if (!d.shapes_ok) return d;
  d.theta_antisymmetry = (theta + theta.transpose()).cwiseAbs().maxCoeff();
  d.theta_abs_det = std::abs(theta.determinant());
  d.g_asymmetry = (metric_g - metric_g.transpose()).cwiseAbs().maxCoeff();
  Eigen::SelfAdjointEigenSolver<Matrix> eig(0.5 * (metric_g + metric_g.transpose()),
                                            Eigen::EigenvaluesOnly);
  d.g_min_eigenvalue = eig.eigenvalues().minCoeff();
  d.j_square_residual = (complex_J * complex_J + Matrix::Identity(m, m)).cwiseAbs().maxCoeff();
  d.compatibility_residual = (metric_g - theta * complex_J).cwiseAbs().maxCoeff();
  return d;
}

SymplecticStructure::SymplecticStructure(int dim_n, Matrix theta, Matrix metric_g,
                                         Matrix complex_J, double tol)
    : dim_n_(dim_n),
      theta_(std::move(theta)),
      metric_g_(std::move(metric_g)),
      complex_J_(std::move(complex_J)) {
  if (dim_n < 1) throw DimensionError("dim_n must be at least 1");
  const auto d = diagnose_structure(dim_n_, theta_, metric_g_, complex_J_);
  if (!d.shapes_ok) throw StructureError("structure matrices must be 2n x 2n");
  if (!d.ok(tol))
    throw StructureError(
        "incompatible structure: |theta+theta^T|=" + std::to_string(d.theta_antisymmetry) +
        " |det theta|=" + std::to_string(d.theta_abs_det) + " |g-g^T|=" +
        std::to_string(d.g_asymmetry) + " min eig g=" + std::to_string(d.g_min_eigenvalue) +
        " |J^2+1|=" + std::to_string(d.j_square_residual) +
        " |g-theta J|=" + std::to_string(d.compatibility_residual));
  poisson_ = poisson_tensor(theta_);
  inverse_metric_ = metric_g_.llt().solve(Matrix::Identity(metric_g_.rows(), metric_g_.cols()));
}

SymplecticStructure SymplecticStructure::from_basis_change(const Matrix& basis_change) {
  if (basis_change.rows() != basis_change.cols() || basis_change.rows() % 2 != 0 ||
      basis_change.rows() == 0)
    throw StructureError("basis change must be a nonempty even-sized square matrix");
  const int n = static_cast<int>(basis_change.rows() / 2);
  Eigen::FullPivLU<Matrix> lu(basis_change);
  if (!lu.isInvertible()) throw StructureError("basis change is singular");
  Matrix theta = basis_change.transpose() * standard_theta(n) * basis_change;
  Matrix J = lu.inverse() * standard_J(n) * basis_change;
  Matrix g = basis_change.transpose() * basis_change;
  // Symmetrize away rounding so validation at 1e-12 sees the exact algebraic shape.
  theta = 0.5 * (theta - theta.transpose());
  g = 0.5 * (g + g.transpose());
  return SymplecticStructure(n, std::move(theta), std::move(g), std::move(J), 1e-10);
}

SymplecticStructure make_standard_structure(int n) {
  if (n < 1) throw DimensionError("dim_n must be at least 1");
  return SymplecticStructure(n, standard_theta(n), Matrix::Identity(2 * n, 2 * n), standard_J(n));
}

Matrix poisson_tensor(const Matrix& theta) {
  Eigen::FullPivLU<Matrix> lu(theta);
  if (!lu.isInvertible()) throw StructureError("theta is singular");
  Matrix pi = -lu.inverse();
  return 0.5 * (pi - pi.transpose());
}

double symplectic_pairing(const SymplecticStructure& s, const LatticeVector& k,
                          const LatticeVector& l) {
  check_lattice(s, k);
  check_lattice(s, l);
  const Matrix& pi = s.poisson();
  double acc = 0.0;
  for (std::size_t r = 0; r < k.size(); ++r) {
    if (k[r] == 0) continue;
    double row = 0.0;
    for (std::size_t c = 0; c < l.size(); ++c)
      if (l[c] != 0) row += pi(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) * l[c];
    acc += k[r] * row;
  }
  return acc;
}

double inverse_metric_form(const SymplecticStructure& s, const LatticeVector& k) {
  check_lattice(s, k);
  const Vector v = to_vector(k);
  return v.dot(s.inverse_metric() * v);
}

ComplexFrame::ComplexFrame(int dim_n, Matrix basis_change)
    : dim_n_(dim_n), basis_change_(std::move(basis_change)) {
  Eigen::FullPivLU<Matrix> lu(basis_change_);
  if (!lu.isInvertible()) throw StructureError("frame basis change is singular");
  dual_change_ = lu.inverse().transpose();
}

Vector ComplexFrame::transformed(const LatticeVector& k) const {
  if (k.size() != 2 * static_cast<std::size_t>(dim_n_))
    throw DimensionError("lattice vector " + k.to_string() + " does not match frame dimension");
  return dual_change_ * to_vector(k);
}

std::vector<std::complex<double>> ComplexFrame::lambda_of(const LatticeVector& k) const {
  const Vector t = transformed(k);
  std::vector<std::complex<double>> lambda(static_cast<std::size_t>(dim_n_));
  for (int j = 0; j < dim_n_; ++j) lambda[static_cast<std::size_t>(j)] = {t(j), t(dim_n_ + j)};
  return lambda;
}

ComplexFrame complex_frame(const SymplecticStructure& s) {
  const int n = s.dim_n();
  const Eigen::Index m = 2 * n;
  const Matrix& G = s.metric_g();
  const Matrix& J = s.complex_J();
  auto inner = [&G](const Vector& x, const Vector& y) { return x.dot(G * y); };

  // Columns: f_1..f_n, J f_1..J f_n (inverse of the basis change).
  Matrix frame = Matrix::Zero(m, m);
  int found = 0;
  for (Eigen::Index c = 0; c < m && found < n; ++c) {
    Vector v = Vector::Unit(m, c);
    for (int pass = 0; pass < 2; ++pass) {
      for (int j = 0; j < found; ++j) {
        v -= inner(frame.col(j), v) * frame.col(j);
        v -= inner(frame.col(n + j), v) * frame.col(n + j);
      }
    }
    const double norm = std::sqrt(inner(v, v));
    if (norm < 1e-8) continue;
    v /= norm;
    frame.col(found) = v;
    frame.col(n + found) = J * v;
    ++found;
  }
  if (found != n) throw StructureError("could not build a complex frame for J");
  Eigen::FullPivLU<Matrix> lu(frame);
  return ComplexFrame(n, lu.inverse());
}

}  // namespace rieffel
