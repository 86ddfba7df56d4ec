#include "rieffel/algebra.hpp"

#include <algorithm>
#include <cmath>

#include "rieffel/errors.hpp"

namespace rieffel {

namespace {

void check_point(const FourierElement& a, std::span<const double> x) {
  if (x.size() != a.lattice_dim())
    throw DimensionError("point of length " + std::to_string(x.size()) + " on a " +
                         std::to_string(a.lattice_dim()) + "-torus");
}

void check_structure(const FourierElement& a, const SymplecticStructure& s) {
  if (a.dim_n() != s.dim_n()) throw DimensionError("element and structure dimensions differ");
}

double dot(const LatticeVector& k, std::span<const double> x) {
  double s = 0.0;
  for (std::size_t i = 0; i < k.size(); ++i) s += k[i] * x[i];
  return s;
}

}  // namespace

FourierElement undeformed_multiply(const FourierElement& a, const FourierElement& b) {
  require_same_dim(a, b);
  FourierElement out(a.dim_n());
  for (const auto& [k, ak] : a.terms())
    for (const auto& [l, bl] : b.terms()) out.add_term(k + l, ak * bl);
  return out;
}

FourierElement involution(const FourierElement& a) {
  FourierElement out(a.dim_n());
  for (const auto& [k, c] : a.terms()) out.add_term(-k, std::conj(c));
  return out;
}

Complex evaluate(const FourierElement& a, std::span<const double> x) {
  check_point(a, x);
  Complex s = 0.0;
  for (const auto& [k, c] : a.terms()) s += c * std::polar(1.0, dot(k, x));
  return s;
}

SupNormBounds sup_norm_estimate(const FourierElement& a, int refinement) {
  if (refinement < 1) throw DomainError("refinement must be at least 1");
  double lower = 0.0;
  for_each_grid_point(a.lattice_dim(), refinement, [&](std::span<const double> x) {
    lower = std::max(lower, std::abs(evaluate(a, x)));
  });
  return {lower, a.l1_norm()};
}

FourierElement translate(const FourierElement& a, std::span<const double> u) {
  check_point(a, u);
  FourierElement out(a.dim_n());
  for (const auto& [k, c] : a.terms()) out.add_term(k, c * std::polar(1.0, dot(k, u)));
  return out;
}

FourierElement derivative(const FourierElement& a, std::size_t direction) {
  if (direction >= a.lattice_dim())
    throw DimensionError("derivative direction " + std::to_string(direction) + " out of range");
  FourierElement out(a.dim_n());
  for (const auto& [k, c] : a.terms()) out.add_term(k, c * Complex(0.0, k[direction]));
  return out;
}

double laplacian_symbol(const SymplecticStructure& s, const LatticeVector& k) {
  return -inverse_metric_form(s, k);
}

FourierElement laplacian_g(const FourierElement& a, const SymplecticStructure& s) {
  check_structure(a, s);
  FourierElement out(a.dim_n());
  for (const auto& [k, c] : a.terms()) out.add_term(k, c * laplacian_symbol(s, k));
  return out;
}

FourierElement poisson_bracket(const FourierElement& a, const FourierElement& b,
                               const SymplecticStructure& s) {
  require_same_dim(a, b);
  check_structure(a, s);
  const Matrix& pi = s.poisson();
  FourierElement out(a.dim_n());
  const std::size_t m = a.lattice_dim();
  for (std::size_t r = 0; r < m; ++r) {
    const FourierElement dr = derivative(a, r);
    if (dr.is_zero()) continue;
    for (std::size_t c = 0; c < m; ++c) {
      const double p = pi(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
      if (p == 0.0) continue;
      out += p * undeformed_multiply(dr, derivative(b, c));
    }
  }
  return out;
}

}  // namespace rieffel
