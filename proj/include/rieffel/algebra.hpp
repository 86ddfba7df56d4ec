#pragma once

#include <span>
#include <vector>

#include "rieffel/fourier_element.hpp"
#include "rieffel/structure.hpp"

namespace rieffel {

/// Pointwise product on the torus: coefficient convolution.
FourierElement undeformed_multiply(const FourierElement& a, const FourierElement& b);

/// (a*)_k = conj(a_{-k}); pointwise complex conjugation.
FourierElement involution(const FourierElement& a);

/// sum_k a_k exp(i k.x)
Complex evaluate(const FourierElement& a, std::span<const double> x);

struct SupNormBounds {
  double lower;  ///< max |a| over the uniform grid
  double upper;  ///< sum_k |a_k|
};

/// Bounds on the sup norm. The grid has `refinement` points per axis at
/// x_j = 2 pi i / refinement, so refinement N is nested in refinement 2N.
SupNormBounds sup_norm_estimate(const FourierElement& a, int refinement);

/// alpha_u(a): coefficient k picks up exp(i k.u).
FourierElement translate(const FourierElement& a, std::span<const double> u);

/// d/dt alpha_{t e_j}(a) at t = 0; `direction` is 0-based.
FourierElement derivative(const FourierElement& a, std::size_t direction);

/// Fourier symbol of Delta_g on e_k: -(k . G^{-1} . k).
double laplacian_symbol(const SymplecticStructure& s, const LatticeVector& k);

/// Delta_g = sum_{rs} (G^{-1})^{rs} d_r d_s.
FourierElement laplacian_g(const FourierElement& a, const SymplecticStructure& s);

/// {a, b} = sum_{rs} pi^{rs} (d_r a)(d_s b), pi the Poisson tensor of s.
FourierElement poisson_bracket(const FourierElement& a, const FourierElement& b,
                               const SymplecticStructure& s);

/// Visits every point of the uniform grid with `per_axis` points on each of
/// the `dim` torus axes.
template <typename Visitor>
void for_each_grid_point(std::size_t dim, int per_axis, Visitor&& visit) {
  std::vector<int> idx(dim, 0);
  std::vector<double> x(dim, 0.0);
  const double step = 2.0 * 3.14159265358979323846 / per_axis;
  while (true) {
    for (std::size_t j = 0; j < dim; ++j) x[j] = step * idx[j];
    visit(std::span<const double>(x));
    std::size_t j = 0;
    while (j < dim && ++idx[j] == per_axis) idx[j++] = 0;
    if (j == dim) break;
  }
}

}  // namespace rieffel
