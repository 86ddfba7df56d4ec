#pragma once

#include <vector>

#include "rieffel/deformation.hpp"

namespace rieffel {

/// Fourier multiplier of S_hbar on e_k: exp(-(hbar/4) k.G^{-1}.k).
/// Throws StructureError unless |det G - 1| <= 1e-10: the Gaussian in S_hbar
/// is normalized for unimodular g only.
double smoothing_multiplier(const DeformationContext& ctx, const LatticeVector& k);

/// S_hbar(a) = (pi hbar)^{-n} int exp(-g(u,u)/hbar) alpha_u(a) du, in
/// multiplier form. S_0 is the identity.
FourierElement smooth(const DeformationContext& ctx, const FourierElement& a);

/// Direct tensor-product Gauss-Legendre quadrature of the S_hbar integral over
/// the box |u|_inf <= grid_radius. grid_radius <= 0 selects
/// 6 sqrt(hbar / lambda_min(G)).
FourierElement smooth_quadrature_oracle(const DeformationContext& ctx, const FourierElement& a,
                                        double grid_radius, int points_per_axis);

/// || (S_{hbar+h} a - S_{hbar-h} a) / 2h - (1/4) S_hbar(Delta_g a) ||_{l1}
double derivative_identity_residual(const DeformationContext& ctx, const FourierElement& a,
                                    double step);

/// exp((hbar/4) Delta_g) a, built from the Laplacian symbol.
FourierElement heat_asymptotic(const DeformationContext& ctx, const FourierElement& a);

using MultiIndex = std::vector<int>;

struct SumOfSquaresTerm {
  MultiIndex multiindex_K;
  FourierElement element;  ///< a_K
  double weight;           ///< (pi hbar)^{-2n} (2/hbar)^{|K|} / K!
};

/// a_K = int prod_j z_j^{K_j} exp(-|z_j|^2/hbar) alpha_z(a) dz in the complex
/// coordinates of `frame`, evaluated per character in closed form.
SumOfSquaresTerm sos_term(const DeformationContext& ctx, const ComplexFrame& frame,
                          const FourierElement& a, const MultiIndex& K);
SumOfSquaresTerm sos_term(const DeformationContext& ctx, const FourierElement& a,
                          const MultiIndex& K);

struct SosSeries {
  FourierElement approx;
  double tail_bound;  ///< l1 bound on the omitted terms |K| > cutoff
};

/// sum_{|K| <= cutoff} weight_K a_K^* a_K with undeformed products, summed in
/// lexicographic multi-index order.
SosSeries sos_series(const DeformationContext& ctx, const FourierElement& a, int cutoff);

/// Closed-form l1 bound on the terms of sos_series beyond `cutoff`.
double sos_tail_bound(const DeformationContext& ctx, const FourierElement& a, int cutoff);

/// Smallest cutoff whose tail bound is <= tolerance (capped at 1000).
int sos_cutoff(const DeformationContext& ctx, const FourierElement& a, double tolerance);

struct PositivityCertificate {
  double min_value;              ///< min real part over the grid
  std::vector<double> argmin;
  double max_imaginary;          ///< max |imag part| over the grid
};

/// Samples S_hbar(a^* * a) on the uniform grid with refinement^{2n} points.
PositivityCertificate positivity_certificate(const DeformationContext& ctx,
                                             const FourierElement& a, int refinement);

}  // namespace rieffel
