#pragma once

#include "rieffel/fourier_element.hpp"
#include "rieffel/structure.hpp"

namespace rieffel {

/// A fiber label: a compatible structure plus hbar >= 0.
class DeformationContext {
 public:
  /// Throws DomainError for negative or non-finite hbar.
  DeformationContext(SymplecticStructure structure, double hbar);

  const SymplecticStructure& structure() const noexcept { return structure_; }
  double hbar() const noexcept { return hbar_; }
  int dim_n() const noexcept { return structure_.dim_n(); }

  DeformationContext with_hbar(double hbar) const { return {structure_, hbar}; }

 private:
  SymplecticStructure structure_;
  double hbar_;
};

inline constexpr int kMaxMoyalOrder = 64;

/// sigma_hbar(k, l) = exp(-(i hbar / 2) k.pi.l). This phase is the orientation
/// reference for everything else: the Poisson tensor and the Moyal series are
/// fixed to agree with it, and the oscillatory oracle checks it.
Complex cocycle(const DeformationContext& ctx, const LatticeVector& k, const LatticeVector& l);

/// Twisted convolution: e_k * e_l = sigma(k, l) e_{k+l}, extended bilinearly.
FourierElement star_product(const DeformationContext& ctx, const FourierElement& a,
                            const FourierElement& b);

/// Partial sum up to `order` of mu o exp((i hbar/2) pi^{rs} d_r (x) d_s)(a (x) b),
/// summed term by term from the Poisson tensor rather than through the cocycle.
FourierElement moyal_truncated(const DeformationContext& ctx, const FourierElement& a,
                               const FourierElement& b, int order);

/// (a * b - b * a) / (i hbar). Throws DomainError at hbar = 0.
FourierElement commutator_over_ihbar(const DeformationContext& ctx, const FourierElement& a,
                                     const FourierElement& b);

}  // namespace rieffel
