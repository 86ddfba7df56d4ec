#include "rieffel/deformation.hpp"

#include <cmath>
#include <vector>

#include "rieffel/algebra.hpp"
#include "rieffel/errors.hpp"

namespace rieffel {

namespace {

void check_context(const DeformationContext& ctx, const FourierElement& a) {
  if (a.dim_n() != ctx.dim_n()) throw DimensionError("element and context dimensions differ");
}

}  // namespace

DeformationContext::DeformationContext(SymplecticStructure structure, double hbar)
    : structure_(std::move(structure)), hbar_(hbar) {
  if (!(hbar >= 0.0) || !std::isfinite(hbar)) throw DomainError("hbar must be finite and >= 0");
}

Complex cocycle(const DeformationContext& ctx, const LatticeVector& k, const LatticeVector& l) {
  const double pairing = symplectic_pairing(ctx.structure(), k, l);
  if (ctx.hbar() == 0.0) return 1.0;
  // Arguments reach ~1e4 rad for |k|_inf ~ 50; extended precision keeps the
  // phase good to ~1e-15 there.
  const long double arg = -0.5L * static_cast<long double>(ctx.hbar()) * pairing;
  return {static_cast<double>(std::cos(arg)), static_cast<double>(std::sin(arg))};
}

FourierElement star_product(const DeformationContext& ctx, const FourierElement& a,
                            const FourierElement& b) {
  require_same_dim(a, b);
  check_context(ctx, a);
  if (ctx.hbar() == 0.0) return undeformed_multiply(a, b);
  FourierElement out(a.dim_n());
  for (const auto& [k, ak] : a.terms())
    for (const auto& [l, bl] : b.terms()) out.add_term(k + l, ak * bl * cocycle(ctx, k, l));
  return out;
}

FourierElement moyal_truncated(const DeformationContext& ctx, const FourierElement& a,
                               const FourierElement& b, int order) {
  require_same_dim(a, b);
  check_context(ctx, a);
  if (order < 0 || order > kMaxMoyalOrder)
    throw DomainError("Moyal order must lie in [0, " + std::to_string(kMaxMoyalOrder) + "]");

  // The tensor a (x) b is kept in the basis e_k (x) e_l; P = pi^{rs} d_r (x) d_s
  // acts on it diagonally with d_r e_k = i k_r e_k.
  const Matrix& pi = ctx.structure().poisson();
  const auto m = static_cast<Eigen::Index>(a.lattice_dim());
  struct PairTerm {
    LatticeVector sum;
    Complex value;  // current P^j applied to a_k b_l e_k (x) e_l
    Complex symbol;  // eigenvalue of P on e_k (x) e_l
  };
  std::vector<PairTerm> tensor;
  tensor.reserve(a.size() * b.size());
  for (const auto& [k, ak] : a.terms()) {
    for (const auto& [l, bl] : b.terms()) {
      Complex symbol = 0.0;
      for (Eigen::Index r = 0; r < m; ++r) {
        if (k[r] == 0) continue;
        const Complex dk(0.0, k[r]);
        for (Eigen::Index c = 0; c < m; ++c)
          if (l[c] != 0) symbol += pi(r, c) * dk * Complex(0.0, l[c]);
      }
      tensor.push_back({k + l, ak * bl, symbol});
    }
  }

  FourierElement out = undeformed_multiply(a, b);
  Complex coeff = 1.0;  // (i hbar / 2)^j / j! by running product
  for (int j = 1; j <= order; ++j) {
    coeff *= Complex(0.0, 0.5 * ctx.hbar()) / static_cast<double>(j);
    for (auto& t : tensor) {
      t.value *= t.symbol;
      out.add_term(t.sum, coeff * t.value);
    }
  }
  return out;
}

FourierElement commutator_over_ihbar(const DeformationContext& ctx, const FourierElement& a,
                                     const FourierElement& b) {
  if (ctx.hbar() == 0.0) throw DomainError("commutator_over_ihbar needs hbar > 0");
  FourierElement diff = star_product(ctx, a, b) - star_product(ctx, b, a);
  return Complex(0.0, -1.0 / ctx.hbar()) * diff;
}

}  // namespace rieffel
