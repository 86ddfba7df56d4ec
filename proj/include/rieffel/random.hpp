#pragma once

#include <cstdint>
#include <random>

#include "rieffel/fourier_element.hpp"
#include "rieffel/structure.hpp"

namespace rieffel {

/// Seeded generator with platform-independent draws (the standard
/// distributions are implementation-defined, the engine is not).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [lo, hi].
  int uniform_int(int lo, int hi);
  /// Uniform on the closed complex unit disc.
  Complex unit_disc();
  /// Standard normal (Box-Muller).
  double normal();

 private:
  std::mt19937_64 engine_;
};

/// Up to `modes` distinct wave numbers drawn uniformly from |k|_inf <= radius,
/// coefficients uniform on the unit disc.
FourierElement random_element(Rng& rng, int dim_n, int modes, int radius = 3);

LatticeVector random_lattice_vector(Rng& rng, int dim_n, int radius);

/// Random compatible triple with det theta = 1, from a Gaussian basis change
/// rescaled to unit determinant.
SymplecticStructure random_structure(Rng& rng, int dim_n);

}  // namespace rieffel
