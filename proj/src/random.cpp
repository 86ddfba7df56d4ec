#include "rieffel/random.hpp"

#include <cmath>
#include <numbers>
#include <set>

#include "rieffel/errors.hpp"

namespace rieffel {

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

int Rng::uniform_int(int lo, int hi) {
  if (hi < lo) throw DomainError("empty integer range");
  const std::uint64_t span = static_cast<std::uint64_t>(static_cast<std::int64_t>(hi) - lo) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t draw;
  do {
    draw = engine_();
  } while (draw >= limit);
  return static_cast<int>(lo + static_cast<std::int64_t>(draw % span));
}

Complex Rng::unit_disc() {
  const double r = std::sqrt(uniform());
  const double phi = 2.0 * std::numbers::pi * uniform();
  return std::polar(r, phi);
}

double Rng::normal() {
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

LatticeVector random_lattice_vector(Rng& rng, int dim_n, int radius) {
  std::vector<int> c(2 * static_cast<std::size_t>(dim_n));
  for (auto& v : c) v = rng.uniform_int(-radius, radius);
  return LatticeVector(std::move(c));
}

FourierElement random_element(Rng& rng, int dim_n, int modes, int radius) {
  if (modes < 1) throw DomainError("random elements need at least one mode");
  FourierElement a(dim_n);
  std::set<LatticeVector> used;
  const int count = rng.uniform_int(1, modes);
  for (int i = 0; i < count; ++i) {
    const LatticeVector k = random_lattice_vector(rng, dim_n, radius);
    const Complex c = rng.unit_disc();
    if (!used.insert(k).second) continue;
    a.add_term(k, c);
  }
  return a;
}

SymplecticStructure random_structure(Rng& rng, int dim_n) {
  const Eigen::Index m = 2 * dim_n;
  Matrix P(m, m);
  double det = 0.0;
  do {
    for (Eigen::Index i = 0; i < m; ++i)
      for (Eigen::Index j = 0; j < m; ++j) P(i, j) = (i == j ? 1.0 : 0.0) + 0.5 * rng.normal();
    det = P.determinant();
  } while (std::abs(det) < 0.2);
  P /= std::pow(std::abs(det), 1.0 / static_cast<double>(m));
  return SymplecticStructure::from_basis_change(P);
}

}  // namespace rieffel
