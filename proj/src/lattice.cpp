#include "rieffel/lattice.hpp"

#include <algorithm>
#include <cstdlib>

#include "rieffel/errors.hpp"

namespace rieffel {

bool LatticeVector::is_zero() const noexcept {
  return std::all_of(components_.begin(), components_.end(), [](int c) { return c == 0; });
}

int LatticeVector::max_abs() const noexcept {
  int m = 0;
  for (int c : components_) m = std::max(m, std::abs(c));
  return m;
}

LatticeVector LatticeVector::operator-() const {
  std::vector<int> out(components_.size());
  std::transform(components_.begin(), components_.end(), out.begin(), [](int c) { return -c; });
  return LatticeVector(std::move(out));
}

LatticeVector operator+(const LatticeVector& a, const LatticeVector& b) {
  if (a.size() != b.size()) throw DimensionError("lattice vectors of different length");
  std::vector<int> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return LatticeVector(std::move(out));
}

LatticeVector operator-(const LatticeVector& a, const LatticeVector& b) { return a + (-b); }

std::string LatticeVector::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(components_[i]);
  }
  return s + ")";
}

}  // namespace rieffel
