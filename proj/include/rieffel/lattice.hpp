#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace rieffel {

/// A wave number k in Z^{2n}; labels the character e_k(x) = exp(i k.x).
class LatticeVector {
 public:
  LatticeVector() = default;
  explicit LatticeVector(std::vector<int> components) : components_(std::move(components)) {}
  LatticeVector(std::initializer_list<int> components) : components_(components) {}

  static LatticeVector zero(std::size_t size) { return LatticeVector(std::vector<int>(size, 0)); }

  std::size_t size() const noexcept { return components_.size(); }
  int operator[](std::size_t i) const { return components_[i]; }
  std::span<const int> components() const noexcept { return components_; }

  bool is_zero() const noexcept;
  /// max_i |k_i|
  int max_abs() const noexcept;

  LatticeVector operator-() const;
  friend LatticeVector operator+(const LatticeVector& a, const LatticeVector& b);
  friend LatticeVector operator-(const LatticeVector& a, const LatticeVector& b);

  friend auto operator<=>(const LatticeVector&, const LatticeVector&) = default;
  friend bool operator==(const LatticeVector&, const LatticeVector&) = default;

  std::string to_string() const;

 private:
  std::vector<int> components_;
};

}  // namespace rieffel
