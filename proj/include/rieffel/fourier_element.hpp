#pragma once

#include <complex>
#include <map>

#include "rieffel/lattice.hpp"

namespace rieffel {

using Complex = std::complex<double>;

/// Trigonometric polynomial on the 2n-torus, stored as a finitely supported
/// map Z^{2n} -> C. Exact zeros are dropped on insertion; anything else is
/// kept until pruned() is called explicitly.
class FourierElement {
 public:
  using TermMap = std::map<LatticeVector, Complex>;

  /// The zero element on Z^{2 dim_n}. Throws DimensionError for dim_n < 1.
  explicit FourierElement(int dim_n);
  FourierElement(int dim_n, TermMap terms);

  static FourierElement unit(int dim_n);
  /// c * e_k; the rank is read off k, which must have even positive length.
  static FourierElement character(const LatticeVector& k, Complex c = 1.0);

  int dim_n() const noexcept { return dim_n_; }
  std::size_t lattice_dim() const noexcept { return 2 * static_cast<std::size_t>(dim_n_); }

  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  Complex coefficient(const LatticeVector& k) const;

  /// Accumulates c into the coefficient at k.
  void add_term(const LatticeVector& k, Complex c);

  /// Copy with every coefficient of modulus <= threshold removed.
  FourierElement pruned(double threshold = 1e-15) const;

  /// sum_k |a_k|
  double l1_norm() const noexcept;
  /// max over the support of |k|_inf, 0 for the zero element.
  int support_radius() const noexcept;

  FourierElement& operator+=(const FourierElement& other);
  FourierElement& operator-=(const FourierElement& other);
  FourierElement& operator*=(Complex scalar);

  friend FourierElement operator+(FourierElement a, const FourierElement& b) { return a += b; }
  friend FourierElement operator-(FourierElement a, const FourierElement& b) { return a -= b; }
  friend FourierElement operator*(Complex s, FourierElement a) { return a *= s; }
  friend FourierElement operator*(FourierElement a, Complex s) { return a *= s; }
  FourierElement operator-() const { return Complex(-1.0) * *this; }

  friend bool operator==(const FourierElement& a, const FourierElement& b) {
    return a.dim_n_ == b.dim_n_ && a.terms_ == b.terms_;
  }

 private:
  void check_key(const LatticeVector& k) const;

  int dim_n_;
  TermMap terms_;
};

/// ||a - b||_{l1}; throws DimensionError on rank mismatch.
double l1_distance(const FourierElement& a, const FourierElement& b);

void require_same_dim(const FourierElement& a, const FourierElement& b);

}  // namespace rieffel
