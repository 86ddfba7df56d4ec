#include "rieffel/fourier_element.hpp"

#include <algorithm>

#include "rieffel/errors.hpp"

namespace rieffel {

FourierElement::FourierElement(int dim_n) : dim_n_(dim_n) {
  if (dim_n < 1) throw DimensionError("dim_n must be at least 1");
}

FourierElement::FourierElement(int dim_n, TermMap terms) : FourierElement(dim_n) {
  for (auto& [k, c] : terms) {
    check_key(k);
    if (c != Complex(0.0)) terms_.emplace(k, c);
  }
}

FourierElement FourierElement::unit(int dim_n) {
  FourierElement e(dim_n);
  e.add_term(LatticeVector::zero(e.lattice_dim()), 1.0);
  return e;
}

FourierElement FourierElement::character(const LatticeVector& k, Complex c) {
  if (k.size() == 0 || k.size() % 2 != 0)
    throw DimensionError("character index must have even, positive length");
  FourierElement e(static_cast<int>(k.size() / 2));
  e.add_term(k, c);
  return e;
}

void FourierElement::check_key(const LatticeVector& k) const {
  if (k.size() != lattice_dim())
    throw DimensionError("lattice vector " + k.to_string() + " does not have length " +
                         std::to_string(lattice_dim()));
}

Complex FourierElement::coefficient(const LatticeVector& k) const {
  check_key(k);
  auto it = terms_.find(k);
  return it == terms_.end() ? Complex(0.0) : it->second;
}

void FourierElement::add_term(const LatticeVector& k, Complex c) {
  check_key(k);
  if (c == Complex(0.0)) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == Complex(0.0)) terms_.erase(it);
  }
}

FourierElement FourierElement::pruned(double threshold) const {
  FourierElement out(dim_n_);
  for (const auto& [k, c] : terms_)
    if (std::abs(c) > threshold) out.terms_.emplace(k, c);
  return out;
}

double FourierElement::l1_norm() const noexcept {
  double s = 0.0;
  for (const auto& [k, c] : terms_) s += std::abs(c);
  return s;
}

int FourierElement::support_radius() const noexcept {
  int r = 0;
  for (const auto& [k, c] : terms_) r = std::max(r, k.max_abs());
  return r;
}

FourierElement& FourierElement::operator+=(const FourierElement& other) {
  require_same_dim(*this, other);
  for (const auto& [k, c] : other.terms_) add_term(k, c);
  return *this;
}

FourierElement& FourierElement::operator-=(const FourierElement& other) {
  require_same_dim(*this, other);
  for (const auto& [k, c] : other.terms_) add_term(k, -c);
  return *this;
}

FourierElement& FourierElement::operator*=(Complex scalar) {
  if (scalar == Complex(0.0)) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, c] : terms_) c *= scalar;
  std::erase_if(terms_, [](const auto& kv) { return kv.second == Complex(0.0); });
  return *this;
}

void require_same_dim(const FourierElement& a, const FourierElement& b) {
  if (a.dim_n() != b.dim_n())
    throw DimensionError("elements live on Z^" + std::to_string(a.lattice_dim()) + " and Z^" +
                         std::to_string(b.lattice_dim()));
}

double l1_distance(const FourierElement& a, const FourierElement& b) {
  return (a - b).l1_norm();
}

}  // namespace rieffel
