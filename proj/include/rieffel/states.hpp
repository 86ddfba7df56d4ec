#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "rieffel/deformation.hpp"

namespace rieffel {

struct TraceState {};
struct PointState {
  std::vector<double> x;
};
struct DensityState {
  FourierElement density;
};

/// A state of the undeformed algebra C(T^{2n}): normalized Haar trace, a point
/// evaluation, or a nonnegative normalized density against the trace.
class ClassicalState {
 public:
  using Kind = std::variant<TraceState, PointState, DensityState>;

  static ClassicalState trace() { return ClassicalState(TraceState{}); }
  static ClassicalState point(std::vector<double> x);
  /// Checks d = d^*, d_0 = 1, and d >= -1e-10 on the refinement-64 grid
  /// (refinement 16 for n >= 2). Throws DomainError otherwise.
  static ClassicalState density(FourierElement d);

  const Kind& kind() const noexcept { return kind_; }
  std::string describe() const;

 private:
  explicit ClassicalState(Kind kind) : kind_(std::move(kind)) {}
  Kind kind_;
};

/// omega_0(a). Linear, unital, positive on pointwise squares.
Complex classical_evaluate(const ClassicalState& s, const FourierElement& a);

/// omega_hbar(a) = omega_0(S_hbar a).
Complex deformed_evaluate(const ClassicalState& s, const DeformationContext& ctx,
                          const FourierElement& a);

/// Sorted, distinct sample of [0, inf) starting at 0.
class HbarGrid {
 public:
  /// Throws DomainError unless values are finite, strictly increasing, start at 0.
  explicit HbarGrid(std::vector<double> values);

  /// count points, evenly spaced on [0, stop].
  static HbarGrid linear(double stop, int count);
  /// 0 followed by count - 1 log-spaced points on [min, max].
  static HbarGrid log_with_zero(double min, double max, int count);

  const std::vector<double>& values() const noexcept { return values_; }
  /// Grid with every interval bisected.
  HbarGrid refined() const;

 private:
  std::vector<double> values_;
};

struct StatePoint {
  double hbar;
  Complex value;
};

/// hbar -> omega_hbar(a) on a constant section a.
std::vector<StatePoint> state_curve(const ClassicalState& s, const SymplecticStructure& structure,
                                    const FourierElement& a, const HbarGrid& grid);

/// max |value_{i+1} - value_i|
double max_adjacent_jump(const std::vector<StatePoint>& curve);

/// Real and imaginary part of omega_hbar(a^* * a).
Complex deformed_square(const ClassicalState& s, const DeformationContext& ctx,
                        const FourierElement& a);

struct PositivityScan {
  double min_found;           ///< min over trials of Re omega_hbar(a^* * a)
  FourierElement worst_case;  ///< witness of min_found
  double max_l1_squared;      ///< max over trials of ||a||_1^2
  double max_imaginary_ratio; ///< max over trials of |Im| / ||a||_1^2
  int trials;
  std::uint64_t seed;
};

/// Deterministic random search for a negative value of omega_hbar on squares.
PositivityScan positivity_scan(const ClassicalState& s, const DeformationContext& ctx, int trials,
                               int modes, std::uint64_t seed);

/// The same scan over a fixed list of elements.
PositivityScan positivity_scan(const ClassicalState& s, const DeformationContext& ctx,
                               const std::vector<FourierElement>& elements);

}  // namespace rieffel
