#include "rieffel/states.hpp"

#include <cmath>
#include <limits>

#include "rieffel/algebra.hpp"
#include "rieffel/errors.hpp"
#include "rieffel/random.hpp"
#include "rieffel/smoothing.hpp"

namespace rieffel {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

ClassicalState ClassicalState::point(std::vector<double> x) {
  if (x.empty() || x.size() % 2 != 0)
    throw DimensionError("point state needs a point of even, positive length");
  return ClassicalState(PointState{std::move(x)});
}

ClassicalState ClassicalState::density(FourierElement d) {
  if (l1_distance(d, involution(d)) > 1e-12 * std::max(1.0, d.l1_norm()))
    throw DomainError("density must be self-adjoint");
  if (std::abs(d.coefficient(LatticeVector::zero(d.lattice_dim())) - 1.0) > 1e-12)
    throw DomainError("density must have zero mode 1");
  const int refinement = d.dim_n() == 1 ? 64 : 16;
  double min_value = std::numeric_limits<double>::infinity();
  for_each_grid_point(d.lattice_dim(), refinement, [&](std::span<const double> x) {
    min_value = std::min(min_value, evaluate(d, x).real());
  });
  if (min_value < -1e-10) throw DomainError("density is negative somewhere on the grid");
  return ClassicalState(DensityState{std::move(d)});
}

std::string ClassicalState::describe() const {
  return std::visit(Overloaded{[](const TraceState&) { return std::string("trace"); },
                               [](const PointState& p) {
                                 std::string s = "point(";
                                 for (std::size_t i = 0; i < p.x.size(); ++i)
                                   s += (i ? "," : "") + std::to_string(p.x[i]);
                                 return s + ")";
                               },
                               [](const DensityState& d) {
                                 return "density(" + std::to_string(d.density.size()) + " modes)";
                               }},
                    kind_);
}

Complex classical_evaluate(const ClassicalState& s, const FourierElement& a) {
  return std::visit(
      Overloaded{[&](const TraceState&) { return a.coefficient(LatticeVector::zero(a.lattice_dim())); },
                 [&](const PointState& p) { return evaluate(a, p.x); },
                 [&](const DensityState& d) {
                   require_same_dim(d.density, a);
                   // zero mode of d a: sum_k d_{-k} a_k
                   Complex acc = 0.0;
                   for (const auto& [k, c] : a.terms()) acc += d.density.coefficient(-k) * c;
                   return acc;
                 }},
      s.kind());
}

Complex deformed_evaluate(const ClassicalState& s, const DeformationContext& ctx,
                          const FourierElement& a) {
  return classical_evaluate(s, smooth(ctx, a));
}

HbarGrid::HbarGrid(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty() || values_.front() != 0.0) throw DomainError("hbar grid must start at 0");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) throw DomainError("hbar grid values must be finite");
    if (i > 0 && !(values_[i] > values_[i - 1]))
      throw DomainError("hbar grid must be strictly increasing");
  }
}

HbarGrid HbarGrid::linear(double stop, int count) {
  if (count < 2 || !(stop > 0.0)) throw DomainError("linear grid needs count >= 2 and stop > 0");
  std::vector<double> v(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) v[static_cast<std::size_t>(i)] = stop * i / (count - 1);
  return HbarGrid(std::move(v));
}

HbarGrid HbarGrid::log_with_zero(double min, double max, int count) {
  if (count < 2 || !(min > 0.0) || !(max >= min))
    throw DomainError("log grid needs count >= 2 and 0 < min <= max");
  std::vector<double> v{0.0};
  const int ladder = count - 1;
  for (int i = 0; i < ladder; ++i) {
    const double t = ladder == 1 ? 0.0 : static_cast<double>(i) / (ladder - 1);
    v.push_back(min * std::pow(max / min, t));
  }
  return HbarGrid(std::move(v));
}

HbarGrid HbarGrid::refined() const {
  std::vector<double> v;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i > 0) v.push_back(0.5 * (values_[i - 1] + values_[i]));
    v.push_back(values_[i]);
  }
  return HbarGrid(std::move(v));
}

std::vector<StatePoint> state_curve(const ClassicalState& s, const SymplecticStructure& structure,
                                    const FourierElement& a, const HbarGrid& grid) {
  std::vector<StatePoint> curve;
  curve.reserve(grid.values().size());
  for (double hbar : grid.values())
    curve.push_back({hbar, deformed_evaluate(s, DeformationContext(structure, hbar), a)});
  return curve;
}

double max_adjacent_jump(const std::vector<StatePoint>& curve) {
  double jump = 0.0;
  for (std::size_t i = 1; i < curve.size(); ++i)
    jump = std::max(jump, std::abs(curve[i].value - curve[i - 1].value));
  return jump;
}

Complex deformed_square(const ClassicalState& s, const DeformationContext& ctx,
                        const FourierElement& a) {
  return deformed_evaluate(s, ctx, star_product(ctx, involution(a), a));
}

namespace {

struct ScanAccumulator {
  PositivityScan result;

  explicit ScanAccumulator(int dim_n, std::uint64_t seed)
      : result{std::numeric_limits<double>::infinity(), FourierElement(dim_n), 0.0, 0.0, 0, seed} {}

  void add(const ClassicalState& s, const DeformationContext& ctx, const FourierElement& a) {
    const Complex v = deformed_square(s, ctx, a);
    const double norm_sq = a.l1_norm() * a.l1_norm();
    if (v.real() < result.min_found) {
      result.min_found = v.real();
      result.worst_case = a;
    }
    result.max_l1_squared = std::max(result.max_l1_squared, norm_sq);
    if (norm_sq > 0.0)
      result.max_imaginary_ratio = std::max(result.max_imaginary_ratio, std::abs(v.imag()) / norm_sq);
    ++result.trials;
  }
};

}  // namespace

PositivityScan positivity_scan(const ClassicalState& s, const DeformationContext& ctx, int trials,
                               int modes, std::uint64_t seed) {
  if (trials < 1) throw DomainError("positivity scan needs at least one trial");
  Rng rng(seed);
  ScanAccumulator acc(ctx.dim_n(), seed);
  for (int t = 0; t < trials; ++t) acc.add(s, ctx, random_element(rng, ctx.dim_n(), modes));
  return acc.result;
}

PositivityScan positivity_scan(const ClassicalState& s, const DeformationContext& ctx,
                               const std::vector<FourierElement>& elements) {
  if (elements.empty()) throw DomainError("positivity scan needs at least one element");
  ScanAccumulator acc(ctx.dim_n(), 0);
  for (const auto& a : elements) acc.add(s, ctx, a);
  return acc.result;
}

}  // namespace rieffel
