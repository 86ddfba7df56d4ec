#include "rieffel/smoothing.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "rieffel/algebra.hpp"
#include "rieffel/errors.hpp"

namespace rieffel {

namespace {

constexpr double kPi = std::numbers::pi;

void check_context(const DeformationContext& ctx, const FourierElement& a) {
  if (a.dim_n() != ctx.dim_n()) throw DimensionError("element and context dimensions differ");
}

void require_unimodular(const SymplecticStructure& s) {
  const double det = s.metric_g().determinant();
  if (std::abs(det - 1.0) > 1e-10)
    throw StructureError("S_hbar normalization needs det g = 1, got " + std::to_string(det));
}

struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Nodes and weights on [-1, 1] by Newton iteration on P_n.
GaussLegendre gauss_legendre(int n) {
  GaussLegendre rule{std::vector<double>(static_cast<std::size_t>(n)),
                     std::vector<double>(static_cast<std::size_t>(n))};
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int j = 2; j <= n; ++j) {
        const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1.0;
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    const auto lo = static_cast<std::size_t>(i);
    const auto hi = static_cast<std::size_t>(n - 1 - i);
    rule.nodes[lo] = -x;
    rule.nodes[hi] = x;
    rule.weights[lo] = w;
    rule.weights[hi] = w;
  }
  return rule;
}

// e^{-x} sum_{d > cutoff} x^d / d!
double poisson_tail(double x, int cutoff) {
  if (x <= 0.0) return 0.0;
  const int d0 = cutoff + 1;
  double term = std::exp(-x + d0 * std::log(x) - std::lgamma(d0 + 1.0));
  double sum = 0.0;
  for (int d = d0; d < d0 + 100000; ++d) {
    sum += term;
    term *= x / (d + 1.0);
    if (d > x && term < 1e-18 * sum) break;
    if (term == 0.0) break;
  }
  return sum;
}

// Visits every K in N^n with |K| <= max_total in lexicographic order.
template <typename Visitor>
void for_each_multiindex(std::size_t n, int max_total, Visitor&& visit) {
  MultiIndex K(n, 0);
  auto recurse = [&](auto&& self, std::size_t pos, int remaining) -> void {
    if (pos == n) {
      visit(static_cast<const MultiIndex&>(K));
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      K[pos] = v;
      self(self, pos + 1, remaining - v);
    }
    K[pos] = 0;
  };
  recurse(recurse, 0, max_total);
}

}  // namespace

double smoothing_multiplier(const DeformationContext& ctx, const LatticeVector& k) {
  require_unimodular(ctx.structure());
  return std::exp(-0.25 * ctx.hbar() * inverse_metric_form(ctx.structure(), k));
}

FourierElement smooth(const DeformationContext& ctx, const FourierElement& a) {
  check_context(ctx, a);
  require_unimodular(ctx.structure());
  if (ctx.hbar() == 0.0) return a;
  FourierElement out(a.dim_n());
  for (const auto& [k, c] : a.terms()) out.add_term(k, c * smoothing_multiplier(ctx, k));
  return out;
}

FourierElement smooth_quadrature_oracle(const DeformationContext& ctx, const FourierElement& a,
                                        double grid_radius, int points_per_axis) {
  check_context(ctx, a);
  const double hbar = ctx.hbar();
  if (hbar <= 0.0) throw DomainError("the quadrature oracle needs hbar > 0");
  if (points_per_axis < 8) throw DomainError("the quadrature oracle needs >= 8 points per axis");
  const auto& s = ctx.structure();
  const Matrix& G = s.metric_g();
  if (grid_radius <= 0.0) {
    Eigen::SelfAdjointEigenSolver<Matrix> eig(G, Eigen::EigenvaluesOnly);
    grid_radius = 6.0 * std::sqrt(hbar / eig.eigenvalues().minCoeff());
  }

  const auto rule = gauss_legendre(points_per_axis);
  const std::size_t dim = s.dim();
  const int n = s.dim_n();

  std::vector<LatticeVector> modes;
  std::vector<Complex> sums;
  for (const auto& [k, c] : a.terms()) modes.push_back(k);
  sums.assign(modes.size(), 0.0);

  std::vector<int> idx(dim, 0);
  Vector u(static_cast<Eigen::Index>(dim));
  const auto ppa = static_cast<std::size_t>(points_per_axis);
  while (true) {
    double w = 1.0;
    for (std::size_t j = 0; j < dim; ++j) {
      const auto q = static_cast<std::size_t>(idx[j]);
      u(static_cast<Eigen::Index>(j)) = grid_radius * rule.nodes[q];
      w *= grid_radius * rule.weights[q];
    }
    const double gauss = w * std::exp(-u.dot(G * u) / hbar);
    for (std::size_t m = 0; m < modes.size(); ++m) {
      double phase = 0.0;
      for (std::size_t j = 0; j < dim; ++j) phase += modes[m][j] * u(static_cast<Eigen::Index>(j));
      sums[m] += gauss * std::polar(1.0, phase);
    }
    std::size_t j = 0;
    while (j < dim && static_cast<std::size_t>(++idx[j]) == ppa) idx[j++] = 0;
    if (j == dim) break;
  }

  const double norm = std::pow(kPi * hbar, -n);
  FourierElement out(a.dim_n());
  for (std::size_t m = 0; m < modes.size(); ++m)
    out.add_term(modes[m], a.coefficient(modes[m]) * norm * sums[m]);
  return out;
}

double derivative_identity_residual(const DeformationContext& ctx, const FourierElement& a,
                                    double step) {
  if (!(step > 0.0) || !(ctx.hbar() > step))
    throw DomainError("derivative_identity_residual needs hbar > step > 0");
  const FourierElement forward = smooth(ctx.with_hbar(ctx.hbar() + step), a);
  const FourierElement backward = smooth(ctx.with_hbar(ctx.hbar() - step), a);
  const FourierElement difference = Complex(1.0 / (2.0 * step)) * (forward - backward);
  const FourierElement rhs = Complex(0.25) * smooth(ctx, laplacian_g(a, ctx.structure()));
  return l1_distance(difference, rhs);
}

FourierElement heat_asymptotic(const DeformationContext& ctx, const FourierElement& a) {
  check_context(ctx, a);
  if (ctx.hbar() == 0.0) return a;
  FourierElement out(a.dim_n());
  for (const auto& [k, c] : a.terms())
    out.add_term(k, c * std::exp(0.25 * ctx.hbar() * laplacian_symbol(ctx.structure(), k)));
  return out;
}

SumOfSquaresTerm sos_term(const DeformationContext& ctx, const ComplexFrame& frame,
                          const FourierElement& a, const MultiIndex& K) {
  check_context(ctx, a);
  const double hbar = ctx.hbar();
  if (hbar <= 0.0) throw DomainError("sum-of-squares terms need hbar > 0");
  const int n = ctx.dim_n();
  if (frame.dim_n() != n || K.size() != static_cast<std::size_t>(n))
    throw DimensionError("multi-index must have n entries");

  int total = 0;
  double log_factorial = 0.0;
  for (int kj : K) {
    if (kj < 0) throw DomainError("multi-index entries must be nonnegative");
    total += kj;
    log_factorial += std::lgamma(kj + 1.0);
  }

  FourierElement element(n);
  for (const auto& [l, c] : a.terms()) {
    const auto lambda = frame.lambda_of(l);
    Complex factor = 1.0;
    for (std::size_t j = 0; j < lambda.size(); ++j) {
      const Complex raised = Complex(0.0, 0.5 * hbar) * lambda[j];
      factor *= kPi * hbar * std::pow(raised, K[j]) * std::exp(-0.25 * hbar * std::norm(lambda[j]));
    }
    element.add_term(l, c * factor);
  }
  const double weight =
      std::exp(-2.0 * n * std::log(kPi * hbar) + total * std::log(2.0 / hbar) - log_factorial);
  return {K, std::move(element), weight};
}

SumOfSquaresTerm sos_term(const DeformationContext& ctx, const FourierElement& a,
                          const MultiIndex& K) {
  return sos_term(ctx, complex_frame(ctx.structure()), a, K);
}

SosSeries sos_series(const DeformationContext& ctx, const FourierElement& a, int cutoff) {
  check_context(ctx, a);
  if (ctx.hbar() <= 0.0) throw DomainError("sos_series needs hbar > 0");
  if (cutoff < 0) throw DomainError("cutoff must be nonnegative");
  const auto frame = complex_frame(ctx.structure());
  const auto n = static_cast<std::size_t>(ctx.dim_n());

  FourierElement approx(ctx.dim_n());
  for_each_multiindex(n, cutoff, [&](const MultiIndex& K) {
    const auto term = sos_term(ctx, frame, a, K);
    approx += term.weight * undeformed_multiply(involution(term.element), term.element);
  });
  return {std::move(approx), sos_tail_bound(ctx, a, cutoff)};
}

double sos_tail_bound(const DeformationContext& ctx, const FourierElement& a, int cutoff) {
  check_context(ctx, a);
  if (ctx.hbar() <= 0.0) throw DomainError("sos_tail_bound needs hbar > 0");
  // By Cauchy-Schwarz, ||a_K^* a_K|| weight_K <= ||a||_1 sum_l |a_l| e^{-X_l} prod_j x_{lj}^{K_j}/K_j!
  // with x_{lj} = hbar |lambda_j|^2 / 2 and X_l = sum_j x_{lj}; summing |K| > cutoff
  // gives a Poisson tail in X_l.
  const auto frame = complex_frame(ctx.structure());
  double bound = 0.0;
  for (const auto& [l, c] : a.terms()) {
    double X = 0.0;
    for (const auto& lam : frame.lambda_of(l)) X += 0.5 * ctx.hbar() * std::norm(lam);
    bound += std::abs(c) * poisson_tail(X, cutoff);
  }
  return a.l1_norm() * bound;
}

int sos_cutoff(const DeformationContext& ctx, const FourierElement& a, double tolerance) {
  for (int cutoff = 0; cutoff <= 1000; ++cutoff)
    if (sos_tail_bound(ctx, a, cutoff) <= tolerance) return cutoff;
  throw ConvergenceError("no sum-of-squares cutoff <= 1000 reaches the requested tail bound");
}

PositivityCertificate positivity_certificate(const DeformationContext& ctx,
                                             const FourierElement& a, int refinement) {
  check_context(ctx, a);
  if (refinement < 1) throw DomainError("refinement must be at least 1");
  const FourierElement f = smooth(ctx, star_product(ctx, involution(a), a));
  PositivityCertificate cert{std::numeric_limits<double>::infinity(), {}, 0.0};
  for_each_grid_point(a.lattice_dim(), refinement, [&](std::span<const double> x) {
    const Complex v = evaluate(f, x);
    if (v.real() < cert.min_value) {
      cert.min_value = v.real();
      cert.argmin.assign(x.begin(), x.end());
    }
    cert.max_imaginary = std::max(cert.max_imaginary, std::abs(v.imag()));
  });
  return cert;
}

}  // namespace rieffel
