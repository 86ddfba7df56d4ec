#include "rieffel/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "rieffel/algebra.hpp"
#include "rieffel/deformation.hpp"
#include "rieffel/errors.hpp"
#include "rieffel/norms.hpp"
#include "rieffel/oscillatory_oracle.hpp"
#include "rieffel/random.hpp"
#include "rieffel/smoothing.hpp"
#include "rieffel/states.hpp"

namespace rieffel {

double loglog_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) throw DomainError("slope fit needs >= 2 matched points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

bool VerifyReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

namespace {

constexpr double kPi = std::numbers::pi;
const double kHbars[] = {0.1, 1.0, kPi};

struct CheckSpec {
  std::string name;
  Comparison comparison;
  double threshold;
  std::function<double(Rng&)> measure;
};

std::vector<CheckSpec> build_checks() {
  std::vector<CheckSpec> checks;

  checks.push_back({"cocycle_identity", Comparison::AtMost, 1e-13, [](Rng& rng) {
    double worst = 0.0;
    for (int n = 1; n <= 2; ++n) {
      const auto s = make_standard_structure(n);
      for (double hbar : kHbars) {
        const DeformationContext ctx(s, hbar);
        for (int t = 0; t < 50; ++t) {
          const auto k = random_lattice_vector(rng, n, 50);
          const auto l = random_lattice_vector(rng, n, 50);
          const auto m = random_lattice_vector(rng, n, 50);
          const Complex lhs = cocycle(ctx, k, l) * cocycle(ctx, k + l, m);
          const Complex rhs = cocycle(ctx, l, m) * cocycle(ctx, k, l + m);
          worst = std::max(worst, std::abs(lhs - rhs));
        }
      }
    }
    return worst;
  }});

  checks.push_back({"oracle_agreement", Comparison::AtMost, 1e-6, [](Rng& rng) {
    double worst = 0.0;
    for (int n = 1; n <= 2; ++n) {
      const auto s = make_standard_structure(n);
      for (double hbar : kHbars) {
        const DeformationContext ctx(s, hbar);
        for (int t = 0; t < 10; ++t) {
          const auto k = random_lattice_vector(rng, n, 5);
          const auto l = random_lattice_vector(rng, n, 5);
          worst = std::max(worst, std::abs(extrapolated_phase(ctx, k, l).value - cocycle(ctx, k, l)));
        }
      }
    }
    return worst;
  }});

  checks.push_back({"associativity", Comparison::AtMost, 1e-12, [](Rng& rng) {
    double worst = 0.0;
    const auto s = make_standard_structure(1);
    for (double hbar : {0.0, 0.1, 1.0, kPi}) {
      const DeformationContext ctx(s, hbar);
      for (int t = 0; t < 10; ++t) {
        const auto a = random_element(rng, 1, 25);
        const auto b = random_element(rng, 1, 25);
        const auto c = random_element(rng, 1, 25);
        const double err = l1_distance(star_product(ctx, star_product(ctx, a, b), c),
                                       star_product(ctx, a, star_product(ctx, b, c)));
        worst = std::max(worst, err / (a.l1_norm() * b.l1_norm() * c.l1_norm()));
      }
    }
    return worst;
  }});

  checks.push_back({"star_involution", Comparison::AtMost, 1e-12, [](Rng& rng) {
    double worst = 0.0;
    const auto s = make_standard_structure(2);
    for (double hbar : {0.0, 0.1, 1.0, kPi}) {
      const DeformationContext ctx(s, hbar);
      for (int t = 0; t < 10; ++t) {
        const auto a = random_element(rng, 2, 25);
        const auto b = random_element(rng, 2, 25);
        const double err = l1_distance(involution(star_product(ctx, a, b)),
                                       star_product(ctx, involution(b), involution(a)));
        worst = std::max(worst, err / (a.l1_norm() * b.l1_norm()));
      }
    }
    return worst;
  }});

  for (int order = 1; order <= 3; ++order) {
    checks.push_back({"moyal_rate_order_" + std::to_string(order), Comparison::AtLeast, order + 0.9,
                      [order](Rng& rng) {
      const auto s = make_standard_structure(1);
      const std::vector<double> hbars{1e-3, 3e-3, 1e-2, 3e-2, 1e-1};
      double worst = 1e300;
      for (int t = 0; t < 5; ++t) {
        const auto a = random_element(rng, 1, 8);
        const auto b = random_element(rng, 1, 8);
        std::vector<double> rem;
        for (double h : hbars) {
          const DeformationContext ctx(s, h);
          rem.push_back(l1_distance(star_product(ctx, a, b), moyal_truncated(ctx, a, b, order)));
        }
        if (rem.front() == 0.0) continue;  // commuting supports: no remainder to fit
        worst = std::min(worst, loglog_slope(hbars, rem));
      }
      return worst;
    }});
  }

  checks.push_back({"commutator_richardson_deviation", Comparison::AtMost, 0.5, [](Rng& rng) {
    const auto s = make_standard_structure(1);
    double worst = 0.0;
    for (int t = 0; t < 5; ++t) {
      const auto a = random_element(rng, 1, 6);
      const auto b = random_element(rng, 1, 6);
      const auto bracket = poisson_bracket(a, b, s);
      const double h = 1e-2;
      const double e1 = l1_distance(commutator_over_ihbar(DeformationContext(s, h), a, b), bracket);
      const double e2 = l1_distance(commutator_over_ihbar(DeformationContext(s, h / 2), a, b), bracket);
      if (e1 == 0.0) continue;
      worst = std::max(worst, std::abs(e1 / e2 - 4.0));
    }
    return worst;
  }});

  checks.push_back({"classical_limit_slope_deviation", Comparison::AtMost, 0.05, [](Rng& rng) {
    const auto s = make_standard_structure(1);
    const std::vector<double> hbars{1e-4, 1e-3, 1e-2};
    double worst = 0.0;
    for (int t = 0; t < 5; ++t) {
      auto a = random_element(rng, 1, 6);
      a.add_term({1, 0}, 1.0);  // at least one non-constant mode
      std::vector<double> dist;
      for (double h : hbars) dist.push_back(l1_distance(smooth(DeformationContext(s, h), a), a));
      worst = std::max(worst, std::abs(loglog_slope(hbars, dist) - 1.0));
    }
    return worst;
  }});

  checks.push_back({"derivative_identity_residual", Comparison::AtMost, 1e-8, [](Rng& rng) {
    const DeformationContext ctx(make_standard_structure(1), 1.0);
    double worst = 0.0;
    for (int t = 0; t < 5; ++t)
      worst = std::max(worst, derivative_identity_residual(ctx, random_element(rng, 1, 6), 1e-4));
    return worst;
  }});

  checks.push_back({"derivative_halving_deviation", Comparison::AtMost, 0.5, [](Rng& rng) {
    const DeformationContext ctx(make_standard_structure(1), 1.0);
    double worst = 0.0;
    for (int t = 0; t < 5; ++t) {
      auto a = random_element(rng, 1, 6);
      a.add_term({1, 1}, 1.0);
      const double r1 = derivative_identity_residual(ctx, a, 1e-2);
      const double r2 = derivative_identity_residual(ctx, a, 5e-3);
      worst = std::max(worst, std::abs(r1 / r2 - 4.0));
    }
    return worst;
  }});

  checks.push_back({"sos_character_telescoping", Comparison::AtMost, 1e-12, [](Rng& rng) {
    double worst = 0.0;
    for (int n = 1; n <= 2; ++n) {
      for (double hbar : {0.1, 1.0}) {
        const DeformationContext ctx(make_standard_structure(n), hbar);
        const auto a = FourierElement::character(random_lattice_vector(rng, n, 3));
        const auto series = sos_series(ctx, a, sos_cutoff(ctx, a, 1e-15));
        worst = std::max(worst, l1_distance(series.approx, FourierElement::unit(n)));
      }
    }
    return worst;
  }});

  checks.push_back({"sos_identity", Comparison::AtMost, 1e-8, [](Rng& rng) {
    double worst = 0.0;
    for (int n = 1; n <= 2; ++n) {
      for (double hbar : {0.1, 1.0}) {
        const DeformationContext ctx(make_standard_structure(n), hbar);
        for (int t = 0; t < 3; ++t) {
          const auto a = random_element(rng, n, 4);
          const auto series = sos_series(ctx, a, sos_cutoff(ctx, a, 1e-9));
          const auto exact = smooth(ctx, star_product(ctx, involution(a), a));
          worst = std::max(worst, l1_distance(series.approx, exact));
        }
      }
    }
    return worst;
  }});

  checks.push_back({"smoothing_quadrature_agreement", Comparison::AtMost, 1e-8, [](Rng& rng) {
    const DeformationContext ctx(make_standard_structure(1), 0.5);
    const auto a = random_element(rng, 1, 5);
    return l1_distance(smooth_quadrature_oracle(ctx, a, 0.0, 48), smooth(ctx, a));
  }});

  checks.push_back({"positivity", Comparison::AtLeast, -1e-9, [](Rng& rng) {
    const auto s = make_standard_structure(1);
    FourierElement d = FourierElement::unit(1);
    d.add_term({1, 0}, 0.5);
    d.add_term({-1, 0}, 0.5);
    const std::vector<ClassicalState> states{
        ClassicalState::trace(), ClassicalState::point({0.0, 0.0}),
        ClassicalState::point({rng.uniform(0, 2 * kPi), rng.uniform(0, 2 * kPi)}),
        ClassicalState::density(d)};
    double worst = 1e300;
    for (const auto& state : states) {
      for (double hbar : kHbars) {
        const auto scan = positivity_scan(state, DeformationContext(s, hbar), 100, 8,
                                          static_cast<std::uint64_t>(rng.uniform_int(0, 1 << 30)));
        worst = std::min(worst, scan.min_found / scan.max_l1_squared);
      }
    }
    return worst;
  }});

  checks.push_back({"state_classical_limit", Comparison::AtMost, 1e-13, [](Rng& rng) {
    const auto s = make_standard_structure(1);
    const auto a = random_element(rng, 1, 8);
    const auto state = ClassicalState::point({rng.uniform(0, 2 * kPi), rng.uniform(0, 2 * kPi)});
    const auto curve = state_curve(state, s, a, HbarGrid::linear(kPi, 9));
    return std::abs(curve.front().value - classical_evaluate(state, a));
  }});

  checks.push_back({"trace_constancy", Comparison::AtMost, 0.0, [](Rng& rng) {
    const auto s = make_standard_structure(1);
    const auto a = random_element(rng, 1, 8);
    const auto curve = state_curve(ClassicalState::trace(), s, a, HbarGrid::linear(kPi, 17));
    return max_adjacent_jump(curve);
  }});

  checks.push_back({"norm_sandwich_violation", Comparison::AtMost, 1e-10, [](Rng& rng) {
    const auto s = make_standard_structure(1);
    const auto a = random_element(rng, 1, 4, 2);
    const DeformationContext ctx(s, 1.0);
    double violation = 0.0;
    double previous = 0.0;
    for (int N = 2; N <= 6; ++N) {
      const double lower = rep_lower(ctx, a, N);
      violation = std::max({violation, previous - lower, lower - l1_upper(a)});
      previous = lower;
    }
    return violation;
  }});

  return checks;
}

}  // namespace

std::vector<std::string> verify_check_names() {
  std::vector<std::string> names;
  for (const auto& c : build_checks()) names.push_back(c.name);
  return names;
}

VerifyReport run_verify(const VerifyOptions& options) {
  auto checks = build_checks();
  for (const auto& [name, value] : options.thresholds) {
    auto it = std::find_if(checks.begin(), checks.end(), [&](const CheckSpec& c) { return c.name == name; });
    if (it == checks.end()) throw SchemaError("unknown check in tolerance override: " + name);
    it->threshold = value;
  }

  VerifyReport report{options.seed, {}};
  for (std::size_t i = 0; i < checks.size(); ++i) {
    // Each check draws from its own stream so overrides never shift other checks.
    Rng rng(options.seed * 1000003ULL + i);
    const double measured = checks[i].measure(rng);
    const bool passed = checks[i].comparison == Comparison::AtMost ? measured <= checks[i].threshold
                                                                   : measured >= checks[i].threshold;
    report.checks.push_back({checks[i].name, measured, checks[i].comparison, checks[i].threshold, passed});
  }
  return report;
}

nlohmann::json report_to_json(const VerifyReport& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"passed", c.passed},
                      {"measured", c.measured},
                      {"comparison", c.comparison == Comparison::AtMost ? "<=" : ">="},
                      {"threshold", c.threshold}});
  }
  return {{"seed", report.seed}, {"all_passed", report.all_passed()}, {"checks", std::move(checks)}};
}

}  // namespace rieffel
