#include <doctest.h>

#include <cmath>
#include <numbers>

#include "rieffel/errors.hpp"
#include "rieffel/norms.hpp"
#include "rieffel/random.hpp"
#include "rieffel/smoothing.hpp"
#include "rieffel/states.hpp"
#include "test_support.hpp"

using namespace rieffel;
using rieffel::testing::e;

namespace {
constexpr double kPi = std::numbers::pi;

FourierElement cosine_density() {
  FourierElement d = FourierElement::unit(1);
  d.add_term({1, 0}, 0.5);
  d.add_term({-1, 0}, 0.5);
  return d;
}
}  // namespace

TEST_CASE("classical states") {
  Rng rng(50);
  const auto a = random_element(rng, 1, 8);
  CHECK(classical_evaluate(ClassicalState::trace(), a) == a.coefficient({0, 0}));
  const std::vector<double> x{0.3, 1.7};
  CHECK(classical_evaluate(ClassicalState::point(x), a) == evaluate(a, x));
  CHECK(classical_evaluate(ClassicalState::trace(), FourierElement::unit(1)) == 1.0);

  const auto density = ClassicalState::density(cosine_density());
  // int (1 + cos x) cos x dx / 2 pi = 1/2
  FourierElement c(1);
  c.add_term({1, 0}, 0.5);
  c.add_term({-1, 0}, 0.5);
  CHECK(std::abs(classical_evaluate(density, c) - 0.5) < 1e-15);

  FourierElement bad = FourierElement::unit(1);
  bad.add_term({1, 0}, 1.0);
  bad.add_term({-1, 0}, 1.0);  // 1 + 2 cos x < 0 at x = pi
  CHECK_THROWS_AS(ClassicalState::density(bad), DomainError);
  CHECK_THROWS_AS(ClassicalState::density(e({0, 0}, 2.0)), DomainError);
  CHECK_THROWS_AS(ClassicalState::density(e({1, 0})), DomainError);
  CHECK_THROWS_AS(classical_evaluate(ClassicalState::point({0.0}), a), DimensionError);
}

TEST_CASE("deformed states on examples") {
  const DeformationContext ctx(make_standard_structure(1), 1.0);
  const auto origin = ClassicalState::point({0.0, 0.0});
  CHECK(deformed_evaluate(origin, ctx, e({1, 0})).real() == doctest::Approx(0.778800783).epsilon(1e-9));
  CHECK(deformed_evaluate(origin, ctx.with_hbar(2.0), e({1, 0})).real() ==
        doctest::Approx(0.606530660).epsilon(1e-9));
  CHECK(deformed_evaluate(ClassicalState::trace(), ctx, e({1, 0})) == 0.0);
}

TEST_CASE("hbar grids") {
  const auto lin = HbarGrid::linear(1.0, 5);
  CHECK(lin.values() == std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0});
  CHECK(lin.refined().values().size() == 9);
  CHECK(lin.refined().values()[1] == 0.125);
  const auto lg = HbarGrid::log_with_zero(1e-3, 1.0, 4);
  CHECK(lg.values().front() == 0.0);
  CHECK(lg.values()[1] == doctest::Approx(1e-3));
  CHECK(lg.values()[2] == doctest::Approx(std::pow(10.0, -1.5)));
  CHECK(lg.values().back() == doctest::Approx(1.0));
  CHECK_THROWS_AS(HbarGrid({0.1, 0.2}), DomainError);
  CHECK_THROWS_AS(HbarGrid({0.0, 0.2, 0.2}), DomainError);
  CHECK_THROWS_AS(HbarGrid::linear(1.0, 1), DomainError);
}

TEST_CASE("state curves are continuous sections through omega_0") {
  Rng rng(51);
  const auto s = make_standard_structure(1);
  const HbarGrid grid = HbarGrid::linear(kPi, 64);
  for (int t = 0; t < 10; ++t) {
    const auto a = random_element(rng, 1, 8);
    const std::vector<ClassicalState> states{
        ClassicalState::point({rng.uniform(0, 2 * kPi), rng.uniform(0, 2 * kPi)}),
        ClassicalState::density(cosine_density())};
    for (const auto& state : states) {
      const auto curve = state_curve(state, s, a, grid);
      CHECK(curve.size() == 64);
      CHECK(std::abs(curve.front().value - classical_evaluate(state, a)) <= 1e-13);
      const double j1 = max_adjacent_jump(curve);
      const double j2 = max_adjacent_jump(state_curve(state, s, a, grid.refined()));
      if (j1 == 0.0) continue;
      CHECK(j2 / j1 >= 0.4);
      CHECK(j2 / j1 <= 0.6);
    }
    CHECK(max_adjacent_jump(state_curve(ClassicalState::trace(), s, a, grid)) == 0.0);
  }
}

TEST_CASE("deformed states are positive") {
  Rng rng(52);
  const auto s = make_standard_structure(1);
  const std::vector<ClassicalState> states{
      ClassicalState::trace(), ClassicalState::point({0.0, 0.0}),
      ClassicalState::point({rng.uniform(0, 2 * kPi), rng.uniform(0, 2 * kPi)}),
      ClassicalState::density(cosine_density())};
  for (const auto& state : states) {
    for (double hbar : {0.1, 1.0, kPi}) {
      const DeformationContext ctx(s, hbar);
      const auto scan = positivity_scan(state, ctx, 200, 8, 7);
      CHECK(scan.trials == 200);
      CHECK(scan.min_found >= -1e-9 * scan.max_l1_squared);
      CHECK(scan.max_imaginary_ratio <= 1e-10);
      const Complex w = deformed_square(state, ctx, scan.worst_case);
      CHECK(w.real() == scan.min_found);
    }
  }
  // Point evaluation at hbar = 0 vanishes on (1 - e_{(1,0)}) squared at the origin.
  const auto zero_scan = positivity_scan(ClassicalState::point({0.0, 0.0}),
                                         DeformationContext(s, 0.0), {e({0, 0}) - e({1, 0})});
  CHECK(std::abs(zero_scan.min_found) < 1e-15);

  // Same seed, same scan.
  const DeformationContext ctx(s, 1.0);
  const auto a1 = positivity_scan(ClassicalState::trace(), ctx, 20, 4, 99);
  const auto a2 = positivity_scan(ClassicalState::trace(), ctx, 20, 4, 99);
  CHECK(a1.min_found == a2.min_found);
  CHECK(a1.worst_case == a2.worst_case);
}

TEST_CASE("twisted compression represents the deformed product") {
  Rng rng(53);
  for (int n = 1; n <= 2; ++n) {
    const DeformationContext ctx(n == 1 ? make_standard_structure(1) : random_structure(rng, 2), 0.9);
    const int N = n == 1 ? 8 : 3;
    const auto a = random_element(rng, n, 4, 1);
    const auto b = random_element(rng, n, 4, 1);
    // Vector supported in the inner box so nothing leaves the compression.
    FourierElement xi(n);
    for (int t = 0; t < 4; ++t) xi.add_term(random_lattice_vector(rng, n, 1), rng.normal());
    const TwistedCompression ma(ctx, a, N), mb(ctx, b, N), mab(ctx, star_product(ctx, a, b), N);
    TwistedCompression::CVector v = TwistedCompression::CVector::Zero(ma.dimension());
    for (const auto& [m, c] : xi.terms()) v[ma.index_of(m)] = c;
    CHECK((ma.apply(mb.apply(v)) - mab.apply(v)).norm() <= 1e-10);
    // M(a*) = M(a)^* on the box.
    const TwistedCompression mstar(ctx, involution(a), N);
    CHECK((mstar.apply(v) - ma.apply_adjoint(v)).norm() <= 1e-10);
    CHECK(ma.lattice_point(ma.index_of(LatticeVector::zero(2 * static_cast<std::size_t>(n)))) ==
          LatticeVector::zero(2 * static_cast<std::size_t>(n)));
  }
  const DeformationContext ctx(make_standard_structure(1), 1.0);
  CHECK(TwistedCompression(ctx, e({0, 0}), 2).dimension() == 25);
  CHECK(TwistedCompression(ctx, e({0, 0}), 2).index_of({3, 0}) == -1);
}

TEST_CASE("norm bounds") {
  const DeformationContext ctx(make_standard_structure(1), 1.0);
  for (double hbar : {0.0, 0.5, kPi}) {
    const auto c = ctx.with_hbar(hbar);
    CHECK(rep_lower(c, e({2, -1}, Complex(0, 1)), 3) == 1.0);
    CHECK(l1_upper(e({2, -1}, Complex(0, 1))) == 1.0);
  }
  CHECK(rep_lower(ctx, e({0, 0}, 2.5), 1) == 2.5);

  FourierElement cos2 = e({1, 0}) + e({-1, 0});
  CHECK(std::abs(rep_lower(ctx.with_hbar(0.0), cos2, 40) - 2.0) <= 1e-2);

  Rng rng(54);
  for (double hbar : {0.0, 1.0}) {
    for (int t = 0; t < 3; ++t) {
      const auto a = random_element(rng, 1, 4, 2);
      double previous = 0.0;
      for (int N = 2; N <= 12; ++N) {
        const double lower = rep_lower(ctx.with_hbar(hbar), a, N);
        CHECK(lower >= previous - 1e-10);
        CHECK(lower <= l1_upper(a) + 1e-10);
        previous = lower;
      }
    }
  }
  CHECK_THROWS_AS(rep_lower(ctx, cos2, 0), DomainError);
}

TEST_CASE("norm curve") {
  const auto s = make_standard_structure(1);
  const auto curve = norm_curve(s, e({1, 1}), HbarGrid::linear(1.0, 5), 4);
  REQUIRE(curve.points.size() == 5);
  for (const auto& p : curve.points) {
    CHECK(p.estimate.lower == 1.0);
    CHECK(p.estimate.upper == 1.0);
    CHECK(p.estimate.rep_size == 4);
  }
  CHECK(curve.max_adjacent_jump == 0.0);
  REQUIRE(curve.classical.has_value());
  CHECK(curve.classical_consistent);

  const auto cos_curve = norm_curve(s, e({1, 0}) + e({-1, 0}), HbarGrid::linear(1.0, 3), 20);
  CHECK(cos_curve.classical->upper == doctest::Approx(2.0));
  CHECK(cos_curve.classical_consistent);
  for (const auto& p : cos_curve.points) CHECK(p.estimate.lower <= p.estimate.upper + 1e-10);
}
