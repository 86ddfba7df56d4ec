#include <doctest.h>

#include <cmath>
#include <numbers>

#include "rieffel/algebra.hpp"
#include "rieffel/errors.hpp"
#include "rieffel/random.hpp"
#include "rieffel/serialization.hpp"
#include "test_support.hpp"

using namespace rieffel;
using rieffel::testing::e;

TEST_CASE("undeformed product: unit, characters, binomial") {
  Rng rng(1);
  const auto a = random_element(rng, 1, 10);
  CHECK(undeformed_multiply(FourierElement::unit(1), a) == a);
  CHECK(undeformed_multiply(e({1, 2}), e({-3, 1})) == e({-2, 3}));

  const auto c = e({1, 1}) + e({-1, -1});
  const auto expected = e({2, 2}) + 2.0 * FourierElement::unit(1) + e({-2, -2});
  CHECK(l1_distance(undeformed_multiply(c, c), expected) == 0.0);

  CHECK_THROWS_AS(undeformed_multiply(a, FourierElement::unit(2)), DimensionError);
}

TEST_CASE("undeformed product is a commutative associative unital algebra") {
  Rng rng(2);
  for (int t = 0; t < 50; ++t) {
    const auto a = random_element(rng, 1, 30);
    const auto b = random_element(rng, 1, 30);
    const auto c = random_element(rng, 1, 30);
    const double scale = a.l1_norm() * b.l1_norm() * c.l1_norm();
    CHECK(l1_distance(undeformed_multiply(undeformed_multiply(a, b), c),
                      undeformed_multiply(a, undeformed_multiply(b, c))) <= 1e-13 * scale);
    CHECK(l1_distance(undeformed_multiply(a, b), undeformed_multiply(b, a)) <=
          1e-13 * a.l1_norm() * b.l1_norm());
    CHECK(l1_distance(involution(undeformed_multiply(a, b)),
                      undeformed_multiply(involution(b), involution(a))) <=
          1e-13 * a.l1_norm() * b.l1_norm());
  }
}

TEST_CASE("involution") {
  CHECK(involution(e({2, -1})) == e({-2, 1}));
  CHECK(involution(FourierElement::unit(1) * Complex(0, 1)) == FourierElement::unit(1) * Complex(0, -1));
  Rng rng(3);
  for (int t = 0; t < 20; ++t) {
    const auto a = random_element(rng, 2, 12);
    CHECK(involution(involution(a)) == a);
    CHECK(involution(a).l1_norm() == doctest::Approx(a.l1_norm()).epsilon(1e-15));
  }
}

TEST_CASE("evaluate") {
  const double x[] = {0.3, -1.7};
  CHECK(evaluate(FourierElement::unit(1), x) == Complex(1.0));
  const double quarter[] = {std::numbers::pi / 2, 0.0};
  const Complex v = evaluate(e({1, 0}), quarter);
  CHECK(std::abs(v - Complex(0, 1)) < 1e-15);

  Rng rng(4);
  for (int t = 0; t < 20; ++t) {
    const auto a = random_element(rng, 1, 8);
    const double p[] = {rng.uniform(0, 7), rng.uniform(0, 7)};
    CHECK(std::abs(evaluate(involution(a), p) - std::conj(evaluate(a, p))) < 1e-13);
    const double shifted[] = {p[0] + 2 * std::numbers::pi, p[1] - 4 * std::numbers::pi};
    CHECK(std::abs(evaluate(a, p) - evaluate(a, shifted)) < 1e-12);
  }
  const double wrong[] = {0.0};
  CHECK_THROWS_AS(evaluate(e({1, 0}), wrong), DimensionError);
}

TEST_CASE("sup norm bounds") {
  for (int refinement : {1, 3, 8}) {
    const auto b = sup_norm_estimate(e({2, -1}), refinement);
    CHECK(b.lower == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(b.upper == 1.0);
  }
  const auto cosine = e({1, 0}) + e({-1, 0});
  CHECK(sup_norm_estimate(cosine, 64).upper == 2.0);
  CHECK(sup_norm_estimate(cosine, 64).lower == doctest::Approx(2.0).epsilon(1e-14));

  Rng rng(5);
  for (int t = 0; t < 10; ++t) {
    const auto a = random_element(rng, 1, 5);
    double previous = 0.0;
    for (int N : {4, 8, 16, 32}) {
      const auto b = sup_norm_estimate(a, N);
      CHECK(b.lower >= previous - 1e-14);
      CHECK(b.lower <= b.upper + 1e-14);
      previous = b.lower;
    }
  }
  CHECK_THROWS_AS(sup_norm_estimate(cosine, 0), DomainError);
}

TEST_CASE("translation action") {
  Rng rng(6);
  const double zero[] = {0.0, 0.0};
  for (int t = 0; t < 20; ++t) {
    const auto a = random_element(rng, 1, 10);
    CHECK(translate(a, zero) == a);
    const double u[] = {rng.uniform(-3, 3), rng.uniform(-3, 3)};
    const double v[] = {rng.uniform(-3, 3), rng.uniform(-3, 3)};
    const double uv[] = {u[0] + v[0], u[1] + v[1]};
    const double minus_u[] = {-u[0], -u[1]};
    CHECK(l1_distance(translate(translate(a, u), minus_u), a) <= 1e-13 * a.l1_norm());
    CHECK(l1_distance(translate(translate(a, u), v), translate(a, uv)) <= 1e-13 * a.l1_norm());
    CHECK(translate(a, u).l1_norm() == doctest::Approx(a.l1_norm()).epsilon(1e-15));
  }
  const double u[] = {0.4, -1.1};
  const auto moved = translate(e({2, 3}), u);
  CHECK(std::abs(moved.coefficient({2, 3}) - std::polar(1.0, 2 * 0.4 + 3 * -1.1)) < 1e-15);
}

TEST_CASE("derivative") {
  CHECK(derivative(FourierElement::unit(1), 0).is_zero());
  CHECK(derivative(e({1, 0}), 0) == e({1, 0}) * Complex(0, 1));
  CHECK_THROWS_AS(derivative(e({1, 0}), 2), DimensionError);

  Rng rng(7);
  for (int t = 0; t < 20; ++t) {
    const auto a = random_element(rng, 2, 8);
    const auto b = random_element(rng, 2, 8);
    for (std::size_t j = 0; j < 4; ++j) {
      const auto lhs = derivative(undeformed_multiply(a, b), j);
      const auto rhs = undeformed_multiply(derivative(a, j), b) + undeformed_multiply(a, derivative(b, j));
      CHECK(l1_distance(lhs, rhs) <= 1e-12 * a.l1_norm() * b.l1_norm());
    }
  }
}

TEST_CASE("derivative generates the translation action") {
  Rng rng(8);
  for (int t = 0; t < 10; ++t) {
    const auto a = random_element(rng, 1, 6);
    for (std::size_t j = 0; j < 2; ++j) {
      std::vector<double> ts{1e-2, 1e-3, 1e-4}, errs;
      for (double h : ts) {
        double u[] = {0.0, 0.0};
        u[j] = h;
        const auto quotient = Complex(1.0 / h) * (translate(a, u) - a);
        errs.push_back(l1_distance(quotient, derivative(a, j)));
      }
      if (errs.front() < 1e-14) continue;  // a independent of direction j
      const double slope = std::log(errs[0] / errs[2]) / std::log(ts[0] / ts[2]);
      CHECK(slope >= 0.9);
    }
  }
}

TEST_CASE("laplacian_g") {
  const auto standard = make_standard_structure(1);
  CHECK(laplacian_g(FourierElement::unit(1), standard).is_zero());
  CHECK(laplacian_g(e({1, 0}), standard) == -1.0 * e({1, 0}));

  // G = diag(4, 1): k.G^{-1}.k = 1/4 for k = (1, 0).
  Matrix P = Matrix::Zero(2, 2);
  P(0, 0) = 2.0;
  P(1, 1) = 1.0;
  const auto stretched = SymplecticStructure::from_basis_change(P);
  CHECK(stretched.metric_g()(0, 0) == doctest::Approx(4.0));
  const auto lap = laplacian_g(e({1, 0}), stretched);
  CHECK(std::abs(lap.coefficient({1, 0}) + 0.25) < 1e-15);

  Rng rng(9);
  for (int t = 0; t < 10; ++t) {
    const auto s = random_structure(rng, 2);
    const auto a = random_element(rng, 2, 8);
    FourierElement composed(2);
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c)
        composed += s.inverse_metric()(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) *
                    derivative(derivative(a, r), c);
    const auto direct = laplacian_g(a, s);
    for (const auto& [k, coeff] : direct.terms())
      CHECK(std::abs(coeff - composed.coefficient(k)) <= 1e-13 * std::max(1.0, std::abs(coeff)));
  }
}

TEST_CASE("standard structure and Poisson tensor") {
  const auto s = make_standard_structure(1);
  CHECK(s.theta()(0, 1) == 1.0);
  CHECK(s.theta()(1, 0) == -1.0);
  CHECK(s.metric_g().isIdentity());
  CHECK((s.complex_J() * s.complex_J() + Matrix::Identity(2, 2)).isZero());
  CHECK(poisson_tensor(s).isApprox(s.theta()));
  for (int n = 1; n <= 4; ++n) {
    const auto sn = make_standard_structure(n);
    CHECK(sn.metric_g().isIdentity());
    CHECK(diagnose_structure(n, sn.theta(), sn.metric_g(), sn.complex_J()).ok());
    CHECK((poisson_tensor(sn) * sn.theta() + Matrix::Identity(2 * n, 2 * n)).isZero(1e-15));
  }
  CHECK_THROWS_AS(make_standard_structure(0), DimensionError);
  CHECK_THROWS_AS(poisson_tensor(Matrix::Zero(2, 2)), StructureError);

  Rng rng(10);
  for (int t = 0; t < 10; ++t) {
    const auto r = random_structure(rng, 2);
    CHECK((r.poisson() + r.poisson().transpose()).isZero(1e-14));
    CHECK(std::abs(r.theta().determinant() - 1.0) < 1e-10);
  }
}

TEST_CASE("structure invariants are individually reported") {
  const auto s = make_standard_structure(1);
  Matrix bad_theta = s.theta();
  bad_theta(0, 1) = 2.0;  // no longer antisymmetric, no longer compatible
  const auto d = diagnose_structure(1, bad_theta, s.metric_g(), s.complex_J());
  CHECK(d.theta_antisymmetry == doctest::Approx(1.0));
  CHECK(d.compatibility_residual > 0.5);
  CHECK(d.j_square_residual == 0.0);
  CHECK_FALSE(d.ok());
  CHECK_THROWS_AS(SymplecticStructure(1, bad_theta, s.metric_g(), s.complex_J()), StructureError);

  Matrix bad_J = s.complex_J() * 1.1;
  CHECK(diagnose_structure(1, s.theta(), s.metric_g(), bad_J).j_square_residual > 0.1);
  CHECK_THROWS_AS(SymplecticStructure(1, s.theta(), s.metric_g(), Matrix::Identity(3, 3)), StructureError);
}

TEST_CASE("poisson bracket") {
  const auto s = make_standard_structure(1);
  Rng rng(11);
  const auto a = random_element(rng, 1, 8);
  CHECK(poisson_bracket(a, FourierElement::unit(1), s).is_zero());
  // pi^{12} = 1: {e_(1,0), e_(0,1)} = pi^{12} (i)(i) e_(1,1) = -e_(1,1).
  CHECK(l1_distance(poisson_bracket(e({1, 0}), e({0, 1}), s), -1.0 * e({1, 1})) < 1e-15);
  for (int t = 0; t < 20; ++t) {
    const auto x = random_element(rng, 1, 8);
    const auto y = random_element(rng, 1, 8);
    CHECK((poisson_bracket(x, y, s) + poisson_bracket(y, x, s)).l1_norm() <= 1e-12 * x.l1_norm() * y.l1_norm());
  }
}

TEST_CASE("complex frame") {
  const auto s = make_standard_structure(1);
  const auto frame = complex_frame(s);
  CHECK(frame.basis_change().isIdentity());
  CHECK(frame.lambda_of({1, 0})[0] == Complex(1, 0));
  CHECK(frame.lambda_of({0, 1})[0] == Complex(0, 1));
  CHECK(complex_frame(make_standard_structure(3)).basis_change().isIdentity());

  Rng rng(12);
  for (int n = 1; n <= 3; ++n) {
    for (int t = 0; t < 5; ++t) {
      const auto r = random_structure(rng, n);
      const auto f = complex_frame(r);
      const Matrix& P = f.basis_change();
      const Matrix conj = P * r.complex_J() * P.inverse();
      CHECK((conj - make_standard_structure(n).complex_J()).cwiseAbs().maxCoeff() < 1e-10);
      // |lambda|^2 is the inverse-metric form.
      const auto k = random_lattice_vector(rng, n, 4);
      double sum = 0.0;
      for (const auto& lam : f.lambda_of(k)) sum += std::norm(lam);
      CHECK(sum == doctest::Approx(inverse_metric_form(r, k)).epsilon(1e-12));
    }
  }
}

TEST_CASE("element construction and pruning") {
  CHECK_THROWS_AS(FourierElement(0), DimensionError);
  FourierElement a(1);
  CHECK_THROWS_AS(a.add_term({1, 2, 3}, 1.0), DimensionError);
  a.add_term({1, 0}, 1.0);
  a.add_term({1, 0}, -1.0);
  CHECK(a.is_zero());
  a.add_term({2, 0}, 1e-17);
  CHECK(a.size() == 1);  // only exact zeros are pruned implicitly
  CHECK(a.pruned().is_zero());
}

TEST_CASE("JSON round trip is lossless") {
  Rng rng(13);
  for (int t = 0; t < 10; ++t) {
    const auto a = random_element(rng, 2, 10);
    const auto text = element_to_json(a).dump();
    CHECK(element_from_json(nlohmann::json::parse(text)) == a);
    const auto s = random_structure(rng, 2);
    const auto back = structure_from_json(nlohmann::json::parse(structure_to_json(s).dump()));
    CHECK(back.theta() == s.theta());
    CHECK(back.metric_g() == s.metric_g());
    CHECK(back.complex_J() == s.complex_J());
  }
  CHECK_THROWS_AS(element_from_json(nlohmann::json::parse(R"({"n": 1})")), SchemaError);
  CHECK_THROWS_AS(element_from_json(nlohmann::json::parse(R"({"n": 1, "terms": [{"k": [1], "re": 1, "im": 0}]})")),
                  DimensionError);
  CHECK_THROWS_AS(load_structure("standard:x"), SchemaError);
  CHECK(load_structure("standard:2").dim_n() == 2);
}
