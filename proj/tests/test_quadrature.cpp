#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <complex>

#include "doctest.h"
#include "pseudovol/quadrature.hpp"

using namespace pseudovol;

TEST_CASE("adaptive GK handles smooth, singular-derivative and kinked integrands") {
  CHECK(quad::integrate([](double x) { return std::exp(x); }, 0.0, 1.0, 1e-12) ==
        doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-13));
  // x^{3/2}: endpoint derivative singularity
  CHECK(quad::integrate([](double x) { return std::pow(x, 1.5); }, 0.0, 1.0,
                        1e-12) == doctest::Approx(0.4).epsilon(1e-11));
  // kink inside the interval
  CHECK(quad::integrate([](double x) { return std::abs(x - 1.0 / 3.0); }, 0.0,
                        1.0, 1e-12) ==
        doctest::Approx(5.0 / 18.0).epsilon(1e-11));
  // inverse-sqrt endpoint singularity (integrable)
  CHECK(quad::integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0,
                        1e-10) == doctest::Approx(2.0).epsilon(1e-7));
}

TEST_CASE("complex adaptive GK") {
  std::complex<double> lam{0.5, 0.7};
  auto v = quad::integrate_c(
      [&](double x) { return std::exp(lam * std::log(x)); }, 0.0, 1.0, 1e-12);
  auto expect = 1.0 / (lam + 1.0);
  CHECK(std::abs(v - expect) < 1e-9);
}

TEST_CASE("Gauss-Legendre fixed order") {
  // GL64 integrates polynomials up to degree 127 exactly
  CHECK(quad::gauss_legendre([](double x) { return std::pow(x, 100); }, 0.0,
                             1.0, 64) ==
        doctest::Approx(1.0 / 101.0).epsilon(1e-14));
  CHECK(quad::gauss_legendre([](double x) { return std::cos(x); }, 0.0, 2.0,
                             64) == doctest::Approx(std::sin(2.0)).epsilon(1e-14));
}

TEST_CASE("periodic trapezoid is spectrally exact on trig polynomials") {
  CHECK(quad::trapezoid_periodic(
            [](double t) { return std::cos(t) * std::cos(t); }, 256) ==
        doctest::Approx(M_PI).epsilon(1e-14));
  CHECK(quad::trapezoid_periodic(
            [](double t) { return 1.0 + std::sin(3 * t); }, 8) ==
        doctest::Approx(2.0 * M_PI).epsilon(1e-14));
}

TEST_CASE("iterated 2-D adaptive") {
  double v = quad::integrate2d(
      [](double x, double y) { return x * y * std::exp(x + y); }, 0.0, 1.0,
      0.0, 1.0, 1e-10);
  CHECK(v == doctest::Approx(1.0).epsilon(1e-9));  // (int_0^1 x e^x dx)^2 = 1
}

TEST_CASE("Richardson derivatives: central orders 1..5 on sin") {
  const double x0 = 0.3;
  auto f = [](double x) { return std::sin(x); };
  const double d[6] = {std::sin(x0), std::cos(x0),  -std::sin(x0),
                       -std::cos(x0), std::sin(x0), std::cos(x0)};
  // Roundoff in the stencil grows like eps * 2^j / h^j, so higher orders need
  // a larger base step and looser tolerance.
  const double h0[6] = {0.0, 1e-2, 1e-2, 5e-2, 0.2, 0.3};
  const double tol[6] = {0.0, 1e-10, 1e-8, 1e-6, 1e-4, 1e-3};
  for (int j = 1; j <= 5; ++j) {
    double var = 0.0;
    double est =
        quad::derivative(f, x0, j, quad::Side::Central, h0[j], 4, &var);
    CHECK(est == doctest::Approx(d[j]).epsilon(tol[j]));
  }
}

TEST_CASE("Richardson derivatives: one-sided") {
  auto f = [](double x) { return std::exp(2.0 * x); };
  CHECK(quad::derivative(f, 0.0, 1, quad::Side::Forward, 1e-2, 4) ==
        doctest::Approx(2.0).epsilon(1e-9));
  CHECK(quad::derivative(f, 0.0, 2, quad::Side::Forward, 1e-2, 4) ==
        doctest::Approx(4.0).epsilon(1e-7));
  CHECK(quad::derivative(f, 0.0, 1, quad::Side::Backward, 1e-2, 4) ==
        doctest::Approx(2.0).epsilon(1e-9));
  CHECK(quad::derivative(f, 0.0, 2, quad::Side::Backward, 1e-2, 4) ==
        doctest::Approx(4.0).epsilon(1e-7));
  CHECK(quad::derivative(f, 0.0, 3, quad::Side::Forward, 1e-2, 4) ==
        doctest::Approx(8.0).epsilon(1e-5));
}

TEST_CASE("Richardson derivatives are exact on polynomials") {
  auto f = [](double x) { return std::pow(x, 6); };
  // 4th and 5th derivative of x^6 at 0 vanish; stencil + Richardson must see that
  CHECK(std::abs(quad::derivative(f, 0.0, 4, quad::Side::Central, 5e-2, 4)) <
        1e-9);
  CHECK(std::abs(quad::derivative(f, 0.0, 5, quad::Side::Central, 5e-2, 4)) <
        1e-7);
  auto g = [](double x) { return 1.0 + 2.0 * x + 3.0 * x * x; };
  CHECK(quad::derivative(g, 0.0, 2, quad::Side::Central, 1e-2, 4) ==
        doctest::Approx(6.0).epsilon(1e-10));
}

TEST_CASE("variation monitor flags non-smooth points") {
  auto kinked = [](double x) { return std::pow(std::abs(x), 1.5); };
  double var = 0.0;
  quad::derivative(kinked, 0.0, 2, quad::Side::Forward, 1e-2, 4, &var);
  CHECK(var > 1e-2);  // x^{3/2} has no one-sided second derivative at 0
  double var_smooth = 0.0;
  quad::derivative([](double x) { return std::cos(x); }, 0.0, 2,
                   quad::Side::Central, 1e-2, 4, &var_smooth);
  // the last Richardson correction on a smooth function is roundoff-level
  CHECK(var_smooth < 1e-6);
}
