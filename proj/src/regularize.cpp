#include "pseudovol/regularize.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "pseudovol/quadrature.hpp"

namespace pseudovol {

namespace {

double factorial(int n) {
  double r = 1.0;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

// Taylor coefficients c_j = g^(j)(0)/j!, j = 0..count-1, of the effective
// integrand g(x) = f(sign * x).
std::vector<double> taylor_coeffs(const SmoothFn& fn, Sign sign, int count,
                                  int required) {
  std::vector<double> c(count, 0.0);
  const double sgn = (sign == Sign::Plus) ? 1.0 : -1.0;
  const int provided = static_cast<int>(fn.taylor_at_zero.size());
  if (provided > 0 && provided < required)
    fail(ErrorCode::InvalidInput,
         "SmoothFn: analytic Taylor data covers " + std::to_string(provided) +
             " orders but the exponent requires " + std::to_string(required));
  const auto g = [&](double x) { return fn.f(sgn * x); };
  const quad::Side side =
      fn.two_sided ? quad::Side::Central : quad::Side::Forward;
  for (int j = 0; j < count; ++j) {
    if (j < provided) {
      c[j] = fn.taylor_at_zero[j];
      if (sign == Sign::Minus && j % 2 == 1) c[j] = -c[j];
    } else if (j == 0) {
      c[0] = g(0.0);
    } else {
      // Orders >= 3 only feed the extra (exactly cancelling) subtraction
      // terms, so they use a coarser base step where finite-difference
      // roundoff noise stays harmless; orders 1 and 2 keep the configured
      // step. The coarse step is a power of two so stencil nodes and weights
      // combine exactly and polynomial inputs yield exact coefficients.
      const double h0 =
          (j <= 2) ? fn.diff_step : std::max(fn.diff_step, 0.0625);
      c[j] = quad::derivative(g, 0.0, j, side, h0, 4) / factorial(j);
    }
  }
  return c;
}

}  // namespace

MeroScalar fp_power_integral(const SmoothFn& fn, Complex lambda, Sign sign) {
  MeroScalar out;
  out.lambda0 = lambda;
  const double re = lambda.real();
  const int m = (re >= 0.0) ? 0 : static_cast<int>(std::ceil(-re));
  if (m > kMaxTaylorDepth)
    fail(ErrorCode::DepthExceeded,
         "fp_power_integral: subtraction depth " + std::to_string(m) +
             " exceeds cap " + std::to_string(kMaxTaylorDepth));
  // Subtract three terms beyond the required depth m. For j >= m the added
  // c_j/(lambda+j+1) cancels the subtracted c_j x^j integral identically, so
  // estimation error in those coefficients cannot bias the result; it only
  // makes the remainder vanish to higher order at 0, where x^lambda would
  // otherwise amplify evaluation noise.
  const int depth = m + 3;
  const std::vector<double> c = taylor_coeffs(fn, sign, depth, m);
  const double sgn = (sign == Sign::Plus) ? 1.0 : -1.0;

  const auto remainder = [&](double x) {
    double t = fn.f(sgn * x);
    double xj = 1.0;
    for (int j = 0; j < depth; ++j) {
      t -= c[j] * xj;
      xj *= x;
    }
    return t;
  };

  // Remainder integral after x = u^2: 2 u^(2 lambda + 1) r(u^2) vanishes to
  // order 2(lambda + depth) + 2 >= 8 at u = 0. Below u0 the true mass is
  // < ~1e-13 * |c_depth| and is dropped, which keeps the u^(2 lambda + 1)
  // amplification of evaluation noise bounded. The panels up to 0.35 use
  // fixed Gauss rules (a linear operator, immune to noise-chasing
  // refinement); the tail [0.35, 1] is adaptive so kinks of f near 1 are
  // still resolved.
  const double u0 = (m <= 3) ? 0.03 : 0.25;
  std::vector<double> cuts;
  for (double c2 = u0; c2 < 0.34; c2 *= 2.0) cuts.push_back(c2);
  cuts.push_back(0.35);

  Complex total{0.0, 0.0};
  if (std::abs(lambda.imag()) < 1e-14) {
    const auto integ = [&](double u) {
      return 2.0 * std::pow(u, 2.0 * re + 1.0) * remainder(u * u);
    };
    double v = 0.0;
    for (size_t i = 0; i + 1 < cuts.size(); ++i)
      v += quad::gauss_legendre(integ, cuts[i], cuts[i + 1], 48);
    v += quad::integrate(integ, 0.35, 1.0, fn.tail_tolerance);
    total = Complex{v, 0.0};
  } else {
    const auto integ = [&](double u) -> Complex {
      return 2.0 * std::exp((2.0 * lambda + 1.0) * std::log(u)) *
             remainder(u * u);
    };
    for (size_t i = 0; i + 1 < cuts.size(); ++i)
      total += quad::gauss_legendre_c(integ, cuts[i], cuts[i + 1], 48);
    total += quad::integrate_c(integ, 0.35, 1.0, fn.tail_tolerance);
  }

  for (int j = 0; j < depth; ++j) {
    const Complex d = lambda + Complex(static_cast<double>(j + 1), 0.0);
    const double dist = std::abs(d);
    if (j < m && dist < kPoleWindow) {
      out.pole_order = 1;
      out.residue = c[j];
      continue;  // drop the singular Laurent term
    }
    if (j < m && dist < kNearPoleWarn) out.near_pole_warning = true;
    total += c[j] / d;
  }
  out.value = total;
  out.finite_part = total.real();
  return out;
}

namespace {

Complex I_lambda_impl(Complex lambda) {
  constexpr double kRoot8 = 2.8284271247461903;  // 2*sqrt(2)
  if (std::abs(lambda.imag()) < 1e-14) {
    const double re = lambda.real();
    if (re < 0.5 && std::abs(re - std::round(re)) < kPoleWindow &&
        std::round(re) <= -1.0)
      fail(ErrorCode::PoleHit,
           "I_lambda: pole at negative integer lambda = " +
               std::to_string(std::round(re)));
  }
  if (lambda.real() > 1.0) {
    if (std::abs(lambda.imag()) < 1e-14) {
      const double re = lambda.real();
      const double v = quad::integrate(
          [&](double s) { return std::pow(s, re) * std::sqrt(1.0 + s); }, 0.0,
          1.0, 1e-13);
      return Complex{v, 0.0};
    }
    return quad::integrate_c(
        [&](double s) -> Complex {
          return std::exp(lambda * std::log(s)) * std::sqrt(1.0 + s);
        },
        0.0, 1.0, 1e-13);
  }
  const Complex up = I_lambda_impl(lambda + 1.0);
  const Complex denom = 2.0 * lambda + 2.0;
  if (std::abs(denom) < kPoleWindow)
    fail(ErrorCode::PoleHit, "I_lambda: pole at lambda = -1");
  return (2.0 * kRoot8 - (2.0 * lambda + 5.0) * up) / denom;
}

}  // namespace

double I_lambda(double lambda) {
  return I_lambda_impl(Complex{lambda, 0.0}).real();
}

Complex I_lambda(Complex lambda) { return I_lambda_impl(lambda); }

MeroScalar fp_tan_measure(const SmoothFn& psi, Complex lambda) {
  SmoothFn g;
  const auto base = psi.f;
  g.f = [base](double x) { return base(std::atan(x)) / (1.0 + x * x); };
  g.two_sided = psi.two_sided;
  g.diff_step = psi.diff_step;
  g.tail_tolerance = psi.tail_tolerance;
  const Complex mu = 2.0 * lambda + 2.0;
  MeroScalar inner = fp_power_integral(g, mu, Sign::Plus);
  MeroScalar out = inner;
  out.lambda0 = lambda;
  // F(lambda) = G(2 lambda + 2): the Laurent constant is unchanged, the
  // residue halves.
  out.residue = inner.residue / 2.0;
  return out;
}

namespace {

bool is_nonpositive_integer(double x) {
  return std::abs(x - std::round(x)) < kPoleWindow && std::round(x) <= 0.0;
}

// log |Gamma(x)| and the sign of Gamma(x) for real non-integer x (or x > 0).
void signed_lgamma(double x, double* lg, double* sign) {
  if (x > 0.0) {
    *lg = std::lgamma(x);
    *sign = 1.0;
    return;
  }
  // Reflection: Gamma(x) = pi / (sin(pi x) Gamma(1-x)).
  const double s = std::sin(M_PI * x);
  *lg = std::log(M_PI) - std::log(std::abs(s)) - std::lgamma(1.0 - x);
  *sign = (s >= 0.0) ? 1.0 : -1.0;
}

}  // namespace

double beta_fp(Complex ca, Complex cb) {
  if (std::abs(ca.imag()) > 1e-12 || std::abs(cb.imag()) > 1e-12)
    fail(ErrorCode::InvalidInput, "beta_fp: arguments must be real");
  const double a = ca.real(), b = cb.real();
  if (is_nonpositive_integer(a) || is_nonpositive_integer(b))
    fail(ErrorCode::IndeterminateBeta,
         "beta_fp: argument at a non-positive integer");
  if (is_nonpositive_integer(a + b)) return 0.0;  // 1/Gamma(a+b) vanishes
  double la, sa, lb, sb, lab, sab;
  signed_lgamma(a, &la, &sa);
  signed_lgamma(b, &lb, &sb);
  signed_lgamma(a + b, &lab, &sab);
  return sa * sb * sab * std::exp(la + lb - lab);
}

}  // namespace pseudovol
