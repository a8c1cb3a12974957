#include "pseudovol/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <vector>

#include "pseudovol/core.hpp"

namespace pseudovol::quad {

namespace {

// Gauss–Kronrod 7/15 nodes and weights on [-1,1] (positive half; symmetric).
constexpr double kGK_X[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double kGK_WK[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
// 7-point Gauss weights, aligned with the odd-index Kronrod nodes (1,3,5,7).
constexpr double kGK_WG[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

template <typename T, typename F>
void gk15_panel(const F& f, double a, double b, T* kronrod, double* err) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  T fv[15];
  for (int i = 0; i < 7; ++i) {
    fv[i] = f(c - h * kGK_X[i]);
    fv[14 - i] = f(c + h * kGK_X[i]);
  }
  fv[7] = f(c);
  T sk{}, sg{};
  for (int i = 0; i < 7; ++i) sk += kGK_WK[i] * (fv[i] + fv[14 - i]);
  sk += kGK_WK[7] * fv[7];
  for (int i = 0; i < 3; ++i)
    sg += kGK_WG[i] * (fv[2 * i + 1] + fv[13 - 2 * i]);
  sg += kGK_WG[3] * fv[7];
  *kronrod = h * sk;
  *err = std::abs(h * (sk - sg));
}

template <typename T, typename F>
T adaptive_gk(const F& f, double a, double b, double tol, int depth) {
  T val;
  double err;
  gk15_panel<T>(f, a, b, &val, &err);
  if (err <= tol || depth <= 0) return val;
  const double c = 0.5 * (a + b);
  return adaptive_gk<T>(f, a, c, 0.5 * tol, depth - 1) +
         adaptive_gk<T>(f, c, b, 0.5 * tol, depth - 1);
}

struct GLRule {
  std::vector<double> x, w;  // nodes/weights on [-1,1]
};

// Gauss–Legendre nodes by Newton iteration on the Legendre recurrence.
GLRule make_gl(int n) {
  GLRule r;
  r.x.resize(n);
  r.w.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      const double dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
      double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    const double dp = n * (x * p1 - p0) / (x * x - 1.0);
    r.x[i] = -x;
    r.x[n - 1 - i] = x;
    r.w[i] = r.w[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return r;
}

const GLRule& gl_rule(int n) {
  static std::map<int, GLRule> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, make_gl(n)).first;
  return it->second;
}

}  // namespace

double integrate(const Fn1& f, double a, double b, double abs_tol,
                 int max_depth) {
  if (a == b) return 0.0;
  return adaptive_gk<double>(f, a, b, abs_tol, max_depth);
}

std::complex<double> integrate_c(const CFn1& f, double a, double b,
                               double abs_tol, int max_depth) {
  if (a == b) return {0.0, 0.0};
  return adaptive_gk<std::complex<double>>(f, a, b, abs_tol, max_depth);
}

double gauss_legendre(const Fn1& f, double a, double b, int order) {
  const GLRule& r = gl_rule(order);
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  double s = 0.0;
  for (int i = 0; i < order; ++i) s += r.w[i] * f(c + h * r.x[i]);
  return h * s;
}

std::complex<double> gauss_legendre_c(const CFn1& f, double a, double b,
                                    int order) {
  const GLRule& r = gl_rule(order);
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  std::complex<double> s{0.0, 0.0};
  for (int i = 0; i < order; ++i) s += r.w[i] * f(c + h * r.x[i]);
  return h * s;
}

double trapezoid_periodic(const Fn1& f, int n, double t0) {
  if (n < 1) fail(ErrorCode::InvalidInput, "trapezoid_periodic: n < 1");
  const double step = 2.0 * M_PI / n;
  double s = 0.0;
  for (int i = 0; i < n; ++i) s += f(t0 + i * step);
  return s * step;
}

double integrate2d(const Fn2& f, double ax, double bx, double ay, double by,
                   double abs_tol) {
  const double inner_tol = 0.1 * abs_tol / std::max(1.0, bx - ax);
  const Fn1 outer = [&](double x) {
    const Fn1 inner = [&](double y) { return f(x, y); };
    return integrate(inner, ay, by, inner_tol);
  };
  return integrate(outer, ax, bx, abs_tol);
}

namespace {

// Base finite-difference estimate of f^(j)(x) with step h.
// Central: nodes at x + (j/2 - i) h, i = 0..j (half-integer offsets when j is
// odd), error O(h^2). One-sided: nodes x + i h (or x - i h), error O(h).
double fd_stencil(const Fn1& f, double x, int j, Side side, double h) {
  double num = 0.0;
  if (side == Side::Central) {
    // Pair mirrored offsets before accumulating. With a dyadic step the node
    // products below are exact, so polynomial cancellations hold bitwise and
    // the stencil stays clean even at high order.
    std::vector<double> binom(j + 1, 1.0);
    for (int i = 1; i <= j; ++i) binom[i] = binom[i - 1] * (j - i + 1) / i;
    for (int i = 0; 2 * i <= j; ++i) {
      const double sign = (i % 2 == 0) ? 1.0 : -1.0;
      const double off = (0.5 * j - i) * h;
      if (2 * i == j) {
        num += sign * binom[i] * f(x);
        break;
      }
      const double mirror_sign = ((j - i) % 2 == 0) ? 1.0 : -1.0;
      // mirrored pair: same |offset|, weights C(j,i) = C(j,j-i)
      num += binom[i] * (sign * f(x + off) + mirror_sign * f(x - off));
    }
    return num / std::pow(h, j);
  }
  double binom = 1.0;
  for (int i = 0; i <= j; ++i) {
    if (i > 0) binom = binom * (j - i + 1) / i;
    const double sign = (i % 2 == 0) ? 1.0 : -1.0;
    switch (side) {
      case Side::Forward:
        // sum (-1)^(j-i) C(j,i) f(x+ih)
        num += ((j - i) % 2 == 0 ? 1.0 : -1.0) * binom * f(x + i * h);
        break;
      default:  // Backward
        num += sign * binom * f(x - i * h);
        break;
    }
  }
  return num / std::pow(h, j);
}

}  // namespace

double derivative(const Fn1& f, double x, int order, Side side, double h0,
                  int levels, double* variation) {
  if (order < 0) fail(ErrorCode::InvalidInput, "derivative: negative order");
  if (order == 0) {
    if (variation) *variation = 0.0;
    return f(x);
  }
  const int rows = levels + 1;
  std::vector<std::vector<double>> t(rows);
  // Error expansion is in h^2 for central stencils, h for one-sided ones.
  const double ratio = (side == Side::Central) ? 4.0 : 2.0;
  double prev_diag = 0.0, diag = 0.0;
  for (int i = 0; i < rows; ++i) {
    t[i].resize(i + 1);
    t[i][0] = fd_stencil(f, x, order, side, h0 / std::pow(2.0, i));
    double fac = 1.0;
    for (int k = 1; k <= i; ++k) {
      fac *= ratio;
      t[i][k] = (fac * t[i][k - 1] - t[i - 1][k - 1]) / (fac - 1.0);
    }
    prev_diag = diag;
    diag = t[i][i];
  }
  if (variation) *variation = (rows >= 2) ? std::abs(diag - prev_diag) : 0.0;
  return diag;
}

}  // namespace pseudovol::quad
