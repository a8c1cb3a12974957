#pragma once
// 1-D / 2-D quadrature and Richardson-extrapolated numerical derivatives.
//
// The adaptive routine is Gauss–Kronrod 7/15 with bisection; the fixed-order
// routine is Gauss–Legendre with cached nodes. Both have complex-valued
// variants used by the meromorphic-continuation engine.

#include <complex>
#include <functional>

namespace pseudovol::quad {

using Fn1 = std::function<double(double)>;
using Fn2 = std::function<double(double, double)>;
using CFn1 = std::function<std::complex<double>(double)>;

// Adaptive Gauss–Kronrod 7/15 on [a,b] to absolute tolerance.
double integrate(const Fn1& f, double a, double b, double abs_tol = 1e-10,
                 int max_depth = 48);
std::complex<double> integrate_c(const CFn1& f, double a, double b,
                                 double abs_tol = 1e-10, int max_depth = 48);

// Fixed-order Gauss–Legendre on [a,b]; nodes cached per order.
double gauss_legendre(const Fn1& f, double a, double b, int order);
std::complex<double> gauss_legendre_c(const CFn1& f, double a, double b,
                                      int order);

// Trapezoid rule over one full period [t0, t0 + 2*pi) with n equispaced
// points; spectrally accurate for smooth periodic integrands. Returns the
// integral (not the mean).
double trapezoid_periodic(const Fn1& f, int n, double t0 = 0.0);

// Iterated adaptive 2-D integral over [ax,bx] x [ay,by].
double integrate2d(const Fn2& f, double ax, double bx, double ay, double by,
                   double abs_tol = 1e-8);

enum class Side { Central, Forward, Backward };

// j-th derivative of f at x by finite differences with Richardson
// extrapolation (base step h0, `levels` halvings). Central stencils sit on
// half-integer offsets for odd j, so they never evaluate at x itself.
// If `variation` is non-null it receives the absolute difference between the
// last two Richardson diagonal entries (a convergence monitor).
double derivative(const Fn1& f, double x, int order, Side side,
                  double h0 = 1e-2, int levels = 4,
                  double* variation = nullptr);

}  // namespace pseudovol::quad
