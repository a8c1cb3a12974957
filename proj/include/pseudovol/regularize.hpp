#pragma once
// Meromorphic continuation of one-dimensional power-weighted integrals:
// finite parts, residues at the pole lattice, and the special families
// (the sqrt(1+s) moment family, the tangent-power measure, Euler Beta).

#include <complex>
#include <functional>
#include <vector>

#include "pseudovol/core.hpp"

namespace pseudovol {

// Result of evaluating a meromorphic scalar family at a point lambda0:
// the finite part (Laurent constant term) and, when lambda0 sits on a pole
// of the family, the residue of the simple pole.
struct MeroScalar {
  Complex lambda0{0.0, 0.0};
  double finite_part = 0.0;
  double residue = 0.0;   // 0 when analytic at lambda0
  int pole_order = 0;     // 0 or 1
  bool near_pole_warning = false;  // within 1e-6 (but not 1e-9) of a pole
  Complex value{0.0, 0.0};         // finite part with imaginary part kept
};

// Which one-sided power family x_+^lambda or x_-^lambda the integral pairs
// against. Minus evaluates the test function at -x (its carrier is [-1,0]).
enum class Sign { Plus, Minus };

// A C^inf test function on a neighborhood of [0,1] (or [-1,0] for
// Sign::Minus). If `taylor_at_zero` is non-empty its entries are used as the
// exact Taylor coefficients c_j = f^(j)(0)/j!; otherwise they are estimated by
// Richardson-extrapolated finite differences (central when two_sided, forward
// one-sided otherwise).
struct SmoothFn {
  std::function<double(double)> f;
  std::vector<double> taylor_at_zero;
  bool two_sided = true;
  double diff_step = 1e-2;  // Richardson base step
  // Absolute tolerance for the adaptive part of the remainder integral (the
  // region away from 0, where the Taylor subtraction has no effect). Raise it
  // when evaluations of f carry noise above ~1e-14 -- e.g. when f is itself
  // built from finite differences -- or the refinement chases that noise
  // instead of converging.
  double tail_tolerance = 1e-13;
};

inline constexpr int kMaxTaylorDepth = 12;   // subtraction-depth cap
inline constexpr double kPoleWindow = 1e-9;  // exact-pole snap distance
inline constexpr double kNearPoleWarn = 1e-6;

// Finite part of  int_0^1 x^lambda f(sign * x) dx  by Taylor subtraction.
// Simple poles at lambda = -1, -2, ..., -m with residue f^(j)(0)/j! (times
// (-1)^j for Sign::Minus) at lambda = -j-1. At a pole the finite part is the
// Laurent constant (the singular term is dropped).
MeroScalar fp_power_integral(const SmoothFn& f, Complex lambda,
                             Sign sign = Sign::Plus);

// The moment family I(lambda) = int_0^1 s^lambda sqrt(1+s) ds, continued by
// the descent  I(lambda) = (4*sqrt(2) - (2*lambda+5) I(lambda+1)) /
// (2*lambda+2). Poles at the negative integers (PoleHit).
double I_lambda(double lambda);
Complex I_lambda(Complex lambda);

// Finite part of  int_0^{pi/4} tan(t)^{2*lambda+2} psi(t) dt  via x = tan t.
// Poles at lambda = -m/2 for integer m >= 3; the residue is half the
// corresponding x-power residue of psi(arctan x)/(1+x^2).
MeroScalar fp_tan_measure(const SmoothFn& psi, Complex lambda);

// Euler Beta B(a,b) = Gamma(a)Gamma(b)/Gamma(a+b) continued to negative
// non-integer arguments; returns exactly 0 when Gamma(a+b) has a pole while
// the numerator stays finite. Throws IndeterminateBeta when a or b is a
// non-positive integer. Arguments must be (numerically) real.
double beta_fp(Complex a, Complex b);

}  // namespace pseudovol
