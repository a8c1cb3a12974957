#include "pseudovol/crofton.hpp"

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "pseudovol/grassmann.hpp"
#include "pseudovol/quadrature.hpp"

namespace pseudovol {
namespace {

constexpr double kPi = 3.14159265358979323846;

double clamp_unit(double x) { return std::clamp(x, -1.0, 1.0); }

// Gauss-Legendre on [a,b] after the substitution
// beta = a + (b-a)(1 - cos(pi tau))/2, whose vanishing endpoint derivative
// tames the square-root joints the circle kernel has at piece boundaries.
double gl_cos_sub(const quad::Fn1& g, double a, double b, int order) {
  if (!(b > a)) return 0.0;
  return quad::gauss_legendre(
      [&](double tau) {
        const double beta = a + (b - a) * 0.5 * (1.0 - std::cos(kPi * tau));
        const double weight = (b - a) * 0.5 * kPi * std::sin(kPi * tau);
        return g(beta) * weight;
      },
      0.0, 1.0, order);
}

// Mean over beta in [0, 2pi) of circle_abs_average(c + s*cos(beta), r),
// split into analytic pieces at the branch points |c + s*cos(beta)| = r.
double circle_kernel_mean(double c, double s, double r) {
  s = std::abs(s);
  r = std::abs(r);
  if (s < 1e-14) return circle_abs_average(c, r);
  std::vector<double> cuts{0.0, kPi};
  for (double target : {(r - c) / s, (-r - c) / s})
    if (target > -1.0 && target < 1.0) cuts.push_back(std::acos(target));
  std::sort(cuts.begin(), cuts.end());
  double total = 0.0;
  for (size_t i = 0; i + 1 < cuts.size(); ++i)
    total += gl_cos_sub(
        [&](double beta) {
          return circle_abs_average(c + s * std::cos(beta), r);
        },
        cuts[i], cuts[i + 1], 48);
  return total / kPi;  // integrand is even, so [0,pi] carries half the period
}

// Steps for the scaling stencils in q_radial. The wide interior step keeps
// the noise amplification of the second difference at ~3e4 (vs 1.2e7 for a
// 1e-3 step) while the fourth-order stencil holds truncation near 1e-9; the
// narrow step is used by the one-sided boundary stencil, where a wide step
// would cost second-order truncation ~1e-4.
constexpr double kQRadialWideStep = 1e-2;
constexpr double kQRadialEdgeStep = 1e-3;

// Radial-ray operator: first (order 1) or second (order 2) application of
// (1/r) d/dr to phi at (z, w), via the scaling stencil F(s) = phi(sz, sw).
// Five-point central stencil when (1 +/- 2h)(z, w) stays inside the square,
// second-order one-sided stencil otherwise.
double q_radial(const TorusAverage& phi, double z, double w, int order) {
  const double r2 = z * z + w * w;
  if (r2 < 1e-16) fail(ErrorCode::InvalidInput, "q_radial: undefined at 0");
  const double mu = std::max(std::abs(z), std::abs(w));
  auto f = [&](double s) { return phi(s * z, s * w); };
  double d1 = 0.0, d2 = 0.0;
  if ((1.0 - mu) / mu > 2.0 * kQRadialWideStep) {
    const double h = kQRadialWideStep;
    const double fm2 = f(1.0 - 2.0 * h), fm = f(1.0 - h), f0 = f(1.0),
                 fp = f(1.0 + h), fp2 = f(1.0 + 2.0 * h);
    d1 = (fm2 - 8.0 * fm + 8.0 * fp - fp2) / (12.0 * h);
    d2 = (-fm2 + 16.0 * fm - 30.0 * f0 + 16.0 * fp - fp2) / (12.0 * h * h);
  } else {
    const double h = kQRadialEdgeStep;
    const double f0 = f(1.0), f1 = f(1.0 - h), f2 = f(1.0 - 2.0 * h),
                 f3 = f(1.0 - 3.0 * h);
    d1 = (3.0 * f0 - 4.0 * f1 + f2) / (2.0 * h);
    d2 = (2.0 * f0 - 5.0 * f1 + 4.0 * f2 - f3) / (h * h);
  }
  if (order == 1) return d1 / r2;
  return (d2 - d1) / (r2 * r2);
}

// Sum of phi over the four boundary edge points hit by the slope parameter x.
double edge_sum(const TorusAverage& phi, double x) {
  return phi(1.0, x) + phi(x, 1.0) + phi(-1.0, -x) + phi(-x, -1.0);
}

double edge_sum_q(const TorusAverage& phi, double x) {
  return q_radial(phi, 1.0, x, 1) + q_radial(phi, x, 1.0, 1) +
         q_radial(phi, -1.0, -x, 1) + q_radial(phi, -x, -1.0, 1);
}

// Quarter-turn symmetrization of phi.
double phi_four(const TorusAverage& phi, double z, double w) {
  return 0.25 * (phi(z, w) + phi(-w, z) + phi(-z, -w) + phi(w, -z));
}

// s-extent of the hyperbola sheet inside the square along direction t.
double sheet_bound(double t) {
  const double m = std::max(std::abs(std::cos(t)), std::abs(std::sin(t)));
  const double inv = 1.0 / m;
  return inv <= 1.0 ? 0.0 : std::acosh(inv);
}

Subspace subspace_from_basis(const Matrix& basis) {
  return make_subspace(basis);
}

}  // namespace

double circle_abs_average(double u, double radius) {
  const double r = std::abs(radius);
  const double a = std::abs(u);
  if (a >= r || r <= 0.0) return a;
  return (2.0 / kPi) * (u * std::asin(u / r) + std::sqrt(r * r - u * u));
}

TorusAverage average_over_torus(std::function<double(const Subspace&)> f,
                                int n_tor) {
  if (!f) fail(ErrorCode::InvalidInput, "average_over_torus: empty function");
  if (n_tor < 1)
    fail(ErrorCode::InvalidInput, "average_over_torus: need n_tor >= 1");
  TorusAverage out;
  out.n_tor = n_tor;
  out.phi = [f = std::move(f), n_tor](double z1, double w1) {
    z1 = clamp_unit(z1);
    w1 = clamp_unit(w1);
    const double rz = std::sqrt(std::max(0.0, 1.0 - z1 * z1));
    const double rw = std::sqrt(std::max(0.0, 1.0 - w1 * w1));
    const int na = rz < 1e-14 ? 1 : n_tor;
    const int nb = rw < 1e-14 ? 1 : n_tor;
    double sum = 0.0;
    for (int i = 0; i < na; ++i) {
      const double alpha = 2.0 * kPi * i / na;
      Eigen::Vector3d z(z1, rz * std::cos(alpha), rz * std::sin(alpha));
      for (int j = 0; j < nb; ++j) {
        const double beta = 2.0 * kPi * j / nb;
        Eigen::Vector3d w(w1, rw * std::cos(beta), rw * std::sin(beta));
        sum += f(plane_from_sphere_pair(make_sphere_pair(z, w)));
      }
    }
    return sum / (static_cast<double>(na) * static_cast<double>(nb));
  };
  return out;
}

TorusAverage cosine_kernel_average(const Subspace& e0) {
  if (e0.n != 4 || e0.k != 2)
    fail(ErrorCode::DimensionMismatch,
         "cosine_kernel_average: need a 2-plane in R^4");
  const SpherePair lift = sphere_pair_from_plane(e0);
  const double z01 = lift.z(0);
  const double w01 = lift.w(0);
  TorusAverage out;
  out.phi = [z01, w01](double z1, double w1) {
    z1 = clamp_unit(z1);
    w1 = clamp_unit(w1);
    const double c = z1 * z01 + w1 * w01;
    const double rz =
        std::sqrt(std::max(0.0, (1.0 - z1 * z1) * (1.0 - z01 * z01)));
    const double sw =
        std::sqrt(std::max(0.0, (1.0 - w1 * w1) * (1.0 - w01 * w01)));
    // closed-form average over the larger circle, numeric over the smaller
    if (sw <= rz) return 0.5 * circle_kernel_mean(c, sw, rz);
    return 0.5 * circle_kernel_mean(c, rz, sw);
  };
  return out;
}

double pair_m00(const TorusAverage& phi) {
  auto on_z = [&](double z) { return phi_four(phi, z, 0.0); };
  auto on_w = [&](double w) { return phi_four(phi, 1.0, w); };
  const double value = phi_four(phi, 1.0, 0.0);
  double var_z = 0.0, var_w = 0.0;
  const double dz =
      quad::derivative(on_z, 1.0, 1, quad::Side::Backward, 1e-2, 4, &var_z);
  const double d2w =
      quad::derivative(on_w, 0.0, 2, quad::Side::Central, 1e-2, 4, &var_w);
  if (var_z > 1e-4 || var_w > 1e-4)
    fail(ErrorCode::NonSmoothAtLightCone,
         "pair_m00: difference quotients did not converge");
  return -d2w / 12.0 + (value - dz) / 6.0;
}

double pair_m00_edge_form(const TorusAverage& phi) {
  auto g = [&](double x) { return edge_sum(phi, x) / (1.0 + x * x); };
  double var = 0.0;
  const double g2 =
      quad::derivative(g, 0.0, 2, quad::Side::Central, 1e-2, 4, &var);
  if (var > 1e-4)
    fail(ErrorCode::NonSmoothAtLightCone,
         "pair_m00_edge_form: difference quotients did not converge");
  return -g2 / 48.0 - edge_sum_q(phi, 0.0) / 24.0;
}

double pair_mplus(const TorusAverage& phi) {
  SmoothFn psi;
  psi.two_sided = false;
  psi.f = [&phi](double x) {
    x = std::clamp(x, 0.0, 1.0);
    const double rho = std::sqrt(1.0 - x);
    return quad::integrate(
        [&](double t) {
          return phi(rho * std::cos(t), rho * std::sin(t));
        },
        0.0, 2.0 * kPi, 1e-12);
  };
  // evaluations of psi carry the circle-quadrature tolerance as noise
  psi.tail_tolerance = 1e-10;
  return fp_power_integral(psi, Complex(-2.5, 0.0)).finite_part / 8.0;
}

double pair_mminus(const TorusAverage& phi) {
  // boundary terms: odd part of the edge restrictions against the
  // tangent-power measures reached by the two integrations by parts
  SmoothFn odd_edge;
  odd_edge.f = [&phi](double t) {
    const double x = std::tan(t);
    return edge_sum(phi, x) - edge_sum(phi, -x);
  };
  odd_edge.tail_tolerance = 1e-10;
  const double b1 = fp_tan_measure(odd_edge, Complex(-2.5, 0.0)).finite_part;

  // Every evaluation of the second boundary term goes through the one-sided
  // q_radial stencil, which amplifies kernel evaluation noise to ~1e-9; the
  // remainder tail must not be asked to resolve below that floor, or the
  // adaptive refinement never accepts a panel.
  SmoothFn odd_edge_q;
  odd_edge_q.f = [&phi](double t) {
    const double x = std::tan(t);
    return edge_sum_q(phi, x) - edge_sum_q(phi, -x);
  };
  odd_edge_q.tail_tolerance = 1e-7;
  const double b2 = fp_tan_measure(odd_edge_q, Complex(-1.5, 0.0)).finite_part;

  // interior remainder at exponent -1/2: in hyperbolic coordinates
  // z = cosh(s) cos(t), w = cosh(s) sin(t) the weighted area element cancels
  // the power to cosh(s) times the twice-differentiated integrand
  auto sheet = [&phi](double t) {
    const double s_max = sheet_bound(t);
    if (s_max <= 0.0) return 0.0;
    const double ct = std::cos(t), st = std::sin(t);
    const auto f = [&](double s) {
      const double ch = std::cosh(s);
      return ch * q_radial(phi, ch * ct, ch * st, 2);
    };
    // Split at the radius where q_radial switches from the central to the
    // one-sided stencil, so the adaptive rule never brackets that value jump.
    const double m = std::max(std::abs(ct), std::abs(st));
    const double inv = 1.0 / (m * (1.0 + 2.0 * kQRadialWideStep));
    const double s_split =
        (inv > 1.0) ? std::min(std::acosh(inv), s_max) : 0.0;
    double v = 0.0;
    if (s_split > 0.0) v += quad::integrate(f, 0.0, s_split, 1e-7);
    if (s_max > s_split) v += quad::integrate(f, s_split, s_max, 1e-8);
    return v;
  };
  const double t3_plus = 2.0 * (quad::integrate(sheet, 0.0, 0.25 * kPi, 2e-7) +
                                quad::integrate(sheet, 0.25 * kPi, 0.5 * kPi,
                                                2e-7));
  const double t3_minus =
      2.0 * (quad::integrate(sheet, -0.25 * kPi, 0.0, 2e-7) +
             quad::integrate(sheet, 0.5 * kPi, 0.75 * kPi, 2e-7));

  return (-b1 - b2 + t3_plus - t3_minus) / 12.0;
}

MeroScalar pair_deg1(const std::function<double(const Vector&)>& f,
                     const OrbitLabel& orbit, double lambda, int n_angle) {
  if (!f) fail(ErrorCode::InvalidInput, "pair_deg1: empty function");
  if (n_angle < 3) fail(ErrorCode::InvalidInput, "pair_deg1: n_angle >= 3");
  const bool positive = (orbit.a == 1 && orbit.b == 0 && orbit.r == 0);
  const bool negative = (orbit.a == 0 && orbit.b == 1 && orbit.r == 0);
  if (!positive && !negative)
    fail(ErrorCode::InfeasibleLabel,
         "pair_deg1: orbit must be (1,0,0) or (0,1,0)");
  auto torus_integral = [&](double theta) {
    const double ct = std::cos(theta), st = std::sin(theta);
    double sum = 0.0;
    Vector u(4);
    for (int i = 0; i < n_angle; ++i) {
      const double t1 = 2.0 * kPi * i / n_angle;
      const double c1 = std::cos(t1), s1 = std::sin(t1);
      for (int j = 0; j < n_angle; ++j) {
        const double t2 = 2.0 * kPi * j / n_angle;
        u[0] = ct * c1;
        u[1] = ct * s1;
        u[2] = st * std::cos(t2);
        u[3] = st * std::sin(t2);
        sum += f(u);
      }
    }
    const double step = 2.0 * kPi / n_angle;
    return sum * step * step;
  };
  SmoothFn g;
  g.f = [&, positive](double x) {
    x = clamp_unit(x);
    const double theta = 0.5 * std::acos(positive ? x : -x);
    return 0.25 * torus_integral(theta);
  };
  // accumulated roundoff of the n_angle^2-term trapezoid sum is the noise
  // floor of g; the remainder tail must stay above it
  g.tail_tolerance = 1e-9;
  return fp_power_integral(g, Complex(lambda, 0.0));
}

MeroScalar pair_deg1_direction(const Vector& axis, const OrbitLabel& orbit,
                               double lambda) {
  if (axis.size() != 4)
    fail(ErrorCode::DimensionMismatch, "pair_deg1_direction: axis not in R^4");
  const double norm = axis.norm();
  if (norm < 1e-12)
    fail(ErrorCode::InvalidInput, "pair_deg1_direction: zero axis");
  const bool positive = (orbit.a == 1 && orbit.b == 0 && orbit.r == 0);
  const bool negative = (orbit.a == 0 && orbit.b == 1 && orbit.r == 0);
  if (!positive && !negative)
    fail(ErrorCode::InfeasibleLabel,
         "pair_deg1_direction: orbit must be (1,0,0) or (0,1,0)");
  const double rho1 = std::hypot(axis[0], axis[1]) / norm;
  const double rho2 = std::hypot(axis[2], axis[3]) / norm;
  SmoothFn g;
  g.f = [rho1, rho2, positive](double x) {
    x = clamp_unit(x);
    const double theta = 0.5 * std::acos(positive ? x : -x);
    const double amp1 = std::cos(theta) * rho1;
    const double amp2 = std::sin(theta) * rho2;
    // the two inner circle averages of |u . axis| in closed/semi-closed form
    return kPi * kPi * circle_kernel_mean(0.0, amp2, amp1);
  };
  g.tail_tolerance = 1e-11;
  return fp_power_integral(g, Complex(lambda, 0.0));
}

CroftonMeasureSpec CroftonMeasureSpec::open_orbit_deg1(const OrbitLabel& orbit,
                                                       double lambda) {
  const bool ok = orbit.r == 0 && ((orbit.a == 1 && orbit.b == 0) ||
                                   (orbit.a == 0 && orbit.b == 1));
  if (!ok)
    fail(ErrorCode::InfeasibleLabel,
         "open_orbit_deg1: orbit must be (1,0,0) or (0,1,0)");
  CroftonMeasureSpec m;
  m.kind = CroftonKind::OpenOrbitDeg1;
  m.degree = 1;
  m.orbit = orbit;
  m.lambda = lambda;
  return m;
}

CroftonMeasureSpec CroftonMeasureSpec::m00() {
  CroftonMeasureSpec m;
  m.kind = CroftonKind::M00;
  m.degree = 2;
  return m;
}

CroftonMeasureSpec CroftonMeasureSpec::mplus() {
  CroftonMeasureSpec m;
  m.kind = CroftonKind::MPlus;
  m.degree = 2;
  return m;
}

CroftonMeasureSpec CroftonMeasureSpec::mminus() {
  CroftonMeasureSpec m;
  m.kind = CroftonKind::MMinus;
  m.degree = 2;
  return m;
}

CroftonMeasureSpec CroftonMeasureSpec::euclidean_haar() {
  CroftonMeasureSpec m;
  m.kind = CroftonKind::EuclideanHaar;
  m.degree = 2;
  return m;
}

CroftonMeasureSpec CroftonMeasureSpec::complex_haar() {
  CroftonMeasureSpec m;
  m.kind = CroftonKind::ComplexHaar;
  m.degree = 2;
  return m;
}

CroftonMeasureSpec CroftonMeasureSpec::point_mass(const Subspace& plane) {
  CroftonMeasureSpec m;
  m.kind = CroftonKind::PointMass;
  m.degree = plane.k;
  m.atom = plane.basis;
  return m;
}

double klain_from_crofton(const CroftonMeasureSpec& measure,
                          const Subspace& e0) {
  switch (measure.kind) {
    case CroftonKind::OpenOrbitDeg1: {
      if (measure.degree != 1)
        fail(ErrorCode::InvalidInput, "line measure requires degree 1");
      if (e0.n != 4 || e0.k != 3)
        fail(ErrorCode::DimensionMismatch,
             "line-measure pairing needs a hyperplane in R^4");
      Eigen::HouseholderQR<Matrix> qr(e0.basis);
      const Matrix q = qr.householderQ();
      Vector axis = q.col(3);
      return pair_deg1_direction(axis, measure.orbit, measure.lambda)
          .finite_part;
    }
    case CroftonKind::M00:
    case CroftonKind::MPlus:
    case CroftonKind::MMinus: {
      if (measure.degree != 2)
        fail(ErrorCode::InvalidInput, "plane measure requires degree 2");
      if (e0.n != 4 || e0.k != 2)
        fail(ErrorCode::DimensionMismatch,
             "plane-measure pairing needs a 2-plane in R^4");
      const double c2t = cos2theta(QuadSpace(2, 2), e0);
      if (std::abs(c2t) <= kSingularGuard)
        fail(ErrorCode::SingularSupportCollision,
             "cosine function meets the singular support (|cos2theta| too "
             "small)");
      const TorusAverage phi = cosine_kernel_average(e0);
      if (measure.kind == CroftonKind::M00) return pair_m00(phi);
      if (measure.kind == CroftonKind::MPlus) return pair_mplus(phi);
      return pair_mminus(phi);
    }
    case CroftonKind::EuclideanHaar: {
      if (e0.n != 4 || e0.k != 2)
        fail(ErrorCode::DimensionMismatch,
             "Haar pairing needs a 2-plane in R^4");
      const TorusAverage phi = cosine_kernel_average(e0);
      return 0.25 * quad::integrate2d(
                        [&](double z, double w) { return phi(z, w); }, -1.0,
                        1.0, -1.0, 1.0, 1e-8);
    }
    case CroftonKind::ComplexHaar: {
      if (e0.n != 4 || e0.k != 2)
        fail(ErrorCode::DimensionMismatch,
             "Haar pairing needs a 2-plane in R^4");
      const double z02 = sphere_pair_from_plane(e0).z(1);
      auto f = [z02](double t) { return std::abs(z02 + t); };
      const double split = clamp_unit(-z02);
      return 0.25 * (quad::integrate(f, -1.0, split, 1e-12) +
                     quad::integrate(f, split, 1.0, 1e-12));
    }
    case CroftonKind::PointMass: {
      return cosine_between(e0, subspace_from_basis(measure.atom));
    }
  }
  fail(ErrorCode::InvalidInput, "klain_from_crofton: unknown measure kind");
}

double integrate_kappa(const CroftonMeasureSpec& haar, int index) {
  if (index < 0 || index > 2)
    fail(ErrorCode::InvalidInput, "integrate_kappa: index must be 0, 1 or 2");
  if (haar.kind == CroftonKind::ComplexHaar) {
    if (index != 1) return 0.0;  // complex lines never have definite type
    // w-sphere reduction: first coordinate uniform, z-lift pinned
    return 0.5 * quad::integrate(
                     [](double p) {
                       const double c = std::cos(p);
                       return c * c;
                     },
                     -0.5 * kPi, 0.5 * kPi, 1e-12);
  }
  if (haar.kind != CroftonKind::EuclideanHaar)
    fail(ErrorCode::InvalidInput,
         "integrate_kappa: measure must be EuclideanHaar or ComplexHaar");
  if (index == 1) {
    // inside the unit disk; z = sin(f) cos(t), w = sin(f) sin(t) makes the
    // integrand sin(f) cos(f)^2, smooth on the closed rectangle
    return 0.25 * quad::integrate2d(
                      [](double t, double f) {
                        (void)t;
                        const double c = std::cos(f);
                        return std::sin(f) * c * c;
                      },
                      0.0, 2.0 * kPi, 0.0, 0.5 * kPi, 1e-9);
  }
  // outside the disk: one definite quadrant pair each; hyperbolic coordinates
  // z = cosh(s) cos(t), w = cosh(s) sin(t) give the integrand
  // sinh(s)^2 cosh(s) on 0 <= s <= sheet_bound(t)
  auto sheet = [](double t) {
    const double s_max = sheet_bound(t);
    if (s_max <= 0.0) return 0.0;
    return quad::integrate(
        [](double s) {
          const double sh = std::sinh(s);
          return sh * sh * std::cosh(s);
        },
        0.0, s_max, 1e-11);
  };
  return 0.5 * (quad::integrate(sheet, 0.0, 0.25 * kPi, 1e-10) +
                quad::integrate(sheet, 0.25 * kPi, 0.5 * kPi, 1e-10));
}

KlainCoefficientTable solve_klain_coefficients() {
  // torus averages of the two even plane kernels whose Haar pairings are
  // known: the hermitian-angle kernels (1 -+ z1^2)/2 and the constant 1/3
  // (the rotation average of any plane cosine function)
  TorusAverage combined;  // 1/4 of one hermitian kernel + 1/2 of the other
  combined.phi = [](double z, double) { return (3.0 - z * z) / 8.0; };
  TorusAverage constant;
  constant.phi = [](double, double) { return 1.0 / 3.0; };

  const CroftonMeasureSpec haar_c = CroftonMeasureSpec::complex_haar();
  const CroftonMeasureSpec haar_r = CroftonMeasureSpec::euclidean_haar();
  Eigen::Matrix2d system;
  system << integrate_kappa(haar_c, 0) + integrate_kappa(haar_c, 2),
      integrate_kappa(haar_c, 1),
      integrate_kappa(haar_r, 0) + integrate_kappa(haar_r, 2),
      integrate_kappa(haar_r, 1);

  Eigen::Vector2d rhs_m00(pair_m00(combined), pair_m00(constant));
  Eigen::Vector2d rhs_mplus(pair_mplus(combined), pair_mplus(constant));
  const Eigen::Vector2d sol_m00 = system.fullPivLu().solve(rhs_m00);
  const Eigen::Vector2d sol_mplus = system.fullPivLu().solve(rhs_mplus);

  KlainCoefficientTable out;
  out.a = sol_m00(0);
  out.b = sol_m00(1);
  out.a_prime = sol_mplus(0);
  out.b_prime = sol_mplus(1);
  out.ratio = out.b_prime / out.b;
  return out;
}

}  // namespace pseudovol
