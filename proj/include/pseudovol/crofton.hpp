#pragma once
// Invariant (generalized) line and plane measures of the neutral 4-space and
// their pairings: torus averages of plane functions in the two-sphere-pair
// model, finite-part pairings against the light-cone-supported measures, Haar
// averages of the section values, and the linear solve expressing the
// distilled valuations in the kappa basis.

#include <functional>

#include "pseudovol/core.hpp"
#include "pseudovol/quadform.hpp"
#include "pseudovol/regularize.hpp"
#include "pseudovol/subspace.hpp"

namespace pseudovol {

// Trapezoid points per stabilizer circle in the generic torus average.
inline constexpr int kTorusOrder = 256;

// Evaluation points whose |cos2theta| falls at or below this are rejected by
// klain_from_crofton for the measures carried by the degenerate orbit.
inline constexpr double kSingularGuard = 0.05;

// The average of a plane function over the two stabilizer circles, as a
// function of the first coordinates (z1, w1) of the sphere-pair lift.
// Descends from the torus, so it is even under (z1,w1) -> (-z1,-w1).
struct TorusAverage {
  std::function<double(double, double)> phi;
  int n_tor = kTorusOrder;
  double operator()(double z1, double w1) const { return phi(z1, w1); }
};

// Mean over one period of t -> |u + radius*cos t| (closed form, C^1 in u).
double circle_abs_average(double u, double radius);

// Generic torus average of a bounded continuous plane function by n_tor-point
// trapezoidal quadrature in each stabilizer angle.
TorusAverage average_over_torus(std::function<double(const Subspace&)> f,
                                int n_tor = kTorusOrder);

// Torus average of E -> cosine_between(e0, E): semi-analytic fast path that
// performs one circle average in closed form and the other by piecewise
// Gauss-Legendre split at the kink curves of the absolute value.
TorusAverage cosine_kernel_average(const Subspace& e0);

// Pairing with the second-degree measure concentrated at the four light-cone
// points of the square: symmetrizes Phi over the quarter-turn and evaluates
// -(1/12) d^2/dw^2 + (1/6)(1 - d/dz) of the symmetrization at (1,0).
double pair_m00(const TorusAverage& phi);

// Equivalent evaluation of the same pairing through the boundary restriction
// (kept as an independent cross-check of pair_m00).
double pair_m00_edge_form(const TorusAverage& phi);

// Pairing with the measure obtained by radial finite-part continuation at
// exponent -5/2 of the one-sheet family: (1/8) FP of the circle averages.
double pair_mplus(const TorusAverage& phi);

// Pairing with the difference-of-sheets continuation at exponent -5/2:
// two integrations by parts in the radial direction, boundary terms through
// the odd tangent-power measure, interior remainder at exponent -1/2.
double pair_mminus(const TorusAverage& phi);

// Finite-part pairing of a line function with the open-orbit line measures
// |cos2theta|^lambda restricted to the positive (1,0) or negative (0,1)
// lines. `f` receives a Euclidean-unit direction vector and must be even.
MeroScalar pair_deg1(const std::function<double(const Vector&)>& f,
                     const OrbitLabel& orbit, double lambda,
                     int n_angle = 64);

// Fast path of pair_deg1 for f(u) = |u . axis| (the hyperplane cosine).
MeroScalar pair_deg1_direction(const Vector& axis, const OrbitLabel& orbit,
                               double lambda);

enum class CroftonKind {
  OpenOrbitDeg1,  // |cos2theta|^lambda on an open orbit of lines
  M00,            // light-cone point measure (degree 2)
  MPlus,          // one-sheet radial continuation (degree 2)
  MMinus,         // sheet-difference continuation (degree 2)
  EuclideanHaar,  // rotation-invariant probability measure on 2-planes
  ComplexHaar,    // probability measure on the complex lines
  PointMass,      // Dirac mass at a single plane
};

struct CroftonMeasureSpec {
  CroftonKind kind = CroftonKind::EuclideanHaar;
  int degree = 2;          // dimension k of the planes the measure lives on
  OrbitLabel orbit{1, 0};  // OpenOrbitDeg1 only: (1,0,0) or (0,1,0)
  double lambda = 0.0;     // OpenOrbitDeg1 only
  Matrix atom;             // PointMass only: orthonormal basis of the plane

  static CroftonMeasureSpec open_orbit_deg1(const OrbitLabel& orbit,
                                            double lambda);
  static CroftonMeasureSpec m00();
  static CroftonMeasureSpec mplus();
  static CroftonMeasureSpec mminus();
  static CroftonMeasureSpec euclidean_haar();
  static CroftonMeasureSpec complex_haar();
  static CroftonMeasureSpec point_mass(const Subspace& plane);
};

// Value at e0 of the section generated by the measure: the pairing of the
// measure with the cosine function of e0. e0 must have the complementary
// dimension for line measures (a hyperplane) and dimension 2 for the plane
// measures. Fails with SingularSupportCollision when e0's cosine function
// meets the singular support of a degenerate-orbit measure.
double klain_from_crofton(const CroftonMeasureSpec& measure,
                          const Subspace& e0);

// Haar average (EuclideanHaar or ComplexHaar) of the kappa_index section
// value over the 2-planes of the neutral 4-space.
double integrate_kappa(const CroftonMeasureSpec& haar, int index);

struct KlainCoefficientTable {
  double a = 0.0;        // kappa_0 + kappa_2 coefficient of the point measure
  double b = 0.0;        // kappa_1 coefficient of the point measure
  double a_prime = 0.0;  // kappa_0 + kappa_2 coefficient of the + measure
  double b_prime = 0.0;  // kappa_1 coefficient of the + measure
  double ratio = 0.0;    // b_prime / b
};

// Expresses the sections of the M00 and MPlus valuations in the kappa basis
// by solving the 2x2 Haar-average systems.
KlainCoefficientTable solve_klain_coefficients();

}  // namespace pseudovol
