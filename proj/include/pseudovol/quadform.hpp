#pragma once

// Linear algebra of the diagonal quadratic form of signature (p,q) together
// with the standard Euclidean form on the same coordinates.

#include <cstdint>
#include <vector>

#include "pseudovol/core.hpp"
#include "pseudovol/subspace.hpp"

namespace pseudovol {

struct QuadSpace {
  int p = 0;
  int q = 0;

  QuadSpace() = default;
  QuadSpace(int p_, int q_) : p(p_), q(q_) {
    if (p < 0 || q < 0 || p + q < 1)
      fail(ErrorCode::WrongDimension, "QuadSpace requires p,q >= 0, p+q >= 1");
  }

  int n() const { return p + q; }

  // diag(+1 x p, -1 x q)
  Matrix gramQ() const {
    Vector d(n());
    for (int i = 0; i < n(); ++i) d[i] = (i < p) ? 1.0 : -1.0;
    return d.asDiagonal();
  }
  Matrix gramP() const { return Matrix::Identity(n(), n()); }
};

struct OrbitLabel {
  int a = 0;  // positive inertia of the restricted form
  int b = 0;  // negative inertia
  int r = 0;  // radical (null) dimension
  // set when an eigenvalue of the restricted form sits suspiciously close to
  // the zero-classification threshold; excluded from equality
  bool near_threshold_warning = false;

  int k() const { return a + b + r; }
  bool operator==(const OrbitLabel& o) const {
    return a == o.a && b == o.b && r == o.r;
  }
  bool operator!=(const OrbitLabel& o) const { return !(*this == o); }
};

// True when (a,b,r) can occur for a k-plane in the (p,q) space.
bool label_feasible(const QuadSpace& space, const OrbitLabel& label);

double q_inner(const QuadSpace& space, const Vector& u, const Vector& v);

OrbitLabel signature_of_restriction(const QuadSpace& space, const Subspace& e);

Subspace q_complement(const QuadSpace& space, const Subspace& e);

// Basis v_1..v_k with q_inner(v_i, v_j) = +/- delta_ij, positives first.
std::vector<Vector> q_orthonormal_basis(const QuadSpace& space,
                                        const Subspace& e);

// For split spaces (n = 2r) and a totally isotropic r-plane E, returns the
// Euclidean complement, which is again isotropic and transverse to E.
Subspace isotropic_complement(const QuadSpace& space, const Subspace& e);

// Standard representative plane realizing the label (a,b,r).
Subspace constructive_plane(const QuadSpace& space, const OrbitLabel& label);

// exp(A) for a seeded random A in the Lie algebra (A^T gramQ + gramQ A = 0)
// with generator entries bounded by `scale`; lies in the identity component.
Matrix random_pseudo_orthogonal(const QuadSpace& space, double scale,
                                std::uint64_t seed);

// Closed-form hyperbolic rotation of the (1,1) space.
Matrix boost_1_1(double alpha);

// Scaling-and-squaring matrix exponential (shared with tests/benchmarks).
Matrix matrix_exp(const Matrix& a);

}  // namespace pseudovol
