#pragma once
// Grassmannian geometry: the measure of non-Euclideanness of a plane
// (cos2theta), the distortion weight of a linear map (psi_g), angles between
// planes, random planes, the two-sphere-pair model of 2-planes in R^4, the
// Kaehler angle, and projection volumes of convex bodies.

#include <cstdint>

#include "pseudovol/convex.hpp"
#include "pseudovol/core.hpp"
#include "pseudovol/quadform.hpp"
#include "pseudovol/subspace.hpp"

namespace pseudovol {

// A 2-plane in R^4 represented by a pair of unit 3-vectors; the map to planes
// is two-to-one, identifying (z, w) with (-z, -w).
struct SpherePair {
  Eigen::Vector3d z;
  Eigen::Vector3d w;
};

// Validates |z| = |w| = 1 (renormalizing away roundoff).
SpherePair make_sphere_pair(const Eigen::Vector3d& z, const Eigen::Vector3d& w);

// det(B^T gramQ B) for an orthonormal basis B of E; lies in [-1, 1].
// Equals +1 on positive-definite planes, -1 on split planes of a neutral
// space, 0 on degenerate planes.
double cos2theta(const QuadSpace& space, const Subspace& E);

// 1 / det(B^T g^T g B): the inverse squared Jacobian of g restricted to E.
// Fails with SingularMap if g is not invertible.
double psi_g(const QuadSpace& space, const Matrix& g, const Subspace& E);

// |det(B_E^T B_F)| for orthonormal bases: the cosine of the angle between two
// planes of equal dimension. Symmetric, in [0, 1].
double cosine_between(const Subspace& E, const Subspace& F);

// Orthonormalized Gaussian matrix: the rotation-invariant distribution on the
// Grassmannian of k-planes in R^n.
Subspace random_plane(int n, int k, std::uint64_t seed);

// The 2-plane determined by a sphere pair: the kernel of the wedge with the
// decomposable 2-form assembled from (z, w).
Subspace plane_from_sphere_pair(const SpherePair& pair);

// One of the two lifts of a 2-plane in R^4 (the other is its negation).
SpherePair sphere_pair_from_plane(const Subspace& E);

// The deck transformation and the extra symmetry of the neutral 4-space on
// lifts: (z1,z2,z3; w1,w2,w3) -> (-z1,-z2,z3; w1,-w2,-w3).
SpherePair deck_transform(const SpherePair& pair);
SpherePair j_action(const SpherePair& pair);

// Squared cosine of the Kaehler angle of a 2-plane in R^4 = C^2:
// x13^2 + x24^2 + 2 x12 x34 + 2 x14 x23 in Pluecker coordinates of an
// orthonormal basis. Equals 1 exactly on complex lines.
double kaehler_angle_sq(const Subspace& E);

// Volume of the image of a vertex-list body under orthogonal projection onto
// E: width for lines, hull area for 2-planes, hull volume for 3-planes.
double projection_volume(const Subspace& E, const ConvexBody& body);

}  // namespace pseudovol
