#include "pseudovol/grassmann.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <random>

namespace pseudovol {

SpherePair make_sphere_pair(const Eigen::Vector3d& z,
                            const Eigen::Vector3d& w) {
  const double nz = z.norm();
  const double nw = w.norm();
  if (std::abs(nz - 1.0) > 1e-6 || std::abs(nw - 1.0) > 1e-6)
    fail(ErrorCode::InvalidInput, "sphere pair components must be unit vectors");
  return SpherePair{z / nz, w / nw};
}

double cos2theta(const QuadSpace& space, const Subspace& E) {
  if (E.n != space.n())
    fail(ErrorCode::DimensionMismatch,
         "plane and quadratic space have different ambient dimensions");
  const Matrix m = E.basis.transpose() * space.gramQ() * E.basis;
  return m.determinant();
}

double psi_g(const QuadSpace& space, const Matrix& g, const Subspace& E) {
  if (g.rows() != space.n() || g.cols() != space.n() || E.n != space.n())
    fail(ErrorCode::DimensionMismatch, "psi_g: inconsistent dimensions");
  Eigen::FullPivLU<Matrix> lu(g);
  lu.setThreshold(1e-12);
  if (!lu.isInvertible())
    fail(ErrorCode::SingularMap, "psi_g requires an invertible map");
  const Matrix gb = g * E.basis;
  return 1.0 / (gb.transpose() * gb).determinant();
}

double cosine_between(const Subspace& E, const Subspace& F) {
  if (E.n != F.n || E.k != F.k)
    fail(ErrorCode::DimensionMismatch,
         "cosine_between requires planes of equal dimension in the same space");
  return std::abs((E.basis.transpose() * F.basis).determinant());
}

Subspace random_plane(int n, int k, std::uint64_t seed) {
  if (k < 1 || k > n)
    fail(ErrorCode::WrongDimension, "random_plane requires 1 <= k <= n");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix m(n, k);
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < n; ++i) m(i, j) = gauss(rng);
  return make_subspace(m);
}

namespace {

struct Pluecker {
  double x12, x13, x14, x23, x24, x34;
};

Pluecker pluecker_from_pair(const SpherePair& pair) {
  const auto& z = pair.z;
  const auto& w = pair.w;
  Pluecker x;
  x.x12 = 0.5 * (w[0] + z[0]);
  x.x34 = 0.5 * (w[0] - z[0]);
  x.x13 = -0.5 * (w[1] + z[1]);
  x.x24 = 0.5 * (w[1] - z[1]);
  x.x14 = 0.5 * (w[2] + z[2]);
  x.x23 = 0.5 * (w[2] - z[2]);
  return x;
}

Pluecker pluecker_from_basis(const Matrix& b) {
  const auto minor = [&](int i, int j) {
    return b(i, 0) * b(j, 1) - b(j, 0) * b(i, 1);
  };
  Pluecker x;
  x.x12 = minor(0, 1);
  x.x13 = minor(0, 2);
  x.x14 = minor(0, 3);
  x.x23 = minor(1, 2);
  x.x24 = minor(1, 3);
  x.x34 = minor(2, 3);
  return x;
}

}  // namespace

Subspace plane_from_sphere_pair(const SpherePair& pair) {
  const SpherePair p = make_sphere_pair(pair.z, pair.w);
  const Pluecker x = pluecker_from_pair(p);
  // rows: the four independent components of v ^ tau
  Matrix m(4, 4);
  m << x.x23, -x.x13, x.x12, 0.0,      // (1,2,3)
       x.x24, -x.x14, 0.0,   x.x12,    // (1,2,4)
       x.x34, 0.0,   -x.x14, x.x13,    // (1,3,4)
       0.0,   x.x34, -x.x24, x.x23;    // (2,3,4)
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullV);
  // tau is simple and unit, so the kernel is exactly 2-dimensional; take the
  // two right-singular vectors of the (numerically zero) smallest values.
  Matrix basis = svd.matrixV().rightCols(2);
  return make_subspace(basis);
}

SpherePair sphere_pair_from_plane(const Subspace& E) {
  if (E.n != 4 || E.k != 2)
    fail(ErrorCode::WrongDimension,
         "sphere pair lifts exist only for 2-planes in R^4");
  const Pluecker x = pluecker_from_basis(E.basis);
  Eigen::Vector3d z(x.x12 - x.x34, -(x.x13 + x.x24), x.x14 - x.x23);
  Eigen::Vector3d w(x.x12 + x.x34, x.x24 - x.x13, x.x14 + x.x23);
  return make_sphere_pair(z, w);
}

SpherePair deck_transform(const SpherePair& pair) {
  return SpherePair{-pair.z, -pair.w};
}

SpherePair j_action(const SpherePair& pair) {
  Eigen::Vector3d z(-pair.z[0], -pair.z[1], pair.z[2]);
  Eigen::Vector3d w(pair.w[0], -pair.w[1], -pair.w[2]);
  return SpherePair{z, w};
}

double kaehler_angle_sq(const Subspace& E) {
  if (E.n != 4 || E.k != 2)
    fail(ErrorCode::WrongDimension,
         "the Kaehler angle is defined for 2-planes in R^4");
  const Pluecker x = pluecker_from_basis(E.basis);
  return x.x13 * x.x13 + x.x24 * x.x24 + 2.0 * x.x12 * x.x34 +
         2.0 * x.x14 * x.x23;
}

double projection_volume(const Subspace& E, const ConvexBody& body) {
  if (body.mode != ConvexBody::Mode::VertexList)
    fail(ErrorCode::InvalidInput,
         "projection_volume requires a vertex-list body");
  if (E.n != body.n)
    fail(ErrorCode::DimensionMismatch,
         "plane and body have different ambient dimensions");
  if (E.k >= 4)
    fail(ErrorCode::UnsupportedDimension,
         "projection volumes implemented for target dimension <= 3");
  if (body.vertices.empty())
    fail(ErrorCode::DegenerateBody, "projection_volume: body has no vertices");
  if (E.k == 1) {
    double lo = 1e300, hi = -1e300;
    for (const Vector& v : body.vertices) {
      const double t = E.basis.col(0).dot(v);
      lo = std::min(lo, t);
      hi = std::max(hi, t);
    }
    return hi - lo;
  }
  if (E.k == 2) {
    std::vector<Eigen::Vector2d> pts;
    pts.reserve(body.vertices.size());
    for (const Vector& v : body.vertices)
      pts.emplace_back(E.basis.col(0).dot(v), E.basis.col(1).dot(v));
    return hull_area_2d(pts);
  }
  std::vector<Eigen::Vector3d> pts;
  pts.reserve(body.vertices.size());
  for (const Vector& v : body.vertices)
    pts.emplace_back(E.basis.col(0).dot(v), E.basis.col(1).dot(v),
                     E.basis.col(2).dot(v));
  return hull_volume_3d(pts);
}

}  // namespace pseudovol
