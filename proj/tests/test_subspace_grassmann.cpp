#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "doctest.h"
#include "pseudovol/convex.hpp"
#include "pseudovol/grassmann.hpp"
#include "pseudovol/quadform.hpp"
#include "pseudovol/subspace.hpp"

using namespace pseudovol;

namespace {

Vector unit(int n, int i) {
  Vector v = Vector::Zero(n);
  v[i] = 1.0;
  return v;
}

Vector vec4(double a, double b, double c, double d) {
  Vector v(4);
  v << a, b, c, d;
  return v;
}

Eigen::Vector3d random_unit3(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Eigen::Vector3d v(g(rng), g(rng), g(rng));
  while (v.norm() < 1e-3) v = Eigen::Vector3d(g(rng), g(rng), g(rng));
  return v.normalized();
}

// unit square with vertices in the first two coordinates of R^4
ConvexBody square12() {
  return body_from_vertices(4, {vec4(0, 0, 0, 0), vec4(1, 0, 0, 0),
                                vec4(0, 1, 0, 0), vec4(1, 1, 0, 0)});
}

}  // namespace

TEST_CASE("subspace construction canonicalizes and validates") {
  Matrix m(3, 2);
  m << 1, 1, 0, 1, 0, 0;
  const Subspace e = make_subspace(m);
  CHECK((e.basis.transpose() * e.basis - Matrix::Identity(2, 2))
            .cwiseAbs()
            .maxCoeff() < 1e-12);
  CHECK(subspace_equal(e, span_of({unit(3, 0), unit(3, 1)})));
  Matrix bad(3, 2);
  bad << 1, 2, 1, 2, 0, 0;
  CHECK_THROWS_AS(make_subspace(bad), Error);
}

TEST_CASE("plane defect against the indefinite form: pinned values") {
  const QuadSpace s22(2, 2);
  CHECK(cos2theta(s22, span_of({unit(4, 0), unit(4, 1)})) ==
        doctest::Approx(1.0));
  CHECK(cos2theta(s22, span_of({unit(4, 0), unit(4, 2)})) ==
        doctest::Approx(-1.0));
  CHECK(cos2theta(s22, span_of({vec4(1, 0, 1, 0), unit(4, 1)})) ==
        doctest::Approx(0.0).epsilon(1e-14));
  // bounded in [-1, 1] on random planes
  for (std::uint64_t s = 0; s < 50; ++s) {
    const double c = cos2theta(s22, random_plane(4, 2, 900 + s));
    CHECK(c >= -1.0 - 1e-12);
    CHECK(c <= 1.0 + 1e-12);
  }
}

TEST_CASE("distortion weight of rotations is exactly one") {
  for (int n : {2, 3, 4, 5}) {
    const QuadSpace euclid(n, 0);
    int count = 0;
    for (std::uint64_t s = 0; s < 25; ++s) {
      const Matrix g = random_pseudo_orthogonal(euclid, 0.7, 40 + s);
      for (int k = 1; k <= n - 1; ++k) {
        const Subspace e = random_plane(n, k, 700 * s + k);
        CHECK(psi_g(euclid, g, e) == doctest::Approx(1.0).epsilon(1e-12));
        ++count;
      }
    }
    CHECK(count >= 25);
  }
}

TEST_CASE("distortion weight of the basic boost") {
  const QuadSpace s11(1, 1);
  for (double alpha : {0.3, 0.9, 1.7}) {
    const Matrix g = boost_1_1(alpha);
    const double psi = psi_g(s11, g, span_of({unit(2, 0)}));
    CHECK(psi == doctest::Approx(1.0 / std::cosh(2 * alpha)).epsilon(1e-12));
  }
  CHECK_THROWS_AS(psi_g(s11, Matrix::Zero(2, 2), span_of({unit(2, 0)})),
                  Error);
  try {
    psi_g(s11, Matrix::Zero(2, 2), span_of({unit(2, 0)}));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SingularMap);
  }
}

TEST_CASE("covariance of the plane defect under the group") {
  const QuadSpace s22(2, 2);
  int accepted = 0;
  std::uint64_t seed = 5000;
  while (accepted < 100) {
    const Subspace e = random_plane(4, 2, seed);
    const double c = cos2theta(s22, e);
    ++seed;
    if (std::abs(c) <= 0.05) continue;  // stay away from degenerate planes
    const Matrix g = random_pseudo_orthogonal(s22, 0.5, seed * 31 + 5);
    const Subspace ge = make_subspace(g * e.basis);
    CHECK(std::abs(psi_g(s22, g, e) * c - cos2theta(s22, ge)) < 1e-8);
    ++accepted;
  }
}

TEST_CASE("cosine of the angle between planes") {
  const Subspace e1 = span_of({unit(2, 0)});
  CHECK(cosine_between(e1, e1) == doctest::Approx(1.0));
  CHECK(cosine_between(e1, span_of({unit(2, 1)})) == doctest::Approx(0.0));
  Vector diag(2);
  diag << 1, 1;
  CHECK(cosine_between(e1, span_of({diag})) ==
        doctest::Approx(1.0 / std::sqrt(2.0)));
  // symmetry
  const Subspace a = random_plane(4, 2, 11);
  const Subspace b = random_plane(4, 2, 12);
  CHECK(cosine_between(a, b) == doctest::Approx(cosine_between(b, a)));
  CHECK_THROWS_AS(cosine_between(a, random_plane(4, 1, 13)), Error);
}

TEST_CASE("random planes are orthonormal and rotation-invariant in the mean") {
  const Subspace e = random_plane(4, 2, 1);
  CHECK((e.basis.transpose() * e.basis - Matrix::Identity(2, 2))
            .cwiseAbs()
            .maxCoeff() < 1e-12);
  CHECK(subspace_equal(random_plane(3, 3, 5),
                       span_of({unit(3, 0), unit(3, 1), unit(3, 2)})));
  // mean squared cosine against a fixed 2-plane in Gr_2(R^4) is 1/6
  const Subspace ref = span_of({unit(4, 0), unit(4, 1)});
  const int n = 20000;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const double c = cosine_between(random_plane(4, 2, 10000 + i), ref);
    sum += c * c;
  }
  const double mean = sum / n;
  // Var = 7/180 per sample; allow five standard errors
  const double tol5 = 5.0 * std::sqrt(7.0 / 180.0 / n);
  CHECK(std::abs(mean - 1.0 / 6.0) < tol5);
}

TEST_CASE("sphere pair to plane: pinned planes") {
  const auto e12 = plane_from_sphere_pair(
      make_sphere_pair({1, 0, 0}, {1, 0, 0}));
  CHECK(subspace_equal(e12, span_of({unit(4, 0), unit(4, 1)})));
  const auto e13 = plane_from_sphere_pair(
      make_sphere_pair({0, -1, 0}, {0, -1, 0}));
  CHECK(subspace_equal(e13, span_of({unit(4, 0), unit(4, 2)})));
  const auto e34 = plane_from_sphere_pair(
      make_sphere_pair({-1, 0, 0}, {1, 0, 0}));
  CHECK(subspace_equal(e34, span_of({unit(4, 2), unit(4, 3)})));
}

TEST_CASE("sphere pair lift identities on random pairs") {
  const QuadSpace s22(2, 2);
  std::mt19937_64 rng(20260825);
  for (int i = 0; i < 100; ++i) {
    const SpherePair pair{random_unit3(rng), random_unit3(rng)};
    const Subspace e = plane_from_sphere_pair(pair);
    CHECK(e.n == 4);
    CHECK(e.k == 2);
    // defect in lift coordinates
    CHECK(std::abs(cos2theta(s22, e) -
                   (pair.z[0] * pair.z[0] + pair.w[0] * pair.w[0] - 1.0)) <
          1e-10);
    // evenness under the deck transformation
    CHECK(subspace_equal(plane_from_sphere_pair(deck_transform(pair)), e,
                         1e-9));
    // round trip: the recovered lift is the same pair up to the deck sign
    const SpherePair back = sphere_pair_from_plane(e);
    const double direct = (back.z - pair.z).norm() + (back.w - pair.w).norm();
    const double flipped =
        (back.z + pair.z).norm() + (back.w + pair.w).norm();
    CHECK(std::min(direct, flipped) < 1e-9);
  }
}

TEST_CASE("lift formula for the angle between planes") {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 100; ++i) {
    const SpherePair pa{random_unit3(rng), random_unit3(rng)};
    const SpherePair pb{random_unit3(rng), random_unit3(rng)};
    const double lhs = cosine_between(plane_from_sphere_pair(pa),
                                      plane_from_sphere_pair(pb));
    const double rhs =
        0.5 * std::abs(pa.z.dot(pb.z) + pa.w.dot(pb.w));
    CHECK(std::abs(lhs - rhs) < 1e-10);
  }
}

TEST_CASE("squared Kaehler angle") {
  CHECK(kaehler_angle_sq(span_of({unit(4, 0), unit(4, 2)})) ==
        doctest::Approx(1.0));
  CHECK(kaehler_angle_sq(span_of({unit(4, 0), unit(4, 1)})) ==
        doctest::Approx(0.0));
  // any plane with z = (0, 1, 0) is a complex line
  std::mt19937_64 rng(31);
  for (int i = 0; i < 20; ++i) {
    const SpherePair pair{Eigen::Vector3d(0, 1, 0), random_unit3(rng)};
    CHECK(kaehler_angle_sq(plane_from_sphere_pair(pair)) ==
          doctest::Approx(1.0).epsilon(1e-10));
  }
  // round trip: the angle is the square of the second lift coordinate
  for (int i = 0; i < 50; ++i) {
    const Subspace e = random_plane(4, 2, 4000 + i);
    const SpherePair lift = sphere_pair_from_plane(e);
    CHECK(std::abs(kaehler_angle_sq(e) - lift.z[1] * lift.z[1]) < 1e-10);
  }
}

TEST_CASE("extra symmetry of the split 4-space on lifts") {
  std::mt19937_64 rng(99);
  const QuadSpace s22(2, 2);
  for (int i = 0; i < 25; ++i) {
    const SpherePair pair{random_unit3(rng), random_unit3(rng)};
    const SpherePair jj = j_action(j_action(pair));
    CHECK((jj.z - pair.z).norm() + (jj.w - pair.w).norm() < 1e-15);
    // the defect is preserved (only signs of z1^2, w1^2 components change)
    const double before = cos2theta(s22, plane_from_sphere_pair(pair));
    const double after = cos2theta(s22, plane_from_sphere_pair(j_action(pair)));
    CHECK(std::abs(before - after) < 1e-10);
  }
  // the symmetry exchanges the positive-definite and negative-definite planes
  const SpherePair lift12 = make_sphere_pair({1, 0, 0}, {1, 0, 0});
  CHECK(subspace_equal(plane_from_sphere_pair(j_action(lift12)),
                       span_of({unit(4, 2), unit(4, 3)})));
}

TEST_CASE("projection volumes of boxes") {
  std::vector<Vector> cube3;
  for (int m = 0; m < 8; ++m) {
    Vector v(3);
    v << (m & 1), ((m >> 1) & 1), ((m >> 2) & 1);
    cube3.push_back(v);
  }
  const ConvexBody k3 = body_from_vertices(3, cube3);
  CHECK(projection_volume(span_of({unit(3, 0)}), k3) == doctest::Approx(1.0));
  Vector d(3);
  d << 1, 1, 0;
  CHECK(projection_volume(make_subspace(d), k3) ==
        doctest::Approx(std::sqrt(2.0)));
  CHECK(projection_volume(span_of({unit(3, 0), unit(3, 1)}), k3) ==
        doctest::Approx(1.0));
  CHECK(projection_volume(span_of({unit(3, 0), unit(3, 1), unit(3, 2)}), k3) ==
        doctest::Approx(1.0));

  std::vector<Vector> cube4;
  for (int m = 0; m < 16; ++m)
    cube4.push_back(
        vec4(m & 1, (m >> 1) & 1, (m >> 2) & 1, (m >> 3) & 1));
  const ConvexBody k4 = body_from_vertices(4, cube4);
  CHECK(projection_volume(span_of({unit(4, 0)}), k4) == doctest::Approx(1.0));
  CHECK_THROWS_AS(
      projection_volume(span_of({unit(4, 0), unit(4, 1), unit(4, 2),
                                 unit(4, 3)}),
                        k4),
      Error);
}

TEST_CASE("shadow of the coordinate square in lift coordinates") {
  const ConvexBody sq = square12();
  std::mt19937_64 rng(123);
  for (int i = 0; i < 60; ++i) {
    const SpherePair pair{random_unit3(rng), random_unit3(rng)};
    const Subspace e = plane_from_sphere_pair(pair);
    const double area = projection_volume(e, sq);
    CHECK(std::abs(area - 0.5 * std::abs(pair.z[0] + pair.w[0])) < 1e-10);
  }
}

TEST_CASE("projection volume is rotation covariant") {
  std::mt19937_64 rng(55);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<Vector> pts;
  for (int i = 0; i < 12; ++i) {
    Vector v(4);
    v << u(rng), u(rng), u(rng), u(rng);
    pts.push_back(v);
  }
  const ConvexBody body = body_from_vertices(4, pts);
  const QuadSpace euclid4(4, 0);
  for (std::uint64_t s = 0; s < 10; ++s) {
    const Matrix rot = random_pseudo_orthogonal(euclid4, 0.8, 600 + s);
    for (int k : {1, 2, 3}) {
      const Subspace e = random_plane(4, k, 800 + 10 * s + k);
      const double before = projection_volume(e, body);
      const double after =
          projection_volume(make_subspace(rot * e.basis), transform(rot, body));
      CHECK(std::abs(before - after) < 1e-10);
    }
  }
}
