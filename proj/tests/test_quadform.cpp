#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "doctest.h"
#include "pseudovol/quadform.hpp"
#include "pseudovol/subspace.hpp"

using namespace pseudovol;

namespace {

Vector unit(int n, int i) {
  Vector v = Vector::Zero(n);
  v[i] = 1.0;
  return v;
}

Vector vec2(double a, double b) {
  Vector v(2);
  v << a, b;
  return v;
}

Vector vec4(double a, double b, double c, double d) {
  Vector v(4);
  v << a, b, c, d;
  return v;
}

}  // namespace

TEST_CASE("indefinite inner product on coordinate vectors") {
  const QuadSpace s22(2, 2);
  CHECK(q_inner(s22, unit(4, 0), unit(4, 0)) == doctest::Approx(1.0));
  CHECK(q_inner(s22, vec4(1, 0, 1, 0), vec4(1, 0, 1, 0)) ==
        doctest::Approx(0.0));
  const QuadSpace s11(1, 1);
  CHECK(q_inner(s11, vec2(2, 1), vec2(2, 1)) == doctest::Approx(3.0));
  // symmetry
  CHECK(q_inner(s22, vec4(1, 2, 3, 4), vec4(4, 3, 2, 1)) ==
        q_inner(s22, vec4(4, 3, 2, 1), vec4(1, 2, 3, 4)));
  CHECK_THROWS_AS(q_inner(s22, vec2(1, 0), unit(4, 0)), Error);
}

TEST_CASE("signature of the restricted form") {
  const QuadSpace s22(2, 2);
  const OrbitLabel l1 = signature_of_restriction(s22, span_of({unit(4, 0)}));
  CHECK(l1 == OrbitLabel{1, 0, 0});
  const OrbitLabel l2 =
      signature_of_restriction(s22, span_of({vec4(1, 0, 1, 0)}));
  CHECK(l2 == OrbitLabel{0, 0, 1});
  const OrbitLabel l3 =
      signature_of_restriction(s22, span_of({vec4(1, 0, 1, 0), unit(4, 1)}));
  CHECK(l3 == OrbitLabel{1, 0, 1});
  CHECK(l3.k() == 2);
}

TEST_CASE("near-threshold eigenvalues raise the warning flag") {
  const QuadSpace s22(2, 2);
  // line u = (cos t, 0, sin t, 0) restricts to cos(2t); choose cos(2t) near
  // the 1e-9 zero threshold from both sides
  auto tilted_line = [&](double q_value) {
    const double t = 0.5 * std::acos(q_value);
    return span_of({vec4(std::cos(t), 0, std::sin(t), 0)});
  };
  const OrbitLabel above = signature_of_restriction(s22, tilted_line(1e-8));
  CHECK(above == OrbitLabel{1, 0, 0});
  CHECK(above.near_threshold_warning);
  const OrbitLabel below = signature_of_restriction(s22, tilted_line(1e-10));
  CHECK(below == OrbitLabel{0, 0, 1});
  CHECK(below.near_threshold_warning);
  const OrbitLabel clean = signature_of_restriction(s22, tilted_line(0.5));
  CHECK_FALSE(clean.near_threshold_warning);
}

TEST_CASE("Q-orthogonal complement: pinned examples") {
  const QuadSpace s22(2, 2);
  CHECK(subspace_equal(q_complement(s22, span_of({unit(4, 0)})),
                       span_of({unit(4, 1), unit(4, 2), unit(4, 3)})));
  const QuadSpace s11(1, 1);
  CHECK(subspace_equal(q_complement(s11, span_of({vec2(1, 1)})),
                       span_of({vec2(1, 1)})));
  CHECK(subspace_equal(q_complement(s22, span_of({unit(4, 0), unit(4, 2)})),
                       span_of({unit(4, 1), unit(4, 3)})));
}

TEST_CASE("Q-orthogonal complement: involution and dimension count") {
  const std::vector<QuadSpace> spaces = {QuadSpace(1, 1), QuadSpace(2, 1),
                                         QuadSpace(2, 2), QuadSpace(3, 2)};
  std::uint64_t seed = 100;
  for (const QuadSpace& s : spaces) {
    for (int k = 1; k < s.n(); ++k) {
      // generic plane plus a degenerate one realizing a nontrivial radical
      std::vector<Subspace> samples;
      {
        Matrix m(s.n(), k);
        std::mt19937_64 rng(seed++);
        std::normal_distribution<double> g;
        for (int j = 0; j < k; ++j)
          for (int i = 0; i < s.n(); ++i) m(i, j) = g(rng);
        samples.push_back(make_subspace(m));
      }
      if (k <= std::min(s.p, s.q)) {
        OrbitLabel lab;
        lab.a = 0;
        lab.b = 0;
        lab.r = k;
        samples.push_back(constructive_plane(s, lab));
      }
      for (const Subspace& e : samples) {
        const Subspace c = q_complement(s, e);
        CHECK(c.k == s.n() - e.k);
        CHECK(subspace_equal(q_complement(s, c), e, 1e-10));
        // complement really is Q-orthogonal to e
        const Matrix cross = e.basis.transpose() * s.gramQ() * c.basis;
        CHECK(cross.cwiseAbs().maxCoeff() < 1e-10);
      }
    }
  }
}

TEST_CASE("Q-orthonormal basis") {
  const QuadSpace s22(2, 2);
  const auto vs = q_orthonormal_basis(s22, span_of({unit(4, 0), unit(4, 1)}));
  REQUIRE(vs.size() == 2);
  for (size_t i = 0; i < vs.size(); ++i)
    for (size_t j = 0; j < vs.size(); ++j) {
      const double expect = (i == j) ? 1.0 : 0.0;  // both directions positive
      CHECK(q_inner(s22, vs[i], vs[j]) == doctest::Approx(expect).epsilon(1e-12));
    }

  const QuadSpace s11(1, 1);
  const auto ws = q_orthonormal_basis(s11, span_of({vec2(2, 1)}));
  REQUIRE(ws.size() == 1);
  const double root3 = std::sqrt(3.0);
  CHECK(std::min((ws[0] - vec2(2 / root3, 1 / root3)).norm(),
                 (ws[0] + vec2(2 / root3, 1 / root3)).norm()) < 1e-12);
  CHECK(q_inner(s11, ws[0], ws[0]) == doctest::Approx(1.0));

  CHECK_THROWS_AS(q_orthonormal_basis(s22, span_of({vec4(1, 0, 1, 0)})),
                  Error);
  try {
    q_orthonormal_basis(s22, span_of({vec4(1, 0, 1, 0)}));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegenerateSubspace);
  }

  // mixed signature: positives come first
  const auto ms = q_orthonormal_basis(s22, span_of({unit(4, 2), unit(4, 0)}));
  REQUIRE(ms.size() == 2);
  CHECK(q_inner(s22, ms[0], ms[0]) == doctest::Approx(1.0));
  CHECK(q_inner(s22, ms[1], ms[1]) == doctest::Approx(-1.0));
  CHECK(q_inner(s22, ms[0], ms[1]) == doctest::Approx(0.0));
}

TEST_CASE("isotropic complement in split spaces") {
  const QuadSpace s11(1, 1);
  CHECK(subspace_equal(isotropic_complement(s11, span_of({vec2(1, 1)})),
                       span_of({vec2(1, -1)})));
  const QuadSpace s22(2, 2);
  const Subspace e = span_of({vec4(1, 0, 1, 0), vec4(0, 1, 0, 1)});
  const Subspace f = isotropic_complement(s22, e);
  CHECK(subspace_equal(f, span_of({vec4(1, 0, -1, 0), vec4(0, 1, 0, -1)})));
  // F isotropic, E + F spans everything
  const Matrix gram = f.basis.transpose() * s22.gramQ() * f.basis;
  CHECK(gram.cwiseAbs().maxCoeff() < 1e-10);
  Matrix joint(4, 4);
  joint << e.basis, f.basis;
  Eigen::FullPivLU<Matrix> lu(joint);
  CHECK(lu.rank() == 4);

  CHECK_THROWS_AS(isotropic_complement(s22, span_of({unit(4, 0), unit(4, 1)})),
                  Error);
  try {
    isotropic_complement(s22, span_of({unit(4, 0), unit(4, 1)}));
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::NotIsotropic);
  }
  try {
    isotropic_complement(s22, span_of({vec4(1, 0, 1, 0)}));
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::WrongDimension);
  }
  try {
    isotropic_complement(QuadSpace(2, 1), span_of({unit(3, 0)}));
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::WrongDimension);
  }
}

TEST_CASE("constructive standard planes") {
  const QuadSpace s22(2, 2);
  CHECK(subspace_equal(constructive_plane(s22, OrbitLabel{1, 1, 0}),
                       span_of({unit(4, 0), unit(4, 2)})));
  CHECK(subspace_equal(constructive_plane(s22, OrbitLabel{0, 0, 2}),
                       span_of({vec4(1, 0, 1, 0), vec4(0, 1, 0, 1)})));
  CHECK_THROWS_AS(constructive_plane(s22, OrbitLabel{3, 0, 0}), Error);
  try {
    constructive_plane(s22, OrbitLabel{3, 0, 0});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InfeasibleLabel);
  }
}

TEST_CASE("constructive plane realizes every feasible label (n <= 6)") {
  for (int p = 0; p <= 6; ++p) {
    for (int q = 0; p + q <= 6; ++q) {
      if (p + q < 1) continue;
      const QuadSpace s(p, q);
      for (int k = 1; k <= s.n(); ++k) {
        for (int a = 0; a <= k; ++a) {
          for (int b = 0; a + b <= k; ++b) {
            OrbitLabel lab;
            lab.a = a;
            lab.b = b;
            lab.r = k - a - b;
            if (!label_feasible(s, lab)) {
              CHECK_THROWS_AS(constructive_plane(s, lab), Error);
              continue;
            }
            const Subspace e = constructive_plane(s, lab);
            CHECK(e.k == k);
            CHECK(signature_of_restriction(s, e) == lab);
          }
        }
      }
    }
  }
}

TEST_CASE("pseudo-orthogonal sampler stays in the group") {
  const QuadSpace s22(2, 2);
  CHECK((random_pseudo_orthogonal(s22, 0.0, 3) - Matrix::Identity(4, 4))
            .cwiseAbs()
            .maxCoeff() == 0.0);
  const Matrix g = random_pseudo_orthogonal(s22, 0.5, 7);
  CHECK((g.transpose() * s22.gramQ() * g - s22.gramQ()).cwiseAbs().maxCoeff() <
        1e-10);
  // generator of the (1,1) boost exponentiates to the closed form
  const double alpha = 0.8;
  Matrix a(2, 2);
  a << 0.0, alpha, alpha, 0.0;
  Matrix expected(2, 2);
  expected << std::cosh(alpha), std::sinh(alpha), std::sinh(alpha),
      std::cosh(alpha);
  CHECK((matrix_exp(a) - expected).cwiseAbs().maxCoeff() < 1e-13);
  CHECK((boost_1_1(alpha) - expected).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("restricted signature is a group invariant") {
  const std::vector<QuadSpace> spaces = {QuadSpace(1, 1), QuadSpace(2, 1),
                                         QuadSpace(2, 2), QuadSpace(3, 2)};
  int checked = 0;
  std::uint64_t seed = 1000;
  while (checked < 200) {
    for (const QuadSpace& s : spaces) {
      for (int k = 1; k < s.n(); ++k) {
        const Matrix g = random_pseudo_orthogonal(s, 0.6, seed);
        // sample an exact representative of a feasible label and move it to a
        // generic position with a second group element
        for (int a = 0; a <= std::min(k, s.p); ++a) {
          const int b_hi = std::min(k - a, s.q);
          for (int b = 0; a + b <= k && b <= b_hi; ++b) {
            OrbitLabel lab;
            lab.a = a;
            lab.b = b;
            lab.r = k - a - b;
            if (!label_feasible(s, lab)) continue;
            const Matrix h = random_pseudo_orthogonal(s, 0.4, seed + 13);
            const Subspace e =
                make_subspace(h * constructive_plane(s, lab).basis);
            const OrbitLabel before = signature_of_restriction(s, e);
            const Subspace ge = make_subspace(g * e.basis);
            CHECK(signature_of_restriction(s, ge) == before);
            ++checked;
          }
        }
        ++seed;
      }
    }
  }
  CHECK(checked >= 200);
}
