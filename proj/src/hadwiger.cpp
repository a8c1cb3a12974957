#include "pseudovol/hadwiger.hpp"

#include <Eigen/Dense>
#include <algorithm>

namespace pseudovol {

int dim_invariant_valuations(const DimQuery& query) {
  const int p = query.p, q = query.q, k = query.k;
  const int n = p + q;
  if (p < 0 || q < 0 || n < 1 || k < 0 || k > n)
    fail(ErrorCode::InvalidInput,
         "dimension query requires p,q >= 0 and 0 <= k <= p+q");
  const int m = std::min(p, q);

  int even = 0, odd = 0;
  if (k == 0 || k == n || m == 0) {
    // Euler characteristic / volume slots and the definite case: a single
    // even valuation (the intrinsic volume) in every regularity class.
    even = 1;
    odd = 0;
  } else {
    // indefinite signature, 1 <= k <= n-1: the continuous space is trivial
    // except in top degree, while the generalized space is uniform in k
    const bool active =
        (query.space_kind == SpaceKind::Generalized) || (k == n - 1);
    if (active) {
      even = 2;
      if (p == 1 && q == 1)
        odd = 2;
      else if (m == 1)
        odd = 1;
      else
        odd = 0;
    }
  }

  // The full group kills the odd part and fixes the whole even part.
  if (query.group == Group::FullO) odd = 0;

  switch (query.parity) {
    case Parity::Even: return even;
    case Parity::Odd: return odd;
    case Parity::All: return even + odd;
  }
  return 0;
}

std::vector<GrassmannOrbit> orbit_census_grassmannian(int p, int q, int k) {
  const int n = p + q;
  if (p < 0 || q < 0 || n < 1 || k < 0 || k > n)
    fail(ErrorCode::InvalidInput, "census requires 0 <= k <= p+q");
  const QuadSpace space(p, q);
  std::vector<GrassmannOrbit> out;
  for (int a = std::min(k, p); a >= 0; --a) {
    for (int b = std::min(k - a, q); b >= 0; --b) {
      OrbitLabel lab;
      lab.a = a;
      lab.b = b;
      lab.r = k - a - b;
      if (!label_feasible(space, lab)) continue;
      GrassmannOrbit orbit;
      orbit.label = lab;
      orbit.open = (lab.r == 0);
      orbit.closed =
          (a == std::max(0, k - q)) && (b == std::max(0, k - p));
      orbit.dim = k * (n - k) - lab.r * (lab.r + 1) / 2;
      out.push_back(orbit);
    }
  }
  return out;
}

ProjectiveCensus orbit_census_projective(int p, int q) {
  if (p < 0 || q < 0 || p + q < 1)
    fail(ErrorCode::InvalidInput, "census requires p+q >= 1");
  const int m = std::min(p, q);
  ProjectiveCensus c;
  if (m == 0) {
    c.open_names = {"all_rays"};
  } else if (p == 1 && q == 1) {
    // both cones disconnect on the circle of rays
    c.open_names = {"positive_rays_right", "positive_rays_left",
                    "negative_rays_future", "negative_rays_past"};
    c.closed_names = {"null_ray_future_right", "null_ray_future_left",
                      "null_ray_past_left", "null_ray_past_right"};
  } else if (m == 1) {
    // exactly one of the two cones has two components: the negative one when
    // q = 1, the positive one when p = 1
    if (q == 1)
      c.open_names = {"negative_rays_future", "negative_rays_past",
                      "positive_rays"};
    else
      c.open_names = {"positive_rays_future", "positive_rays_past",
                      "negative_rays"};
    c.closed_names = {"null_rays_future", "null_rays_past"};
  } else {
    c.open_names = {"positive_rays", "negative_rays"};
    c.closed_names = {"null_rays"};
  }
  c.open_count = static_cast<int>(c.open_names.size());
  c.closed_count = static_cast<int>(c.closed_names.size());
  return c;
}

int klain_image_dimension(int p, int q, int k) {
  const int n = p + q;
  if (p < 0 || q < 0 || n < 1 || k < 0 || k > n)
    fail(ErrorCode::InvalidInput, "requires 0 <= k <= p+q");
  const int lo = std::max(0, k - q);
  const int hi = std::min(k, p);
  const int count = hi - lo + 1;  // open orbits
  const int rows = std::max(0, count - 2);
  if (rows == 0) return count;
  Matrix constraints = Matrix::Zero(rows, count);
  for (int a = lo + 1; a <= hi - 1; ++a) {
    constraints(a - lo - 1, a + 1 - lo) = 1.0;
    constraints(a - lo - 1, a - 1 - lo) = 1.0;
  }
  Eigen::FullPivLU<Matrix> lu(constraints);
  lu.setThreshold(1e-10);
  return count - static_cast<int>(lu.rank());
}

}  // namespace pseudovol
