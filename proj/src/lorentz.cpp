#include "pseudovol/lorentz.hpp"

#include <cmath>

namespace pseudovol {

namespace {

std::vector<Facet> facets_of(const QuadSpace& space, const ConvexBody& body) {
  if (space.q != 1)
    fail(ErrorCode::WrongDimension,
         "surface valuations require signature (n-1, 1)");
  if (body.n != space.n())
    fail(ErrorCode::DimensionMismatch,
         "body and quadratic space have different ambient dimensions");
  return surface_area_measure(body);
}

double time_sign(const Vector& nu, int n) {
  const double t = nu[n - 1];
  if (std::abs(t) < tol::facet_axis_eps) return 0.0;
  return t > 0.0 ? 1.0 : -1.0;
}

}  // namespace

double phi_minus(const QuadSpace& space, const ConvexBody& body) {
  const int n = space.n();
  double sum = 0.0;
  for (const Facet& f : facets_of(space, body)) {
    const double qv = q_inner(space, f.normal, f.normal);
    if (qv >= 0.0) continue;  // only timelike normals carry the odd density
    sum += f.measure * time_sign(f.normal, n) * std::sqrt(-qv);
  }
  return sum;
}

double phi_plus(const QuadSpace& space, const ConvexBody& body) {
  double sum = 0.0;
  for (const Facet& f : facets_of(space, body)) {
    const double qv = q_inner(space, f.normal, f.normal);
    sum += f.measure * std::sqrt(std::abs(qv));
  }
  return sum;
}

}  // namespace pseudovol
