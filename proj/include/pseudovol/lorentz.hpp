#pragma once
// Boost-invariant surface valuations on convex polytopes of a Lorentz space
// (signature (n-1,1), positive time direction +e_n), evaluated as facet sums
// against the surface-area measure.

#include "pseudovol/convex.hpp"
#include "pseudovol/core.hpp"
#include "pseudovol/quadform.hpp"

namespace pseudovol {

// Odd valuation: sum over facets with timelike outward normal nu of
//   area * sign(nu_n) * sqrt(-Q(nu)).
// Spacelike and null normals contribute zero; the restriction to the timelike
// cone is what makes the sign factor constant along boost orbits, hence the
// whole sum invariant under the identity component of the isometry group.
double phi_minus(const QuadSpace& space, const ConvexBody& body);

// Even companion: sum over all facets of area * sqrt(|Q(nu)|). Non-negative;
// invariant under the full pseudo-orthogonal group.
double phi_plus(const QuadSpace& space, const ConvexBody& body);

}  // namespace pseudovol
