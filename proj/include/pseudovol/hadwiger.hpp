#pragma once
// Executable classification tables: dimensions of the spaces of invariant
// valuations by homogeneity degree, parity, regularity class and group
// component, together with orbit censuses of Grassmannians and of the
// projectivized dual space.

#include <string>
#include <vector>

#include "pseudovol/core.hpp"
#include "pseudovol/quadform.hpp"

namespace pseudovol {

enum class SpaceKind { Continuous, Generalized };
enum class Parity { Even, Odd, All };
enum class Group { SOplus, FullO };

struct DimQuery {
  int p = 0;
  int q = 0;
  int k = 0;
  SpaceKind space_kind = SpaceKind::Continuous;
  Parity parity = Parity::All;
  Group group = Group::SOplus;
};

// Dimension of the space of k-homogeneous translation-invariant valuations
// invariant under the chosen group component, split by parity. Exact integer
// case analysis; InvalidInput outside 0 <= k <= p+q.
int dim_invariant_valuations(const DimQuery& query);

struct GrassmannOrbit {
  OrbitLabel label;
  bool open = false;
  bool closed = false;
  int dim = 0;  // orbit dimension inside the Grassmannian
};

// All orbits of the identity component on k-planes, listed with open/closed
// flags and dimensions; sorted by descending positive inertia, then
// descending negative inertia.
std::vector<GrassmannOrbit> orbit_census_grassmannian(int p, int q, int k);

struct ProjectiveCensus {
  int open_count = 0;
  int closed_count = 0;
  std::vector<std::string> open_names;
  std::vector<std::string> closed_names;
};

// Census of identity-component orbits on the sphere of directions in the
// dual space, classified by the sign of the form and cone components.
ProjectiveCensus orbit_census_projective(int p, int q);

// Number of open orbits minus the rank of the interior two-step constraint
// system c_{a+1} + c_{a-1} = 0 (computed numerically on the constraint
// matrix): the dimension of the admissible coefficient space.
int klain_image_dimension(int p, int q, int k);

}  // namespace pseudovol
