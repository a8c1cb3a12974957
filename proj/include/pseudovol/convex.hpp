#pragma once

// Convex polytopes: vertex/facet representations, convex hulls in 2-D and
// 3-D, and surface-area measures (with analytic 4-D special cases).

#include <string>
#include <vector>

#include "pseudovol/core.hpp"

namespace pseudovol {

struct Facet {
  Vector normal;   // outward unit normal
  double measure;  // (n-1)-volume of the facet
};

struct ConvexBody {
  enum class Mode { VertexList, FacetList };
  Mode mode = Mode::VertexList;
  int n = 0;
  std::vector<Vector> vertices;  // VertexList mode
  std::vector<Facet> facets;     // FacetList mode
  std::string label;
};

ConvexBody body_from_vertices(int n, std::vector<Vector> vertices,
                              std::string label = "");
ConvexBody body_from_facets(int n, std::vector<Facet> facets,
                            std::string label = "");

// || sum measure * normal || — zero for valid surface-area measures.
double minkowski_closure_deviation(const std::vector<Facet>& facets);

// Dimension of the affine hull of the vertex set.
int affine_rank(const std::vector<Vector>& vertices);

// 2-D convex hull (monotone chain), vertices in counterclockwise order.
std::vector<Eigen::Vector2d> hull_2d(const std::vector<Eigen::Vector2d>& pts);
double hull_area_2d(const std::vector<Eigen::Vector2d>& pts);

// 3-D incremental convex hull volume.
double hull_volume_3d(const std::vector<Eigen::Vector3d>& pts);

// Outward normals & facet measures of the hull (2-D edge lengths / 3-D areas
// merged over coplanar triangles).
std::vector<Facet> hull_facets_2d(const std::vector<Eigen::Vector2d>& pts);
std::vector<Facet> hull_facets_3d(const std::vector<Eigen::Vector3d>& pts);

// Facet normals and measures of the body. n in {2,3} via hulls; n = 4 only
// for axis-aligned boxes (16 vertices) and simplices (5 vertices), which have
// analytic facet data. FacetList bodies are validated and passed through.
std::vector<Facet> surface_area_measure(const ConvexBody& body);

// Apply a linear map to every vertex (VertexList bodies only).
ConvexBody transform(const Matrix& g, const ConvexBody& body);

}  // namespace pseudovol
