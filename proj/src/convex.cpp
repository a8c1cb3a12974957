#include "pseudovol/convex.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <utility>

namespace pseudovol {

namespace {

double cross2(const Eigen::Vector2d& o, const Eigen::Vector2d& a,
              const Eigen::Vector2d& b) {
  return (a.x() - o.x()) * (b.y() - o.y()) -
         (a.y() - o.y()) * (b.x() - o.x());
}

double scale_of(const std::vector<Vector>& pts) {
  double s = 1.0;
  for (const Vector& p : pts) s = std::max(s, p.cwiseAbs().maxCoeff());
  return s;
}

}  // namespace

ConvexBody body_from_vertices(int n, std::vector<Vector> vertices,
                              std::string label) {
  if (n < 1 || n > 4)
    fail(ErrorCode::UnsupportedDimension, "bodies supported for 1 <= n <= 4");
  for (const Vector& v : vertices)
    if (v.size() != n)
      fail(ErrorCode::DimensionMismatch,
           "vertex dimension does not match the body dimension");
  ConvexBody b;
  b.mode = ConvexBody::Mode::VertexList;
  b.n = n;
  b.vertices = std::move(vertices);
  b.label = std::move(label);
  return b;
}

ConvexBody body_from_facets(int n, std::vector<Facet> facets,
                            std::string label) {
  for (const Facet& f : facets) {
    if (f.normal.size() != n)
      fail(ErrorCode::DimensionMismatch,
           "facet normal dimension does not match the body dimension");
    if (std::abs(f.normal.norm() - 1.0) > 1e-9)
      fail(ErrorCode::InvalidInput, "facet normals must be unit vectors");
    if (f.measure < 0.0)
      fail(ErrorCode::InvalidInput, "facet measures must be non-negative");
  }
  ConvexBody b;
  b.mode = ConvexBody::Mode::FacetList;
  b.n = n;
  b.facets = std::move(facets);
  b.label = std::move(label);
  if (minkowski_closure_deviation(b.facets) > tol::closure_eps)
    fail(ErrorCode::InvalidInput,
         "facet list violates the closedness condition (sum area*normal != 0)");
  return b;
}

double minkowski_closure_deviation(const std::vector<Facet>& facets) {
  if (facets.empty()) return 0.0;
  Vector s = Vector::Zero(facets.front().normal.size());
  for (const Facet& f : facets) s += f.measure * f.normal;
  return s.norm();
}

int affine_rank(const std::vector<Vector>& vertices) {
  if (vertices.size() < 2) return 0;
  const int n = static_cast<int>(vertices.front().size());
  Matrix d(n, static_cast<int>(vertices.size()) - 1);
  for (size_t i = 1; i < vertices.size(); ++i)
    d.col(static_cast<int>(i) - 1) = vertices[i] - vertices[0];
  Eigen::FullPivLU<Matrix> lu(d);
  lu.setThreshold(1e-10);
  return static_cast<int>(lu.rank());
}

std::vector<Eigen::Vector2d> hull_2d(const std::vector<Eigen::Vector2d>& pts) {
  std::vector<Eigen::Vector2d> p = pts;
  std::sort(p.begin(), p.end(),
            [](const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
              return a.x() < b.x() || (a.x() == b.x() && a.y() < b.y());
            });
  p.erase(std::unique(p.begin(), p.end(),
                      [](const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
                        return (a - b).norm() < 1e-14;
                      }),
          p.end());
  const int m = static_cast<int>(p.size());
  if (m < 3) return p;
  std::vector<Eigen::Vector2d> h(2 * m);
  int k = 0;
  for (int i = 0; i < m; ++i) {  // lower chain
    while (k >= 2 && cross2(h[k - 2], h[k - 1], p[i]) <= 0.0) --k;
    h[k++] = p[i];
  }
  for (int i = m - 2, lower = k + 1; i >= 0; --i) {  // upper chain
    while (k >= lower && cross2(h[k - 2], h[k - 1], p[i]) <= 0.0) --k;
    h[k++] = p[i];
  }
  h.resize(k - 1);
  return h;
}

double hull_area_2d(const std::vector<Eigen::Vector2d>& pts) {
  const std::vector<Eigen::Vector2d> h = hull_2d(pts);
  if (h.size() < 3) return 0.0;
  double a = 0.0;
  for (size_t i = 0; i < h.size(); ++i) {
    const Eigen::Vector2d& u = h[i];
    const Eigen::Vector2d& v = h[(i + 1) % h.size()];
    a += u.x() * v.y() - u.y() * v.x();
  }
  return 0.5 * std::abs(a);
}

std::vector<Facet> hull_facets_2d(const std::vector<Eigen::Vector2d>& pts) {
  const std::vector<Eigen::Vector2d> h = hull_2d(pts);
  if (h.size() < 3)
    fail(ErrorCode::DegenerateBody, "2-D body has no interior");
  std::vector<Facet> out;
  for (size_t i = 0; i < h.size(); ++i) {
    const Eigen::Vector2d e = h[(i + 1) % h.size()] - h[i];
    const double len = e.norm();
    if (len < 1e-14) continue;
    Facet f;
    f.normal = Vector(2);
    // hull is counterclockwise; outward normal is the right-hand rotation
    f.normal << e.y() / len, -e.x() / len;
    f.measure = len;
    out.push_back(std::move(f));
  }
  return out;
}

namespace {

struct Tri {
  int a, b, c;
  Eigen::Vector3d normal;  // outward unit
  double offset;           // normal . x = offset on the plane
};

// Incremental 3-D convex hull returning outward-oriented triangles.
std::vector<Tri> hull_3d(const std::vector<Eigen::Vector3d>& pts) {
  const int m = static_cast<int>(pts.size());
  if (m < 4) return {};
  double diam = 0.0;
  for (const auto& p : pts) diam = std::max(diam, p.norm());
  const double eps = 1e-10 * std::max(1.0, diam);

  // initial affinely independent quadruple
  int i1 = -1;
  for (int i = 1; i < m; ++i)
    if ((pts[i] - pts[0]).norm() > eps) {
      i1 = i;
      break;
    }
  if (i1 < 0) return {};
  int i2 = -1;
  double best = eps;
  for (int i = 0; i < m; ++i) {
    const double a = (pts[i1] - pts[0]).cross(pts[i] - pts[0]).norm();
    if (a > best) {
      best = a;
      i2 = i;
    }
  }
  if (i2 < 0) return {};
  int i3 = -1;
  const Eigen::Vector3d nrm0 =
      (pts[i1] - pts[0]).cross(pts[i2] - pts[0]).normalized();
  best = eps;
  for (int i = 0; i < m; ++i) {
    const double v = std::abs(nrm0.dot(pts[i] - pts[0]));
    if (v > best) {
      best = v;
      i3 = i;
    }
  }
  if (i3 < 0) return {};  // coplanar input

  std::vector<Tri> faces;
  const Eigen::Vector3d centroid =
      0.25 * (pts[0] + pts[i1] + pts[i2] + pts[i3]);
  auto add_face = [&](int a, int b, int c) {
    Tri t;
    t.a = a;
    t.b = b;
    t.c = c;
    t.normal = (pts[b] - pts[a]).cross(pts[c] - pts[a]);
    const double nn = t.normal.norm();
    if (nn < 1e-14) return;
    t.normal /= nn;
    t.offset = t.normal.dot(pts[a]);
    if (t.normal.dot(centroid) > t.offset) {  // flip to face outward
      std::swap(t.b, t.c);
      t.normal = -t.normal;
      t.offset = t.normal.dot(pts[t.a]);
    }
    faces.push_back(std::move(t));
  };
  add_face(0, i1, i2);
  add_face(0, i1, i3);
  add_face(0, i2, i3);
  add_face(i1, i2, i3);

  for (int i = 0; i < m; ++i) {
    if (i == 0 || i == i1 || i == i2 || i == i3) continue;
    // faces visible from pts[i]
    std::vector<Tri> keep;
    std::set<std::pair<int, int>> visible_edges;
    for (const Tri& t : faces) {
      if (t.normal.dot(pts[i]) > t.offset + eps) {
        visible_edges.insert({t.a, t.b});
        visible_edges.insert({t.b, t.c});
        visible_edges.insert({t.c, t.a});
      } else {
        keep.push_back(t);
      }
    }
    if (visible_edges.empty()) continue;  // interior point
    faces = std::move(keep);
    // horizon = directed edges whose reverse is not visible
    for (const auto& e : visible_edges) {
      if (visible_edges.count({e.second, e.first})) continue;
      Tri t;
      t.a = e.first;
      t.b = e.second;
      t.c = i;
      t.normal = (pts[t.b] - pts[t.a]).cross(pts[t.c] - pts[t.a]);
      const double nn = t.normal.norm();
      if (nn < 1e-14) continue;
      t.normal /= nn;
      t.offset = t.normal.dot(pts[t.a]);
      faces.push_back(std::move(t));
    }
  }
  return faces;
}

}  // namespace

double hull_volume_3d(const std::vector<Eigen::Vector3d>& pts) {
  const std::vector<Tri> faces = hull_3d(pts);
  double v = 0.0;
  for (const Tri& t : faces)
    v += pts[t.a].cross(pts[t.b]).dot(pts[t.c]);
  return v / 6.0;
}

std::vector<Facet> hull_facets_3d(const std::vector<Eigen::Vector3d>& pts) {
  const std::vector<Tri> faces = hull_3d(pts);
  if (faces.empty())
    fail(ErrorCode::DegenerateBody, "3-D body has no interior");
  // merge coplanar triangles by (quantized) normal + offset
  std::map<std::array<long long, 4>, std::pair<Vector, double>> merged;
  for (const Tri& t : faces) {
    const double area =
        0.5 * (pts[t.b] - pts[t.a]).cross(pts[t.c] - pts[t.a]).norm();
    if (area < 1e-14) continue;
    std::array<long long, 4> key;
    for (int i = 0; i < 3; ++i)
      key[i] = static_cast<long long>(std::llround(t.normal[i] * 1e9));
    key[3] = static_cast<long long>(std::llround(t.offset * 1e9));
    auto it = merged.find(key);
    if (it == merged.end()) {
      Vector nv(3);
      nv << t.normal.x(), t.normal.y(), t.normal.z();
      merged.emplace(key, std::make_pair(nv, area));
    } else {
      it->second.second += area;
    }
  }
  std::vector<Facet> out;
  out.reserve(merged.size());
  for (auto& kv : merged)
    out.push_back(Facet{kv.second.first, kv.second.second});
  return out;
}

namespace {

std::vector<Facet> box_facets_4d(const std::vector<Vector>& verts) {
  // detect axis-aligned box: each axis takes exactly two values and all 16
  // corner combinations appear
  double lo[4], hi[4];
  for (int ax = 0; ax < 4; ++ax) {
    lo[ax] = 1e300;
    hi[ax] = -1e300;
    for (const Vector& v : verts) {
      lo[ax] = std::min(lo[ax], v[ax]);
      hi[ax] = std::max(hi[ax], v[ax]);
    }
    if (hi[ax] - lo[ax] < 1e-12)
      fail(ErrorCode::DegenerateBody, "4-D box has a flat axis");
  }
  std::set<int> corners;
  for (const Vector& v : verts) {
    int mask = 0;
    for (int ax = 0; ax < 4; ++ax) {
      const bool at_lo = std::abs(v[ax] - lo[ax]) < 1e-9;
      const bool at_hi = std::abs(v[ax] - hi[ax]) < 1e-9;
      if (!at_lo && !at_hi)
        fail(ErrorCode::UnsupportedDimension,
             "16-vertex 4-D bodies must be axis-aligned boxes");
      if (at_hi) mask |= (1 << ax);
    }
    corners.insert(mask);
  }
  if (corners.size() != 16)
    fail(ErrorCode::UnsupportedDimension,
         "16-vertex 4-D bodies must be axis-aligned boxes");
  std::vector<Facet> out;
  for (int ax = 0; ax < 4; ++ax) {
    double area = 1.0;
    for (int j = 0; j < 4; ++j)
      if (j != ax) area *= hi[j] - lo[j];
    for (double s : {1.0, -1.0}) {
      Facet f;
      f.normal = Vector::Zero(4);
      f.normal[ax] = s;
      f.measure = area;
      out.push_back(std::move(f));
    }
  }
  return out;
}

std::vector<Facet> simplex_facets_4d(const std::vector<Vector>& verts) {
  Matrix edges(4, 4);
  for (int i = 0; i < 4; ++i) edges.col(i) = verts[i + 1] - verts[0];
  if (std::abs(edges.determinant()) < 1e-12 * scale_of(verts))
    fail(ErrorCode::DegenerateBody, "4-D simplex is degenerate");
  std::vector<Facet> out;
  for (int omit = 0; omit < 5; ++omit) {
    std::vector<int> idx;
    for (int i = 0; i < 5; ++i)
      if (i != omit) idx.push_back(i);
    Matrix f(4, 3);
    for (int i = 0; i < 3; ++i)
      f.col(i) = verts[idx[i + 1]] - verts[idx[0]];
    // unit normal: kernel of f^T (1-dimensional)
    Eigen::FullPivLU<Matrix> lu(f.transpose());
    lu.setThreshold(1e-12);
    Vector nrm = lu.kernel().col(0);
    nrm.normalize();
    // orient away from the omitted vertex
    if (nrm.dot(verts[omit] - verts[idx[0]]) > 0.0) nrm = -nrm;
    const Matrix gram = f.transpose() * f;
    Facet fac;
    fac.normal = nrm;
    fac.measure = std::sqrt(std::abs(gram.determinant())) / 6.0;
    out.push_back(std::move(fac));
  }
  return out;
}

}  // namespace

std::vector<Facet> surface_area_measure(const ConvexBody& body) {
  if (body.mode == ConvexBody::Mode::FacetList) return body.facets;
  const int n = body.n;
  if (n == 2) {
    std::vector<Eigen::Vector2d> pts;
    pts.reserve(body.vertices.size());
    for (const Vector& v : body.vertices) pts.emplace_back(v[0], v[1]);
    return hull_facets_2d(pts);
  }
  if (n == 3) {
    std::vector<Eigen::Vector3d> pts;
    pts.reserve(body.vertices.size());
    for (const Vector& v : body.vertices) pts.emplace_back(v[0], v[1], v[2]);
    return hull_facets_3d(pts);
  }
  if (n == 4) {
    if (affine_rank(body.vertices) < 4)
      fail(ErrorCode::DegenerateBody, "4-D body has no interior");
    if (body.vertices.size() == 16) return box_facets_4d(body.vertices);
    if (body.vertices.size() == 5) return simplex_facets_4d(body.vertices);
    fail(ErrorCode::UnsupportedDimension,
         "general 4-D hulls unsupported; only 16-vertex boxes and 5-vertex "
         "simplices carry analytic facet data");
  }
  fail(ErrorCode::UnsupportedDimension,
       "surface_area_measure supports 2 <= n <= 4");
}

ConvexBody transform(const Matrix& g, const ConvexBody& body) {
  if (body.mode != ConvexBody::Mode::VertexList)
    fail(ErrorCode::InvalidInput,
         "transform: only vertex-list bodies can be mapped");
  if (g.rows() != body.n || g.cols() != body.n)
    fail(ErrorCode::DimensionMismatch, "transform: matrix/body size mismatch");
  ConvexBody out = body;
  for (Vector& v : out.vertices) v = g * v;
  return out;
}

}  // namespace pseudovol
