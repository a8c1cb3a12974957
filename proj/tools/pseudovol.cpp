// Command-line front end: orbit classification, dimension tables, orbit
// censuses, admissibility checks of coefficient vectors, the reproduction
// table of pinned constants, and valuation evaluation on convex bodies.
//
// Exit codes: 0 success / all pass, 1 numeric failure (constants row or
// inadmissible vector), 2 usage or parse error.

#include <cstdint>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pseudovol/convex.hpp"
#include "pseudovol/crofton.hpp"
#include "pseudovol/grassmann.hpp"
#include "pseudovol/hadwiger.hpp"
#include "pseudovol/json_io.hpp"
#include "pseudovol/klain.hpp"
#include "pseudovol/lorentz.hpp"
#include "pseudovol/quadform.hpp"
#include "pseudovol/report.hpp"
#include "pseudovol/subspace.hpp"

namespace {

using namespace pseudovol;

int run_classify(int p, int q, const std::string& plane_text) {
  const QuadSpace space(p, q);
  const Subspace e = make_subspace(plane_from_text(plane_text, space.n()));
  const OrbitLabel label = signature_of_restriction(space, e);
  bool open = false;
  bool closed = false;
  int orbit_dim = -1;
  for (const GrassmannOrbit& orbit : orbit_census_grassmannian(p, q, e.k)) {
    if (orbit.label == label) {
      open = orbit.open;
      closed = orbit.closed;
      orbit_dim = orbit.dim;
      break;
    }
  }
  Json out;
  out["p"] = p;
  out["q"] = q;
  out["k"] = e.k;
  out["label"] = Json{{"a", label.a}, {"b", label.b}, {"r", label.r}};
  out["open"] = open;
  out["closed"] = closed;
  out["orbit_dimension"] = orbit_dim;
  out["cos2theta"] = cos2theta(space, e);
  Json kappa;
  for (int a = std::max(0, e.k - q); a <= std::min(e.k, p); ++a) {
    kappa[std::to_string(a)] = kappa_value(space, a, e);
  }
  out["kappa"] = kappa;
  std::cout << out.dump(2) << '\n';
  return 0;
}

int run_dims(int p, int q, int k, const std::string& parity,
             const std::string& space_kind, const std::string& group) {
  DimQuery query;
  query.p = p;
  query.q = q;
  query.k = k;
  if (parity == "all") query.parity = Parity::All;
  else if (parity == "even") query.parity = Parity::Even;
  else if (parity == "odd") query.parity = Parity::Odd;
  else fail(ErrorCode::InvalidInput, "--parity must be all|even|odd");
  if (space_kind == "continuous") query.space_kind = SpaceKind::Continuous;
  else if (space_kind == "generalized")
    query.space_kind = SpaceKind::Generalized;
  else fail(ErrorCode::InvalidInput, "--space must be continuous|generalized");
  if (group == "soplus") query.group = Group::SOplus;
  else if (group == "o") query.group = Group::FullO;
  else fail(ErrorCode::InvalidInput, "--group must be soplus|o");
  Json out;
  out["p"] = p;
  out["q"] = q;
  out["k"] = k;
  out["parity"] = parity;
  out["space"] = space_kind;
  out["group"] = group;
  out["dim"] = dim_invariant_valuations(query);
  std::cout << out.dump(2) << '\n';
  return 0;
}

int run_census(int p, int q, int k) {
  Json out;
  if (k >= 0) {
    out = Json::array();
    for (const GrassmannOrbit& orbit : orbit_census_grassmannian(p, q, k)) {
      Json jo;
      jo["label"] = Json{{"a", orbit.label.a},
                         {"b", orbit.label.b},
                         {"r", orbit.label.r}};
      jo["open"] = orbit.open;
      jo["closed"] = orbit.closed;
      jo["dim"] = orbit.dim;
      out.push_back(jo);
    }
  } else {
    const ProjectiveCensus census = orbit_census_projective(p, q);
    out["open_count"] = census.open_count;
    out["closed_count"] = census.closed_count;
    out["open_names"] = census.open_names;
    out["closed_names"] = census.closed_names;
  }
  std::cout << out.dump(2) << '\n';
  return 0;
}

int run_klain_check(const std::string& file, const std::string& inline_text) {
  const Json j =
      file.empty() ? parse_json_text(inline_text) : parse_json_file(file);
  const KlainVector v = klain_vector_from_json(j);
  const bool admissible = is_in_klain_image(v);
  Json out = klain_vector_to_json(v);
  out["index_range"] = Json::array({v.a_min(), v.a_max()});
  out["admissible"] = admissible;
  out["fourier"] = klain_vector_to_json(fourier(v));
  std::cout << out.dump(2) << '\n';
  return admissible ? 0 : 1;
}

int run_constants(const std::string& format, double tolerance, int n_tor,
                  std::uint64_t seed, const std::vector<int>& rows) {
  ReportConfig cfg;
  cfg.tolerance_override = tolerance;
  cfg.n_tor = n_tor;
  cfg.seed = seed;
  cfg.rows = rows;
  const std::vector<ConstantRow> table = reproduction_table(cfg);
  if (format == "pretty") std::cout << render_pretty(table);
  else if (format == "json") std::cout << render_json(table);
  else if (format == "csv") std::cout << render_csv(table);
  else fail(ErrorCode::InvalidInput, "--format must be pretty|json|csv");
  return all_pass(table) ? 0 : 1;
}

// orthonormal basis of the direction plane of a flat vertex-mode body
Subspace direction_plane(const ConvexBody& body) {
  if (body.mode != ConvexBody::Mode::VertexList) {
    fail(ErrorCode::InvalidInput,
         "plane-measure valuations need a vertex-mode body");
  }
  if (affine_rank(body.vertices) != 2) {
    fail(ErrorCode::InvalidInput,
         "plane-measure valuations are defined for flat two-dimensional "
         "bodies only");
  }
  Matrix d(body.n, static_cast<int>(body.vertices.size()) - 1);
  for (int i = 1; i < static_cast<int>(body.vertices.size()); ++i) {
    d.col(i - 1) = body.vertices[i] - body.vertices[0];
  }
  Eigen::JacobiSVD<Matrix> svd(d, Eigen::ComputeThinU);
  return make_subspace(svd.matrixU().leftCols(2));
}

int run_evaluate(int p, int q, const std::string& valuation,
                 const std::string& body_file) {
  const QuadSpace space(p, q);
  const ConvexBody body = body_from_json(parse_json_file(body_file));
  if (body.n != space.n()) {
    fail(ErrorCode::DimensionMismatch,
         "body lives in dimension " + std::to_string(body.n) +
             ", space has dimension " + std::to_string(space.n()));
  }
  double value = 0.0;
  if (valuation == "phi_minus" || valuation == "phi_plus") {
    if (q != 1) {
      fail(ErrorCode::InvalidInput,
           valuation + " requires signature (n-1,1)");
    }
    value = valuation == "phi_minus" ? phi_minus(space, body)
                                     : phi_plus(space, body);
  } else if (valuation == "phi_00" || valuation == "phi_plus_crofton" ||
             valuation == "phi_minus_crofton") {
    if (p != 2 || q != 2) {
      fail(ErrorCode::InvalidInput,
           valuation + " is defined on the (2,2) space only");
    }
    const Subspace e0 = direction_plane(body);
    const double area = projection_volume(e0, body);
    CroftonMeasureSpec measure = CroftonMeasureSpec::m00();
    if (valuation == "phi_plus_crofton") measure = CroftonMeasureSpec::mplus();
    if (valuation == "phi_minus_crofton")
      measure = CroftonMeasureSpec::mminus();
    value = area * klain_from_crofton(measure, e0);
  } else {
    fail(ErrorCode::InvalidInput, "unknown valuation: " + valuation);
  }
  std::printf("%.12g\n", value);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "pseudovol: invariant valuations and generalized plane measures of "
      "pseudo-Euclidean spaces"};
  app.require_subcommand(1);
  int rc = 0;

  int p = 2, q = 2, k = 2;
  std::string plane_text;
  CLI::App* classify = app.add_subcommand(
      "classify", "orbit data of a plane given by spanning vectors");
  classify->add_option("--p", p, "positive inertia of the form")->required();
  classify->add_option("--q", q, "negative inertia of the form")->required();
  classify->add_option("--plane", plane_text,
                       "JSON list of spanning vectors, e.g. [[1,0],[0,1]]")
      ->required();
  classify->callback([&] { rc = run_classify(p, q, plane_text); });

  int dp = 2, dq = 2, dk = 2;
  std::string parity = "all", space_kind = "continuous", group = "soplus";
  CLI::App* dims = app.add_subcommand(
      "dims", "dimension of a space of invariant valuations");
  dims->add_option("--p", dp)->required();
  dims->add_option("--q", dq)->required();
  dims->add_option("--k", dk, "homogeneity degree")->required();
  dims->add_option("--parity", parity, "all|even|odd");
  dims->add_option("--space", space_kind, "continuous|generalized");
  dims->add_option("--group", group, "soplus|o");
  dims->callback([&] { rc = run_dims(dp, dq, dk, parity, space_kind, group); });

  int cp = 2, cq = 2, ck = -1;
  CLI::App* census = app.add_subcommand(
      "census",
      "orbits on k-planes (with --k) or on projectivized directions");
  census->add_option("--p", cp)->required();
  census->add_option("--q", cq)->required();
  census->add_option("--k", ck, "plane dimension (omit for directions)");
  census->callback([&] { rc = run_census(cp, cq, ck); });

  std::string kc_file, kc_inline;
  CLI::App* kcheck = app.add_subcommand(
      "klain-check",
      "admissibility of a coefficient vector {p,q,k,coeffs}");
  kcheck->add_option("--file", kc_file, "JSON file with the vector");
  kcheck->add_option("--vector", kc_inline, "inline JSON text");
  kcheck->callback([&] {
    if (kc_file.empty() == kc_inline.empty()) {
      fail(ErrorCode::InvalidInput,
           "give exactly one of --file and --vector");
    }
    rc = run_klain_check(kc_file, kc_inline);
  });

  std::string format = "pretty";
  double tolerance = 0.0;
  int n_tor = 256;
  std::uint64_t seed = 20260825;
  std::vector<int> rows;
  CLI::App* constants = app.add_subcommand(
      "constants", "reproduction table of the pinned constants");
  constants->add_option("--format", format, "pretty|json|csv");
  constants->add_option("--tolerance", tolerance,
                        "override every pinned tolerance (must be > 0)")
      ->check(CLI::PositiveNumber);
  constants->add_option("--ntor", n_tor,
                        "trapezoid order of generic torus averages")
      ->check(CLI::PositiveNumber);
  constants->add_option("--seed", seed, "seed of the randomized sweeps");
  constants->add_option("--rows", rows, "subset of row indices (1..16)")
      ->delimiter(',');
  constants->callback(
      [&] { rc = run_constants(format, tolerance, n_tor, seed, rows); });

  int ep = 2, eq = 2;
  std::string valuation, body_file;
  CLI::App* evaluate = app.add_subcommand(
      "evaluate", "evaluate an invariant valuation on a convex body");
  evaluate->add_option("--p", ep)->required();
  evaluate->add_option("--q", eq)->required();
  evaluate
      ->add_option("--valuation", valuation,
                   "phi_minus|phi_plus|phi_00|phi_plus_crofton|"
                   "phi_minus_crofton")
      ->required();
  evaluate->add_option("--body", body_file, "JSON body file")->required();
  evaluate->callback([&] { rc = run_evaluate(ep, eq, valuation, body_file); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const Error& e) {
    std::cerr << "error (" << error_code_name(e.code()) << "): " << e.what()
              << '\n';
    return 2;
  }
  return rc;
}
