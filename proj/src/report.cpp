#include "pseudovol/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

#include "pseudovol/convex.hpp"
#include "pseudovol/crofton.hpp"
#include "pseudovol/grassmann.hpp"
#include "pseudovol/hadwiger.hpp"
#include "pseudovol/json_io.hpp"
#include "pseudovol/klain.hpp"
#include "pseudovol/lorentz.hpp"
#include "pseudovol/montecarlo.hpp"
#include "pseudovol/quadform.hpp"
#include "pseudovol/regularize.hpp"
#include "pseudovol/subspace.hpp"

namespace pseudovol {

namespace {

constexpr double kPi = 3.14159265358979323846;

Vector unit(int n, int i) {
  Vector v = Vector::Zero(n);
  v[i] = 1.0;
  return v;
}

CheckItem make_item(const std::string& name, double computed, double expected,
                    double tol, bool relative, double override_tol) {
  CheckItem item;
  item.name = name;
  item.computed = computed;
  item.expected = expected;
  item.tol = override_tol > 0.0 ? override_tol : tol;
  item.relative = relative;
  item.abs_err = std::abs(computed - expected);
  item.rel_err =
      expected != 0.0 ? item.abs_err / std::abs(expected) : item.abs_err;
  const double err = relative ? item.rel_err : item.abs_err;
  item.pass = err <= item.tol;
  return item;
}

ConstantRow finalize(int index, const std::string& name,
                     std::vector<CheckItem> items) {
  ConstantRow row;
  row.index = index;
  row.name = name;
  row.items = std::move(items);
  row.pass = true;
  double worst = -1.0;
  for (const CheckItem& item : row.items) {
    row.pass = row.pass && item.pass;
    const double err = item.relative ? item.rel_err : item.abs_err;
    const double normalized = item.tol > 0.0 ? err / item.tol : err;
    if (normalized > worst) {
      worst = normalized;
      row.computed = item.computed;
      row.expected = item.expected;
      row.abs_err = item.abs_err;
      row.rel_err = item.rel_err;
    }
  }
  return row;
}

// a simplex with unit-scale random vertices, full-dimensional almost surely
ConvexBody random_simplex(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  while (true) {
    std::vector<Vector> pts;
    for (int i = 0; i <= n; ++i) {
      Vector v(n);
      for (int j = 0; j < n; ++j) v[j] = g(rng);
      pts.push_back(v);
    }
    if (affine_rank(pts) == n) return body_from_vertices(n, pts);
  }
}

ConvexBody scale_body(double t, const ConvexBody& body) {
  Matrix g = Matrix::Identity(body.n, body.n) * t;
  return transform(g, body);
}

ConstantRow row_open_orbit_timelike(const ReportConfig& cfg) {
  const Subspace e1p = span_of({unit(4, 1), unit(4, 2), unit(4, 3)});
  const double v = klain_from_crofton(
      CroftonMeasureSpec::open_orbit_deg1(OrbitLabel{1, 0, 0}, -2.5), e1p);
  return finalize(
      1, "line_measure_pos_orbit_at_first_axis_hyperplane",
      {make_item("value", v, -8.0 * kPi / 3.0, 1e-6, true,
                 cfg.tolerance_override)});
}

ConstantRow row_open_orbit_mixed(const ReportConfig& cfg) {
  const Subspace e3p = span_of({unit(4, 0), unit(4, 1), unit(4, 3)});
  const double v_pos = klain_from_crofton(
      CroftonMeasureSpec::open_orbit_deg1(OrbitLabel{1, 0, 0}, -2.5), e3p);
  const double v_neg = klain_from_crofton(
      CroftonMeasureSpec::open_orbit_deg1(OrbitLabel{0, 1, 0}, -2.5), e3p);
  return finalize(2, "line_measures_at_third_axis_hyperplane",
                  {make_item("pos_orbit", v_pos, 0.0, 1e-6, false,
                             cfg.tolerance_override),
                   make_item("neg_orbit", v_neg, -8.0 * kPi / 3.0, 1e-6, true,
                             cfg.tolerance_override)});
}

ConstantRow row_moment_descent(const ReportConfig& cfg) {
  const double v = I_lambda(-2.5);
  return finalize(3, "moment_family_descent_at_minus_five_halves",
                  {make_item("value", v, -4.0 * std::sqrt(2.0) / 3.0, 1e-9,
                             true, cfg.tolerance_override)});
}

ConstantRow row_m00_square_shadow(const ReportConfig& cfg) {
  // full body-level route: torus average of the square's projection areas at
  // the configured trapezoid order, then the cone-point pairing
  Vector z4 = Vector::Zero(4);
  const ConvexBody square = body_from_vertices(
      4, {z4, unit(4, 0), unit(4, 1), unit(4, 0) + unit(4, 1)});
  const TorusAverage phi = average_over_torus(
      [&square](const Subspace& e) { return projection_volume(e, square); },
      cfg.n_tor);
  const double v = pair_m00(phi);
  return finalize(
      4, "cone_point_pairing_with_square_shadow",
      {make_item("value", v, 0.0, 1e-6, false, cfg.tolerance_override)});
}

ConstantRow row_mminus_square_shadow(const ReportConfig& cfg) {
  const Subspace e12 = span_of({unit(4, 0), unit(4, 1)});
  const double v = klain_from_crofton(CroftonMeasureSpec::mminus(), e12);
  return finalize(5, "sheet_difference_pairing_with_square_shadow",
                  {make_item("value", v, 1.0 / 3.0, 1e-4, true,
                             cfg.tolerance_override)});
}

ConstantRow row_beta_vanishing(const ReportConfig& cfg) {
  const double v = 2.0 * std::sqrt(2.0) * beta_fp(-1.5, 1.5);
  return finalize(
      6, "beta_continuation_vanishing",
      {make_item("value", v, 0.0, 1e-10, false, cfg.tolerance_override)});
}

ConstantRow row_haar_averages(const ReportConfig& cfg) {
  const auto eh = CroftonMeasureSpec::euclidean_haar();
  const auto ch = CroftonMeasureSpec::complex_haar();
  const double log2 = std::log(2.0);
  return finalize(
      7, "haar_averages_of_sections",
      {make_item("rotation_avg_kappa1", integrate_kappa(eh, 1), kPi / 6.0,
                 1e-6, true, cfg.tolerance_override),
       make_item("rotation_avg_kappa0", integrate_kappa(eh, 0),
                 (1.0 - log2) / 6.0, 1e-6, true, cfg.tolerance_override),
       make_item("rotation_avg_kappa2", integrate_kappa(eh, 2),
                 (1.0 - log2) / 6.0, 1e-6, true, cfg.tolerance_override),
       make_item("complex_avg_kappa1", integrate_kappa(ch, 1), kPi / 4.0,
                 1e-6, true, cfg.tolerance_override),
       make_item("complex_avg_kappa0", integrate_kappa(ch, 0), 0.0, 1e-6,
                 false, cfg.tolerance_override)});
}

ConstantRow row_hermitian_pairings(const ReportConfig& cfg) {
  // torus averages of the two Hermitian sections (closed forms; the identity
  // behind them is covered by the unit tests of average_over_torus)
  const TorusAverage mu21{[](double z1, double) { return 0.5 * (1.0 - z1 * z1); }};
  const TorusAverage mu20{[](double z1, double) { return 0.5 * (1.0 + z1 * z1); }};
  return finalize(
      8, "pairings_with_hermitian_sections",
      {make_item("cone_point_vs_isotropic_part", pair_m00(mu21), 1.0 / 6.0,
                 1e-5, true, cfg.tolerance_override),
       make_item("cone_point_vs_complex_lines_part", pair_m00(mu20), 0.0,
                 1e-5, false, cfg.tolerance_override),
       make_item("one_sheet_vs_isotropic_part", pair_mplus(mu21), -kPi / 6.0,
                 1e-5, true, cfg.tolerance_override),
       make_item("one_sheet_vs_complex_lines_part", pair_mplus(mu20), 0.0,
                 1e-5, false, cfg.tolerance_override)});
}

ConstantRow row_coefficient_solve(const ReportConfig& cfg) {
  const KlainCoefficientTable t = solve_klain_coefficients();
  return finalize(
      9, "section_coefficients_of_the_distilled_valuations",
      {make_item("a", t.a, 0.0, 1e-5, false, cfg.tolerance_override),
       make_item("b", t.b, 1.0 / (3.0 * kPi), 1e-5, false,
                 cfg.tolerance_override),
       make_item("a_prime", t.a_prime, 0.0, 1e-5, false,
                 cfg.tolerance_override),
       make_item("b_prime", t.b_prime, -1.0 / 3.0, 1e-5, false,
                 cfg.tolerance_override),
       make_item("ratio", t.ratio, -kPi, 1e-4, false,
                 cfg.tolerance_override)});
}

ConstantRow row_dimension_pinned(const ReportConfig& cfg) {
  const int d1 = dim_invariant_valuations(
      DimQuery{1, 1, 1, SpaceKind::Continuous, Parity::All, Group::SOplus});
  const int d2 = dim_invariant_valuations(
      DimQuery{2, 2, 2, SpaceKind::Continuous, Parity::All, Group::SOplus});
  const int d3 = dim_invariant_valuations(
      DimQuery{2, 2, 2, SpaceKind::Generalized, Parity::All, Group::SOplus});
  int mismatches = 0;
  for (int n = 3; n <= 8; ++n) {
    for (int k = 1; k <= n - 1; ++k) {
      const int d = dim_invariant_valuations(DimQuery{
          n - 1, 1, k, SpaceKind::Generalized, Parity::Odd, Group::SOplus});
      if (d != 1) ++mismatches;
    }
  }
  return finalize(
      10, "dimension_table_pinned_entries",
      {make_item("continuous_1_1_degree1", d1, 4.0, 0.5, false,
                 cfg.tolerance_override),
       make_item("continuous_2_2_degree2", d2, 0.0, 0.5, false,
                 cfg.tolerance_override),
       make_item("generalized_2_2_degree2", d3, 2.0, 0.5, false,
                 cfg.tolerance_override),
       make_item("odd_generalized_lorentz_family_mismatches", mismatches, 0.0,
                 0.5, false, cfg.tolerance_override)});
}

ConstantRow row_label_invariance(const ReportConfig& cfg) {
  const std::vector<std::pair<int, int>> sigs = {{1, 1}, {2, 1}, {2, 2},
                                                 {3, 2}};
  int mismatches = 0;
  for (std::size_t s = 0; s < sigs.size(); ++s) {
    const QuadSpace space(sigs[s].first, sigs[s].second);
    const int n = space.n();
    for (int i = 0; i < 200; ++i) {
      const std::uint64_t u = mix_seed(cfg.seed, 1000 * s + i);
      const int k = 1 + static_cast<int>(u % static_cast<std::uint64_t>(n - 1));
      const Subspace e = random_plane(n, k, mix_seed(u, 1));
      const Matrix g = random_pseudo_orthogonal(space, 0.6, mix_seed(u, 2));
      const OrbitLabel before = signature_of_restriction(space, e);
      const OrbitLabel after =
          signature_of_restriction(space, make_subspace(g * e.basis));
      if (before != after) ++mismatches;
    }
  }
  return finalize(11, "orbit_label_invariance_sweep",
                  {make_item("label_mismatches", mismatches, 0.0, 0.5, false,
                             cfg.tolerance_override)});
}

ConstantRow row_distortion_identity(const ReportConfig& cfg) {
  double max_dev = 0.0;
  const QuadSpace s22(2, 2);
  for (int i = 0; i < 100; ++i) {
    const std::uint64_t u = mix_seed(cfg.seed, 5000 + i);
    const int k = 1 + static_cast<int>(u % 3);
    const Subspace e = random_plane(4, k, mix_seed(u, 1));
    const Matrix g = random_pseudo_orthogonal(s22, 0.6, mix_seed(u, 2));
    const double lhs = cos2theta(s22, make_subspace(g * e.basis));
    const double rhs = psi_g(s22, g, e) * cos2theta(s22, e);
    max_dev = std::max(max_dev, std::abs(lhs - rhs));
  }
  double max_rot_dev = 0.0;
  for (int i = 0; i < 50; ++i) {
    const std::uint64_t u = mix_seed(cfg.seed, 6000 + i);
    // block rotations fixing both definite factors are Euclidean isometries
    Matrix g = Matrix::Identity(4, 4);
    g.topLeftCorner(2, 2) =
        random_pseudo_orthogonal(QuadSpace(2, 0), 0.8, mix_seed(u, 1));
    g.bottomRightCorner(2, 2) =
        random_pseudo_orthogonal(QuadSpace(2, 0), 0.8, mix_seed(u, 2));
    const int k = 1 + static_cast<int>(u % 3);
    const Subspace e = random_plane(4, k, mix_seed(u, 3));
    max_rot_dev = std::max(max_rot_dev, std::abs(psi_g(s22, g, e) - 1.0));
  }
  return finalize(12, "distortion_weight_cosine_identity",
                  {make_item("identity_max_deviation", max_dev, 0.0, 1e-8,
                             false, cfg.tolerance_override),
                   make_item("rotation_weight_max_deviation", max_rot_dev, 0.0,
                             1e-12, false, cfg.tolerance_override)});
}

ConstantRow row_finite_part_oracles(const ReportConfig& cfg) {
  std::mt19937_64 rng(mix_seed(cfg.seed, 7000));
  std::uniform_real_distribution<double> lam(-6.0, 3.0);
  std::uniform_int_distribution<int> deg(0, 5);
  double max_dev = 0.0;
  int done = 0;
  while (done < 50) {
    const double l = lam(rng);
    if (std::abs(l - std::round(l)) < 0.05) continue;
    const int j = deg(rng);
    SmoothFn f;
    f.f = [j](double x) { return std::pow(x, j); };
    std::vector<double> taylor(10, 0.0);  // covers subtraction depth at l > -7
    taylor[j] = 1.0;
    f.taylor_at_zero = taylor;
    const MeroScalar r = fp_power_integral(f, Complex(l, 0.0));
    max_dev = std::max(max_dev, std::abs(r.finite_part - 1.0 / (l + j + 1)));
    ++done;
  }
  double max_res = 0.0;
  for (double l : {0.5, -0.4, -1.6, -3.3}) {
    const double lhs = (2.0 * l + 2.0) * I_lambda(l);
    const double rhs = 4.0 * std::sqrt(2.0) - (2.0 * l + 5.0) * I_lambda(l + 1.0);
    max_res = std::max(max_res, std::abs(lhs - rhs));
  }
  return finalize(13, "finite_part_monomials_and_descent_residual",
                  {make_item("monomial_max_deviation", max_dev, 0.0, 1e-9,
                             false, cfg.tolerance_override),
                   make_item("descent_max_residual", max_res, 0.0, 1e-10,
                             false, cfg.tolerance_override)});
}

ConstantRow row_admissible_rank(const ReportConfig& cfg) {
  int mismatches = 0;
  for (int n = 2; n <= 8; ++n) {
    for (int p = 1; p <= n - 1; ++p) {
      const int q = n - p;
      for (int k = 1; k <= n - 1; ++k) {
        const int image = klain_image_dimension(p, q, k);
        const int even = dim_invariant_valuations(DimQuery{
            p, q, k, SpaceKind::Generalized, Parity::Even, Group::SOplus});
        if (image != 2 || even != 2) ++mismatches;
      }
    }
  }
  return finalize(14, "admissible_coefficient_space_rank_sweep",
                  {make_item("mismatches", mismatches, 0.0, 0.5, false,
                             cfg.tolerance_override)});
}

ConstantRow row_lorentz_properties(const ReportConfig& cfg) {
  double max_boost = 0.0;
  double max_hom = 0.0;
  double max_par = 0.0;
  double max_viol = 0.0;
  std::mt19937_64 rng(mix_seed(cfg.seed, 8000));
  const std::vector<QuadSpace> spaces = {QuadSpace(1, 1), QuadSpace(2, 1)};
  for (std::size_t s = 0; s < spaces.size(); ++s) {
    const QuadSpace& space = spaces[s];
    const int n = space.n();
    for (int i = 0; i < 25; ++i) {
      const ConvexBody body = random_simplex(n, rng);
      const double base = phi_minus(space, body);
      const Matrix g =
          random_pseudo_orthogonal(space, 0.8, mix_seed(cfg.seed, 8100 + 50 * s + i));
      max_boost =
          std::max(max_boost, std::abs(phi_minus(space, transform(g, body)) - base));
      const double t = 1.7;
      max_hom = std::max(
          max_hom, std::abs(phi_minus(space, scale_body(t, body)) -
                            std::pow(t, n - 1) * base));
      max_par = std::max(
          max_par, std::abs(phi_minus(space, scale_body(-1.0, body)) + base));
    }
    for (int i = 0; i < 50; ++i) {
      const ConvexBody body = random_simplex(n, rng);
      const double minus = phi_minus(space, body);
      const double plus = phi_plus(space, body);
      max_viol = std::max(max_viol, std::abs(minus) - plus);
    }
  }
  return finalize(
      15, "facet_valuation_invariance_and_comparison",
      {make_item("boost_max_deviation", max_boost, 0.0, 1e-8, false,
                 cfg.tolerance_override),
       make_item("homogeneity_max_residual", max_hom, 0.0, 1e-10, false,
                 cfg.tolerance_override),
       make_item("parity_max_residual", max_par, 0.0, 1e-10, false,
                 cfg.tolerance_override),
       make_item("dominance_max_violation", std::max(0.0, max_viol), 0.0,
                 1e-10, false, cfg.tolerance_override)});
}

ConstantRow row_fourier_symmetry(const ReportConfig& cfg) {
  std::mt19937_64 rng(mix_seed(cfg.seed, 9000));
  std::normal_distribution<double> gauss;
  int invol_mismatches = 0;
  for (int i = 0; i < 100; ++i) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const int p = 1 + static_cast<int>(rng() % (n - 1));
    const int q = n - p;
    const int k = 1 + static_cast<int>(rng() % (n - 1));
    KlainVector v;
    v.p = p;
    v.q = q;
    v.k = k;
    v.coeffs.resize(std::min(k, p) - std::max(0, k - q) + 1);
    for (double& c : v.coeffs) c = gauss(rng);
    const KlainVector w = fourier(fourier(v));
    if (w.p != v.p || w.q != v.q || w.k != v.k || w.coeffs != v.coeffs) {
      ++invol_mismatches;
    }
  }
  int dim_mismatches = 0;
  for (int n = 2; n <= 8; ++n) {
    for (int p = 1; p <= n - 1; ++p) {
      const int q = n - p;
      for (int k = 0; k <= n; ++k) {
        for (Parity parity : {Parity::Even, Parity::Odd, Parity::All}) {
          const int dk = dim_invariant_valuations(DimQuery{
              p, q, k, SpaceKind::Generalized, parity, Group::SOplus});
          const int dnk = dim_invariant_valuations(DimQuery{
              p, q, n - k, SpaceKind::Generalized, parity, Group::SOplus});
          if (dk != dnk) ++dim_mismatches;
        }
      }
    }
  }
  return finalize(16, "fourier_involution_and_degree_symmetry",
                  {make_item("involution_mismatches", invol_mismatches, 0.0,
                             0.5, false, cfg.tolerance_override),
                   make_item("dimension_symmetry_mismatches", dim_mismatches,
                             0.0, 0.5, false, cfg.tolerance_override)});
}

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.10e", x);
  return buf;
}

}  // namespace

std::vector<ConstantRow> reproduction_table(const ReportConfig& config) {
  std::vector<int> wanted = config.rows;
  if (wanted.empty()) {
    for (int i = 1; i <= 16; ++i) wanted.push_back(i);
  }
  std::sort(wanted.begin(), wanted.end());
  wanted.erase(std::unique(wanted.begin(), wanted.end()), wanted.end());
  std::vector<ConstantRow> rows;
  for (int i : wanted) {
    switch (i) {
      case 1: rows.push_back(row_open_orbit_timelike(config)); break;
      case 2: rows.push_back(row_open_orbit_mixed(config)); break;
      case 3: rows.push_back(row_moment_descent(config)); break;
      case 4: rows.push_back(row_m00_square_shadow(config)); break;
      case 5: rows.push_back(row_mminus_square_shadow(config)); break;
      case 6: rows.push_back(row_beta_vanishing(config)); break;
      case 7: rows.push_back(row_haar_averages(config)); break;
      case 8: rows.push_back(row_hermitian_pairings(config)); break;
      case 9: rows.push_back(row_coefficient_solve(config)); break;
      case 10: rows.push_back(row_dimension_pinned(config)); break;
      case 11: rows.push_back(row_label_invariance(config)); break;
      case 12: rows.push_back(row_distortion_identity(config)); break;
      case 13: rows.push_back(row_finite_part_oracles(config)); break;
      case 14: rows.push_back(row_admissible_rank(config)); break;
      case 15: rows.push_back(row_lorentz_properties(config)); break;
      case 16: rows.push_back(row_fourier_symmetry(config)); break;
      default:
        fail(ErrorCode::InvalidInput,
             "row index out of range 1..16: " + std::to_string(i));
    }
  }
  return rows;
}

std::string render_pretty(const std::vector<ConstantRow>& rows) {
  std::ostringstream out;
  for (const ConstantRow& row : rows) {
    char head[160];
    std::snprintf(head, sizeof(head), "[%s] %02d %s\n",
                  row.pass ? "PASS" : "FAIL", row.index, row.name.c_str());
    out << head;
    for (const CheckItem& item : row.items) {
      out << "    " << (item.pass ? "ok  " : "FAIL") << ' ' << item.name
          << ": computed=" << fmt(item.computed)
          << " expected=" << fmt(item.expected)
          << " abs_err=" << fmt(item.abs_err)
          << " rel_err=" << fmt(item.rel_err) << " tol=" << fmt(item.tol)
          << (item.relative ? " (rel)" : " (abs)") << '\n';
    }
  }
  int failures = 0;
  for (const ConstantRow& row : rows) {
    if (!row.pass) ++failures;
  }
  if (failures == 0) {
    out << "ALL " << rows.size() << " ROWS PASS\n";
  } else {
    out << failures << " OF " << rows.size() << " ROWS FAIL\n";
  }
  return out.str();
}

std::string render_json(const std::vector<ConstantRow>& rows) {
  Json out = Json::array();
  for (const ConstantRow& row : rows) {
    Json jr;
    jr["index"] = row.index;
    jr["name"] = row.name;
    jr["computed"] = row.computed;
    jr["expected"] = row.expected;
    jr["abs_err"] = row.abs_err;
    jr["rel_err"] = row.rel_err;
    jr["pass"] = row.pass;
    Json items = Json::array();
    for (const CheckItem& item : row.items) {
      Json ji;
      ji["name"] = item.name;
      ji["computed"] = item.computed;
      ji["expected"] = item.expected;
      ji["abs_err"] = item.abs_err;
      ji["rel_err"] = item.rel_err;
      ji["tol"] = item.tol;
      ji["relative"] = item.relative;
      ji["pass"] = item.pass;
      items.push_back(ji);
    }
    jr["items"] = items;
    out.push_back(jr);
  }
  return out.dump(2) + "\n";
}

std::string render_csv(const std::vector<ConstantRow>& rows) {
  std::ostringstream out;
  out << "index,name,computed,expected,abs_err,rel_err,pass\r\n";
  for (const ConstantRow& row : rows) {
    out << row.index << ',' << row.name << ',' << fmt(row.computed) << ','
        << fmt(row.expected) << ',' << fmt(row.abs_err) << ','
        << fmt(row.rel_err) << ',' << (row.pass ? "true" : "false") << "\r\n";
  }
  return out.str();
}

bool all_pass(const std::vector<ConstantRow>& rows) {
  for (const ConstantRow& row : rows) {
    if (!row.pass) return false;
  }
  return true;
}

}  // namespace pseudovol
