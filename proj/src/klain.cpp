#include "pseudovol/klain.hpp"

#include <cmath>

#include "pseudovol/grassmann.hpp"

namespace pseudovol {

KlainVector make_klain_vector(int p, int q, int k,
                              std::vector<double> coeffs) {
  if (p < 0 || q < 0 || p + q < 1 || k < 0 || k > p + q)
    fail(ErrorCode::InvalidInput, "coefficient vector needs 0 <= k <= p+q");
  KlainVector v;
  v.p = p;
  v.q = q;
  v.k = k;
  if (static_cast<int>(coeffs.size()) != v.size())
    fail(ErrorCode::InvalidInput,
         "coefficient count must equal the open-orbit count "
         "min(k,p) - max(0,k-q) + 1");
  v.coeffs = std::move(coeffs);
  return v;
}

double kappa_value(const QuadSpace& space, int a, const Subspace& E) {
  const int k = E.k;
  if (a < std::max(0, k - space.q) || a > std::min(k, space.p))
    fail(ErrorCode::InfeasibleLabel,
         "section index outside the open-orbit range");
  const OrbitLabel lab = signature_of_restriction(space, E);
  if (lab.r != 0 || lab.a != a) return 0.0;
  return std::sqrt(std::abs(cos2theta(space, E)));
}

double evaluate(const KlainVector& v, const QuadSpace& space,
                const Subspace& E) {
  if (v.p != space.p || v.q != space.q)
    fail(ErrorCode::DimensionMismatch,
         "coefficient vector belongs to a different quadratic space");
  if (E.k != v.k)
    fail(ErrorCode::DimensionMismatch,
         "plane dimension does not match the coefficient degree");
  double sum = 0.0;
  for (int a = v.a_min(); a <= v.a_max(); ++a)
    if (v.coeff(a) != 0.0) sum += v.coeff(a) * kappa_value(space, a, E);
  return sum;
}

bool is_in_klain_image(const KlainVector& v) {
  return is_in_klain_image(v, 1e-12);
}

bool is_in_klain_image(const KlainVector& v, double tolerance) {
  for (int a = v.a_min() + 1; a <= v.a_max() - 1; ++a)
    if (std::abs(v.coeff(a + 1) + v.coeff(a - 1)) > tolerance) return false;
  return true;
}

KlainVector fourier(const KlainVector& v) {
  KlainVector out;
  out.p = v.p;
  out.q = v.q;
  out.k = v.p + v.q - v.k;
  out.coeffs.assign(out.size(), 0.0);
  for (int a = v.a_min(); a <= v.a_max(); ++a) out.coeff(v.p - a) = v.coeff(a);
  return out;
}

KlainVector j_action(const KlainVector& v) {
  if (v.p != v.q)
    fail(ErrorCode::NotSplitSignature,
         "the factor-swap symmetry requires p == q");
  KlainVector out = v;
  for (int a = v.a_min(); a <= v.a_max(); ++a) out.coeff(a) = v.coeff(v.k - a);
  return out;
}

KlainVector restrict(const KlainVector& v, int p2, int q2) {
  if (p2 < 0 || q2 < 0 || p2 > v.p || q2 > v.q || v.k > p2 + q2)
    fail(ErrorCode::InfeasibleTarget,
         "restriction target cannot host this degree");
  KlainVector out;
  out.p = p2;
  out.q = q2;
  out.k = v.k;
  out.coeffs.assign(out.size(), 0.0);
  for (int a = out.a_min(); a <= out.a_max(); ++a) out.coeff(a) = v.coeff(a);
  return out;
}

}  // namespace pseudovol
