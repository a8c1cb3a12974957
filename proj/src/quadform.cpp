#include "pseudovol/quadform.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <algorithm>
#include <cmath>
#include <random>

namespace pseudovol {

namespace {

void check_vector(const QuadSpace& space, const Vector& v, const char* who) {
  if (v.size() != space.n())
    fail(ErrorCode::DimensionMismatch,
         std::string(who) + ": vector dimension does not match the space");
}

void check_plane(const QuadSpace& space, const Subspace& e, const char* who) {
  if (e.n != space.n())
    fail(ErrorCode::DimensionMismatch,
         std::string(who) + ": plane lives in a different ambient dimension");
}

// Orthonormal basis of the kernel of `m` (rows x n), given the kernel
// dimension is n - rank.
Matrix kernel_basis(const Matrix& m) {
  Eigen::FullPivLU<Matrix> lu(m);
  lu.setThreshold(1e-10);
  if (lu.dimensionOfKernel() == 0) return Matrix(m.cols(), 0);
  Matrix k = lu.kernel();
  Eigen::HouseholderQR<Matrix> qr(k);
  return qr.householderQ() * Matrix::Identity(k.rows(), k.cols());
}

}  // namespace

bool label_feasible(const QuadSpace& space, const OrbitLabel& label) {
  const int k = label.k();
  if (label.a < 0 || label.b < 0 || label.r < 0) return false;
  if (k > space.n()) return false;
  if (label.a > space.p || label.b > space.q) return false;
  if (label.a < std::max(0, k - space.q)) return false;
  if (label.b < std::max(0, k - space.p)) return false;
  return true;
}

double q_inner(const QuadSpace& space, const Vector& u, const Vector& v) {
  check_vector(space, u, "q_inner");
  check_vector(space, v, "q_inner");
  double s = 0.0;
  for (int i = 0; i < space.n(); ++i)
    s += (i < space.p ? 1.0 : -1.0) * u[i] * v[i];
  return s;
}

OrbitLabel signature_of_restriction(const QuadSpace& space,
                                    const Subspace& e) {
  check_plane(space, e, "signature_of_restriction");
  const Matrix m = e.basis.transpose() * space.gramQ() * e.basis;
  Eigen::SelfAdjointEigenSolver<Matrix> es(m);
  OrbitLabel out;
  for (int i = 0; i < e.k; ++i) {
    const double ev = es.eigenvalues()[i];
    if (ev > tol::signature_eps)
      ++out.a;
    else if (ev < -tol::signature_eps)
      ++out.b;
    else
      ++out.r;
    const double mag = std::abs(ev);
    if (mag > tol::signature_eps / 100.0 && mag < tol::signature_eps * 100.0)
      out.near_threshold_warning = true;
  }
  return out;
}

Subspace q_complement(const QuadSpace& space, const Subspace& e) {
  check_plane(space, e, "q_complement");
  // x is Q-orthogonal to E iff B^T gramQ x = 0.
  const Matrix rows = e.basis.transpose() * space.gramQ();
  Subspace out;
  out.n = space.n();
  out.basis = kernel_basis(rows);
  out.k = static_cast<int>(out.basis.cols());
  check_orthonormal(out.basis);
  return out;
}

std::vector<Vector> q_orthonormal_basis(const QuadSpace& space,
                                        const Subspace& e) {
  check_plane(space, e, "q_orthonormal_basis");
  const Matrix m = e.basis.transpose() * space.gramQ() * e.basis;
  Eigen::SelfAdjointEigenSolver<Matrix> es(m);
  double min_mag = 1e300;
  for (int i = 0; i < e.k; ++i)
    min_mag = std::min(min_mag, std::abs(es.eigenvalues()[i]));
  if (min_mag < tol::signature_eps)
    fail(ErrorCode::DegenerateSubspace,
         "q_orthonormal_basis: restricted form is numerically singular");
  // eigenvalues ascending; walk from the top so positives come first
  std::vector<Vector> out;
  out.reserve(e.k);
  for (int i = e.k - 1; i >= 0; --i) {
    const double ev = es.eigenvalues()[i];
    Vector v = e.basis * es.eigenvectors().col(i);
    out.push_back(v / std::sqrt(std::abs(ev)));
  }
  return out;
}

Subspace isotropic_complement(const QuadSpace& space, const Subspace& e) {
  check_plane(space, e, "isotropic_complement");
  if (space.n() % 2 != 0 || e.k * 2 != space.n())
    fail(ErrorCode::WrongDimension,
         "isotropic_complement: requires n = 2k (middle-dimensional plane)");
  const Matrix m = e.basis.transpose() * space.gramQ() * e.basis;
  if (m.cwiseAbs().maxCoeff() > 1e-10)
    fail(ErrorCode::NotIsotropic,
         "isotropic_complement: plane is not totally isotropic");
  // Euclidean complement: kernel of B^T.
  Subspace out;
  out.n = space.n();
  out.basis = kernel_basis(e.basis.transpose());
  out.k = static_cast<int>(out.basis.cols());
  check_orthonormal(out.basis);
  return out;
}

Subspace constructive_plane(const QuadSpace& space, const OrbitLabel& label) {
  if (!label_feasible(space, label))
    fail(ErrorCode::InfeasibleLabel,
         "constructive_plane: label (" + std::to_string(label.a) + "," +
             std::to_string(label.b) + "," + std::to_string(label.r) +
             ") infeasible in signature (" + std::to_string(space.p) + "," +
             std::to_string(space.q) + ")");
  if (label.k() < 1)
    fail(ErrorCode::WrongDimension,
         "constructive_plane: planes must have dimension >= 1");
  const int n = space.n();
  Matrix span(n, label.k());
  span.setZero();
  int col = 0;
  for (int i = 0; i < label.r; ++i, ++col) {
    span(i, col) = 1.0;              // e_{i+1}
    span(space.p + i, col) = 1.0;    // + e_{p+i+1}
  }
  for (int i = 0; i < label.a; ++i, ++col) span(label.r + i, col) = 1.0;
  for (int i = 0; i < label.b; ++i, ++col)
    span(space.p + label.r + i, col) = 1.0;
  return make_subspace(span);
}

Matrix matrix_exp(const Matrix& a) {
  const int n = static_cast<int>(a.rows());
  int s = 0;
  double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
  while (norm > 0.5) {
    norm *= 0.5;
    ++s;
  }
  const Matrix b = a / std::pow(2.0, s);
  // Taylor series of exp(b) with ||b|| <= 1/2 converges well past double
  // precision in ~25 terms.
  Matrix term = Matrix::Identity(n, n);
  Matrix sum = term;
  for (int j = 1; j <= 30; ++j) {
    term = term * b / static_cast<double>(j);
    sum += term;
  }
  for (int j = 0; j < s; ++j) sum = sum * sum;
  return sum;
}

Matrix random_pseudo_orthogonal(const QuadSpace& space, double scale,
                                std::uint64_t seed) {
  const int n = space.n();
  if (scale == 0.0) return Matrix::Identity(n, n);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-scale, scale);
  Matrix omega = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double x = u(rng);
      omega(i, j) = x;
      omega(j, i) = -x;
    }
  // A = gramQ * omega satisfies A^T gramQ + gramQ A = 0.
  return matrix_exp(space.gramQ() * omega);
}

Matrix boost_1_1(double alpha) {
  Matrix g(2, 2);
  g << std::cosh(alpha), std::sinh(alpha), std::sinh(alpha), std::cosh(alpha);
  return g;
}

}  // namespace pseudovol
