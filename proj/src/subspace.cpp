#include "pseudovol/subspace.hpp"

#include <Eigen/QR>

namespace pseudovol {

void check_orthonormal(const Matrix& basis, double tol) {
  const Matrix gram = basis.transpose() * basis;
  const double dev =
      (gram - Matrix::Identity(basis.cols(), basis.cols())).norm();
  if (dev > tol)
    fail(ErrorCode::InvalidInput,
         "subspace basis columns are not orthonormal (deviation " +
             std::to_string(dev) + ")");
}

Subspace make_subspace(const Matrix& spanning) {
  const int n = static_cast<int>(spanning.rows());
  const int k = static_cast<int>(spanning.cols());
  if (k < 1 || k > n)
    fail(ErrorCode::WrongDimension,
         "subspace dimension must satisfy 1 <= k <= n");
  Eigen::ColPivHouseholderQR<Matrix> qr(spanning);
  qr.setThreshold(1e-10);
  if (qr.rank() < k)
    fail(ErrorCode::InvalidInput, "spanning vectors are linearly dependent");
  Matrix q = qr.householderQ() * Matrix::Identity(n, k);
  Subspace s;
  s.n = n;
  s.k = k;
  s.basis = q;
  check_orthonormal(s.basis);
  return s;
}

Subspace span_of(std::initializer_list<Vector> vectors) {
  if (vectors.size() == 0)
    fail(ErrorCode::WrongDimension, "span_of: empty vector list");
  const int n = static_cast<int>(vectors.begin()->size());
  Matrix m(n, static_cast<int>(vectors.size()));
  int col = 0;
  for (const Vector& v : vectors) {
    if (v.size() != n)
      fail(ErrorCode::DimensionMismatch, "span_of: mixed vector dimensions");
    m.col(col++) = v;
  }
  return make_subspace(m);
}

bool subspace_equal(const Subspace& a, const Subspace& b, double tol) {
  if (a.n != b.n || a.k != b.k) return false;
  return (a.projector() - b.projector()).norm() < tol;
}

}  // namespace pseudovol
