#pragma once

// Linear subspaces of R^n represented by Euclidean-orthonormal basis columns.

#include <initializer_list>

#include "pseudovol/core.hpp"

namespace pseudovol {

struct Subspace {
  int n = 0;  // ambient dimension
  int k = 0;  // plane dimension
  Matrix basis;  // n x k, columns orthonormal to 1e-12

  Matrix projector() const { return basis * basis.transpose(); }
};

// Orthonormalizes the columns of `spanning` (n x k, full column rank) into a
// Subspace. Throws InvalidInput when the columns are dependent.
Subspace make_subspace(const Matrix& spanning);

// Convenience for tests: span of explicitly listed vectors.
Subspace span_of(std::initializer_list<Vector> vectors);

// Basis-independent equality through projector comparison.
bool subspace_equal(const Subspace& a, const Subspace& b,
                    double tol = tol::projector_eps);

// Validates the orthonormality invariant (used by constructors and tests).
void check_orthonormal(const Matrix& basis, double tol = tol::orthonormal_eps);

}  // namespace pseudovol
