#pragma once
// Invariant plane-function data: the per-orbit sections kappa_a, linear
// combinations of them, the admissibility test for restrictions of genuine
// valuations, and the duality / split-symmetry / restriction actions on the
// coefficient vectors.

#include <vector>

#include "pseudovol/core.hpp"
#include "pseudovol/quadform.hpp"
#include "pseudovol/subspace.hpp"

namespace pseudovol {

// Coefficient vector c_a over the open-orbit index range
// a in [max(0, k-q), min(k, p)].
struct KlainVector {
  int p = 0;
  int q = 0;
  int k = 0;
  std::vector<double> coeffs;  // indexed from a_min() upward

  int a_min() const { return std::max(0, k - q); }
  int a_max() const { return std::min(k, p); }
  int size() const { return a_max() - a_min() + 1; }
  double coeff(int a) const { return coeffs[a - a_min()]; }
  double& coeff(int a) { return coeffs[a - a_min()]; }
};

// Validates the index range and the coefficient count.
KlainVector make_klain_vector(int p, int q, int k,
                              std::vector<double> coeffs);

// |cos2theta(E)|^(1/2) when the restricted form has signature (a, k-a, 0),
// zero on every other orbit (including all degenerate planes).
double kappa_value(const QuadSpace& space, int a, const Subspace& E);

// Sum over a of c_a * kappa_value(a, E).
double evaluate(const KlainVector& v, const QuadSpace& space,
                const Subspace& E);

// True when c_{a+1} + c_{a-1} = 0 for every interior index a; vacuous for
// ranges with at most two entries. The strict overload uses an exact-input
// tolerance of 1e-12; numerically produced vectors can pass their own.
bool is_in_klain_image(const KlainVector& v);
bool is_in_klain_image(const KlainVector& v, double tolerance);

// Duality on coefficients: degree k -> n-k with c'_{p-a} = c_a.
KlainVector fourier(const KlainVector& v);

// Coefficient reversal c'_a = c_{k-a} induced by swapping the two factors of
// a split (p = p) space; requires p == q.
KlainVector j_action(const KlainVector& v);

// Retain the coefficients that survive on a subspace of signature (p2, q2);
// the target index range is always a sub-range of the source's.
KlainVector restrict(const KlainVector& v, int p2, int q2);

}  // namespace pseudovol
