#pragma once
// Core aliases and the library-wide error hierarchy.

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>

namespace pseudovol {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Complex = std::complex<double>;

// Every recoverable failure mode gets a distinct code so callers (and the CLI)
// can react without string-matching messages.
enum class ErrorCode {
  DegenerateSubspace,     // restricted form numerically singular
  NotIsotropic,           // expected a totally isotropic input
  WrongDimension,         // vector/matrix size mismatch with the ambient space
  InfeasibleLabel,        // orbit label (a,b) outside the admissible range
  NotSplitSignature,      // operation requires p == q
  InfeasibleTarget,       // restriction target cannot host the degree
  PoleHit,                // evaluation parameter sits on a pole
  DepthExceeded,          // regularization depth beyond supported maximum
  IndeterminateBeta,      // Beta continuation at a non-removable singularity
  SingularSupportCollision, // measure support touches the kernel's singular set
  NonSmoothAtLightCone,   // derivative stencil failed to converge at the cone
  DegenerateBody,         // convex body with empty interior where forbidden
  UnsupportedDimension,   // operation not implemented for this ambient n
  DimensionMismatch,      // two objects live in different spaces
  InvalidInput,           // malformed user input (CLI / JSON)
  SingularMap,            // linear map must be invertible
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::DegenerateSubspace: return "DegenerateSubspace";
    case ErrorCode::NotIsotropic: return "NotIsotropic";
    case ErrorCode::WrongDimension: return "WrongDimension";
    case ErrorCode::InfeasibleLabel: return "InfeasibleLabel";
    case ErrorCode::NotSplitSignature: return "NotSplitSignature";
    case ErrorCode::InfeasibleTarget: return "InfeasibleTarget";
    case ErrorCode::PoleHit: return "PoleHit";
    case ErrorCode::DepthExceeded: return "DepthExceeded";
    case ErrorCode::IndeterminateBeta: return "IndeterminateBeta";
    case ErrorCode::SingularSupportCollision: return "SingularSupportCollision";
    case ErrorCode::NonSmoothAtLightCone: return "NonSmoothAtLightCone";
    case ErrorCode::DegenerateBody: return "DegenerateBody";
    case ErrorCode::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::SingularMap: return "SingularMap";
  }
  return "Unknown";
}

// Numerical policy constants shared across modules.
namespace tol {
inline constexpr double signature_eps = 1e-9;   // eigenvalue cutoff for inertia
inline constexpr double orthonormal_eps = 1e-12;
inline constexpr double projector_eps = 1e-10;  // subspace equality
inline constexpr double facet_axis_eps = 1e-12; // time-component snap to zero
inline constexpr double closure_eps = 1e-9;     // Minkowski facet-closure check
}  // namespace tol

}  // namespace pseudovol
