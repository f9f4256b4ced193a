#pragma once

#include <cstddef>
#include <vector>

#include "eriordan/matrix.hpp"
#include "eriordan/scalar.hpp"
#include "eriordan/series.hpp"

namespace eriordan {

/// Recurrence data p_{n+1}(x) = (x - alpha_n) p_n(x) - beta_n p_{n-1}(x),
/// plus the leading moment a0 of the continued fraction.
///
/// alpha holds alpha_0..alpha_{M-1}; beta holds beta_1..beta_{M-1}, so
/// beta[k-1] is beta_k.
struct JacobiParams {
  Scalar a0 = 1;
  std::vector<Scalar> alpha;
  std::vector<Scalar> beta;

  std::size_t depth() const noexcept { return alpha.size(); }
  const Scalar& beta_at(std::size_t k) const { return beta.at(k - 1); }

  friend bool operator==(const JacobiParams&, const JacobiParams&) = default;
};

/// Throws math_error unless |beta| = |alpha| - 1 and every beta is nonzero.
void validate(const JacobiParams& j);

struct MomentSequence {
  std::vector<Scalar> terms;

  friend bool operator==(const MomentSequence&, const MomentSequence&) = default;
};

/// Rows 0..order of the monic polynomial coefficient array (row n holds the
/// coefficients of p_n in ascending powers of x). Needs order <= depth.
Matrix coeff_array_from_jacobi(const JacobiParams& j, std::size_t order);

/// First `count` moments a_0..a_{count-1}: column 0 of the inverse of the
/// coefficient array, scaled by a0. Exact for count <= 2*depth.
MomentSequence moments_from_jacobi(const JacobiParams& j, std::size_t count);

/// Ordinary generating function of the moments from the truncated J-fraction
/// a0/(1 - alpha_0 x - beta_1 x^2/(1 - alpha_1 x - ...)). Exact for order < 2*depth.
Series jfraction_expand(const JacobiParams& j, std::size_t order);

/// Result of recovering recurrence coefficients from moments.
struct JacobiRecovery {
  JacobiParams params;
  /// Number of recovered alphas.
  std::size_t depth = 0;
  /// True when some beta_k vanished: the moments come from a measure with
  /// finite support and the recurrence stops at `depth`.
  bool terminated = false;
};

/// Chebyshev's algorithm on raw moments. a_0..a_L yield alpha_k for
/// 2k+1 <= L, with beta_1..beta_{depth-1} alongside.
JacobiRecovery jacobi_from_moments(const MomentSequence& m);

}  // namespace eriordan
