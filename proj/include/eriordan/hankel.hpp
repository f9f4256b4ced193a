#pragma once

#include <cstddef>
#include <vector>

#include "eriordan/matrix.hpp"
#include "eriordan/orthopoly.hpp"
#include "eriordan/poly.hpp"
#include "eriordan/scalar.hpp"

namespace eriordan {

/// (n+1)x(n+1) matrix with entry (i, j) = a_{i+j}.
Matrix hankel_matrix(const MomentSequence& seq, std::size_t n);

/// Fraction-free (Bareiss) determinant over Q[z]. Entries with denominators
/// are handled by scaling each column by the lcm of its denominators first.
Scalar det_bareiss(const Matrix& m);

/// Gaussian elimination over the fraction field Q(z).
Scalar det_gaussian(const Matrix& m);

/// h_n = det(a_{i+j})_{i,j=0..n}; needs 2n+1 terms.
Scalar hankel_det(const MomentSequence& seq, std::size_t n);

/// h_0..h_nmax.
std::vector<Scalar> hankel_transform(const MomentSequence& seq, std::size_t nmax);

/// h_n = a0^{n+1} prod_{k=1..n} beta_k^{n-k+1}, n = 0..nmax.
std::vector<Scalar> hankel_from_betas(const JacobiParams& j, std::size_t nmax);

/// b_n = sum_k C(n, k) a_k.
MomentSequence binomial_transform(const MomentSequence& seq);

}  // namespace eriordan
