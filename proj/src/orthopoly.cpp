#include "eriordan/orthopoly.hpp"

#include "eriordan/error.hpp"

namespace eriordan {

void validate(const JacobiParams& j) {
  if (j.alpha.empty()) throw math_error("Jacobi parameters need at least one alpha");
  if (j.beta.size() + 1 != j.alpha.size()) throw math_error("Jacobi parameters need |beta| = |alpha| - 1");
  for (std::size_t k = 0; k < j.beta.size(); ++k)
    if (j.beta[k].is_zero()) throw math_error("beta_" + std::to_string(k + 1) + " is zero");
}

namespace {

// alpha/beta with zeros past the stored depth.
Scalar alpha_or_zero(const JacobiParams& j, std::size_t n) { return n < j.alpha.size() ? j.alpha[n] : Scalar(); }
Scalar beta_or_zero(const JacobiParams& j, std::size_t n) {
  return n >= 1 && n <= j.beta.size() ? j.beta[n - 1] : Scalar();
}

Matrix recurrence_array(const JacobiParams& j, std::size_t order) {
  Matrix p(order + 1, order + 1);
  p(0, 0) = 1;
  for (std::size_t n = 0; n < order; ++n) {
    const Scalar a = alpha_or_zero(j, n);
    const Scalar b = beta_or_zero(j, n);
    for (std::size_t k = 0; k <= n + 1; ++k) {
      Scalar v;
      if (k >= 1) v += p(n, k - 1);
      if (k <= n) v -= a * p(n, k);
      if (n >= 1 && k <= n - 1) v -= b * p(n - 1, k);
      p(n + 1, k) = v;
    }
  }
  return p;
}

}  // namespace

Matrix coeff_array_from_jacobi(const JacobiParams& j, std::size_t order) {
  if (order > j.depth()) throw math_error("insufficient Jacobi parameters for order " + std::to_string(order));
  return recurrence_array(j, order);
}

MomentSequence moments_from_jacobi(const JacobiParams& j, std::size_t count) {
  if (count == 0) return {};
  if (count > 2 * j.depth()) throw math_error("insufficient Jacobi parameters for " + std::to_string(count) + " moments");
  // Moments a_n with n < 2M only see levels below M, so padding is harmless.
  const Matrix inv = lower_triangular_inverse(recurrence_array(j, count - 1));
  MomentSequence m;
  for (std::size_t n = 0; n < count; ++n) m.terms.push_back(j.a0 * inv(n, 0));
  return m;
}

Series jfraction_expand(const JacobiParams& j, std::size_t order) {
  const std::size_t depth = j.depth();
  if (depth == 0 || order >= 2 * depth) throw math_error("insufficient Jacobi parameters for order " + std::to_string(order));
  const Series x = Series::x(order);
  const Series x2 = series_mul(x, x);
  Series tail = Series::one(order);
  for (std::size_t k = depth; k-- > 0;) {
    Series den = Series::one(order) - j.alpha[k] * x;
    if (k + 1 < depth) den -= j.beta_at(k + 1) * series_mul(x2, tail);
    tail = series_div(Series::one(order), den);
  }
  return j.a0 * tail;
}

JacobiRecovery jacobi_from_moments(const MomentSequence& m) {
  const auto& a = m.terms;
  if (a.size() < 2) throw math_error("need at least 2 moments");
  if (a[0].is_zero()) throw math_error("leading moment a_0 is zero");
  const std::size_t last = a.size() - 1;

  JacobiRecovery out;
  out.params.a0 = a[0];
  // Mixed moments sigma_{k,l} = <p_k, x^l>, kept for rows k-1 and k-2.
  std::vector<Scalar> prev2;
  std::vector<Scalar> prev(a.begin(), a.end());
  out.params.alpha.push_back(a[1] / a[0]);
  for (std::size_t k = 1; 2 * k + 1 <= last; ++k) {
    const Scalar alpha_prev = out.params.alpha[k - 1];
    const Scalar beta_prev = k >= 2 ? out.params.beta[k - 2] : Scalar();
    std::vector<Scalar> cur(last + 1);
    for (std::size_t l = k; l + k <= last; ++l) {
      Scalar v = prev[l + 1] - alpha_prev * prev[l];
      if (k >= 2) v -= beta_prev * prev2[l];
      cur[l] = v;
    }
    if (cur[k].is_zero()) {
      out.terminated = true;
      break;
    }
    out.params.beta.push_back(cur[k] / prev[k - 1]);
    out.params.alpha.push_back(cur[k + 1] / cur[k] - prev[k] / prev[k - 1]);
    prev2 = std::move(prev);
    prev = std::move(cur);
  }
  out.depth = out.params.alpha.size();
  return out;
}

}  // namespace eriordan
