#ifndef HYPERMAP_RECURSION_HPP_
#define HYPERMAP_RECURSION_HPP_

#include <stdexcept>
#include <vector>

#include "hypermap/bigint.hpp"
#include "hypermap/bivar_poly.hpp"
#include "hypermap/closed_form.hpp"

namespace hypermap {

/// Two consecutive generating polynomials, P_{r_current - 1} and P_{r_current}.
struct RecurrenceState {
  unsigned r_current = 0;
  BivarPoly p_prev;
  BivarPoly p_curr;
};

inline RecurrenceState recursion_init() {
  const BivarPoly mn = BivarPoly::monomial(1, 1, 1);
  return {2, mn, mn * (BivarPoly::m() + BivarPoly::n())};
}

/// One application of
///
///   (r+3) P_{r+2} = (2r+3)(m+n) P_{r+1} + r[(r+1)^2 - (m-n)^2] P_r
///
/// with r = state.r_current - 1.
inline RecurrenceState recursion_step(const RecurrenceState& state) {
  if (state.r_current < 2) throw std::invalid_argument("recursion_step: state must start at r >= 2");
  const long r = static_cast<long>(state.r_current) - 1;
  const BivarPoly m_plus_n = BivarPoly::m() + BivarPoly::n();
  const BivarPoly m_minus_n = BivarPoly::m() - BivarPoly::n();
  const BivarPoly bracket = BivarPoly::constant(BigInt((r + 1) * (r + 1))) - m_minus_n * m_minus_n;

  BivarPoly next = BigInt(2 * r + 3) * (m_plus_n * state.p_curr);
  next += BigInt(r) * (bracket * state.p_prev);
  return {state.r_current + 1, state.p_curr, poly_div_exact(next, BigInt(r + 3))};
}

/// P_1, ..., P_max_r in one pass.
inline std::vector<BivarPoly> recursion_sequence(unsigned max_r) {
  std::vector<BivarPoly> out;
  if (max_r == 0) return out;
  RecurrenceState state = recursion_init();
  out.push_back(state.p_prev);
  if (max_r >= 2) out.push_back(state.p_curr);
  while (state.r_current < max_r) {
    state = recursion_step(state);
    out.push_back(state.p_curr);
  }
  return out;
}

inline BivarPoly recursion_p(unsigned r) {
  if (r == 0) throw std::invalid_argument("recursion_p: r must be positive");
  return recursion_sequence(r).back();
}

// Recurrence certificate.
//
// With F(r, k) the k-th summand of the closed form and G(r, k) its companion,
//
//   (r+3) F(r+2,k) - (2r+3)(m+n) F(r+1,k) + r[(m-n)^2 - (r+1)^2] F(r,k)
//       = G(r,k+1) - G(r,k).
//
// Both sides are multiplied through by (r+2)! so the check runs over
// integer polynomials.

/// The cubic factor of G(r, k).
inline BivarPoly certificate_bracket(long k, long r) {
  // k^2 r - 3 k r^2 + 2 r^3 + k^2 - 7 k r + 7 r^2 - 4 k + 8 r + 3
  const BigInt c0 = k * k * r - 3 * k * r * r + 2 * r * r * r + k * k - 7 * k * r + 7 * r * r - 4 * k +
                    8 * r + 3;
  // + (k - r - 1)(m + n) - (r + 3) m n
  const BigInt linear = k - r - 1;
  BivarPoly out = BivarPoly::constant(c0);
  out.add_term(1, 0, linear);
  out.add_term(0, 1, linear);
  out.add_term(1, 1, BigInt(-(r + 3)));
  return out;
}

namespace detail {

/// (-1)^sign_power * C(n, k)
inline BigInt signed_binomial(long n, long k, long sign_power) {
  BigInt b = binomial(n, k);
  return (sign_power % 2 == 0) ? b : BigInt(-b);
}

/// (r+2)! F(s, k) for s in {r, r+1, r+2}.
inline BivarPoly scaled_summand(long s, long k, long r) {
  BigInt scale = signed_binomial(s - 1, k, k);
  if (scale == 0) return {};
  for (long i = s + 1; i <= r + 2; ++i) scale *= i;
  const UniPoly factor = rising_product(k, static_cast<unsigned>(s));
  return scale * outer_product(factor, factor);
}

}  // namespace detail

/// (r+2)! G(r, k). The factorial quotient (m+r-k)!/(m-k-1)! is the product
/// of the r+1 consecutive factors (m-k)...(m+r-k).
inline BivarPoly scaled_companion(long r, long k) {
  const BigInt sign_binom = detail::signed_binomial(r, k - 1, k);
  if (sign_binom == 0) return {};
  const UniPoly factor = rising_product(k, static_cast<unsigned>(r + 1));
  return sign_binom * (outer_product(factor, factor) * certificate_bracket(k, r));
}

/// LHS - RHS of the certificate identity, scaled by (r+2)!.
inline BivarPoly certificate_residual(long r, long k) {
  if (r < 1) throw std::invalid_argument("certificate_residual: r must be positive");
  const BivarPoly m_plus_n = BivarPoly::m() + BivarPoly::n();
  const BivarPoly m_minus_n = BivarPoly::m() - BivarPoly::n();
  const BivarPoly bracket = m_minus_n * m_minus_n - BivarPoly::constant(BigInt((r + 1) * (r + 1)));

  BivarPoly lhs = BigInt(r + 3) * detail::scaled_summand(r + 2, k, r);
  lhs -= BigInt(2 * r + 3) * (m_plus_n * detail::scaled_summand(r + 1, k, r));
  lhs += BigInt(r) * (bracket * detail::scaled_summand(r, k, r));

  const BivarPoly rhs = scaled_companion(r, k + 1) - scaled_companion(r, k);
  return lhs - rhs;
}

inline bool verify_certificate(long r, long k) { return certificate_residual(r, k).is_zero(); }

/// Sums G(r, k+1) - G(r, k) over k = 0..r+1, the full support of G.
inline bool telescoping_check(long r) {
  if (r < 1) throw std::invalid_argument("telescoping_check: r must be positive");
  BivarPoly sum;
  for (long k = 0; k <= r + 1; ++k) {
    sum += scaled_companion(r, k + 1);
    sum -= scaled_companion(r, k);
  }
  return sum.is_zero();
}

}  // namespace hypermap

#endif  // HYPERMAP_RECURSION_HPP_
