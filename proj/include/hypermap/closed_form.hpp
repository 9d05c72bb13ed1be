#ifndef HYPERMAP_CLOSED_FORM_HPP_
#define HYPERMAP_CLOSED_FORM_HPP_

#include <stdexcept>
#include <vector>

#include "hypermap/bigint.hpp"
#include "hypermap/bivar_poly.hpp"
#include "hypermap/rational.hpp"

namespace hypermap {

/// The monic degree-r polynomial (x - k)(x - k + 1)...(x - k + r - 1).
///
/// This is the gamma quotient Gamma(x + r - k) / Gamma(x - k) written as a
/// product, so it is defined at every integer x, including the points where
/// the quotient has removable poles. Its vanishing at x = 1..k is what cuts
/// the closed-form sum down to min(m, r) nonzero terms.
struct RisingFactorialPoly {
  long base_shift = 0;
  unsigned length = 0;
  UniPoly expanded;  // coefficient i multiplies x^i
};

inline UniPoly rising_product(long shift, unsigned length) {
  UniPoly poly{1};
  for (unsigned j = 0; j < length; ++j) {
    // multiply by (x + c) with c = j - shift
    const BigInt c = static_cast<long>(j) - shift;
    UniPoly next(poly.size() + 1);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] += c * poly[i];
    }
    poly = std::move(next);
  }
  return poly;
}

inline RisingFactorialPoly rising_ratio(long k, unsigned r) {
  return {k, r, rising_product(k, r)};
}

inline BigInt eval_uni(const UniPoly& p, const BigInt& x) {
  BigInt acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

/// P_r(m, n) from the closed-form hypergeometric sum
///
///   P_r = (1/r!) sum_{k=0}^{r-1} (-1)^k C(r-1, k) [m - k]^(r) [n - k]^(r)
///
/// where [x]^(r) is the rising product x(x+1)...(x+r-1). The sum is carried
/// in integers and divided by r! once at the end.
inline BivarPoly closed_form_p(unsigned r) {
  if (r == 0) throw std::invalid_argument("closed_form_p: r must be positive");
  const std::vector<BigInt> binom = pascal_row(r - 1);
  BivarPoly sum;
  for (unsigned k = 0; k < r; ++k) {
    const UniPoly factor = rising_product(k, r);
    BivarPoly term = outer_product(factor, factor);
    term *= (k % 2 == 0) ? binom[k] : BigInt(-binom[k]);
    sum += term;
  }
  return poly_div_exact(sum, factorial(r));
}

/// Unsigned Stirling numbers of the first kind c_r(1..r): the number of
/// permutations of r elements with exactly k cycles, read off as the
/// coefficients of m(m+1)...(m+r-1).
inline std::vector<BigInt> stirling_row(unsigned r) {
  if (r == 0) throw std::invalid_argument("stirling_row: r must be positive");
  UniPoly rising = rising_ratio(0, r).expanded;
  return {rising.begin() + 1, rising.end()};
}

/// x (x + 1) ... (x + length - 1)
inline BigInt rising_value(const BigInt& x, unsigned length) {
  BigInt out = 1;
  for (unsigned j = 0; j < length; ++j) out *= x + j;
  return out;
}

/// Mean of Tr[(rho_A)^r] over random pure states of an (m x n)-dimensional
/// bipartite system: P_r(m, n) / (mn (mn + 1) ... (mn + r - 1)).
inline ExactRational avg_trace_power(unsigned m, unsigned n, unsigned r) {
  if (m == 0 || n == 0 || r == 0) throw std::invalid_argument("avg_trace_power: m, n, r must be positive");
  const BigInt value = poly_eval(closed_form_p(r), m, n);
  return rat_reduce(value, rising_value(BigInt(m) * n, r));
}

/// Same quantity through the m-truncated sum
///
///   Gamma(mn) / (r Gamma(mn + r)) *
///     sum_{k=0}^{m-1} (-1)^k Gamma(m+r-k) Gamma(n+r-k)
///                     / (k! Gamma(r-k) Gamma(m-k) Gamma(n-k))
///
/// evaluated pointwise as rationals. 1/Gamma(r-k) vanishes for k >= r, and
/// the n-quotient vanishes for k >= n. Only used to cross-check
/// avg_trace_power.
inline ExactRational avg_trace_power_alt(unsigned m, unsigned n, unsigned r) {
  if (m == 0 || n == 0 || r == 0) throw std::invalid_argument("avg_trace_power_alt: m, n, r must be positive");
  ExactRational sum;
  for (unsigned k = 0; k < m; ++k) {
    if (k >= r || k >= n) break;
    // Gamma(m+r-k)/Gamma(m-k) = (m-k)...(m+r-k-1), likewise for n.
    const BigInt gm = rising_value(BigInt(m - k), r);
    const BigInt gn = rising_value(BigInt(n - k), r);
    const BigInt denom = factorial(k) * factorial(r - k - 1);
    const ExactRational term = rat_reduce(gm * gn, denom);
    sum = (k % 2 == 0) ? sum + term : sum - term;
  }
  return sum / rat_reduce(BigInt(r) * rising_value(BigInt(m) * n, r), 1);
}

}  // namespace hypermap

#endif  // HYPERMAP_CLOSED_FORM_HPP_
