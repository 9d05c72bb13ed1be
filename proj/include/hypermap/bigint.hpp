#ifndef HYPERMAP_BIGINT_HPP_
#define HYPERMAP_BIGINT_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hypermap {

/// Arbitrary-precision signed integer. Coefficients of P_r leave 64-bit range
/// around r = 20, so everything exact is carried in this type.
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const BigInt& x) { return x.str(); }

/// Parses an optionally signed decimal string. Throws std::invalid_argument
/// on anything else (no whitespace, no leading '+').
inline BigInt parse_bigint(const std::string& text) {
  std::size_t start = (!text.empty() && text[0] == '-') ? 1 : 0;
  if (start == text.size()) {
    throw std::invalid_argument("empty integer literal");
  }
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw std::invalid_argument("malformed integer literal: " + text);
    }
  }
  return BigInt(text);
}

inline BigInt factorial(unsigned r) {
  BigInt out = 1;
  for (unsigned i = 2; i <= r; ++i) out *= i;
  return out;
}

/// Row n of Pascal's triangle, built by the additive recurrence so every
/// entry is exact at any size.
inline std::vector<BigInt> pascal_row(unsigned n) {
  std::vector<BigInt> row{1};
  for (unsigned i = 1; i <= n; ++i) {
    std::vector<BigInt> next(i + 1);
    next[0] = 1;
    next[i] = 1;
    for (unsigned j = 1; j < i; ++j) next[j] = row[j - 1] + row[j];
    row = std::move(next);
  }
  return row;
}

/// C(n, k) for any integers; zero outside 0 <= k <= n.
inline BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  return pascal_row(static_cast<unsigned>(n))[static_cast<std::size_t>(k)];
}

}  // namespace hypermap

#endif  // HYPERMAP_BIGINT_HPP_
