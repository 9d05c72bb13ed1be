#include "gtest/gtest.h"

#include "hypermap/closed_form.hpp"
#include "hypermap/enumerate.hpp"
#include "oracle.hpp"

namespace hypermap {
namespace {

UniPoly ints(std::initializer_list<long> values) {
  UniPoly out;
  for (long v : values) out.emplace_back(v);
  return out;
}

TEST(RisingRatio, Examples) {
  const auto r03 = rising_ratio(0, 3);
  EXPECT_EQ(r03.base_shift, 0);
  EXPECT_EQ(r03.length, 3U);
  EXPECT_EQ(r03.expanded, ints({0, 2, 3, 1}));
  EXPECT_EQ(rising_ratio(2, 1).expanded, ints({-2, 1}));
  EXPECT_EQ(eval_uni(rising_ratio(1, 2).expanded, 1), 0);
  EXPECT_EQ(rising_ratio(0, 0).expanded, ints({1}));
}

TEST(RisingRatio, MonicOfDegreeRAndVanishesInsideShift) {
  for (long k = 0; k < 6; ++k) {
    for (unsigned r = 1; r < 8; ++r) {
      const auto p = rising_ratio(k, r).expanded;
      ASSERT_EQ(p.size(), r + 1);
      EXPECT_EQ(p.back(), 1);
      // zeros at x = k - r + 1, ..., k
      for (long x = k - static_cast<long>(r) + 1; x <= k; ++x) EXPECT_EQ(eval_uni(p, x), 0);
      // product form at a point away from the zeros
      BigInt direct = 1;
      for (unsigned j = 0; j < r; ++j) direct *= BigInt(k + 3) - k + j;
      EXPECT_EQ(eval_uni(p, k + 3), direct);
    }
  }
}

TEST(ClosedFormP, SmallCases) {
  EXPECT_EQ(closed_form_p(1).str(), "m*n");
  EXPECT_EQ(closed_form_p(2).str(), "m^2*n + m*n^2");
  EXPECT_EQ(closed_form_p(3).str(), "m^3*n + 3*m^2*n^2 + m*n^3 + m*n");
  EXPECT_EQ(closed_form_p(4).str(), "m^4*n + 6*m^3*n^2 + 6*m^2*n^3 + 5*m^2*n + m*n^4 + 5*m*n^2");
  EXPECT_EQ(poly_eval(closed_form_p(4), 1, 1), 24);
  EXPECT_THROW(closed_form_p(0), std::invalid_argument);
}

TEST(ClosedFormP, MatchesBruteForce) {
  for (unsigned r = 1; r <= 8; ++r) {
    BivarPoly expected;
    for (const auto& [key, count] : oracle::brute_force({r})) expected.add_term(key.first, key.second, count);
    EXPECT_EQ(closed_form_p(r), expected) << "r=" << r;
  }
}

TEST(ClosedFormP, Invariants) {
  for (unsigned r = 1; r <= 25; ++r) {
    const auto p = closed_form_p(r);
    EXPECT_EQ(p.swapped(), p) << "r=" << r;
    EXPECT_EQ(poly_eval(p, 1, 1), factorial(r));
    EXPECT_EQ(p.marginal_m(), rising_ratio(0, r).expanded) << "r=" << r;

    // P_r(m, m): every total degree has the parity of r + 1, top degree r + 1
    UniPoly diagonal(r + 2);
    for (const auto& [mono, c] : p.terms()) diagonal[mono.e + mono.v] += c;
    EXPECT_NE(diagonal[r + 1], 0);
    for (unsigned d = 0; d < diagonal.size(); ++d) {
      if ((d % 2) != ((r + 1) % 2)) EXPECT_EQ(diagonal[d], 0) << "r=" << r << " d=" << d;
    }
  }
}

TEST(ClosedFormP, LargeRIsExact) {
  const auto p = closed_form_p(50);
  EXPECT_EQ(poly_eval(p, 1, 1), factorial(50));
  EXPECT_EQ(p.swapped(), p);
  // planar one-face rooted hypermaps with r darts: the Narayana numbers sum
  // to the Catalan number C_50
  BigInt planar = 0;
  for (const auto& [mono, c] : p.terms()) {
    if (mono.e + mono.v == 51) planar += c;
  }
  EXPECT_EQ(planar, binomial(100, 50) / 51);
}

TEST(StirlingRow, Examples) {
  EXPECT_EQ(stirling_row(1), ints({1}));
  EXPECT_EQ(stirling_row(3), ints({2, 3, 1}));
  EXPECT_EQ(stirling_row(4), ints({6, 11, 6, 1}));
  EXPECT_THROW(stirling_row(0), std::invalid_argument);
}

TEST(StirlingRow, MatchesCycleHistogramAndIdentities) {
  for (unsigned r = 1; r <= 8; ++r) {
    const auto row = stirling_row(r);
    const auto hist = oracle::cycle_histogram(r);
    for (unsigned k = 1; k <= r; ++k) EXPECT_EQ(row[k - 1], hist[k]) << r << "," << k;
  }
  for (unsigned r = 2; r <= 30; ++r) {
    const auto row = stirling_row(r);
    BigInt sum = 0;
    for (const auto& c : row) sum += c;
    EXPECT_EQ(sum, factorial(r));
    EXPECT_EQ(row.back(), 1);
    EXPECT_EQ(row[r - 2], r * (r - 1) / 2);
    EXPECT_EQ(row.front(), factorial(r - 1));
  }
}

TEST(AvgTracePower, Examples) {
  for (unsigned r = 1; r <= 10; ++r) EXPECT_EQ(avg_trace_power(1, 1, r), ExactRational(1));
  for (unsigned m = 1; m <= 5; ++m) {
    for (unsigned n = 1; n <= 5; ++n) EXPECT_EQ(avg_trace_power(m, n, 1), ExactRational(1));
  }
  EXPECT_EQ(avg_trace_power(2, 2, 2), rat_reduce(4, 5));
  EXPECT_EQ(avg_trace_power(3, 2, 2), rat_reduce(5, 7));
  EXPECT_THROW(avg_trace_power(0, 2, 2), std::invalid_argument);
}

TEST(AvgTracePowerAlt, Examples) {
  EXPECT_EQ(avg_trace_power_alt(1, 1, 5), ExactRational(1));
  EXPECT_EQ(avg_trace_power_alt(2, 2, 2), rat_reduce(4, 5));
  EXPECT_EQ(avg_trace_power_alt(3, 2, 2), rat_reduce(5, 7));
  EXPECT_THROW(avg_trace_power_alt(1, 1, 0), std::invalid_argument);
}

TEST(AvgTracePower, AgreesWithBruteForceAndAltRoute) {
  for (unsigned r = 1; r <= 6; ++r) {
    const auto table = oracle::brute_force({r});
    for (unsigned m = 1; m <= 4; ++m) {
      for (unsigned n = 1; n <= 4; ++n) {
        BigInt value = 0;
        for (const auto& [key, count] : table) value += BigInt(count) * pow(BigInt(m), key.first) * pow(BigInt(n), key.second);
        BigInt rising = 1;
        for (unsigned j = 0; j < r; ++j) rising *= m * n + j;
        EXPECT_EQ(avg_trace_power(m, n, r), rat_reduce(value, rising));
        EXPECT_EQ(avg_trace_power_alt(m, n, r), rat_reduce(value, rising));
      }
    }
  }
}

TEST(AvgTracePower, PureStateBoundsForSmallSubsystem) {
  // 1/m^(r-1) <= <Tr rho^r> <= 1 for an m-dimensional subsystem.
  for (unsigned m = 1; m <= 4; ++m) {
    for (unsigned n = 1; n <= 4; ++n) {
      for (unsigned r = 1; r <= 6; ++r) {
        const auto q = avg_trace_power(m, n, r);
        EXPECT_LE(q.numerator(), q.denominator());
        EXPECT_GE(q.numerator() * pow(BigInt(std::min(m, n)), r - 1), q.denominator());
      }
    }
  }
}

}  // namespace
}  // namespace hypermap
