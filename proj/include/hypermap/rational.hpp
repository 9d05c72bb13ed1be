#ifndef HYPERMAP_RATIONAL_HPP_
#define HYPERMAP_RATIONAL_HPP_

#include <ostream>
#include <stdexcept>
#include <string>

#include "hypermap/bigint.hpp"

namespace hypermap {

class ZeroDenominator : public std::domain_error {
 public:
  ZeroDenominator() : std::domain_error("rational with zero denominator") {}
};

class ExactRational;
ExactRational rat_reduce(BigInt num, BigInt den);

/// Exact rational, always in lowest terms with a positive denominator.
class ExactRational {
 public:
  ExactRational() = default;
  ExactRational(BigInt value) : num_(std::move(value)) {}  // NOLINT(google-explicit-constructor)

  const BigInt& numerator() const { return num_; }
  const BigInt& denominator() const { return den_; }

  friend ExactRational rat_reduce(BigInt num, BigInt den);

  friend ExactRational operator+(const ExactRational& a, const ExactRational& b) {
    return rat_reduce(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend ExactRational operator-(const ExactRational& a, const ExactRational& b) {
    return rat_reduce(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend ExactRational operator*(const ExactRational& a, const ExactRational& b) {
    return rat_reduce(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend ExactRational operator/(const ExactRational& a, const ExactRational& b) {
    return rat_reduce(a.num_ * b.den_, a.den_ * b.num_);
  }
  ExactRational& operator+=(const ExactRational& o) { return *this = *this + o; }

  // Reduced form is unique, so componentwise comparison is value equality.
  friend bool operator==(const ExactRational& a, const ExactRational& b) = default;

  std::string str() const {
    return den_ == 1 ? num_.str() : num_.str() + "/" + den_.str();
  }
  friend std::ostream& operator<<(std::ostream& os, const ExactRational& q) {
    return os << q.str();
  }

 private:
  BigInt num_ = 0;
  BigInt den_ = 1;
};

inline ExactRational rat_reduce(BigInt num, BigInt den) {
  if (den == 0) throw ZeroDenominator();
  if (den < 0) {
    num = -num;
    den = -den;
  }
  BigInt g = boost::multiprecision::gcd(abs(num), den);  // gcd(0, d) = d
  ExactRational out;
  out.num_ = num / g;
  out.den_ = den / g;
  return out;
}

}  // namespace hypermap

#endif  // HYPERMAP_RATIONAL_HPP_
