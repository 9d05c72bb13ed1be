#ifndef HYPERMAP_BIVAR_POLY_HPP_
#define HYPERMAP_BIVAR_POLY_HPP_

#include <compare>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypermap/bigint.hpp"

namespace hypermap {

/// Exponent pair of a monomial m^e n^v. Here m counts edges, n vertices.
struct Monomial {
  unsigned e = 0;
  unsigned v = 0;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Canonical order: e descending, then v descending.
struct CanonicalOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.e != b.e) return a.e > b.e;
    return a.v > b.v;
  }
};

class NotDivisible : public std::domain_error {
 public:
  NotDivisible(const Monomial& at, const BigInt& coeff, const BigInt& divisor)
      : std::domain_error("coefficient " + coeff.str() + " of m^" + std::to_string(at.e) + "*n^" +
                          std::to_string(at.v) + " is not divisible by " + divisor.str()),
        at_(at),
        coeff_(coeff),
        divisor_(divisor) {}

  const Monomial& at() const { return at_; }
  const BigInt& coeff() const { return coeff_; }
  const BigInt& divisor() const { return divisor_; }

 private:
  Monomial at_;
  BigInt coeff_;
  BigInt divisor_;
};

/// Sparse bivariate polynomial in m and n with big-integer coefficients.
/// No stored coefficient is ever zero, so structural equality is value
/// equality.
class BivarPoly {
 public:
  using TermMap = std::map<Monomial, BigInt, CanonicalOrder>;

  BivarPoly() = default;

  static BivarPoly constant(const BigInt& c) { return monomial(c, 0, 0); }
  static BivarPoly monomial(const BigInt& c, unsigned e, unsigned v) {
    BivarPoly p;
    p.add_term(e, v, c);
    return p;
  }
  static BivarPoly m() { return monomial(1, 1, 0); }
  static BivarPoly n() { return monomial(1, 0, 1); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  BigInt coeff(unsigned e, unsigned v) const {
    auto it = terms_.find({e, v});
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  void add_term(unsigned e, unsigned v, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(Monomial{e, v}, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  BivarPoly& operator+=(const BivarPoly& o) {
    for (const auto& [mono, c] : o.terms_) add_term(mono.e, mono.v, c);
    return *this;
  }
  BivarPoly& operator-=(const BivarPoly& o) {
    for (const auto& [mono, c] : o.terms_) add_term(mono.e, mono.v, -c);
    return *this;
  }
  BivarPoly& operator*=(const BigInt& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& [mono, c] : terms_) c *= s;
    }
    return *this;
  }

  friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
  friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }
  friend BivarPoly operator-(BivarPoly a) { return a *= BigInt(-1); }
  friend BivarPoly operator*(BivarPoly a, const BigInt& s) { return a *= s; }
  friend BivarPoly operator*(const BigInt& s, BivarPoly a) { return a *= s; }
  friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
    BivarPoly out;
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) out.add_term(ma.e + mb.e, ma.v + mb.v, ca * cb);
    }
    return out;
  }

  friend bool operator==(const BivarPoly&, const BivarPoly&) = default;

  /// The polynomial with the roles of m and n exchanged.
  BivarPoly swapped() const {
    BivarPoly out;
    for (const auto& [mono, c] : terms_) out.terms_.emplace(Monomial{mono.v, mono.e}, c);
    return out;
  }

  /// Coefficients of p(m, 1), indexed by the power of m.
  std::vector<BigInt> marginal_m() const {
    std::vector<BigInt> out;
    for (const auto& [mono, c] : terms_) {
      if (out.size() <= mono.e) out.resize(mono.e + 1);
      out[mono.e] += c;
    }
    return out;
  }

  /// Canonical rendering, e.g. "m^3*n + 3*m^2*n^2 + m*n^3 + m*n".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mono, c] : terms_) {
      const bool negative = c < 0;
      if (first) {
        if (negative) os << '-';
      } else {
        os << (negative ? " - " : " + ");
      }
      first = false;
      const BigInt magnitude = negative ? BigInt(-c) : c;
      std::string vars;
      auto append = [&vars](char name, unsigned power) {
        if (power == 0) return;
        if (!vars.empty()) vars += '*';
        vars += name;
        if (power > 1) vars += "^" + std::to_string(power);
      };
      append('m', mono.e);
      append('n', mono.v);
      if (vars.empty()) {
        os << magnitude;
      } else if (magnitude == 1) {
        os << vars;
      } else {
        os << magnitude << '*' << vars;
      }
    }
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const BivarPoly& p) { return os << p.str(); }

 private:
  TermMap terms_;
};

inline BivarPoly poly_add(const BivarPoly& p, const BivarPoly& q) { return p + q; }
inline BivarPoly poly_mul(const BivarPoly& p, const BivarPoly& q) { return p * q; }

/// Termwise exact quotient. A nonzero remainder anywhere means an upstream
/// formula is wrong, so it throws rather than rounding.
inline BivarPoly poly_div_exact(const BivarPoly& p, const BigInt& d) {
  if (d <= 0) throw std::invalid_argument("poly_div_exact: divisor must be positive");
  BivarPoly out;
  for (const auto& [mono, c] : p.terms()) {
    BigInt q;
    BigInt rem;
    boost::multiprecision::divide_qr(c, d, q, rem);
    if (rem != 0) throw NotDivisible(mono, c, d);
    out.add_term(mono.e, mono.v, q);
  }
  return out;
}

inline BigInt poly_eval(const BivarPoly& p, const BigInt& m0, const BigInt& n0) {
  BigInt total = 0;
  for (const auto& [mono, c] : p.terms()) {
    total += c * pow(m0, mono.e) * pow(n0, mono.v);
  }
  return total;
}

/// Dense univariate polynomial, coefficient i multiplies x^i.
using UniPoly = std::vector<BigInt>;

/// Product of a polynomial in m alone and a polynomial in n alone.
inline BivarPoly outer_product(const UniPoly& in_m, const UniPoly& in_n) {
  BivarPoly out;
  for (std::size_t i = 0; i < in_m.size(); ++i) {
    if (in_m[i] == 0) continue;
    for (std::size_t j = 0; j < in_n.size(); ++j) {
      out.add_term(static_cast<unsigned>(i), static_cast<unsigned>(j), in_m[i] * in_n[j]);
    }
  }
  return out;
}

}  // namespace hypermap

#endif  // HYPERMAP_BIVAR_POLY_HPP_
