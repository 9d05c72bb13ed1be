#ifndef HYPERMAP_TABLES_HPP_
#define HYPERMAP_TABLES_HPP_

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypermap/bivar_poly.hpp"
#include "hypermap/enumerate.hpp"
#include "hypermap/two_face.hpp"

namespace hypermap {

struct CoeffRow {
  unsigned r = 0;
  unsigned e = 0;
  unsigned v = 0;
  BigInt count;

  friend bool operator==(const CoeffRow&, const CoeffRow&) = default;
};

/// Rows (r, e, v, count), sorted by r ascending then e, v descending.
struct CoeffTable {
  std::vector<CoeffRow> rows;

  friend bool operator==(const CoeffTable&, const CoeffTable&) = default;
};

inline void append_rows(CoeffTable& table, unsigned r, const BivarPoly& gf) {
  for (const auto& [mono, c] : gf.terms()) table.rows.push_back({r, mono.e, mono.v, c});
}

inline CoeffTable table_from_poly(unsigned r, const BivarPoly& gf) {
  CoeffTable t;
  append_rows(t, r, gf);
  return t;
}

/// h_r^(faces)(e, v) read off the enumerated generating polynomial.
inline CoeffTable coefficient_table(unsigned r, unsigned faces, const EnumOptions& opts = {}) {
  switch (faces) {
    case 1:
      return table_from_poly(r, enumerate_p(r, opts));
    case 2:
      return table_from_poly(r, connected_two_face_oracle(r, opts));
    default:
      throw std::invalid_argument("faces must be 1 or 2");
  }
}

class EulerViolation : public std::logic_error {
 public:
  EulerViolation(unsigned r, unsigned faces, const Monomial& at)
      : std::logic_error("m^" + std::to_string(at.e) + "*n^" + std::to_string(at.v) + " with r = " +
                         std::to_string(r) + ", f = " + std::to_string(faces) +
                         " has no nonnegative integer genus") {}
};

/// Groups the counts of gf by genus g = (r + 2 - e - v - faces) / 2.
inline std::map<unsigned, BigInt> genus_from_poly(unsigned r, unsigned faces, const BivarPoly& gf) {
  std::map<unsigned, BigInt> out;
  for (const auto& [mono, c] : gf.terms()) {
    const long twice_g = static_cast<long>(r) + 2 - mono.e - mono.v - faces;
    if (twice_g < 0 || twice_g % 2 != 0) throw EulerViolation(r, faces, mono);
    out[static_cast<unsigned>(twice_g / 2)] += c;
  }
  return out;
}

inline std::map<unsigned, BigInt> genus_tabulate(unsigned r, unsigned faces, const EnumOptions& opts = {}) {
  switch (faces) {
    case 1:
      return genus_from_poly(r, 1, enumerate_p(r, opts));
    case 2:
      return genus_from_poly(r, 2, connected_two_face_oracle(r, opts));
    default:
      throw std::invalid_argument("faces must be 1 or 2");
  }
}

}  // namespace hypermap

#endif  // HYPERMAP_TABLES_HPP_
