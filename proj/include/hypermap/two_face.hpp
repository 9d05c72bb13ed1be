#ifndef HYPERMAP_TWO_FACE_HPP_
#define HYPERMAP_TWO_FACE_HPP_

#include <stdexcept>
#include <vector>

#include "hypermap/bigint.hpp"
#include "hypermap/bivar_poly.hpp"
#include "hypermap/closed_form.hpp"
#include "hypermap/enumerate.hpp"
#include "hypermap/permutation.hpp"

namespace hypermap {

struct TwoFaceResult {
  unsigned r = 0;
  BivarPoly gf;
  BigInt total;
};

/// Generating polynomial of rooted two-face hypermaps with r darts:
///
///   sum_{b=1}^{r-1} (1/b) (P_{r-b,b} - P_{r-b} P_b)
///
/// P_{r-b,b} comes from enumeration with the face permutation
/// (0..a-1)(a..r-1); the one-face factors come from the closed form. Each
/// bracket must divide exactly by b, otherwise NotDivisible escapes.
inline TwoFaceResult two_face_gf(unsigned r, const EnumOptions& opts = {}) {
  if (r < 2) throw std::invalid_argument("two_face_gf: r must be at least 2");
  detail::check_limit(r, opts);
  std::vector<BivarPoly> one_face(r);
  for (unsigned s = 1; s < r; ++s) one_face[s] = closed_form_p(s);

  TwoFaceResult out{r, {}, 0};
  for (unsigned b = 1; b < r; ++b) {
    const unsigned a = r - b;
    BivarPoly bracket = enumerate_p_multi(FaceShape{{a, b}}, opts);
    bracket -= one_face[a] * one_face[b];
    out.gf += poly_div_exact(bracket, BigInt(b));
  }
  out.total = poly_eval(out.gf, 1, 1);
  return out;
}

/// sum_{b=1}^{r-1} (r! - b!(r-b)!) / b, with no enumeration.
inline BigInt two_face_total(unsigned r) {
  if (r < 2) throw std::invalid_argument("two_face_total: r must be at least 2");
  const BigInt r_fact = factorial(r);
  BigInt total = 0;
  // b divides r! and b!(r-b)! separately since b <= r.
  for (unsigned b = 1; b < r; ++b) total += r_fact / b - factorial(b - 1) * factorial(r - b);
  return total;
}

/// Direct count of connected two-face diagrams: for every split r = a + b
/// keep only sigma for which <xi_{a,b}, sigma> is transitive, then divide
/// the split's polynomial by b.
inline BivarPoly connected_two_face_oracle(unsigned r, const EnumOptions& opts = {}) {
  if (r < 2) throw std::invalid_argument("connected_two_face_oracle: r must be at least 2");
  detail::check_limit(r, opts);
  BivarPoly total;
  for (unsigned b = 1; b < r; ++b) {
    const Permutation xi = Permutation::disjoint_cycles({r - b, b});
    auto connected = [&xi, r](std::span<const unsigned> sigma) {
      const Permutation gens[] = {xi, Permutation(std::vector<unsigned>(sigma.begin(), sigma.end()))};
      return is_transitive(gens, r);
    };
    const BivarPoly split = detail::enumerate_dense(xi, opts.threads, connected).to_poly();
    total += poly_div_exact(split, BigInt(b));
  }
  return total;
}

}  // namespace hypermap

#endif  // HYPERMAP_TWO_FACE_HPP_
