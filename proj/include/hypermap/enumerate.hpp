#ifndef HYPERMAP_ENUMERATE_HPP_
#define HYPERMAP_ENUMERATE_HPP_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "hypermap/bivar_poly.hpp"
#include "hypermap/permutation.hpp"

namespace hypermap {

class LimitExceeded : public std::runtime_error {
 public:
  LimitExceeded(unsigned r, unsigned ceiling)
      : std::runtime_error("r = " + std::to_string(r) + " exceeds the enumeration ceiling " +
                           std::to_string(ceiling)),
        r_(r),
        ceiling_(ceiling) {}

  unsigned r() const { return r_; }
  unsigned ceiling() const { return ceiling_; }

 private:
  unsigned r_;
  unsigned ceiling_;
};

inline constexpr unsigned kDefaultEnumCeiling = 13;
// Counts are accumulated in 64 bits; 20! is the last factorial that fits.
inline constexpr unsigned kMaxEnumerableDarts = 20;

struct EnumOptions {
  unsigned ceiling = kDefaultEnumCeiling;
  /// Worker threads; 0 means std::thread::hardware_concurrency().
  unsigned threads = 1;
  /// Skip the ceiling check (the hard 64-bit limit still applies).
  bool force = false;
};

/// Cycle lengths of the face permutation, one entry per face.
struct FaceShape {
  std::vector<unsigned> cycle_lengths;

  unsigned darts() const { return std::accumulate(cycle_lengths.begin(), cycle_lengths.end(), 0U); }
  Permutation face_permutation() const { return Permutation::disjoint_cycles(cycle_lengths); }
};

namespace detail {

inline void check_limit(unsigned r, const EnumOptions& opts) {
  if (r == 0) throw std::invalid_argument("number of darts must be positive");
  if (r > kMaxEnumerableDarts) throw LimitExceeded(r, kMaxEnumerableDarts);
  if (!opts.force && r > opts.ceiling) throw LimitExceeded(r, opts.ceiling);
}

inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1U, std::thread::hardware_concurrency());
}

inline unsigned count_cycles(const unsigned* images, unsigned r) {
  std::uint32_t unseen = r == 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << r) - 1);
  unsigned cycles = 0;
  while (unseen != 0) {
    const unsigned start = static_cast<unsigned>(std::countr_zero(unseen));
    unsigned x = start;
    do {
      unseen &= ~(std::uint32_t{1} << x);
      x = images[x];
    } while (x != start);
    ++cycles;
  }
  return cycles;
}

/// Histogram counts[A * stride + B] of (cycles(sigma), cycles(xi sigma)).
struct DenseCounts {
  unsigned stride = 0;
  std::vector<std::uint64_t> counts;

  explicit DenseCounts(unsigned r) : stride(r + 1), counts(static_cast<std::size_t>(stride) * stride, 0) {}

  DenseCounts& operator+=(const DenseCounts& o) {
    for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += o.counts[i];
    return *this;
  }

  BivarPoly to_poly() const {
    BivarPoly out;
    for (unsigned a = 0; a < stride; ++a) {
      for (unsigned b = 0; b < stride; ++b) {
        const std::uint64_t c = counts[static_cast<std::size_t>(a) * stride + b];
        if (c != 0) out.add_term(a, b, BigInt(c));
      }
    }
    return out;
  }
};

/// True iff q lies on the cycle of images through p.
inline bool same_cycle(const unsigned* images, unsigned p, unsigned q) {
  unsigned x = images[p];
  while (x != p && x != q) x = images[x];
  return x == q;
}

/// Shard j holds every sigma with sigma(0) = j; Heap's algorithm runs over
/// the remaining r - 1 positions. Each step composes sigma (and so xi sigma)
/// on the right with a transposition, which splits or merges exactly one
/// cycle, so both counts are updated by +-1 instead of being recounted.
template <class Keep>
void enumerate_shard(const Permutation& xi, unsigned shard, Keep& keep, DenseCounts& out) {
  const unsigned r = static_cast<unsigned>(xi.size());
  std::vector<unsigned> start{shard};
  for (unsigned x = 0; x < r; ++x) {
    if (x != shard) start.push_back(x);
  }
  PermutationStream stream(Permutation(std::move(start)), 1);
  std::vector<unsigned> product(r);
  const auto xi_img = xi.images();
  const unsigned* sigma = stream.current().data();
  for (unsigned i = 0; i < r; ++i) product[i] = xi_img[sigma[i]];
  unsigned a = count_cycles(sigma, r);
  unsigned b = count_cycles(product.data(), r);
  while (true) {
    if (keep(stream.current())) ++out.counts[static_cast<std::size_t>(a) * out.stride + b];
    if (!stream.advance()) break;
    const auto [p, q] = stream.last_swap();
    // sigma has already been swapped: p and q now share a cycle iff they did
    // not before.
    if (same_cycle(sigma, static_cast<unsigned>(p), static_cast<unsigned>(q))) --a;
    else ++a;
    if (same_cycle(product.data(), static_cast<unsigned>(p), static_cast<unsigned>(q))) ++b;
    else --b;
    std::swap(product[p], product[q]);
  }
}

/// Sums m^cycles(sigma) n^cycles(xi sigma) over every sigma accepted by
/// keep. Shards are merged by integer addition, so the result does not
/// depend on the thread count.
template <class Keep>
DenseCounts enumerate_dense(const Permutation& xi, unsigned threads, Keep keep) {
  const unsigned r = static_cast<unsigned>(xi.size());
  std::vector<DenseCounts> partial(r, DenseCounts(r));
  const unsigned workers = std::min(resolve_threads(threads), r);
  if (workers <= 1) {
    for (unsigned j = 0; j < r; ++j) enumerate_shard(xi, j, keep, partial[j]);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w, keep]() mutable {
        for (unsigned j = w; j < r; j += workers) enumerate_shard(xi, j, keep, partial[j]);
      });
    }
    for (auto& t : pool) t.join();
  }
  DenseCounts total(r);
  for (const auto& p : partial) total += p;
  return total;
}

struct KeepAll {
  bool operator()(std::span<const unsigned>) const { return true; }
};

}  // namespace detail

/// Generating polynomial over all sigma in Sym_r (connected or not) with
/// the face permutation given by shape.
inline BivarPoly enumerate_p_multi(const FaceShape& shape, const EnumOptions& opts = {}) {
  for (unsigned len : shape.cycle_lengths) {
    if (len == 0) throw std::invalid_argument("face lengths must be positive");
  }
  detail::check_limit(shape.darts(), opts);
  return detail::enumerate_dense(shape.face_permutation(), opts.threads, detail::KeepAll{}).to_poly();
}

/// P_r(m, n) by brute force over Sym_r with the face permutation a single r-cycle.
inline BivarPoly enumerate_p(unsigned r, const EnumOptions& opts = {}) {
  return enumerate_p_multi(FaceShape{{r}}, opts);
}

/// Histogram of cycle counts over Sym_r, indexed by cycle count.
inline std::vector<BigInt> cycle_count_histogram(unsigned r, const EnumOptions& opts = {}) {
  return enumerate_p(r, opts).marginal_m();
}

}  // namespace hypermap

#endif  // HYPERMAP_ENUMERATE_HPP_
