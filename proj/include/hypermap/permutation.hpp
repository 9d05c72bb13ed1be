#ifndef HYPERMAP_PERMUTATION_HPP_
#define HYPERMAP_PERMUTATION_HPP_

#include <algorithm>
#include <cctype>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hypermap {

class LengthMismatch : public std::invalid_argument {
 public:
  LengthMismatch(std::size_t a, std::size_t b)
      : std::invalid_argument("permutation lengths differ: " + std::to_string(a) + " vs " +
                              std::to_string(b)) {}
};

/// Bijection on {0..r-1} in one-line form: images()[i] is the image of i.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<unsigned> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (unsigned x : images_) {
      if (x >= images_.size() || seen[x]) {
        throw std::invalid_argument("images do not form a bijection");
      }
      seen[x] = true;
    }
  }

  static Permutation identity(unsigned r) {
    std::vector<unsigned> img(r);
    std::iota(img.begin(), img.end(), 0U);
    return Permutation(std::move(img), Unchecked{});
  }

  /// The r-cycle 0 -> 1 -> ... -> r-1 -> 0.
  static Permutation full_cycle(unsigned r) { return disjoint_cycles({r}); }

  /// Consecutive disjoint cycles with the given lengths: for lengths {3, 4}
  /// this is (0 1 2)(3 4 5 6).
  static Permutation disjoint_cycles(const std::vector<unsigned>& lengths) {
    std::vector<unsigned> img;
    unsigned start = 0;
    for (unsigned len : lengths) {
      if (len == 0) throw std::invalid_argument("cycle length must be positive");
      for (unsigned j = 0; j < len; ++j) img.push_back(start + (j + 1) % len);
      start += len;
    }
    return Permutation(std::move(img), Unchecked{});
  }

  std::size_t size() const { return images_.size(); }
  unsigned operator()(unsigned i) const { return images_[i]; }
  std::span<const unsigned> images() const { return images_; }

  Permutation inverse() const {
    std::vector<unsigned> inv(images_.size());
    for (unsigned i = 0; i < images_.size(); ++i) inv[images_[i]] = i;
    return Permutation(std::move(inv), Unchecked{});
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  struct Unchecked {};
  Permutation(std::vector<unsigned> images, Unchecked) : images_(std::move(images)) {}

  std::vector<unsigned> images_;
};

/// compose(p, q)(i) = p(q(i)).
inline Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw LengthMismatch(p.size(), q.size());
  std::vector<unsigned> img(p.size());
  for (unsigned i = 0; i < img.size(); ++i) img[i] = p(q(i));
  return Permutation(std::move(img));
}

struct CycleProfile {
  unsigned cycle_count = 0;
  /// Cycle lengths in order of each cycle's smallest element.
  std::vector<unsigned> cycle_lengths;
};

inline CycleProfile cycle_profile(const Permutation& p) {
  CycleProfile out;
  std::vector<bool> seen(p.size(), false);
  for (unsigned start = 0; start < p.size(); ++start) {
    if (seen[start]) continue;
    unsigned len = 0;
    for (unsigned x = start; !seen[x]; x = p(x)) {
      seen[x] = true;
      ++len;
    }
    out.cycle_lengths.push_back(len);
  }
  out.cycle_count = static_cast<unsigned>(out.cycle_lengths.size());
  return out;
}

/// True iff the group generated by gens acts transitively on {0..r-1}.
inline bool is_transitive(std::span<const Permutation> gens, unsigned r) {
  for (const auto& g : gens) {
    if (g.size() != r) throw LengthMismatch(g.size(), r);
  }
  if (r <= 1) return true;
  std::vector<bool> reached(r, false);
  std::vector<unsigned> frontier{0};
  reached[0] = true;
  unsigned count = 1;
  while (!frontier.empty()) {
    unsigned x = frontier.back();
    frontier.pop_back();
    for (const auto& g : gens) {
      unsigned y = g(x);
      if (!reached[y]) {
        reached[y] = true;
        ++count;
        frontier.push_back(y);
      }
    }
  }
  return count == r;
}

inline bool is_transitive(std::initializer_list<Permutation> gens, unsigned r) {
  return is_transitive(std::span<const Permutation>(gens.begin(), gens.size()), r);
}

/// 1-indexed cycle notation with fixed points written out: "(1 4 5 3)(2)(6 7)".
inline std::string format_cycles(const Permutation& p) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (unsigned start = 0; start < p.size(); ++start) {
    if (seen[start]) continue;
    out += '(';
    for (unsigned x = start; !seen[x]; x = p(x)) {
      if (x != start) out += ' ';
      seen[x] = true;
      out += std::to_string(x + 1);
    }
    out += ')';
  }
  return out;
}

/// Parses 1-indexed cycle notation on r points. Elements inside a cycle are
/// separated by spaces or commas; for r < 10 the compact form "(1453)(2)(67)"
/// is accepted as well. Points that appear in no cycle are fixed.
inline Permutation parse_cycles(const std::string& text, unsigned r) {
  std::vector<unsigned> img(r);
  std::iota(img.begin(), img.end(), 0U);
  std::vector<bool> used(r, false);
  std::size_t pos = 0;
  auto fail = [&text](const std::string& why) {
    throw std::invalid_argument("bad cycle notation '" + text + "': " + why);
  };
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    if (text[pos] != '(') fail("expected '('");
    std::size_t close = text.find(')', pos);
    if (close == std::string::npos) fail("unclosed cycle");
    std::string body = text.substr(pos + 1, close - pos - 1);
    pos = close + 1;

    std::vector<unsigned> cycle;
    // Without separators, r < 10 reads one digit per element; r >= 10 reads
    // the whole body as a single (fixed) point.
    const bool separated = body.find_first_of(" ,") != std::string::npos || r >= 10;
    std::size_t i = 0;
    while (i < body.size()) {
      char ch = body[i];
      if (ch == ' ' || ch == ',') {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(ch))) fail("unexpected character");
      std::size_t j = i + 1;
      if (separated) {
        while (j < body.size() && std::isdigit(static_cast<unsigned char>(body[j]))) ++j;
      }
      unsigned value = static_cast<unsigned>(std::stoul(body.substr(i, j - i)));
      if (value < 1 || value > r) fail("element out of range");
      if (used[value - 1]) fail("element repeated");
      used[value - 1] = true;
      cycle.push_back(value - 1);
      i = j;
    }
    if (cycle.empty()) fail("empty cycle");
    for (std::size_t k = 0; k < cycle.size(); ++k) img[cycle[k]] = cycle[(k + 1) % cycle.size()];
  }
  return Permutation(std::move(img));
}

/// Iterative Heap's algorithm over the positions [first_free, r) of a
/// starting arrangement; positions before first_free stay put. Resumable:
/// current() is valid after construction and after every advance() that
/// returned true.
///
///   PermutationStream s(r);
///   do { use(s.current()); } while (s.advance());
class PermutationStream {
 public:
  explicit PermutationStream(unsigned r) : PermutationStream(Permutation::identity(r), 0) {}

  PermutationStream(const Permutation& start, unsigned first_free)
      : images_(start.images().begin(), start.images().end()),
        base_(std::min<std::size_t>(first_free, images_.size())),
        counters_(images_.size() - base_, 0) {}

  std::span<const unsigned> current() const { return images_; }
  Permutation current_permutation() const { return Permutation(images_); }
  /// Positions exchanged by the most recent successful advance(); the new
  /// arrangement is the old one composed on the right with that transposition.
  std::pair<std::size_t, std::size_t> last_swap() const { return last_swap_; }

  bool advance() {
    const std::size_t k = counters_.size();
    while (level_ < k) {
      if (counters_[level_] < level_) {
        if (level_ % 2 == 0) {
          last_swap_ = {base_, base_ + level_};
        } else {
          last_swap_ = {base_ + counters_[level_], base_ + level_};
        }
        std::swap(images_[last_swap_.first], images_[last_swap_.second]);
        ++counters_[level_];
        level_ = 1;
        return true;
      }
      counters_[level_] = 0;
      ++level_;
    }
    return false;
  }

 private:
  std::vector<unsigned> images_;
  std::size_t base_;
  std::vector<std::size_t> counters_;
  std::size_t level_ = 1;
  std::pair<std::size_t, std::size_t> last_swap_{0, 0};
};

inline PermutationStream permutations_iter(unsigned r) {
  if (r == 0) throw std::invalid_argument("permutations_iter: r must be positive");
  return PermutationStream(r);
}

}  // namespace hypermap

#endif  // HYPERMAP_PERMUTATION_HPP_
