#ifndef HYPERMAP_TOOLS_HYPERMAP_CLI_HPP_
#define HYPERMAP_TOOLS_HYPERMAP_CLI_HPP_

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "hypermap/hypermap.hpp"

namespace hypermap::cli {

enum class Command { kPoly, kTable, kCount, kStirling, kAvgTrace, kVerify, kBench };
enum class Method { kEnumerate, kClosed, kRecursion };
enum class Format { kText, kCsv, kJson };

struct RunConfig {
  Command command = Command::kPoly;
  std::optional<unsigned> r;
  std::optional<unsigned> r_min;
  std::optional<unsigned> r_max;
  unsigned faces = 1;
  std::optional<Method> method;
  Format format = Format::kText;
  unsigned enum_ceiling = kDefaultEnumCeiling;
  unsigned threads = 0;  // 0 = auto
  bool force = false;
  std::optional<std::string> output_path;
  // avg-trace
  unsigned m = 1;
  unsigned n = 1;
  // bench
  unsigned repetitions = 5;
};

struct CommandResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

/// A configuration error the user can fix (bad range, missing flag).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline const char* method_name(Method m) {
  switch (m) {
    case Method::kEnumerate:
      return "enumerate";
    case Method::kClosed:
      return "closed";
    case Method::kRecursion:
      return "recursion";
  }
  return "?";
}

struct BenchRecord {
  Method method = Method::kClosed;
  unsigned r = 0;
  double wall_ms = 0.0;
  BigInt hypermap_count;
  bool below_resolution = false;
};

namespace detail {

struct Range {
  unsigned lo = 1;
  unsigned hi = 1;
  bool single() const { return lo == hi; }
};

inline Range resolve_range(const RunConfig& cfg, unsigned default_lo, unsigned default_hi) {
  Range range{default_lo, default_hi};
  if (cfg.r) {
    if (cfg.r_min || cfg.r_max) throw UsageError("--r cannot be combined with --r-min/--r-max");
    range = {*cfg.r, *cfg.r};
  } else {
    if (cfg.r_min) range.lo = *cfg.r_min;
    if (cfg.r_max) range.hi = *cfg.r_max;
    if (cfg.r_min && !cfg.r_max) range.hi = std::max(range.hi, range.lo);
  }
  if (range.lo == 0) throw UsageError("r must be positive");
  if (range.lo > range.hi) throw UsageError("--r-min exceeds --r-max");
  return range;
}

inline EnumOptions enum_options(const RunConfig& cfg) {
  return {cfg.enum_ceiling, cfg.threads, cfg.force};
}

inline std::string work_factor(unsigned r) { return (BigInt(r) * factorial(r)).str(); }

/// Ceiling guard shared by every enumerating path. With --force the guard
/// becomes a warning quoting the r * r! work factor.
inline void guard_enumeration(const RunConfig& cfg, unsigned r, std::string& err) {
  if (r <= cfg.enum_ceiling) return;
  if (!cfg.force) throw LimitExceeded(r, cfg.enum_ceiling);
  err += "warning: r = " + std::to_string(r) + " exceeds the enumeration ceiling " +
         std::to_string(cfg.enum_ceiling) + "; projected work r*r! = " + work_factor(r) + "\n";
}

inline Method default_method(const RunConfig& cfg, const Range& range) {
  if (cfg.method) return *cfg.method;
  return range.single() ? Method::kClosed : Method::kRecursion;
}

/// P_lo..P_hi by the requested method. Recursion builds the whole prefix.
inline std::vector<BivarPoly> one_face_polys(const RunConfig& cfg, const Range& range, Method method,
                                             std::string& err) {
  std::vector<BivarPoly> out;
  switch (method) {
    case Method::kEnumerate:
      for (unsigned r = range.lo; r <= range.hi; ++r) {
        guard_enumeration(cfg, r, err);
        out.push_back(enumerate_p(r, enum_options(cfg)));
      }
      break;
    case Method::kClosed:
      for (unsigned r = range.lo; r <= range.hi; ++r) out.push_back(closed_form_p(r));
      break;
    case Method::kRecursion: {
      auto all = recursion_sequence(range.hi);
      out.assign(all.begin() + (range.lo - 1), all.end());
      break;
    }
  }
  return out;
}

inline std::vector<BivarPoly> face_polys(const RunConfig& cfg, const Range& range, std::string& err) {
  if (cfg.faces == 1) return one_face_polys(cfg, range, default_method(cfg, range), err);
  if (cfg.faces != 2) throw UsageError("--faces must be 1 or 2");
  if (range.lo < 2) throw UsageError("two-face polynomials need r >= 2");
  std::vector<BivarPoly> out;
  for (unsigned r = range.lo; r <= range.hi; ++r) {
    guard_enumeration(cfg, r, err);
    out.push_back(two_face_gf(r, enum_options(cfg)).gf);
  }
  return out;
}

inline CoeffTable to_table(const Range& range, const std::vector<BivarPoly>& polys) {
  CoeffTable table;
  for (unsigned r = range.lo; r <= range.hi; ++r) append_rows(table, r, polys[r - range.lo]);
  return table;
}

}  // namespace detail

inline CommandResult cmd_poly(const RunConfig& cfg) {
  CommandResult res;
  const auto range = detail::resolve_range(cfg, 1, 1);
  const auto polys = detail::face_polys(cfg, range, res.err);
  switch (cfg.format) {
    case Format::kText:
      if (range.single()) {
        res.out = polys.front().str() + "\n";
      } else {
        for (unsigned r = range.lo; r <= range.hi; ++r) {
          res.out += std::to_string(r) + ": " + polys[r - range.lo].str() + "\n";
        }
      }
      break;
    case Format::kCsv:
      res.out = render_csv(detail::to_table(range, polys));
      break;
    case Format::kJson:
      res.out = render_json(detail::to_table(range, polys));
      break;
  }
  return res;
}

inline CommandResult cmd_table(const RunConfig& cfg) {
  CommandResult res;
  const auto range = detail::resolve_range(cfg, 1, 1);
  const auto table = detail::to_table(range, detail::face_polys(cfg, range, res.err));
  switch (cfg.format) {
    case Format::kText:
      res.out = render_text(table);
      break;
    case Format::kCsv:
      res.out = render_csv(table);
      break;
    case Format::kJson:
      res.out = render_json(table);
      break;
  }
  return res;
}

namespace detail {

inline CommandResult render_pairs(const RunConfig& cfg, const Range& range, const std::string& value_name,
                                  const std::vector<std::string>& values) {
  CommandResult res;
  switch (cfg.format) {
    case Format::kText:
      if (range.single()) {
        res.out = values.front() + "\n";
      } else {
        for (unsigned r = range.lo; r <= range.hi; ++r) {
          res.out += std::to_string(r) + ": " + values[r - range.lo] + "\n";
        }
      }
      break;
    case Format::kCsv:
      res.out = "r," + value_name + "\n";
      for (unsigned r = range.lo; r <= range.hi; ++r) {
        res.out += std::to_string(r) + "," + values[r - range.lo] + "\n";
      }
      break;
    case Format::kJson: {
      nlohmann::ordered_json doc = nlohmann::ordered_json::array();
      for (unsigned r = range.lo; r <= range.hi; ++r) {
        doc.push_back({{"r", r}, {value_name, values[r - range.lo]}});
      }
      res.out = doc.dump(2) + "\n";
      break;
    }
  }
  return res;
}

}  // namespace detail

/// Number of rooted hypermaps with r darts (and 1 or 2 faces).
inline CommandResult cmd_count(const RunConfig& cfg) {
  const auto range = detail::resolve_range(cfg, 1, 1);
  std::string err;
  std::vector<std::string> values;
  if (cfg.faces == 2 && !cfg.method) {
    if (range.lo < 2) throw UsageError("two-face counts need r >= 2");
    for (unsigned r = range.lo; r <= range.hi; ++r) values.push_back(two_face_total(r).str());
  } else {
    for (const auto& p : detail::face_polys(cfg, range, err)) values.push_back(poly_eval(p, 1, 1).str());
  }
  auto res = detail::render_pairs(cfg, range, "count", values);
  if (cfg.format == Format::kText && !range.single()) {
    BigInt total = 0;
    for (const auto& v : values) total += BigInt(v);
    res.out += "total: " + total.str() + "\n";
  }
  res.err = err + res.err;
  return res;
}

inline CommandResult cmd_stirling(const RunConfig& cfg) {
  const auto range = detail::resolve_range(cfg, 1, 1);
  CommandResult res;
  switch (cfg.format) {
    case Format::kText:
      for (unsigned r = range.lo; r <= range.hi; ++r) {
        const auto row = stirling_row(r);
        if (!range.single()) res.out += std::to_string(r) + ":";
        for (std::size_t k = 0; k < row.size(); ++k) {
          res.out += (k == 0 && range.single() ? "" : " ") + row[k].str();
        }
        res.out += "\n";
      }
      break;
    case Format::kCsv:
      res.out = "r,k,count\n";
      for (unsigned r = range.lo; r <= range.hi; ++r) {
        const auto row = stirling_row(r);
        for (std::size_t k = 0; k < row.size(); ++k) {
          res.out += std::to_string(r) + "," + std::to_string(k + 1) + "," + row[k].str() + "\n";
        }
      }
      break;
    case Format::kJson: {
      nlohmann::ordered_json doc = nlohmann::ordered_json::array();
      for (unsigned r = range.lo; r <= range.hi; ++r) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (const auto& c : stirling_row(r)) row.push_back(c.str());
        doc.push_back({{"r", r}, {"row", row}});
      }
      res.out = doc.dump(2) + "\n";
      break;
    }
  }
  return res;
}

inline CommandResult cmd_avg_trace(const RunConfig& cfg) {
  if (cfg.m == 0 || cfg.n == 0) throw UsageError("--m and --n must be positive");
  const auto range = detail::resolve_range(cfg, 1, 1);
  std::vector<std::string> values;
  for (unsigned r = range.lo; r <= range.hi; ++r) values.push_back(avg_trace_power(cfg.m, cfg.n, r).str());
  return detail::render_pairs(cfg, range, "value", values);
}

/// Runs the cross-validation suite. One report line per check; exit code 1
/// if any check fails.
inline CommandResult cmd_verify(const RunConfig& cfg) {
  CommandResult res;
  const auto range = detail::resolve_range(cfg, 1, 9);
  const auto opts = detail::enum_options(cfg);
  unsigned passed = 0;
  unsigned failed = 0;
  auto report = [&](const std::string& name, unsigned r, bool ok, const std::string& detail = "") {
    (ok ? passed : failed) += 1;
    res.out += std::string(ok ? "PASS" : "FAIL") + "  " + name + " r=" + std::to_string(r);
    if (!detail.empty()) res.out += "  " + detail;
    res.out += "\n";
  };
  auto guarded = [&](const std::string& name, unsigned r, const std::function<bool()>& check) {
    try {
      report(name, r, check());
    } catch (const std::exception& e) {
      report(name, r, false, e.what());
    }
  };

  const unsigned enum_hi = std::min(range.hi, cfg.force ? range.hi : cfg.enum_ceiling);
  const auto recursive = recursion_sequence(std::max(range.hi, 13U));

  for (unsigned r = range.lo; r <= range.hi; ++r) {
    const BivarPoly closed = closed_form_p(r);
    const BivarPoly& rec = recursive[r - 1];
    const bool enumerable = r <= enum_hi;
    std::optional<BivarPoly> enumerated;
    if (enumerable) enumerated = enumerate_p(r, opts);

    guarded("method-agreement", r, [&] { return closed == rec && (!enumerated || *enumerated == closed); });
    guarded("total-is-r!", r, [&] { return poly_eval(closed, 1, 1) == factorial(r); });
    guarded("stirling-marginal", r, [&] {
      std::vector<BigInt> marginal = closed.marginal_m();
      const std::vector<BigInt> row = stirling_row(r);
      if (marginal.size() != row.size() + 1 || marginal[0] != 0) return false;
      if (!std::equal(row.begin(), row.end(), marginal.begin() + 1)) return false;
      return !enumerated || enumerated->marginal_m() == marginal;
    });
    guarded("symmetry", r, [&] { return closed.swapped() == closed; });
    guarded("parity", r, [&] {
      return std::all_of(closed.terms().begin(), closed.terms().end(), [r](const auto& t) {
        const unsigned deg = t.first.e + t.first.v;
        return t.first.e >= 1 && t.first.v >= 1 && deg <= r + 1 && (deg % 2) == ((r + 1) % 2);
      });
    });
    guarded("certificate", r, [&] {
      for (long k = -1; k <= static_cast<long>(r) + 2; ++k) {
        if (!verify_certificate(r, k)) return false;
      }
      return telescoping_check(r);
    });
    guarded("avg-trace-agreement", r, [&] {
      for (unsigned m = 1; m <= 8; ++m) {
        for (unsigned n = 1; n <= 8; ++n) {
          const BigInt value = poly_eval(closed, m, n);
          const auto direct = rat_reduce(value, rising_value(BigInt(m) * n, r));
          if (direct != avg_trace_power_alt(m, n, r)) return false;
        }
      }
      return true;
    });
    if (r >= 2 && enumerable) {
      guarded("two-face", r, [&] {
        const auto result = two_face_gf(r, opts);
        return result.gf == connected_two_face_oracle(r, opts) && result.total == two_face_total(r);
      });
    }
  }

  BigInt cumulative = 0;
  BigInt expected = 0;
  for (unsigned r = 1; r <= 13; ++r) {
    cumulative += poly_eval(recursive[r - 1], 1, 1);
    expected += factorial(r);
  }
  report("cumulative-total r=1..13", 13, cumulative == expected, cumulative.str());

  res.out += "verify: " + std::to_string(passed) + " passed, " + std::to_string(failed) + " failed\n";
  res.exit_code = failed == 0 ? 0 : 1;
  return res;
}

namespace detail {

/// Smallest observable nonzero step of the steady clock, in milliseconds.
inline double clock_resolution_ms() {
  using Clock = std::chrono::steady_clock;
  Clock::duration best = Clock::duration::max();
  for (int i = 0; i < 200; ++i) {
    const auto t0 = Clock::now();
    auto t1 = Clock::now();
    while (t1 == t0) t1 = Clock::now();
    best = std::min(best, t1 - t0);
  }
  return std::chrono::duration<double, std::milli>(best).count();
}

}  // namespace detail

/// Times one method at one r: a discarded warm-up run, then the median of
/// `repetitions` timed runs.
inline BenchRecord bench_one(Method method, unsigned r, unsigned repetitions, const EnumOptions& opts,
                             double resolution_ms) {
  using Clock = std::chrono::steady_clock;
  auto compute = [&]() -> BivarPoly {
    switch (method) {
      case Method::kEnumerate:
        return enumerate_p(r, opts);
      case Method::kClosed:
        return closed_form_p(r);
      case Method::kRecursion:
        return recursion_p(r);
    }
    return {};
  };
  BenchRecord rec{method, r, 0.0, poly_eval(compute(), 1, 1), false};
  std::vector<double> samples;
  for (unsigned i = 0; i < std::max(1U, repetitions); ++i) {
    const auto t0 = Clock::now();
    const BivarPoly p = compute();
    const auto t1 = Clock::now();
    samples.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
    if (p.is_zero()) throw std::logic_error("empty polynomial");
  }
  std::sort(samples.begin(), samples.end());
  const std::size_t mid = samples.size() / 2;
  rec.wall_ms = samples.size() % 2 == 1 ? samples[mid] : (samples[mid - 1] + samples[mid]) / 2;
  rec.below_resolution = rec.wall_ms < resolution_ms;
  return rec;
}

inline std::string render_bench_csv(const std::vector<BenchRecord>& records) {
  std::ostringstream os;
  os << "method,r,ms,count,below_resolution\n";
  for (const auto& rec : records) {
    os << method_name(rec.method) << ',' << rec.r << ',' << std::fixed << std::setprecision(3) << rec.wall_ms
       << ',' << rec.hypermap_count << ',' << (rec.below_resolution ? 1 : 0) << '\n';
  }
  return os.str();
}

inline CommandResult cmd_bench(const RunConfig& cfg) {
  CommandResult res;
  const auto range = detail::resolve_range(cfg, 1, 10);
  std::vector<Method> methods;
  if (cfg.method) {
    methods.push_back(*cfg.method);
  } else {
    methods = {Method::kEnumerate, Method::kClosed};
  }
  const double resolution = detail::clock_resolution_ms();
  std::vector<BenchRecord> records;
  for (Method method : methods) {
    for (unsigned r = range.lo; r <= range.hi; ++r) {
      if (method == Method::kEnumerate) {
        if (r > cfg.enum_ceiling && !cfg.force) {
          // An explicit --method enumerate over the ceiling is an error; in
          // the default both-methods sweep the enumerative series just stops.
          if (cfg.method) throw LimitExceeded(r, cfg.enum_ceiling);
          break;
        }
        detail::guard_enumeration(cfg, r, res.err);
      }
      records.push_back(bench_one(method, r, cfg.repetitions, detail::enum_options(cfg), resolution));
    }
  }
  res.out = render_bench_csv(records);
  return res;
}

/// Dispatches cfg.command. Domain errors become exit code 2 with a message
/// on err; check failures from verify keep exit code 1.
inline CommandResult run(const RunConfig& cfg) {
  try {
    switch (cfg.command) {
      case Command::kPoly:
        return cmd_poly(cfg);
      case Command::kTable:
        return cmd_table(cfg);
      case Command::kCount:
        return cmd_count(cfg);
      case Command::kStirling:
        return cmd_stirling(cfg);
      case Command::kAvgTrace:
        return cmd_avg_trace(cfg);
      case Command::kVerify:
        return cmd_verify(cfg);
      case Command::kBench:
        return cmd_bench(cfg);
    }
  } catch (const LimitExceeded& e) {
    return {2, "", "error: " + std::string(e.what()) + " (pass --force or raise --enum-ceiling)\n"};
  } catch (const std::exception& e) {
    return {2, "", "error: " + std::string(e.what()) + "\n"};
  }
  return {2, "", "error: unknown command\n"};
}

}  // namespace hypermap::cli

#endif  // HYPERMAP_TOOLS_HYPERMAP_CLI_HPP_
