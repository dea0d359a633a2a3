#ifndef COOKIE_MONSTER_BENCH_HPP
#define COOKIE_MONSTER_BENCH_HPP

// Random-instance harness comparing the exact solver, the three heuristics
// and the closed-form bounds. Output depends only on the options: instance i
// always comes from the same seeded stream, and records are written in
// instance order however many threads ran them.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <future>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cookie_monster/bounds.hpp"
#include "cookie_monster/exact.hpp"
#include "cookie_monster/heuristics.hpp"
#include "cookie_monster/io.hpp"

namespace cookie_monster {

struct BenchOptions {
  std::size_t count = 100;
  std::size_t max_k = 6;
  Cookies max_value = 40;
  std::uint64_t seed = 0;
  std::uint64_t node_budget = 10'000'000;
  unsigned threads = 1;
  bool timing = false;  // wall-clock columns make output run-dependent
};

struct BenchRecord {
  std::size_t index = 0;
  JarSet instance;
  std::optional<unsigned> exact;  // empty when the budget ran out
  unsigned lower = 0;
  unsigned upper_trivial = 0;
  unsigned upper_binary = 0;
  unsigned upper_diameter = 0;
  std::size_t emja = 0;
  std::size_t tca = 0;
  std::size_t ba = 0;
  double exact_ms = 0;
  double heuristics_ms = 0;
};

/// k uniform in [2, max_k]; values drawn without replacement from [1, max_value].
inline std::vector<JarSet> bench_instances(const BenchOptions& opt) {
  if (opt.max_k < 2) throw domain_error("--max-k must be at least 2");
  if (opt.max_value < opt.max_k) throw domain_error("--max-value must be at least --max-k");
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<std::size_t> pick_k(2, opt.max_k);
  std::vector<Cookies> pool(opt.max_value);
  std::iota(pool.begin(), pool.end(), Cookies{1});
  std::vector<JarSet> out;
  out.reserve(opt.count);
  for (std::size_t i = 0; i < opt.count; ++i) {
    const std::size_t k = pick_k(rng);
    // partial Fisher-Yates
    for (std::size_t j = 0; j < k; ++j) {
      std::uniform_int_distribution<std::size_t> pick(j, pool.size() - 1);
      std::swap(pool[j], pool[pick(rng)]);
    }
    out.emplace_back(std::vector<Cookies>(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k)));
  }
  return out;
}

inline BenchRecord bench_one(std::size_t index, const JarSet& s, const BenchOptions& opt) {
  using clock = std::chrono::steady_clock;
  BenchRecord rec;
  rec.index = index;
  rec.instance = s;
  rec.lower = lower_bound(s);
  rec.upper_trivial = upper_bound_trivial(s);
  rec.upper_binary = upper_bound_binary(s);
  rec.upper_diameter = upper_bound_diameter(s);

  auto t0 = clock::now();
  try {
    rec.exact = cm_exact(s, {opt.node_budget, 1}).cm;
  } catch (const budget_exhausted&) {
  }
  auto t1 = clock::now();
  rec.emja = run_heuristic(s, Algorithm::emja).move_count;
  rec.tca = run_heuristic(s, Algorithm::tca).move_count;
  rec.ba = run_heuristic(s, Algorithm::ba).move_count;
  auto t2 = clock::now();
  rec.exact_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  rec.heuristics_ms = std::chrono::duration<double, std::milli>(t2 - t1).count();
  return rec;
}

inline std::vector<BenchRecord> run_bench(const BenchOptions& opt) {
  const auto instances = bench_instances(opt);
  std::vector<BenchRecord> records(instances.size());
  const unsigned n = std::max(1u, opt.threads);
  if (n == 1) {
    for (std::size_t i = 0; i < instances.size(); ++i) records[i] = bench_one(i, instances[i], opt);
    return records;
  }
  std::vector<std::future<void>> jobs;
  for (unsigned w = 0; w < n; ++w) {
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < instances.size(); i += n) records[i] = bench_one(i, instances[i], opt);
    }));
  }
  for (auto& j : jobs) j.get();
  return records;
}

inline std::string format_bench(const std::vector<BenchRecord>& records, const BenchOptions& opt, Format fmt) {
  std::ostringstream os;
  auto exact_str = [](const BenchRecord& r) { return r.exact ? std::to_string(*r.exact) : std::string("budget"); };
  switch (fmt) {
    case Format::csv:
      os << "index,instance,exact,lower,upper_trivial,upper_binary,upper_diameter,emja,tca,ba";
      if (opt.timing) os << ",exact_ms,heuristics_ms";
      os << '\n';
      for (const auto& r : records) {
        os << r.index << ",\"" << join(r.instance.values(), " ") << "\"," << exact_str(r) << ',' << r.lower << ','
           << r.upper_trivial << ',' << r.upper_binary << ',' << r.upper_diameter << ',' << r.emja << ',' << r.tca
           << ',' << r.ba;
        if (opt.timing) os << ',' << r.exact_ms << ',' << r.heuristics_ms;
        os << '\n';
      }
      break;
    case Format::text:
      for (const auto& r : records) {
        os << '#' << r.index << " {" << join(r.instance.values()) << "}  exact=" << exact_str(r)
           << "  bounds=[" << r.lower << ", min(" << r.upper_trivial << ',' << r.upper_binary << ','
           << r.upper_diameter << ")]  emja=" << r.emja << "  tca=" << r.tca << "  ba=" << r.ba;
        if (opt.timing) os << "  exact_ms=" << r.exact_ms << "  heuristics_ms=" << r.heuristics_ms;
        os << '\n';
      }
      break;
    case Format::json: {
      json arr = json::array();
      for (const auto& r : records) {
        json j{{"index", r.index},
               {"seed", opt.seed},
               {"instance", to_json(r.instance)},
               {"exact", r.exact ? json(*r.exact) : json(nullptr)},
               {"bounds",
                {{"lower", r.lower},
                 {"trivial", r.upper_trivial},
                 {"binary", r.upper_binary},
                 {"diameter", r.upper_diameter}}},
               {"heuristics", {{"emja", r.emja}, {"tca", r.tca}, {"ba", r.ba}}}};
        if (opt.timing) j["timing_ms"] = {{"exact", r.exact_ms}, {"heuristics", r.heuristics_ms}};
        arr.push_back(std::move(j));
      }
      os << arr.dump(2) << '\n';
      break;
    }
  }
  return os.str();
}

}  // namespace cookie_monster

#endif
