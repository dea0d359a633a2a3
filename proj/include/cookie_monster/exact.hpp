#ifndef COOKIE_MONSTER_EXACT_HPP
#define COOKIE_MONSTER_EXACT_HPP

// Exact Cookie Monster numbers.
//
// Since moves commute, a plan with n moves is the same thing as a multiset of
// n amounts such that every jar is a sub-multiset sum of it. cm_exact searches
// those multisets directly, by iterative deepening on n. cm_bfs searches the
// game tree move by move and shares no code with it; it exists to cross-check.

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <exception>
#include <limits>
#include <mutex>
#include <optional>
#include <span>
#include <thread>
#include <unordered_set>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "cookie_monster/bounds.hpp"
#include "cookie_monster/core.hpp"

namespace cookie_monster {

/// The cover search ran out of nodes. CM lies in [lower, upper].
class budget_exhausted : public resource_error {
 public:
  budget_exhausted(unsigned lower, unsigned upper, std::uint64_t nodes)
      : resource_error("node budget exhausted after " + std::to_string(nodes) + " nodes; CM in [" +
                       std::to_string(lower) + ", " + std::to_string(upper) + "]"),
        lower(lower),
        upper(upper),
        nodes(nodes) {}
  unsigned lower;
  unsigned upper;
  std::uint64_t nodes;
};

struct ExactOptions {
  std::uint64_t node_budget = 10'000'000;
  unsigned threads = 1;
};

struct ExactResult {
  unsigned cm = 0;
  Certificate certificate;
  std::uint64_t nodes_explored = 0;
};

/// Largest jar the cover search accepts; reachable sums are kept as a bitset.
inline constexpr Cookies kMaxSearchValue = Cookies{1} << 24;

namespace detail {

using Bits = boost::dynamic_bitset<std::uint64_t>;

inline Bits subset_sums(std::span<const Cookies> amounts, Cookies limit) {
  if (limit >= kMaxSearchValue) throw resource_error("value too large for subset-sum table");
  Bits reach(static_cast<std::size_t>(limit) + 1);
  reach.set(0);
  for (auto a : amounts)
    if (a <= limit) reach |= reach << a;
  return reach;
}

// Depth-first enumeration of nonincreasing amount sequences of fixed length.
// Amounts are tried in ascending order, so the first hit is the
// lexicographically smallest cover of that length.
class CoverSearch {
 public:
  CoverSearch(std::span<const Cookies> jars, unsigned depth, std::atomic<std::uint64_t>& nodes,
              std::uint64_t budget, const std::atomic<Cookies>& cutoff)
      : jars_(jars), depth_(depth), nodes_(nodes), budget_(budget), cutoff_(cutoff) {
    levels_.assign(depth + 1, Bits(static_cast<std::size_t>(jars.back()) + 1));
    levels_[0].set(0);
  }

  // Searches every sequence whose first amount is `first`.
  std::optional<std::vector<Cookies>> run(Cookies first) {
    first_ = first;
    chosen_.clear();
    if (!extend(0, first)) return std::nullopt;
    if (depth_ == 1 ? covers(levels_[1]) : descend(1, first)) return chosen_;
    return std::nullopt;
  }

 private:
  bool extend(unsigned level, Cookies a) {
    if (nodes_.fetch_add(1, std::memory_order_relaxed) >= budget_) throw exhausted{};
    auto& next = levels_[level + 1];
    next = levels_[level];
    next |= levels_[level] << a;
    if (!feasible(next, depth_ - level - 1, a)) return false;
    chosen_.resize(level);
    chosen_.push_back(a);
    return true;
  }

  bool descend(unsigned level, Cookies last) {
    if (level + 1 == depth_) return finish(level, last);
    for (Cookies a = 1; a <= last; ++a) {
      if (cutoff_.load(std::memory_order_relaxed) < first_) return false;
      if (!extend(level, a)) continue;
      if (descend(level + 1, a)) return true;
    }
    return false;
  }

  // Last amount: every jar not yet reachable needs s - a reachable, so scan
  // for the smallest such a instead of expanding each candidate.
  bool finish(unsigned level, Cookies last) {
    if (nodes_.fetch_add(1, std::memory_order_relaxed) >= budget_) throw exhausted{};
    const auto& reach = levels_[level];
    missing_.clear();
    for (auto s : jars_)
      if (!reach.test(s)) missing_.push_back(s);
    Cookies cap = last;
    if (!missing_.empty()) cap = std::min(cap, missing_.front());
    for (Cookies a = 1; a <= cap; ++a) {
      if (cutoff_.load(std::memory_order_relaxed) < first_) return false;
      if (std::all_of(missing_.begin(), missing_.end(), [&](Cookies s) { return reach.test(s - a); })) {
        chosen_.resize(level);
        chosen_.push_back(a);
        return true;
      }
    }
    return false;
  }

  bool covers(const Bits& reach) const {
    return std::all_of(jars_.begin(), jars_.end(), [&](Cookies s) { return reach.test(s); });
  }

  // Each jar must still be reachable: some current sum p with
  // s - remaining * last <= p <= s, since later amounts are at most `last`.
  bool feasible(const Bits& reach, unsigned remaining, Cookies last) const {
    const Cookies slack = static_cast<Cookies>(remaining) * last;
    for (auto s : jars_) {
      const Cookies lo = slack >= s ? 0 : s - slack;
      if (reach.test(lo)) continue;
      const auto hit = reach.find_next(lo);
      if (hit == Bits::npos || hit > s) return false;
    }
    return true;
  }

 public:
  struct exhausted {};

 private:
  std::span<const Cookies> jars_;
  unsigned depth_;
  std::atomic<std::uint64_t>& nodes_;
  std::uint64_t budget_;
  const std::atomic<Cookies>& cutoff_;
  Cookies first_ = 0;
  std::vector<Bits> levels_;
  std::vector<Cookies> chosen_;
  std::vector<Cookies> missing_;
};

// Lexicographically smallest nonincreasing cover with exactly `depth`
// amounts. Top-level amounts are handed out to workers in ascending order;
// the answer is the hit with the smallest first amount, whatever the schedule.
inline std::optional<std::vector<Cookies>> search_depth(std::span<const Cookies> jars, unsigned depth,
                                                        unsigned threads, std::atomic<std::uint64_t>& nodes,
                                                        std::uint64_t budget, bool& out_of_budget) {
  const Cookies top = jars.back();
  std::atomic<Cookies> next_first{1};
  std::atomic<Cookies> best_first{std::numeric_limits<Cookies>::max()};
  std::mutex mu;
  std::optional<std::vector<Cookies>> best;
  std::exception_ptr failure;
  std::atomic<bool> exhausted{false};

  auto worker = [&] {
    try {
      CoverSearch search(jars, depth, nodes, budget, best_first);
      for (;;) {
        const Cookies first = next_first.fetch_add(1);
        if (first > top || first > best_first.load()) return;
        if (auto hit = search.run(first)) {
          std::lock_guard lock(mu);
          if (first < best_first.load()) {
            best_first.store(first);
            best = std::move(hit);
          }
          return;
        }
      }
    } catch (const CoverSearch::exhausted&) {
      exhausted.store(true);
    } catch (...) {
      std::lock_guard lock(mu);
      failure = std::current_exception();
    }
  };

  const unsigned n = std::max(1u, threads);
  if (n == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(n);
    for (unsigned i = 0; i < n; ++i) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  // A worker that hit the budget may have been searching a smaller first
  // amount than the best hit, so the hit is not known to be lex-smallest.
  if (exhausted.load()) {
    out_of_budget = true;
    return std::nullopt;
  }
  return best;
}

}  // namespace detail

/// Indices of a sub-multiset of `amounts` summing to `value`, if one exists.
/// Prefers earlier amounts, so with nonincreasing amounts it prefers large ones.
inline std::optional<std::vector<std::size_t>> find_subset(Cookies value, std::span<const Cookies> amounts) {
  if (value >= kMaxSearchValue) throw resource_error("value too large for subset-sum table");
  // reach[i] = sums reachable with amounts[i..]
  std::vector<detail::Bits> reach(amounts.size() + 1, detail::Bits(static_cast<std::size_t>(value) + 1));
  reach[amounts.size()].set(0);
  for (std::size_t i = amounts.size(); i-- > 0;) {
    reach[i] = reach[i + 1];
    if (amounts[i] <= value) reach[i] |= reach[i + 1] << amounts[i];
  }
  if (!reach[0].test(value)) return std::nullopt;
  std::vector<std::size_t> picked;
  Cookies rest = value;
  for (std::size_t i = 0; i < amounts.size() && rest > 0; ++i) {
    if (amounts[i] <= rest && reach[i + 1].test(rest - amounts[i])) {
      picked.push_back(i);
      rest -= amounts[i];
    }
  }
  return picked;
}

/// Whether some sub-multiset of `amounts` sums to `value`.
inline bool representable(Cookies value, std::span<const Cookies> amounts) {
  if (value == 0) return true;
  return detail::subset_sums(amounts, value).test(value);
}

inline Certificate certificate_from_amounts(const JarSet& s, std::vector<Cookies> amounts) {
  Certificate cert;
  cert.amounts = std::move(amounts);
  for (auto jar : s) {
    auto picked = find_subset(jar, cert.amounts);
    if (!picked) throw domain_error("amounts do not cover jar " + std::to_string(jar));
    cert.assignments.push_back({jar, std::move(*picked)});
  }
  return cert;
}

/// Exact CM with a witnessing certificate. The certificate is the
/// lexicographically smallest nonincreasing amount sequence of minimum size,
/// independent of the thread count.
inline ExactResult cm_exact(const JarSet& s, const ExactOptions& options = {}) {
  ExactResult result;
  if (s.empty()) return result;
  if (s.size() == 1) {
    result.cm = 1;
    result.certificate = {{s.max()}, {{s.max(), {0}}}};
    return result;
  }
  if (s.max() >= kMaxSearchValue)
    throw resource_error("largest jar exceeds the exact solver's value limit of " +
                         std::to_string(kMaxSearchValue - 1));

  const unsigned lo = std::max({lower_bound(s), subset_sum_count_bound(s), superincreasing_lower_bound(s)});
  const unsigned hi = upper_bound(s);
  std::atomic<std::uint64_t> nodes{0};
  for (unsigned depth = lo; depth <= hi; ++depth) {
    bool out_of_budget = false;
    auto amounts = detail::search_depth(s.values(), depth, options.threads, nodes, options.node_budget,
                                        out_of_budget);
    if (out_of_budget) throw budget_exhausted(depth, hi, nodes.load());
    if (amounts) {
      result.cm = depth;
      result.certificate = certificate_from_amounts(s, std::move(*amounts));
      result.nodes_explored = nodes.load();
      return result;
    }
  }
  // Unreachable: one of the upper bounds is always attained.
  throw std::logic_error("cover search exceeded a proven upper bound");
}

/// Concrete plan realizing a certificate: one move per amount, largest
/// amounts first. Jars that collide on the way are merged and follow the
/// remaining moves of the smaller original jar; a move left with no target
/// after such a merge is dropped, so the plan never exceeds the certificate.
inline MovePlan plan_from_certificate(const JarSet& s, const Certificate& c) {
  if (!c.is_valid_for(s)) throw domain_error("certificate does not match the jar set");

  std::vector<std::size_t> order(c.amounts.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return c.amounts[a] > c.amounts[b]; });

  const std::size_t k = s.size();
  std::vector<Cookies> current(s.begin(), s.end());
  std::vector<std::vector<bool>> pending(k, std::vector<bool>(c.amounts.size(), false));
  for (std::size_t i = 0; i < k; ++i)
    for (auto idx : c.assignments[i].moves) pending[i][idx] = true;

  MovePlan plan;
  for (auto j : order) {
    Move move{{}, c.amounts[j]};
    for (std::size_t i = 0; i < k; ++i) {
      if (current[i] == 0 || !pending[i][j]) continue;
      if (std::find(move.targets.begin(), move.targets.end(), current[i]) == move.targets.end())
        move.targets.push_back(current[i]);
    }
    if (move.targets.empty()) continue;
    std::sort(move.targets.begin(), move.targets.end());
    for (std::size_t i = 0; i < k; ++i) {
      if (current[i] != 0 && std::binary_search(move.targets.begin(), move.targets.end(), current[i])) {
        current[i] -= move.amount;
        pending[i][j] = false;
      }
    }
    // Merge collided jars onto the smallest original jar at that value.
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t r = 0; r < i; ++r)
        if (current[i] != 0 && current[i] == current[r]) {
          pending[i] = pending[r];
          break;
        }
    plan.push_back(std::move(move));
  }
  return plan;
}

struct BfsCaps {
  std::size_t max_jars = 6;
  Cookies max_value = 40;
  std::uint64_t max_states = 1'000'000;
};

namespace detail {

// Visited states for the breadth-first search. A state is a set of distinct
// values, so it is stored as a mask with bit v - 1 set for value v. When the
// number of masks with at most max_jars bits is small, they are ranked
// (colex within each popcount) into a flat bitmap; otherwise a hash set.
class VisitedStates {
 public:
  VisitedStates(unsigned bits, std::size_t max_jars) : max_jars_(max_jars) {
    choose_.assign(bits + 1, std::vector<std::uint64_t>(max_jars + 2, 0));
    for (unsigned n = 0; n <= bits; ++n) {
      choose_[n][0] = 1;
      for (std::size_t c = 1; c <= std::min<std::size_t>(n, max_jars + 1); ++c)
        choose_[n][c] = choose_[n - 1][c - 1] + (c <= n - 1 ? choose_[n - 1][c] : 0);
    }
    std::uint64_t total = 0;
    offset_.assign(max_jars + 2, 0);
    for (std::size_t c = 0; c <= max_jars; ++c) {
      offset_[c] = total;
      total += choose_[bits][c];
      if (total > kFlatLimit) break;
    }
    if (total <= kFlatLimit) flat_.resize(static_cast<std::size_t>(total));
  }

  // True if the state was not seen before.
  bool insert(std::uint64_t mask) {
    if (flat_.empty()) return hashed_.insert(mask).second;
    const std::size_t r = rank(mask);
    if (flat_.test(r)) return false;
    flat_.set(r);
    return true;
  }

 private:
  static constexpr std::uint64_t kFlatLimit = std::uint64_t{1} << 28;

  std::size_t rank(std::uint64_t mask) const {
    const auto c = static_cast<std::size_t>(std::popcount(mask));
    std::uint64_t r = offset_[c];
    for (std::size_t i = 1; mask != 0; ++i, mask &= mask - 1)
      r += choose_[static_cast<unsigned>(std::countr_zero(mask))][i];
    return static_cast<std::size_t>(r);
  }

  std::size_t max_jars_;
  std::vector<std::vector<std::uint64_t>> choose_;
  std::vector<std::uint64_t> offset_;
  Bits flat_;
  std::unordered_set<std::uint64_t> hashed_;
};

}  // namespace detail

/// Exact CM by breadth-first search over game states, trying every move.
inline unsigned cm_bfs(const JarSet& s, const BfsCaps& caps = {}) {
  if (s.empty()) return 0;
  if (s.size() > caps.max_jars)
    throw resource_error("breadth-first search is capped at " + std::to_string(caps.max_jars) + " jars");
  if (s.max() > caps.max_value)
    throw resource_error("breadth-first search is capped at jar value " + std::to_string(caps.max_value));
  if (s.max() > 64) throw resource_error("breadth-first search supports jar values up to 64");

  std::uint64_t start = 0;
  for (auto v : s) start |= std::uint64_t{1} << (v - 1);

  // Jars never gain cookies and distinct values never split, so no state
  // has more jars or a larger value than the start.
  detail::VisitedStates seen(static_cast<unsigned>(s.max()), s.size());
  std::uint64_t states = 1;
  seen.insert(start);
  std::vector<std::uint64_t> frontier{start};
  for (unsigned depth = 0;; ++depth) {
    std::vector<std::uint64_t> upcoming;
    for (auto state : frontier) {
      // Every nonempty subset of the jars, with every amount up to its smallest jar.
      for (std::uint64_t sub = state; sub != 0; sub = (sub - 1) & state) {
        const auto smallest = static_cast<unsigned>(std::countr_zero(sub)) + 1;
        const std::uint64_t rest = state & ~sub;
        for (unsigned a = 1; a <= smallest; ++a) {
          // Bits below position 0 fall off: those jars were emptied.
          const std::uint64_t child = rest | (sub >> a);
          if (child == 0) return depth + 1;
          if (!seen.insert(child)) continue;
          if (++states > caps.max_states)
            throw resource_error("breadth-first search exceeded " + std::to_string(caps.max_states) + " states");
          upcoming.push_back(child);
        }
      }
    }
    frontier = std::move(upcoming);
  }
}

}  // namespace cookie_monster

#endif
