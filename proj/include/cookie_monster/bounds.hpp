#ifndef COOKIE_MONSTER_BOUNDS_HPP
#define COOKIE_MONSTER_BOUNDS_HPP

// Closed-form bounds and structural predicates on the Cookie Monster number.
// All of them treat the empty jar set as needing zero moves.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <vector>

#include "cookie_monster/core.hpp"

namespace cookie_monster {

/// floor(log2(x)) for x >= 1.
constexpr unsigned floor_log2(std::uint64_t x) { return static_cast<unsigned>(std::bit_width(x)) - 1; }

/// floor(log2 k) + 1: a move can at most halve (k + 1).
inline unsigned lower_bound(const JarSet& s) {
  return s.empty() ? 0 : floor_log2(s.size()) + 1;
}

/// Smallest n with 2^n - 1 >= k; n amounts have at most 2^n - 1 nonzero subset sums.
inline unsigned subset_sum_count_bound(const JarSet& s) {
  unsigned n = 0;
  while (((std::uint64_t{1} << n) - 1) < s.size()) ++n;
  return n;
}

/// One move per jar.
inline unsigned upper_bound_trivial(const JarSet& s) { return static_cast<unsigned>(s.size()); }

/// Binary representation: amounts 1, 2, 4, ... up to the largest jar.
inline unsigned upper_bound_binary(const JarSet& s) {
  if (s.empty()) throw domain_error("binary bound needs at least one jar");
  return floor_log2(s.max()) + 1;
}

/// Take the smallest jar from every jar first, then go binary on the spread.
inline unsigned upper_bound_diameter(const JarSet& s) {
  if (s.size() < 2) throw domain_error("diameter bound needs at least two jars");
  return 2 + floor_log2(s.max() - s.min());
}

/// Best of the three upper bounds that apply to s.
inline unsigned upper_bound(const JarSet& s) {
  if (s.empty()) return 0;
  unsigned best = std::min(upper_bound_trivial(s), upper_bound_binary(s));
  if (s.size() >= 2) best = std::min(best, upper_bound_diameter(s));
  return best;
}

/// Every jar holds more than all smaller jars together. Forces CM = k.
inline bool is_superincreasing(const JarSet& s) {
  Cookies prefix = 0;
  for (auto v : s) {
    if (v <= prefix) return false;
    prefix = detail::checked_add(prefix, v);
  }
  return true;
}

/// Size of the largest superincreasing subset. Every cover of s covers that
/// subset, which alone needs one move per jar, so this bounds CM from below.
inline unsigned superincreasing_lower_bound(const JarSet& s) {
  // least[c] = smallest total of a superincreasing pick of c jars so far
  constexpr Cookies none = std::numeric_limits<Cookies>::max();
  std::vector<Cookies> least(s.size() + 1, none);
  least[0] = 0;
  unsigned best = 0;
  for (auto v : s)
    for (unsigned c = best + 1; c >= 1; --c) {
      if (least[c - 1] == none || v <= least[c - 1]) continue;
      const Cookies total = least[c - 1] > none - v ? none - 1 : least[c - 1] + v;
      if (total < least[c]) {
        least[c] = total;
        best = std::max(best, c);
      }
    }
  return best;
}

/// Contains every power of two not exceeding its largest jar.
inline bool is_two_powerful(const JarSet& s) {
  if (s.empty()) return true;
  for (Cookies p = 1; p <= s.max(); p <<= 1) {
    if (!s.contains(p)) return false;
    if (p > (s.max() >> 1)) break;
  }
  return true;
}

/// Exact CM of a two-powerful set.
inline unsigned cm_two_powerful(const JarSet& s) {
  if (!is_two_powerful(s)) throw domain_error("jar set is not two-powerful");
  return s.empty() ? 0 : floor_log2(s.max()) + 1;
}

/// Multiplies every jar by d. CM does not change.
inline JarSet scale(const JarSet& s, std::int64_t d) {
  if (d <= 0) throw domain_error("scale factor must be positive");
  std::vector<Cookies> out;
  out.reserve(s.size());
  for (auto v : s) out.push_back(detail::checked_mul(v, static_cast<Cookies>(d)));
  return JarSet(std::move(out));
}

}  // namespace cookie_monster

#endif
