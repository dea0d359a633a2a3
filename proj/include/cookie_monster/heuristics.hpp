#ifndef COOKIE_MONSTER_HEURISTICS_HPP
#define COOKIE_MONSTER_HEURISTICS_HPP

// Greedy strategies: Empty the Most Jars (EMJA), Take the Most Cookies (TCA)
// and the Binary Algorithm (BA). None of them is optimal on every input.
//
// Ties are not specified by the strategies themselves; the conventions used
// here are:
//   EMJA: most jars discarded, then most cookies taken, then larger amount,
//         then lexicographically smallest target list.
//   TCA:  most cookies taken, then larger amount.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cookie_monster/bounds.hpp"
#include "cookie_monster/core.hpp"

namespace cookie_monster {

enum class Algorithm { emja, tca, ba };

inline std::string_view to_string(Algorithm a) {
  switch (a) {
    case Algorithm::emja: return "emja";
    case Algorithm::tca: return "tca";
    case Algorithm::ba: return "ba";
  }
  return "?";
}

inline Algorithm parse_algorithm(std::string_view name) {
  if (name == "emja") return Algorithm::emja;
  if (name == "tca") return Algorithm::tca;
  if (name == "ba") return Algorithm::ba;
  throw domain_error("unknown algorithm '" + std::string(name) + "' (expected emja, tca or ba)");
}

inline constexpr std::size_t kEmjaDefaultMaxJars = 20;

/// Number of distinct jars a move discards (empties or merges into another).
inline std::size_t discarded_by(const JarSet& s, const Move& m) { return s.size() - apply_move(s, m).size(); }

/// EMJA move. Only amounts t - v (t targeted, v a jar or 0, t - v <= min
/// target) can discard a jar: targeted jars keep their pairwise gaps, so a
/// collision is a target hitting zero or hitting an untouched value.
inline Move emja_step(const JarSet& s, std::size_t max_jars = kEmjaDefaultMaxJars) {
  if (s.empty()) throw domain_error("no jars to move on");
  if (s.size() > max_jars)
    throw domain_error("EMJA enumerates all jar subsets; refusing " + std::to_string(s.size()) + " jars (limit " +
                       std::to_string(max_jars) + ")");
  const std::size_t k = s.size();

  Move best;
  std::size_t best_discard = 0;
  Cookies best_total = 0;
  bool have = false;

  std::vector<Cookies> targets;
  std::vector<Cookies> candidates;
  for (std::uint64_t subset = 1; subset < (std::uint64_t{1} << k); ++subset) {
    targets.clear();
    for (std::size_t i = 0; i < k; ++i)
      if (subset >> i & 1) targets.push_back(s[i]);
    const Cookies floor_amount = targets.front();

    candidates.clear();
    for (auto t : targets) {
      if (t <= floor_amount) candidates.push_back(t);
      for (auto v : s)
        if (v < t && t - v <= floor_amount) candidates.push_back(t - v);
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    for (auto amount : candidates) {
      Move m{targets, amount};
      const std::size_t discard = discarded_by(s, m);
      const Cookies total = amount * targets.size();
      bool better = !have;
      if (!better) {
        if (discard != best_discard) better = discard > best_discard;
        else if (total != best_total) better = total > best_total;
        else if (amount != best.amount) better = amount > best.amount;
        else better = targets < best.targets;
      }
      if (better) {
        have = true;
        best = std::move(m);
        best_discard = discard;
        best_total = total;
      }
    }
  }
  return best;
}

/// TCA move: the best total is a * #{jars >= a} for some jar value a.
inline Move tca_step(const JarSet& s) {
  if (s.empty()) throw domain_error("no jars to move on");
  std::size_t best_index = 0;
  Cookies best_total = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const Cookies total = detail::checked_mul(s[i], s.size() - i);
    if (total >= best_total) {  // later index = larger amount wins ties
      best_total = total;
      best_index = i;
    }
  }
  auto vals = s.values();
  return Move{{vals.begin() + static_cast<std::ptrdiff_t>(best_index), vals.end()}, s[best_index]};
}

/// BA move: the largest power of two that fits, from every jar it fits in.
inline Move ba_step(const JarSet& s) {
  if (s.empty()) throw domain_error("no jars to move on");
  const Cookies power = Cookies{1} << floor_log2(s.max());
  Move m{{}, power};
  for (auto v : s)
    if (v >= power) m.targets.push_back(v);
  return m;
}

inline Move heuristic_step(const JarSet& s, Algorithm alg) {
  switch (alg) {
    case Algorithm::emja: return emja_step(s);
    case Algorithm::tca: return tca_step(s);
    case Algorithm::ba: return ba_step(s);
  }
  throw domain_error("unknown algorithm");
}

struct HeuristicRun {
  Algorithm algorithm = Algorithm::ba;
  MovePlan plan;
  std::size_t move_count = 0;
  std::vector<Cookies> cookies_removed_per_move;
};

/// Applies the chosen step until every jar is empty. Each strategy makes
/// progress on every move, so this terminates.
inline HeuristicRun run_heuristic(const JarSet& s, Algorithm alg) {
  HeuristicRun run{alg, {}, 0, {}};
  JarSet state = s;
  while (!state.empty()) {
    Move m = heuristic_step(state, alg);
    run.cookies_removed_per_move.push_back(m.amount * m.targets.size());
    state = apply_move(state, m);
    run.plan.push_back(std::move(m));
  }
  run.move_count = run.plan.size();
  return run;
}

}  // namespace cookie_monster

#endif
