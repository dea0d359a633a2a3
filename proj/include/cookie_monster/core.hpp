#ifndef COOKIE_MONSTER_CORE_HPP
#define COOKIE_MONSTER_CORE_HPP

// Jar sets, moves, plans and certificates.
//
// A jar set is the set of distinct nonzero jar contents. Two jars holding the
// same number of cookies behave identically for every later move, so they are
// stored once. Moves name their target jars by value, not by position, since
// positions shift whenever a move makes two jars collide.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cookie_monster {

using Cookies = std::uint64_t;

/// Bad input: a precondition of the called operation does not hold.
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A move that cannot be applied to the state it was aimed at.
class invalid_move : public domain_error {
 public:
  using domain_error::domain_error;
};

/// A computation ran out of room: overflow, node budget, state cap.
class resource_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline Cookies checked_add(Cookies a, Cookies b) {
  Cookies out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw resource_error("cookie count overflows 64 bits");
  return out;
}

inline Cookies checked_mul(Cookies a, Cookies b) {
  Cookies out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw resource_error("cookie count overflows 64 bits");
  return out;
}

}  // namespace detail

class JarSet {
 public:
  JarSet() = default;

  /// Sorts, drops duplicates. Throws domain_error on a zero entry.
  explicit JarSet(std::vector<Cookies> values) : jars_(std::move(values)) {
    std::sort(jars_.begin(), jars_.end());
    jars_.erase(std::unique(jars_.begin(), jars_.end()), jars_.end());
    if (!jars_.empty() && jars_.front() == 0) throw domain_error("jar contents must be positive");
  }

  JarSet(std::initializer_list<Cookies> values) : JarSet(std::vector<Cookies>(values)) {}

  std::span<const Cookies> values() const noexcept { return jars_; }
  std::size_t size() const noexcept { return jars_.size(); }
  bool empty() const noexcept { return jars_.empty(); }
  Cookies min() const { return jars_.at(0); }
  Cookies max() const { return jars_.at(jars_.size() - 1); }
  Cookies operator[](std::size_t i) const { return jars_[i]; }
  auto begin() const noexcept { return jars_.begin(); }
  auto end() const noexcept { return jars_.end(); }

  bool contains(Cookies v) const { return std::binary_search(jars_.begin(), jars_.end(), v); }

  friend bool operator==(const JarSet&, const JarSet&) = default;
  friend auto operator<=>(const JarSet&, const JarSet&) = default;

 private:
  std::vector<Cookies> jars_;
};

/// Canonical jar set from raw (possibly signed, unsorted, repeated) input.
inline JarSet make_jarset(std::span<const std::int64_t> values) {
  std::vector<Cookies> out;
  out.reserve(values.size());
  for (auto v : values) {
    if (v <= 0) throw domain_error("jar contents must be positive, got " + std::to_string(v));
    out.push_back(static_cast<Cookies>(v));
  }
  return JarSet(std::move(out));
}

inline JarSet make_jarset(std::initializer_list<std::int64_t> values) {
  return make_jarset(std::span<const std::int64_t>(values.begin(), values.size()));
}

struct Move {
  std::vector<Cookies> targets;  // jar values in the state the move is applied to
  Cookies amount = 0;

  friend bool operator==(const Move&, const Move&) = default;
};

using MovePlan = std::vector<Move>;

/// Which move amounts (indices into Certificate::amounts) empty one jar.
struct JarAssignment {
  Cookies jar = 0;
  std::vector<std::size_t> moves;

  friend bool operator==(const JarAssignment&, const JarAssignment&) = default;
};

/// A multiset of move amounts together with, for every jar, the sub-multiset
/// that sums to it. Its size is the number of moves it certifies.
struct Certificate {
  std::vector<Cookies> amounts;
  std::vector<JarAssignment> assignments;  // one per jar, ascending jar value

  std::size_t move_count() const noexcept { return amounts.size(); }

  std::vector<Cookies> amounts_for(const JarAssignment& a) const {
    std::vector<Cookies> out;
    out.reserve(a.moves.size());
    for (auto idx : a.moves) out.push_back(amounts.at(idx));
    return out;
  }

  /// Checks every invariant against the jar set it claims to empty.
  bool is_valid_for(const JarSet& s) const {
    if (assignments.size() != s.size()) return false;
    for (auto a : amounts)
      if (a == 0) return false;
    for (std::size_t i = 0; i < s.size(); ++i) {
      const auto& asg = assignments[i];
      if (asg.jar != s[i]) return false;
      std::vector<std::size_t> seen = asg.moves;
      std::sort(seen.begin(), seen.end());
      if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
      Cookies total = 0;
      for (auto idx : asg.moves) {
        if (idx >= amounts.size()) return false;
        if (__builtin_add_overflow(total, amounts[idx], &total)) return false;
      }
      if (total != asg.jar) return false;
    }
    return true;
  }

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// Applies one move. Throws invalid_move when a target is absent, repeated,
/// or holds fewer cookies than the amount, or when the move is empty.
inline JarSet apply_move(const JarSet& s, const Move& m) {
  if (m.targets.empty()) throw invalid_move("move has no target jars");
  if (m.amount == 0) throw invalid_move("move amount must be positive");
  std::vector<Cookies> targets = m.targets;
  std::sort(targets.begin(), targets.end());
  if (std::adjacent_find(targets.begin(), targets.end()) != targets.end())
    throw invalid_move("move names the same jar twice");
  for (auto t : targets) {
    if (!s.contains(t)) throw invalid_move("no jar holds " + std::to_string(t) + " cookies");
  }
  if (targets.front() < m.amount)
    throw invalid_move("cannot take " + std::to_string(m.amount) + " cookies from a jar holding " +
                       std::to_string(targets.front()));

  std::vector<Cookies> next;
  next.reserve(s.size());
  for (auto v : s) {
    Cookies after = std::binary_search(targets.begin(), targets.end(), v) ? v - m.amount : v;
    if (after != 0) next.push_back(after);
  }
  return JarSet(std::move(next));
}

struct PlanVerdict {
  bool complete = false;                  // plan applies cleanly and ends empty
  std::optional<std::size_t> failed_move;  // first move that could not be applied
  std::string message;
  JarSet final_state;
  Certificate certificate;  // filled when complete

  explicit operator bool() const noexcept { return complete; }
};

/// Replays a plan and, on success, recovers which moves emptied which jar.
/// Jars that collide are followed as one group from then on.
inline PlanVerdict verify_plan(const JarSet& s, const MovePlan& plan) {
  PlanVerdict verdict;
  // current value -> original jars sitting at it
  std::map<Cookies, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < s.size(); ++i) groups[s[i]].push_back(i);
  std::vector<std::vector<std::size_t>> touched(s.size());

  JarSet state = s;
  for (std::size_t j = 0; j < plan.size(); ++j) {
    const Move& m = plan[j];
    try {
      state = apply_move(state, m);
    } catch (const invalid_move& e) {
      verdict.failed_move = j;
      verdict.message = "move " + std::to_string(j) + ": " + e.what();
      verdict.final_state = state;
      return verdict;
    }
    std::map<Cookies, std::vector<std::size_t>> next;
    for (auto& [value, members] : groups) {
      const bool hit = std::find(m.targets.begin(), m.targets.end(), value) != m.targets.end();
      const Cookies after = hit ? value - m.amount : value;
      if (hit)
        for (auto jar : members) touched[jar].push_back(j);
      if (after == 0) continue;
      auto& dst = next[after];
      dst.insert(dst.end(), members.begin(), members.end());
    }
    groups = std::move(next);
  }

  verdict.final_state = state;
  if (!state.empty()) {
    verdict.message = "plan ends with " + std::to_string(state.size()) + " nonempty jar(s)";
    return verdict;
  }
  verdict.complete = true;
  for (const auto& m : plan) verdict.certificate.amounts.push_back(m.amount);
  for (std::size_t i = 0; i < s.size(); ++i)
    verdict.certificate.assignments.push_back({s[i], std::move(touched[i])});
  return verdict;
}

}  // namespace cookie_monster

#endif
