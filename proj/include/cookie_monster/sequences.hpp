#ifndef COOKIE_MONSTER_SEQUENCES_HPP
#define COOKIE_MONSTER_SEQUENCES_HPP

// Sequence families with known Cookie Monster numbers: n-nacci jar sets,
// Super-n-nacci sets, two-powerful constructions of any CM between log2 k and
// k, and sequences whose prefix ratio CM(S_k)/k approaches a chosen r.

#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "cookie_monster/bounds.hpp"
#include "cookie_monster/core.hpp"

namespace cookie_monster {

/// Raw n-nacci terms N_0 .. N_{count-1}: N_i = 0 for i < n-1,
/// N_{n-1} = N_n = 1, then each term is the sum of the previous n.
/// For n = 2 this is the Fibonacci sequence F_0, F_1, ...
inline std::vector<Cookies> nacci_terms(unsigned n, std::size_t count) {
  if (n < 2) throw domain_error("n-nacci order must be at least 2");
  std::vector<Cookies> terms;
  terms.reserve(count);
  Cookies window = 0;  // sum of the last n terms
  for (std::size_t i = 0; i < count; ++i) {
    Cookies t = 0;
    if (i + 1 < n) t = 0;
    else if (i <= n) t = 1;
    else t = window;
    window = detail::checked_add(window, t);
    if (i >= n) window -= terms[i - n];
    terms.push_back(t);
  }
  return terms;
}

/// The k-jar set {N_n, ..., N_{n+k-1}}: 1, 2, 3, 5, 8, ... for n = 2,
/// 1, 2, 4, 7, 13, ... for n = 3.
inline JarSet nacci_set(unsigned n, std::size_t k) {
  if (k < 1) throw domain_error("need at least one jar");
  const auto terms = nacci_terms(n, n + k);
  return JarSet(std::vector<Cookies>(terms.begin() + n, terms.end()));
}

/// CM of nacci_set(n, k): floor((n-1)k/n) + 1.
inline unsigned closed_form_cm(unsigned n, std::size_t k) {
  if (n < 2) throw domain_error("n-nacci order must be at least 2");
  if (k < 1) throw domain_error("need at least one jar");
  return static_cast<unsigned>((static_cast<std::uint64_t>(n - 1) * k) / n + 1);
}

/// Sum of F_1..F_{k-1} equals F_{k+1} - 1 for every k in [1, k_max].
inline bool check_fibonacci_identity(std::size_t k_max) {
  const auto f = nacci_terms(2, k_max + 2);
  Cookies prefix = 0;  // F_1 + ... + F_{k-1}
  for (std::size_t k = 1; k <= k_max; ++k) {
    if (f[k + 1] - 1 != prefix) return false;
    prefix = detail::checked_add(prefix, f[k]);
  }
  return true;
}

/// Evaluates, for k in [max(1, n-1), k_max] and every 1 <= j <= n-1,
///   N_{k+j} - (N_{k+1} + ... + N_{k+j-1}) > N_1 + ... + N_{k-1}.
/// j = 1 is the plain growth inequality N_{k+1} > N_1 + ... + N_{k-1};
/// j = n-1 is the strongest member of the family. Below k = n-1 both sides
/// are zero and the strict inequality is vacuous, so those k are skipped.
inline bool check_nacci_inequalities(unsigned n, std::size_t k_max) {
  if (n < 2) throw domain_error("n-nacci order must be at least 2");
  const auto t = nacci_terms(n, k_max + n + 1);
  std::vector<Cookies> prefix(t.size() + 1, 0);  // prefix[i] = N_0 + ... + N_{i-1}
  for (std::size_t i = 0; i < t.size(); ++i) prefix[i + 1] = detail::checked_add(prefix[i], t[i]);
  auto range_sum = [&](std::size_t lo, std::size_t hi) -> Cookies {  // N_lo + ... + N_hi
    return lo > hi ? 0 : prefix[hi + 1] - prefix[lo];
  };
  const std::size_t k_start = std::max<std::size_t>(1, n - 1);
  for (std::size_t k = k_start; k <= k_max; ++k) {
    const Cookies rhs = range_sum(1, k - 1);
    for (std::size_t j = 1; j + 1 <= n; ++j) {
      const Cookies between = range_sum(k + 1, k + j - 1);
      if (t[k + j] < between) return false;
      if (t[k + j] - between <= rhs) return false;
    }
  }
  return true;
}

/// Grows at least as fast as the n-nacci jars: each of the first n jars
/// exceeds the sum of all smaller jars, and every later jar is >= the sum of
/// the n before it. The strict start stands in for the leading 1 of the
/// n-nacci sequence that is not itself a jar; without it {3,7,9,13} would
/// pass for n = 4 with CM 3, below the bound.
inline bool is_super_nacci(const JarSet& s, unsigned n) {
  if (n < 2) throw domain_error("n-nacci order must be at least 2");
  Cookies prefix = 0;
  for (std::size_t i = 0; i < s.size() && i < n; ++i) {
    if (i > 0 && s[i] <= prefix) return false;
    prefix = detail::checked_add(prefix, s[i]);
  }
  for (std::size_t i = n; i < s.size(); ++i) {
    Cookies window = 0;
    for (std::size_t j = i - n; j < i; ++j) window = detail::checked_add(window, s[j]);
    if (s[i] < window) return false;
  }
  return true;
}

/// floor((n-1)k/n) + 1, a lower bound on CM for any Super-n-nacci set.
inline unsigned super_nacci_lower_bound(const JarSet& s, unsigned n) {
  if (!is_super_nacci(s, n)) throw domain_error("jar set is not Super-" + std::to_string(n) + "-nacci");
  if (s.empty()) return 0;
  return closed_form_cm(n, s.size());
}

/// A two-powerful set of k jars with CM exactly m: the powers 1..2^(m-1)
/// plus the k - m smallest non-powers of two.
inline JarSet construct_set_with_cm(std::size_t k, unsigned m) {
  if (m < 1) throw domain_error("target CM must be at least 1");
  if (m > k) throw domain_error("m <= k violated: CM cannot exceed the number of jars");
  if (m >= 64 || k >= (std::uint64_t{1} << m))
    throw domain_error("k < 2^m violated: k jars below 2^m cannot need m moves");
  std::vector<Cookies> values;
  values.reserve(k);
  for (unsigned e = 0; e < m; ++e) values.push_back(Cookies{1} << e);
  for (Cookies c = 3; values.size() < k; ++c)
    if (!std::has_single_bit(c)) values.push_back(c);
  return JarSet(std::move(values));
}

/// Exact rational p/q in [0, 1].
struct Ratio {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

/// Parses "p/q", an integer, or a decimal. Decimals stay floating point.
struct RatioSpec {
  std::optional<Ratio> exact;
  double approx = 0.0;
};

/// A term 2^exponent + offset with offset < 2^exponent. Terms of ratio
/// sequences outgrow 64 bits long before their ratios settle.
struct PowerTerm {
  unsigned exponent = 0;
  std::uint64_t offset = 0;

  bool is_power() const noexcept { return offset == 0; }
  /// floor(log2) + 1: the CM of a two-powerful set whose largest jar is this.
  unsigned cm() const noexcept { return exponent + 1; }
  std::optional<Cookies> value() const {
    if (exponent >= 64) return std::nullopt;
    return (Cookies{1} << exponent) + offset;
  }
  std::string to_string() const;

  friend bool operator==(const PowerTerm&, const PowerTerm&) = default;
};

struct RatioTrajectory {
  RatioSpec target;
  std::vector<PowerTerm> terms;
  std::vector<unsigned> cms;            // CM(S_k), k = 1..size
  std::vector<double> ratios;           // CM(S_k) / k
  std::vector<std::size_t> power_indices;  // 1-based k at which 2^m enters, m = 0, 1, ...
};

inline constexpr double kRatioSlack = 1e-12;

/// Walks the naturals in order, always keeping powers of two and keeping a
/// non-power c exactly when the prefix ratio stays >= r. Every prefix is
/// two-powerful, so its CM is floor(log2 c) + 1. Between two powers the kept
/// non-powers form a run right after the lower power: once one is refused,
/// k and CM stay fixed until the next power, so all the rest are refused too.
/// That lets the walk jump straight to the next power.
inline RatioTrajectory build_ratio_sequence(const RatioSpec& r, std::size_t k_max) {
  const double rv = r.exact ? r.exact->value() : r.approx;
  if (r.exact && (r.exact->den == 0 || r.exact->num > r.exact->den))
    throw domain_error("target ratio must be a fraction p/q in [0, 1]");
  if (!r.exact && !(rv >= 0.0 && rv <= 1.0)) throw domain_error("target ratio must lie in [0, 1]");

  auto admits = [&](unsigned cm, std::size_t k_after) {
    if (r.exact) {
      const unsigned __int128 lhs = static_cast<unsigned __int128>(cm) * r.exact->den;
      const unsigned __int128 rhs = static_cast<unsigned __int128>(r.exact->num) * k_after;
      return lhs >= rhs;
    }
    return static_cast<double>(cm) / static_cast<double>(k_after) >= rv - kRatioSlack;
  };

  RatioTrajectory out;
  out.target = r;
  auto push = [&](PowerTerm t) {
    out.terms.push_back(t);
    out.cms.push_back(t.cm());
    out.ratios.push_back(static_cast<double>(t.cm()) / static_cast<double>(out.terms.size()));
    if (t.is_power()) out.power_indices.push_back(out.terms.size());
  };

  for (unsigned e = 0; out.terms.size() < k_max; ++e) {
    push({e, 0});
    // Non-powers 2^e + 1 .. 2^(e+1) - 1.
    const std::uint64_t band = e == 0 ? 0 : (e >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << e) - 1);
    for (std::uint64_t off = 1; off <= band && out.terms.size() < k_max; ++off) {
      if (!admits(e + 1, out.terms.size() + 1)) break;
      push({e, off});
    }
  }
  return out;
}

inline std::string PowerTerm::to_string() const {
  if (auto v = value()) return std::to_string(*v);
  std::string s = "2^" + std::to_string(exponent);
  if (offset != 0) s += "+" + std::to_string(offset);
  return s;
}

}  // namespace cookie_monster

#endif
