#ifndef COOKIE_MONSTER_IO_HPP
#define COOKIE_MONSTER_IO_HPP

// Text and JSON encodings shared by the command-line tool and the tests.
//
// JSON layout of a solved instance:
//   {"instance":[1,2,3], "cm":2,
//    "certificate":{"amounts":[2,1], "assignments":{"1":[1],"2":[2],"3":[2,1]}},
//    "plan":[{"amount":2,"targets":[2,3]}, {"amount":1,"targets":[1]}]}
// Plan targets are jar values in the state the move applies to.

#include <charconv>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "cookie_monster/core.hpp"
#include "cookie_monster/exact.hpp"
#include "cookie_monster/heuristics.hpp"
#include "cookie_monster/sequences.hpp"

namespace cookie_monster {

using json = nlohmann::ordered_json;

enum class Format { json, csv, text };

inline Format parse_format(std::string_view name) {
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  if (name == "text") return Format::text;
  throw domain_error("unknown output format '" + std::string(name) + "'");
}

namespace detail {

inline std::int64_t parse_int(std::string_view token) {
  std::int64_t v = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, v);
  if (ec == std::errc::result_out_of_range) throw domain_error("integer out of range: " + std::string(token));
  if (ec != std::errc() || ptr != end) throw domain_error("not an integer: '" + std::string(token) + "'");
  return v;
}

inline std::uint64_t parse_uint(std::string_view token) {
  std::uint64_t v = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, v);
  if (ec != std::errc() || ptr != end) throw domain_error("not a nonnegative integer: '" + std::string(token) + "'");
  return v;
}

}  // namespace detail

/// Integers separated by commas and/or whitespace.
inline std::vector<std::int64_t> parse_instance(std::string_view text) {
  std::vector<std::int64_t> out;
  std::size_t i = 0;
  auto is_sep = [](char c) { return c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
  while (i < text.size()) {
    while (i < text.size() && is_sep(text[i])) ++i;
    std::size_t j = i;
    while (j < text.size() && !is_sep(text[j])) ++j;
    if (j > i) out.push_back(detail::parse_int(text.substr(i, j - i)));
    i = j;
  }
  return out;
}

/// "p/q", an integer, or a plain decimal like 0.75 are read exactly;
/// anything else std::stod accepts is kept as a double.
inline RatioSpec parse_ratio(std::string_view text) {
  RatioSpec r;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Ratio q{detail::parse_uint(text.substr(0, slash)), detail::parse_uint(text.substr(slash + 1))};
    if (q.den == 0) throw domain_error("ratio denominator must be nonzero");
    r.exact = q;
  } else if (auto dot = text.find('.'); dot != std::string_view::npos && text.size() - dot - 1 <= 18 &&
                                        text.find_first_not_of("0123456789.") == std::string_view::npos &&
                                        text.find('.', dot + 1) == std::string_view::npos) {
    const auto whole = text.substr(0, dot);
    const auto frac = text.substr(dot + 1);
    std::uint64_t den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    const std::uint64_t w = whole.empty() ? 0 : detail::parse_uint(whole);
    const std::uint64_t f = frac.empty() ? 0 : detail::parse_uint(frac);
    if (w > 1) throw domain_error("target ratio must lie in [0, 1]");
    r.exact = Ratio{w * den + f, den};
  } else if (text.find_first_not_of("0123456789") == std::string_view::npos && !text.empty()) {
    r.exact = Ratio{detail::parse_uint(text), 1};
  } else {
    try {
      r.approx = std::stod(std::string(text));
    } catch (const std::exception&) {
      throw domain_error("cannot read ratio '" + std::string(text) + "'");
    }
    return r;
  }
  if (r.exact->num > r.exact->den) throw domain_error("target ratio must lie in [0, 1]");
  r.approx = r.exact->value();
  return r;
}

inline json to_json(const JarSet& s) { return json(std::vector<Cookies>(s.begin(), s.end())); }

inline json to_json(const Move& m) { return json{{"amount", m.amount}, {"targets", m.targets}}; }

inline json to_json(const MovePlan& plan) {
  json out = json::array();
  for (const auto& m : plan) out.push_back(to_json(m));
  return out;
}

inline json to_json(const Certificate& c) {
  json assignments = json::object();
  for (const auto& a : c.assignments) assignments[std::to_string(a.jar)] = c.amounts_for(a);
  return json{{"amounts", c.amounts}, {"assignments", assignments}};
}

inline json solve_to_json(const JarSet& s, const ExactResult& r, const MovePlan& plan) {
  return json{{"instance", to_json(s)},
              {"cm", r.cm},
              {"certificate", to_json(r.certificate)},
              {"plan", to_json(plan)},
              {"nodes_explored", r.nodes_explored}};
}

inline json to_json(const JarSet& s, const HeuristicRun& run) {
  return json{{"instance", to_json(s)},
              {"algorithm", to_string(run.algorithm)},
              {"move_count", run.move_count},
              {"cookies_removed_per_move", run.cookies_removed_per_move},
              {"plan", to_json(run.plan)}};
}

inline Move move_from_json(const json& j) {
  Move m;
  m.amount = j.at("amount").get<Cookies>();
  m.targets = j.at("targets").get<std::vector<Cookies>>();
  return m;
}

inline MovePlan plan_from_json(const json& j) {
  MovePlan plan;
  for (const auto& m : j) plan.push_back(move_from_json(m));
  return plan;
}

/// Inverse of to_json(Certificate). Repeated amounts are matched to the
/// earliest unused copy, which is always a valid choice.
inline Certificate certificate_from_json(const JarSet& s, const json& j) {
  Certificate c;
  c.amounts = j.at("amounts").get<std::vector<Cookies>>();
  const auto& asg = j.at("assignments");
  for (auto jar : s) {
    const auto key = std::to_string(jar);
    if (!asg.contains(key)) throw domain_error("certificate has no assignment for jar " + key);
    JarAssignment a{jar, {}};
    std::vector<bool> used(c.amounts.size(), false);
    for (auto amount : asg.at(key).get<std::vector<Cookies>>()) {
      std::size_t idx = 0;
      while (idx < c.amounts.size() && (used[idx] || c.amounts[idx] != amount)) ++idx;
      if (idx == c.amounts.size()) throw domain_error("assignment for jar " + key + " uses an unknown amount");
      used[idx] = true;
      a.moves.push_back(idx);
    }
    c.assignments.push_back(std::move(a));
  }
  return c;
}

inline std::string join(std::span<const Cookies> values, std::string_view sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

inline std::string format_plan_text(const MovePlan& plan) {
  std::ostringstream os;
  for (std::size_t i = 0; i < plan.size(); ++i)
    os << "  move " << i + 1 << ": take " << plan[i].amount << " from {" << join(plan[i].targets) << "}\n";
  return os.str();
}

/// Trajectory in the requested format. CSV columns are k,s_k,cm,ratio.
inline std::string format_trajectory(const RatioTrajectory& t, Format fmt) {
  std::ostringstream os;
  os.precision(12);
  switch (fmt) {
    case Format::csv:
      os << "k,s_k,cm,ratio\n";
      for (std::size_t i = 0; i < t.terms.size(); ++i)
        os << i + 1 << ',' << t.terms[i].to_string() << ',' << t.cms[i] << ',' << t.ratios[i] << '\n';
      break;
    case Format::text:
      for (std::size_t i = 0; i < t.terms.size(); ++i)
        os << "k=" << i + 1 << "  s_k=" << t.terms[i].to_string() << "  cm=" << t.cms[i]
           << "  ratio=" << t.ratios[i] << '\n';
      break;
    case Format::json: {
      json j;
      if (t.target.exact)
        j["r"] = std::to_string(t.target.exact->num) + "/" + std::to_string(t.target.exact->den);
      else
        j["r"] = t.target.approx;
      json rows = json::array();
      for (std::size_t i = 0; i < t.terms.size(); ++i) {
        json term = t.terms[i].value() ? json(*t.terms[i].value()) : json(t.terms[i].to_string());
        rows.push_back({{"k", i + 1}, {"s_k", term}, {"cm", t.cms[i]}, {"ratio", t.ratios[i]}});
      }
      j["terms"] = rows;
      j["power_indices"] = t.power_indices;
      os << j.dump(2) << '\n';
      break;
    }
  }
  return os.str();
}

}  // namespace cookie_monster

#endif
