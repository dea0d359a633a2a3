// Command-line front end.
//
//   cookie_monster solve 1,2,3,5,8
//   cookie_monster heuristic --alg tca 4,7,14,19,20
//   cookie_monster bounds @jars.txt
//   cookie_monster seq --nacci 3 --k 6
//   cookie_monster ratio --r 1/2 --terms 10 --csv
//   cookie_monster bench --count 100 --max-k 6 --max-value 40 --seed 42
//   cookie_monster verify --plan solved.json
//
// Exit status: 0 success, 1 bad input or failed verification, 2 resource or
// budget exhausted.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "cookie_monster/cookie_monster.hpp"

namespace cm = cookie_monster;

namespace {

constexpr const char* kBudgetEnv = "COOKIE_MONSTER_NODE_BUDGET";

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw cm::domain_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

cm::JarSet load_instance(const std::string& arg) {
  const std::string text = !arg.empty() && arg.front() == '@' ? read_file(arg.substr(1)) : arg;
  const auto raw = cm::parse_instance(text);
  auto s = cm::make_jarset(raw);
  if (s.size() != raw.size())
    std::cerr << "note: collapsed " << raw.size() - s.size() << " duplicate jar(s)\n";
  return s;
}

std::uint64_t default_budget() {
  if (const char* env = std::getenv(kBudgetEnv)) return cm::detail::parse_uint(env);
  return cm::ExactOptions{}.node_budget;
}

struct Output {
  bool json = false;
  bool csv = false;
  bool text = false;

  cm::Format format() const {
    if (csv) return cm::Format::csv;
    if (text) return cm::Format::text;
    return cm::Format::json;
  }
};

void add_format_flags(CLI::App* cmd, Output& out) {
  auto* j = cmd->add_flag("--json", out.json, "JSON output (default)");
  auto* c = cmd->add_flag("--csv", out.csv, "CSV output with a header row");
  auto* t = cmd->add_flag("--text", out.text, "human-readable output");
  j->excludes(c)->excludes(t);
  c->excludes(t);
}

int cmd_solve(const std::string& instance, bool oracle, std::uint64_t budget, unsigned threads,
              std::uint64_t max_states, cm::Format fmt) {
  const auto s = load_instance(instance);
  if (oracle) {
    cm::BfsCaps caps;
    caps.max_states = max_states;
    const unsigned value = cm::cm_bfs(s, caps);
    switch (fmt) {
      case cm::Format::json:
        std::cout << cm::json{{"instance", cm::to_json(s)}, {"cm", value}, {"method", "bfs"}}.dump(2) << '\n';
        break;
      case cm::Format::csv:
        std::cout << "instance,cm\n\"" << cm::join(s.values(), " ") << "\"," << value << '\n';
        break;
      case cm::Format::text:
        std::cout << "CM{" << cm::join(s.values()) << "} = " << value << " (breadth-first search)\n";
        break;
    }
    return 0;
  }
  const auto result = cm::cm_exact(s, {budget, threads});
  const auto plan = cm::plan_from_certificate(s, result.certificate);
  switch (fmt) {
    case cm::Format::json:
      std::cout << cm::solve_to_json(s, result, plan).dump(2) << '\n';
      break;
    case cm::Format::csv:
      std::cout << "instance,cm,amounts,nodes_explored\n\"" << cm::join(s.values(), " ") << "\"," << result.cm
                << ",\"" << cm::join(result.certificate.amounts, " ") << "\"," << result.nodes_explored << '\n';
      break;
    case cm::Format::text:
      std::cout << "CM{" << cm::join(s.values()) << "} = " << result.cm << "\namounts: "
                << cm::join(result.certificate.amounts) << '\n';
      for (const auto& a : result.certificate.assignments)
        std::cout << "  " << a.jar << " = " << cm::join(result.certificate.amounts_for(a), " + ") << '\n';
      std::cout << "plan:\n" << cm::format_plan_text(plan);
      break;
  }
  return 0;
}

int cmd_heuristic(const std::string& instance, const std::string& alg, cm::Format fmt) {
  const auto s = load_instance(instance);
  const auto run = cm::run_heuristic(s, cm::parse_algorithm(alg));
  switch (fmt) {
    case cm::Format::json:
      std::cout << cm::to_json(s, run).dump(2) << '\n';
      break;
    case cm::Format::csv:
      std::cout << "move,amount,targets,cookies_removed\n";
      for (std::size_t i = 0; i < run.plan.size(); ++i)
        std::cout << i + 1 << ',' << run.plan[i].amount << ",\"" << cm::join(run.plan[i].targets, " ") << "\","
                  << run.cookies_removed_per_move[i] << '\n';
      break;
    case cm::Format::text:
      std::cout << cm::to_string(run.algorithm) << " on {" << cm::join(s.values()) << "}: " << run.move_count
                << " moves\n";
      for (std::size_t i = 0; i < run.plan.size(); ++i)
        std::cout << "  move " << i + 1 << ": take " << run.plan[i].amount << " from {"
                  << cm::join(run.plan[i].targets) << "}, " << run.cookies_removed_per_move[i]
                  << " cookies removed\n";
      break;
  }
  return 0;
}

int cmd_bounds(const std::string& instance, cm::Format fmt) {
  const auto s = load_instance(instance);
  cm::json j{{"instance", cm::to_json(s)}, {"k", s.size()}, {"lower", cm::lower_bound(s)},
             {"trivial", cm::upper_bound_trivial(s)}};
  j["binary"] = s.empty() ? cm::json(nullptr) : cm::json(cm::upper_bound_binary(s));
  j["diameter"] = s.size() < 2 ? cm::json(nullptr) : cm::json(cm::upper_bound_diameter(s));
  j["superincreasing"] = cm::is_superincreasing(s);
  j["two_powerful"] = cm::is_two_powerful(s);
  if (cm::is_two_powerful(s)) j["cm_two_powerful"] = cm::cm_two_powerful(s);
  switch (fmt) {
    case cm::Format::json:
      std::cout << j.dump(2) << '\n';
      break;
    case cm::Format::csv: {
      std::cout << "instance,k,lower,trivial,binary,diameter,superincreasing,two_powerful\n\""
                << cm::join(s.values(), " ") << "\"," << s.size() << ',' << j["lower"] << ',' << j["trivial"] << ','
                << (j["binary"].is_null() ? "" : j["binary"].dump()) << ','
                << (j["diameter"].is_null() ? "" : j["diameter"].dump()) << ',' << j["superincreasing"] << ','
                << j["two_powerful"] << '\n';
      break;
    }
    case cm::Format::text:
      for (auto& [key, value] : j.items()) std::cout << key << ": " << value.dump() << '\n';
      break;
  }
  return 0;
}

int cmd_seq(unsigned nacci, std::size_t k, const std::string& construct, bool check, cm::Format fmt) {
  cm::JarSet s;
  cm::json j;
  if (!construct.empty()) {
    const auto parts = cm::parse_instance(construct);
    if (parts.size() != 2 || parts[0] < 1 || parts[1] < 1) throw cm::domain_error("--construct expects k,m");
    s = cm::construct_set_with_cm(static_cast<std::size_t>(parts[0]), static_cast<unsigned>(parts[1]));
    j = {{"construct", {{"k", parts[0]}, {"m", parts[1]}}}, {"set", cm::to_json(s)},
         {"cm", cm::cm_two_powerful(s)}};
  } else {
    if (nacci == 0 || k == 0) throw cm::domain_error("seq needs --nacci n --k K or --construct k,m");
    s = cm::nacci_set(nacci, k);
    j = {{"n", nacci}, {"k", k}, {"set", cm::to_json(s)}, {"closed_form_cm", cm::closed_form_cm(nacci, k)}};
    if (check) j["inequalities_hold"] = cm::check_nacci_inequalities(nacci, k);
  }
  switch (fmt) {
    case cm::Format::json:
      std::cout << j.dump(2) << '\n';
      break;
    case cm::Format::csv:
      std::cout << "index,value\n";
      for (std::size_t i = 0; i < s.size(); ++i) std::cout << i + 1 << ',' << s[i] << '\n';
      break;
    case cm::Format::text:
      std::cout << '{' << cm::join(s.values()) << "}\n";
      for (auto& [key, value] : j.items())
        if (key != "set") std::cout << key << ": " << value.dump() << '\n';
      break;
  }
  return 0;
}

int cmd_verify(const std::string& path, cm::Format fmt) {
  const auto doc = cm::json::parse(read_file(path));
  const auto s = cm::make_jarset(doc.at("instance").get<std::vector<std::int64_t>>());
  const auto plan = cm::plan_from_json(doc.at("plan"));
  const auto verdict = cm::verify_plan(s, plan);
  cm::json j{{"instance", cm::to_json(s)}, {"valid", verdict.complete}, {"moves", plan.size()}};
  if (verdict.complete) j["certificate"] = cm::to_json(verdict.certificate);
  else {
    j["error"] = verdict.message;
    if (verdict.failed_move) j["failed_move"] = *verdict.failed_move;
  }
  switch (fmt) {
    case cm::Format::json:
      std::cout << j.dump(2) << '\n';
      break;
    case cm::Format::csv:
      std::cout << "valid,moves,failed_move\n" << (verdict.complete ? "true" : "false") << ',' << plan.size() << ','
                << (verdict.failed_move ? std::to_string(*verdict.failed_move) : "") << '\n';
      break;
    case cm::Format::text:
      std::cout << (verdict.complete ? "valid" : "invalid") << " plan of " << plan.size() << " moves"
                << (verdict.complete ? "" : ": " + verdict.message) << '\n';
      break;
  }
  if (!verdict.complete) std::cerr << "plan rejected: " << verdict.message << '\n';
  return verdict.complete ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solver, heuristics and sequence tools for the Cookie Monster problem"};
  app.require_subcommand(1);

  Output out;
  std::string instance;

  auto* solve = app.add_subcommand("solve", "exact Cookie Monster number with certificate and plan");
  bool oracle = false;
  std::uint64_t budget = 0;
  unsigned threads = 1;
  std::uint64_t max_states = cm::BfsCaps{}.max_states;
  solve->add_option("instance", instance, "comma-separated jar contents or @file")->required();
  solve->add_flag("--oracle", oracle, "use breadth-first search over game states instead");
  solve->add_option("--budget", budget, std::string("cover-search node budget (default $") + kBudgetEnv +
                                            " or 10000000)");
  solve->add_option("--threads", threads, "worker threads for the cover search")->check(CLI::PositiveNumber);
  solve->add_option("--max-states", max_states, "state cap for --oracle");
  add_format_flags(solve, out);

  auto* heuristic = app.add_subcommand("heuristic", "run a greedy strategy to completion");
  std::string alg;
  heuristic->add_option("--alg", alg, "emja, tca or ba")->required();
  heuristic->add_option("instance", instance, "comma-separated jar contents or @file")->required();
  add_format_flags(heuristic, out);

  auto* bounds = app.add_subcommand("bounds", "closed-form bounds and structural predicates");
  bounds->add_option("instance", instance, "comma-separated jar contents or @file")->required();
  add_format_flags(bounds, out);

  auto* seq = app.add_subcommand("seq", "n-nacci jar sets and two-powerful constructions");
  unsigned nacci = 0;
  std::size_t k = 0;
  std::string construct;
  bool check = false;
  auto* nacci_opt = seq->add_option("--nacci", nacci, "n-nacci order (2 = Fibonacci)");
  seq->add_option("--k", k, "number of jars")->needs(nacci_opt);
  auto* construct_opt = seq->add_option("--construct", construct, "k,m: k jars with CM exactly m");
  construct_opt->excludes(nacci_opt);
  seq->add_flag("--check", check, "also verify the n-nacci growth inequalities up to k");
  add_format_flags(seq, out);

  auto* ratio = app.add_subcommand("ratio", "sequence whose ratio CM(S_k)/k tends to r");
  std::string r_text;
  std::size_t terms = 0;
  ratio->add_option("--r", r_text, "target ratio: p/q, decimal, 0 or 1")->required();
  ratio->add_option("--terms", terms, "number of terms")->required();
  add_format_flags(ratio, out);

  auto* bench = app.add_subcommand("bench", "random instances: exact vs heuristics vs bounds");
  cm::BenchOptions bopt;
  bench->add_option("--count", bopt.count, "number of instances");
  bench->add_option("--max-k", bopt.max_k, "largest number of jars");
  bench->add_option("--max-value", bopt.max_value, "largest jar value");
  bench->add_option("--seed", bopt.seed, "random seed");
  bench->add_option("--budget", budget, "cover-search node budget per instance");
  bench->add_option("--threads", bopt.threads, "instances solved in parallel")->check(CLI::PositiveNumber);
  bench->add_flag("--timing", bopt.timing, "include wall-clock columns (output no longer reproducible)");
  add_format_flags(bench, out);

  auto* verify = app.add_subcommand("verify", "check a plan, e.g. the JSON written by solve");
  std::string plan_path;
  verify->add_option("--plan", plan_path, "JSON file with \"instance\" and \"plan\"")->required();
  add_format_flags(verify, out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (budget == 0) budget = default_budget();
    const auto fmt = out.format();
    if (*solve) return cmd_solve(instance, oracle, budget, threads, max_states, fmt);
    if (*heuristic) return cmd_heuristic(instance, alg, fmt);
    if (*bounds) return cmd_bounds(instance, fmt);
    if (*seq) return cmd_seq(nacci, k, construct, check, fmt);
    if (*ratio) {
      std::cout << cm::format_trajectory(cm::build_ratio_sequence(cm::parse_ratio(r_text), terms), fmt);
      return 0;
    }
    if (*bench) {
      bopt.node_budget = budget;
      std::cout << cm::format_bench(cm::run_bench(bopt), bopt, fmt);
      return 0;
    }
    if (*verify) return cmd_verify(plan_path, fmt);
  } catch (const cm::resource_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const cm::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const cm::json::exception& e) {
    std::cerr << "error: malformed JSON: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
