#pragma once

// Command-line front end. `run` is kept separate from main() so the
// subcommands can be exercised in-process.
//
// Exit codes: 0 success, 1 usage error, 2 problem-file error (unreadable or
// unparsable), 3 data-consistency error in the cell table or its joins.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cadorder/heuristics.hpp"
#include "cadorder/parser.hpp"
#include "cadorder/projection.hpp"
#include "cadorder/real_roots.hpp"
#include "cadorder/stats.hpp"

namespace cadorder::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kParse = 2, kData = 3 };

namespace detail {

struct Failure {
  int code;
  std::string message;
};

inline std::string read_file(const std::filesystem::path& path, int code) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{code, "cannot read '" + path.string() + "'"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline PolySystem load_problem(const std::filesystem::path& path) {
  const std::string text = read_file(path, kParse);
  try {
    return parse_system(text);
  } catch (const ParseError& e) {
    throw Failure{kParse, path.string() + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) +
                              ": " + e.message()};
  } catch (const Error& e) {
    throw Failure{kParse, path.string() + ": " + e.what()};
  }
}

inline std::string join(const std::vector<Variable>& vars) {
  std::string s;
  for (const auto& v : vars) s += (s.empty() ? "" : ", ") + v.name();
  return s;
}

inline std::string triple_text(const BrownTriple& t) {
  return "(" + std::to_string(t.overall_degree) + ", " + std::to_string(t.max_term_degree) + ", " +
         std::to_string(t.containing_terms) + ")";
}

inline nlohmann::ordered_json report_json(const HeuristicReport& r) {
  nlohmann::ordered_json j;
  if (r.heuristic == Heuristic::Brown) {
    nlohmann::ordered_json triples = nlohmann::ordered_json::object();
    for (const auto& [v, t] : r.triples) triples[v.name()] = {t.overall_degree, t.max_term_degree, t.containing_terms};
    j["triples"] = std::move(triples);
  } else {
    nlohmann::ordered_json per = nlohmann::ordered_json::object();
    for (const auto& [o, value] : r.per_ordering) per[o.to_string()] = value;
    j["per_ordering"] = std::move(per);
  }
  nlohmann::ordered_json cands = nlohmann::ordered_json::array();
  for (const auto& c : r.candidates) cands.push_back(c.to_string());
  j["candidates"] = std::move(cands);
  j["chosen"] = r.chosen.to_string();
  return j;
}

inline void report_text(std::ostream& out, const HeuristicReport& r) {
  out << to_string(r.heuristic) << "\n";
  if (r.heuristic == Heuristic::Brown) {
    for (const auto& [v, t] : r.triples) out << "  " << v.name() << " " << triple_text(t) << "\n";
  } else {
    for (const auto& [o, value] : r.per_ordering) out << "  " << o.to_string() << " " << value << "\n";
  }
  out << "  candidates:";
  for (const auto& c : r.candidates) out << " " << c.to_string();
  out << "\n  chosen: " << r.chosen.to_string() << "\n";
}

inline int analyze(const std::string& file, const std::string& heuristic, const std::string& format,
                   std::ostream& out) {
  const PolySystem system = load_problem(file);
  std::vector<HeuristicReport> reports;
  if (heuristic == "all") {
    for (auto& [h, r] : choose_all(system)) reports.push_back(std::move(r));
  } else {
    reports.push_back(choose(system, *parse_heuristic(heuristic)));
  }
  if (format == "json") {
    nlohmann::ordered_json doc;
    doc["variables"] = nlohmann::ordered_json::array();
    for (const auto& v : system.variables) doc["variables"].push_back(v.name());
    nlohmann::ordered_json hs = nlohmann::ordered_json::object();
    for (const auto& r : reports) hs[std::string(to_string(r.heuristic))] = report_json(r);
    doc["heuristics"] = std::move(hs);
    out << doc.dump(2) << "\n";
  } else {
    out << "variables: " << join(system.variables) << "\n";
    for (const auto& r : reports) report_text(out, r);
  }
  return kOk;
}

inline int orderings(const std::string& file, std::ostream& out) {
  const PolySystem system = load_problem(file);
  out << "ordering sotd ndrr\n";
  for (const auto& m : evaluate_orderings(system)) {
    out << m.ordering.to_string() << " " << m.sotd << " " << m.ndrr << "\n";
  }
  return kOk;
}

inline int project(const std::string& file, const std::string& order, std::ostream& out) {
  const PolySystem system = load_problem(file);
  VariableOrdering ordering;
  try {
    ordering = VariableOrdering::parse(order);
  } catch (const Error& e) {
    throw Failure{kUsage, std::string("--order: ") + e.what()};
  }
  if (!ordering.is_permutation_of(system.variables)) {
    throw Failure{kUsage, "--order " + order + " is not a permutation of {" + join(system.variables) + "}"};
  }
  const ProjectionSet ps = full_projection(system, ordering);
  for (std::size_t k = ps.size(); k >= 1; --k) {
    out << "level " << k << ":\n";
    for (const auto& p : ps.level(k)) out << render(p) << "\n";
  }
  return kOk;
}

inline int roots(const std::string& file, std::ostream& out) {
  const PolySystem system = load_problem(file);
  const Variable fallback = system.variables.empty() ? Variable("x") : system.variables.front();
  for (const auto& p : system.polynomials) {
    auto u = to_univariate(p, fallback);
    if (!u) throw Failure{kParse, file + ": polynomial '" + render(p) + "' is not univariate"};
    out << count_distinct_real_roots(*u) << "\n";
  }
  return kOk;
}

inline int bench(const std::string& dir, const std::string& cells, const std::string& format, std::ostream& out) {
  CellCountTable table;
  try {
    table = load_cell_table(read_file(cells, kData));
  } catch (const DataError& e) {
    throw Failure{kData, cells + ": " + e.what()};
  }
  if (!std::filesystem::is_directory(dir)) throw Failure{kUsage, "'" + dir + "' is not a directory"};
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".poly") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());

  std::map<Heuristic, Picks> picks;
  for (const auto& path : files) {
    const std::string id = path.stem().string();
    if (!table.problems().contains(id)) throw Failure{kData, "problem '" + id + "' has no rows in " + cells};
    for (auto& [h, r] : choose_all(load_problem(path))) picks[h][id] = r.chosen;
  }
  for (const auto& [id, row] : table.problems()) {
    if (!picks[Heuristic::Brown].contains(id)) throw Failure{kData, "problem '" + id + "' has no .poly file in " + dir};
  }
  try {
    out << emit_report(compute_bench(table, picks), format);
  } catch (const DataError& e) {
    throw Failure{kData, e.what()};
  }
  return kOk;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Variable ordering heuristics for cylindrical algebraic decomposition", "cadorder"};
  app.require_subcommand(1);

  std::string file;
  std::string heuristic = "all";
  std::string format = "text";
  std::string order;
  std::string problems;
  std::string cells;

  auto* analyze = app.add_subcommand("analyze", "Run the ordering heuristics on a problem file");
  analyze->add_option("FILE", file, "Problem file (.poly)")->required();
  analyze->add_option("--heuristic", heuristic, "brown|sotd|ndrr|all")
      ->check(CLI::IsMember({"brown", "sotd", "ndrr", "all"}));
  analyze->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));

  auto* orderings = app.add_subcommand("orderings", "List every ordering with its sotd and ndrr values");
  orderings->add_option("FILE", file, "Problem file (.poly)")->required();

  auto* project = app.add_subcommand("project", "Dump the full projection set for one ordering");
  project->add_option("FILE", file, "Problem file (.poly)")->required();
  project->add_option("--order", order, "Ordering as v1>v2>...>vn (last is eliminated first)")->required();

  auto* roots = app.add_subcommand("roots", "Count distinct real roots of univariate polynomials");
  roots->add_option("FILE", file, "Problem file (.poly)")->required();

  auto* bench = app.add_subcommand("bench", "Compare heuristic picks against a cell-count table");
  bench->add_option("--problems", problems, "Directory of .poly files")->required();
  bench->add_option("--cells", cells, "Cell-count CSV")->required();
  bench->add_option("--format", format, "text|json|csv")->check(CLI::IsMember({"text", "json", "csv"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*analyze) return detail::analyze(file, heuristic, format, out);
    if (*orderings) return detail::orderings(file, out);
    if (*project) return detail::project(file, order, out);
    if (*roots) return detail::roots(file, out);
    if (*bench) return detail::bench(problems, cells, format, out);
  } catch (const detail::Failure& f) {
    err << "error: " << f.message << "\n";
    return f.code;
  } catch (const LimitError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DataError& e) {
    err << "error: " << e.what() << "\n";
    return kData;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kParse;
  }
  return kUsage;
}

}  // namespace cadorder::cli
