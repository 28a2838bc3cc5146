#pragma once

// Benchmark statistics over externally produced CAD cell counts: how often
// each heuristic picks the best of the compared orderings, how far its pick is
// from the per-problem average, and how often it avoids a timed-out ordering.

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cstdint>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "cadorder/heuristics.hpp"
#include "cadorder/ordering.hpp"

namespace cadorder {

/// Cell counts per (problem, ordering); nullopt marks a timeout.
class CellCountTable {
 public:
  using Row = std::map<VariableOrdering, std::optional<std::uint64_t>>;

  const std::map<std::string, Row>& problems() const noexcept { return problems_; }
  std::size_t size() const noexcept { return problems_.size(); }

  const Row& problem(const std::string& id) const {
    auto it = problems_.find(id);
    if (it == problems_.end()) throw DataError("unknown problem '" + id + "'");
    return it->second;
  }

  const std::optional<std::uint64_t>& cells(const std::string& id, const VariableOrdering& o) const {
    const Row& row = problem(id);
    auto it = row.find(o);
    if (it == row.end()) throw DataError("no row for problem '" + id + "' ordering " + o.to_string());
    return it->second;
  }

  bool has_timeout(const std::string& id) const {
    const Row& row = problem(id);
    return std::any_of(row.begin(), row.end(), [](const auto& e) { return !e.second.has_value(); });
  }

  /// Insert one row; rejects duplicates. Completeness is checked by validate().
  void add(const std::string& id, VariableOrdering o, std::optional<std::uint64_t> cells) {
    auto [it, inserted] = problems_[id].emplace(std::move(o), cells);
    if (!inserted) throw DataError("duplicate row for problem '" + id + "' ordering " + it->first.to_string());
  }

  /// Every problem must list all k! orderings of one k-variable set.
  void validate() const {
    for (const auto& [id, row] : problems_) {
      const auto& first = row.begin()->first;
      std::vector<Variable> vars = first.tuple;
      std::sort(vars.begin(), vars.end());
      std::uint64_t expected = 1;
      for (std::size_t i = 2; i <= vars.size(); ++i) expected *= i;
      for (const auto& [o, c] : row) {
        if (!o.is_permutation_of(vars)) {
          throw DataError("problem '" + id + "': ordering " + o.to_string() + " does not match " + first.to_string());
        }
      }
      if (row.size() != expected) {
        throw DataError("problem '" + id + "': incomplete orderings (" + std::to_string(row.size()) + " of " +
                        std::to_string(expected) + ")");
      }
    }
  }

 private:
  std::map<std::string, Row> problems_;
};

/// Parse the `problem,ordering,cells,timeout` CSV and validate it.
inline CellCountTable load_cell_table(std::string_view csv) {
  CellCountTable table;
  std::size_t lineno = 0;
  std::size_t begin = 0;
  bool header = false;
  while (begin < csv.size()) {
    std::size_t end = csv.find('\n', begin);
    if (end == std::string_view::npos) end = csv.size();
    std::string_view line = csv.substr(begin, end - begin);
    begin = end + 1;
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const std::string where = "cell table line " + std::to_string(lineno) + ": ";
    if (!header) {
      if (line != "problem,ordering,cells,timeout") throw DataError(where + "missing header");
      header = true;
      continue;
    }
    if (line.empty()) continue;
    std::vector<std::string_view> fields;
    std::size_t f = 0;
    while (true) {
      const std::size_t comma = line.find(',', f);
      fields.push_back(line.substr(f, comma == std::string_view::npos ? std::string_view::npos : comma - f));
      if (comma == std::string_view::npos) break;
      f = comma + 1;
    }
    if (fields.size() != 4) throw DataError(where + "expected 4 fields, found " + std::to_string(fields.size()));
    if (fields[0].empty()) throw DataError(where + "empty problem id");
    VariableOrdering ordering;
    try {
      ordering = VariableOrdering::parse(fields[1]);
    } catch (const Error& e) {
      throw DataError(where + e.what());
    }
    if (fields[3] != "0" && fields[3] != "1") throw DataError(where + "timeout must be 0 or 1");
    const bool timeout = fields[3] == "1";
    std::optional<std::uint64_t> cells;
    if (!fields[2].empty()) {
      const bool digits = std::all_of(fields[2].begin(), fields[2].end(), [](char c) { return c >= '0' && c <= '9'; });
      if (!digits || fields[2].size() > 18) throw DataError(where + "cells must be a positive integer");
      cells = std::stoull(std::string(fields[2]));
      if (*cells == 0) throw DataError(where + "cells must be a positive integer");
    }
    if (timeout && cells) throw DataError(where + "cells given for a timed-out ordering");
    if (!timeout && !cells) throw DataError(where + "cells missing for a completed ordering");
    try {
      table.add(std::string(fields[0]), std::move(ordering), cells);
    } catch (const DataError& e) {
      throw DataError(where + e.what());
    }
  }
  if (!header) throw DataError("cell table: missing header");
  table.validate();
  return table;
}

using Picks = std::map<std::string, VariableOrdering>;

namespace detail {

inline void check_picks(const CellCountTable& table, const std::map<Heuristic, Picks>& picks) {
  for (const auto& [h, by_problem] : picks) {
    for (const auto& [id, o] : by_problem) {
      try {
        (void)table.cells(id, o);
      } catch (const DataError& e) {
        throw DataError(std::string(to_string(h)) + " pick is dangling: " + e.what());
      }
    }
    for (const auto& [id, row] : table.problems()) {
      if (!by_problem.contains(id)) throw DataError(std::string(to_string(h)) + " has no pick for '" + id + "'");
    }
  }
}

}  // namespace detail

/// Per heuristic, the problems on which its pick has no more cells than every
/// other heuristic's pick. Ties credit every tying heuristic. Problems where any
/// pick timed out are skipped.
inline std::map<Heuristic, std::uint64_t> best_pick_counts(const CellCountTable& table,
                                                           const std::map<Heuristic, Picks>& picks) {
  detail::check_picks(table, picks);
  std::map<Heuristic, std::uint64_t> counts;
  for (const auto& [h, p] : picks) counts[h] = 0;
  for (const auto& [id, row] : table.problems()) {
    std::map<Heuristic, std::uint64_t> scored;
    bool complete = true;
    for (const auto& [h, p] : picks) {
      const auto& c = table.cells(id, p.at(id));
      if (!c) {
        complete = false;
        break;
      }
      scored[h] = *c;
    }
    if (!complete || scored.empty()) continue;
    std::uint64_t best = UINT64_MAX;
    for (const auto& [h, c] : scored) best = std::min(best, c);
    for (const auto& [h, c] : scored) {
      if (c == best) ++counts[h];
    }
  }
  return counts;
}

/// Per timeout-free problem: (average - cells(pick)) / average * 100, where the
/// average runs over all orderings. Positive means the pick beats the average.
inline std::map<std::string, mpq_class> savings_percent(const CellCountTable& table, const Picks& pick) {
  std::map<std::string, mpq_class> out;
  for (const auto& [id, row] : table.problems()) {
    if (table.has_timeout(id)) continue;
    auto it = pick.find(id);
    if (it == pick.end()) throw DataError("no pick for '" + id + "'");
    const auto& chosen = table.cells(id, it->second);
    if (!chosen) throw DataError("pick for '" + id + "' timed out");
    mpz_class total = 0;
    for (const auto& [o, c] : row) total += mpz_class(std::to_string(*c));
    const mpq_class average(total, row.size());
    mpq_class saving = (average - mpq_class(mpz_class(std::to_string(*chosen)))) / average * 100;
    saving.canonicalize();
    out.emplace(id, std::move(saving));
  }
  return out;
}

struct SavingsSummary {
  mpq_class mean_pct;
  mpq_class median_pct;
  mpq_class q1_pct;
  mpq_class q3_pct;
  std::size_t n_problems = 0;
};

/// Exact mean; quartiles by linear interpolation at positions (n-1)*{1/4,1/2,3/4}.
inline SavingsSummary summarize(std::vector<mpq_class> values) {
  if (values.empty()) throw Error("cannot summarize an empty list");
  std::sort(values.begin(), values.end());
  SavingsSummary s;
  s.n_problems = values.size();
  mpq_class sum = 0;
  for (const auto& v : values) sum += v;
  s.mean_pct = sum / mpq_class(values.size());
  auto quantile = [&](unsigned quarter) {
    const mpq_class pos(static_cast<unsigned long>((values.size() - 1) * quarter), 4UL);
    mpq_class p = pos;
    p.canonicalize();
    const mpz_class lo_z = p.get_num() / p.get_den();
    const std::size_t lo = lo_z.get_ui();
    const mpq_class frac = p - mpq_class(lo_z);
    if (frac == 0 || lo + 1 >= values.size()) return values[lo];
    mpq_class r = values[lo] + (values[lo + 1] - values[lo]) * frac;
    r.canonicalize();
    return r;
  };
  s.q1_pct = quantile(1);
  s.median_pct = quantile(2);
  s.q3_pct = quantile(3);
  return s;
}

/// Among problems where some ordering timed out, those whose pick completed.
inline std::uint64_t timeout_avoidance(const CellCountTable& table, const Picks& pick) {
  std::uint64_t n = 0;
  for (const auto& [id, row] : table.problems()) {
    if (!table.has_timeout(id)) continue;
    auto it = pick.find(id);
    if (it == pick.end()) throw DataError("no pick for '" + id + "'");
    if (table.cells(id, it->second).has_value()) ++n;
  }
  return n;
}

struct HeuristicStats {
  std::uint64_t best_pick_count = 0;
  mpq_class best_pick_pct;
  std::optional<SavingsSummary> savings;  // absent when every problem had a timeout
  std::uint64_t timeout_avoidance_count = 0;
};

struct BenchResults {
  std::map<Heuristic, HeuristicStats> per_heuristic;
  std::size_t n_problems = 0;
  std::size_t n_no_timeout = 0;
  std::size_t n_some_timeout = 0;
};

inline BenchResults compute_bench(const CellCountTable& table, const std::map<Heuristic, Picks>& picks) {
  BenchResults r;
  r.n_problems = table.size();
  for (const auto& [id, row] : table.problems()) {
    if (table.has_timeout(id)) {
      ++r.n_some_timeout;
    } else {
      ++r.n_no_timeout;
    }
  }
  const auto best = best_pick_counts(table, picks);
  for (const auto& [h, p] : picks) {
    HeuristicStats s;
    s.best_pick_count = best.at(h);
    if (r.n_problems != 0) {
      s.best_pick_pct = mpq_class(mpz_class(std::to_string(s.best_pick_count)) * 100, r.n_problems);
      s.best_pick_pct.canonicalize();
    }
    std::vector<mpq_class> savings;
    for (auto& [id, v] : savings_percent(table, p)) savings.push_back(v);
    if (!savings.empty()) s.savings = summarize(std::move(savings));
    s.timeout_avoidance_count = timeout_avoidance(table, p);
    r.per_heuristic.emplace(h, std::move(s));
  }
  return r;
}

/// Decimal rendering rounded half away from zero.
inline std::string format_fixed(const mpq_class& value, unsigned digits) {
  mpz_class scale = 1;
  for (unsigned i = 0; i < digits; ++i) scale *= 10;
  const mpq_class scaled = abs(value) * mpq_class(scale);
  mpz_class rounded = (scaled.get_num() * 2 + scaled.get_den()) / (scaled.get_den() * 2);
  const bool negative = value < 0 && rounded != 0;
  std::string s = rounded.get_str();
  if (digits > 0) {
    if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
  }
  return negative ? "-" + s : s;
}

namespace detail {

// Column order follows the published comparison tables.
inline constexpr std::array<Heuristic, 3> kReportOrder{Heuristic::Sotd, Heuristic::Ndrr, Heuristic::Brown};

inline std::string emit_text(const BenchResults& r) {
  std::ostringstream out;
  auto line = [&](const std::string& label, const std::vector<std::string>& cells) {
    std::ostringstream l;
    l << std::left << std::setw(16) << label;
    for (const auto& c : cells) l << std::left << std::setw(18) << c;
    std::string text = l.str();
    text.erase(text.find_last_not_of(' ') + 1);
    out << text << "\n";
  };
  auto row = [&](const std::string& label, auto cell) {
    std::vector<std::string> cells;
    for (auto h : kReportOrder) {
      if (r.per_heuristic.contains(h)) cells.push_back(cell(r.per_heuristic.at(h)));
    }
    line(label, cells);
  };
  auto header = [&]() {
    std::vector<std::string> names;
    for (auto h : kReportOrder) {
      if (r.per_heuristic.contains(h)) names.emplace_back(to_string(h));
    }
    line("", names);
  };
  auto pct = [](const std::optional<SavingsSummary>& s, mpq_class SavingsSummary::*field) {
    return s ? format_fixed((*s).*field, 2) + "%" : std::string("n/a");
  };

  out << "problems: " << r.n_problems << " (no timeout: " << r.n_no_timeout
      << ", some timeout: " << r.n_some_timeout << ")\n\n";
  out << "Most competitive selection\n";
  header();
  row("best pick", [](const HeuristicStats& s) {
    return std::to_string(s.best_pick_count) + " (" + format_fixed(s.best_pick_pct, 2) + "%)";
  });
  out << "\nSaving versus problem average (" << r.n_no_timeout << " problems without timeouts)\n";
  header();
  row("mean", [&](const HeuristicStats& s) { return pct(s.savings, &SavingsSummary::mean_pct); });
  row("median", [&](const HeuristicStats& s) { return pct(s.savings, &SavingsSummary::median_pct); });
  row("q1", [&](const HeuristicStats& s) { return pct(s.savings, &SavingsSummary::q1_pct); });
  row("q3", [&](const HeuristicStats& s) { return pct(s.savings, &SavingsSummary::q3_pct); });
  out << "\nTimeouts avoided (" << r.n_some_timeout << " problems with a timeout)\n";
  header();
  row("avoided", [](const HeuristicStats& s) { return std::to_string(s.timeout_avoidance_count); });
  return out.str();
}

inline std::string emit_json(const BenchResults& r) {
  nlohmann::ordered_json doc;
  nlohmann::ordered_json per = nlohmann::ordered_json::object();
  for (auto h : kAllHeuristics) {
    if (!r.per_heuristic.contains(h)) continue;
    const auto& s = r.per_heuristic.at(h);
    nlohmann::ordered_json entry;
    entry["best_pick_count"] = s.best_pick_count;
    entry["best_pick_pct"] = s.best_pick_pct.get_d();
    auto put = [&](const char* key, mpq_class SavingsSummary::*field) {
      if (s.savings) {
        entry[key] = ((*s.savings).*field).get_d();
      } else {
        entry[key] = nullptr;
      }
    };
    put("mean_saving_pct", &SavingsSummary::mean_pct);
    put("median_saving_pct", &SavingsSummary::median_pct);
    put("q1_pct", &SavingsSummary::q1_pct);
    put("q3_pct", &SavingsSummary::q3_pct);
    entry["timeout_avoidance_count"] = s.timeout_avoidance_count;
    per[std::string(to_string(h))] = std::move(entry);
  }
  doc["per_heuristic"] = std::move(per);
  doc["totals"] = {{"n_problems", r.n_problems}, {"n_no_timeout", r.n_no_timeout}, {"n_some_timeout", r.n_some_timeout}};
  return doc.dump(2) + "\n";
}

inline std::string emit_csv(const BenchResults& r) {
  std::ostringstream out;
  out << "heuristic,best_pick_count,best_pick_pct,mean_saving_pct,median_saving_pct,q1_pct,q3_pct,"
         "timeout_avoidance_count\n";
  for (auto h : kReportOrder) {
    if (!r.per_heuristic.contains(h)) continue;
    const auto& s = r.per_heuristic.at(h);
    auto field = [&](mpq_class SavingsSummary::*f) { return s.savings ? format_fixed((*s.savings).*f, 6) : ""; };
    out << to_string(h) << ',' << s.best_pick_count << ',' << format_fixed(s.best_pick_pct, 6) << ','
        << field(&SavingsSummary::mean_pct) << ',' << field(&SavingsSummary::median_pct) << ','
        << field(&SavingsSummary::q1_pct) << ',' << field(&SavingsSummary::q3_pct) << ','
        << s.timeout_avoidance_count << "\n";
  }
  return out.str();
}

}  // namespace detail

/// Render results as `text`, `json` or `csv`. Output is byte-deterministic.
inline std::string emit_report(const BenchResults& results, std::string_view format) {
  if (format == "text") return detail::emit_text(results);
  if (format == "json") return detail::emit_json(results);
  if (format == "csv") return detail::emit_csv(results);
  throw Error("unknown report format '" + std::string(format) + "'");
}

}  // namespace cadorder
