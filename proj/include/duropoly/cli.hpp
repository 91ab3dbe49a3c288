// Copyright 2026 The Duropoly Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DUROPOLY_CLI_HPP
#define DUROPOLY_CLI_HPP

#include <cstddef>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "duropoly/bounds.hpp"
#include "duropoly/equilibrium.hpp"
#include "duropoly/instance.hpp"
#include "duropoly/io.hpp"
#include "duropoly/nonskim.hpp"
#include "duropoly/pacman.hpp"
#include "duropoly/sweep.hpp"
#include "duropoly/verifier.hpp"

namespace duropoly::cli {

enum class Command { kSolve, kBounds, kVerify, kPacman, kTight, kNonskim, kOracle, kSweep };
enum class Format { kTable, kJson, kCsv };

enum ExitCode : int {
  kExitOk = 0,
  kExitInvalid = 1,    // unparseable or invalid input
  kExitViolation = 2,  // a checked property or bound failed
  kExitSizeGuard = 3,  // exhaustive routine refused the instance
};

struct RunConfig {
  Command command = Command::kSolve;
  std::optional<std::string> input_path;
  std::optional<std::string> profile_path;
  std::optional<Format> format;  // unset: csv for sweep, table otherwise
  SweepParams sweep;
  long long tight_n = 11;
  long long tight_k = 1;
  std::string tight_high_value = "1";
  bool demo = false;
};

namespace detail {

using io::json;

inline Format format_or(const RunConfig& cfg, Format fallback) { return cfg.format.value_or(fallback); }

inline void unsupported(const char* command) {
  throw ValidationError("format", std::string("csv output is not available for '") + command + "'");
}

inline json load_input(const RunConfig& cfg) {
  if (!cfg.input_path) throw ValidationError("input", "an input file is required");
  return io::read_document(*cfg.input_path);
}

inline void print_solution_table(std::ostream& os, const Instance& inst, const EquilibriumSolution& sol) {
  os << "consumers: " << inst.consumers() << "  periods: " << inst.periods() << '\n';
  os << std::left << std::setw(8) << "period" << std::setw(16) << "price" << std::setw(8) << "buyers"
     << "cutoff\n";
  for (int t = 1; t <= inst.periods(); ++t) {
    const auto k = static_cast<std::size_t>(t - 1);
    os << std::left << std::setw(8) << t << std::setw(16) << sol.prices[k].to_string() << std::setw(8)
       << sol.buyers_per_period[k] << sol.cutoffs[k] << '\n';
  }
  os << "profit: " << sol.profit << " (" << sol.profit.to_decimal() << ")\n";
}

inline void print_bounds_table(std::ostream& os, const BoundsReport& r) {
  auto line = [&](const char* name, const Rational& v) {
    os << std::left << std::setw(20) << name << v.to_string() << '\n';
  };
  line("Pi_M", r.static_profit);
  line("Pi_D", r.duropoly_profit);
  line("sum_p", r.sum_suffix_prices);
  line("p1", r.top_price);
  line("Pi_C", r.coase_profit);
  line("surplus", r.surplus);
  line("price_path_bound", r.price_path_bound);
  os << std::left << std::setw(20) << "ratio" << r.ratio << " (" << r.ratio_decimal() << ")\n";
  auto verdict = [&](const char* name, bool ok) {
    os << std::left << std::setw(36) << name << (ok ? "holds" : "VIOLATED") << '\n';
  };
  verdict("Pi_M <= Pi_D", r.verdicts.static_le_duropoly);
  verdict("Pi_D <= price-path bound", r.verdicts.duropoly_le_price_path_bound);
  verdict("Pi_D <= sum_p", r.verdicts.duropoly_le_sum_prices);
  verdict("sum_p <= Pi_M + p1", r.verdicts.sum_prices_le_static_plus_top);
  verdict("Pi_M + p1 <= 2 Pi_M", r.verdicts.static_plus_top_le_double_static);
}

inline void print_report_table(std::ostream& os, const DeviationReport& report) {
  if (report.empty()) {
    os << "no profitable unilateral deviation\n";
    return;
  }
  for (const auto& d : report.deviations) {
    os << (d.consumer ? "consumer " + std::to_string(*d.consumer) : std::string("duropolist")) << " at (i="
       << d.subgame.first_consumer << ", t=" << d.subgame.start_period << "): " << d.alternative_action
       << " gains " << d.payoff_gain << '\n';
  }
}

inline std::string join(std::span<const Rational> values) {
  std::string s;
  for (const auto& v : values) s += (s.empty() ? "" : ", ") + v.to_string();
  return s;
}

inline int cmd_solve(const RunConfig& cfg, std::ostream& out) {
  const Instance inst = io::instance_from_json(load_input(cfg));
  const auto sol = solve(inst);
  switch (format_or(cfg, Format::kTable)) {
    case Format::kTable:
      print_solution_table(out, inst, sol);
      break;
    case Format::kJson: {
      json doc = io::instance_to_json(inst);
      doc["solution"] = io::solution_to_json(sol);
      out << doc.dump(2) << '\n';
      break;
    }
    case Format::kCsv:
      out << "period,price,price_decimal,buyers,cutoff\n";
      for (int t = 1; t <= inst.periods(); ++t) {
        const auto k = static_cast<std::size_t>(t - 1);
        out << t << ',' << sol.prices[k] << ',' << sol.prices[k].to_decimal() << ',' << sol.buyers_per_period[k]
            << ',' << sol.cutoffs[k] << '\n';
      }
      break;
  }
  return kExitOk;
}

inline int emit_bounds(const RunConfig& cfg, std::ostream& out, const Instance& inst, const BoundsReport& r) {
  switch (format_or(cfg, Format::kTable)) {
    case Format::kTable:
      out << "valuations: " << join(inst.valuations())
          << "  periods: " << inst.periods() << '\n';
      print_bounds_table(out, r);
      break;
    case Format::kJson: {
      json doc = io::instance_to_json(inst);
      doc["bounds"] = io::bounds_to_json(r);
      out << doc.dump(2) << '\n';
      break;
    }
    case Format::kCsv:
      out << kSweepCsvHeader << '\n';
      write_csv_row(out, SweepRow{1, inst.consumers(), inst.periods(), r});
      break;
  }
  return r.verdicts.all() ? kExitOk : kExitViolation;
}

inline int cmd_bounds(const RunConfig& cfg, std::ostream& out) {
  const Instance inst = io::instance_from_json(load_input(cfg));
  return emit_bounds(cfg, out, inst, analyze(inst));
}

inline int cmd_tight(const RunConfig& cfg, std::ostream& out) {
  const Rational high = [&] {
    try {
      return Rational::parse(cfg.tight_high_value);
    } catch (const std::exception& e) {
      throw ValidationError("vh", e.what());
    }
  }();
  const Instance inst = tight_example(cfg.tight_n, cfg.tight_k, high);
  const auto report = analyze(inst);
  const Rational low = high / Rational(cfg.tight_n - cfg.tight_k + 1);
  const Rational expected = high * cfg.tight_k + low * (cfg.tight_n - cfg.tight_k);
  const int code = emit_bounds(cfg, out, inst, report);
  if (report.duropoly_profit != expected) return kExitViolation;
  return code;
}

inline int emit_report(const RunConfig& cfg, std::ostream& out, const DeviationReport& report, json extra) {
  if (format_or(cfg, Format::kTable) == Format::kCsv) unsupported("verify");
  if (format_or(cfg, Format::kTable) == Format::kJson) {
    extra["deviations"] = io::report_to_json(report);
    extra["equilibrium"] = report.empty();
    out << extra.dump(2) << '\n';
  } else {
    print_report_table(out, report);
  }
  return report.empty() ? kExitOk : kExitViolation;
}

inline int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const json doc = load_input(cfg);
  const Instance inst = io::instance_from_json(doc);
  std::optional<json> profile;
  if (cfg.profile_path) profile = io::read_document(*cfg.profile_path);
  else if (doc.contains("profile")) profile = doc.at("profile");
  if (profile) {
    const auto prof = io::profile_from_json(*profile, inst);
    return emit_report(cfg, out, verify_profile(inst, prof), json{{"kind", "two-period profile"}});
  }
  const auto sol = doc.contains("solution") ? io::solution_from_json(doc.at("solution"), inst) : solve(inst);
  return emit_report(cfg, out, verify_spne(inst, sol), json{{"kind", "equilibrium solution"}});
}

inline int cmd_pacman(const RunConfig& cfg, std::ostream& out) {
  const Instance inst = io::instance_from_json(load_input(cfg));
  const auto cond = pacman_condition(inst);
  const auto run = simulate_pacman(inst);
  const Rational surplus = total_surplus(inst);
  const Rational duropoly = solve(inst).profit;
  std::optional<bool> subsets;
  if (inst.consumers() <= kMaxSubsetConsumers) subsets = subset_price_property(inst);
  const bool consistent = cond.eligible ? (duropoly == surplus && run.revenue == surplus) : duropoly < surplus;

  if (format_or(cfg, Format::kTable) == Format::kCsv) unsupported("pacman");
  if (format_or(cfg, Format::kTable) == Format::kJson) {
    json doc = io::instance_to_json(inst);
    doc["pacman"] = {{"eligible", cond.eligible},
                     {"witness", cond.witness ? json(*cond.witness) : json(nullptr)},
                     {"tie_dependent_eligibility", cond.tie_dependent},
                     {"pacman_revenue", io::to_json(run.revenue)},
                     {"pacman_prices", io::rationals_to_json(run.prices)},
                     {"total_surplus", io::to_json(surplus)},
                     {"duropoly_profit", io::to_json(duropoly)},
                     {"subset_price_property", subsets ? json(*subsets) : json(nullptr)},
                     {"consistent", consistent}};
    out << doc.dump(2) << '\n';
  } else {
    out << "eligible: " << (cond.eligible ? "yes" : "no");
    if (cond.witness) out << " (witness " << *cond.witness << ")";
    if (cond.tie_dependent) out << " [tie-dependent eligibility]";
    out << '\n'
        << "pacman prices: " << join(run.prices) << '\n'
        << "pacman revenue: " << run.revenue << '\n'
        << "total surplus: " << surplus << '\n'
        << "duropoly profit: " << duropoly << '\n'
        << "subset price property: " << (subsets ? (*subsets ? "holds" : "fails") : "skipped (N > 15)") << '\n';
  }
  return consistent ? kExitOk : kExitViolation;
}

inline int cmd_nonskim(const RunConfig& cfg, std::ostream& out) {
  Instance inst = builtin_nonskim_example().first;
  StrategyProfile2P prof = builtin_nonskim_example().second;
  if (!cfg.demo) {
    const json doc = load_input(cfg);
    inst = io::instance_from_json(doc);
    if (cfg.profile_path) prof = io::profile_from_json(io::read_document(*cfg.profile_path), inst);
    else if (doc.contains("profile")) prof = io::profile_from_json(doc.at("profile"), inst);
    else throw ValidationError("profile", "pass --profile <file> or embed a \"profile\" object");
  }
  const auto outcome = play_profile(inst, prof);
  const auto report = verify_profile(inst, prof);
  const bool skims = is_skimming(inst, prof);
  std::optional<StrategyProfile2P> swapped;
  std::optional<SwapChain> chain;
  if (report.empty()) {
    swapped = swap_to_skimming(inst, prof);
    if (!skims) chain = check_swap_chain(inst, prof);
  }

  if (format_or(cfg, Format::kTable) == Format::kCsv) unsupported("nonskim");
  if (format_or(cfg, Format::kTable) == Format::kJson) {
    json doc = io::instance_to_json(inst);
    doc["profile"] = io::profile_to_json(inst, prof);
    doc["revenue"] = io::to_json(outcome.revenue);
    doc["mu2"] = outcome.mu2 ? io::to_json(*outcome.mu2) : json(nullptr);
    doc["equilibrium"] = report.empty();
    doc["deviations"] = io::report_to_json(report);
    doc["skimming"] = skims;
    if (swapped) {
      doc["swapped_profile"] = io::profile_to_json(inst, *swapped);
      doc["swapped_revenue"] = io::to_json(play_profile(inst, *swapped).revenue);
    }
    if (chain) doc["swap_chain"] = io::rationals_to_json(chain->as_vector());
    out << doc.dump(2) << '\n';
  } else {
    out << "valuations: " << join(inst.valuations()) << '\n'
        << "mu1: " << prof.mu1 << "  mu2: " << (outcome.mu2 ? outcome.mu2->to_string() : "-")
        << "  revenue: " << outcome.revenue << '\n';
    out << "period-1 buyers:";
    for (std::size_t c = 0; c < inst.consumers(); ++c)
      if (outcome.buys_first[c]) out << ' ' << inst.valuations()[c];
    out << '\n' << "skimming: " << (skims ? "yes" : "no") << '\n';
    print_report_table(out, report);
    if (swapped) {
      const auto swapped_out = play_profile(inst, *swapped);
      out << "swapped thresholds: " << join(swapped->thresholds) << "  revenue: " << swapped_out.revenue
          << "  mu2: " << (swapped_out.mu2 ? swapped_out.mu2->to_string() : "-") << '\n';
    }
    if (chain) out << "swap chain (w, v, mu2(E^v), mu2(S^w), mu1(E), mu1(S), mu2(E), mu2(S)): " << join(chain->as_vector()) << '\n';
  }
  return report.empty() ? kExitOk : kExitViolation;
}

inline int cmd_oracle(const RunConfig& cfg, std::ostream& out) {
  const Instance inst = io::instance_from_json(load_input(cfg));
  const auto sol = solve(inst);
  const auto search = enumerate_schedules(inst);
  const Rational skips = best_with_skips(inst);
  const auto report = verify_spne(inst, sol);
  const bool ok = search.max_profit == sol.profit && skips <= sol.profit && report.empty();
  if (format_or(cfg, Format::kTable) == Format::kCsv) unsupported("oracle");
  if (format_or(cfg, Format::kTable) == Format::kJson) {
    json doc = io::instance_to_json(inst);
    doc["dp_profit"] = io::to_json(sol.profit);
    doc["enumerated_profit"] = io::to_json(search.max_profit);
    doc["enumerated_schedule"] = search.best_schedule;
    doc["best_with_skips"] = io::to_json(skips);
    doc["deviations"] = io::report_to_json(report);
    doc["agree"] = ok;
    out << doc.dump(2) << '\n';
  } else {
    out << "dynamic program: " << sol.profit << '\n'
        << "enumeration:     " << search.max_profit << '\n'
        << "with skips:      " << skips << '\n';
    print_report_table(out, report);
    out << (ok ? "agree" : "MISMATCH") << '\n';
  }
  return ok ? kExitOk : kExitViolation;
}

inline int cmd_sweep(const RunConfig& cfg, std::ostream& out) {
  const auto rows = run_sweep(cfg.sweep);
  bool ok = true;
  for (const auto& r : rows) ok = ok && r.report.verdicts.all();
  if (format_or(cfg, Format::kCsv) == Format::kJson) {
    json arr = json::array();
    for (const auto& r : rows) {
      json row = io::bounds_to_json(r.report);
      row["instance_id"] = r.instance_id;
      row["N"] = r.consumers;
      row["T"] = r.periods;
      arr.push_back(std::move(row));
    }
    out << arr.dump(2) << '\n';
  } else {
    out << kSweepCsvHeader << '\n';
    for (const auto& r : rows) write_csv_row(out, r);
  }
  return ok ? kExitOk : kExitViolation;
}

}  // namespace detail

// Executes one command, writing the report to `out` and diagnostics to `err`.
inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    switch (cfg.command) {
      case Command::kSolve: return detail::cmd_solve(cfg, out);
      case Command::kBounds: return detail::cmd_bounds(cfg, out);
      case Command::kVerify: return detail::cmd_verify(cfg, out);
      case Command::kPacman: return detail::cmd_pacman(cfg, out);
      case Command::kTight: return detail::cmd_tight(cfg, out);
      case Command::kNonskim: return detail::cmd_nonskim(cfg, out);
      case Command::kOracle: return detail::cmd_oracle(cfg, out);
      case Command::kSweep: return detail::cmd_sweep(cfg, out);
    }
  } catch (const SizeGuardError& e) {
    err << "refused: " << e.what() << '\n';
    return kExitSizeGuard;
  } catch (const NotAnEquilibrium& e) {
    err << "error: " << e.what() << '\n';
    return kExitViolation;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitInvalid;
}

}  // namespace duropoly::cli

#endif  // DUROPOLY_CLI_HPP
