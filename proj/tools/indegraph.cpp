// Command-line front end: invariants, audits, sweeps, graph export,
// Hamiltonian search and closed-form vs oracle timing.
//
// Exit codes: 0 success, 1 usage or capacity error, 2 strict-mode audit failure.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "indegraph/audit.hpp"
#include "indegraph/closed_forms.hpp"
#include "indegraph/errors.hpp"
#include "indegraph/export.hpp"
#include "indegraph/oracle_graph.hpp"
#include "indegraph/paper_claims.hpp"

namespace {

using namespace indegraph;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitStrict = 2;

struct Options {
  OracleLimits limits;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  std::optional<std::string> output_path;
};

void emit(const Options& opts, const std::string& text) {
  if (!opts.output_path) {
    std::cout << text;
    return;
  }
  std::ofstream out(*opts.output_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + *opts.output_path + " for writing");
  out << text;
  if (!out) throw std::runtime_error("write failed: " + *opts.output_path);
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string degree_runs_str(const std::vector<DegreeRun>& runs) {
  std::string out;
  for (const auto& r : runs) {
    if (!out.empty()) out += ", ";
    out += std::to_string(r.degree) + " x" + std::to_string(r.count);
  }
  return out;
}

std::string sizes_str(const std::vector<std::uint64_t>& sizes) {
  std::string out = "{";
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(sizes[i]);
  }
  return out + "}";
}

ReportFormat parse_report_format(const std::string& s) {
  if (s == "md") return ReportFormat::kMarkdown;
  if (s == "json") return ReportFormat::kJson;
  return ReportFormat::kCsv;
}

bool any_mismatch(const SweepReport& r) {
  for (const auto& [id, s] : r.summary) {
    if (s.fails > 0) return true;
  }
  return false;
}

AuditConfig audit_config(const Options& opts) {
  AuditConfig c;
  c.limits = opts.limits;
  return c;
}

int cmd_info(const Options& opts, std::uint64_t n_raw, bool verify, bool as_json) {
  const Modulus n(n_raw);
  const DivisorTable table(n);
  const InvariantSet cf = cf_invariants(table);

  struct Check {
    std::string name;
    std::string status;
  };
  std::vector<Check> checks;
  bool disagreement = false;
  if (verify) {
    if (n_raw > opts.limits.build_limit) {
      checks.push_back({"all", "skipped: n exceeds oracle build limit " +
                                   std::to_string(opts.limits.build_limit)});
    } else {
      const auto g = IndependentGraph::build(n, opts.limits.build_limit);
      const InvariantSet oracle = oracle_invariants(g, opts.limits);
      auto add = [&](const std::string& name, bool same) {
        checks.push_back({name, same ? "agree" : "DISAGREE"});
        disagreement |= !same;
      };
      add("edges", oracle.edge_count == cf.edge_count);
      bool degrees_ok = true;
      for (Residue a = 0; a < n_raw; ++a) degrees_ok &= degree(g, a) == cf_degree(a, n);
      add("degrees", degrees_ok && oracle.degree_sequence == cf.degree_sequence);
      add("connected", oracle.connected == cf.connected);
      add("girth", oracle.girth == cf.girth);
      add("diameter", oracle.diameter == cf.diameter);
      add("bipartite", oracle.bipartite == cf.bipartite);
      add("complete", oracle.complete == cf.complete);
      add("parts", oracle.partite_count == cf.partite_count &&
                       verify_complete_multipartite(g, order_decomposition(n)));
      auto add_optional = [&](const std::string& name, const auto& o, const auto& c,
                              std::uint64_t limit) {
        if (!o) {
          checks.push_back({name, "skipped: n exceeds search limit " + std::to_string(limit)});
        } else {
          add(name, *o == *c);
        }
      };
      add_optional("clique", oracle.clique_number, cf.clique_number,
                   opts.limits.exact_search_limit);
      add_optional("chromatic", oracle.chromatic_number, cf.chromatic_number,
                   opts.limits.exact_search_limit);
      add_optional("hamiltonian", oracle.hamiltonian, cf.hamiltonian,
                   opts.limits.hamiltonian_limit);
    }
  }

  std::ostringstream out;
  if (as_json) {
    if (!verify) {
      out << invariants_to_json(cf);
    } else {
      nlohmann::ordered_json j;
      j["invariants"] = nlohmann::ordered_json::parse(invariants_to_json(cf));
      for (const auto& c : checks) j["verify"][c.name] = c.status;
      out << j.dump(2) << "\n";
    }
  } else {
    const auto sizes = cf_part_sizes(n).sizes;
    out << "n: " << n_raw << "\n";
    out << "parts: " << cf.partite_count << " " << sizes_str(sizes) << "\n";
    out << "edges: " << cf.edge_count << "\n";
    out << "degrees: " << degree_runs_str(cf.degree_sequence) << "\n";
    out << "connected: " << yes_no(cf.connected) << "\n";
    out << "complete: " << yes_no(cf.complete) << (cf.complete ? " (K_2)" : "") << "\n";
    out << "star: " << yes_no(table.n_is_prime()) << "\n";
    out << "bipartite: " << yes_no(cf.bipartite) << "\n";
    out << "girth: " << cf.girth.to_string() << "\n";
    out << "diameter: " << cf.diameter.to_string() << "\n";
    out << "clique: " << *cf.clique_number << "\n";
    out << "chromatic: " << *cf.chromatic_number << "\n";
    out << "hamiltonian: " << yes_no(*cf.hamiltonian) << "\n";
    if (verify) {
      out << "verify:\n";
      for (const auto& c : checks) out << "  " << c.name << ": " << c.status << "\n";
    }
  }
  emit(opts, out.str());
  return disagreement ? kExitStrict : kExitOk;
}

int cmd_audit(const Options& opts, std::uint64_t n_raw, bool strict,
              const std::optional<std::string>& format) {
  const SweepReport report = sweep(n_raw, n_raw, audit_config(opts), 1);
  if (format) {
    emit(opts, render_report(report, parse_report_format(*format)));
  } else {
    std::ostringstream out;
    out << "audit of n = " << n_raw << "\n";
    for (const auto& v : report.results.front().verdicts) {
      out << std::left << std::setw(13) << to_string(v.theorem) << std::setw(21)
          << to_string(v.status);
      if (v.status == VerdictStatus::kMatch || v.status == VerdictStatus::kMismatch) {
        out << "claimed " << v.claimed << ", observed " << v.observed << " ["
            << to_string(v.ground_truth) << "]";
      }
      if (v.witness && v.status != VerdictStatus::kMatch) out << "  -- " << *v.witness;
      out << "\n";
    }
    emit(opts, out.str());
  }
  return strict && any_mismatch(report) ? kExitStrict : kExitOk;
}

int cmd_sweep(const Options& opts, std::uint64_t lo, std::uint64_t hi, const std::string& format,
              bool strict) {
  const SweepReport report = sweep(lo, hi, audit_config(opts), opts.jobs);
  emit(opts, render_report(report, parse_report_format(format)));
  return strict && any_mismatch(report) ? kExitStrict : kExitOk;
}

int cmd_export(const Options& opts, std::uint64_t n_raw, const std::string& format,
               bool label_orders) {
  const auto g = IndependentGraph::build(Modulus(n_raw), opts.limits.build_limit);
  emit(opts, export_graph(g, parse_graph_format(format), label_orders));
  return kExitOk;
}

int cmd_hamiltonian(const Options& opts, std::uint64_t n_raw) {
  const Modulus n(n_raw);
  std::ostringstream out;
  out << "prediction: " << (cf_is_hamiltonian(n) ? "Hamiltonian" : "not Hamiltonian") << "\n";
  if (n_raw > opts.limits.hamiltonian_limit || n_raw > opts.limits.build_limit) {
    out << "search skipped: n exceeds Hamiltonian search limit "
        << opts.limits.hamiltonian_limit << "\n";
  } else {
    const auto g = IndependentGraph::build(n, opts.limits.build_limit);
    const auto cycle = find_hamiltonian_cycle(g, opts.limits.hamiltonian_limit);
    if (!cycle) {
      out << "NONE\n";
    } else {
      if (!is_hamiltonian_cycle(g, *cycle)) throw std::logic_error("invalid cycle returned");
      for (std::size_t i = 0; i < cycle->size(); ++i) out << (i ? " " : "") << (*cycle)[i];
      out << "\n";
    }
  }
  emit(opts, out.str());
  return kExitOk;
}

int cmd_bench(const Options& opts, std::uint64_t lo, std::uint64_t hi, std::uint64_t step) {
  if (lo < 2 || lo > hi) throw CLI::ValidationError("bench", "range must satisfy 2 <= lo <= hi");
  using clock = std::chrono::steady_clock;
  auto micros = [](clock::duration d) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(3)
      << std::chrono::duration<double, std::micro>(d).count();
    return s.str();
  };
  std::ostringstream out;
  out << "n,cf_micros,oracle_micros\n";
  for (std::uint64_t n = lo; n <= hi; n += step) {
    const Modulus m(n);
    auto t0 = clock::now();
    const InvariantSet cf = cf_invariants(m);
    const auto cf_time = clock::now() - t0;
    std::string oracle_col = "SKIPPED";
    if (n <= opts.limits.build_limit) {
      t0 = clock::now();
      const auto g = IndependentGraph::build(m, opts.limits.build_limit);
      const InvariantSet oracle = oracle_invariants(g, opts.limits);
      oracle_col = micros(clock::now() - t0);
      if (oracle.edge_count != cf.edge_count) throw std::logic_error("edge count disagreement");
    }
    out << n << ',' << micros(cf_time) << ',' << oracle_col << '\n';
    if (hi - n < step) break;
  }
  emit(opts, out.str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Independent graph of Z_n: invariants, claim audits and exports"};
  app.require_subcommand(1);
  Options opts;

  app.add_option("--oracle-limit", opts.limits.build_limit, "Largest n for explicit graph builds")
      ->envname("INDEGRAPH_ORACLE_LIMIT")
      ->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 20));
  app.add_option("--exact-limit", opts.limits.exact_search_limit,
                 "Largest n for exact clique and colouring searches")
      ->envname("INDEGRAPH_EXACT_LIMIT")
      ->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 20));
  app.add_option("--hamiltonian-limit", opts.limits.hamiltonian_limit,
                 "Largest n for exhaustive Hamiltonian search (at most 30)")
      ->envname("INDEGRAPH_HAMILTONIAN_LIMIT")
      ->check(CLI::Range(std::uint64_t{2}, std::uint64_t{30}));

  std::uint64_t n = 0, lo = 0, hi = 0, step = 1;
  bool verify = false, as_json = false, strict = false, label_orders = false;
  std::string sweep_format = "md", export_format;
  std::optional<std::string> audit_format;
  std::string output;

  auto add_output = [&](CLI::App* sub) {
    sub->add_option("-o,--output", output, "Write to this file instead of stdout");
  };

  auto* info = app.add_subcommand("info", "Closed-form invariants of the graph");
  info->add_option("n", n)->required()->check(CLI::Range(std::uint64_t{2}, UINT64_MAX));
  info->add_flag("--verify", verify, "Recompute on the explicit graph and compare");
  info->add_flag("--json", as_json, "JSON output");
  add_output(info);

  auto* audit = app.add_subcommand("audit", "Audit every claim for one n");
  audit->add_option("n", n)->required()->check(CLI::Range(std::uint64_t{2}, UINT64_MAX));
  audit->add_flag("--strict", strict, "Exit 2 if any claim is refuted");
  audit->add_option("--format", audit_format, "md, json or csv report instead of the verdict list")
      ->check(CLI::IsMember({"md", "json", "csv"}));
  add_output(audit);

  auto* sweep_cmd = app.add_subcommand("sweep", "Audit every n in [lo, hi]");
  sweep_cmd->add_option("lo", lo)->required()->check(CLI::Range(std::uint64_t{2}, UINT64_MAX));
  sweep_cmd->add_option("hi", hi)->required()->check(CLI::Range(std::uint64_t{2}, UINT64_MAX));
  sweep_cmd->add_option("--format", sweep_format, "md, json or csv")
      ->check(CLI::IsMember({"md", "json", "csv"}));
  sweep_cmd->add_option("--jobs,-j", opts.jobs, "Worker threads")
      ->envname("INDEGRAPH_JOBS")
      ->check(CLI::Range(1u, 1024u));
  sweep_cmd->add_flag("--strict", strict, "Exit 2 if any claim is refuted");
  add_output(sweep_cmd);

  auto* export_cmd = app.add_subcommand("export", "Write the graph as DOT, JSON or an edge list");
  export_cmd->add_option("n", n)->required()->check(CLI::Range(std::uint64_t{2}, UINT64_MAX));
  export_cmd->add_option("--format", export_format, "dot, json or edgelist")
      ->required()
      ->check(CLI::IsMember({"dot", "json", "edgelist"}));
  export_cmd->add_flag("--label-orders", label_orders, "Append o=<order> to DOT vertex labels");
  add_output(export_cmd);

  auto* ham = app.add_subcommand("hamiltonian", "Search for a Hamiltonian cycle");
  ham->add_option("n", n)->required()->check(CLI::Range(std::uint64_t{2}, UINT64_MAX));
  add_output(ham);

  auto* bench = app.add_subcommand("bench", "Time closed forms against the explicit graph");
  bench->add_option("lo", lo)->required()->check(CLI::Range(std::uint64_t{2}, UINT64_MAX));
  bench->add_option("hi", hi)->required()->check(CLI::Range(std::uint64_t{2}, UINT64_MAX));
  bench->add_option("--step", step, "Stride between measured n")
      ->check(CLI::Range(std::uint64_t{1}, UINT64_MAX));
  add_output(bench);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  if (!output.empty()) opts.output_path = output;

  try {
    if (*info) return cmd_info(opts, n, verify, as_json);
    if (*audit) return cmd_audit(opts, n, strict, audit_format);
    if (*sweep_cmd) {
      if (lo > hi) throw std::invalid_argument("sweep range must satisfy lo <= hi");
      return cmd_sweep(opts, lo, hi, sweep_format, strict);
    }
    if (*export_cmd) return cmd_export(opts, n, export_format, label_orders);
    if (*ham) return cmd_hamiltonian(opts, n);
    if (*bench) return cmd_bench(opts, lo, hi, step);
  } catch (const CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
