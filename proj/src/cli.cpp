#include "mobgp/cli.hpp"

#include "mobgp/certificate.hpp"
#include "mobgp/error.hpp"
#include "mobgp/expr.hpp"
#include "mobgp/schedules.hpp"

#include "CLI11.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

namespace mobgp {

namespace {

using Clock = std::chrono::steady_clock;

constexpr int exit_ok = 0;
constexpr int exit_internal = 1;
constexpr int exit_malformed = 4;

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::malformed_input, "cannot open \"" + path + "\"");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string &path, const std::string &text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::invalid_argument, "cannot write \"" + path + "\"");
  out << text;
  if (!out) throw Error(ErrorCode::invalid_argument, "write to \"" + path + "\" failed");
}

// "@path" reads an edge-list file; anything else is a graph expression.
Graph load_graph(const std::string &arg) {
  if (!arg.empty() && arg.front() == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) throw Error(ErrorCode::malformed_input, "cannot open \"" + arg.substr(1) + "\"");
    return read_edge_list(in);
  }
  return graph_from_expression(arg);
}

void apply_threads(int threads) {
  if (threads > 0) {
    omp_set_num_threads(threads);
    return;
  }
  if (const char *env = std::getenv("MOBGP_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) omp_set_num_threads(n);
  }
}

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

}  // namespace

int run_command(const std::vector<std::string> &argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"Exact general position and mobile general position numbers of graphs", "mobgp"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format_name = "text";
  app.add_option("--format", format_name, "Output format: text, json or csv")->capture_default_str();

  std::string expr;
  auto *gp = app.add_subcommand("gp", "General position number with a witness");
  gp->add_option("expr", expr, "Graph expression, or @file for an edge list")->required();
  auto *gpo = app.add_subcommand("gpo", "Outer general position number with a witness");
  gpo->add_option("expr", expr, "Graph expression, or @file for an edge list")->required();

  auto *mob = app.add_subcommand("mob", "Mobile general position number");
  mob->add_option("expr", expr, "Graph expression, or @file for an edge list")->required();
  std::size_t max_k = 0;
  std::size_t min_k = 1;
  double time_limit = 0;
  int threads = 0;
  std::string witness_path;
  bool no_symmetry = false;
  mob->add_option("--max-k", max_k, "Start the descending search here instead of at gp")->check(CLI::PositiveNumber);
  mob->add_option("--min-k", min_k, "Stop the search below this size")->check(CLI::PositiveNumber);
  mob->add_option("--time-limit", time_limit, "Seconds before reporting bounds")->check(CLI::PositiveNumber);
  mob->add_option("--threads", threads, "OpenMP threads (default: MOBGP_THREADS)")->check(CLI::PositiveNumber);
  mob->add_option("--witness", witness_path, "Write a schedule certificate for the mobile set found");
  mob->add_flag("--no-symmetry", no_symmetry, "Do not prune seeds with symmetry hints");

  std::string certificate_path;
  auto *verify = app.add_subcommand("verify", "Replay a schedule certificate");
  verify->add_option("certificate", certificate_path, "Certificate file")->required();

  std::string family;
  std::vector<long long> params;
  std::string output_path;
  auto *schedule = app.add_subcommand("schedule", "Emit a generated schedule certificate");
  schedule->add_option("family", family, "Schedule family")->required();
  schedule->add_option("params", params, "Family parameters");
  schedule->add_option("-o,--output", output_path, "Write the certificate here instead of stdout");

  std::string table_name;
  bool no_timing = false;
  bool stretch = false;
  double stretch_limit = 0;
  auto *table = app.add_subcommand("table", "Expected-vs-computed regression rows");
  table->add_option("name", table_name, "hamming, grids, prisms, cylinders, corona, joins, basics or all")
      ->required();
  table->add_flag("--no-timing", no_timing, "Leave out elapsed times so output is reproducible");
  table->add_flag("--stretch", stretch, "Include the long-running stretch rows");
  table->add_option("--stretch-time-limit", stretch_limit, "Seconds allowed for each stretch row")
      ->check(CLI::PositiveNumber);

  std::vector<std::string> args(argv.size() > 1 ? argv.begin() + 1 : argv.end(), argv.end());
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError &e) {
    err << "mobgp: " << e.what() << '\n';
    return exit_malformed;
  }

  try {
    const OutputFormat format = parse_output_format(format_name);

    if (*gp || *gpo) {
      const Graph g = load_graph(expr);
      const auto start = Clock::now();
      const bool outer = gpo->parsed();
      const PositionReport r = outer ? gpo_number(g) : gp_number(g);
      out << emit_report(g, outer ? "gpo" : "gp", r, ms_since(start), format);
      return exit_ok;
    }

    if (*mob) {
      apply_threads(threads);
      const Graph g = load_graph(expr);
      MobOptions opts;
      if (max_k > 0) opts.max_k = max_k;
      opts.min_k = min_k;
      if (time_limit > 0) opts.time_limit = std::chrono::duration<double>(time_limit);
      opts.use_symmetry = !no_symmetry;
      const MobReport r = mob_number(g, opts);
      out << emit_report(g, r, format);
      if (!witness_path.empty()) {
        if (!r.witness) {
          err << "mobgp: no mobile set found; no certificate written\n";
        } else {
          Schedule s = *r.witness;
          if (g.has_labels()) {
            s.labels.clear();
            for (Vertex v = 0; v < g.order(); ++v) s.labels.push_back(g.label(v));
          }
          write_file(witness_path, write_certificate(s));
        }
      }
      return exit_ok;
    }

    if (*verify) {
      const Schedule s = read_certificate(read_file(certificate_path));
      const Graph g = graph_from_expression(s.graph_expr);
      const TraversalReport r = verify_schedule(g, s);
      out << emit_report(g, r, s, format);
      if (!r.valid) {
        err << "mobgp: illegal move at index " << *r.failure_index << ": " << to_string(*r.failure_reason) << '\n';
      } else if (!r.complete) {
        err << "mobgp: " << (g.order() - r.covered.size()) << " vertices never visited\n";
      }
      return r.exit_code();
    }

    if (*schedule) {
      const Schedule s = generate_schedule(FamilySpec{family, params});
      const std::string text = write_certificate(s);
      if (output_path.empty()) {
        out << text;
      } else {
        write_file(output_path, text);
      }
      return exit_ok;
    }

    if (*table) {
      TableOptions opts;
      opts.include_stretch = stretch;
      if (stretch_limit > 0) opts.stretch_time_limit = std::chrono::duration<double>(stretch_limit);
      const auto rows = run_table(table_name, opts);
      out << emit_table(rows, format, !no_timing);
      const bool mismatch = std::any_of(rows.begin(), rows.end(), [](const TableRow &r) { return !r.match && !r.stretch; });
      if (mismatch) err << "mobgp: table mismatch\n";
      return mismatch ? exit_internal : exit_ok;
    }
  } catch (const Error &e) {
    if (e.code() == ErrorCode::parse_error) {
      err << "mobgp: " << e.what() << '\n';
    } else {
      err << "mobgp: " << to_string(e.code()) << ": " << e.what() << '\n';
    }
    return e.code() == ErrorCode::internal ? exit_internal : exit_malformed;
  } catch (const std::exception &e) {
    err << "mobgp: internal error: " << e.what() << '\n';
    return exit_internal;
  }
  err << "mobgp: no command given\n";
  return exit_malformed;
}

}  // namespace mobgp
