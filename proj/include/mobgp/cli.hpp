#pragma once

#include "mobgp/graph.hpp"
#include "mobgp/mobility.hpp"
#include "mobgp/position.hpp"

#include <chrono>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace mobgp {

enum class OutputFormat { text, json, csv };

// Throws Error(invalid_argument) for anything but text, json or csv.
OutputFormat parse_output_format(const std::string &name);

// One expected-vs-computed line of a regression table.
struct TableRow {
  std::string table;
  std::string quantity;    // mob, gp, gpo, gp-structure
  std::string expression;  // graph expression
  std::string expected;
  std::string computed;
  bool match = false;
  bool stretch = false;  // informative only; never affects the exit code
  double elapsed_ms = 0;
};

struct TableOptions {
  bool include_stretch = false;
  // Budget for each stretch row.
  std::optional<std::chrono::duration<double>> stretch_time_limit;
};

// hamming, grids, prisms, cylinders, corona, joins, basics, all.
const std::vector<std::string> &table_names();

// Throws Error(invalid_argument) on an unknown name.
std::vector<TableRow> run_table(const std::string &name, const TableOptions &opts = {});

std::string emit_report(const Graph &g, const std::string &quantity, const PositionReport &r, double elapsed_ms,
                        OutputFormat format);
std::string emit_report(const Graph &g, const MobReport &r, OutputFormat format);
std::string emit_report(const Graph &g, const TraversalReport &r, const Schedule &s, OutputFormat format);
// With timing off, elapsed_ms is left out so the output is reproducible.
std::string emit_table(const std::vector<TableRow> &rows, OutputFormat format, bool timing = true);

// Command-line entry point; argv[0] is the program name. Returns the exit
// code: 0 success, 1 internal error or table mismatch, 2 incomplete
// coverage, 3 illegal move, 4 malformed input.
int run_command(const std::vector<std::string> &argv, std::ostream &out, std::ostream &err);

}  // namespace mobgp
