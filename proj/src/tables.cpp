#include "mobgp/cli.hpp"
#include "mobgp/error.hpp"
#include "mobgp/expr.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

namespace mobgp {

namespace {

using Clock = std::chrono::steady_clock;

struct RowSpec {
  std::string quantity;
  std::string expression;
  std::string expected;
  bool stretch = false;
  // Computes the "computed" column; empty means use the default for quantity.
  std::function<std::string(const Graph &)> compute;
};

std::string mob_text(const MobReport &r) {
  if (r.decided) return std::to_string(r.value);
  if (r.upper) return "[" + std::to_string(r.lower) + "," + std::to_string(*r.upper) + "]";
  return ">=" + std::to_string(r.lower);
}

std::string compute_default(const std::string &quantity, const Graph &g) {
  if (quantity == "mob") return mob_text(mob_number(g));
  if (quantity == "gp") return std::to_string(gp_number(g).value);
  if (quantity == "gpo") return std::to_string(gpo_number(g).value);
  throw Error(ErrorCode::internal, "table: no default computation for " + quantity);
}

RowSpec mob_row(std::string expr, std::size_t expected) { return {"mob", std::move(expr), std::to_string(expected), false, {}}; }
RowSpec gp_row(std::string expr, std::size_t expected) { return {"gp", std::move(expr), std::to_string(expected), false, {}}; }
RowSpec gpo_row(std::string expr, std::size_t expected) { return {"gpo", std::move(expr), std::to_string(expected), false, {}}; }

std::string hamming(long long n, long long m) {
  return "cartesian(complete(" + std::to_string(n) + "),complete(" + std::to_string(m) + "))";
}

// Counts maximum gp sets of K_n□K_m of the form (row j ∪ column i) minus (i,j).
RowSpec hamming_structure_row(long long n, long long m) {
  RowSpec row{"gp-structure", hamming(n, m), std::to_string(n * m) + "/" + std::to_string(n * m), false, {}};
  row.compute = [n, m](const Graph &g) {
    const auto d = all_pairs_distances(g);
    auto stream = enumerate_gp_sets(d, static_cast<std::size_t>(n + m - 2));
    std::size_t total = 0;
    std::size_t canonical = 0;
    VertexSet s;
    while (stream.next(s)) {
      ++total;
      for (long long i = 0; i < n; ++i) {
        bool hit = false;
        for (long long j = 0; j < m && !hit; ++j) {
          VertexSet expected;
          for (long long a = 0; a < n; ++a)
            for (long long b = 0; b < m; ++b)
              if ((a == i) != (b == j)) expected.push_back(static_cast<Vertex>(a * m + b));
          hit = expected == s;
        }
        if (hit) {
          ++canonical;
          break;
        }
      }
    }
    return std::to_string(canonical) + "/" + std::to_string(total);
  };
  return row;
}

std::vector<RowSpec> hamming_rows() {
  std::vector<RowSpec> rows;
  for (auto [r, s] : {std::pair{2, 3}, {3, 3}, {3, 4}, {4, 3}}) {
    rows.push_back(mob_row("cartesian(complete(" + std::to_string(r) + "),path(" + std::to_string(s) + "))", r));
  }
  for (auto [n, m] : {std::pair{3, 3}, {4, 3}, {4, 4}}) rows.push_back(mob_row(hamming(n, m), n + m - 3));
  for (int n : {3, 4, 5}) rows.push_back(mob_row(hamming(n, 2), n));
  for (long long n = 3; n <= 5; ++n) {
    for (long long m = 3; m <= n; ++m) {
      rows.push_back(gp_row(hamming(n, m), static_cast<std::size_t>(n + m - 2)));
      rows.push_back(hamming_structure_row(n, m));
    }
  }
  rows.push_back(mob_row("cartesian(star(3),star(3))", 4));
  rows.push_back(gp_row("cartesian(star(3),star(3))", 6));
  return rows;
}

std::vector<RowSpec> grid_rows() {
  std::vector<RowSpec> rows;
  for (auto [n, m] : {std::pair{3, 3}, {3, 4}, {4, 4}, {4, 5}}) {
    rows.push_back(mob_row("cartesian(path(" + std::to_string(n) + "),path(" + std::to_string(m) + "))", 3));
  }
  return rows;
}

std::vector<RowSpec> prism_rows() {
  std::vector<RowSpec> rows;
  const std::pair<const char *, std::size_t> trees[] = {
      {"tree(\"4;0 1;0 2;0 3\")", 3},
      {"tree(\"7;0 1;1 2;0 3;3 4;0 5;5 6\")", 3},
      {"tree(\"6;0 1;1 2;2 3;1 4;2 5\")", 4},
      {"tree(\"9;0 1;1 2;2 3;3 4;4 5;5 6;2 7;4 8\")", 4},
      {"tree(\"9;0 1;0 2;0 3;1 4;2 5;3 6;0 7;0 8\")", 5},
  };
  for (const auto &[tree, leaves] : trees) {
    rows.push_back(mob_row("cartesian(" + std::string(tree) + ",complete(2))", leaves));
  }
  const std::size_t expected[] = {3, 2, 4, 4, 4, 4};
  for (int n = 3; n <= 8; ++n) {
    rows.push_back(mob_row("cartesian(cycle(" + std::to_string(n) + "),complete(2))", expected[n - 3]));
  }
  return rows;
}

std::vector<RowSpec> cylinder_rows(const TableOptions &opts) {
  std::vector<RowSpec> rows{mob_row("cartesian(cycle(4),path(3))", 3), mob_row("cartesian(cycle(4),path(4))", 3)};
  if (!opts.include_stretch) return rows;

  const auto limit = opts.stretch_time_limit;
  auto bounded_mob = [limit](const Graph &g) {
    MobOptions mo;
    mo.time_limit = limit;
    return mob_text(mob_number(g, mo));
  };
  rows.push_back({"mob", "cartesian(cycle(9),cycle(8))", "7", true, bounded_mob});
  rows.push_back({"mob", "cartesian(cycle(11),path(5))", "5", true, bounded_mob});
  RowSpec cyl = gp_row("cartesian(cycle(11),path(5))", 5);
  cyl.stretch = true;
  rows.push_back(cyl);
  return rows;
}

std::vector<RowSpec> corona_rows() {
  std::vector<RowSpec> rows;
  for (int n = 3; n <= 7; ++n) {
    rows.push_back(mob_row("corona(cycle(" + std::to_string(n) + "),complete(1))",
                           static_cast<std::size_t>((n + 1) / 2 + 1)));
  }
  rows.push_back(mob_row("corona(complete(2),cycle(4))", 3));
  for (auto [r, s] : {std::pair{2, 2}, {3, 2}, {2, 3}}) {
    rows.push_back(mob_row("corona(complete(" + std::to_string(r) + "),complete(" + std::to_string(s) + "))",
                           static_cast<std::size_t>(std::max(r, s + 1))));
  }
  return rows;
}

std::vector<RowSpec> join_rows() {
  return {mob_row("join(cycle(4),complete(1))", 2), mob_row("join(cycle(5),complete(1))", 3),
          mob_row("join(cycle(6),complete(1))", 3)};
}

std::vector<RowSpec> basic_rows() {
  return {gp_row("petersen", 6), mob_row("petersen", 4), gpo_row("tree(\"6;0 1;0 2;2 3;2 4;0 5\")", 4),
          gpo_row("cycle(8)", 2), gpo_row("complete_bipartite(3,3)", 3)};
}

void run_rows(const std::string &table, const std::vector<RowSpec> &specs, std::vector<TableRow> &out) {
  for (const auto &spec : specs) {
    const auto started = Clock::now();
    const Graph g = graph_from_expression(spec.expression);
    TableRow row;
    row.table = table;
    row.quantity = spec.quantity;
    row.expression = spec.expression;
    row.expected = spec.expected;
    row.computed = spec.compute ? spec.compute(g) : compute_default(spec.quantity, g);
    row.match = row.computed == row.expected;
    row.stretch = spec.stretch;
    row.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - started).count();
    out.push_back(std::move(row));
  }
}

}  // namespace

const std::vector<std::string> &table_names() {
  static const std::vector<std::string> names{"hamming", "grids", "prisms", "cylinders",
                                              "corona",  "joins", "basics", "all"};
  return names;
}

std::vector<TableRow> run_table(const std::string &name, const TableOptions &opts) {
  const auto &names = table_names();
  if (std::find(names.begin(), names.end(), name) == names.end()) {
    throw Error(ErrorCode::invalid_argument, "unknown table \"" + name + "\"");
  }
  std::vector<TableRow> rows;
  auto want = [&](const char *t) { return name == "all" || name == t; };
  if (want("hamming")) run_rows("hamming", hamming_rows(), rows);
  if (want("grids")) run_rows("grids", grid_rows(), rows);
  if (want("prisms")) run_rows("prisms", prism_rows(), rows);
  if (want("cylinders")) run_rows("cylinders", cylinder_rows(opts), rows);
  if (want("corona")) run_rows("corona", corona_rows(), rows);
  if (want("joins")) run_rows("joins", join_rows(), rows);
  if (want("basics")) run_rows("basics", basic_rows(), rows);
  return rows;
}

}  // namespace mobgp
