#include "mobgp/cli.hpp"
#include "mobgp/error.hpp"

#include "json.hpp"

#include <iomanip>
#include <sstream>

namespace mobgp {

namespace {

using Json = nlohmann::ordered_json;

std::string label_list(const Graph &g, const VertexSet &s) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? ", " : "") << g.label(s[i]);
  os << '}';
  return os.str();
}

Json labels_json(const Graph &g, const VertexSet &s) {
  Json out = Json::array();
  for (Vertex v : s) out.push_back(g.label(v));
  return out;
}

std::string csv_field(const std::string &s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string fixed_ms(double ms) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(1) << ms;
  return os.str();
}

std::string bounds_text(const MobReport &r) {
  if (r.decided) return "mob = " + std::to_string(r.value);
  if (r.upper) return "mob ∈ [" + std::to_string(r.lower) + ", " + std::to_string(*r.upper) + "]";
  return "mob >= " + std::to_string(r.lower);
}

}  // namespace

OutputFormat parse_output_format(const std::string &name) {
  if (name == "text") return OutputFormat::text;
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  throw Error(ErrorCode::invalid_argument, "unknown format \"" + name + "\" (text, json, csv)");
}

std::string emit_report(const Graph &g, const std::string &quantity, const PositionReport &r, double elapsed_ms,
                        OutputFormat format) {
  std::ostringstream os;
  switch (format) {
    case OutputFormat::text:
      os << quantity << " = " << r.value << '\n' << "witness: " << label_list(g, r.witness) << '\n';
      break;
    case OutputFormat::json: {
      Json j;
      j["quantity"] = quantity;
      j["graph"] = g.expression();
      j["value"] = r.value;
      j["witness"] = r.witness;
      j["witness_labels"] = labels_json(g, r.witness);
      j["explored"] = r.explored;
      j["elapsed_ms"] = elapsed_ms;
      os << j.dump(2) << '\n';
      break;
    }
    case OutputFormat::csv:
      os << "quantity,graph,value,witness,elapsed_ms\n";
      os << quantity << ',' << csv_field(g.expression()) << ',' << r.value << ','
         << csv_field(label_list(g, r.witness)) << ',' << fixed_ms(elapsed_ms) << '\n';
      break;
  }
  return os.str();
}

std::string emit_report(const Graph &g, const MobReport &r, OutputFormat format) {
  std::ostringstream os;
  switch (format) {
    case OutputFormat::text: {
      os << bounds_text(r) << '\n';
      if (r.timed_out) os << "time limit reached; value undecided\n";
      if (r.gp) os << "gp = " << *r.gp << '\n';
      for (const auto &k : r.per_k) {
        os << "k=" << k.k << ": " << k.gp_sets << " gp sets, " << k.components << " components, "
           << (!k.decided ? "undecided" : k.mobile ? "mobile" : "none mobile") << '\n';
      }
      if (r.witness) {
        os << "witness: " << label_list(g, r.witness->initial.vertices()) << ", " << r.witness->moves.size()
           << " moves\n";
      }
      break;
    }
    case OutputFormat::json: {
      Json j;
      j["quantity"] = "mob";
      j["graph"] = g.expression();
      j["value"] = r.decided ? Json(r.value) : Json(nullptr);
      j["decided"] = r.decided;
      j["lower"] = r.lower;
      j["upper"] = r.upper ? Json(*r.upper) : Json(nullptr);
      j["gp"] = r.gp ? Json(*r.gp) : Json(nullptr);
      j["timed_out"] = r.timed_out;
      if (r.witness) {
        j["witness"] = {{"initial", r.witness->initial.vertices()},
                        {"initial_labels", labels_json(g, r.witness->initial.vertices())},
                        {"moves", r.witness->moves.size()}};
      } else {
        j["witness"] = nullptr;
      }
      Json per_k = Json::array();
      for (const auto &k : r.per_k) {
        per_k.push_back({{"k", k.k},
                         {"gp_sets", k.gp_sets},
                         {"components", k.components},
                         {"decided", k.decided},
                         {"mobile", k.mobile}});
      }
      j["per_k"] = per_k;
      j["elapsed_ms"] = r.elapsed_ms;
      os << j.dump(2) << '\n';
      break;
    }
    case OutputFormat::csv:
      os << "quantity,graph,value,lower,upper,decided,elapsed_ms\n";
      os << "mob," << csv_field(g.expression()) << ',' << (r.decided ? std::to_string(r.value) : "") << ','
         << r.lower << ',' << (r.upper ? std::to_string(*r.upper) : "") << ',' << (r.decided ? "true" : "false")
         << ',' << fixed_ms(r.elapsed_ms) << '\n';
      break;
  }
  return os.str();
}

std::string emit_report(const Graph &g, const TraversalReport &r, const Schedule &s, OutputFormat format) {
  std::ostringstream os;
  switch (format) {
    case OutputFormat::text:
      if (!r.valid) {
        const Move &m = s.moves[*r.failure_index];
        os << "illegal move " << *r.failure_index << " (" << g.label(m.from) << " -> " << g.label(m.to)
           << "): " << to_string(*r.failure_reason) << '\n';
      } else {
        os << (r.complete ? "valid, complete" : "valid, incomplete") << '\n';
      }
      os << "robots: " << s.robots() << ", moves: " << s.moves.size() << ", covered " << r.covered.size() << '/'
         << g.order() << '\n';
      break;
    case OutputFormat::json: {
      Json j;
      j["graph"] = s.graph_expr;
      j["valid"] = r.valid;
      j["complete"] = r.complete;
      j["robots"] = s.robots();
      j["moves"] = s.moves.size();
      j["covered"] = r.covered;
      j["failure_index"] = r.failure_index ? Json(*r.failure_index) : Json(nullptr);
      j["failure_reason"] = r.failure_reason ? Json(to_string(*r.failure_reason)) : Json(nullptr);
      os << j.dump(2) << '\n';
      break;
    }
    case OutputFormat::csv:
      os << "graph,valid,complete,robots,moves,covered,failure_index,failure_reason\n";
      os << csv_field(s.graph_expr) << ',' << (r.valid ? "true" : "false") << ','
         << (r.complete ? "true" : "false") << ',' << s.robots() << ',' << s.moves.size() << ','
         << r.covered.size() << ',' << (r.failure_index ? std::to_string(*r.failure_index) : "") << ','
         << (r.failure_reason ? to_string(*r.failure_reason) : "") << '\n';
      break;
  }
  return os.str();
}

std::string emit_table(const std::vector<TableRow> &rows, OutputFormat format, bool timing) {
  std::ostringstream os;
  auto expression = [](const TableRow &row) { return row.quantity + "(" + row.expression + ")"; };
  switch (format) {
    case OutputFormat::text: {
      std::size_t width = 10;
      for (const auto &row : rows) width = std::max(width, expression(row).size());
      for (const auto &row : rows) {
        os << std::left << std::setw(10) << row.table << std::setw(static_cast<int>(width) + 2) << expression(row)
           << "expected " << std::setw(8) << row.expected << "computed " << std::setw(8) << row.computed
           << (row.match ? "ok" : "MISMATCH") << (row.stretch ? " (stretch)" : "");
        if (timing) os << "  " << fixed_ms(row.elapsed_ms) << " ms";
        os << '\n';
      }
      break;
    }
    case OutputFormat::json: {
      Json out = Json::array();
      for (const auto &row : rows) {
        Json j;
        j["table"] = row.table;
        j["expression"] = expression(row);
        j["expected"] = row.expected;
        j["computed"] = row.computed;
        j["match"] = row.match;
        j["stretch"] = row.stretch;
        if (timing) j["elapsed_ms"] = row.elapsed_ms;
        out.push_back(j);
      }
      os << out.dump(2) << '\n';
      break;
    }
    case OutputFormat::csv:
      os << "expression,expected,computed,match,elapsed_ms\n";
      for (const auto &row : rows) {
        os << csv_field(expression(row)) << ',' << csv_field(row.expected) << ',' << csv_field(row.computed) << ','
           << (row.match ? "true" : "false") << ',' << (timing ? fixed_ms(row.elapsed_ms) : "") << '\n';
      }
      break;
  }
  return os.str();
}

}  // namespace mobgp
