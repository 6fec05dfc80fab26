#include "mobgp/certificate.hpp"

#include "mobgp/error.hpp"

#include "json.hpp"

#include <limits>
#include <sstream>

namespace mobgp {

namespace {

using nlohmann::json;

std::string quoted(const std::string &s) { return json(s).dump(); }

Vertex vertex_from(const json &value, const char *field) {
  if (!value.is_number_integer()) throw Error(ErrorCode::malformed_input, std::string(field) + ": expected an integer id");
  const auto id = value.get<long long>();
  if (id < 0 || id > std::numeric_limits<Vertex>::max()) {
    throw Error(ErrorCode::malformed_input, std::string(field) + ": vertex id " + std::to_string(id) + " out of range");
  }
  return static_cast<Vertex>(id);
}

}  // namespace

std::string write_certificate(const Schedule &s) {
  std::ostringstream os;
  os << "{\n  \"graph\": " << quoted(s.graph_expr) << ",\n  \"initial\": [";
  for (std::size_t i = 0; i < s.initial.size(); ++i) os << (i ? ", " : "") << s.initial.vertices()[i];
  os << "],\n  \"moves\": [";
  for (std::size_t i = 0; i < s.moves.size(); ++i) {
    os << (i ? ",\n    " : "\n    ") << '[' << s.moves[i].from << ", " << s.moves[i].to << ']';
  }
  os << (s.moves.empty() ? "]" : "\n  ]");
  if (!s.labels.empty()) {
    os << ",\n  \"labels\": [";
    for (std::size_t i = 0; i < s.labels.size(); ++i) os << (i ? ", " : "") << quoted(s.labels[i]);
    os << ']';
  }
  os << "\n}\n";
  return os.str();
}

Schedule read_certificate(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error &e) {
    throw Error(ErrorCode::malformed_input, std::string("certificate is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorCode::malformed_input, "certificate must be a JSON object");
  for (const char *field : {"graph", "initial", "moves"}) {
    if (!doc.contains(field)) throw Error(ErrorCode::malformed_input, std::string("certificate: missing \"") + field + "\"");
  }
  Schedule s;
  if (!doc["graph"].is_string()) throw Error(ErrorCode::malformed_input, "graph: expected a string");
  s.graph_expr = doc["graph"].get<std::string>();

  if (!doc["initial"].is_array()) throw Error(ErrorCode::malformed_input, "initial: expected an array");
  std::vector<Vertex> initial;
  for (const auto &v : doc["initial"]) initial.push_back(vertex_from(v, "initial"));
  s.initial = Configuration(std::move(initial));

  if (!doc["moves"].is_array()) throw Error(ErrorCode::malformed_input, "moves: expected an array");
  for (const auto &m : doc["moves"]) {
    if (!m.is_array() || m.size() != 2) throw Error(ErrorCode::malformed_input, "moves: each move is [from, to]");
    s.moves.push_back(Move{vertex_from(m[0], "moves"), vertex_from(m[1], "moves")});
  }

  if (doc.contains("labels")) {
    if (!doc["labels"].is_array()) throw Error(ErrorCode::malformed_input, "labels: expected an array");
    for (const auto &l : doc["labels"]) {
      if (!l.is_string()) throw Error(ErrorCode::malformed_input, "labels: expected strings");
      s.labels.push_back(l.get<std::string>());
    }
  }
  return s;
}

}  // namespace mobgp
