#include "logitlab/game_json.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace logitlab {

namespace {

using nlohmann::json;

json parse_document(const std::string& text) {
  json doc = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) throw InputError("input is not valid JSON");
  if (!doc.is_object()) throw InputError("top-level JSON value must be an object");
  return doc;
}

std::vector<int> read_sizes(const json& doc) {
  if (!doc.contains("strategy_sizes") || !doc["strategy_sizes"].is_array()) {
    throw InputError("missing strategy_sizes array");
  }
  std::vector<int> sizes;
  for (const auto& v : doc["strategy_sizes"]) {
    if (!v.is_number_integer() || v.get<long long>() < 1) {
      throw InputError("strategy_sizes entries must be positive integers");
    }
    sizes.push_back(v.get<int>());
  }
  return sizes;
}

Matrix read_payoff(const json& m, std::size_t rows, std::size_t cols, const char* name) {
  if (!m.is_array() || m.size() != rows) {
    throw InputError(std::string(name) + " must be a " + std::to_string(rows) + "-row matrix");
  }
  Matrix out(rows, cols, 0.0);
  for (std::size_t r = 0; r < rows; ++r) {
    const auto& row = m[r];
    if (!row.is_array() || row.size() != cols) {
      throw InputError(std::string(name) + " rows must have " + std::to_string(cols) +
                       " entries");
    }
    for (std::size_t c = 0; c < cols; ++c) {
      if (!row[c].is_number()) {
        throw InputError(std::string(name) + " entries must be numbers");
      }
      out(r, c) = row[c].get<double>();
    }
  }
  return out;
}

}  // namespace

std::unique_ptr<LocalInteractionGame> game_from_spec_json(const std::string& text) {
  json doc = parse_document(text);
  if (!doc.contains("players") || !doc["players"].is_number_integer()) {
    throw InputError("missing integer players field");
  }
  const int players = doc["players"].get<int>();
  std::vector<int> sizes = read_sizes(doc);
  if (int(sizes.size()) != players) {
    throw InputError("strategy_sizes length must equal players");
  }
  ProfileSpace space(sizes);

  std::vector<EdgeGame> edges;
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) throw InputError("edges must be an array");
    for (const auto& e : doc["edges"]) {
      if (!e.is_object() || !e.contains("u") || !e.contains("v") ||
          !e["u"].is_number_integer() || !e["v"].is_number_integer()) {
        throw InputError("each edge needs integer endpoints u and v");
      }
      const int u = e["u"].get<int>();
      const int v = e["v"].get<int>();
      if (u < 0 || u >= players || v < 0 || v >= players) {
        throw InputError("edge endpoint out of range");
      }
      if (!e.contains("payoff_u") || !e.contains("payoff_v")) {
        throw InputError("each edge needs payoff_u and payoff_v matrices");
      }
      const std::size_t rows = std::size_t(sizes[std::size_t(u)]);
      const std::size_t cols = std::size_t(sizes[std::size_t(v)]);
      edges.push_back(make_edge_game(u, v, read_payoff(e["payoff_u"], rows, cols, "payoff_u"),
                                     read_payoff(e["payoff_v"], rows, cols, "payoff_v")));
    }
  }
  return std::make_unique<LocalInteractionGame>(std::move(space), std::move(edges));
}

std::unique_ptr<TableGame> game_from_potential_json(const std::string& text) {
  json doc = parse_document(text);
  std::vector<int> sizes = read_sizes(doc);
  ProfileSpace space(sizes);
  if (!doc.contains("potential") || !doc["potential"].is_array()) {
    throw InputError("missing potential array");
  }
  std::vector<double> phi;
  phi.reserve(doc["potential"].size());
  for (const auto& v : doc["potential"]) {
    if (!v.is_number()) throw InputError("potential entries must be numbers");
    phi.push_back(v.get<double>());
  }
  if (phi.size() != space.count()) {
    throw InputError("potential length must equal the profile count (" +
                     std::to_string(space.count()) + ")");
  }
  return std::make_unique<TableGame>(
      TableGame::from_potential(std::move(space), std::move(phi)));
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace logitlab
