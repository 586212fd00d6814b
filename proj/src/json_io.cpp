#include "gpd/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gpd {

namespace {

Json parse_document(std::string_view text, const char* what) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string(what) +
                                ": JSON parse error: " + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::invalid_argument("cannot open file \"" + path + "\"");
  }
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Complex parse_entry(const Json& e, const std::string& where) {
  if (e.is_number()) return Complex(e.get<double>(), 0.0);
  if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
    return Complex(e[0].get<double>(), e[1].get<double>());
  }
  throw std::invalid_argument(where +
                              ": matrix entries must be numbers or [re, im] "
                              "pairs, got " + e.dump());
}

}  // namespace

SimpleGraph load_graph(std::string_view text, int max_vertices) {
  const Json doc = parse_document(text, "graph");
  if (!doc.is_object()) {
    throw std::invalid_argument("graph: document must be a JSON object");
  }
  if (!doc.contains("vertices") || !doc["vertices"].is_array()) {
    throw std::invalid_argument("graph: missing \"vertices\" array");
  }
  std::vector<std::string> labels;
  for (const Json& v : doc["vertices"]) {
    if (!v.is_string()) {
      throw std::invalid_argument("graph: vertex labels must be strings, got " +
                                  v.dump());
    }
    labels.push_back(v.get<std::string>());
  }
  std::vector<std::pair<std::string, std::string>> edges;
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) {
      throw std::invalid_argument("graph: \"edges\" must be an array");
    }
    for (const Json& e : doc["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_string() ||
          !e[1].is_string()) {
        throw std::invalid_argument(
            "graph: each edge must be a pair of vertex labels, got " +
            e.dump());
      }
      edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
  }
  return SimpleGraph(std::move(labels), edges, max_vertices);
}

Representation load_representation(std::string_view text,
                                   const SimpleGraph& g) {
  const Json doc = parse_document(text, "representation");
  if (!doc.is_object()) {
    throw std::invalid_argument(
        "representation: document must be a JSON object");
  }
  if (!doc.contains("dim") || !doc["dim"].is_number_integer()) {
    throw std::invalid_argument(
        "representation: missing integer field \"dim\"");
  }
  const int d = doc["dim"].get<int>();
  if (d < 1) {
    throw std::invalid_argument("representation: \"dim\" must be >= 1");
  }
  if (!doc.contains("generators") || !doc["generators"].is_object()) {
    throw std::invalid_argument(
        "representation: missing \"generators\" object");
  }
  const Json& gens = doc["generators"];
  for (const auto& [key, value] : gens.items()) {
    (void)value;
    if (!g.has_label(key)) {
      throw std::invalid_argument(
          "representation: generator for unknown vertex \"" + key + "\"");
    }
  }
  std::vector<Matrix> matrices;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const std::string& label = g.label(v);
    if (!gens.contains(label)) {
      throw std::invalid_argument(
          "representation: missing generator for vertex \"" + label + "\"");
    }
    const Json& rows = gens[label];
    const std::string where = "generator \"" + label + "\"";
    if (!rows.is_array() || static_cast<int>(rows.size()) != d) {
      throw std::invalid_argument(where + ": expected " + std::to_string(d) +
                                  " rows");
    }
    Matrix m(d, d);
    for (int i = 0; i < d; ++i) {
      const Json& row = rows[i];
      if (!row.is_array() || static_cast<int>(row.size()) != d) {
        throw std::invalid_argument(where + ": row " + std::to_string(i) +
                                    " must hold " + std::to_string(d) +
                                    " entries");
      }
      for (int j = 0; j < d; ++j) {
        m(i, j) = parse_entry(row[j], where);
      }
    }
    matrices.push_back(std::move(m));
  }
  return Representation(g, std::move(matrices));
}

SimpleGraph load_graph_file(const std::string& path, int max_vertices) {
  return load_graph(read_file(path), max_vertices);
}

Representation load_representation_file(const std::string& path,
                                        const SimpleGraph& g) {
  return load_representation(read_file(path), g);
}

Json graph_to_json(const SimpleGraph& g) {
  Json doc;
  doc["vertices"] = g.vertex_labels();
  Json edges = Json::array();
  for (VertexId a = 0; a < g.vertex_count(); ++a) {
    for (VertexId b = a + 1; b < g.vertex_count(); ++b) {
      if (g.adjacent(a, b)) {
        edges.push_back(Json::array({g.label(a), g.label(b)}));
      }
    }
  }
  doc["edges"] = std::move(edges);
  return doc;
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      row.push_back(Json::array({m(i, j).real(), m(i, j).imag()}));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Json representation_to_json(const Representation& rep) {
  Json doc;
  doc["dim"] = rep.dim();
  Json gens;
  for (VertexId v = 0; v < rep.graph().vertex_count(); ++v) {
    gens[rep.graph().label(v)] = matrix_to_json(rep.generator(v));
  }
  doc["generators"] = std::move(gens);
  return doc;
}

}  // namespace gpd
