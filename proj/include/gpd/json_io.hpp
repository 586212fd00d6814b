#ifndef GPD_JSON_IO_HPP_
#define GPD_JSON_IO_HPP_

#include <string>
#include <string_view>

#include "gpd/graph.hpp"
#include "gpd/linalg.hpp"
#include "gpd/representation.hpp"

#include <json.hpp>

namespace gpd {

using Json = nlohmann::ordered_json;

/// Parses {"vertices": ["1", ...], "edges": [["1","2"], ...]}.
/// Throws std::invalid_argument on malformed documents (duplicate vertices,
/// self-loops, unknown endpoints, wrong shapes), with a description of the
/// offending element.
SimpleGraph load_graph(std::string_view text,
                       int max_vertices = SimpleGraph::kDefaultMaxVertices);

/// Parses {"dim": d, "generators": {"label": [[entry, ...], ...], ...}}
/// where an entry is either [re, im] or a plain number (promoted to a real
/// entry). Every vertex of `g` needs a generator of shape d x d. The tuple
/// is returned unvalidated; callers decide whether to enforce contraction
/// and commutation constraints.
Representation load_representation(std::string_view text, const SimpleGraph& g);

SimpleGraph load_graph_file(const std::string& path,
                            int max_vertices = SimpleGraph::kDefaultMaxVertices);
Representation load_representation_file(const std::string& path,
                                        const SimpleGraph& g);

Json graph_to_json(const SimpleGraph& g);
Json representation_to_json(const Representation& rep);
Json matrix_to_json(const Matrix& m);

}  // namespace gpd

#endif  // GPD_JSON_IO_HPP_
