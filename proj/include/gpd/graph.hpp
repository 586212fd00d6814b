#ifndef GPD_GRAPH_HPP_
#define GPD_GRAPH_HPP_

#include <string>
#include <utility>
#include <vector>

namespace gpd {

using VertexId = int;

// Sorted set of vertex indices (ascending graph order).
using VertexSet = std::vector<VertexId>;

bool contains(const VertexSet& s, VertexId v);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
bool is_subset(const VertexSet& a, const VertexSet& b);

/// Finite undirected simple graph over named vertices. Vertex order is the
/// declaration order and fixes every deterministic ordering downstream.
/// Immutable after construction.
class SimpleGraph {
 public:
  static constexpr int kDefaultMaxVertices = 16;

  SimpleGraph(std::vector<std::string> vertex_labels,
              const std::vector<std::pair<std::string, std::string>>& edges,
              int max_vertices = kDefaultMaxVertices);

  int vertex_count() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& vertex_labels() const { return labels_; }
  const std::string& label(VertexId v) const { return labels_.at(v); }

  // Throws std::invalid_argument for unknown labels.
  VertexId index_of(const std::string& label) const;
  bool has_label(const std::string& label) const;

  bool adjacent(VertexId a, VertexId b) const;
  int edge_count() const { return edge_count_; }

  VertexSet all_vertices() const;
  bool is_clique(const VertexSet& vs) const;

  /// All cliques of the graph, including the empty set and all singletons,
  /// ordered by descending size, then lexicographically by vertex order.
  std::vector<VertexSet> cliques() const;

  /// Vertices outside `clique` adjacent to every member of it.
  /// The neighborhood of the empty clique is the whole vertex set.
  /// Throws std::invalid_argument if `clique` is not a clique.
  VertexSet neighborhood(const VertexSet& clique) const;

  std::string format_vertex_set(const VertexSet& vs) const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<char>> adj_;
  int edge_count_ = 0;
};

}  // namespace gpd

#endif  // GPD_GRAPH_HPP_
