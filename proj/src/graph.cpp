#include "gpd/graph.hpp"

#include <algorithm>
#include <iterator>
#include <set>
#include <sstream>
#include <stdexcept>

namespace gpd {

bool contains(const VertexSet& s, VertexId v) {
  return std::binary_search(s.begin(), s.end(), v);
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

bool is_subset(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

SimpleGraph::SimpleGraph(
    std::vector<std::string> vertex_labels,
    const std::vector<std::pair<std::string, std::string>>& edges,
    int max_vertices)
    : labels_(std::move(vertex_labels)) {
  if (labels_.empty()) {
    throw std::invalid_argument("graph must have at least one vertex");
  }
  if (static_cast<int>(labels_.size()) > max_vertices) {
    throw std::invalid_argument(
        "graph has " + std::to_string(labels_.size()) +
        " vertices, exceeding the guard of " + std::to_string(max_vertices) +
        " (raise the guard to allow larger graphs)");
  }
  std::set<std::string> seen;
  for (const auto& l : labels_) {
    if (l.empty()) {
      throw std::invalid_argument("vertex labels must be non-empty");
    }
    if (!seen.insert(l).second) {
      throw std::invalid_argument("duplicate vertex label \"" + l + "\"");
    }
  }
  const int n = vertex_count();
  adj_.assign(n, std::vector<char>(n, 0));
  for (const auto& [la, lb] : edges) {
    const VertexId a = index_of(la);
    const VertexId b = index_of(lb);
    if (a == b) {
      throw std::invalid_argument("self-loop on vertex \"" + la + "\"");
    }
    if (adj_[a][b]) {
      throw std::invalid_argument("duplicate edge (\"" + la + "\", \"" + lb +
                                  "\")");
    }
    adj_[a][b] = adj_[b][a] = 1;
    ++edge_count_;
  }
}

VertexId SimpleGraph::index_of(const std::string& label) const {
  for (int i = 0; i < vertex_count(); ++i) {
    if (labels_[i] == label) return i;
  }
  throw std::invalid_argument("unknown vertex label \"" + label + "\"");
}

bool SimpleGraph::has_label(const std::string& label) const {
  return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

bool SimpleGraph::adjacent(VertexId a, VertexId b) const {
  return adj_.at(a).at(b) != 0;
}

VertexSet SimpleGraph::all_vertices() const {
  VertexSet out(vertex_count());
  for (int i = 0; i < vertex_count(); ++i) out[i] = i;
  return out;
}

bool SimpleGraph::is_clique(const VertexSet& vs) const {
  for (size_t i = 0; i < vs.size(); ++i) {
    if (vs[i] < 0 || vs[i] >= vertex_count()) return false;
    if (i > 0 && vs[i] <= vs[i - 1]) return false;  // must be sorted, unique
  }
  for (size_t i = 0; i < vs.size(); ++i) {
    for (size_t j = i + 1; j < vs.size(); ++j) {
      if (!adjacent(vs[i], vs[j])) return false;
    }
  }
  return true;
}

namespace {

void extend_clique(const SimpleGraph& g, VertexSet& current, VertexId start,
                   std::vector<VertexSet>& out) {
  out.push_back(current);
  for (VertexId v = start; v < g.vertex_count(); ++v) {
    bool ok = true;
    for (VertexId u : current) {
      if (!g.adjacent(u, v)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    current.push_back(v);
    extend_clique(g, current, v + 1, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<VertexSet> SimpleGraph::cliques() const {
  std::vector<VertexSet> out;
  VertexSet current;
  extend_clique(*this, current, 0, out);
  // Descending size; the recursion already yields lexicographic order
  // within each size, which stable_sort preserves.
  std::stable_sort(out.begin(), out.end(),
                   [](const VertexSet& a, const VertexSet& b) {
                     return a.size() > b.size();
                   });
  return out;
}

VertexSet SimpleGraph::neighborhood(const VertexSet& clique) const {
  if (!is_clique(clique)) {
    throw std::invalid_argument("neighborhood requires a clique, got " +
                                format_vertex_set(clique));
  }
  if (clique.empty()) return all_vertices();
  VertexSet out;
  for (VertexId v = 0; v < vertex_count(); ++v) {
    if (contains(clique, v)) continue;
    bool all = true;
    for (VertexId u : clique) {
      if (!adjacent(u, v)) {
        all = false;
        break;
      }
    }
    if (all) out.push_back(v);
  }
  return out;
}

std::string SimpleGraph::format_vertex_set(const VertexSet& vs) const {
  std::ostringstream os;
  os << '{';
  for (size_t i = 0; i < vs.size(); ++i) {
    if (i > 0) os << ',';
    if (vs[i] >= 0 && vs[i] < vertex_count()) {
      os << labels_[vs[i]];
    } else {
      os << '#' << vs[i];
    }
  }
  os << '}';
  return os.str();
}

}  // namespace gpd
