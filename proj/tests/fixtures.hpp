#ifndef GPD_TESTS_FIXTURES_HPP_
#define GPD_TESTS_FIXTURES_HPP_

#include <string>
#include <vector>

#include "gpd/graph.hpp"
#include "gpd/linalg.hpp"
#include "gpd/representation.hpp"

namespace fixtures {

/// Three vertices, single edge (1,2): the smallest graph mixing commuting
/// and free behaviour. Its cliques are {1,2}, {1}, {2}, {3}, {}.
inline gpd::SimpleGraph pair_plus_free() {
  return gpd::SimpleGraph({"1", "2", "3"}, {{"1", "2"}});
}

/// Four vertices, every edge except (1,3).
inline gpd::SimpleGraph near_complete_4() {
  return gpd::SimpleGraph({"1", "2", "3", "4"}, {{"1", "2"},
                                                 {"1", "4"},
                                                 {"2", "3"},
                                                 {"2", "4"},
                                                 {"3", "4"}});
}

inline gpd::SimpleGraph complete(int n) {
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      edges.emplace_back(std::to_string(i), std::to_string(j));
    }
  }
  return gpd::SimpleGraph(std::move(labels), edges);
}

inline gpd::SimpleGraph edgeless(int n) {
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return gpd::SimpleGraph(std::move(labels), {});
}

inline gpd::SimpleGraph single_vertex() {
  return gpd::SimpleGraph({"1"}, {});
}

/// Scalar tuple over pair_plus_free with values (a, b, c).
inline gpd::Representation scalar_rep(double a, double b, double c) {
  using gpd::Matrix;
  Matrix ma(1, 1), mb(1, 1), mc(1, 1);
  ma(0, 0) = a;
  mb(0, 0) = b;
  mc(0, 0) = c;
  return gpd::Representation(pair_plus_free(), {ma, mb, mc});
}

/// Commuting nilpotent pair on the complete two-vertex graph: both
/// generators are the 2x2 Jordan cell, whose products vanish. The
/// alternating clique sum over {1,2} is diag(-1, 1), so the pair is a
/// contraction tuple that is not regular.
inline gpd::Representation nilpotent_pair() {
  gpd::Matrix j(2, 2);
  j.setZero();
  j(0, 1) = 1.0;
  return gpd::Representation(complete(2), {j, j});
}

}  // namespace fixtures

#endif  // GPD_TESTS_FIXTURES_HPP_
