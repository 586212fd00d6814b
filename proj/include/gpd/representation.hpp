#ifndef GPD_REPRESENTATION_HPP_
#define GPD_REPRESENTATION_HPP_

#include <string>
#include <vector>

#include "gpd/graph.hpp"
#include "gpd/linalg.hpp"
#include "gpd/word.hpp"

namespace gpd {

/// Validation data for a candidate operator tuple: generator norms and
/// commutator residuals on edges.
struct RepresentationReport {
  struct GeneratorNorm {
    VertexId vertex;
    double norm;
  };
  struct EdgeResidual {
    VertexId a;
    VertexId b;
    double residual;  // ||T_a T_b - T_b T_a||
  };
  std::vector<GeneratorNorm> norms;
  std::vector<EdgeResidual> commutators;
  double max_norm = 0.0;
  double max_commutator = 0.0;
  bool contractive = false;
  bool commuting_on_edges = false;

  bool ok() const { return contractive && commuting_on_edges; }
};

/// Tuple of operators on a common finite-dimensional complex space, one per
/// graph vertex. Adjacent vertices are expected to carry commuting
/// operators and every operator is expected to be a contraction; use
/// `validated` to enforce this, or the plain constructor to study tuples
/// that break the constraints.
class Representation {
 public:
  Representation(SimpleGraph graph, std::vector<Matrix> generators);

  /// Throws std::invalid_argument when a generator norm exceeds 1 or an
  /// edge commutator exceeds the tolerance; both thresholds scale as
  /// tol * dim * max(1, largest generator norm).
  static Representation validated(SimpleGraph graph,
                                  std::vector<Matrix> generators,
                                  double tol = 1e-9);

  RepresentationReport validate(double tol = 1e-9) const;

  const SimpleGraph& graph() const { return graph_; }
  int dim() const { return dim_; }
  const Matrix& generator(VertexId v) const { return generators_.at(v); }
  const std::vector<Matrix>& generators() const { return generators_; }

  /// Image of a word: the ordered product of generator powers. The word
  /// must be well defined over this graph.
  Matrix evaluate(const Word& w) const;

  /// Product of the generators over a vertex set (the set must be a clique
  /// so the product is order-independent; vertex order is used).
  Matrix clique_product(const VertexSet& clique) const;

  /// Tuple of adjoints over the same graph.
  Representation adjoint() const;

 private:
  SimpleGraph graph_;
  int dim_;
  std::vector<Matrix> generators_;
};

}  // namespace gpd

#endif  // GPD_REPRESENTATION_HPP_
