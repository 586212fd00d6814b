#include "gpd/representation.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace gpd {

Representation::Representation(SimpleGraph graph,
                               std::vector<Matrix> generators)
    : graph_(std::move(graph)), generators_(std::move(generators)) {
  if (static_cast<int>(generators_.size()) != graph_.vertex_count()) {
    throw std::invalid_argument(
        "expected one generator per vertex, got " +
        std::to_string(generators_.size()) + " for " +
        std::to_string(graph_.vertex_count()) + " vertices");
  }
  if (generators_.empty()) {
    throw std::invalid_argument("representation needs at least one generator");
  }
  dim_ = static_cast<int>(generators_.front().rows());
  if (dim_ < 1) {
    throw std::invalid_argument("generators must have dimension >= 1");
  }
  for (const Matrix& m : generators_) {
    if (m.rows() != dim_ || m.cols() != dim_) {
      throw std::invalid_argument(
          "all generators must be square matrices of one common dimension");
    }
  }
}

Representation Representation::validated(SimpleGraph graph,
                                         std::vector<Matrix> generators,
                                         double tol) {
  Representation rep(std::move(graph), std::move(generators));
  const RepresentationReport report = rep.validate(tol);
  if (!report.contractive) {
    std::ostringstream os;
    os << "generator norm check failed: largest norm " << report.max_norm
       << " exceeds 1 beyond tolerance";
    throw std::invalid_argument(os.str());
  }
  if (!report.commuting_on_edges) {
    std::ostringstream os;
    os << "commutation check failed: largest edge commutator residual "
       << report.max_commutator << " exceeds tolerance";
    throw std::invalid_argument(os.str());
  }
  return rep;
}

RepresentationReport Representation::validate(double tol) const {
  RepresentationReport report;
  for (VertexId v = 0; v < graph_.vertex_count(); ++v) {
    const double n = operator_norm(generators_[v]);
    report.norms.push_back({v, n});
    report.max_norm = std::max(report.max_norm, n);
  }
  for (VertexId a = 0; a < graph_.vertex_count(); ++a) {
    for (VertexId b = a + 1; b < graph_.vertex_count(); ++b) {
      if (!graph_.adjacent(a, b)) continue;
      const double r = operator_norm(generators_[a] * generators_[b] -
                                     generators_[b] * generators_[a]);
      report.commutators.push_back({a, b, r});
      report.max_commutator = std::max(report.max_commutator, r);
    }
  }
  const double eff = tol * dim_ * std::max(1.0, report.max_norm);
  report.contractive = report.max_norm <= 1.0 + eff;
  report.commuting_on_edges = report.max_commutator <= eff;
  return report;
}

Matrix Representation::evaluate(const Word& w) const {
  Matrix acc = identity(dim_);
  for (const Syllable& s : w.flattened()) {
    if (s.vertex < 0 || s.vertex >= graph_.vertex_count()) {
      throw std::invalid_argument("word refers to a vertex outside the graph");
    }
    acc = acc * matrix_power(generators_[s.vertex], s.exponent);
  }
  return acc;
}

Matrix Representation::clique_product(const VertexSet& clique) const {
  if (!graph_.is_clique(clique)) {
    throw std::invalid_argument("clique_product requires a clique, got " +
                                graph_.format_vertex_set(clique));
  }
  Matrix acc = identity(dim_);
  for (VertexId v : clique) acc = acc * generators_[v];
  return acc;
}

Representation Representation::adjoint() const {
  std::vector<Matrix> adj;
  adj.reserve(generators_.size());
  for (const Matrix& m : generators_) adj.push_back(m.adjoint());
  return Representation(graph_, std::move(adj));
}

}  // namespace gpd
