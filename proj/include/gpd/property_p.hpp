#ifndef GPD_PROPERTY_P_HPP_
#define GPD_PROPERTY_P_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "gpd/graph.hpp"
#include "gpd/linalg.hpp"
#include "gpd/representation.hpp"

namespace gpd {

/// Clique polynomial of the tuple at the scalar r: the sum over all cliques
/// U of (-r)^{|U|} T_U T_U*. At r = 1 this is the alternating clique sum
/// over the full vertex set; at r = 0 it is the identity.
Matrix f_poly(const Representation& rep, double r);

struct GridPoint {
  double r = 0.0;
  double min_eigenvalue = 0.0;
  bool positive = false;
};

struct PropertyPReport {
  bool holds_on_grid = false;  // positive at every grid point
  double tol = 0.0;
  std::vector<GridPoint> points;
  /// Smallest grid value r0 such that the polynomial is positive at every
  /// grid point >= r0; empty when even the last point fails.
  std::optional<double> empirical_threshold;
};

/// Samples f_poly on an evenly spaced grid over [0, 1] (grid_points values,
/// both endpoints included) and tests positivity at each point.
PropertyPReport check_property_p(const Representation& rep,
                                 int grid_points = 101, double tol = 1e-9);

/// Tuple of commuting orthogonal projections, one per vertex, with adjacent
/// AND non-adjacent structure read from the support pattern: all
/// projections are diagonal with 0/1 entries, and two projections on
/// non-adjacent vertices have disjoint supports.
class ProjectionFamily {
 public:
  ProjectionFamily(SimpleGraph graph, std::vector<std::vector<bool>> supports);

  const SimpleGraph& graph() const { return graph_; }
  int dim() const { return dim_; }
  const std::vector<bool>& support(VertexId v) const { return supports_.at(v); }
  Matrix projection(VertexId v) const;

  /// The projections as a representation (projections are contractions and
  /// diagonal matrices commute).
  Representation as_representation() const;

 private:
  SimpleGraph graph_;
  int dim_;
  std::vector<std::vector<bool>> supports_;
};

/// Draws a random family: each coordinate independently picks a clique
/// (uniformly over all cliques, seeded) and lights the projections of its
/// members there. Disjointness for non-adjacent pairs holds by
/// construction. With ensure_support set, coordinates are re-drawn so that
/// every vertex whose projection would vanish gets at least one coordinate
/// when dim >= vertex count; otherwise vanishing projections are allowed.
ProjectionFamily synth_projection_family(const SimpleGraph& g, int dim,
                                         std::uint64_t seed,
                                         bool ensure_support = true);

struct QDecomposition {
  /// r_term[U] = P_U * product over i outside U of (I - P_i), keyed by the
  /// subset U (only cliques can be nonzero for a valid family).
  std::map<VertexSet, Matrix> r_term;
  /// q[m] = sum of r_term over subsets of size m.
  std::vector<Matrix> q;
  /// || sum_m q[m] - I ||; zero in exact arithmetic.
  double partition_residual = 0.0;
  /// max over m of || q[m] - s[m] || where s[m] is the inclusion-exclusion
  /// form: sum over subsets W of size >= m of (-1)^{|W|-m} C(|W|, m) P_W.
  double alternating_residual = 0.0;
};

QDecomposition q_decomposition(const ProjectionFamily& family);

/// || f(r) - sum_m (1 - r)^m q[m] || for the family's representation; the
/// two sides agree identically for projection families.
double taylor_identity_residual(const ProjectionFamily& family, double r);

struct DeltaReport {
  /// max over vertices i of the norm of
  /// D_full(r) - (D_i(r) - r T_i D_i(r) T_i*) where D_W(r) is the clique
  /// polynomial restricted to the subset W and D_i drops vertex i.
  double identity_residual = 0.0;
  /// Whether D_full(r) is positive on the whole grid.
  bool top_positive_on_grid = false;
  /// Whether every D_W(r) is positive on the whole grid (only meaningful
  /// when top_positive_on_grid holds; on complete graphs the recursion
  /// transports positivity downward).
  bool all_subsets_positive_on_grid = false;
  double worst_subset_min_eigenvalue = 0.0;
};

/// Requires a complete graph (every pair adjacent); throws
/// std::invalid_argument otherwise. Checks the one-vertex-removal identity
/// at the given r and sweeps positivity of all restricted polynomials over
/// the grid.
DeltaReport delta_propagation_check(const Representation& rep, double r,
                                    int grid_points = 101, double tol = 1e-9);

/// Clique polynomial restricted to a vertex subset: sum over cliques U
/// contained in W of (-r)^{|U|} T_U T_U*.
Matrix f_poly_restricted(const Representation& rep, const VertexSet& w,
                         double r);

}  // namespace gpd

#endif  // GPD_PROPERTY_P_HPP_
