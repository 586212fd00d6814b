#include "gpd/property_p.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace gpd {

Matrix f_poly(const Representation& rep, double r) {
  return f_poly_restricted(rep, rep.graph().all_vertices(), r);
}

Matrix f_poly_restricted(const Representation& rep, const VertexSet& w,
                         double r) {
  Matrix acc = Matrix::Zero(rep.dim(), rep.dim());
  for (const VertexSet& u : rep.graph().cliques()) {
    if (!is_subset(u, w)) continue;
    const Matrix t = rep.clique_product(u);
    acc += std::pow(-r, static_cast<double>(u.size())) * (t * t.adjoint());
  }
  return acc;
}

namespace {

std::vector<double> even_grid(int grid_points) {
  if (grid_points < 2) {
    throw std::invalid_argument("grid must have at least two points");
  }
  std::vector<double> out(grid_points);
  for (int i = 0; i < grid_points; ++i) {
    out[i] = static_cast<double>(i) / (grid_points - 1);
  }
  return out;
}

}  // namespace

PropertyPReport check_property_p(const Representation& rep, int grid_points,
                                 double tol) {
  PropertyPReport report;
  report.tol = tol;
  report.holds_on_grid = true;
  for (double r : even_grid(grid_points)) {
    const PsdVerdict v = psd_check(f_poly(rep, r), tol);
    report.points.push_back({r, v.min_eigenvalue, v.positive});
    if (!v.positive) report.holds_on_grid = false;
  }
  for (auto it = report.points.rbegin(); it != report.points.rend(); ++it) {
    if (!it->positive) break;
    report.empirical_threshold = it->r;
  }
  return report;
}

ProjectionFamily::ProjectionFamily(SimpleGraph graph,
                                   std::vector<std::vector<bool>> supports)
    : graph_(std::move(graph)), supports_(std::move(supports)) {
  if (static_cast<int>(supports_.size()) != graph_.vertex_count()) {
    throw std::invalid_argument("expected one support per vertex");
  }
  if (supports_.empty() || supports_.front().empty()) {
    throw std::invalid_argument("projection family needs dimension >= 1");
  }
  dim_ = static_cast<int>(supports_.front().size());
  for (const auto& s : supports_) {
    if (static_cast<int>(s.size()) != dim_) {
      throw std::invalid_argument("all supports must share one dimension");
    }
  }
  for (VertexId a = 0; a < graph_.vertex_count(); ++a) {
    for (VertexId b = a + 1; b < graph_.vertex_count(); ++b) {
      if (graph_.adjacent(a, b)) continue;
      for (int k = 0; k < dim_; ++k) {
        if (supports_[a][k] && supports_[b][k]) {
          throw std::invalid_argument(
              "projections on non-adjacent vertices \"" + graph_.label(a) +
              "\" and \"" + graph_.label(b) + "\" overlap at coordinate " +
              std::to_string(k));
        }
      }
    }
  }
}

Matrix ProjectionFamily::projection(VertexId v) const {
  Matrix p = Matrix::Zero(dim_, dim_);
  for (int k = 0; k < dim_; ++k) {
    if (supports_.at(v)[k]) p(k, k) = Complex(1.0, 0.0);
  }
  return p;
}

Representation ProjectionFamily::as_representation() const {
  std::vector<Matrix> gens;
  gens.reserve(supports_.size());
  for (VertexId v = 0; v < graph_.vertex_count(); ++v) {
    gens.push_back(projection(v));
  }
  return Representation(graph_, std::move(gens));
}

ProjectionFamily synth_projection_family(const SimpleGraph& g, int dim,
                                         std::uint64_t seed,
                                         bool ensure_support) {
  if (dim < 1) {
    throw std::invalid_argument("synth_projection_family: dim must be >= 1");
  }
  const std::vector<VertexSet> cliques = g.cliques();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<size_t> pick(0, cliques.size() - 1);

  std::vector<std::vector<bool>> supports(
      g.vertex_count(), std::vector<bool>(dim, false));
  std::vector<VertexSet> choice(dim);
  for (int k = 0; k < dim; ++k) choice[k] = cliques[pick(rng)];

  if (ensure_support && dim >= g.vertex_count()) {
    // Re-draw until every vertex appears in some coordinate's clique; give
    // up after a bounded number of rounds and patch deterministically.
    for (int round = 0; round < 256; ++round) {
      std::vector<bool> covered(g.vertex_count(), false);
      for (const VertexSet& c : choice) {
        for (VertexId v : c) covered[v] = true;
      }
      VertexId missing = -1;
      for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (!covered[v]) {
          missing = v;
          break;
        }
      }
      if (missing < 0) break;
      choice[static_cast<size_t>(rng() % dim)] = VertexSet{missing};
    }
  }
  for (int k = 0; k < dim; ++k) {
    for (VertexId v : choice[k]) supports[v][k] = true;
  }
  return ProjectionFamily(g, std::move(supports));
}

namespace {

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double out = 1.0;
  for (int i = 0; i < k; ++i) out = out * (n - i) / (i + 1);
  return out;
}

}  // namespace

QDecomposition q_decomposition(const ProjectionFamily& family) {
  const SimpleGraph& g = family.graph();
  const int n = g.vertex_count();
  const int d = family.dim();

  QDecomposition out;
  out.q.assign(n + 1, Matrix::Zero(d, d));
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    VertexSet u;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) u.push_back(i);
    }
    Matrix term = identity(d);
    for (VertexId v : u) term = term * family.projection(v);
    for (VertexId v = 0; v < n; ++v) {
      if (!contains(u, v)) {
        term = term * (identity(d) - family.projection(v));
      }
    }
    out.q[u.size()] += term;
    out.r_term.emplace(std::move(u), std::move(term));
  }

  Matrix total = Matrix::Zero(d, d);
  for (const Matrix& q : out.q) total += q;
  out.partition_residual = operator_norm(total - identity(d));

  for (int m = 0; m <= n; ++m) {
    Matrix s = Matrix::Zero(d, d);
    for (const auto& [w, unused] : out.r_term) {
      (void)unused;
      const int k = static_cast<int>(w.size());
      if (k < m) continue;
      Matrix pw = identity(d);
      for (VertexId v : w) pw = pw * family.projection(v);
      const double sign = ((k - m) % 2 == 0) ? 1.0 : -1.0;
      s += sign * binomial(k, m) * pw;
    }
    out.alternating_residual =
        std::max(out.alternating_residual, operator_norm(out.q[m] - s));
  }
  return out;
}

double taylor_identity_residual(const ProjectionFamily& family, double r) {
  const Representation rep = family.as_representation();
  const QDecomposition dec = q_decomposition(family);
  Matrix rhs = Matrix::Zero(family.dim(), family.dim());
  for (size_t m = 0; m < dec.q.size(); ++m) {
    rhs += std::pow(1.0 - r, static_cast<double>(m)) * dec.q[m];
  }
  return operator_norm(f_poly(rep, r) - rhs);
}

DeltaReport delta_propagation_check(const Representation& rep, double r,
                                    int grid_points, double tol) {
  const SimpleGraph& g = rep.graph();
  const int n = g.vertex_count();
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b) {
      if (!g.adjacent(a, b)) {
        throw std::invalid_argument(
            "delta_propagation_check requires a complete graph; vertices \"" +
            g.label(a) + "\" and \"" + g.label(b) + "\" are not adjacent");
      }
    }
  }

  DeltaReport report;
  const VertexSet all = g.all_vertices();
  const Matrix full = f_poly_restricted(rep, all, r);
  for (VertexId i = 0; i < n; ++i) {
    const VertexSet rest = set_difference(all, VertexSet{i});
    const Matrix di = f_poly_restricted(rep, rest, r);
    const Matrix recon =
        di - r * (rep.generator(i) * di * rep.generator(i).adjoint());
    report.identity_residual =
        std::max(report.identity_residual, operator_norm(full - recon));
  }

  report.top_positive_on_grid = true;
  report.all_subsets_positive_on_grid = true;
  report.worst_subset_min_eigenvalue =
      std::numeric_limits<double>::infinity();
  for (double rr : even_grid(grid_points)) {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      VertexSet w;
      for (int i = 0; i < n; ++i) {
        if (mask & (1u << i)) w.push_back(i);
      }
      const PsdVerdict v = psd_check(f_poly_restricted(rep, w, rr), tol);
      report.worst_subset_min_eigenvalue =
          std::min(report.worst_subset_min_eigenvalue, v.min_eigenvalue);
      if (!v.positive) {
        report.all_subsets_positive_on_grid = false;
        if (static_cast<int>(w.size()) == n) {
          report.top_positive_on_grid = false;
        }
      }
    }
  }
  return report;
}

}  // namespace gpd
