#include "gpd/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unsupported/Eigen/KroneckerProduct>

#include "gpd/kernel.hpp"

namespace gpd {

Matrix random_gaussian(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix m(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      m(i, j) = Complex(normal(rng), normal(rng));
    }
  }
  return m;
}

Matrix random_with_norm(int dim, double norm, std::mt19937_64& rng) {
  Matrix m = random_gaussian(dim, rng);
  const double current = operator_norm(m);
  if (current < 1e-12) return Matrix::Zero(dim, dim);
  return (norm / current) * m;
}

Representation random_joint_diagonal(const SimpleGraph& g, int dim,
                                     double min_modulus, double max_modulus,
                                     std::mt19937_64& rng) {
  std::uniform_real_distribution<double> mod(min_modulus, max_modulus);
  std::uniform_real_distribution<double> arg(0.0, 2.0 * M_PI);
  std::vector<Matrix> gens;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    Matrix m = Matrix::Zero(dim, dim);
    for (int k = 0; k < dim; ++k) {
      m(k, k) = std::polar(mod(rng), arg(rng));
    }
    gens.push_back(std::move(m));
  }
  return Representation(g, std::move(gens));
}

Representation random_dense_tuple(const SimpleGraph& g, int dim,
                                  double min_norm, double max_norm,
                                  std::mt19937_64& rng) {
  std::uniform_real_distribution<double> norm(min_norm, max_norm);
  std::vector<Matrix> gens;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    gens.push_back(random_with_norm(dim, norm(rng), rng));
  }
  return Representation(g, std::move(gens));
}

namespace {

std::vector<int> complement_components(const SimpleGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (!g.adjacent(a, b)) parent[find(a)] = find(b);
    }
  }
  // Relabel components 0.. in order of first appearance.
  std::vector<int> label(n, -1);
  std::vector<int> out(n);
  int next = 0;
  for (int v = 0; v < n; ++v) {
    const int root = find(v);
    if (label[root] < 0) label[root] = next++;
    out[v] = label[root];
  }
  return out;
}

}  // namespace

Representation random_tensor_tuple(const SimpleGraph& g, int component_dim,
                                   double scale, std::mt19937_64& rng) {
  if (component_dim < 1) {
    throw std::invalid_argument("random_tensor_tuple: component_dim >= 1");
  }
  const int n = g.vertex_count();
  const std::vector<int> comp = complement_components(g);
  const int comp_count = 1 + *std::max_element(comp.begin(), comp.end());

  // A vertex is "dense" when it has no edge inside its component: it then
  // carries no commutation constraint against anything on its factor.
  std::vector<bool> dense(n, true);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a != b && comp[a] == comp[b] && g.adjacent(a, b)) dense[a] = false;
    }
  }

  std::int64_t total = 1;
  for (int c = 0; c < comp_count; ++c) total *= component_dim;
  if (total > 256) {
    throw std::invalid_argument(
        "random_tensor_tuple: tensor dimension " + std::to_string(total) +
        " too large; shrink the graph or component_dim");
  }

  // Per-vertex factor on its own component slot.
  std::uniform_real_distribution<double> unit(0.4, 1.0);
  std::uniform_real_distribution<double> arg(0.0, 2.0 * M_PI);
  std::vector<Matrix> factor(n);
  for (int v = 0; v < n; ++v) {
    if (dense[v]) {
      factor[v] = random_with_norm(component_dim, unit(rng), rng);
    } else {
      Matrix m = Matrix::Zero(component_dim, component_dim);
      for (int k = 0; k < component_dim; ++k) {
        m(k, k) = std::polar(unit(rng), arg(rng));
      }
      factor[v] = std::move(m);
    }
  }

  std::vector<Matrix> gens;
  gens.reserve(n);
  for (int v = 0; v < n; ++v) {
    Matrix acc = Matrix::Identity(1, 1);
    for (int c = 0; c < comp_count; ++c) {
      const Matrix slot = (comp[v] == c)
                              ? factor[v]
                              : Matrix::Identity(component_dim, component_dim);
      acc = Eigen::kroneckerProduct(acc, slot).eval();
    }
    gens.push_back(scale * acc);
  }
  return Representation(g, std::move(gens));
}

Representation random_regular_tuple(const SimpleGraph& g, int component_dim,
                                    std::mt19937_64& rng, double margin,
                                    int attempts) {
  const double base = 0.8 / std::sqrt(static_cast<double>(g.vertex_count()));
  std::uniform_real_distribution<double> jitter(0.8, 1.0);
  double scale = base;
  for (int k = 0; k < attempts; ++k) {
    Representation rep =
        random_tensor_tuple(g, component_dim, scale * jitter(rng), rng);
    const RegularityVerdict verdict = check_regular(rep);
    bool solid = verdict.regular;
    for (const SubsetRecord& r : verdict.records) {
      if (r.min_eigenvalue < margin) solid = false;
    }
    if (solid) return rep;
    scale *= 0.7;
  }
  throw std::runtime_error(
      "random_regular_tuple: no tuple passed the margin after the allotted "
      "attempts");
}

}  // namespace gpd
