#ifndef GPD_SYNTHETIC_HPP_
#define GPD_SYNTHETIC_HPP_

#include <cstdint>
#include <random>
#include <vector>

#include "gpd/graph.hpp"
#include "gpd/linalg.hpp"
#include "gpd/representation.hpp"

namespace gpd {

/// Deterministic generators for operator tuples used in stress tests. All
/// draws run off a caller-owned engine, so a fixed seed fixes the output.

/// Dense matrix with independent standard complex Gaussian entries.
Matrix random_gaussian(int dim, std::mt19937_64& rng);

/// Random matrix rescaled to the requested operator norm.
Matrix random_with_norm(int dim, double norm, std::mt19937_64& rng);

/// Tuple of diagonal matrices (they commute pairwise, so the tuple is valid
/// over any graph). Entry moduli are drawn uniformly from
/// [min_modulus, max_modulus] with uniform phases; moduli above 1 make the
/// tuple break the contraction constraint on purpose.
Representation random_joint_diagonal(const SimpleGraph& g, int dim,
                                     double min_modulus, double max_modulus,
                                     std::mt19937_64& rng);

/// Tuple of unconstrained dense matrices with operator norms drawn from
/// [min_norm, max_norm]. Only valid over edgeless graphs (no commutation is
/// arranged).
Representation random_dense_tuple(const SimpleGraph& g, int dim,
                                  double min_norm, double max_norm,
                                  std::mt19937_64& rng);

/// Tuple over an arbitrary graph with all commutation constraints satisfied
/// exactly, built on a tensor product split by the components of the
/// complement graph: a component acts on its own factor, so vertices in
/// different components commute exactly. Inside a component, vertices with
/// no in-component edges get dense factors (genuinely non-commuting with
/// each other where allowed), the rest get a common diagonal. All factors
/// are scaled by `scale`. The total dimension is the product of per-factor
/// dimensions (component_dim per dense slot, diag_dim per diagonal slot).
Representation random_tensor_tuple(const SimpleGraph& g, int component_dim,
                                   double scale, std::mt19937_64& rng);

/// Draws tensor tuples with shrinking scale until check_regular passes with
/// the given eigenvalue margin. Throws std::runtime_error after `attempts`
/// failures (does not happen for sane margins: small scales always pass).
Representation random_regular_tuple(const SimpleGraph& g, int component_dim,
                                    std::mt19937_64& rng,
                                    double margin = 1e-6, int attempts = 64);

}  // namespace gpd

#endif  // GPD_SYNTHETIC_HPP_
