#ifndef GPD_KERNEL_HPP_
#define GPD_KERNEL_HPP_

#include <string>
#include <vector>

#include "gpd/graph.hpp"
#include "gpd/linalg.hpp"
#include "gpd/representation.hpp"
#include "gpd/word.hpp"

namespace gpd {

/// Kernel value K(p, q): with (u, v) = remove_common_initial(p, q), this is
/// T(v) T(u)* when u and v commute and the zero matrix otherwise. It is
/// Hermitian-symmetric (K(p, q) = K(q, p)*) and depends only on the reduced
/// pair, so K(e, q) = T(q) and K(p, p) = I.
Matrix kernel(const Representation& rep, const Word& p, const Word& q);

/// Block matrix [K(p_i, p_j)] over the listed words (labels are the words'
/// normal forms).
OperatorMatrix gram(const Representation& rep, const std::vector<Word>& words);

/// Alternating clique sum over the subset V: the sum of
/// (-1)^{|U|} T_U T_U* across all cliques U contained in V.
Matrix z_matrix(const Representation& rep, const VertexSet& v);

struct SubsetRecord {
  VertexSet subset;
  double min_eigenvalue = 0.0;
  bool positive = false;
};

struct RegularityVerdict {
  bool regular = false;
  double tol = 0.0;
  /// One record per swept subset, ordered by (size, lexicographic).
  std::vector<SubsetRecord> records;

  const SubsetRecord* worst() const;
};

/// Sweeps vertex subsets W and tests the alternating clique sum of each for
/// positive semidefiniteness (threshold -tol * max(1, norm)). The tuple is
/// regular exactly when all subsets pass. `top_only` restricts the sweep to
/// the full vertex set, which is cheaper but certifies nothing beyond that
/// single matrix. Throws std::length_error when the vertex count exceeds
/// `guard` (raise it explicitly for larger sweeps).
RegularityVerdict check_regular(const Representation& rep, double tol = 1e-9,
                                int guard = SimpleGraph::kDefaultMaxVertices,
                                bool top_only = false);

/// Operator-norm residual of the partition identity at a clique F: the sum
/// over cliques W containing F of T_{W\F} Z_{N(W)} T_{W\F}* equals the
/// identity for every tuple (commutation on edges is all that is used).
double clique_identity_residual(const Representation& rep, const VertexSet& f);

/// Lower-triangular factor R over the cliques in canonical order (size
/// descending, then lexicographic): R[U, W] = T_{W\U} sqrt(Z_{N(W)}) for
/// U contained in W, zero otherwise. For regular tuples R R* reproduces the
/// clique matrix [K(e_U, e_V)]. Throws std::domain_error when some Z_{N(W)}
/// fails the square-root tolerance (the tuple is not regular).
OperatorMatrix cholesky_factor_cliques(const Representation& rep,
                                       double tol = 1e-9);

/// Word e_U for a clique U (the product of its generators, one each).
Word clique_word(const VertexSet& clique, const SimpleGraph& g);

}  // namespace gpd

#endif  // GPD_KERNEL_HPP_
