#ifndef GPD_DILATION_HPP_
#define GPD_DILATION_HPP_

#include <vector>

#include "gpd/graph.hpp"
#include "gpd/kernel.hpp"
#include "gpd/linalg.hpp"
#include "gpd/representation.hpp"
#include "gpd/word.hpp"

namespace gpd {

/// All words of degree <= depth, ordered by (degree, normal form).
std::vector<Word> enumerate_ball(const SimpleGraph& g, int depth);

/// Finite-rank model of the minimal isometric dilation, truncated to the
/// degree ball: the kernel Gram matrix over ball(depth) is factored through
/// its spectral decomposition, rows with eigenvalue <= tol * ||gram|| are
/// cut, and each generator acts by the left shift transported to the
/// quotient coordinates (least-squares on the sub-ball, minimal norm off
/// it).
struct TruncatedDilation {
  int depth = 0;
  double tol = 0.0;

  std::vector<Word> ball;      // degree <= depth
  int subball_size = 0;        // prefix of `ball` with degree <= depth - 1
  int subball2_size = 0;       // prefix with degree <= depth - 2 (0 if depth < 2)

  OperatorMatrix gram;         // [K(p_i, p_j)] over the ball
  double gram_min_eigenvalue = 0.0;
  double gram_norm = 0.0;

  int rank = 0;                // dimension of the quotient space
  Matrix coords;               // rank x (ball * dim): orthonormal coordinates
  Matrix embed;                /// rank x dim isometry carrying the original
                               /// space onto the coordinates of the identity
                               /// word's slot
  std::vector<Matrix> shift;   // rank x rank operator per vertex

  /// Coordinates of the basis vector of word `ball[i]` with hilbert-space
  /// component h = unit j: column i * dim + j of `coords`.
  Vector word_vector(int ball_index, int component) const;
};

/// Builds the truncated dilation. Throws std::domain_error when the Gram
/// matrix is not positive semidefinite at the tolerance (the tuple is not
/// regular), reporting the offending eigenvalue.
TruncatedDilation build_truncated_dilation(const Representation& rep,
                                           int depth, double tol = 1e-10);

struct DilationReport {
  /// max over words p of degree <= depth of
  /// || embed* V(p) embed - T(p) ||.
  double compression_residual = 0.0;
  /// max over p, q with deg p + deg q <= depth of
  /// || embed* V(p)* V(q) embed - K(p, q) ||.
  double kernel_residual = 0.0;
  /// max over vertices of || P* (V_i* V_i - I) P || with P the orthonormal
  /// basis of the span of ball(depth-1) coordinates (isometry below the
  /// truncation edge).
  double isometry_residual = 0.0;
};

DilationReport verify_dilation(const TruncatedDilation& dil,
                               const Representation& rep);

struct NicaReport {
  /// Non-adjacent pairs i, j: || P* V_i* V_j P || over the span of
  /// ball(depth-1) coordinates (range orthogonality). 0 when no such pair.
  double orthogonality_residual = 0.0;
  int orthogonality_pairs = 0;
  /// Adjacent pairs: || (V_i V_j - V_j V_i) P2 || over the span of
  /// ball(depth-2) coordinates. 0 when no such pair.
  double commutation_residual = 0.0;
  int commutation_pairs = 0;
  /// Kernel shift law: max over vertices lam, words q in ball(depth-1) with
  /// lam not initial in q, p in ball(depth) of
  /// || K(q, lam p) - D K(q, p) || where D = T_lam when the generator of
  /// lam commutes with q and D = 0 otherwise.
  double kernel_shift_residual = 0.0;
  int kernel_shift_cases = 0;
};

NicaReport verify_nica(const TruncatedDilation& dil,
                       const Representation& rep);

}  // namespace gpd

#endif  // GPD_DILATION_HPP_
