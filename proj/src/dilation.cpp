#include "gpd/dilation.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace gpd {

std::vector<Word> enumerate_ball(const SimpleGraph& g, int depth) {
  if (depth < 0) throw std::invalid_argument("enumerate_ball: depth < 0");
  std::set<Word> all;
  std::vector<Word> level{Word::identity()};
  all.insert(Word::identity());
  for (int k = 1; k <= depth; ++k) {
    std::vector<Word> next;
    for (const Word& w : level) {
      for (VertexId v = 0; v < g.vertex_count(); ++v) {
        Word u = multiply(Word::generator(v), w, g);
        if (all.insert(u).second) next.push_back(std::move(u));
      }
    }
    level = std::move(next);
  }
  std::vector<Word> out(all.begin(), all.end());
  std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a < b;
  });
  return out;
}

Vector TruncatedDilation::word_vector(int ball_index, int component) const {
  return coords.col(ball_index * embed.cols() + component);
}

namespace {

int count_degree_at_most(const std::vector<Word>& ball, int bound) {
  int n = 0;
  for (const Word& w : ball) {
    if (w.degree() <= bound) ++n;
  }
  return n;
}

/// Orthonormal basis of the column space of m (relative singular value
/// cutoff), as columns.
Matrix column_space_basis(const Matrix& m, double rcond = 1e-12) {
  if (m.cols() == 0 || m.rows() == 0) return Matrix::Zero(m.rows(), 0);
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU);
  const RealVector& sv = svd.singularValues();
  const double cutoff = rcond * (sv.size() ? sv(0) : 0.0);
  int r = 0;
  while (r < sv.size() && sv(r) > cutoff) ++r;
  return svd.matrixU().leftCols(r);
}

Matrix dilation_word_operator(const TruncatedDilation& dil, const Word& w) {
  Matrix acc = Matrix::Identity(dil.rank, dil.rank);
  for (const Syllable& s : w.flattened()) {
    acc = acc * matrix_power(dil.shift.at(s.vertex), s.exponent);
  }
  return acc;
}

}  // namespace

TruncatedDilation build_truncated_dilation(const Representation& rep,
                                           int depth, double tol) {
  if (depth < 1) {
    throw std::invalid_argument("build_truncated_dilation: depth must be >= 1");
  }
  const SimpleGraph& g = rep.graph();
  const int d = rep.dim();

  TruncatedDilation dil;
  dil.depth = depth;
  dil.tol = tol;
  dil.ball = enumerate_ball(g, depth);
  dil.subball_size = count_degree_at_most(dil.ball, depth - 1);
  dil.subball2_size =
      depth >= 2 ? count_degree_at_most(dil.ball, depth - 2) : 0;
  dil.gram = gram(rep, dil.ball);
  dil.gram.data() = 0.5 * (dil.gram.data() + dil.gram.data().adjoint().eval());

  Eigen::SelfAdjointEigenSolver<Matrix> es(dil.gram.data());
  if (es.info() != Eigen::Success) {
    throw std::runtime_error(
        "build_truncated_dilation: eigenvalue computation failed");
  }
  const RealVector& mu = es.eigenvalues();
  dil.gram_min_eigenvalue = mu.minCoeff();
  dil.gram_norm = mu.cwiseAbs().maxCoeff();
  if (dil.gram_min_eigenvalue < -tol * std::max(1.0, dil.gram_norm)) {
    std::ostringstream os;
    os << "build_truncated_dilation: kernel Gram matrix is not positive "
          "semidefinite (minimum eigenvalue "
       << dil.gram_min_eigenvalue << "); the tuple is not regular";
    throw std::domain_error(os.str());
  }

  const double cut = tol * dil.gram_norm;
  std::vector<int> kept;
  for (int i = 0; i < mu.size(); ++i) {
    if (mu(i) > cut) kept.push_back(i);
  }
  dil.rank = static_cast<int>(kept.size());
  const int n = static_cast<int>(dil.ball.size());
  dil.coords = Matrix::Zero(dil.rank, n * d);
  for (int r = 0; r < dil.rank; ++r) {
    dil.coords.row(r) =
        std::sqrt(mu(kept[r])) * es.eigenvectors().col(kept[r]).adjoint();
  }
  dil.embed = dil.coords.leftCols(d);

  // Left shift on the quotient: columns of the sub-ball map to the columns
  // of the shifted words; least squares there, zero on the complement.
  std::map<Word, int> index;
  for (int i = 0; i < n; ++i) index[dil.ball[i]] = i;
  const Matrix sub = dil.coords.leftCols(dil.subball_size * d);
  const Matrix sub_pinv = pseudo_inverse(sub);
  dil.shift.reserve(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    Matrix shifted = Matrix::Zero(dil.rank, dil.subball_size * d);
    for (int j = 0; j < dil.subball_size; ++j) {
      const Word target = multiply(Word::generator(v), dil.ball[j], g);
      const int t = index.at(target);
      shifted.middleCols(j * d, d) = dil.coords.middleCols(t * d, d);
    }
    dil.shift.push_back(shifted * sub_pinv);
  }
  return dil;
}

DilationReport verify_dilation(const TruncatedDilation& dil,
                               const Representation& rep) {
  DilationReport report;
  const int d = rep.dim();
  const int n = static_cast<int>(dil.ball.size());

  std::vector<Matrix> ops;
  ops.reserve(n);
  for (const Word& w : dil.ball) ops.push_back(dilation_word_operator(dil, w));

  for (int i = 0; i < n; ++i) {
    const double r = operator_norm(dil.embed.adjoint() * ops[i] * dil.embed -
                                   rep.evaluate(dil.ball[i]));
    report.compression_residual = std::max(report.compression_residual, r);
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (dil.ball[i].degree() + dil.ball[j].degree() > dil.depth) continue;
      const double r = operator_norm(
          dil.embed.adjoint() * ops[i].adjoint() * ops[j] * dil.embed -
          kernel(rep, dil.ball[i], dil.ball[j]));
      report.kernel_residual = std::max(report.kernel_residual, r);
    }
  }
  const Matrix p =
      column_space_basis(dil.coords.leftCols(dil.subball_size * d));
  for (const Matrix& v : dil.shift) {
    const double r = operator_norm(
        p.adjoint() * (v.adjoint() * v - Matrix::Identity(dil.rank, dil.rank)) *
        p);
    report.isometry_residual = std::max(report.isometry_residual, r);
  }
  return report;
}

NicaReport verify_nica(const TruncatedDilation& dil,
                       const Representation& rep) {
  NicaReport report;
  const SimpleGraph& g = rep.graph();
  const int d = rep.dim();
  const Matrix p =
      column_space_basis(dil.coords.leftCols(dil.subball_size * d));
  const Matrix p2 =
      column_space_basis(dil.coords.leftCols(dil.subball2_size * d));

  for (VertexId a = 0; a < g.vertex_count(); ++a) {
    for (VertexId b = a + 1; b < g.vertex_count(); ++b) {
      if (g.adjacent(a, b)) {
        ++report.commutation_pairs;
        const double r = operator_norm(
            (dil.shift[a] * dil.shift[b] - dil.shift[b] * dil.shift[a]) * p2);
        report.commutation_residual = std::max(report.commutation_residual, r);
      } else {
        ++report.orthogonality_pairs;
        const double r = operator_norm(p.adjoint() * dil.shift[a].adjoint() *
                                       dil.shift[b] * p);
        report.orthogonality_residual =
            std::max(report.orthogonality_residual, r);
      }
    }
  }

  // Kernel shift law with one generator on the right slot.
  for (VertexId lam = 0; lam < g.vertex_count(); ++lam) {
    const Word gen = Word::generator(lam);
    for (int qi = 0; qi < dil.subball_size; ++qi) {
      const Word& q = dil.ball[qi];
      if (contains(q.initial_vertices(), lam)) continue;
      const Matrix dfactor = commutes(gen, q, g)
                                 ? rep.generator(lam)
                                 : Matrix::Zero(d, d).eval();
      for (const Word& w : dil.ball) {
        const Matrix lhs = kernel(rep, q, multiply(gen, w, g));
        const Matrix rhs = dfactor * kernel(rep, q, w);
        report.kernel_shift_residual =
            std::max(report.kernel_shift_residual, operator_norm(lhs - rhs));
        ++report.kernel_shift_cases;
      }
    }
  }
  return report;
}

}  // namespace gpd
