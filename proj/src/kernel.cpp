#include "gpd/kernel.hpp"

#include <algorithm>
#include <stdexcept>

namespace gpd {

Matrix kernel(const Representation& rep, const Word& p, const Word& q) {
  const auto [u, v] = remove_common_initial(p, q, rep.graph());
  if (!commutes(u, v, rep.graph())) {
    return Matrix::Zero(rep.dim(), rep.dim());
  }
  return rep.evaluate(v) * rep.evaluate(u).adjoint();
}

OperatorMatrix gram(const Representation& rep,
                    const std::vector<Word>& words) {
  std::vector<std::string> labels;
  labels.reserve(words.size());
  for (const Word& w : words) labels.push_back(w.to_string(rep.graph()));
  OperatorMatrix out(labels, labels, rep.dim());
  for (size_t i = 0; i < words.size(); ++i) {
    for (size_t j = 0; j < words.size(); ++j) {
      out.block(static_cast<int>(i), static_cast<int>(j)) =
          kernel(rep, words[i], words[j]);
    }
  }
  return out;
}

Matrix z_matrix(const Representation& rep, const VertexSet& v) {
  Matrix acc = Matrix::Zero(rep.dim(), rep.dim());
  for (const VertexSet& u : rep.graph().cliques()) {
    if (!is_subset(u, v)) continue;
    const Matrix t = rep.clique_product(u);
    const double sign = (u.size() % 2 == 0) ? 1.0 : -1.0;
    acc += sign * (t * t.adjoint());
  }
  return acc;
}

const SubsetRecord* RegularityVerdict::worst() const {
  const SubsetRecord* out = nullptr;
  for (const SubsetRecord& r : records) {
    if (!out || r.min_eigenvalue < out->min_eigenvalue) out = &r;
  }
  return out;
}

RegularityVerdict check_regular(const Representation& rep, double tol,
                                int guard, bool top_only) {
  const int n = rep.graph().vertex_count();
  if (n > guard) {
    throw std::length_error(
        "check_regular sweeps 2^" + std::to_string(n) +
        " subsets, exceeding the guard of " + std::to_string(guard) +
        " vertices (raise the guard to force the sweep)");
  }
  std::vector<VertexSet> subsets;
  if (top_only) {
    subsets.push_back(rep.graph().all_vertices());
  } else {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      VertexSet w;
      for (int i = 0; i < n; ++i) {
        if (mask & (1u << i)) w.push_back(i);
      }
      subsets.push_back(std::move(w));
    }
    std::sort(subsets.begin(), subsets.end(),
              [](const VertexSet& a, const VertexSet& b) {
                if (a.size() != b.size()) return a.size() < b.size();
                return a < b;
              });
  }
  RegularityVerdict verdict;
  verdict.tol = tol;
  verdict.regular = true;
  for (VertexSet& w : subsets) {
    const PsdVerdict p = psd_check(z_matrix(rep, w), tol);
    verdict.records.push_back({std::move(w), p.min_eigenvalue, p.positive});
    if (!p.positive) verdict.regular = false;
  }
  return verdict;
}

double clique_identity_residual(const Representation& rep,
                                const VertexSet& f) {
  const SimpleGraph& g = rep.graph();
  if (!g.is_clique(f)) {
    throw std::invalid_argument("clique_identity_residual requires a clique, "
                                "got " + g.format_vertex_set(f));
  }
  Matrix acc = Matrix::Zero(rep.dim(), rep.dim());
  for (const VertexSet& w : g.cliques()) {
    if (!is_subset(f, w)) continue;
    const Matrix t = rep.clique_product(set_difference(w, f));
    acc += t * z_matrix(rep, g.neighborhood(w)) * t.adjoint();
  }
  return operator_norm(acc - identity(rep.dim()));
}

OperatorMatrix cholesky_factor_cliques(const Representation& rep, double tol) {
  const SimpleGraph& g = rep.graph();
  const std::vector<VertexSet> cliques = g.cliques();
  std::vector<std::string> labels;
  labels.reserve(cliques.size());
  for (const VertexSet& c : cliques) labels.push_back(g.format_vertex_set(c));

  std::vector<Matrix> roots;
  roots.reserve(cliques.size());
  for (const VertexSet& w : cliques) {
    try {
      roots.push_back(hermitian_sqrt(z_matrix(rep, g.neighborhood(w)), tol));
    } catch (const std::domain_error&) {
      throw std::domain_error(
          "cholesky_factor_cliques: the alternating clique sum over the "
          "neighborhood of " + g.format_vertex_set(w) +
          " is not positive semidefinite at this tolerance");
    }
  }

  OperatorMatrix r(labels, labels, rep.dim());
  for (size_t i = 0; i < cliques.size(); ++i) {
    for (size_t j = 0; j < cliques.size(); ++j) {
      if (!is_subset(cliques[i], cliques[j])) continue;
      r.block(static_cast<int>(i), static_cast<int>(j)) =
          rep.clique_product(set_difference(cliques[j], cliques[i])) *
          roots[j];
    }
  }
  return r;
}

Word clique_word(const VertexSet& clique, const SimpleGraph& g) {
  if (!g.is_clique(clique)) {
    throw std::invalid_argument("clique_word requires a clique, got " +
                                g.format_vertex_set(clique));
  }
  std::vector<Syllable> syl;
  for (VertexId v : clique) syl.push_back({v, 1});
  return Word::from_syllables(syl, g);
}

}  // namespace gpd
