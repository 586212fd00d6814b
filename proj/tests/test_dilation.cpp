#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "fixtures.hpp"
#include "gpd/dilation.hpp"
#include "gpd/synthetic.hpp"

using namespace gpd;

namespace {

std::vector<std::string> ball_strings(const std::vector<Word>& ball,
                                      const SimpleGraph& g) {
  std::vector<std::string> out;
  for (const Word& w : ball) out.push_back(w.to_string(g));
  return out;
}

}  // namespace

TEST_CASE("word balls are enumerated by degree then canonical order") {
  const SimpleGraph free2 = fixtures::edgeless(2);
  const auto ball = enumerate_ball(free2, 2);
  CHECK(ball_strings(ball, free2) ==
        std::vector<std::string>{"e", "e1", "e2", "e1 e2", "e1^2", "e2 e1",
                                 "e2^2"});

  const SimpleGraph pair = fixtures::complete(2);
  CHECK(ball_strings(enumerate_ball(pair, 2), pair) ==
        std::vector<std::string>{"e", "e1", "e2", "e1 e2", "e1^2", "e2^2"});

  CHECK(enumerate_ball(fixtures::pair_plus_free(), 2).size() == 12);
  CHECK(enumerate_ball(fixtures::single_vertex(), 5).size() == 6);

  // |ball(N)| for one free generator pair grows as 2^(N+1) - 1.
  CHECK(enumerate_ball(free2, 4).size() == 31);
}

TEST_CASE("zero operator dilates to the canonical truncated shift") {
  const SimpleGraph g = fixtures::single_vertex();
  Representation rep(g, {Matrix::Zero(1, 1)});
  const TruncatedDilation dil = build_truncated_dilation(rep, 3);

  CHECK(dil.ball.size() == 4);
  CHECK(dil.subball_size == 3);
  CHECK(dil.rank == 4);
  CHECK((dil.gram.data() - identity(4)).norm() == 0.0);

  // The compressed operator still vanishes and the shift moves basis
  // vectors up one degree, killing the top one.
  for (int k = 0; k + 1 < 4; ++k) {
    const Vector step = dil.shift[0] * dil.word_vector(k, 0);
    CHECK((step - dil.word_vector(k + 1, 0)).norm() < 1e-12);
  }
  CHECK((dil.shift[0] * dil.word_vector(3, 0)).norm() < 1e-12);

  const DilationReport report = verify_dilation(dil, rep);
  CHECK(report.compression_residual < 1e-12);
  CHECK(report.kernel_residual < 1e-12);
  CHECK(report.isometry_residual < 1e-12);
}

TEST_CASE("scalar one collapses the ball to a single ray") {
  const SimpleGraph g = fixtures::single_vertex();
  Representation rep(g, {Matrix::Constant(1, 1, 1.0)});
  const TruncatedDilation dil = build_truncated_dilation(rep, 2);

  CHECK(dil.rank == 1);
  const DilationReport report = verify_dilation(dil, rep);
  CHECK(report.compression_residual < 1e-12);
  CHECK(report.kernel_residual < 1e-12);
  CHECK(report.isometry_residual < 1e-12);
}

TEST_CASE("truncated dilations compress regular tuples") {
  std::mt19937_64 rng(2026);
  for (const SimpleGraph& g :
       {fixtures::pair_plus_free(), fixtures::complete(2),
        fixtures::edgeless(2)}) {
    for (int trial = 0; trial < 3; ++trial) {
      const Representation rep = random_regular_tuple(g, 2, rng);
      const TruncatedDilation dil = build_truncated_dilation(rep, 3);
      CHECK(dil.gram_min_eigenvalue > -1e-10 * dil.gram_norm);

      const DilationReport report = verify_dilation(dil, rep);
      CAPTURE(g.all_vertices().size());
      CAPTURE(trial);
      CHECK(report.compression_residual < 1e-8);
      CHECK(report.kernel_residual < 1e-8);
      CHECK(report.isometry_residual < 1e-8);

      const NicaReport nica = verify_nica(dil, rep);
      CHECK(nica.orthogonality_residual < 1e-8);
      CHECK(nica.commutation_residual < 1e-8);
      CHECK(nica.kernel_shift_residual < 1e-10);
      CHECK(nica.kernel_shift_cases > 0);
    }
  }
}

TEST_CASE("pair and free-pair dilations count the right constraint pairs") {
  std::mt19937_64 rng(7);
  const SimpleGraph g = fixtures::pair_plus_free();
  const Representation rep = random_regular_tuple(g, 1, rng);
  const TruncatedDilation dil = build_truncated_dilation(rep, 2);
  const NicaReport nica = verify_nica(dil, rep);
  CHECK(nica.orthogonality_pairs == 2);  // (1,3) and (2,3)
  CHECK(nica.commutation_pairs == 1);    // (1,2)
}

TEST_CASE("non-positive word grams are rejected") {
  const Representation nil = fixtures::nilpotent_pair();
  CHECK_THROWS_AS(build_truncated_dilation(nil, 2), std::domain_error);
  std::mt19937_64 rng(3);
  const Representation ok =
      random_regular_tuple(fixtures::complete(2), 2, rng);
  CHECK_THROWS_AS(build_truncated_dilation(ok, 0), std::invalid_argument);
}
