#include <doctest.h>

#include <random>
#include <stdexcept>

#include "fixtures.hpp"
#include "gpd/reduction.hpp"
#include "oracles.hpp"

using namespace gpd;

namespace {

std::vector<Word> parse_set(const std::vector<std::string>& texts,
                            const SimpleGraph& g) {
  std::vector<Word> out;
  for (const auto& t : texts) out.push_back(parse_word(t, g));
  return canonical_word_set(std::move(out));
}

}  // namespace

TEST_CASE("word potentials") {
  const SimpleGraph g = fixtures::pair_plus_free();
  CHECK(word_potential(Word::identity(), g) == 0);
  CHECK(word_potential(parse_word("e1 e2", g), g) == 0);
  CHECK(word_potential(parse_word("e1^4 e2^2", g), g) == 0);
  CHECK(word_potential(parse_word("e1 e3", g), g) == 2);
  CHECK(word_potential(parse_word("e1^2 e3", g), g) == 2);
  CHECK(word_potential(parse_word("e2 e3 e2", g), g) == 3);
  CHECK(word_potential(parse_word("e1 e2 e3 e1", g), g) == 4);
}

TEST_CASE("set potential counts block-vertex sequences once") {
  const SimpleGraph g = fixtures::pair_plus_free();
  CHECK(set_potential(parse_set({"e1 e3", "e1^2 e3"}, g), g) == 2);
  CHECK(set_potential(parse_set({"e1 e3", "e3 e1"}, g), g) == 4);
  CHECK(set_potential(parse_set({"e1 e3", "e2", "e1 e2"}, g), g) == 2);
  CHECK(set_potential(parse_set({}, g), g) == 0);
  // Exponent changes on later blocks keep the sequence equal too.
  CHECK(set_potential(parse_set({"e1 e3", "e1 e3^2"}, g), g) == 2);
}

TEST_CASE("single reduction steps match the worked examples") {
  const SimpleGraph g = fixtures::pair_plus_free();

  SUBCASE("one split word") {
    const ReductionStep s = reduce_step(parse_set({"e1 e3"}, g), g);
    CHECK(s.lambda == 0);
    CHECK(s.output == parse_set({"e3"}, g));
    CHECK(s.potential_before == 2);
    CHECK(s.potential_after == 0);
  }
  SUBCASE("reversed order picks the other head") {
    const ReductionStep s = reduce_step(parse_set({"e3 e1"}, g), g);
    CHECK(s.lambda == 2);
    CHECK(s.output == parse_set({"e1"}, g));
  }
  SUBCASE("the whole set moves through the chosen vertex") {
    const ReductionStep s = reduce_step(parse_set({"e1 e3", "e2"}, g), g);
    CHECK(s.lambda == 0);
    CHECK(s.output == parse_set({"e3", "e1 e2", "e2"}, g));
    CHECK(s.potential_before == 2);
    CHECK(s.potential_after == 0);
  }
  SUBCASE("single-block words cannot be reduced") {
    CHECK_THROWS_AS(reduce_step(parse_set({"e1 e2", "e3"}, g), g),
                    std::invalid_argument);
    CHECK_THROWS_AS(reduce_step(parse_set({}, g), g), std::invalid_argument);
  }
}

TEST_CASE("initial vertices commuting with the word are skipped") {
  // Path 1-2-3: in e2 e3 e1 the vertex 2 is initial and commutes with the
  // whole word, so the reduction must pick vertex 3.
  const SimpleGraph path({"1", "2", "3"}, {{"1", "2"}, {"2", "3"}});
  const Word w = parse_word("e2 e3 e1", path);
  CHECK(w.initial_vertices() == VertexSet{1, 2});
  const ReductionStep s = reduce_step({w}, path);
  CHECK(s.lambda == 2);
  CHECK(s.output == std::vector<Word>{parse_word("e1 e2", path)});
}

TEST_CASE("full reduction drains the potential") {
  const SimpleGraph g = fixtures::pair_plus_free();
  const std::vector<Word> f =
      parse_set({"e1 e3", "e2 e3 e2", "e3 e1 e2"}, g);
  const ReductionTrace trace = reduce_to_single_blocks(f, g);

  CHECK(trace.initial == f);
  CHECK(trace.all_single_block(g));
  CHECK(static_cast<int>(trace.steps.size()) <= set_potential(f, g));
  int last = set_potential(f, g);
  for (const ReductionStep& s : trace.steps) {
    CHECK(s.potential_before == last);
    CHECK(s.potential_after < s.potential_before);
    last = s.potential_after;
  }
  CHECK(trace.final_set == trace.steps.back().output);
  for (const Word& w : trace.final_set) CHECK(w.block_count() <= 1);

  // Already-reduced sets come back unchanged with no steps.
  const ReductionTrace quick =
      reduce_to_single_blocks(parse_set({"e1 e2", "e3"}, g), g);
  CHECK(quick.steps.empty());
  CHECK(quick.final_set == parse_set({"e1 e2", "e3"}, g));
}

TEST_CASE("random sets reduce within budget on both sample graphs") {
  std::mt19937_64 rng(47);
  for (const SimpleGraph& g :
       {fixtures::pair_plus_free(), fixtures::near_complete_4()}) {
    const auto seqs = oracles::all_sequences(g, 3);
    std::uniform_int_distribution<size_t> pick(0, seqs.size() - 1);
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<Word> f;
      const int size = 1 + static_cast<int>(rng() % 4);
      for (int i = 0; i < size; ++i) {
        std::vector<Syllable> syl;
        for (VertexId v : seqs[pick(rng)]) syl.push_back({v, 1});
        f.push_back(Word::from_syllables(syl, g));
      }
      const int budget = set_potential(f, g);
      const ReductionTrace trace = reduce_to_single_blocks(f, g);
      CHECK(static_cast<int>(trace.steps.size()) <= budget);
      CHECK(trace.all_single_block(g));
      for (const ReductionStep& s : trace.steps) {
        CHECK(s.potential_after < s.potential_before);
      }
    }
  }
}
