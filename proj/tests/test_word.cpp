#include <doctest.h>

#include <map>
#include <set>
#include <stdexcept>

#include "fixtures.hpp"
#include "gpd/word.hpp"
#include "oracles.hpp"

using namespace gpd;

namespace {

Word from_letters(const oracles::Letters& letters, const SimpleGraph& g) {
  std::vector<Syllable> syl;
  for (VertexId v : letters) syl.push_back({v, 1});
  return Word::from_syllables(syl, g);
}

// (vertex, exponent) view of a word's blocks, for comparison against the
// peeling oracle.
std::vector<oracles::CountedBlock> counted_blocks(const Word& w) {
  std::vector<oracles::CountedBlock> out;
  for (const Word::Block& b : w.blocks()) {
    oracles::CountedBlock cb;
    for (const Syllable& s : b) cb.emplace_back(s.vertex, s.exponent);
    out.push_back(std::move(cb));
  }
  return out;
}

}  // namespace

TEST_CASE("parsing words") {
  const SimpleGraph g = fixtures::pair_plus_free();

  CHECK(parse_word("", g).is_identity());
  CHECK(parse_word("   ", g).is_identity());
  CHECK(parse_word("e", g).is_identity());
  CHECK(parse_word("e1", g) == Word::generator(0));
  CHECK(parse_word("1", g) == Word::generator(0));       // raw label
  CHECK(parse_word("e1^3", g) == Word::generator(0, 3));
  CHECK(parse_word("e1 e1^2", g) == Word::generator(0, 3));
  CHECK(parse_word(" e2\te3 ", g) == parse_word("e2 e3", g));

  CHECK_THROWS_AS(parse_word("e9", g), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("e1^0", g), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("e1^-2", g), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("e1^", g), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("^2", g), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("e1^2^3", g), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("e^2", g), std::invalid_argument);
}

TEST_CASE("parse errors carry the offending position") {
  const SimpleGraph g = fixtures::pair_plus_free();
  try {
    parse_word("e1 e9", g);
    FAIL("expected an exception");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("position 3") != std::string::npos);
  }
}

TEST_CASE("normal forms on the one-edge graph") {
  const SimpleGraph g = fixtures::pair_plus_free();

  // Adjacent generators amalgamate into a single block, sorted by vertex.
  const Word w1 = parse_word("e2 e1", g);
  CHECK(w1.block_count() == 1);
  CHECK(w1.to_string(g) == "e1 e2");
  CHECK(w1 == parse_word("e1 e2", g));

  // Repetition merges into exponents.
  const Word w2 = parse_word("e1^2 e2 e1", g);
  CHECK(w2.block_count() == 1);
  CHECK(w2.to_string(g) == "e1^3 e2");

  // Non-adjacent generators keep their order as separate blocks.
  const Word w3 = parse_word("e1 e3 e1", g);
  CHECK(w3.block_count() == 3);
  CHECK(w3.to_string(g) == "e1 e3 e1");
  CHECK(w3 != parse_word("e1^2 e3", g));

  // A later commuting factor falls through to its block.
  const Word w4 = parse_word("e3 e1 e2", g);
  CHECK(w4.block_count() == 2);
  CHECK(w4.blocks()[1].size() == 2);
  CHECK(w4 == parse_word("e3 e2 e1", g));

  CHECK(parse_word("e2 e3 e2", g).block_count() == 3);
}

TEST_CASE("normal form renormalizes after collapse on a path graph") {
  // Vertices 1-2-3 in a path: removing the head of a word can merge the
  // blocks behind it.
  const SimpleGraph path({"1", "2", "3"}, {{"1", "2"}, {"2", "3"}});
  const Word w = parse_word("e1 e2 e3", path);
  CHECK(w.block_count() == 2);  // {1,2} then {3}
  const auto [u, v] =
      remove_common_initial(w, parse_word("e1", path), path);
  CHECK(v.is_identity());
  CHECK(u.block_count() == 1);  // e2 e3 collapses into one block
  CHECK(u == parse_word("e2 e3", path));
}

TEST_CASE("word accessors") {
  const SimpleGraph g = fixtures::pair_plus_free();
  const Word w = parse_word("e1^2 e2 e3 e1", g);
  CHECK(w.degree() == 5);
  CHECK(w.syllable_count() == 4);
  CHECK(w.block_count() == 3);
  CHECK(w.initial_vertices() == VertexSet{0, 1});
  CHECK(w.initial_exponent(0) == 2);
  CHECK(w.initial_exponent(1) == 1);
  CHECK(w.initial_exponent(2) == 0);

  const Word e = Word::identity();
  CHECK(e.degree() == 0);
  CHECK(e.initial_vertices().empty());
  CHECK(e.to_string(g) == "e");
}

TEST_CASE("multiplication is associative with identity") {
  const SimpleGraph g = fixtures::pair_plus_free();
  const std::vector<Word> samples = {
      Word::identity(),          parse_word("e1", g),
      parse_word("e3 e1", g),    parse_word("e1^2 e2", g),
      parse_word("e2 e3 e2", g),
  };
  for (const Word& a : samples) {
    CHECK(multiply(a, Word::identity(), g) == a);
    CHECK(multiply(Word::identity(), a, g) == a);
    for (const Word& b : samples) {
      for (const Word& c : samples) {
        CHECK(multiply(multiply(a, b, g), c, g) ==
              multiply(a, multiply(b, c, g), g));
      }
    }
  }
}

TEST_CASE("commutation of words") {
  const SimpleGraph g = fixtures::pair_plus_free();
  CHECK(commutes(parse_word("e1", g), parse_word("e2", g), g));
  CHECK(!commutes(parse_word("e1", g), parse_word("e3", g), g));
  CHECK(commutes(parse_word("e1 e2", g), parse_word("e2", g), g));
  CHECK(!commutes(parse_word("e1 e2", g), parse_word("e3", g), g));
  CHECK(commutes(Word::identity(), parse_word("e3 e1", g), g));
  // A word always commutes with its own powers.
  const Word w = parse_word("e1 e3", g);
  CHECK(commutes(w, multiply(w, w, g), g));
}

TEST_CASE("removing the common initial part") {
  const SimpleGraph g = fixtures::pair_plus_free();

  SUBCASE("plain strip") {
    const auto [u, v] = remove_common_initial(parse_word("e1 e2", g),
                                              parse_word("e1 e3", g), g);
    CHECK(u == parse_word("e2", g));
    CHECK(v == parse_word("e3", g));
  }
  SUBCASE("partial exponents") {
    const auto [u, v] = remove_common_initial(parse_word("e1^3 e3", g),
                                              parse_word("e1 e2", g), g);
    CHECK(u == parse_word("e1^2 e3", g));
    CHECK(v == parse_word("e2", g));
  }
  SUBCASE("identical words cancel completely") {
    const Word w = parse_word("e1 e2 e3 e1", g);
    const auto [u, v] = remove_common_initial(w, w, g);
    CHECK(u.is_identity());
    CHECK(v.is_identity());
  }
  SUBCASE("initial sets of the result are disjoint") {
    const auto seqs = oracles::all_sequences(g, 3);
    for (const auto& sp : seqs) {
      for (const auto& sq : seqs) {
        const Word p = from_letters(sp, g);
        const Word q = from_letters(sq, g);
        const auto [u, v] = remove_common_initial(p, q, g);
        CHECK(set_intersection(u.initial_vertices(), v.initial_vertices())
                  .empty());
      }
    }
  }
  SUBCASE("the stripped prefix is a genuine common left factor") {
    const auto seqs = oracles::all_sequences(g, 3);
    const auto cands = oracles::all_sequences(g, 3);
    for (const auto& sp : seqs) {
      for (const auto& sq : seqs) {
        const Word p = from_letters(sp, g);
        const Word q = from_letters(sq, g);
        const auto [u, v] = remove_common_initial(p, q, g);
        bool found = false;
        for (const auto& sc : cands) {
          const Word c = from_letters(sc, g);
          if (multiply(c, u, g) == p && multiply(c, v, g) == q) {
            found = true;
            break;
          }
        }
        CHECK(found);
      }
    }
  }
  SUBCASE("invariance under common left extension") {
    const auto seqs = oracles::all_sequences(g, 2);
    for (const auto& sp : seqs) {
      for (const auto& sq : seqs) {
        const Word p = from_letters(sp, g);
        const Word q = from_letters(sq, g);
        const auto base = remove_common_initial(p, q, g);
        for (const auto& sc : seqs) {
          const Word c = from_letters(sc, g);
          const auto lifted = remove_common_initial(multiply(c, p, g),
                                                    multiply(c, q, g), g);
          CHECK(lifted == base);
        }
      }
    }
  }
}

TEST_CASE("one-step set reduction of a single word") {
  const SimpleGraph g = fixtures::pair_plus_free();
  const VertexId v1 = 0, v2 = 1, v3 = 2;

  // Initial vertex that fails to commute with the remainder: drop it.
  CHECK(d_lambda(v1, parse_word("e1 e3", g), g) ==
        std::vector<Word>{parse_word("e3", g)});
  // The whole initial syllable goes at once, keeping one copy in front.
  CHECK(d_lambda(v1, parse_word("e1^2", g), g) ==
        std::vector<Word>{Word::identity(), parse_word("e1", g)});
  CHECK(d_lambda(v1, parse_word("e1^3 e3", g), g) ==
        std::vector<Word>{parse_word("e3", g)});
  // Not initial, commuting: both the extended and the original word.
  CHECK(d_lambda(v1, parse_word("e2", g), g) ==
        std::vector<Word>{parse_word("e1 e2", g), parse_word("e2", g)});
  // Not initial, not commuting: fixed.
  CHECK(d_lambda(v3, parse_word("e1", g), g) ==
        std::vector<Word>{parse_word("e1", g)});
  // Initial, and the remainder commutes with the vertex.
  CHECK(d_lambda(v1, parse_word("e1 e2", g), g) ==
        std::vector<Word>{parse_word("e1 e2", g), parse_word("e2", g)});
  // Initial with a mixed remainder that does not commute.
  CHECK(d_lambda(v1, parse_word("e1 e2 e3", g), g) ==
        std::vector<Word>{parse_word("e2 e3", g)});
  CHECK(d_lambda(v2, Word::identity(), g) ==
        std::vector<Word>{Word::identity(), parse_word("e2", g)});
}

TEST_CASE("block vertex data and potentials") {
  const SimpleGraph g = fixtures::pair_plus_free();

  const BlockVertexData one_block = block_vertex_data(parse_word("e1 e2", g), g);
  CHECK(one_block.b0 == VertexSet{0, 1});
  CHECK(one_block.bseq == std::vector<VertexSet>{{}});
  CHECK(one_block.potential == 0);

  const BlockVertexData split = block_vertex_data(parse_word("e1 e3", g), g);
  CHECK(split.b0.empty());
  CHECK(split.bseq == std::vector<VertexSet>{{0}, {2}});
  CHECK(split.potential == 2);

  // Exponents do not matter: the data depends only on vertex structure.
  CHECK(block_vertex_data(parse_word("e1^2 e3", g), g).bseq == split.bseq);

  // A commuting initial vertex lands in b0 even with blocks behind it.
  const BlockVertexData mixed =
      block_vertex_data(parse_word("e2 e3 e2", g), g);
  CHECK(mixed.b0.empty());
  CHECK(mixed.bseq == std::vector<VertexSet>{{1}, {2}, {1}});
  CHECK(mixed.potential == 3);

  const BlockVertexData trivial = block_vertex_data(Word::identity(), g);
  CHECK(trivial.bseq.empty());
  CHECK(trivial.potential == 0);
}

TEST_CASE("exhaustive agreement with the shuffling oracle") {
  const SimpleGraph g = fixtures::pair_plus_free();
  const auto seqs = oracles::all_sequences(g, 4);

  // The block structure must match greedy peeling on every sequence.
  for (const auto& s : seqs) {
    CHECK(counted_blocks(from_letters(s, g)) == oracles::peeled_blocks(s, g));
  }

  // Normal forms must separate exactly the shuffle classes.
  std::map<oracles::Letters, Word> class_rep;
  std::map<Word, oracles::Letters> word_rep;
  for (const auto& s : seqs) {
    const auto canon = oracles::canonical_form(s, g);
    const Word w = from_letters(s, g);
    auto [it, fresh] = class_rep.emplace(canon, w);
    if (!fresh) CHECK(it->second == w);
    auto [jt, fresh2] = word_rep.emplace(w, canon);
    if (!fresh2) CHECK(jt->second == canon);
  }
}
