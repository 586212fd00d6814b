#include "gpd/reduction.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gpd {

int word_potential(const Word& p, const SimpleGraph& g) {
  return block_vertex_data(p, g).potential;
}

int set_potential(const std::vector<Word>& words, const SimpleGraph& g) {
  std::set<std::vector<VertexSet>> seen;
  int total = 0;
  for (const Word& w : words) {
    const BlockVertexData d = block_vertex_data(w, g);
    if (seen.insert(d.bseq).second) total += d.potential;
  }
  return total;
}

std::vector<Word> canonical_word_set(std::vector<Word> words) {
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  return words;
}

ReductionStep reduce_step(const std::vector<Word>& words,
                          const SimpleGraph& g) {
  const std::vector<Word> sorted = canonical_word_set(words);
  VertexId lambda = -1;
  for (const Word& w : sorted) {
    if (w.block_count() < 2) continue;
    for (VertexId v : w.initial_vertices()) {
      if (!commutes(Word::generator(v), w, g)) {
        lambda = v;
        break;
      }
    }
    // A word with two or more blocks always has such a vertex: anything in
    // its first block is blocked by the second block.
    break;
  }
  if (lambda < 0) {
    throw std::invalid_argument(
        "reduce_step: no word with at least two blocks");
  }
  ReductionStep step;
  step.lambda = lambda;
  step.potential_before = set_potential(sorted, g);
  std::vector<Word> out;
  for (const Word& w : sorted) {
    for (Word& r : d_lambda(lambda, w, g)) out.push_back(std::move(r));
  }
  step.output = canonical_word_set(std::move(out));
  step.potential_after = set_potential(step.output, g);
  return step;
}

bool ReductionTrace::all_single_block(const SimpleGraph&) const {
  return std::all_of(final_set.begin(), final_set.end(),
                     [](const Word& w) { return w.block_count() <= 1; });
}

ReductionTrace reduce_to_single_blocks(std::vector<Word> words,
                                       const SimpleGraph& g) {
  ReductionTrace trace;
  trace.initial = canonical_word_set(std::move(words));
  std::vector<Word> current = trace.initial;
  const int budget = set_potential(current, g);
  auto multi_block = [](const std::vector<Word>& f) {
    return std::any_of(f.begin(), f.end(),
                       [](const Word& w) { return w.block_count() >= 2; });
  };
  while (multi_block(current)) {
    if (static_cast<int>(trace.steps.size()) >= budget) {
      throw std::logic_error(
          "reduce_to_single_blocks: potential bound exceeded");
    }
    ReductionStep step = reduce_step(current, g);
    if (step.potential_after >= step.potential_before) {
      throw std::logic_error(
          "reduce_to_single_blocks: potential failed to decrease");
    }
    current = step.output;
    trace.steps.push_back(std::move(step));
  }
  trace.final_set = std::move(current);
  return trace;
}

}  // namespace gpd
