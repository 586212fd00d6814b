#ifndef GPD_REDUCTION_HPP_
#define GPD_REDUCTION_HPP_

#include <vector>

#include "gpd/graph.hpp"
#include "gpd/word.hpp"

namespace gpd {

/// Potential of a single word: the number of vertices counted by its
/// block-vertex sequence. Zero exactly when the word has at most one block.
int word_potential(const Word& p, const SimpleGraph& g);

/// Potential of a word set: word potentials summed over *distinct*
/// block-vertex sequences (words sharing a sequence count once).
int set_potential(const std::vector<Word>& words, const SimpleGraph& g);

/// Sorted duplicate-free copy.
std::vector<Word> canonical_word_set(std::vector<Word> words);

struct ReductionStep {
  VertexId lambda;
  std::vector<Word> output;
  int potential_before = 0;
  int potential_after = 0;
};

/// One reduction step: scanning the (sorted) set, find the first word with
/// at least two blocks, pick the smallest of its initial vertices whose
/// generator fails to commute with it, and map the whole set through the
/// one-step reduction at that vertex. Requires such a word to exist.
ReductionStep reduce_step(const std::vector<Word>& words,
                          const SimpleGraph& g);

struct ReductionTrace {
  std::vector<Word> initial;
  std::vector<ReductionStep> steps;
  std::vector<Word> final_set;

  bool all_single_block(const SimpleGraph& g) const;
};

/// Repeats reduce_step until every word has at most one block. The set
/// potential strictly decreases at each step, so the loop finishes in at
/// most set_potential(words) steps.
ReductionTrace reduce_to_single_blocks(std::vector<Word> words,
                                       const SimpleGraph& g);

}  // namespace gpd

#endif  // GPD_REDUCTION_HPP_
