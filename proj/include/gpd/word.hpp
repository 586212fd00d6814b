#ifndef GPD_WORD_HPP_
#define GPD_WORD_HPP_

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gpd/graph.hpp"

namespace gpd {

/// One power of a generator: vertex^exponent with exponent >= 1.
struct Syllable {
  VertexId vertex = 0;
  std::int64_t exponent = 1;

  friend auto operator<=>(const Syllable&, const Syllable&) = default;
};

/// Element of the graph product of copies of the natural numbers over a
/// simple graph: generators attached to vertices, and two generators commute
/// exactly when their vertices are adjacent.
///
/// Stored in block normal form: a sequence of blocks, each block a set of
/// syllables on pairwise-adjacent vertices (sorted by vertex), such that
/// every vertex in a block fails to commute with at least one vertex of the
/// preceding block. This form is a complete invariant: two products of
/// generators are equal in the monoid iff their block forms coincide.
class Word {
 public:
  using Block = std::vector<Syllable>;

  Word() = default;  // identity

  static Word identity() { return Word(); }
  static Word generator(VertexId v, std::int64_t exponent = 1);

  /// Normal form of the product of `syllables` in the given order.
  /// Throws std::invalid_argument on exponents < 1 or bad vertices.
  static Word from_syllables(const std::vector<Syllable>& syllables,
                             const SimpleGraph& g);

  bool is_identity() const { return blocks_.empty(); }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  const std::vector<Block>& blocks() const { return blocks_; }

  /// Number of syllables across all blocks.
  int syllable_count() const;

  /// Total exponent sum (length of the word as a product of generators).
  std::int64_t degree() const;

  /// Vertices of the first block: exactly the generators that can be
  /// shuffled to the front. Empty for the identity.
  VertexSet initial_vertices() const;

  /// Exponent of `v` in the first block, 0 if absent.
  std::int64_t initial_exponent(VertexId v) const;

  /// Syllables in block order (within a block, by vertex).
  std::vector<Syllable> flattened() const;

  /// Removes v^count from the first block (v must be initial with at least
  /// that exponent) and renormalizes. Returns the remainder.
  Word strip_initial(VertexId v, std::int64_t count, const SimpleGraph& g) const;

  std::string to_string(const SimpleGraph& g) const;

  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  void push_syllable(VertexId v, std::int64_t exp, const SimpleGraph& g);

  std::vector<Block> blocks_;
};

/// Parses whitespace-separated atoms `IDENT` or `IDENT^UINT` where IDENT is
/// a vertex label, optionally prefixed with 'e' ("e1^2" and "1^2" both mean
/// vertex "1" squared). Empty input (or the bare atom "e", when no vertex
/// carries that label) is the identity. Throws std::invalid_argument with
/// the offending character position on malformed input.
Word parse_word(std::string_view text, const SimpleGraph& g);

Word multiply(const Word& x, const Word& y, const SimpleGraph& g);

/// Whether xy = yx in the monoid.
bool commutes(const Word& x, const Word& y, const SimpleGraph& g);

/// The unique pair (u, v) with disjoint initial vertex sets such that
/// x = c u and y = c v for the maximal common initial part c; equivalently
/// the reduced representative of the formal quotient x^{-1} y.
std::pair<Word, Word> remove_common_initial(const Word& x, const Word& y,
                                            const SimpleGraph& g);

/// One-step set reduction at vertex `lambda`:
///  - lambda initial in p, remainder p' after deleting the whole
///    lambda-syllable: {lambda p', p'} if the generator commutes with p',
///    else {p'};
///  - lambda not initial: {lambda p, p} if the generator commutes with p,
///    else {p}.
/// Result is sorted and duplicate-free.
std::vector<Word> d_lambda(VertexId lambda, const Word& p,
                           const SimpleGraph& g);

/// Splitting of a word's content by commutation against the whole word:
/// b0 holds the initial vertices whose generators commute with the word,
/// bseq the remaining initial vertices followed by the vertex sets of
/// blocks 2..m. The potential c is the total size of bseq; it is zero
/// exactly for words with at most one block.
struct BlockVertexData {
  VertexSet b0;
  std::vector<VertexSet> bseq;
  int potential = 0;

  friend auto operator<=>(const BlockVertexData&,
                          const BlockVertexData&) = default;
};

BlockVertexData block_vertex_data(const Word& p, const SimpleGraph& g);

}  // namespace gpd

#endif  // GPD_WORD_HPP_
