#include "gpd/word.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

namespace gpd {

Word Word::generator(VertexId v, std::int64_t exponent) {
  if (exponent < 1) {
    throw std::invalid_argument("generator exponent must be >= 1");
  }
  Word w;
  w.blocks_.push_back({Syllable{v, exponent}});
  return w;
}

Word Word::from_syllables(const std::vector<Syllable>& syllables,
                          const SimpleGraph& g) {
  Word w;
  for (const Syllable& s : syllables) {
    if (s.vertex < 0 || s.vertex >= g.vertex_count()) {
      throw std::invalid_argument("syllable vertex out of range");
    }
    if (s.exponent < 1) {
      throw std::invalid_argument("syllable exponent must be >= 1");
    }
    w.push_syllable(s.vertex, s.exponent, g);
  }
  return w;
}

// Appends v^exp on the right and lets it fall left: it passes a block when
// it commutes with every syllable of that block, and stops at the first
// block holding either v itself (amalgamation) or a non-adjacent vertex.
// Each move is a legal shuffle, and the result again satisfies the block
// invariants, so this computes the normal form of (*this) * v^exp.
void Word::push_syllable(VertexId v, std::int64_t exp, const SimpleGraph& g) {
  int t = static_cast<int>(blocks_.size());
  while (t >= 1) {
    bool passes = true;
    for (const Syllable& s : blocks_[t - 1]) {
      if (s.vertex == v || !g.adjacent(s.vertex, v)) {
        passes = false;
        break;
      }
    }
    if (!passes) break;
    --t;
  }
  if (t >= 1) {
    for (Syllable& s : blocks_[t - 1]) {
      if (s.vertex == v) {
        s.exponent += exp;
        return;
      }
    }
  }
  if (t == static_cast<int>(blocks_.size())) {
    blocks_.push_back({Syllable{v, exp}});
    return;
  }
  Block& b = blocks_[t];
  const auto pos = std::lower_bound(
      b.begin(), b.end(), v,
      [](const Syllable& s, VertexId w) { return s.vertex < w; });
  b.insert(pos, Syllable{v, exp});
}

int Word::syllable_count() const {
  int n = 0;
  for (const Block& b : blocks_) n += static_cast<int>(b.size());
  return n;
}

std::int64_t Word::degree() const {
  std::int64_t n = 0;
  for (const Block& b : blocks_) {
    for (const Syllable& s : b) n += s.exponent;
  }
  return n;
}

VertexSet Word::initial_vertices() const {
  VertexSet out;
  if (blocks_.empty()) return out;
  for (const Syllable& s : blocks_.front()) out.push_back(s.vertex);
  return out;  // blocks are sorted by vertex already
}

std::int64_t Word::initial_exponent(VertexId v) const {
  if (blocks_.empty()) return 0;
  for (const Syllable& s : blocks_.front()) {
    if (s.vertex == v) return s.exponent;
  }
  return 0;
}

std::vector<Syllable> Word::flattened() const {
  std::vector<Syllable> out;
  for (const Block& b : blocks_) out.insert(out.end(), b.begin(), b.end());
  return out;
}

Word Word::strip_initial(VertexId v, std::int64_t count,
                         const SimpleGraph& g) const {
  if (count < 0 || initial_exponent(v) < count) {
    throw std::invalid_argument("strip_initial: vertex not initial with the "
                                "requested exponent");
  }
  if (count == 0) return *this;
  std::vector<Syllable> rest;
  for (const Syllable& s : flattened()) {
    if (s.vertex == v && count > 0) {
      // First occurrence of v is the initial syllable.
      if (s.exponent > count) rest.push_back({v, s.exponent - count});
      count = 0;
      continue;
    }
    rest.push_back(s);
  }
  return from_syllables(rest, g);
}

std::string Word::to_string(const SimpleGraph& g) const {
  if (is_identity()) return "e";
  std::ostringstream os;
  bool first = true;
  for (const Syllable& s : flattened()) {
    if (!first) os << ' ';
    first = false;
    os << 'e' << g.label(s.vertex);
    if (s.exponent != 1) os << '^' << s.exponent;
  }
  return os.str();
}

Word parse_word(std::string_view text, const SimpleGraph& g) {
  std::vector<Syllable> syllables;
  size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    const size_t start = i;
    while (i < text.size() &&
           !std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
    }
    std::string atom(text.substr(start, i - start));

    std::string ident = atom;
    std::int64_t exponent = 1;
    const size_t caret = atom.find('^');
    if (caret != std::string::npos) {
      ident = atom.substr(0, caret);
      const std::string digits = atom.substr(caret + 1);
      if (digits.empty() ||
          digits.find_first_not_of("0123456789") != std::string::npos) {
        throw std::invalid_argument(
            "malformed exponent in \"" + atom + "\" at position " +
            std::to_string(start + caret + 1) + ": expected a positive integer");
      }
      try {
        exponent = std::stoll(digits);
      } catch (const std::out_of_range&) {
        throw std::invalid_argument("exponent out of range in \"" + atom +
                                    "\" at position " +
                                    std::to_string(start + caret + 1));
      }
      if (exponent < 1) {
        throw std::invalid_argument(
            "exponent must be >= 1 in \"" + atom + "\" at position " +
            std::to_string(start + caret + 1));
      }
    }
    if (ident.empty()) {
      throw std::invalid_argument("missing generator before '^' at position " +
                                  std::to_string(start));
    }
    if (g.has_label(ident)) {
      syllables.push_back({g.index_of(ident), exponent});
      continue;
    }
    if (ident[0] == 'e') {
      const std::string tail = ident.substr(1);
      if (tail.empty()) {
        if (caret != std::string::npos) {
          throw std::invalid_argument(
              "the identity atom \"e\" takes no exponent (position " +
              std::to_string(start) + ")");
        }
        continue;  // bare "e": the identity
      }
      if (g.has_label(tail)) {
        syllables.push_back({g.index_of(tail), exponent});
        continue;
      }
    }
    throw std::invalid_argument("unknown generator \"" + ident +
                                "\" at position " + std::to_string(start));
  }
  return Word::from_syllables(syllables, g);
}

Word multiply(const Word& x, const Word& y, const SimpleGraph& g) {
  std::vector<Syllable> all = x.flattened();
  const std::vector<Syllable> tail = y.flattened();
  all.insert(all.end(), tail.begin(), tail.end());
  return Word::from_syllables(all, g);
}

bool commutes(const Word& x, const Word& y, const SimpleGraph& g) {
  return multiply(x, y, g) == multiply(y, x, g);
}

std::pair<Word, Word> remove_common_initial(const Word& x, const Word& y,
                                            const SimpleGraph& g) {
  Word u = x;
  Word v = y;
  for (;;) {
    const VertexSet common =
        set_intersection(u.initial_vertices(), v.initial_vertices());
    if (common.empty()) break;
    const VertexId lam = common.front();
    const std::int64_t m =
        std::min(u.initial_exponent(lam), v.initial_exponent(lam));
    u = u.strip_initial(lam, m, g);
    v = v.strip_initial(lam, m, g);
  }
  return {u, v};
}

std::vector<Word> d_lambda(VertexId lambda, const Word& p,
                           const SimpleGraph& g) {
  if (lambda < 0 || lambda >= g.vertex_count()) {
    throw std::invalid_argument("d_lambda: vertex out of range");
  }
  const Word gen = Word::generator(lambda);
  std::vector<Word> out;
  if (contains(p.initial_vertices(), lambda)) {
    const Word rest = p.strip_initial(lambda, p.initial_exponent(lambda), g);
    if (commutes(gen, rest, g)) {
      out = {multiply(gen, rest, g), rest};
    } else {
      out = {rest};
    }
  } else {
    if (commutes(gen, p, g)) {
      out = {multiply(gen, p, g), p};
    } else {
      out = {p};
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

BlockVertexData block_vertex_data(const Word& p, const SimpleGraph& g) {
  BlockVertexData d;
  if (p.is_identity()) return d;
  VertexSet b1;
  for (VertexId v : p.initial_vertices()) {
    if (commutes(Word::generator(v), p, g)) {
      d.b0.push_back(v);
    } else {
      b1.push_back(v);
    }
  }
  d.bseq.push_back(b1);
  const auto& blocks = p.blocks();
  for (size_t j = 1; j < blocks.size(); ++j) {
    VertexSet vs;
    for (const Syllable& s : blocks[j]) vs.push_back(s.vertex);
    d.bseq.push_back(vs);
  }
  for (const VertexSet& vs : d.bseq) {
    d.potential += static_cast<int>(vs.size());
  }
  return d;
}

}  // namespace gpd
