#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "ramsey/words.hpp"

namespace ramsey {

// Interesting levels I(S): level i is interesting when the level structures
// of the closure at i and i+1 are not isomorphic, when a compatible pair
// turns incompatible from i to i+1, or when a member of S has length i.
std::vector<std::size_t> interesting_levels(const WordSet& s);

// Two same-length levels carry isomorphic structures iff the lex-rank
// bijection preserves prec and dom in both directions.
bool levels_isomorphic(const WordSet& a, const WordSet& b);

// Deletes from w every character whose index is not in `levels` (sorted).
Word delete_boring(const Word& w, const std::vector<std::size_t>& levels);

struct EmbeddingType {
  WordSet type;                                // tau(S)
  std::vector<std::pair<Word, Word>> map;      // per member of S, sorted by source
  std::vector<std::size_t> levels;             // I(S)
};

// The embedding type tau(S) and the per-word map tau_S.
EmbeddingType tau(const WordSet& s);

// e (|e| = |level|) is boring for the lex-sorted same-length level when
// appending it creates no interesting level.
bool is_boring_extension(const WordSet& level, const Word& e);

// All boring extensions of a pairwise compatible level; word length > 0 and
// |level| <= 12 (3^|level| scan).
std::vector<Word> boring_extensions(const WordSet& level);

// Extends a boring extension e of s (subset of the full level of length l,
// pairwise compatible) to a boring extension of all of Sigma*_l, keeping e
// on s.  Requires l <= 4; the output is verified boring.
Word extend_boring(const WordSet& s, const Word& e);

// Transports a boring extension of Sigma*_l to Sigma*_l2 (l <= l2 <= 4) by
// copying letters along length-l prefixes; verified boring.
Word lift_boring(const Word& e, std::size_t l, std::size_t l2);

// f given as (source, image) pairs; true iff tau_S(w) = tau_{f[S]}(f(w)) for
// every source word.
bool is_shape_preserving(const std::vector<std::pair<Word, Word>>& f);

// The tripling map: every letter repeated three times.
Word triple(const Word& w);

}  // namespace ramsey
