#pragma once

#include <optional>

#include "ramsey/diaries.hpp"
#include "ramsey/posets.hpp"
#include "ramsey/words.hpp"

namespace ramsey {

// The straight embedding of vertex j into the word order: positions 2j,2j+1
// carry (L,R); earlier pairs code the relation of j to each smaller vertex.
Word phi(const Poset& p, int j);

// closure(phi[P]); every phi(v) is a leaf and all words are compatible.
WordSet phi_tree(const Poset& p);

// Compresses phi_tree(p) level by level into a poset-diary coding p, with
// the vertex labeling.  Bound |p| <= max_size.
LabeledDiary diarize(const Poset& p, int max_size = 7);

struct TypeWords {
  WordSet words;               // realizable 1-type words of the given length
  std::optional<Word> coding;  // relations of vertex n to 0..n-1, when n < |p|
};

// Words of length n consistent as one-point extensions of p restricted to
// vertices 0..n-1 (w_j = L: below j, R: above j, X: incomparable).
TypeWords type_words(const Poset& p, int n);

}  // namespace ramsey
