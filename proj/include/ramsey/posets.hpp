#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ramsey/words.hpp"

namespace ramsey {

// Finite strict partial order on {0, ..., n-1}.  The relation is stored
// transitively closed; construction rejects cycles.
class Poset {
 public:
  Poset() : n_(0) {}
  explicit Poset(int n);  // antichain

  // Declared pairs a < b; transitive closure taken, cycles rejected.
  static Poset from_relations(int n, const std::vector<std::pair<int, int>>& below);

  // Text format: first non-comment line is n, then lines "i < j".
  // '#' starts a comment.  Errors carry the line number.
  static Poset parse(std::string_view text);

  // chain:n, antichain:n, diamond, vee, wedge, chain+point
  static std::optional<Poset> builtin(std::string_view name);

  int size() const { return n_; }
  bool less(int a, int b) const { return below_[static_cast<std::size_t>(a) * n_ + b] != 0; }
  bool comparable(int a, int b) const { return less(a, b) || less(b, a); }
  int comparable_pair_count() const;

  // Vertex bijection img with a < b  <=>  img[a] < img[b].
  std::optional<std::vector<int>> isomorphism_to(const Poset& other) const;
  bool is_isomorphic(const Poset& other) const { return isomorphism_to(other).has_value(); }

  // Exhaustive; requires n <= 10.
  std::uint64_t automorphism_count() const;
  std::vector<std::vector<int>> automorphisms() const;

  // One representative per isomorphism class, n <= 5, sorted by
  // (comparable pairs, canonical matrix).
  static std::vector<Poset> catalog(int n);

  // Minimal relation matrix over all vertex permutations, as a 0/1 string.
  std::string canonical_key() const;

  std::string to_text() const;
  Poset relabeled(const std::vector<int>& img) const;  // vertex v -> img[v]

  bool operator==(const Poset&) const = default;

 private:
  int n_;
  std::vector<std::uint8_t> below_;  // n*n, below_[a*n+b] = (a < b)
};

// Parses a builtin name or the poset file format.
Poset poset_from_spec(std::string_view spec);

// The poset coded by a word set: vertices are the words in lex order,
// a < b iff precedes holds between the corresponding words.
std::pair<Poset, std::vector<Word>> word_poset(const WordSet& s);

}  // namespace ramsey
