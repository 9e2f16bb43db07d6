#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ramsey/diaries.hpp"
#include "ramsey/words.hpp"

namespace ramsey {

// --- Devlin embedding types: words over {L, R}, Leaf and Splitting only ---

// True when every letter of every word is L or R.
bool is_binary_lr(const WordSet& s);

// Validates a Devlin embedding type: prefix-antichain, every level below the
// maximum matches exactly one of Leaf/Splitting, one maximal word.
DiaryValidation devlin_validate(const WordSet& s);

// All Devlin embedding types with n leaves, in canonical order; n <= 5.
std::vector<WordSet> devlin_enumerate(int n);

// --- Triangle-free diaries: words over {0, 1} ---

using Bits = std::string;  // characters '0'/'1'

bool is_bits(std::string_view s);

// Adjacency in the universal triangle-free word graph: |u| != |v|, the
// longer word reads 1 at the shorter's length, and no common earlier 1.
bool tri_adjacent(const Bits& u, const Bits& v);

// perp: common 1 below the shorter length, or one word has no 1 below the
// other's length.
bool tri_perp(const Bits& u, const Bits& v);

struct Graph {
  int n = 0;
  std::vector<std::uint8_t> adj;  // n*n symmetric

  explicit Graph(int size = 0);
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
  // Format: first non-comment line n, then lines "i - j"; '#' comments.
  static Graph parse(std::string_view text);

  bool edge(int a, int b) const { return adj[static_cast<std::size_t>(a) * n + b] != 0; }
  bool has_triangle() const;
  std::optional<std::vector<int>> isomorphism_to(const Graph& other) const;
  std::uint64_t automorphism_count() const;
};

enum class TriEventKind { Leaf, Split, FirstNeighbour, NewPerp };

std::string_view to_string(TriEventKind k);

struct TriEvent {
  TriEventKind kind;
  Bits a, b;  // Leaf/Split word; NewPerp pair

  bool operator==(const TriEvent&) const = default;
  std::string str() const;
};

struct TriValidation {
  bool valid = false;
  std::string error;
  std::vector<TriEvent> events;
};

// Validates a triangle-free diary per the literal event formulas (levels of
// the closure), with the same single-maximal-word convention as poset
// diaries.
TriValidation tri_validate(const std::vector<Bits>& s);

// The graph induced on a word set by tri_adjacent.
Graph leaf_graph(const std::vector<Bits>& leaves);

// All triangle-free diaries of depth <= max_levels whose leaves induce a
// graph isomorphic to h.  Termination needs the explicit depth budget, so
// counts are lower bounds.
std::vector<std::vector<Bits>> tri_enumerate(const Graph& h, int max_levels);

// Depth-bounded labeled count: |found| * |Aut(h)|.
std::uint64_t tri_degree_lower_bound(const Graph& h, int max_levels);

}  // namespace ramsey
