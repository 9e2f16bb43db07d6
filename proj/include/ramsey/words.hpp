#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ramsey {

// Alphabet {L, X, R} with L < X < R.
enum class Letter : char { L = 0, X = 1, R = 2 };

inline constexpr Letter kAllLetters[3] = {Letter::L, Letter::X, Letter::R};

char to_char(Letter c);
std::optional<Letter> letter_from_char(char c);

// Finite word over {L, X, R}. Immutable value type; all operations are pure.
// Stored as raw bytes 0/1/2 so that std::string comparison is exactly the
// lexicographic order (a proper prefix compares less).
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters);

  // Text form: letters "LXR" concatenated, "-" for the empty word.
  static Word parse(std::string_view text);
  static std::optional<Word> try_parse(std::string_view text);
  static Word from_raw(std::string rep);

  std::size_t size() const { return rep_.size(); }
  bool empty() const { return rep_.empty(); }
  Letter at(std::size_t i) const { return static_cast<Letter>(rep_[i]); }
  Letter operator[](std::size_t i) const { return at(i); }

  // w|_i; the length is clamped to min(i, |w|).
  Word prefix(std::size_t len) const;
  Word append(Letter c) const;
  bool is_prefix_of(const Word& other) const;

  std::string str() const;
  const std::string& raw() const { return rep_; }

  auto operator<=>(const Word&) const = default;

 private:
  std::string rep_;
};

// The strict order u "prec" v of the word poset: least index i with
// (u_i, v_i) = (L, R) and u_j <= v_j for all j < i.  Returns the witness.
std::optional<std::size_t> precedes(const Word& u, const Word& v);

// Reflexive closure of precedes.
bool precedes_eq(const Word& u, const Word& v);

// Element-wise order on a fixed level.  Throws std::invalid_argument on
// length mismatch; the relation is defined per level only.
bool dominated(const Word& u, const Word& v);

// perp: neither dominated(u,v) nor dominated(v,u).  Same length required.
bool perp(const Word& u, const Word& v);

enum class PairRelation {
  Unrelated,
  Prec,
  Succ,
  PerpOnly,
  PrecAndPerp,
  SuccAndPerp,
};

std::string_view to_string(PairRelation r);

// Which of u prec v, v prec u, u perp v hold. Same length required.
PairRelation relation_summary(const Word& u, const Word& v);

// u, v related: at least one of prec (either way) or perp holds.
bool related(const Word& u, const Word& v);

// Compatibility of a word pair (symmetric; the pair is lex-ordered
// internally).  For lex-ordered u <= v: no position (R, L), and a position
// (L, R) forces element-wise domination on the common length.
bool compatible(const Word& u, const Word& v);

// A finite set of words, kept lex-sorted and duplicate-free.
using WordSet = std::vector<Word>;

WordSet normalized(WordSet s);
bool is_normalized(const WordSet& s);

// All prefixes of members of s.
WordSet closure(const WordSet& s);
// Level l of closure(s).
WordSet level_of(const WordSet& s, std::size_t l);
std::size_t max_length(const WordSet& s);
// No member is a proper initial segment of another.
bool is_prefix_antichain(const WordSet& s);

// A^e = {u^i ^ e_i} for a lex-sorted same-length level A and |e| = |A|.
WordSet append_level(const WordSet& level, const Word& e);

// All 3^len words of the given length, lex-sorted.
WordSet all_words_of_length(std::size_t len);

// Word over {L, X, R} plus parameters $0, $1, ...; every parameter below the
// parameter count occurs and first occurrences appear in increasing order.
class ParameterWord {
 public:
  ParameterWord() = default;
  static ParameterWord parse(std::string_view text);
  static ParameterWord from_word(const Word& w);
  static ParameterWord from_symbols(std::vector<int> syms);

  std::size_t size() const { return syms_.size(); }
  std::size_t param_count() const { return params_; }
  bool is_letter(std::size_t i) const { return syms_[i] < 3; }
  Letter letter_at(std::size_t i) const { return static_cast<Letter>(syms_[i]); }
  std::size_t param_at(std::size_t i) const { return static_cast<std::size_t>(syms_[i] - 3); }

  // Valid iff parameters 0..k-1 all occur with ordered first occurrences.
  bool valid() const;
  std::optional<Word> to_word() const;
  std::string str() const;

  auto operator<=>(const ParameterWord&) const = default;

 private:
  std::vector<int> syms_;  // 0..2 letter, 3+j parameter j
  std::size_t params_ = 0;
};

// W(U): replace each $i (i < |U|) in W by U_i and truncate just before the
// first occurrence of $|U| in W.  Requires |U| <= param_count(W).
ParameterWord substitute(const ParameterWord& w, const ParameterWord& u);

}  // namespace ramsey
