#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ramsey/posets.hpp"
#include "ramsey/words.hpp"

namespace ramsey {

// Raised by event application/classification when a level is not a valid
// diary level.
class DiaryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The four per-level events of a poset-diary.
enum class EventKind { Leaf, Split, NewPerp, NewPrec };

std::string_view to_string(EventKind k);

struct Event {
  EventKind kind;
  Word a;  // Leaf/Split word, or the lex-smaller word v of a pair event
  Word b;  // the lex-larger word w of NewPerp/NewPrec

  bool operator==(const Event&) const = default;
  std::string str() const;
};

// Same-length word set together with its pairwise relations.
class LevelStructure {
 public:
  explicit LevelStructure(WordSet words);  // sorts; rejects unequal lengths
  const WordSet& words() const { return words_; }
  std::size_t size() const { return words_.size(); }
  PairRelation relation(std::size_t i, std::size_t j) const;  // i < j by lex rank

 private:
  WordSet words_;
};

struct AxiomViolation {
  std::string axiom;  // "P1".."P7"
  std::vector<Word> witness;
  std::string detail;
};

// Violations of the level-structure axioms; empty report means all hold.
// P7 is checked only when all pairs are compatible.
std::vector<AxiomViolation> check_level_axioms(const LevelStructure& ls);

// For each word of the level, the letters it is extended by: none for the
// leaf word, two for the splitting word, one otherwise.  Throws DiaryError
// when an event side condition fails.
struct EventExtension {
  std::uint8_t count = 0;
  Letter letters[2] = {Letter::L, Letter::L};
};
std::vector<EventExtension> event_extensions(const WordSet& level, const Event& e);
// Same, writing into a reusable buffer.
void event_extensions_into(const WordSet& level, const Event& e,
                           std::vector<EventExtension>& out);

// Successor level per the event's displayed formula.
WordSet apply_event(const WordSet& level, const Event& e);

// The unique event with apply_event(cur, e) == next; DiaryError if zero or
// at least two of the four shapes match.
Event classify_transition(const WordSet& cur, const WordSet& next);

struct DiaryValidation {
  bool valid = false;
  std::string error;
  std::vector<Event> events;
};

// Checks the prefix-antichain condition, classifies every level below the
// maximal length, and requires exactly one word of maximal length.
DiaryValidation validate_diary(const WordSet& s);

struct LabeledDiary {
  WordSet words;            // lex-sorted
  std::vector<Word> label;  // poset vertex -> word

  bool operator==(const LabeledDiary&) const = default;
};

struct EnumerateOptions {
  int max_size = 5;      // hard bound unless allow_large
  bool allow_large = false;
  int threads = 1;       // <=1: sequential; emission order is identical regardless
};

// Streams every labeled diary (S, f) with f an isomorphism q -> (S, prec),
// each exactly once, in a canonical depth-first order.  Every emitted S is
// re-validated at word level.  The callback may return false to stop.
void enumerate_labeled_diaries(const Poset& q,
                               const std::function<bool(const LabeledDiary&)>& emit,
                               const EnumerateOptions& opts = {});

struct DiaryCounts {
  std::uint64_t labeled = 0;
  std::uint64_t unlabeled = 0;
  std::uint64_t aut = 0;
};

// labeled = |T_lab(q)|, unlabeled = labeled / |Aut(q)| (exact division).
DiaryCounts count_diaries(const Poset& q, const EnumerateOptions& opts = {});

// The big Ramsey degree |T(q)| * |Aut(q)| = the labeled count.
std::uint64_t big_ramsey_degree(const Poset& q, const EnumerateOptions& opts = {});

// Sum of unlabeled |T(q)| over all isomorphism classes of size n (n <= 4
// unless allow_large).
std::uint64_t sum_over_size(int n, const EnumerateOptions& opts = {});

// True when d.label is lex-least among its Aut(q)-translates; selects one
// labeling per unlabeled diary.
bool is_canonical_labeling(const LabeledDiary& d, const std::vector<std::vector<int>>& automorphisms);

// Restriction coloring: the embedding type of the base words labeled by the
// subset, with the induced labeling (vertex indices are kept).
LabeledDiary color_embedding(const LabeledDiary& base, const std::vector<int>& subset);

// Diary file format: one word per line; labeled files use "label<TAB>word".
std::string diary_to_text(const WordSet& s);
std::string labeled_diary_to_text(const LabeledDiary& d);
// Accepts either format; labels (when present) fill out->label.
LabeledDiary parse_diary_text(std::string_view text);

}  // namespace ramsey
