#include "ramsey/diaries.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <condition_variable>
#include <mutex>
#include <span>
#include <sstream>
#include <thread>

#include "ramsey/envelopes.hpp"

namespace ramsey {

std::string_view to_string(EventKind k) {
  switch (k) {
    case EventKind::Leaf: return "leaf";
    case EventKind::Split: return "split";
    case EventKind::NewPerp: return "new-perp";
    case EventKind::NewPrec: return "new-prec";
  }
  return "?";
}

std::string Event::str() const {
  std::string out{to_string(kind)};
  out += "(" + a.str();
  if (kind == EventKind::NewPerp || kind == EventKind::NewPrec) out += ", " + b.str();
  out += ")";
  return out;
}

LevelStructure::LevelStructure(WordSet words) : words_(normalized(std::move(words))) {
  for (const Word& w : words_)
    if (w.size() != words_.front().size())
      throw std::invalid_argument("level structure: words of unequal length");
}

PairRelation LevelStructure::relation(std::size_t i, std::size_t j) const {
  return relation_summary(words_[i], words_[j]);
}

std::vector<AxiomViolation> check_level_axioms(const LevelStructure& ls) {
  std::vector<AxiomViolation> out;
  const WordSet& s = ls.words();
  std::size_t n = s.size();
  auto prec = [&](std::size_t i, std::size_t j) { return precedes_eq(s[i], s[j]); };
  auto dom = [&](std::size_t i, std::size_t j) { return dominated(s[i], s[j]); };

  // P1: prec is a partial order (reflexive by definition; check antisymmetry
  // and transitivity).
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && prec(i, j) && prec(j, i))
        out.push_back({"P1", {s[i], s[j]}, "prec antisymmetry fails"});
      for (std::size_t k = 0; k < n; ++k)
        if (prec(i, j) && prec(j, k) && !prec(i, k))
          out.push_back({"P1", {s[i], s[j], s[k]}, "prec transitivity fails"});
    }
  // P2: dom is a partial order.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && dom(i, j) && dom(j, i))
        out.push_back({"P2", {s[i], s[j]}, "dom antisymmetry fails"});
      for (std::size_t k = 0; k < n; ++k)
        if (dom(i, j) && dom(j, k) && !dom(i, k))
          out.push_back({"P2", {s[i], s[j], s[k]}, "dom transitivity fails"});
    }
  // P3: lex is linear: sorted unique words, so only equality could break it.
  for (std::size_t i = 1; i < n; ++i)
    if (!(s[i - 1] < s[i])) out.push_back({"P3", {s[i - 1], s[i]}, "lex not strict"});
  // P4/P5: lex extends prec and dom.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (prec(i, j) && !(s[i] < s[j]))
        out.push_back({"P4", {s[i], s[j]}, "prec not within lex"});
      if (dom(i, j) && !(s[i] < s[j]))
        out.push_back({"P5", {s[i], s[j]}, "dom not within lex"});
    }
  // P6: mixed transitivity (strict prec in the hypothesis; the reflexive
  // reading would collapse dom into prec).
  auto sprec = [&](std::size_t i, std::size_t j) { return precedes(s[i], s[j]).has_value(); };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (sprec(i, j) && dom(j, k) && !precedes_eq(s[i], s[k]))
          out.push_back({"P6", {s[i], s[j], s[k]}, "prec;dom fails"});
        if (dom(i, j) && sprec(j, k) && !precedes_eq(s[i], s[k]))
          out.push_back({"P6", {s[i], s[j], s[k]}, "dom;prec fails"});
      }
  // P7: under mutual compatibility, prec implies dom.
  bool all_compatible = true;
  for (std::size_t i = 0; i < n && all_compatible; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!compatible(s[i], s[j])) {
        all_compatible = false;
        break;
      }
  if (all_compatible)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j && prec(i, j) && !dom(i, j))
          out.push_back({"P7", {s[i], s[j]}, "prec without dom"});
  return out;
}

namespace {

using Level = std::span<const Word>;

std::size_t index_of(Level level, const Word& w, const char* what) {
  auto it = std::lower_bound(level.begin(), level.end(), w);
  if (it == level.end() || *it != w)
    throw DiaryError(std::string(what) + ": word " + w.str() + " not in level");
  return static_cast<std::size_t>(it - level.begin());
}

void check_level_shape(Level level) {
  if (level.empty()) throw DiaryError("empty level");
  for (std::size_t i = 0; i < level.size(); ++i) {
    if (level[i].size() != level.front().size())
      throw DiaryError("level words of unequal length");
    if (i > 0 && !(level[i - 1] < level[i])) throw DiaryError("level not lex-sorted");
  }
}

// Core of event application; assumes a checked level.
void ext_into(Level level, const Event& e, std::vector<EventExtension>& ext) {
  std::size_t n = level.size();
  ext.assign(n, EventExtension{});
  auto one = [&](std::size_t i, Letter c) {
    ext[i].count = 1;
    ext[i].letters[0] = c;
  };
  switch (e.kind) {
    case EventKind::Leaf: {
      std::size_t wi = index_of(level, e.a, "leaf");
      for (std::size_t i = 0; i < n; ++i) {
        if (i == wi) continue;
        if (!related(level[i], level[wi]))
          throw DiaryError("leaf: " + e.a.str() + " unrelated to " + level[i].str());
        one(i, Letter::X);
      }
      break;
    }
    case EventKind::Split: {
      std::size_t wi = index_of(level, e.a, "split");
      for (std::size_t i = 0; i < n; ++i) {
        if (i < wi)
          one(i, Letter::X);
        else if (i == wi) {
          ext[i].count = 2;
          ext[i].letters[0] = Letter::X;
          ext[i].letters[1] = Letter::R;
        } else
          one(i, Letter::R);
      }
      break;
    }
    case EventKind::NewPerp: {
      std::size_t vi = index_of(level, e.a, "new-perp");
      std::size_t wi = index_of(level, e.b, "new-perp");
      if (vi >= wi) throw DiaryError("new-perp: v must be lex-smaller than w");
      if (relation_summary(level[vi], level[wi]) != PairRelation::Unrelated)
        throw DiaryError("new-perp: pair " + e.a.str() + ", " + e.b.str() + " already related");
      for (std::size_t i = vi + 1; i < wi; ++i)
        if (!perp(level[i], level[vi]) && !perp(level[i], level[wi]))
          throw DiaryError("new-perp: condition (A2) fails at " + level[i].str());
      for (std::size_t i = 0; i < n; ++i) {
        if (i < vi)
          one(i, Letter::X);
        else if (i == vi)
          one(i, Letter::R);
        else if (i < wi)
          one(i, perp(level[i], level[vi]) ? Letter::X : Letter::R);
        else if (i == wi)
          one(i, Letter::X);
        else
          one(i, Letter::R);
      }
      break;
    }
    case EventKind::NewPrec: {
      std::size_t vi = index_of(level, e.a, "new-prec");
      std::size_t wi = index_of(level, e.b, "new-prec");
      if (vi >= wi) throw DiaryError("new-prec: v must be lex-smaller than w");
      if (relation_summary(level[vi], level[wi]) != PairRelation::Unrelated)
        throw DiaryError("new-prec: pair " + e.a.str() + ", " + e.b.str() + " already related");
      for (std::size_t i = 0; i < vi; ++i)
        if (!precedes(level[i], level[wi]) && !perp(level[i], level[vi]))
          throw DiaryError("new-prec: condition (B1) fails at " + level[i].str());
      for (std::size_t i = wi + 1; i < n; ++i)
        if (!precedes(level[vi], level[i]) && !perp(level[wi], level[i]))
          throw DiaryError("new-prec: condition (B2) fails at " + level[i].str());
      for (std::size_t i = 0; i < n; ++i) {
        if (i < vi)
          one(i, perp(level[i], level[vi]) ? Letter::X : Letter::L);
        else if (i == vi)
          one(i, Letter::L);
        else if (i < wi)
          one(i, Letter::X);
        else if (i == wi)
          one(i, Letter::R);
        else
          one(i, perp(level[wi], level[i]) ? Letter::X : Letter::R);
      }
      break;
    }
  }
}

// The unique event turning cur into next; both sorted same-length levels.
// Tests all four shapes against the letters derived from the parent map so
// that "precisely one" is actually enforced.
Event classify_core(Level cur, Level next) {
  std::size_t n = cur.size();
  thread_local std::vector<EventExtension> got, want;
  got.assign(n, EventExtension{});
  {
    std::size_t i = 0;
    for (const Word& w : next) {
      if (w.size() != cur.front().size() + 1)
        throw DiaryError("no event shape matches the level transition");
      while (i < n && !cur[i].is_prefix_of(w)) ++i;
      if (i >= n || got[i].count >= 2)
        throw DiaryError("no event shape matches the level transition");
      got[i].letters[got[i].count++] = w[w.size() - 1];
    }
  }

  auto pattern_matches = [&](const Event& e) {
    try {
      ext_into(cur, e, want);
    } catch (const DiaryError&) {
      return false;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (want[i].count != got[i].count) return false;
      for (std::uint8_t k = 0; k < want[i].count; ++k)
        if (want[i].letters[k] != got[i].letters[k]) return false;
    }
    return true;
  };

  std::vector<Event> matches;
  for (std::size_t wi = 0; wi < n; ++wi) {
    if (got[wi].count == 0 && pattern_matches({EventKind::Leaf, cur[wi], {}}))
      matches.push_back({EventKind::Leaf, cur[wi], {}});
    if (got[wi].count == 2 && pattern_matches({EventKind::Split, cur[wi], {}}))
      matches.push_back({EventKind::Split, cur[wi], {}});
  }
  if (next.size() == n)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        if (pattern_matches({EventKind::NewPerp, cur[i], cur[j]}))
          matches.push_back({EventKind::NewPerp, cur[i], cur[j]});
        if (pattern_matches({EventKind::NewPrec, cur[i], cur[j]}))
          matches.push_back({EventKind::NewPrec, cur[i], cur[j]});
      }
  if (matches.empty()) throw DiaryError("no event shape matches the level transition");
  if (matches.size() > 1) {
    std::string msg = "ambiguous level transition:";
    for (const Event& e : matches) msg += " " + e.str();
    throw DiaryError(msg);
  }
  return matches.front();
}

bool length_lex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

void event_extensions_into(const WordSet& level, const Event& e,
                           std::vector<EventExtension>& ext) {
  check_level_shape(level);
  ext_into(level, e, ext);
}

std::vector<EventExtension> event_extensions(const WordSet& level, const Event& e) {
  std::vector<EventExtension> ext;
  event_extensions_into(level, e, ext);
  return ext;
}

WordSet apply_event(const WordSet& level, const Event& e) {
  auto ext = event_extensions(level, e);
  WordSet out;
  out.reserve(level.size() + 1);
  for (std::size_t i = 0; i < level.size(); ++i)
    for (std::uint8_t k = 0; k < ext[i].count; ++k)
      out.push_back(level[i].append(ext[i].letters[k]));
  return out;  // extensions keep lex order; split children are adjacent
}

Event classify_transition(const WordSet& cur, const WordSet& next) {
  check_level_shape(cur);
  WordSet target = normalized(next);
  return classify_core(cur, target);
}

DiaryValidation validate_diary(const WordSet& s) {
  DiaryValidation result;
  WordSet words = normalized(s);
  if (words.empty()) {
    result.error = "empty word set";
    return result;
  }
  if (!is_prefix_antichain(words)) {
    result.error = "not a prefix-antichain";
    return result;
  }
  std::size_t maxlen = max_length(words);
  std::size_t maximal = 0;
  for (const Word& w : words)
    if (w.size() == maxlen) ++maximal;
  if (maximal != 1) {
    result.error = "expected exactly one word of maximal length, found " +
                   std::to_string(maximal);
    return result;
  }
  // closure ordered by (length, lex): levels become contiguous ranges
  WordSet closed;
  for (const Word& w : words)
    for (std::size_t i = 0; i <= w.size(); ++i) closed.push_back(w.prefix(i));
  std::sort(closed.begin(), closed.end(), length_lex_less);
  closed.erase(std::unique(closed.begin(), closed.end()), closed.end());

  std::size_t begin = 0;
  for (std::size_t l = 0; l < maxlen; ++l) {
    std::size_t mid = begin;
    while (mid < closed.size() && closed[mid].size() == l) ++mid;
    std::size_t end = mid;
    while (end < closed.size() && closed[end].size() == l + 1) ++end;
    Level cur(closed.data() + begin, mid - begin);
    Level next(closed.data() + mid, end - mid);
    try {
      result.events.push_back(classify_core(cur, next));
    } catch (const DiaryError& err) {
      result.error = "level " + std::to_string(l) + ": " + err.what();
      result.events.clear();
      return result;
    }
    begin = mid;
  }
  result.valid = true;
  return result;
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration of labeled diaries.
//
// Search states are abstract levels: lex-ordered nodes carrying disjoint
// nonempty vertex sets plus the pairwise relation status.  Events act on
// nodes; words are materialized alongside through the event formulas and
// every finished diary is re-validated at word level.

namespace {

enum : std::uint8_t { kUnrel = 0, kPerp = 1, kPrec = 2 };

struct AbsState {
  WordSet words;                       // current level, index = node
  std::vector<std::uint32_t> members;  // node -> bitmask of poset vertices
  std::vector<std::uint8_t> rel;       // k*k matrix, upper triangle used
  std::vector<std::pair<int, Word>> finished;

  std::uint8_t r(std::size_t i, std::size_t j) const { return rel[i * members.size() + j]; }
};

struct AbsEvent {
  EventKind kind;
  std::size_t i = 0, j = 0;
  std::uint32_t left = 0;  // split: members of the lex-smaller child
};

class Enumerator {
 public:
  Enumerator(const Poset& q, const EnumerateOptions& opts) : q_(q) {
    int limit = opts.allow_large ? 30 : opts.max_size;
    if (q.size() > limit)
      throw std::invalid_argument("enumerate: poset size " + std::to_string(q.size()) +
                                  " exceeds bound " + std::to_string(limit));
  }

  AbsState root() const {
    AbsState st;
    st.words = {Word{}};
    st.members = {(1u << q_.size()) - 1u};
    st.rel = {kUnrel};
    return st;
  }

  bool terminal(const AbsState& st) const {
    return st.words.size() == 1 && std::popcount(st.members[0]) == 1;
  }

  void candidates(const AbsState& st, std::vector<AbsEvent>& out) const {
    out.clear();
    std::size_t k = st.words.size();
    if (terminal(st)) return;
    for (std::size_t i = 0; i < k; ++i) {
      if (std::popcount(st.members[i]) != 1) continue;
      bool rel_all = true;
      for (std::size_t j = 0; j < k && rel_all; ++j)
        if (j != i && st.r(std::min(i, j), std::max(i, j)) == kUnrel) rel_all = false;
      if (rel_all) out.push_back({EventKind::Leaf, i});
    }
    for (std::size_t i = 0; i < k; ++i) {
      std::uint32_t mem = st.members[i];
      if (std::popcount(mem) < 2) continue;
      for (std::uint32_t left = 1; left < mem; ++left) {
        if ((left & mem) != left) continue;
        std::uint32_t right = mem & ~left;
        // After the split the left child stays lex-below the right child, so
        // a vertex pair ordered right < left in q can never be completed.
        bool feasible = true;
        for (int p = 0; p < q_.size() && feasible; ++p) {
          if (!(left >> p & 1)) continue;
          for (int r = 0; r < q_.size(); ++r)
            if ((right >> r & 1) && q_.less(r, p)) {
              feasible = false;
              break;
            }
        }
        if (feasible) out.push_back({EventKind::Split, i, 0, left});
      }
    }
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j) {
        if (st.r(i, j) != kUnrel) continue;
        bool a2 = true;
        for (std::size_t u = i + 1; u < j && a2; ++u)
          if (st.r(i, u) != kPerp && st.r(u, j) != kPerp) a2 = false;
        if (a2 && cross_incomparable(st.members[i], st.members[j]))
          out.push_back({EventKind::NewPerp, i, j});
        bool b1 = true;
        for (std::size_t u = 0; u < i && b1; ++u)
          if (st.r(u, j) != kPrec && st.r(u, i) != kPerp) b1 = false;
        bool b2 = true;
        for (std::size_t u = j + 1; u < k && b2; ++u)
          if (st.r(i, u) != kPrec && st.r(j, u) != kPerp) b2 = false;
        if (b1 && b2 && cross_below(st.members[i], st.members[j]))
          out.push_back({EventKind::NewPrec, i, j});
      }
  }

  AbsState apply(const AbsState& st, const AbsEvent& ev) const {
    Event we{ev.kind, st.words[ev.i],
             (ev.kind == EventKind::NewPerp || ev.kind == EventKind::NewPrec)
                 ? st.words[ev.j]
                 : Word{}};
    thread_local std::vector<EventExtension> ext;
    ext_into(st.words, we, ext);
    AbsState out;
    std::size_t k = st.words.size();
    std::size_t nk = k + (ev.kind == EventKind::Split ? 1 : 0) -
                     (ev.kind == EventKind::Leaf ? 1 : 0);
    out.finished = st.finished;
    out.words.reserve(nk);
    out.members.reserve(nk);
    thread_local std::vector<std::size_t> old_of;  // new node -> old node
    old_of.clear();
    for (std::size_t i = 0; i < k; ++i) {
      if (ext[i].count == 0) {
        out.finished.emplace_back(std::countr_zero(st.members[i]), st.words[i]);
        continue;
      }
      for (std::uint8_t c = 0; c < ext[i].count; ++c) {
        out.words.push_back(st.words[i].append(ext[i].letters[c]));
        old_of.push_back(i);
        if (ext[i].count == 2)
          out.members.push_back(ext[i].letters[c] == Letter::X ? ev.left
                                                               : (st.members[i] & ~ev.left));
        else
          out.members.push_back(st.members[i]);
      }
    }
    out.rel.assign(nk * nk, kUnrel);
    for (std::size_t a = 0; a < nk; ++a)
      for (std::size_t b = a + 1; b < nk; ++b) {
        if (old_of[a] == old_of[b]) continue;  // fresh split pair stays unrelated
        out.rel[a * nk + b] = st.r(std::min(old_of[a], old_of[b]),
                                   std::max(old_of[a], old_of[b]));
      }
    if (ev.kind == EventKind::NewPerp || ev.kind == EventKind::NewPrec) {
      std::size_t a = 0, b = 0;
      for (std::size_t x = 0; x < nk; ++x) {
        if (old_of[x] == ev.i) a = x;
        if (old_of[x] == ev.j) b = x;
      }
      out.rel[a * nk + b] = ev.kind == EventKind::NewPerp ? kPerp : kPrec;
    }
    return out;
  }

  LabeledDiary assemble(const AbsState& st) const {
    LabeledDiary d;
    d.label.resize(static_cast<std::size_t>(q_.size()));
    for (const auto& [v, w] : st.finished) d.label[static_cast<std::size_t>(v)] = w;
    d.label[static_cast<std::size_t>(std::countr_zero(st.members[0]))] = st.words[0];
    d.words = normalized(d.label);
    return d;
  }

  void check_emitted(const LabeledDiary& d) const {
    if (d.words.size() != static_cast<std::size_t>(q_.size()))
      throw std::logic_error("enumerator produced colliding labels");
    auto check = validate_diary(d.words);
    if (!check.valid)
      throw std::logic_error("enumerator produced invalid diary: " + check.error);
    for (int p = 0; p < q_.size(); ++p)
      for (int r = 0; r < q_.size(); ++r)
        if (p != r &&
            q_.less(p, r) != precedes(d.label[static_cast<std::size_t>(p)],
                                      d.label[static_cast<std::size_t>(r)]).has_value())
          throw std::logic_error("enumerator labeling is not an isomorphism");
  }

  // Depth-first; returns false when the sink requested a stop.
  bool dfs(const AbsState& st, const std::function<bool(const LabeledDiary&)>& sink,
           const std::atomic<bool>* stop) const {
    if (stop && stop->load(std::memory_order_relaxed)) return false;
    if (terminal(st)) {
      LabeledDiary d = assemble(st);
      check_emitted(d);
      return sink(d);
    }
    std::vector<AbsEvent> cands;
    candidates(st, cands);
    for (const AbsEvent& ev : cands)
      if (!dfs(apply(st, ev), sink, stop)) return false;
    return true;
  }

 private:
  bool cross_incomparable(std::uint32_t ma, std::uint32_t mb) const {
    for (int p = 0; p < q_.size(); ++p) {
      if (!(ma >> p & 1)) continue;
      for (int r = 0; r < q_.size(); ++r)
        if ((mb >> r & 1) && (q_.less(p, r) || q_.less(r, p))) return false;
    }
    return true;
  }
  bool cross_below(std::uint32_t ma, std::uint32_t mb) const {
    for (int p = 0; p < q_.size(); ++p) {
      if (!(ma >> p & 1)) continue;
      for (int r = 0; r < q_.size(); ++r)
        if ((mb >> r & 1) && !q_.less(p, r)) return false;
    }
    return true;
  }

  const Poset& q_;
};

// Splits the search into ordered tasks for the thread pool.
std::vector<AbsState> make_tasks(const Enumerator& en, std::size_t want) {
  std::vector<AbsState> frontier{en.root()};
  std::vector<AbsEvent> cands;
  while (frontier.size() < want) {
    std::vector<AbsState> next;
    bool grew = false;
    for (const AbsState& st : frontier) {
      en.candidates(st, cands);
      if (cands.empty() || en.terminal(st)) {
        next.push_back(st);
      } else {
        grew = true;
        for (const AbsEvent& ev : cands) next.push_back(en.apply(st, ev));
      }
    }
    frontier = std::move(next);
    if (!grew) break;
  }
  return frontier;
}

void run_tasks_ordered(const Enumerator& en, const std::vector<AbsState>& tasks,
                       int threads, const std::function<bool(const LabeledDiary&)>& emit) {
  std::atomic<bool> stop{false};
  std::atomic<std::size_t> next_task{0};
  std::vector<std::vector<LabeledDiary>> buffers(tasks.size());
  std::vector<char> done(tasks.size(), 0);
  std::mutex mu;
  std::condition_variable cv;

  auto worker = [&]() {
    while (true) {
      std::size_t t = next_task.fetch_add(1);
      if (t >= tasks.size() || stop.load()) break;
      std::vector<LabeledDiary> buf;
      en.dfs(tasks[t], [&](const LabeledDiary& d) {
        buf.push_back(d);
        return !stop.load(std::memory_order_relaxed);
      }, &stop);
      {
        std::lock_guard<std::mutex> lock(mu);
        buffers[t] = std::move(buf);
        done[t] = 1;
      }
      cv.notify_all();
    }
  };

  std::vector<std::thread> pool;
  for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
  for (std::size_t t = 0; t < tasks.size() && !stop.load(); ++t) {
    std::unique_lock<std::mutex> lock(mu);
    cv.wait(lock, [&] { return done[t] != 0; });
    std::vector<LabeledDiary> buf = std::move(buffers[t]);
    lock.unlock();
    for (const LabeledDiary& d : buf)
      if (!emit(d)) {
        stop.store(true);
        break;
      }
  }
  stop.store(true);
  for (auto& th : pool) th.join();
}

}  // namespace

void enumerate_labeled_diaries(const Poset& q,
                               const std::function<bool(const LabeledDiary&)>& emit,
                               const EnumerateOptions& opts) {
  Enumerator en(q, opts);
  if (q.size() == 0) return;
  if (opts.threads <= 1) {
    en.dfs(en.root(), emit, nullptr);
    return;
  }
  auto tasks = make_tasks(en, static_cast<std::size_t>(opts.threads) * 32);
  run_tasks_ordered(en, tasks, opts.threads, emit);
}

DiaryCounts count_diaries(const Poset& q, const EnumerateOptions& opts) {
  DiaryCounts counts;
  counts.aut = q.automorphism_count();
  Enumerator en(q, opts);
  if (q.size() == 0) return counts;
  std::uint64_t labeled = 0;
  if (opts.threads <= 1) {
    en.dfs(en.root(), [&](const LabeledDiary&) {
      ++labeled;
      return true;
    }, nullptr);
  } else {
    auto tasks = make_tasks(en, static_cast<std::size_t>(opts.threads) * 32);
    std::atomic<std::size_t> next_task{0};
    std::atomic<std::uint64_t> total{0};
    auto worker = [&]() {
      std::uint64_t local = 0;
      while (true) {
        std::size_t t = next_task.fetch_add(1);
        if (t >= tasks.size()) break;
        en.dfs(tasks[t], [&](const LabeledDiary&) {
          ++local;
          return true;
        }, nullptr);
      }
      total.fetch_add(local);
    };
    std::vector<std::thread> pool;
    for (int i = 0; i < opts.threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    labeled = total.load();
  }
  counts.labeled = labeled;
  if (labeled % counts.aut != 0)
    throw std::logic_error("labeled count " + std::to_string(labeled) +
                           " not divisible by |Aut| = " + std::to_string(counts.aut));
  counts.unlabeled = labeled / counts.aut;
  return counts;
}

std::uint64_t big_ramsey_degree(const Poset& q, const EnumerateOptions& opts) {
  return count_diaries(q, opts).labeled;
}

std::uint64_t sum_over_size(int n, const EnumerateOptions& opts) {
  if (n > 4 && !opts.allow_large)
    throw std::invalid_argument("sum_over_size: bound n <= 4 exceeded (opt in explicitly)");
  std::uint64_t total = 0;
  EnumerateOptions sub = opts;
  sub.max_size = std::max(sub.max_size, n);
  for (const Poset& q : Poset::catalog(n)) total += count_diaries(q, sub).unlabeled;
  return total;
}

bool is_canonical_labeling(const LabeledDiary& d,
                           const std::vector<std::vector<int>>& automorphisms) {
  for (const auto& sigma : automorphisms) {
    std::vector<Word> translated(d.label.size());
    for (std::size_t v = 0; v < d.label.size(); ++v)
      translated[v] = d.label[static_cast<std::size_t>(sigma[v])];
    if (translated < d.label) return false;
  }
  return true;
}

LabeledDiary color_embedding(const LabeledDiary& base, const std::vector<int>& subset) {
  if (base.label.empty()) throw std::invalid_argument("color_embedding: base diary unlabeled");
  if (subset.empty()) throw std::invalid_argument("color_embedding: empty subset");
  std::vector<int> verts = subset;
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  WordSet w;
  for (int v : verts) {
    if (v < 0 || static_cast<std::size_t>(v) >= base.label.size())
      throw std::invalid_argument("color_embedding: label " + std::to_string(v) + " not present");
    w.push_back(base.label[static_cast<std::size_t>(v)]);
  }
  w = normalized(w);
  auto et = tau(w);
  auto image_of = [&](const Word& x) {
    for (const auto& [from, to] : et.map)
      if (from == x) return to;
    throw std::logic_error("color_embedding: word missing from tau map");
  };
  LabeledDiary out;
  out.words = et.type;
  out.label.reserve(verts.size());
  for (int v : verts) out.label.push_back(image_of(base.label[static_cast<std::size_t>(v)]));
  return out;
}

std::string diary_to_text(const WordSet& s) {
  std::string out;
  for (const Word& w : normalized(s)) out += w.str() + "\n";
  return out;
}

std::string labeled_diary_to_text(const LabeledDiary& d) {
  std::vector<std::pair<Word, std::size_t>> rows;
  for (std::size_t v = 0; v < d.label.size(); ++v) rows.emplace_back(d.label[v], v);
  std::sort(rows.begin(), rows.end());
  std::string out;
  for (const auto& [w, v] : rows) out += std::to_string(v) + "\t" + w.str() + "\n";
  return out;
}

LabeledDiary parse_diary_text(std::string_view text) {
  LabeledDiary d;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  std::vector<std::pair<long, Word>> labeled;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos) {
      auto w = Word::try_parse(line);
      if (!w)
        throw std::invalid_argument("line " + std::to_string(lineno) + ": bad word '" + line + "'");
      d.words.push_back(*w);
    } else {
      long label;
      try {
        std::size_t used = 0;
        label = std::stol(line.substr(0, tab), &used);
        if (used != tab) throw std::invalid_argument("");
      } catch (...) {
        throw std::invalid_argument("line " + std::to_string(lineno) + ": bad label");
      }
      auto w = Word::try_parse(line.substr(tab + 1));
      if (!w) throw std::invalid_argument("line " + std::to_string(lineno) + ": bad word");
      labeled.emplace_back(label, *w);
      d.words.push_back(*w);
    }
  }
  d.words = normalized(d.words);
  if (!labeled.empty()) {
    if (labeled.size() != d.words.size())
      throw std::invalid_argument("labeled diary mixes labeled and unlabeled lines");
    d.label.resize(labeled.size());
    std::vector<bool> seen(labeled.size(), false);
    for (const auto& [v, w] : labeled) {
      if (v < 0 || static_cast<std::size_t>(v) >= labeled.size() || seen[static_cast<std::size_t>(v)])
        throw std::invalid_argument("labels must form 0.." + std::to_string(labeled.size() - 1));
      seen[static_cast<std::size_t>(v)] = true;
      d.label[static_cast<std::size_t>(v)] = w;
    }
  }
  return d;
}

}  // namespace ramsey
