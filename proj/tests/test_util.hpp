#pragma once

// Shared helpers for the unit and acceptance suites: random generators and
// the naive word-level diary generator used as a cross-check oracle.  The
// oracle grows closures through all apply_event options and is independent
// of the abstract-state enumerator it checks.

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "ramsey/diaries.hpp"
#include "ramsey/posets.hpp"
#include "ramsey/words.hpp"

namespace testutil {

using namespace ramsey;

inline Word random_word(std::mt19937& rng, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<int> letter(0, 2);
  std::string rep;
  std::size_t n = len(rng);
  rep.reserve(n);
  for (std::size_t i = 0; i < n; ++i) rep.push_back(static_cast<char>(letter(rng)));
  return Word::from_raw(std::move(rep));
}

inline Word random_word_of(std::mt19937& rng, std::size_t len) {
  std::uniform_int_distribution<int> letter(0, 2);
  std::string rep;
  rep.reserve(len);
  for (std::size_t i = 0; i < len; ++i) rep.push_back(static_cast<char>(letter(rng)));
  return Word::from_raw(std::move(rep));
}

// Random u <= v element-wise on a common length; useful for exercising the
// prec/dominated branches more often than independent sampling would.
inline std::pair<Word, Word> random_dominated_pair(std::mt19937& rng, std::size_t len) {
  std::uniform_int_distribution<int> letter(0, 2);
  std::string a(len, '\0'), b(len, '\0');
  for (std::size_t i = 0; i < len; ++i) {
    int x = letter(rng), y = letter(rng);
    a[i] = static_cast<char>(std::min(x, y));
    b[i] = static_cast<char>(std::max(x, y));
  }
  return {Word::from_raw(std::move(a)), Word::from_raw(std::move(b))};
}

inline Poset random_poset(std::mt19937& rng, int n) {
  // random linear extension order so every isomorphism type is reachable
  std::uniform_int_distribution<int> coin(0, 2);
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::pair<int, int>> rels;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng) == 0) rels.emplace_back(order[static_cast<std::size_t>(i)],
                                            order[static_cast<std::size_t>(j)]);
  return Poset::from_relations(n, rels);
}

// All valid diaries of q found by growing levels word by word through every
// applicable event, bounded by the level budget 2n - 1 + n(n-1)/2.
inline std::set<WordSet> naive_diaries(const Poset& q) {
  int n = q.size();
  std::size_t budget =
      static_cast<std::size_t>(2 * n - 1 + n * (n - 1) / 2);
  std::set<WordSet> found;

  struct Frame {
    WordSet level;
    WordSet members;
    int splits;
  };
  std::vector<Frame> stack{{{Word{}}, {}, 0}};
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    if (f.level.size() == 1) {
      WordSet diary = f.members;
      diary.push_back(f.level.front());
      diary = normalized(diary);
      if (static_cast<int>(diary.size()) == n && validate_diary(diary).valid) {
        auto [p, words] = word_poset(diary);
        if (p.is_isomorphic(q)) found.insert(diary);
      }
    }
    if (f.level.front().size() >= budget) continue;
    if (static_cast<int>(f.members.size()) >= n) continue;
    std::vector<Event> cands;
    for (const Word& w : f.level) {
      cands.push_back({EventKind::Leaf, w, {}});
      if (f.splits < n - 1) cands.push_back({EventKind::Split, w, {}});
    }
    for (std::size_t i = 0; i < f.level.size(); ++i)
      for (std::size_t j = i + 1; j < f.level.size(); ++j) {
        cands.push_back({EventKind::NewPerp, f.level[i], f.level[j]});
        cands.push_back({EventKind::NewPrec, f.level[i], f.level[j]});
      }
    for (const Event& e : cands) {
      if (e.kind == EventKind::Leaf && f.level.size() == 1) continue;
      try {
        WordSet next = apply_event(f.level, e);
        Frame nf{next, f.members, f.splits + (e.kind == EventKind::Split ? 1 : 0)};
        if (e.kind == EventKind::Leaf) nf.members.push_back(e.a);
        stack.push_back(std::move(nf));
      } catch (const DiaryError&) {
      }
    }
  }
  return found;
}

// The abstract enumerator's unlabeled diary sets, for comparison.
inline std::set<WordSet> enumerated_diaries(const Poset& q, int threads = 1) {
  std::set<WordSet> out;
  EnumerateOptions opts;
  opts.threads = threads;
  enumerate_labeled_diaries(q, [&](const LabeledDiary& d) {
    out.insert(d.words);
    return true;
  }, opts);
  return out;
}

// Collects up to `cap` labeled diaries.
inline std::vector<LabeledDiary> sample_diaries(const Poset& q, std::size_t cap) {
  std::vector<LabeledDiary> out;
  enumerate_labeled_diaries(q, [&](const LabeledDiary& d) {
    out.push_back(d);
    return out.size() < cap;
  });
  return out;
}

}  // namespace testutil
