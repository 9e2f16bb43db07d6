#include <doctest.h>

#include <random>

#include "ramsey/coding.hpp"
#include "ramsey/envelopes.hpp"
#include "test_util.hpp"

using namespace ramsey;

namespace {
Word W(const char* s) { return Word::parse(s); }
WordSet WS(std::initializer_list<const char*> ws) {
  WordSet out;
  for (const char* s : ws) out.push_back(W(s));
  return normalized(out);
}
}  // namespace

TEST_CASE("interesting levels") {
  CHECK(interesting_levels(WS({"XR", "RXX"})) == std::vector<std::size_t>{0, 1, 2, 3});
  CHECK(interesting_levels(WS({"XX"})) == std::vector<std::size_t>{2});
  CHECK(interesting_levels(WS({"XR"})) == std::vector<std::size_t>{2});
  // a duplicated character never creates an interesting level
  std::mt19937 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    WordSet s;
    std::size_t count = 1 + trial % 4;
    std::size_t len = 2 + trial % 5;
    for (std::size_t i = 0; i < count; ++i) s.push_back(testutil::random_word_of(rng, len));
    s = normalized(s);
    std::size_t dup = trial % len;
    WordSet doubled;
    for (const Word& w : s) {
      std::string rep;
      for (std::size_t i = 0; i < w.size(); ++i) {
        rep.push_back(static_cast<char>(w[i]));
        if (i == dup) rep.push_back(static_cast<char>(w[i]));
      }
      doubled.push_back(Word::from_raw(rep));
    }
    auto levels = interesting_levels(normalized(doubled));
    CHECK(!std::binary_search(levels.begin(), levels.end(), dup + 1));
  }
}

TEST_CASE("tau") {
  CHECK(tau(WS({"XX"})).type == WS({"-"}));
  CHECK(tau(WS({"XR"})).type == WS({"-"}));
  CHECK(tau(WS({"XR", "RXX"})).type == WS({"XR", "RXX"}));

  // idempotence
  std::mt19937 rng(9);
  for (int trial = 0; trial < 1000; ++trial) {
    WordSet s;
    std::size_t count = 1 + trial % 5;
    for (std::size_t i = 0; i < count; ++i) s.push_back(testutil::random_word(rng, 8));
    s = normalized(s);
    WordSet t = tau(s).type;
    CHECK(tau(t).type == t);
  }
}

TEST_CASE("diaries are tau-fixed and closed under sub-diaries") {
  std::mt19937 rng(31);
  for (const char* name : {"antichain:2", "chain:2", "vee", "wedge", "chain:3", "diamond"}) {
    Poset q = *Poset::builtin(name);
    auto diaries = testutil::sample_diaries(q, 60);
    for (const auto& d : diaries) {
      CHECK(tau(d.words).type == d.words);
      // random nonempty subset
      std::uniform_int_distribution<std::size_t> pick(0, d.words.size() - 1);
      WordSet sub;
      std::size_t take = 1 + pick(rng);
      for (std::size_t i = 0; i < take; ++i) sub.push_back(d.words[pick(rng)]);
      sub = normalized(sub);
      WordSet reduced = tau(sub).type;
      auto res = validate_diary(reduced);
      REQUIRE(res.valid);
      auto [p1, w1] = word_poset(reduced);
      auto [p2, w2] = word_poset(sub);
      REQUIRE(p1.is_isomorphic(p2));
    }
  }
}

TEST_CASE("boring extensions: frozen small cases") {
  CHECK(boring_extensions(WS({"X"})) == std::vector<Word>{W("L"), W("X"), W("R")});
  auto pi = boring_extensions(WS({"X", "R"}));
  auto has = [&](const char* e) {
    return std::find(pi.begin(), pi.end(), W(e)) != pi.end();
  };
  CHECK(has("XX"));
  CHECK(has("XR"));
  CHECK(!has("LR"));
  CHECK(!has("RX"));
  // direct check of the definition on all 9 candidates
  for (const Word& e : all_words_of_length(2))
    CHECK(has(e.str().c_str()) == is_boring_extension(WS({"X", "R"}), e));
  // perp pair: no extension may relate it
  for (const Word& e : boring_extensions(WS({"XR", "RX"}))) {
    WordSet ext = append_level(WS({"XR", "RX"}), e);
    CHECK(perp(ext[0], ext[1]));
  }
  CHECK_THROWS_AS(boring_extensions(WS({"-"})), std::invalid_argument);
  // an incompatible pair keeps its structure under every extension
  CHECK(boring_extensions(WS({"LR", "RL"})).size() == 9);
}

TEST_CASE("extend_boring") {
  // nothing to extend when s is the full level
  WordSet full1 = all_words_of_length(1);
  for (const Word& e : boring_extensions(full1)) CHECK(extend_boring(full1, e) == e);

  // {X} with (R): the constructed extension keeps R at X and is boring
  Word e1 = extend_boring(WS({"X"}), W("R"));
  CHECK(e1.size() == 3);
  CHECK(e1[1] == Letter::R);  // position of X within L < X < R
  CHECK(is_boring_extension(full1, e1));

  std::mt19937 rng(17);
  for (int trial = 0; trial < 400; ++trial) {
    std::size_t len = 1 + trial % 3;
    WordSet s;
    std::size_t count = 1 + trial % 3;
    for (std::size_t i = 0; i < count; ++i) s.push_back(testutil::random_word_of(rng, len));
    s = normalized(s);
    bool comp = true;
    for (std::size_t i = 0; i < s.size() && comp; ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j)
        if (!compatible(s[i], s[j])) {
          comp = false;
          break;
        }
    if (!comp) continue;
    auto pis = boring_extensions(s);
    if (pis.empty()) continue;
    const Word& e = pis[trial % pis.size()];
    Word big = extend_boring(s, e);
    CHECK(is_boring_extension(all_words_of_length(len), big));
    // restriction to s equals e
    WordSet full = all_words_of_length(len);
    for (std::size_t i = 0; i < s.size(); ++i) {
      auto it = std::lower_bound(full.begin(), full.end(), s[i]);
      CHECK(big[static_cast<std::size_t>(it - full.begin())] == e[i]);
    }
  }

  CHECK_THROWS_AS(extend_boring(WS({"X", "R"}), W("LR")), std::invalid_argument);
}

TEST_CASE("lift_boring") {
  WordSet full1 = all_words_of_length(1);
  for (const Word& e : boring_extensions(full1)) {
    CHECK(lift_boring(e, 1, 1) == e);
    Word lifted = lift_boring(e, 1, 2);
    CHECK(lifted.size() == 9);
    CHECK(is_boring_extension(all_words_of_length(2), lifted));
    // letters replicate across the three extensions of each length-1 word
    for (std::size_t i = 0; i < 9; ++i) CHECK(lifted[i] == e[i / 3]);
  }
  // lifting a boring extension of the full level of length 2 to length 3
  auto pis2 = boring_extensions(all_words_of_length(2));
  REQUIRE(!pis2.empty());
  for (std::size_t i = 0; i < std::min<std::size_t>(pis2.size(), 4); ++i)
    CHECK(is_boring_extension(all_words_of_length(3), lift_boring(pis2[i], 2, 3)));
  CHECK_THROWS_AS(lift_boring(W("LXR"), 1, 5), std::invalid_argument);
}

TEST_CASE("shape-preserving") {
  // the identity on any finite set
  std::mt19937 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::pair<Word, Word>> f;
    for (int i = 0; i < 4; ++i) {
      Word w = testutil::random_word(rng, 6);
      f.emplace_back(w, w);
    }
    CHECK(is_shape_preserving(f));
  }
  // the strong-subtree example that is not shape-preserving
  std::vector<std::pair<Word, Word>> g{
      {W("-"), W("-")}, {W("L"), W("LL")}, {W("X"), W("XR")}, {W("R"), W("RR")}};
  CHECK(!is_shape_preserving(g));
  // the tripling map on all words of length <= 2
  std::vector<std::pair<Word, Word>> d;
  for (std::size_t l = 0; l <= 2; ++l)
    for (const Word& w : all_words_of_length(l)) d.emplace_back(w, triple(w));
  CHECK(is_shape_preserving(d));
}

TEST_CASE("shape-preserving consequences on event-built maps") {
  // maps built by running the same event sequence from two different starts
  // are shape-preserving and preserve relations and compatibility
  Poset q = *Poset::builtin("chain+point");
  auto diaries = testutil::sample_diaries(q, 12);
  for (const auto& d : diaries) {
    // f maps each closure word of the diary to the tripled word; composition
    // with another shape-preserving map stays shape-preserving
    WordSet closed = closure(d.words);
    std::vector<std::pair<Word, Word>> f;
    for (const Word& w : closed) f.emplace_back(w, triple(w));
    CHECK(is_shape_preserving(f));
    std::vector<std::pair<Word, Word>> ff;
    for (const Word& w : closed) ff.emplace_back(w, triple(triple(w)));
    CHECK(is_shape_preserving(ff));
    for (const auto& [a, fa] : f)
      for (const auto& [b, fb] : f) {
        if (a.size() == b.size()) {
          CHECK(perp(a, b) == perp(fa, fb));
          CHECK((a < b) == (fa < fb));
        }
        CHECK(precedes(a, b).has_value() == precedes(fa, fb).has_value());
        if (compatible(a, b)) CHECK(compatible(fa, fb));
      }
  }
}

TEST_CASE("triple") {
  CHECK(triple(W("-")) == W("-"));
  CHECK(triple(W("L")) == W("LLL"));
  CHECK(triple(W("XR")) == W("XXXRRR"));
}
