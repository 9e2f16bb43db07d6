#include <doctest.h>

#include <random>

#include "ramsey/words.hpp"
#include "test_util.hpp"

using namespace ramsey;

namespace {
Word W(const char* s) { return Word::parse(s); }
}

TEST_CASE("lex order") {
  CHECK(W("L") < W("X"));
  CHECK(W("X") < W("R"));
  CHECK(W("-") == W("-"));
  CHECK(W("XR") > W("XL"));
  // a proper initial segment compares less
  CHECK(W("X") < W("XR"));
  CHECK(W("-") < W("L"));
}

TEST_CASE("word basics") {
  CHECK(W("XRL").prefix(2) == W("XR"));
  CHECK(W("XRL").prefix(7) == W("XRL"));
  CHECK(W("XRL").prefix(0) == Word{});
  CHECK(W("X").append(Letter::R) == W("XR"));
  CHECK(W("X").is_prefix_of(W("XR")));
  CHECK(!W("R").is_prefix_of(W("XR")));
  CHECK(W("-").str() == "-");
  CHECK(W("LXR").str() == "LXR");
  CHECK(!Word::try_parse("ABC").has_value());
  CHECK(!Word::try_parse("").has_value());
}

TEST_CASE("precedes with witness") {
  CHECK(precedes(W("LR"), W("RL")) == 0);
  CHECK(!precedes(W("LR"), W("LR")).has_value());
  CHECK(precedes(W("XL"), W("RRX")) == 1);  // (L,R) at 1, X <= R before
  CHECK(!precedes(W("RL"), W("LR")).has_value());
  CHECK(precedes(W("XL"), W("RRX")).has_value());
  // domination must hold before the witness
  CHECK(!precedes(W("RL"), W("LR")).has_value());
  CHECK(!precedes(W("XLR"), W("LRR")).has_value());
}

TEST_CASE("dominated and perp") {
  CHECK(dominated(W("XL"), W("RR")));
  CHECK(dominated(W("XR"), W("XR")));
  CHECK(!dominated(W("XR"), W("RX")));
  CHECK_THROWS_AS(dominated(W("X"), W("XX")), std::invalid_argument);
  CHECK(perp(W("XR"), W("RX")));
  CHECK(!perp(W("X"), W("R")));
  CHECK_THROWS_AS(perp(W("X"), W("XX")), std::invalid_argument);
}

TEST_CASE("relation summary") {
  CHECK(relation_summary(W("LR"), W("RL")) == PairRelation::PrecAndPerp);
  CHECK(relation_summary(W("XR"), W("RX")) == PairRelation::PerpOnly);
  CHECK(relation_summary(W("X"), W("R")) == PairRelation::Unrelated);
  CHECK(relation_summary(W("RL"), W("LR")) == PairRelation::SuccAndPerp);
  CHECK(relation_summary(W("XL"), W("RR")) == PairRelation::Prec);
}

TEST_CASE("compatibility") {
  CHECK(!compatible(W("LR"), W("RL")));
  CHECK(compatible(W("-"), W("RXLRX")));
  CHECK(compatible(W("XL"), W("RR")));
  CHECK(compatible(W("XRX"), W("XRX")));
  // symmetric
  CHECK(!compatible(W("RL"), W("LR")));
}

TEST_CASE("closure, level, antichain") {
  WordSet s{W("XR")};
  CHECK(closure(s) == WordSet{W("-"), W("X"), W("XR")});
  WordSet t{W("XR"), W("RXX")};
  CHECK(level_of(t, 2) == WordSet{W("XR"), W("RX")});
  CHECK(is_prefix_antichain(t));
  CHECK(!is_prefix_antichain(WordSet{W("X"), W("XR")}));
}

TEST_CASE("append_level") {
  CHECK(append_level({W("X"), W("R")}, W("LR")) == WordSet{W("XL"), W("RR")});
  CHECK(append_level({W("-")}, W("X")) == WordSet{W("X")});
  CHECK(append_level({W("X"), W("R")}, W("RX")) == WordSet{W("XR"), W("RX")});
  CHECK_THROWS_AS(append_level({W("X"), W("R")}, W("X")), std::invalid_argument);
}

TEST_CASE("parameter words") {
  auto pw = ParameterWord::parse("$0X$1R");
  CHECK(pw.param_count() == 2);
  CHECK(pw.str() == "$0X$1R");
  CHECK_THROWS_AS(ParameterWord::parse("$1X$0"), std::invalid_argument);  // order
  CHECK_THROWS_AS(ParameterWord::parse("$0$2"), std::invalid_argument);   // gap
  CHECK(ParameterWord::parse("-").param_count() == 0);

  auto sub = [](const char* w, const char* u) {
    return substitute(ParameterWord::parse(w), ParameterWord::parse(u)).str();
  };
  CHECK(sub("$0$0$1", "LR") == "LLR");
  CHECK(sub("$0X$1R", "R") == "RX");
  CHECK(sub("RR$0", "-") == "RR");
  // substituting a parameter word keeps parameters in place
  CHECK(sub("$0X$1", "L$0") == "LX$0");
  CHECK_THROWS_AS(substitute(ParameterWord::parse("$0"), ParameterWord::parse("LR")),
                  std::invalid_argument);
}

TEST_CASE("prec transitivity, witness monotonicity, lex extension") {
  std::mt19937 rng(20260810);
  int checked_transitive = 0;
  for (int trial = 0; trial < 20000; ++trial) {
    Word u, v, w;
    if (trial % 2 == 0) {
      u = testutil::random_word(rng, 12);
      v = testutil::random_word(rng, 12);
      w = testutil::random_word(rng, 12);
    } else {
      // correlated triples so the antecedent fires
      std::size_t len = 2 + trial % 9;
      auto [a, b] = testutil::random_dominated_pair(rng, len);
      auto [c, d] = testutil::random_dominated_pair(rng, len);
      u = a;
      v = b;
      w = d;
    }
    auto uv = precedes(u, v);
    if (uv) CHECK(u < v);  // P4 on arbitrary lengths
    CHECK(!precedes(u, u).has_value());
    auto vw = precedes(v, w);
    if (uv && vw) {
      auto uw = precedes(u, w);
      REQUIRE(uw.has_value());
      CHECK(*uw <= std::min(*uv, *vw));
      ++checked_transitive;
    }
  }
  CHECK(checked_transitive > 100);  // the generator must actually exercise the law
}

TEST_CASE("equal length: prec and compatible imply dominated") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20000; ++trial) {
    std::size_t len = 1 + trial % 10;
    Word u = testutil::random_word_of(rng, len);
    Word v = testutil::random_word_of(rng, len);
    if (precedes(u, v) && compatible(u, v)) CHECK(dominated(u, v));
  }
}

TEST_CASE("safe extensions") {
  std::mt19937 rng(99);
  int seen = 0;
  for (int trial = 0; trial < 20000; ++trial) {
    std::size_t len = trial % 9;
    Word u = testutil::random_word_of(rng, len);
    Word v = testutil::random_word_of(rng, len);
    if (!(u < v)) continue;
    for (Letter c : kAllLetters)
      for (Letter cc : kAllLetters) {
        if (c > cc) continue;
        if (c == Letter::L && cc == Letter::R) continue;
        Word uc = u.append(c), vc = v.append(cc);
        CHECK(perp(u, v) == perp(uc, vc));
        CHECK(precedes(u, v).has_value() == precedes(uc, vc).has_value());
        if (compatible(u, v)) CHECK(compatible(uc, vc));
        ++seen;
      }
  }
  CHECK(seen > 1000);
}

TEST_CASE("substitution composes") {
  std::mt19937 rng(123);
  std::uniform_int_distribution<int> letter(0, 2);
  std::uniform_int_distribution<int> coin(0, 3);
  auto random_param_word = [&](std::size_t params, std::size_t extra) {
    // parameters in order with random letters interleaved
    std::vector<int> syms;
    for (std::size_t p = 0; p < params; ++p) {
      for (std::size_t e = 0; e < extra; ++e)
        if (coin(rng) == 0) syms.push_back(letter(rng));
      syms.push_back(3 + static_cast<int>(p));
      if (coin(rng) == 0) syms.push_back(3 + static_cast<int>(p));
    }
    for (std::size_t e = 0; e < extra; ++e)
      if (coin(rng) == 0) syms.push_back(letter(rng));
    return ParameterWord::from_symbols(std::move(syms));
  };
  for (int trial = 0; trial < 2000; ++trial) {
    ParameterWord w = random_param_word(3 + trial % 3, 2);
    ParameterWord u = random_param_word(2, 1);
    if (u.size() > w.param_count()) continue;
    ParameterWord v = random_param_word(1, 1);
    if (v.size() > u.param_count()) continue;
    CHECK(substitute(substitute(w, u), v) == substitute(w, substitute(u, v)));
  }
}
