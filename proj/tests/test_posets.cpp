#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "ramsey/posets.hpp"
#include "test_util.hpp"

using namespace ramsey;

namespace {

// Independent oracle: count order-preserving self-bijections by scanning all
// n! permutations directly.
std::uint64_t aut_by_permutations(const Poset& p) {
  std::vector<int> perm(static_cast<std::size_t>(p.size()));
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t count = 0;
  do {
    bool ok = true;
    for (int a = 0; a < p.size() && ok; ++a)
      for (int b = 0; b < p.size(); ++b)
        if (p.less(a, b) != p.less(perm[static_cast<std::size_t>(a)],
                                   perm[static_cast<std::size_t>(b)])) {
          ok = false;
          break;
        }
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

}  // namespace

TEST_CASE("parsing") {
  Poset c2 = Poset::parse("2\n0 < 1\n");
  CHECK(c2.less(0, 1));
  CHECK(!c2.less(1, 0));
  CHECK(Poset::builtin("antichain:3")->size() == 3);
  CHECK_THROWS_AS(Poset::parse("2\n0 < 1\n1 < 0\n"), std::invalid_argument);
  CHECK_THROWS_AS(Poset::parse("2\n0 ! 1\n"), std::invalid_argument);
  CHECK_THROWS_AS(Poset::parse("2\n0 < 5\n"), std::invalid_argument);
  // comments and transitive closure
  Poset c3 = Poset::parse("# chain\n3\n0 < 1\n1 < 2\n");
  CHECK(c3.less(0, 2));
}

TEST_CASE("builtins") {
  CHECK(Poset::builtin("chain:4")->comparable_pair_count() == 6);
  CHECK(Poset::builtin("antichain:4")->comparable_pair_count() == 0);
  CHECK(Poset::builtin("diamond")->size() == 4);
  CHECK(Poset::builtin("vee")->comparable_pair_count() == 2);
  CHECK(Poset::builtin("wedge")->comparable_pair_count() == 2);
  CHECK(Poset::builtin("chain+point")->comparable_pair_count() == 1);
  CHECK(!Poset::builtin("nonesuch").has_value());
}

TEST_CASE("isomorphism") {
  Poset c2 = *Poset::builtin("chain:2");
  Poset c2r = Poset::from_relations(2, {{1, 0}});
  auto iso = c2.isomorphism_to(c2r);
  REQUIRE(iso.has_value());
  CHECK((*iso)[0] == 1);
  CHECK((*iso)[1] == 0);
  CHECK(!Poset::builtin("antichain:2")->is_isomorphic(c2));
  Poset d = *Poset::builtin("diamond");
  CHECK(d.is_isomorphic(d));
}

TEST_CASE("automorphism counts") {
  for (int n = 1; n <= 5; ++n) CHECK(Poset::builtin("chain:" + std::to_string(n))->automorphism_count() == 1);
  CHECK(Poset::builtin("antichain:3")->automorphism_count() == 6);
  CHECK(Poset::builtin("antichain:4")->automorphism_count() == 24);
  CHECK(Poset::builtin("diamond")->automorphism_count() == 2);
  CHECK_THROWS_AS(Poset(11).automorphism_count(), std::invalid_argument);
}

TEST_CASE("automorphism count matches the permutation oracle") {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 60; ++trial) {
    Poset p = testutil::random_poset(rng, 1 + trial % 6);
    CHECK(p.automorphism_count() == aut_by_permutations(p));
    CHECK(p.automorphisms().size() == aut_by_permutations(p));
  }
}

TEST_CASE("catalog sizes") {
  CHECK(Poset::catalog(1).size() == 1);
  CHECK(Poset::catalog(2).size() == 2);
  CHECK(Poset::catalog(3).size() == 5);
  CHECK(Poset::catalog(4).size() == 16);
  CHECK_THROWS_AS(Poset::catalog(6), std::invalid_argument);
}

TEST_CASE("catalog is a complete irredundant set of representatives") {
  for (int n = 1; n <= 4; ++n) {
    auto classes = Poset::catalog(n);
    for (std::size_t i = 0; i < classes.size(); ++i)
      for (std::size_t j = i + 1; j < classes.size(); ++j)
        CHECK(!classes[i].is_isomorphic(classes[j]));
    std::mt19937 rng(1000 + n);
    for (int trial = 0; trial < 40; ++trial) {
      Poset p = testutil::random_poset(rng, n);
      int hits = 0;
      for (const Poset& q : classes)
        if (p.is_isomorphic(q)) ++hits;
      CHECK(hits == 1);
    }
  }
}

TEST_CASE("isomorphism is an equivalence with replayable bijections") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 1 + trial % 6;
    Poset p = testutil::random_poset(rng, n);
    auto self = p.isomorphism_to(p);
    REQUIRE(self.has_value());
    std::vector<int> lab(static_cast<std::size_t>(n));
    std::iota(lab.begin(), lab.end(), 0);
    std::shuffle(lab.begin(), lab.end(), rng);
    Poset q = p.relabeled(lab);
    auto iso = p.isomorphism_to(q);
    REQUIRE(iso.has_value());
    REQUIRE(q.isomorphism_to(p).has_value());
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        CHECK(p.less(a, b) ==
              q.less((*iso)[static_cast<std::size_t>(a)], (*iso)[static_cast<std::size_t>(b)]));
  }
}

TEST_CASE("word_poset") {
  {
    auto [p, words] = word_poset({Word::parse("XL"), Word::parse("RRX")});
    CHECK(p.is_isomorphic(*Poset::builtin("chain:2")));
    CHECK(words[0] == Word::parse("XL"));
    CHECK(p.less(0, 1));
  }
  {
    auto [p, words] = word_poset({Word::parse("XR"), Word::parse("RXX")});
    CHECK(p.is_isomorphic(*Poset::builtin("antichain:2")));
  }
  {
    auto [p, words] = word_poset({Word{}});
    CHECK(p.size() == 1);
  }
}
