#include <doctest.h>

#include <random>

#include "slh/words.hpp"

using namespace slh;

TEST_CASE("parsing") {
  CHECK(GroupWord::parse("abAB").str() == "abAB");
  CHECK(GroupWord::parse("a b A B").str() == "abAB");
  CHECK(GroupWord::parse("").empty());
  CHECK(GroupWord::parse("   ").empty());
  try {
    GroupWord::parse("a x b");
    FAIL("expected WordSyntaxError");
  } catch (const WordSyntaxError& e) {
    CHECK(e.position == 2);
  }
  CHECK_THROWS_AS(GroupWord::parse("c"), WordSyntaxError);
}

TEST_CASE("free reduction") {
  CHECK(GroupWord::parse("aA").empty());
  CHECK(GroupWord::parse("abBA").empty());
  CHECK(GroupWord::parse("abBb").str() == "ab");
  CHECK(GroupWord::parse("aa").length() == 2);
}

TEST_CASE("group operations") {
  GroupWord ab = GroupWord::parse("ab");
  CHECK(ab.inverse().str() == "BA");
  CHECK((ab * ab.inverse()).empty());
  CHECK(ab.pow(3).str() == "ababab");
  CHECK(ab.pow(-2).str() == "BABA");
  CHECK(ab.pow(0).empty());
  CHECK(GroupWord::parse("Aba").cyclic_reduction().str() == "b");
  CHECK(GroupWord::parse("BaBAbb").cyclic_reduction().str() == "aBAb");
}

TEST_CASE("simple classification") {
  CHECK(is_simple(GroupWord::parse("a")));
  CHECK(is_simple(GroupWord::parse("A")));
  CHECK(is_simple(GroupWord::parse("b")));
  CHECK(is_simple(GroupWord::parse("ab")));
  CHECK(is_simple(GroupWord::parse("ba")));       // conjugate of ab
  CHECK(is_simple(GroupWord::parse("BA")));       // (ab)^{-1}
  CHECK(is_simple(GroupWord::parse("aaa")));      // power of a boundary class
  CHECK(is_simple(GroupWord::parse("abab")));     // (ab)^2
  CHECK(is_simple(GroupWord::parse("Aba")));      // conjugate of b
  CHECK_FALSE(is_simple(GroupWord()));            // the identity is not simple
  CHECK_FALSE(is_simple(GroupWord::parse("aB"))); // the figure-eight class
  CHECK_FALSE(is_simple(GroupWord::parse("bA")));
  CHECK_FALSE(is_simple(GroupWord::parse("aabb")));
  CHECK_FALSE(is_simple(GroupWord::parse("abAB")));
}

TEST_CASE("simplicity is a conjugation/inversion invariant") {
  std::mt19937_64 rng(29);
  const Letter alphabet[4] = {1, -1, 2, -2};
  std::vector<GroupWord> reps = {GroupWord::parse("a"),  GroupWord::parse("ab"),
                                 GroupWord::parse("aB"), GroupWord::parse("abb"),
                                 GroupWord::parse("bb"), GroupWord::parse("abAB")};
  for (const GroupWord& w : reps) {
    bool s = is_simple(w);
    CHECK(is_simple(w.inverse()) == s);
    for (int t = 0; t < 10; ++t) {
      std::vector<Letter> cl;
      for (int i = 0; i < 5; ++i) cl.push_back(alphabet[rng() % 4]);
      GroupWord c{std::move(cl)};
      CHECK(is_simple(c * w * c.inverse()) == s);
    }
  }
}
