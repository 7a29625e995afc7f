#include <doctest.h>

#include "cyclelab/digraph.hpp"
#include "oracles.hpp"

using namespace cyclelab;

// The reference implementations are checked on hand-computed cases so that
// disagreements elsewhere point at the library.

TEST_CASE("brute containment on hand cases") {
  CHECK(oracle::contains_cycle_word(directed_cycle(3), "+++"));
  CHECK(oracle::contains_cycle_word(directed_cycle(3), "---"));
  CHECK_FALSE(oracle::contains_cycle_word(directed_cycle(3), "++-"));
  CHECK_FALSE(oracle::contains_cycle_word(directed_cycle(4), "+++"));
  CHECK(oracle::contains_cycle_word(transitive_tournament(3), "++-"));
  CHECK_FALSE(oracle::contains_cycle_word(transitive_tournament(5), "+++"));
  CHECK(oracle::contains_cycle_word(complete_digraph(2), "++"));
  CHECK_FALSE(oracle::contains_cycle_word(transitive_tournament(4), "++"));
  CHECK(oracle::contains_cycle_word(transitive_tournament(4), "+-+-"));
}

TEST_CASE("brute chromatic number on hand cases") {
  CHECK(oracle::chromatic_number(Digraph(3)) == 1);
  CHECK(oracle::chromatic_number(directed_cycle(4)) == 2);
  CHECK(oracle::chromatic_number(directed_cycle(5)) == 3);
  CHECK(oracle::chromatic_number(complete_digraph(4)) == 4);
  CHECK(oracle::colorable(directed_cycle(6), 2));
  CHECK_FALSE(oracle::colorable(directed_cycle(7), 2));
}

TEST_CASE("string canonicaliser") {
  CHECK(oracle::canonical_word("-++") == "++-");
  CHECK(oracle::canonical_word("--") == "++");
  CHECK(oracle::canonical_word("-+-+") == "+-+-");
  CHECK(oracle::canonical_word("+--") == "++-");
}

TEST_CASE("family words") {
  CHECK(oracle::forbidden_words(3) == std::vector<std::string>{"++", "+++", "++-"});
  CHECK(oracle::family_free(transitive_tournament(2), 3));
  CHECK_FALSE(oracle::family_free(transitive_tournament(3), 3));
}

TEST_CASE("verbatim cohesiveness on hand cases") {
  // arcless: N^+(v) is empty, nothing is removed, ratio 1
  CHECK_FALSE(oracle::cohesive(Digraph(3), {0, 1, 2}, cyclelab::Rational(1, 2), 1));
  CHECK(oracle::cohesive(Digraph(3), {0, 1, 2}, cyclelab::Rational(1), 1));
  // directed triangle, r = 1: removing the in-neighbour of N^+(v) that lies outside it leaves an arc
  CHECK(oracle::cohesive(directed_cycle(3), {0, 1, 2}, cyclelab::Rational(2, 3), 1));
  CHECK_FALSE(oracle::cohesive(directed_cycle(3), {0, 1, 2}, cyclelab::Rational(1, 2), 1));
}
