#pragma once

// Deliberately naive reference implementations. They share nothing with the
// library beyond the Digraph container and are only fit for tiny inputs.

#include <cstddef>
#include <string>
#include <vector>

#include "cyclelab/digraph.hpp"
#include "cyclelab/rational.hpp"

namespace oracle {

using cyclelab::Digraph;
using cyclelab::Vertex;

/// Tries every injective map of the cyclic word's positions; '+' means
/// map[i] -> map[i+1].
bool contains_cycle_word(const Digraph& d, const std::string& word);

/// Minimal colour count by plain backtracking over vertices in id order.
bool colorable(const Digraph& d, std::size_t colors);
std::size_t chromatic_number(const Digraph& d);
std::size_t chromatic_number(const Digraph& d, const std::vector<Vertex>& subset);

/// Lexicographic minimum over rotations of the word and of its reversal with every symbol flipped.
std::string canonical_word(const std::string& word);

/// Every directed cycle word of length 2..k and "+"*(j-1)+"-" for 3 <= j <= k.
std::vector<std::string> forbidden_words(std::size_t k);
bool family_free(const Digraph& d, std::size_t k);

/// For every v in x: chi(D[x minus {u outside N+(v) with >= r out-neighbours in N+(v)}]) <= c * chi(D[x]).
bool cohesive(const Digraph& d, const std::vector<Vertex>& x, const cyclelab::Rational& c, std::size_t r);

}  // namespace oracle
