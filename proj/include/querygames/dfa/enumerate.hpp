#ifndef QUERYGAMES_DFA_ENUMERATE_HPP
#define QUERYGAMES_DFA_ENUMERATE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "querygames/dfa/dfa.hpp"

namespace qg::dfa {

// States reachable from the initial state, in breadth-first discovery order
// (symbols expanded in alphabet order).
std::vector<std::size_t> reachable_states(const Dfa& m);

// The machine restricted to its reachable part, states renumbered in
// discovery order. Canonical in the sense that two machines with identical
// reachable behaviour structure map to equal values.
Dfa canonical_reachable(const Dfa& m);

// Every machine with at most max_states states over the alphabet, one
// representative per canonical reachable form. Ordered by state count, then
// by (transition table, accepting vector) in lexicographic order of first
// appearance during generation.
std::vector<Dfa> enumerate_dfas(std::size_t max_states, const std::vector<char>& alphabet);

// Machine accepting exactly {word}: |word|+2 states (spine, accept, sink).
Dfa singleton_dfa(const std::string& word, const std::vector<char>& alphabet);

// If the machine accepts exactly one word, that word; otherwise nullopt.
// length_cap bounds the search (a machine with one word longer than the cap
// reports nullopt).
std::optional<std::string> unique_accepted_word(const Dfa& m, std::size_t length_cap);

// All words of the given length over the alphabet, lexicographic order.
std::vector<std::string> words_of_length(std::size_t length, const std::vector<char>& alphabet);

// All words of length <= max_len, shortest first, lexicographic within a
// length.
std::vector<std::string> words_up_to(std::size_t max_len, const std::vector<char>& alphabet);

}  // namespace qg::dfa

#endif
