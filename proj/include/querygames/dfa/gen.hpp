#ifndef QUERYGAMES_DFA_GEN_HPP
#define QUERYGAMES_DFA_GEN_HPP

#include <random>

#include "querygames/dfa/games.hpp"

namespace qg::dfa {

// Uniform-ish random machine with 1..max_states states (initial state 0;
// unreachable states allowed). Deterministic given the engine state.
Dfa random_dfa(std::mt19937_64& rng, std::size_t max_states, const std::vector<char>& alphabet);

std::string random_word(std::mt19937_64& rng, std::size_t max_len,
                        const std::vector<char>& alphabet);

// Random query head for property sweeps: membership or equivalence, with the
// given size limits.
DfaQuery random_dfa_query(std::mt19937_64& rng, const std::vector<char>& alphabet,
                          std::size_t max_word_len, std::size_t max_states);

}  // namespace qg::dfa

#endif
