#ifndef QUERYGAMES_DFA_TEACHERS_HPP
#define QUERYGAMES_DFA_TEACHERS_HPP

#include <cstddef>
#include <vector>

#include "querygames/dfa/games.hpp"

namespace qg::dfa {

// Answers membership queries truthfully for the target language and meets
// equivalence queries with the shortest (then lex-least) counterexample, or
// ends the game when the hypothesis is right. For the standard game.
Teacher<DfaQuery, DfaResponse> honest_dfa_teacher(Dfa target);

// Same target behaviour, but equivalence queries only get "no" until the
// hypothesis is right. For the restricted game.
Teacher<DfaQuery, DfaResponse> honest_restricted_teacher(Dfa target);

// Honest teacher for the budgeted-counterexample game: ends the game as soon
// as no counterexample within the concept's length budget exists, even if the
// hypothesis language differs beyond that horizon.
Teacher<DfaQuery, DfaResponse> honest_bounded_dfa_teacher(BoundedDfa target);

// Adversary for the restricted game whose hidden language is "exactly one
// word of length n", committed as late as possible. Membership queries are
// answered 0 (discarding at most the queried word from the candidate set);
// equivalence queries get "no" (discarding at most the one candidate the
// hypothesis names) until a single candidate remains and the hypothesis
// matches it. Any learner therefore needs at least |alphabet|^n - 1 queries.
Teacher<DfaQuery, DfaResponse> restricted_adversarial_teacher(std::size_t word_length,
                                                              std::vector<char> alphabet);

// Candidate words still alive in a restricted adversary state, in lex order.
std::vector<std::string> restricted_alive_words(const StateToken& state);

}  // namespace qg::dfa

#endif
