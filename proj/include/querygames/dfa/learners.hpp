#ifndef QUERYGAMES_DFA_LEARNERS_HPP
#define QUERYGAMES_DFA_LEARNERS_HPP

#include <cstdint>
#include <vector>

#include "querygames/core/certificate.hpp"
#include "querygames/dfa/games.hpp"

namespace qg::dfa {

// Least index of a hypothesis equivalent to m, or hypotheses.size() if none.
std::size_t least_equivalent_index(const std::vector<Dfa>& hypotheses, const Dfa& m);

// Tries the given hypotheses in order with equivalence queries, one per
// round, ignoring response contents. Finds any concept equivalent to
// hypotheses[j] within 1 + j rounds against every teacher, in both the
// standard and the restricted game; the attached certificate says so
// (tick = queries spent, allows = "matches no earlier hypothesis",
// bound = 1 + least matching index).
CertifiedLearner<Dfa, DfaQuery, DfaResponse> enumerator_learner(std::vector<Dfa> hypotheses);

// Seed-determined query tree for any of the machine games: mixes membership
// queries of length <= word_length, single-word hypotheses of exactly
// word_length, and small random hypotheses (<= max_states states). Each
// distinct response leads to a distinct, seed-derived subtree; equal seeds
// give equal trees.
Learner<DfaQuery, DfaResponse> random_dfa_learner(std::uint64_t seed, std::vector<char> alphabet,
                                                  std::size_t word_length,
                                                  std::size_t max_states = 3);

}  // namespace qg::dfa

#endif
