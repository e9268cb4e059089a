#ifndef QUERYGAMES_NAT_BOUNDS_HPP
#define QUERYGAMES_NAT_BOUNDS_HPP

#include "querygames/nat/game.hpp"

#include <optional>

namespace qg::nat {

// Play the learner against adversarial_teacher(lo, lo + m) for
// floor_log2(m) rounds, then scan lo..lo+m for a number the play never
// excluded. Such a witness exists for every learner.
std::optional<Nat> lower_bound_witness(const NatLearner& learner, const Nat& lo, const Nat& m);

// The adversarial teacher's feasible interval after `rounds` rounds against
// the learner, or nothing if the game ended first. Symbolic counterpart of
// the witness scan: the scan's survivors inside lo..lo+m are exactly this
// interval.
std::optional<Closed> adversarial_final_interval(const NatLearner& learner, const Nat& lo,
                                                 const Nat& m, const Nat& rounds);

// Exact game value of guessing over s consecutive candidates: the least
// number of guesses that ends the game against every answering strategy that
// stays consistent with some candidate. Memoized game-tree search.
Nat minimax_optimal_rounds(const Nat& candidates);

}  // namespace qg::nat

#endif
