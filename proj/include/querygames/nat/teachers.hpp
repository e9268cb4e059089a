#ifndef QUERYGAMES_NAT_TEACHERS_HPP
#define QUERYGAMES_NAT_TEACHERS_HPP

#include "querygames/nat/game.hpp"

namespace qg::nat {

// Answers truthfully for the hidden number d and ends the game on a correct
// guess. Stateless.
NatTeacher honest_teacher(const Nat& d);

// Always answers too-low, never ends the game. Stateless. Indistinguishable
// from an honest teacher whose number exceeds every guess made so far.
NatTeacher constant_too_low_teacher();

// Keeps a feasible interval [lo, hi] and commits to nothing: guesses in the
// lower half are answered too-low, the rest too-high, shrinking the interval
// as little as possible. Ends only when cornered on a singleton and the
// learner guesses it.
NatTeacher adversarial_teacher(const Nat& lo, const Nat& hi);

// The feasible interval held by an adversarial teacher state.
Closed adversarial_interval(const StateToken& state);

}  // namespace qg::nat

#endif
