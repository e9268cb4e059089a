#ifndef QUERYGAMES_NAT_LEARNERS_HPP
#define QUERYGAMES_NAT_LEARNERS_HPP

#include "querygames/core/certificate.hpp"
#include "querygames/nat/game.hpp"

#include <cstdint>
#include <vector>

namespace qg::nat {

using NatCertifiedLearner = CertifiedLearner<Nat, NatQuery, NatResponse>;

// Guesses 0, 1, 2, ... regardless of responses. Certified with budget 1 + d.
NatCertifiedLearner linear_learner();

// Binary search: doubles an unbounded range (guessing 2n+1 from [n, inf)),
// then halves closed ranges at the midpoint.
NatLearner bisect_learner();
NatLearner bisect_learner(IntervalState initial);

// States of the certified logarithmic learner: the full range, the power
// scan [2^exponent, inf), or a window of 2^span_exponent candidates starting
// at base (with span_exponent <= floor_log2(base)).
struct LogStart {};
struct LogDoubling {
  Nat exponent;
};
struct LogNarrow {
  Nat base;
  Nat span_exponent;
};
using LogState = std::variant<LogStart, LogDoubling, LogNarrow>;

// Guesses 1, 2, 4, ... until overshooting, then halves the remaining window.
// Certified with budget 3 + 2 * floor_log2(d) against every teacher.
NatCertifiedLearner certified_log_learner();

// For a stateless teacher known to answer something other than too-low at
// some m <= n0: guess the least such m, then m - 1. Against that teacher no
// number from 0..n0+1 survives two rounds. Throws std::invalid_argument when
// the scan finds no such m.
NatLearner two_round_learner(const NatTeacher& stateless_teacher, const Nat& n0);

// Seed-determined decision tree: each node guesses a pseudo-random number
// from its current belief interval, children re-seed per response. Used to
// sample adversarially varied learners.
NatLearner random_tree_learner(std::uint64_t seed, const Nat& lo, const Nat& hi);

// Plays a fixed list of guesses, repeating the last one forever.
NatLearner scripted_learner(std::vector<Nat> guesses);

}  // namespace qg::nat

#endif
