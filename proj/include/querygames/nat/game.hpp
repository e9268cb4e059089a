#ifndef QUERYGAMES_NAT_GAME_HPP
#define QUERYGAMES_NAT_GAME_HPP

#include "querygames/core/engine.hpp"
#include "querygames/num.hpp"

#include <string>
#include <variant>

namespace qg::nat {

// The learner announces a guess; ending the game is allowed at any guess.
struct NatQuery {
  Nat guess;
};

// The two informative answers to a wrong guess.
enum class NatResponse { too_low, too_high };

using NatLearner = Learner<NatQuery, NatResponse>;
using NatTeacher = Teacher<NatQuery, NatResponse>;
using NatGame = GameInstance<Nat, NatQuery, NatResponse>;
using NatTrace = Trace<NatQuery, NatResponse>;

// too-low at guess H admits {d | H < d}; too-high admits {d | H > d}.
Pred<Nat> semantics(const NatQuery& query, NatResponse response);

const NatGame& instance();

std::string response_name(NatResponse response);  // "too-low" / "too-high"

// Learner knowledge about the hidden number: everything from lo up, or a
// finite closed range.
struct HalfOpen {
  Nat lo;
};
struct Closed {
  Nat lo;
  Nat hi;
};
using IntervalState = std::variant<HalfOpen, Closed>;

std::string interval_key(const IntervalState& interval);
bool interval_contains(const IntervalState& interval, const Nat& d);

}  // namespace qg::nat

#endif
