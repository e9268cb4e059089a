#ifndef QUERYGAMES_CORE_PROBE_HPP
#define QUERYGAMES_CORE_PROBE_HPP

#include <functional>
#include <string>
#include <utility>

#include "querygames/core/game.hpp"

namespace qg {

// Synthetic learner step for law checking: asks the given query and maps each
// response to a state keyed by the response's rendering. Useful for sweeping
// the projection law over arbitrary query heads without a full learner.
template <typename Q, typename R>
LearnerStep<Q, R> probe_step(Q query, std::function<std::string(const R&)> response_label) {
  return LearnerStep<Q, R>{std::move(query), [response_label](const R& r) {
                             return StateToken::of(0, "probe:" + response_label(r));
                           }};
}

}  // namespace qg

#endif
