#ifndef QUERYGAMES_CORE_ENGINE_HPP
#define QUERYGAMES_CORE_ENGINE_HPP

#include "querygames/core/game.hpp"
#include "querygames/num.hpp"

#include <cstddef>
#include <optional>
#include <type_traits>

namespace qg {

// One round of play from explicit states. `response` is empty when the
// teacher ended the game; the successor states are only meaningful otherwise.
template <typename Q, typename R>
struct StepResult {
  Q query;
  std::optional<R> response;
  StateToken learner_next;
  StateToken teacher_next;

  bool game_ended() const { return !response.has_value(); }
};

template <typename D, typename Q, typename R>
StepResult<Q, R> game_step(const GameInstance<D, Q, R>& game, const Learner<Q, R>& learner,
                           const Teacher<Q, R>& teacher, const StateToken& q, const StateToken& s) {
  LearnerStep<Q, R> step = learner.step(q);
  TeacherAnswer<R> answer = teacher.step(s, step.query);
  if (answer.is_end()) {
    if (!game.can_terminate(step.query)) {
      throw illegal_response_error(game.name + ": teacher ended the game at non-terminating query " +
                                   game.query_label(step.query));
    }
    return StepResult<Q, R>{step.query, std::nullopt, StateToken(), StateToken()};
  }
  const R& resp = answer.response();
  if (!game.legal_response(step.query, resp)) {
    throw illegal_response_error(game.name + ": response " + game.response_label(resp) +
                                 " is not legal for query " + game.query_label(step.query));
  }
  return StepResult<Q, R>{step.query, resp, step.next(resp), answer.next()};
}

// Play from the initial states until the teacher ends the game or max_rounds
// is reached. Deterministic: equal inputs give equal traces.
template <typename D, typename Q, typename R>
Trace<Q, R> run(const GameInstance<D, Q, R>& game, const Learner<Q, R>& learner,
                const Teacher<Q, R>& teacher, const Nat& max_rounds) {
  Trace<Q, R> trace;
  StateToken q = learner.initial;
  StateToken s = teacher.initial;
  for (Nat i = 0; i < max_rounds; ++i) {
    StepResult<Q, R> step;
    try {
      step = game_step(game, learner, teacher, q, s);
    } catch (illegal_response_error& e) {
      e.round = trace.rounds.size();
      throw;
    }
    trace.rounds.push_back({trace.rounds.size(), step.query, step.response});
    if (step.game_ended()) {
      trace.outcome = RunOutcome::Ended;
      return trace;
    }
    q = step.learner_next;
    s = step.teacher_next;
  }
  trace.outcome = RunOutcome::Truncated;
  return trace;
}

// Could the hidden concept still be d after n more rounds from states (q, s)?
// True when n = 0; false as soon as the game ends or a response predicate
// rejects d. Antitone in n.
template <typename D, typename Q, typename R>
bool still_possible(const GameInstance<D, Q, R>& game, const Learner<Q, R>& learner,
                    const Teacher<Q, R>& teacher, const std::type_identity_t<D>& d, const Nat& n,
                    StateToken q, StateToken s) {
  for (Nat i = 0; i < n; ++i) {
    StepResult<Q, R> step;
    try {
      step = game_step(game, learner, teacher, q, s);
    } catch (illegal_response_error& e) {
      e.round = i.convert_to<std::size_t>();
      throw;
    }
    if (step.game_ended()) return false;
    if (!game.semantics(step.query, *step.response)(d)) return false;
    q = step.learner_next;
    s = step.teacher_next;
  }
  return true;
}

template <typename D, typename Q, typename R>
bool still_possible(const GameInstance<D, Q, R>& game, const Learner<Q, R>& learner,
                    const Teacher<Q, R>& teacher, const std::type_identity_t<D>& d, const Nat& n) {
  return still_possible(game, learner, teacher, d, n, learner.initial, teacher.initial);
}

// The learner finds d within n rounds: after n rounds of play from the start,
// d is no longer possible (the game ended or some response excluded d).
template <typename D, typename Q, typename R>
bool finds_within(const GameInstance<D, Q, R>& game, const Learner<Q, R>& learner,
                  const Teacher<Q, R>& teacher, const std::type_identity_t<D>& d, const Nat& n) {
  return !still_possible(game, learner, teacher, d, n);
}

// Box-style check over the semantic enrichment of one learner step: does
// every enumerated response branch satisfy the given branch predicate?
template <typename D, typename Q, typename R>
bool holds_forall(const GameInstance<D, Q, R>& game, const LearnerStep<Q, R>& step,
                  const std::function<bool(const Pred<D>&, const StateToken&)>& branch_pred,
                  std::size_t enum_bound) {
  for (const R& resp : game.enumerate_responses(step.query, enum_bound)) {
    EnrichedBranch<D> branch = game.enrich(step, resp);
    if (!branch_pred(branch.predicate, branch.successor)) return false;
  }
  return true;
}

// Projection law of the semantic enrichment: dropping the predicate from each
// enriched branch must give back the step's own continuation. Checked on all
// enumerated responses.
template <typename D, typename Q, typename R>
bool semantics_retraction_check(const GameInstance<D, Q, R>& game, const LearnerStep<Q, R>& step,
                                std::size_t enum_bound) {
  for (const R& resp : game.enumerate_responses(step.query, enum_bound)) {
    if (!(game.enrich(step, resp).successor == step.next(resp))) return false;
  }
  return true;
}

}  // namespace qg

#endif
