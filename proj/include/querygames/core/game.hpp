#ifndef QUERYGAMES_CORE_GAME_HPP
#define QUERYGAMES_CORE_GAME_HPP

#include "querygames/core/state.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qg {

// Decidable predicate over hidden concepts.
template <typename D>
using Pred = std::function<bool(const D&)>;

// A learner observed at one state: the query it asks plus the continuation
// mapping each possible response to the next learner state.
template <typename Q, typename R>
struct LearnerStep {
  Q query;
  std::function<StateToken(const R&)> next;
};

template <typename Q, typename R>
struct Learner {
  StateToken initial;
  std::function<LearnerStep<Q, R>(const StateToken&)> step;
};

// Teacher reply to a query: either the game ends, or a response plus the
// teacher's next state.
template <typename R>
class TeacherAnswer {
 public:
  static TeacherAnswer end() { return TeacherAnswer(); }
  static TeacherAnswer reply(R response, StateToken next) {
    TeacherAnswer a;
    a.reply_.emplace(std::move(response), std::move(next));
    return a;
  }

  bool is_end() const { return !reply_.has_value(); }
  const R& response() const { return reply_->first; }
  const StateToken& next() const { return reply_->second; }

 private:
  std::optional<std::pair<R, StateToken>> reply_;
};

template <typename Q, typename R>
struct Teacher {
  StateToken initial;
  std::function<TeacherAnswer<R>(const StateToken&, const Q&)> step;
};

// One branch of the semantic enrichment of a learner step: the predicate the
// response imposes on concepts, paired with the successor state.
template <typename D>
struct EnrichedBranch {
  Pred<D> predicate;
  StateToken successor;
};

// Everything the engine needs to know about one game variant. Instances are
// plain values; the same query/response types may serve several variants with
// different concept domains and semantics.
template <typename D, typename Q, typename R>
struct GameInstance {
  std::string name;

  // May the teacher end the game at this query?
  std::function<bool(const Q&)> can_terminate;

  // Is this a well-formed response to this query?
  std::function<bool(const Q&, const R&)> legal_response;

  // Predicate a response attaches to the queried branch.
  std::function<Pred<D>(const Q&, const R&)> semantics;

  // All legal responses to a query, up to the given size bound for games with
  // infinitely many responses.
  std::function<std::vector<R>(const Q&, std::size_t)> enumerate_responses;

  // True when enumerate_responses lists every response regardless of bound.
  std::function<bool(const Q&)> responses_exhaustive;

  // Semantic enrichment of a learner step, branch by branch. The default
  // pairs semantics() with the step's own continuation; tests may install a
  // corrupted map to falsify the projection law.
  std::function<EnrichedBranch<D>(const LearnerStep<Q, R>&, const R&)> enrich;

  // Desk-scale sample of the concept domain, for default verification runs.
  std::vector<D> sample;

  // Renderings for reports and traces.
  std::function<std::string(const D&)> concept_label;
  std::function<std::string(const Q&)> query_label;
  std::function<std::string(const R&)> response_label;

  void install_default_enrich() {
    auto sem = semantics;
    enrich = [sem](const LearnerStep<Q, R>& step, const R& resp) {
      return EnrichedBranch<D>{sem(step.query, resp), step.next(resp)};
    };
  }
};

// Raised when a teacher emits a response outside the game's response set, or
// ends the game at a query that cannot terminate. Signals a malformed
// teacher, not a losing one.
class illegal_response_error : public std::runtime_error {
 public:
  explicit illegal_response_error(std::string what) : std::runtime_error(std::move(what)) {}
  std::optional<std::size_t> round;
};

enum class RunOutcome { Running, Ended, Truncated };

template <typename Q, typename R>
struct Trace {
  struct Round {
    std::size_t index = 0;  // zero-based
    Q query;
    std::optional<R> response;  // nullopt: the teacher ended the game here
  };

  std::vector<Round> rounds;
  RunOutcome outcome = RunOutcome::Running;

  std::size_t round_count() const { return rounds.size(); }
  bool ended() const { return outcome == RunOutcome::Ended; }
};

}  // namespace qg

#endif
