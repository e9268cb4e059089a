#ifndef QUERYGAMES_CORE_CERTIFICATE_HPP
#define QUERYGAMES_CORE_CERTIFICATE_HPP

#include "querygames/core/engine.hpp"

#include <cstddef>
#include <deque>
#include <string>
#include <unordered_set>
#include <vector>

namespace qg {

// Step-bound certificate for a learner: tick counts queries already spent in
// a state, allows tells which concepts a state still admits, bound gives the
// promised per-concept round budget.
template <typename D>
struct StepBoundCertificate {
  std::function<Nat(const StateToken&)> tick;
  std::function<Pred<D>(const StateToken&)> allows;
  std::function<Nat(const D&)> bound;
};

template <typename D, typename Q, typename R>
struct CertifiedLearner {
  Learner<Q, R> learner;
  StepBoundCertificate<D> certificate;
};

struct CertificateViolation {
  int item = 0;  // 3: initial coverage, 4: tick within budget, 5: step preservation
  std::string state;
  std::string concept_label;
  std::string response;  // item 5 only
  std::string detail;
};

struct CertificateReport {
  std::vector<CertificateViolation> violations;
  std::size_t states_explored = 0;
  std::size_t depth = 0;
  std::size_t enum_bound = 0;
  bool responses_exhaustive = true;  // false if any query needed a bounded enumeration

  bool ok() const { return violations.empty(); }
};

// Check the certificate conditions on every learner state reachable from the
// initial state within `depth` transitions, against each sampled concept:
//   item 3  the initial state allows every sampled concept,
//   item 4  an allowed concept's budget exceeds the state's tick,
//   item 5  every response branch keeps allowed concepts allowed (when the
//           branch predicate admits them) and strictly increases the tick.
// Successor states are taken from the enumerated responses. For games with
// infinitely many responses the walk is bounded by enum_bound and the report
// says so.
template <typename D, typename Q, typename R>
CertificateReport verify_certificate(const GameInstance<D, Q, R>& game, const Learner<Q, R>& learner,
                                     const StepBoundCertificate<D>& cert,
                                     const std::vector<D>& d_sample, std::size_t depth,
                                     std::size_t enum_bound) {
  CertificateReport report;
  report.depth = depth;
  report.enum_bound = enum_bound;

  for (const D& d : d_sample) {
    if (!cert.allows(learner.initial)(d)) {
      report.violations.push_back({3, learner.initial.key(), game.concept_label(d), "",
                                   "initial state does not allow this concept"});
    }
  }

  std::deque<std::pair<StateToken, std::size_t>> frontier;
  std::unordered_set<std::string> seen;
  frontier.emplace_back(learner.initial, 0);
  seen.insert(learner.initial.key());

  while (!frontier.empty()) {
    auto [q, level] = frontier.front();
    frontier.pop_front();
    ++report.states_explored;

    Pred<D> allowed_here = cert.allows(q);
    Nat tick_here = cert.tick(q);
    LearnerStep<Q, R> step = learner.step(q);
    if (!game.responses_exhaustive(step.query)) report.responses_exhaustive = false;

    for (const D& d : d_sample) {
      if (!allowed_here(d)) continue;
      if (!(tick_here < cert.bound(d))) {
        report.violations.push_back({4, q.key(), game.concept_label(d), "",
                                     "tick " + tick_here.str() + " >= bound " + cert.bound(d).str()});
      }
      std::string why;
      std::function<bool(const Pred<D>&, const StateToken&)> preserved =
          [&](const Pred<D>& admits, const StateToken& next) {
            if (!admits(d)) return true;
            if (!cert.allows(next)(d)) {
              why = "successor " + next.key() + " drops the concept";
              return false;
            }
            if (!(tick_here < cert.tick(next))) {
              why = "tick " + tick_here.str() + " -> " + cert.tick(next).str() + " at " + next.key() +
                    " does not increase";
              return false;
            }
            return true;
          };
      if (!holds_forall(game, step, preserved, enum_bound)) {
        // Re-scan to name the offending response in the report.
        for (const R& resp : game.enumerate_responses(step.query, enum_bound)) {
          EnrichedBranch<D> branch = game.enrich(step, resp);
          why.clear();
          if (!preserved(branch.predicate, branch.successor)) {
            report.violations.push_back(
                {5, q.key(), game.concept_label(d), game.response_label(resp), why});
          }
        }
      }
    }

    if (level < depth) {
      for (const R& resp : game.enumerate_responses(step.query, enum_bound)) {
        StateToken next = step.next(resp);
        if (seen.insert(next.key()).second) frontier.emplace_back(next, level + 1);
      }
    }
  }
  return report;
}

template <typename Q, typename R>
struct NamedTeacher {
  std::string name;
  Teacher<Q, R> teacher;
};

struct BoundFailure {
  std::string teacher;
  std::string concept_label;
  Nat bound;
};

struct BoundCheckReport {
  std::vector<BoundFailure> failures;
  std::size_t checks = 0;

  bool ok() const { return failures.empty(); }
};

// Direct check of the certified claim: every teacher in the list, played
// against the learner, leaves no sampled concept possible after its budget.
// Failures are reported in (teacher, concept) order.
template <typename D, typename Q, typename R>
BoundCheckReport check_learner_correct(const GameInstance<D, Q, R>& game, const Learner<Q, R>& learner,
                                       const std::function<Nat(const D&)>& bound,
                                       const std::vector<NamedTeacher<Q, R>>& teachers,
                                       const std::vector<D>& d_sample) {
  BoundCheckReport report;
  for (const NamedTeacher<Q, R>& t : teachers) {
    for (const D& d : d_sample) {
      ++report.checks;
      Nat b = bound(d);
      if (!finds_within(game, learner, t.teacher, d, b)) {
        report.failures.push_back({t.name, game.concept_label(d), b});
      }
    }
  }
  return report;
}

}  // namespace qg

#endif
