#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "querygames/core/certificate.hpp"
#include "querygames/nat/game.hpp"
#include "querygames/nat/learners.hpp"
#include "querygames/nat/teachers.hpp"
#include "querygames/nat/trace_io.hpp"

#include <random>

using namespace qg;
using namespace qg::nat;

namespace {

struct SimRound {
  Nat guess;
  std::optional<NatResponse> response;
};

// Independent simulation of binary search against a truthful opponent,
// written directly from the interval update rules. Used to derive expected
// traces before freezing them below.
std::vector<SimRound> simulate_bisect_vs_honest(const Nat& d, int max_rounds) {
  std::vector<SimRound> rounds;
  bool half_open = true;
  Nat lo = 0, hi = 0;
  for (int i = 0; i < max_rounds; ++i) {
    Nat guess = half_open ? Nat(2 * lo + 1) : Nat((lo + hi) / 2);
    if (guess == d) {
      rounds.push_back({guess, std::nullopt});
      return rounds;
    }
    if (guess < d) {
      rounds.push_back({guess, NatResponse::too_low});
      if (half_open) {
        lo = 2 * lo + 2;
      } else {
        lo = guess + 1 < hi ? guess + 1 : hi;
      }
    } else {
      rounds.push_back({guess, NatResponse::too_high});
      if (half_open) {
        hi = 2 * lo;
        half_open = false;
      } else {
        hi = guess - 1 > lo ? guess - 1 : lo;
      }
    }
  }
  return rounds;
}

bool same_rounds(const NatTrace& trace, const std::vector<SimRound>& expected) {
  if (trace.rounds.size() != expected.size()) return false;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (trace.rounds[i].query.guess != expected[i].guess) return false;
    if (trace.rounds[i].response != expected[i].response) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("game_step: first bisect round against honest 2") {
  NatLearner bisect = bisect_learner();
  NatTeacher teacher = honest_teacher(2);
  auto step = game_step(instance(), bisect, teacher, bisect.initial, teacher.initial);
  CHECK(!step.game_ended());
  CHECK(step.query.guess == 1);
  CHECK(*step.response == NatResponse::too_low);
  CHECK(step.learner_next.key() == "[2,inf)");
}

TEST_CASE("game_step: immediate end when the first guess is right") {
  auto linear = linear_learner();
  NatTeacher teacher = honest_teacher(0);
  auto step = game_step(instance(), linear.learner, teacher, linear.learner.initial, teacher.initial);
  CHECK(step.game_ended());
  CHECK(step.query.guess == 0);
}

TEST_CASE("game_step: linear learner advances by one on any answer") {
  auto linear = linear_learner();
  NatTeacher teacher = constant_too_low_teacher();
  StateToken q = linear.learner.initial;
  for (int n = 0; n < 5; ++n) {
    auto step = game_step(instance(), linear.learner, teacher, q, teacher.initial);
    CHECK(step.query.guess == n);
    CHECK(*step.response == NatResponse::too_low);
    q = step.learner_next;
  }
}

TEST_CASE("run: bisect against honest 2 takes the expected four rounds") {
  auto expected = simulate_bisect_vs_honest(2, 20);
  // Frozen from the simulation: 1 too-low, 5 too-high, 3 too-high, 2 end.
  REQUIRE(expected.size() == 4);
  CHECK(expected[0].guess == 1);
  CHECK(expected[1].guess == 5);
  CHECK(expected[2].guess == 3);
  CHECK(expected[3].guess == 2);
  CHECK(!expected[3].response.has_value());

  NatTrace trace = run(instance(), bisect_learner(), honest_teacher(2), 20);
  CHECK(trace.outcome == RunOutcome::Ended);
  CHECK(trace.round_count() == 4);
  CHECK(same_rounds(trace, expected));
}

TEST_CASE("run: bisect matches the independent simulation on many targets") {
  for (int d = 0; d <= 60; ++d) {
    NatTrace trace = run(instance(), bisect_learner(), honest_teacher(d), 64);
    CHECK(trace.outcome == RunOutcome::Ended);
    CHECK(same_rounds(trace, simulate_bisect_vs_honest(d, 64)));
  }
}

TEST_CASE("run: linear against honest 2 ends in three rounds") {
  NatTrace trace = run(instance(), linear_learner().learner, honest_teacher(2), 20);
  CHECK(trace.outcome == RunOutcome::Ended);
  REQUIRE(trace.round_count() == 3);
  CHECK(trace.rounds[0].query.guess == 0);
  CHECK(trace.rounds[1].query.guess == 1);
  CHECK(trace.rounds[2].query.guess == 2);
  CHECK(!trace.rounds[2].response.has_value());
}

TEST_CASE("run: truncation after max rounds") {
  NatTrace trace = run(instance(), linear_learner().learner, constant_too_low_teacher(), 3);
  CHECK(trace.outcome == RunOutcome::Truncated);
  CHECK(trace.round_count() == 3);
}

TEST_CASE("run is deterministic") {
  for (int i = 0; i < 3; ++i) {
    NatTrace a = run(instance(), bisect_learner(), adversarial_teacher(0, 100), 10);
    NatTrace b = run(instance(), bisect_learner(), adversarial_teacher(0, 100), 10);
    REQUIRE(a.round_count() == b.round_count());
    CHECK(a.outcome == b.outcome);
    for (std::size_t k = 0; k < a.round_count(); ++k) {
      CHECK(a.rounds[k].query.guess == b.rounds[k].query.guess);
      CHECK(a.rounds[k].response == b.rounds[k].response);
    }
  }
}

TEST_CASE("still_possible: zero rounds leave everything possible") {
  CHECK(still_possible(instance(), bisect_learner(), honest_teacher(7), 123456, 0));
}

TEST_CASE("still_possible: big numbers survive a constant too-low teacher") {
  Nat huge = pow2(3322) + 1;  // larger than any early guess
  CHECK(still_possible(instance(), linear_learner().learner, constant_too_low_teacher(), 10, 3));
  CHECK(still_possible(instance(), linear_learner().learner, constant_too_low_teacher(), huge, 100));
}

TEST_CASE("still_possible: false once the game has ended") {
  // bisect vs honest 2 ends in round 4, so nothing stays possible at n = 4.
  CHECK(!still_possible(instance(), bisect_learner(), honest_teacher(2), 2, 4));
  CHECK(!still_possible(instance(), bisect_learner(), honest_teacher(2), 1000, 4));
}

TEST_CASE("finds_within on the bisect example") {
  CHECK(finds_within(instance(), bisect_learner(), honest_teacher(2), 2, 4));
  // After only three rounds the answers 1/too-low, 5/too-high, 3/too-high
  // still admit 2.
  CHECK(!finds_within(instance(), bisect_learner(), honest_teacher(2), 2, 3));
}

TEST_CASE("still_possible is antitone in the round count") {
  std::mt19937_64 rng(424242);
  std::uniform_int_distribution<int> d_dist(0, 40);
  std::uniform_int_distribution<int> n_dist(0, 8);
  std::uniform_int_distribution<int> kind(0, 2);
  for (int i = 0; i < 300; ++i) {
    NatTeacher teacher = [&]() {
      switch (kind(rng)) {
        case 0:
          return honest_teacher(d_dist(rng));
        case 1:
          return constant_too_low_teacher();
        default:
          return adversarial_teacher(0, d_dist(rng) + 1);
      }
    }();
    NatLearner learner = i % 2 == 0 ? bisect_learner() : random_tree_learner(rng(), 0, 50);
    Nat d = d_dist(rng), n = n_dist(rng);
    if (still_possible(instance(), learner, teacher, d, n + 1)) {
      CHECK(still_possible(instance(), learner, teacher, d, n));
    }
  }
}

TEST_CASE("a teacher ending a non-terminating game is rejected with the round index") {
  NatGame no_end = instance();
  no_end.can_terminate = [](const NatQuery&) { return false; };
  try {
    run(no_end, linear_learner().learner, honest_teacher(2), 10);
    FAIL("expected illegal_response_error");
  } catch (const illegal_response_error& e) {
    REQUIRE(e.round.has_value());
    CHECK(*e.round == 2);  // guesses 0, 1 pass; the end attempt happens at index 2
  }
}

TEST_CASE("holds_forall distinguishes branch predicates") {
  NatLearner bisect = bisect_learner();
  LearnerStep<NatQuery, NatResponse> step = bisect.step(bisect.initial);  // guess 1

  std::function<bool(const Pred<Nat>&, const StateToken&)> all_true =
      [](const Pred<Nat>&, const StateToken&) { return true; };
  CHECK(holds_forall(instance(), step, all_true, 0));

  // Requires every branch to admit 0; the too-low branch does not.
  std::function<bool(const Pred<Nat>&, const StateToken&)> admits_zero =
      [](const Pred<Nat>& p, const StateToken&) { return p(0); };
  CHECK(!holds_forall(instance(), step, admits_zero, 0));
}

TEST_CASE("holds_forall is vacuous when no branch admits the concept") {
  // At guess 0 neither response admits 0 itself, so an implication guarded
  // by membership holds without constraining the successors.
  NatLearner zero_guess = scripted_learner({0});
  LearnerStep<NatQuery, NatResponse> step = zero_guess.step(zero_guess.initial);
  std::function<bool(const Pred<Nat>&, const StateToken&)> guarded =
      [](const Pred<Nat>& p, const StateToken&) { return !p(0); };
  CHECK(holds_forall(instance(), step, guarded, 0));
}

TEST_CASE("semantic enrichment projects back to the continuation") {
  NatLearner bisect = bisect_learner();
  StateToken q = bisect.initial;
  for (int i = 0; i < 6; ++i) {
    auto step = bisect.step(q);
    CHECK(semantics_retraction_check(instance(), step, 0));
    q = step.next(NatResponse::too_low);
  }
}

TEST_CASE("a corrupted enrichment map fails the projection check") {
  NatGame corrupted = instance();
  corrupted.enrich = [](const LearnerStep<NatQuery, NatResponse>& step, const NatResponse& resp) {
    NatResponse other = resp == NatResponse::too_low ? NatResponse::too_high : NatResponse::too_low;
    return EnrichedBranch<Nat>{qg::nat::semantics(step.query, resp), step.next(other)};
  };
  NatLearner bisect = bisect_learner();
  CHECK(!semantics_retraction_check(corrupted, bisect.step(bisect.initial), 0));
}

TEST_CASE("nat trace serialization round-trips byte for byte") {
  NatTrace trace = run(instance(), bisect_learner(), honest_teacher(2), 20);
  std::string text = trace_to_jsonl(trace);
  CHECK(text ==
        "{\"round\":0,\"query\":{\"guess\":1},\"response\":\"too-low\"}\n"
        "{\"round\":1,\"query\":{\"guess\":5},\"response\":\"too-high\"}\n"
        "{\"round\":2,\"query\":{\"guess\":3},\"response\":\"too-high\"}\n"
        "{\"round\":3,\"query\":{\"guess\":2},\"response\":\"END\"}\n"
        "{\"outcome\":\"ended\",\"result\":null,\"rounds\":4}\n");
  CHECK(trace_to_jsonl(trace_from_jsonl(text)) == text);
}

TEST_CASE("nat trace serialization keeps huge guesses exact") {
  Nat big = pow2(3322);  // about 10^1000
  NatTrace trace = run(instance(), scripted_learner({10, big}), constant_too_low_teacher(), 2);
  std::string text = trace_to_jsonl(trace);
  NatTrace back = trace_from_jsonl(text);
  REQUIRE(back.round_count() == 2);
  CHECK(back.rounds[1].query.guess == big);
  CHECK(trace_to_jsonl(back) == text);
}

TEST_CASE("malformed trace text is rejected") {
  CHECK_THROWS_AS(trace_from_jsonl("{\"round\":0}\n"), trace_parse_error);
  CHECK_THROWS_AS(trace_from_jsonl(""), trace_parse_error);
  CHECK_THROWS_AS(trace_from_jsonl("{\"outcome\":\"ended\",\"result\":null,\"rounds\":7}\n"),
                  trace_parse_error);
}
