#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "querygames/core/engine.hpp"
#include "querygames/mealy/games.hpp"
#include "querygames/mealy/mealy.hpp"
#include "querygames/mealy/trace_io.hpp"

#include <map>
#include <random>

using namespace qg;
using namespace qg::mealy;

namespace {

const std::vector<char> ab{'a', 'b'};
const std::vector<char> bits{'0', '1'};

// state 0 emits the symbol's parity and the states swap roles on 'a'
Mealy toggle() {
  Mealy m;
  m.alphabet = ab;
  m.outputs = bits;
  m.initial = 0;
  m.next = {{{'0', 1}, {'1', 0}}, {{'1', 0}, {'0', 1}}};
  return m;
}

// Second opinion on runs: map-based lookup.
std::string naive_run(const Mealy& m, const std::string& w) {
  std::map<std::pair<std::size_t, char>, std::pair<char, std::size_t>> delta;
  for (std::size_t s = 0; s < m.state_count(); ++s)
    for (std::size_t i = 0; i < m.alphabet.size(); ++i)
      delta[{s, m.alphabet[i]}] = m.next[s][i];
  std::string out;
  std::size_t s = m.initial;
  for (char c : w) {
    auto [emit, to] = delta.at({s, c});
    out.push_back(emit);
    s = to;
  }
  return out;
}

std::vector<std::string> words_up_to(std::size_t max_len, const std::vector<char>& alphabet) {
  std::vector<std::string> out{""}, layer{""};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::string> grown;
    for (const auto& w : layer)
      for (char c : alphabet) grown.push_back(w + c);
    out.insert(out.end(), grown.begin(), grown.end());
    layer = std::move(grown);
  }
  return out;
}

std::optional<std::string> brute_mismatch(const Mealy& a, const Mealy& b, std::size_t max_len) {
  for (const auto& w : words_up_to(max_len, a.alphabet))
    if (mealy_run(a, w) != mealy_run(b, w)) return w;
  return std::nullopt;
}

Learner<MealyQuery, MealyResponse> scripted(std::vector<MealyQuery> queries) {
  Learner<MealyQuery, MealyResponse> l;
  auto qs = std::make_shared<const std::vector<MealyQuery>>(std::move(queries));
  auto at = [](std::size_t k) { return StateToken::of(k, "s:" + std::to_string(k)); };
  l.initial = at(0);
  l.step = [qs, at](const StateToken& s) {
    std::size_t k = s.as<std::size_t>();
    const MealyQuery& q = (*qs)[k < qs->size() ? k : qs->size() - 1];
    return LearnerStep<MealyQuery, MealyResponse>{
        q, [at, k](const MealyResponse&) { return at(k + 1); }};
  };
  return l;
}

}  // namespace

TEST_CASE("runs emit one output per input symbol") {
  Mealy m = toggle();
  CHECK(mealy_run(m, "") == "");
  CHECK(mealy_run(m, "a") == "0");
  CHECK(mealy_run(m, "aa") == "01");
  CHECK(mealy_run(m, "aab") == "011");
  CHECK(mealy_run(m, "bbb") == "111");
  CHECK_THROWS_AS(mealy_run(m, "ax"), unknown_symbol_error);

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    Mealy r = random_mealy(rng, 4, ab, bits);
    std::size_t len = rng() % 9;
    std::string w;
    for (std::size_t i = 0; i < len; ++i) w.push_back(ab[rng() % 2]);
    std::string out = mealy_run(r, w);
    CHECK(out.size() == w.size());
    CHECK(out == naive_run(r, w));
  }
}

TEST_CASE("shape validation catches malformed machines") {
  Mealy m = toggle();
  validate(m);
  Mealy bad = m;
  bad.next[1][0].second = 7;
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);
  bad = m;
  bad.next[0][1].first = 'z';  // output symbol outside the pool
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);
  bad = m;
  bad.initial = 2;
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);
}

TEST_CASE("mismatch search agrees with the shortest-first scan") {
  std::mt19937_64 rng(17);
  int mismatches = 0;
  for (int trial = 0; trial < 300; ++trial) {
    Mealy a = random_mealy(rng, 4, ab, bits);
    Mealy b = random_mealy(rng, 4, ab, bits);
    auto fast = shortest_output_mismatch(a, b);
    auto brute = brute_mismatch(a, b, a.state_count() * b.state_count());
    CHECK(fast == brute);
    if (fast) ++mismatches;
  }
  CHECK(mismatches > 50);

  Mealy m = toggle();
  CHECK(mealy_equivalent(m, m));
  Mealy other = m;
  other.alphabet = {'x', 'y'};
  CHECK_THROWS_AS(shortest_output_mismatch(m, other), std::invalid_argument);
}

TEST_CASE("text format round-trips and reports bad lines") {
  Mealy m = toggle();
  std::string text = mealy_to_text(m);
  CHECK(text ==
        "states 2\n"
        "initial 0\n"
        "alphabet a b\n"
        "outputs 0 1\n"
        "trans 0 a 0 1\n"
        "trans 0 b 1 0\n"
        "trans 1 a 1 0\n"
        "trans 1 b 0 1\n");
  CHECK(mealy_from_text(text) == m);

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    Mealy r = random_mealy(rng, 4, ab, bits);
    CHECK(mealy_from_text(mealy_to_text(r)) == r);
  }

  auto line_of = [](const std::string& text) {
    try {
      mealy_from_text(text);
    } catch (const format_error& e) {
      return e.line;
    }
    return std::size_t(0);
  };
  CHECK(line_of("states 1\ninitial 0\nalphabet a\noutputs 0\ntrans 0 a 9 0\n") == 5);
  CHECK(line_of("states 1\ninitial 0\nalphabet a\noutputs 0\ntrans 0 a 0\n") == 5);
  CHECK(line_of("states 1\ninitial 0\nalphabet a\ntrans 0 a 0 0\n") == 4);  // no outputs line
}

TEST_CASE("output queries pin down behaviour and equivalence queries end the game") {
  Mealy target = toggle();
  auto game = instance(ab, bits);
  auto teacher = honest_mealy_teacher(target);

  auto learner = scripted({OqQuery{"aab"}, OqQuery{""}, EqQuery{toggle()}});
  auto trace = run(game, learner, teacher, Nat(10));
  REQUIRE(trace.ended());
  CHECK(trace.round_count() == 3);
  CHECK(std::get<OutResponse>(*trace.rounds[0].response).word == "011");
  CHECK(std::get<OutResponse>(*trace.rounds[1].response).word == "");
  CHECK(!trace.rounds[2].response.has_value());

  // a wrong hypothesis gets the shortest, lex-least disagreeing input
  Mealy wrong = toggle();
  wrong.next[1][1].first = '1';
  auto answer = teacher.step(teacher.initial, EqQuery{wrong});
  REQUIRE(!answer.is_end());
  std::string ce = std::get<CeResponse>(answer.response()).word;
  CHECK(mealy_run(target, ce) != mealy_run(wrong, ce));
  auto brute = brute_mismatch(target, wrong, 4);
  REQUIRE(brute.has_value());
  CHECK(ce == *brute);
}

TEST_CASE("response legality enforces output length and symbol pools") {
  auto game = instance(ab, bits);
  CHECK(game.legal_response(OqQuery{"ab"}, OutResponse{"01"}));
  CHECK(!game.legal_response(OqQuery{"ab"}, OutResponse{"0"}));    // wrong length
  CHECK(!game.legal_response(OqQuery{"ab"}, OutResponse{"0x"}));   // foreign output
  CHECK(!game.legal_response(OqQuery{"ab"}, CeResponse{"ab"}));    // wrong kind
  CHECK(game.legal_response(EqQuery{toggle()}, CeResponse{"ba"}));
  CHECK(!game.legal_response(EqQuery{toggle()}, CeResponse{"0"}));  // outputs are not inputs
  CHECK(game.can_terminate(MealyQuery{EqQuery{toggle()}}));
  CHECK(!game.can_terminate(MealyQuery{OqQuery{"a"}}));
}

TEST_CASE("semantics admit exactly the machines matching the observation") {
  auto game = instance(ab, bits);
  Mealy m = toggle();

  auto oq_pred = game.semantics(OqQuery{"aab"}, OutResponse{"011"});
  CHECK(oq_pred(m));
  Mealy changed = m;
  changed.next[0][0].first = '1';  // now emits 1 on the first a
  CHECK(!oq_pred(changed));

  auto eq_pred = game.semantics(EqQuery{m}, CeResponse{"aa"});
  CHECK(!eq_pred(m));  // m agrees with itself everywhere
  CHECK(eq_pred(changed) == (mealy_run(changed, "aa") != mealy_run(m, "aa")));
}

TEST_CASE("output responses enumerate completely, mismatch responses by bound") {
  auto game = instance(ab, bits);
  CHECK(game.enumerate_responses(OqQuery{"ab"}, 0).size() == 4);  // bound irrelevant
  CHECK(game.enumerate_responses(OqQuery{""}, 0).size() == 1);
  CHECK(game.responses_exhaustive(OqQuery{"abab"}));
  CHECK(game.enumerate_responses(EqQuery{toggle()}, 2).size() == 7);  // "",a,b,aa,ab,ba,bb
  CHECK(!game.responses_exhaustive(EqQuery{toggle()}));
}

TEST_CASE("projection law holds on transducer steps") {
  auto game = instance(ab, bits);
  auto learner = random_mealy_learner(11, ab, bits, 3);
  StateToken s = learner.initial;
  for (int i = 0; i < 8; ++i) {
    auto step = learner.step(s);
    CHECK(semantics_retraction_check(game, step, 2));
    auto responses = game.enumerate_responses(step.query, 1);
    REQUIRE(!responses.empty());
    s = step.next(responses[0]);
  }
}

TEST_CASE("honest teacher stays consistent with its machine over random play") {
  std::mt19937_64 rng(29);
  for (int round = 0; round < 30; ++round) {
    Mealy target = random_mealy(rng, 4, ab, bits);
    auto game = instance(ab, bits);
    auto teacher = honest_mealy_teacher(target);
    auto learner = random_mealy_learner(rng(), ab, bits, 4);
    auto trace = run(game, learner, teacher, Nat(12));
    for (const auto& r : trace.rounds) {
      if (!r.response) {
        // game over: the hypothesis really is equivalent
        CHECK(mealy_equivalent(std::get<EqQuery>(r.query).hypothesis, target));
        continue;
      }
      if (const auto* oq = std::get_if<OqQuery>(&r.query)) {
        CHECK(std::get<OutResponse>(*r.response).word == mealy_run(target, oq->word));
      } else {
        const Mealy& h = std::get<EqQuery>(r.query).hypothesis;
        const std::string& ce = std::get<CeResponse>(*r.response).word;
        CHECK(mealy_run(target, ce) != mealy_run(h, ce));
      }
      // every response keeps the target possible
      CHECK(game.semantics(r.query, *r.response)(target));
    }
  }
}

TEST_CASE("the hidden machine stays possible until the game ends") {
  Mealy target = toggle();
  auto game = instance(ab, bits);
  auto teacher = honest_mealy_teacher(target);
  auto learner = scripted({OqQuery{"a"}, OqQuery{"bb"}, EqQuery{toggle()}});
  for (int n = 0; n <= 2; ++n) CHECK(still_possible(game, learner, teacher, target, Nat(n)));
  CHECK(!still_possible(game, learner, teacher, target, Nat(3)));  // ends here
  CHECK(finds_within(game, learner, teacher, target, Nat(3)));
}

TEST_CASE("random transducer learners are deterministic per seed") {
  auto game = instance(ab, bits);
  Mealy target = toggle();
  auto t1 = run(game, random_mealy_learner(6, ab, bits, 3), honest_mealy_teacher(target), Nat(10));
  auto t2 = run(game, random_mealy_learner(6, ab, bits, 3), honest_mealy_teacher(target), Nat(10));
  REQUIRE(t1.round_count() == t2.round_count());
  for (std::size_t i = 0; i < t1.round_count(); ++i)
    CHECK(mealy_query_label(t1.rounds[i].query) == mealy_query_label(t2.rounds[i].query));
}

TEST_CASE("transducer traces round-trip byte-for-byte") {
  auto game = instance(ab, bits);
  Mealy target = toggle();

  auto ended = run(game, scripted({OqQuery{"ab"}, EqQuery{toggle()}}),
                   honest_mealy_teacher(target), Nat(10));
  REQUIRE(ended.ended());
  std::string text = qg::mealy::trace_to_jsonl(ended);
  CHECK(qg::mealy::trace_to_jsonl(qg::mealy::trace_from_jsonl(text)) == text);

  auto truncated = run(game, random_mealy_learner(8, ab, bits, 3),
                       honest_mealy_teacher(target), Nat(5));
  std::string text2 = qg::mealy::trace_to_jsonl(truncated);
  CHECK(qg::mealy::trace_to_jsonl(qg::mealy::trace_from_jsonl(text2)) == text2);

  CHECK_THROWS_AS(qg::mealy::trace_from_jsonl("junk\n"), trace_parse_error);
  CHECK_THROWS_AS(
      qg::mealy::trace_from_jsonl("{\"round\":0,\"query\":{\"oq\":\"a\"},\"response\":{\"out\":\"0\"}}\n"),
      trace_parse_error);  // missing outcome line
}

TEST_CASE("machine JSON round-trips byte-for-byte") {
  Mealy m = toggle();
  std::string j = mealy_to_json(m);
  CHECK(mealy_from_json_text(j) == m);
  CHECK(mealy_to_json(mealy_from_json_text(j)) == j);
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    Mealy r = random_mealy(rng, 4, ab, bits);
    CHECK(mealy_from_json_text(mealy_to_json(r)) == r);
  }
  CHECK_THROWS_AS(mealy_from_json_text("{\"states\":1}"), trace_parse_error);
}
