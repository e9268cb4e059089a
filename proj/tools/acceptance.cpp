// Acceptance suite: eleven end-to-end checks of the engine's headline
// guarantees, each printed as a single pass/fail line. Every check is exact;
// there are no statistical tolerances. Run with no arguments for the full
// suite or with --criterion N for one check.

#include <cstring>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "querygames/core/certificate.hpp"
#include "querygames/core/engine.hpp"
#include "querygames/core/probe.hpp"
#include "querygames/dfa/enumerate.hpp"
#include "querygames/dfa/games.hpp"
#include "querygames/dfa/gen.hpp"
#include "querygames/dfa/learners.hpp"
#include "querygames/dfa/product.hpp"
#include "querygames/dfa/teachers.hpp"
#include "querygames/mealy/games.hpp"
#include "querygames/mealy/mealy.hpp"
#include "querygames/nat/bounds.hpp"
#include "querygames/nat/game.hpp"
#include "querygames/nat/learners.hpp"
#include "querygames/nat/teachers.hpp"
#include "querygames/num.hpp"

using qg::Nat;
using namespace qg::nat;

namespace {

const std::vector<char> kAb{'a', 'b'};
const std::vector<char> kA{'a'};
const std::vector<char> kBits{'0', '1'};

struct Verdict {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;  // keep the first failure
    pass = false;
  }
};

// 1. The doubling-then-halving learner finds every number d within
//    3 + 2*floor(log2 d) rounds, whatever the teacher does.
Verdict criterion_1() {
  Verdict v;
  auto log = certified_log_learner();
  for (Nat d = 0; d <= 4096; ++d) {
    Nat budget = 3 + 2 * qg::floor_log2(d);
    const NatTeacher teacher_set[] = {honest_teacher(d), constant_too_low_teacher(),
                                      adversarial_teacher(0, 8191)};
    const char* names[] = {"honest", "const-too-low", "adversarial"};
    for (int t = 0; t < 3; ++t) {
      if (!qg::finds_within(instance(), log.learner, teacher_set[t], d, budget)) {
        v.fail("d=" + d.str() + " not found within " + budget.str() + " vs " + names[t]);
        return v;
      }
    }
  }
  return v;
}

// 2. Certificate verification: the doubling learner's certificate is clean on
//    concepts 0..1024 to state depth 30, the counting learner's on 0..256.
Verdict criterion_2() {
  Verdict v;
  auto log = certified_log_learner();
  std::vector<Nat> big;
  for (Nat d = 0; d <= 1024; ++d) big.push_back(d);
  auto log_report = qg::verify_certificate(instance(), log.learner, log.certificate, big, 30, 0);
  if (!log_report.ok())
    v.fail("doubling learner: " + std::to_string(log_report.violations.size()) + " violations");
  if (!log_report.responses_exhaustive) v.fail("doubling learner: enumeration not exhaustive");

  auto linear = linear_learner();
  std::vector<Nat> mid;
  for (Nat d = 0; d <= 256; ++d) mid.push_back(d);
  auto lin_report =
      qg::verify_certificate(instance(), linear.learner, linear.certificate, mid, 260, 0);
  if (!lin_report.ok())
    v.fail("counting learner: " + std::to_string(lin_report.violations.size()) + " violations");
  return v;
}

// 3. Against the withholding adversary on [1,100], every learner still has a
//    live candidate after floor(log2 99) = 6 rounds.
Verdict criterion_3() {
  Verdict v;
  if (qg::floor_log2(99) != 6) {
    v.fail("floor_log2(99) != 6");
    return v;
  }
  std::vector<std::pair<std::string, NatLearner>> learners;
  learners.emplace_back("bisect", bisect_learner());
  learners.emplace_back("linear", linear_learner().learner);
  learners.emplace_back("log", certified_log_learner().learner);
  for (std::uint64_t seed = 0; seed < 100; ++seed)
    learners.emplace_back("random:" + std::to_string(seed), random_tree_learner(seed, 1, 100));
  for (const auto& [name, learner] : learners) {
    auto witness = lower_bound_witness(learner, 1, 99);
    if (!witness) {
      v.fail("no surviving candidate for learner " + name);
      return v;
    }
  }
  return v;
}

// Reference game value by direct dynamic programming over range sizes: a
// guess splits s candidates into i-1 below and s-i above; the teacher picks
// the worse side. Written independently of the library's search.
std::size_t reference_game_value(std::size_t s) {
  std::vector<std::size_t> f(s + 1, 0);
  for (std::size_t k = 1; k <= s; ++k) {
    std::size_t best = SIZE_MAX;
    for (std::size_t i = 1; i <= k; ++i) {
      std::size_t worse = std::max(f[i - 1], f[k - i]);
      best = std::min(best, 1 + worse);
    }
    f[k] = best;
  }
  return f[s];
}

// 4. The 101-candidate guessing game takes exactly 7 rounds under optimal
//    play; halving on [1,100] in fact ends within 7 against every honest
//    teacher there.
Verdict criterion_4() {
  Verdict v;
  if (minimax_optimal_rounds(101) != 7) v.fail("minimax value for 101 candidates is not 7");
  if (reference_game_value(101) != 7) v.fail("reference DP disagrees on 101 candidates");
  if (Nat(reference_game_value(101)) != minimax_optimal_rounds(101))
    v.fail("library and reference DP disagree");
  for (Nat d = 1; d <= 100; ++d) {
    auto trace = qg::run(instance(), bisect_learner(Closed{1, 100}), honest_teacher(d), 7);
    if (!trace.ended()) {
      v.fail("bisect did not end within 7 rounds at d=" + d.str());
      return v;
    }
  }
  return v;
}

// 5. The counting learner finds every d within exactly 1 + d rounds against
//    honest, stonewalling, and adversarial teachers alike.
Verdict criterion_5() {
  Verdict v;
  auto linear = linear_learner();
  for (Nat d = 0; d <= 512; ++d) {
    Nat budget = d + 1;
    const NatTeacher teacher_set[] = {honest_teacher(d), constant_too_low_teacher(),
                                      adversarial_teacher(0, 1025)};
    const char* names[] = {"honest", "const-too-low", "adversarial"};
    for (int t = 0; t < 3; ++t) {
      if (!qg::finds_within(instance(), linear.learner, teacher_set[t], d, budget)) {
        v.fail("d=" + d.str() + " not found within " + budget.str() + " vs " + names[t]);
        return v;
      }
    }
  }
  return v;
}

// A fixed answer table over guesses 0..64: too-low by default with scattered
// exceptions, at least one of which is guaranteed. Teachers built from it are
// stateless by construction.
enum class TableEntry { low, high, stop };

NatTeacher table_teacher(const std::vector<TableEntry>& table) {
  NatTeacher t;
  t.initial = qg::StateToken::of(Nat(0), "table");
  t.step = [table](const qg::StateToken& s, const NatQuery& q) {
    TableEntry e = TableEntry::low;
    if (q.guess >= 0 && q.guess < Nat(table.size()))
      e = table[q.guess.convert_to<std::size_t>()];
    switch (e) {
      case TableEntry::low:
        return qg::TeacherAnswer<NatResponse>::reply(NatResponse::too_low, s);
      case TableEntry::high:
        return qg::TeacherAnswer<NatResponse>::reply(NatResponse::too_high, s);
      default:
        return qg::TeacherAnswer<NatResponse>::end();
    }
  };
  return t;
}

// 6. For 50 seeded answer tables with a non-too-low entry somewhere in 0..64,
//    the two-round plan built from the table refutes every d in 0..65 within
//    2 rounds.
Verdict criterion_6() {
  Verdict v;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    std::mt19937_64 rng(seed + 1000);
    std::vector<TableEntry> table(65, TableEntry::low);
    for (auto& e : table)
      if (rng() % 8 == 0) e = TableEntry::high;
    std::size_t forced = rng() % 65;
    table[forced] = rng() % 4 == 0 ? TableEntry::stop : TableEntry::high;

    NatTeacher teacher = table_teacher(table);
    NatLearner learner = two_round_learner(teacher, 64);
    for (Nat d = 0; d <= 65; ++d) {
      if (!qg::finds_within(instance(), learner, teacher, d, 2)) {
        v.fail("seed " + std::to_string(seed) + ": d=" + d.str() + " survives 2 rounds");
        return v;
      }
    }
  }
  return v;
}

// 7. The enrichment projection law: stripping predicates from an enriched
//    step recovers the step's own continuation, over 1000 random query heads
//    per game instance.
Verdict criterion_7() {
  Verdict v;
  std::mt19937_64 rng(7);

  std::function<std::string(const NatResponse&)> nat_label = [](const NatResponse& r) {
    return response_name(r);
  };
  for (int i = 0; i < 1000; ++i) {
    Nat guess = i % 5 == 0 ? Nat(rng()) : Nat(rng() % 1024);
    auto step = qg::probe_step<NatQuery, NatResponse>({guess}, nat_label);
    if (!qg::semantics_retraction_check(instance(), step, 4)) v.fail("number game, head " + std::to_string(i));
  }

  std::function<std::string(const qg::dfa::DfaResponse&)> dfa_label = qg::dfa::dfa_response_label;
  auto dfa_sweep = [&](const auto& game, const char* tag) {
    for (int i = 0; i < 1000; ++i) {
      auto step = qg::probe_step<qg::dfa::DfaQuery, qg::dfa::DfaResponse>(
          qg::dfa::random_dfa_query(rng, kAb, 4, 3), dfa_label);
      if (!qg::semantics_retraction_check(game, step, 4))
        v.fail(std::string(tag) + ", head " + std::to_string(i));
    }
  };
  dfa_sweep(qg::dfa::standard_instance(kAb), "acceptor game");
  dfa_sweep(qg::dfa::restricted_instance(kAb), "restricted acceptor game");
  dfa_sweep(qg::dfa::ce_size_instance(kAb), "bounded-counterexample game");

  std::function<std::string(const qg::mealy::MealyResponse&)> mealy_label =
      qg::mealy::mealy_response_label;
  const auto mealy_game = qg::mealy::instance(kAb, kBits);
  for (int i = 0; i < 1000; ++i) {
    auto step = qg::probe_step<qg::mealy::MealyQuery, qg::mealy::MealyResponse>(
        qg::mealy::random_mealy_query(rng, kAb, kBits, 4, 3), mealy_label);
    if (!qg::semantics_retraction_check(mealy_game, step, 4))
      v.fail("transducer game, head " + std::to_string(i));
  }
  return v;
}

// 8. Yes/no-only equivalence answers leak at most one concept per query: with
//    a 100-query budget over the 256 single-word languages of length 8, at
//    least 156 concepts stay possible for every learner tried.
Verdict criterion_8() {
  Verdict v;
  auto words = qg::dfa::words_of_length(8, kAb);
  std::vector<qg::dfa::Dfa> singles;
  for (const auto& w : words) singles.push_back(qg::dfa::singleton_dfa(w, kAb));

  auto game = qg::dfa::restricted_instance(kAb);
  auto adversary = qg::dfa::restricted_adversarial_teacher(8, kAb);

  auto count_alive = [&](const qg::Learner<qg::dfa::DfaQuery, qg::dfa::DfaResponse>& learner) {
    std::size_t alive = 0;
    for (const auto& s : singles)
      if (qg::still_possible(game, learner, adversary, s, 100)) ++alive;
    return alive;
  };

  std::size_t enum_alive = count_alive(qg::dfa::enumerator_learner(singles).learner);
  if (enum_alive != 156)
    v.fail("enumerator leaves " + std::to_string(enum_alive) + " alive, expected exactly 156");
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    std::size_t alive = count_alive(qg::dfa::random_dfa_learner(seed, kAb, 8));
    if (alive < 156) {
      v.fail("random learner seed " + std::to_string(seed) + " leaves only " +
             std::to_string(alive) + " alive");
      return v;
    }
  }
  return v;
}

// 9. The enumerator's round count against an honest teacher is exactly one
//    more than the index of the first class member matching the target.
Verdict criterion_9() {
  Verdict v;
  auto hypotheses = qg::dfa::enumerate_dfas(2, kA);
  if (hypotheses.size() != 10) {
    v.fail("class over {a} with <=2 states should have 10 members");
    return v;
  }
  auto enumerator = qg::dfa::enumerator_learner(hypotheses);
  auto game = qg::dfa::standard_instance(kA);
  for (const auto& target : hypotheses) {
    std::size_t least = hypotheses.size();  // independent scan, first equivalent member
    for (std::size_t j = 0; j < hypotheses.size(); ++j) {
      if (qg::dfa::equivalent(hypotheses[j], target)) {
        least = j;
        break;
      }
    }
    auto trace = qg::run(game, enumerator.learner, qg::dfa::honest_dfa_teacher(target), 20);
    if (!trace.ended() || trace.round_count() != least + 1) {
      v.fail("target " + qg::dfa::dfa_key(target) + ": " + std::to_string(trace.round_count()) +
             " rounds, expected " + std::to_string(least + 1));
      return v;
    }
    for (const auto& round : trace.rounds) {
      if (!std::holds_alternative<qg::dfa::EqQuery>(round.query)) {
        v.fail("enumerator asked a non-equivalence query");
        return v;
      }
    }
  }
  return v;
}

// 10. Transducers emit exactly one output symbol per input symbol, and the
//     honest transducer teacher's answers always agree with its machine.
Verdict criterion_10() {
  Verdict v;
  std::mt19937_64 rng(10);
  for (int i = 0; i < 500; ++i) {
    auto m = qg::mealy::random_mealy(rng, 4, kAb, kBits);
    std::string w;
    std::size_t len = rng() % 11;
    for (std::size_t j = 0; j < len; ++j) w.push_back(kAb[rng() % kAb.size()]);
    if (qg::mealy::mealy_run(m, w).size() != w.size()) {
      v.fail("output length mismatch on trial " + std::to_string(i));
      return v;
    }
  }

  const auto game = qg::mealy::instance(kAb, kBits);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    std::mt19937_64 mrng(seed + 500);
    auto target = qg::mealy::random_mealy(mrng, 4, kAb, kBits);
    auto learner = qg::mealy::random_mealy_learner(seed, kAb, kBits, 4);
    auto trace = qg::run(game, learner, qg::mealy::honest_mealy_teacher(target), 12);
    for (const auto& round : trace.rounds) {
      if (const auto* oq = std::get_if<qg::mealy::OqQuery>(&round.query)) {
        if (!round.response) {
          v.fail("teacher ended on an output query");
          return v;
        }
        const auto* out = std::get_if<qg::mealy::OutResponse>(&*round.response);
        if (!out || out->word != qg::mealy::mealy_run(target, oq->word)) {
          v.fail("wrong output for seed " + std::to_string(seed));
          return v;
        }
      } else {
        const auto& hyp = std::get<qg::mealy::EqQuery>(round.query).hypothesis;
        if (!round.response) {
          if (!qg::mealy::mealy_equivalent(hyp, target)) {
            v.fail("game ended on an inequivalent hypothesis, seed " + std::to_string(seed));
            return v;
          }
        } else {
          const auto* ce = std::get_if<qg::mealy::CeResponse>(&*round.response);
          if (!ce || qg::mealy::mealy_run(hyp, ce->word) == qg::mealy::mealy_run(target, ce->word)) {
            v.fail("bogus counterexample, seed " + std::to_string(seed));
            return v;
          }
        }
      }
    }
  }
  return v;
}

// 11. The product-automaton counterexample search returns exactly what a
//     shortest-first word scan finds, and possibility is antitone in the
//     round count.
Verdict criterion_11() {
  Verdict v;
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    auto a = qg::dfa::random_dfa(rng, 4, kAb);
    auto b = qg::dfa::random_dfa(rng, 4, kAb);
    auto fast = qg::dfa::shortest_counterexample(a, b);
    std::optional<std::string> slow;
    std::size_t cap = a.state_count() * b.state_count();
    for (const auto& w : qg::dfa::words_up_to(cap, kAb)) {
      if (qg::dfa::accepts(a, w) != qg::dfa::accepts(b, w)) {
        slow = w;
        break;
      }
    }
    if (fast != slow) {
      v.fail("pair " + std::to_string(i) + " disagrees with the scan oracle");
      return v;
    }
  }

  for (int i = 0; i < 600; ++i) {
    NatLearner learner = random_tree_learner(rng(), 0, 127);
    const NatTeacher teacher_set[] = {honest_teacher(Nat(rng() % 128)),
                                      adversarial_teacher(0, 127), constant_too_low_teacher()};
    const NatTeacher& teacher = teacher_set[rng() % 3];
    Nat d = Nat(rng() % 128);
    Nat n = Nat(rng() % 10);
    if (qg::still_possible(instance(), learner, teacher, d, n + 1) &&
        !qg::still_possible(instance(), learner, teacher, d, n)) {
      v.fail("number game config " + std::to_string(i) + " is not antitone");
      return v;
    }
  }
  auto game = qg::dfa::restricted_instance(kAb);
  for (int i = 0; i < 400; ++i) {
    auto learner = qg::dfa::random_dfa_learner(rng(), kAb, 3);
    auto target = qg::dfa::random_dfa(rng, 3, kAb);
    auto teacher = rng() % 2 ? qg::dfa::restricted_adversarial_teacher(3, kAb)
                             : qg::dfa::honest_restricted_teacher(target);
    auto d = qg::dfa::random_dfa(rng, 3, kAb);
    Nat n = Nat(rng() % 8);
    if (qg::still_possible(game, learner, teacher, d, n + 1) &&
        !qg::still_possible(game, learner, teacher, d, n)) {
      v.fail("machine game config " + std::to_string(i) + " is not antitone");
      return v;
    }
  }
  return v;
}

struct Criterion {
  int number;
  const char* headline;
  Verdict (*check)();
};

const Criterion kCriteria[] = {
    {1, "doubling learner finds d within 3+2*floor(log2 d) rounds vs all teachers", criterion_1},
    {2, "step-bound certificates verify cleanly (doubling and counting learners)", criterion_2},
    {3, "every learner leaves a witness alive after 6 rounds on [1,100]", criterion_3},
    {4, "optimal play on 101 candidates takes exactly 7 rounds", criterion_4},
    {5, "counting learner finds d within 1+d rounds vs all teachers", criterion_5},
    {6, "table-built two-round plans refute 0..65 in 2 rounds (50 seeds)", criterion_6},
    {7, "enrichment projection law holds on 1000 query heads per game", criterion_7},
    {8, "yes/no-only answers keep >=156 of 256 length-8 words possible", criterion_8},
    {9, "enumerator round count equals 1 + first matching class index", criterion_9},
    {10, "transducer outputs match input length; honest answers are consistent", criterion_10},
    {11, "counterexample search matches scan oracle; possibility is antitone", criterion_11},
};

int run_criterion(const Criterion& c) {
  Verdict v = c.check();
  std::cout << "criterion " << c.number << ": " << (v.pass ? "PASS" : "FAIL") << "  "
            << c.headline;
  if (!v.pass) std::cout << " -- " << v.detail;
  std::cout << "\n" << std::flush;
  return v.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  if (argc == 3 && std::strcmp(argv[1], "--criterion") == 0) {
    only = std::atoi(argv[2]);
    if (only < 1 || only > 11) {
      std::cerr << "error: --criterion: expected a number from 1 to 11\n";
      return 1;
    }
  } else if (argc != 1) {
    std::cerr << "usage: acceptance [--criterion N]\n";
    return 1;
  }

  int failures = 0;
  for (const Criterion& c : kCriteria) {
    if (only != 0 && c.number != only) continue;
    failures += run_criterion(c);
  }
  return failures == 0 ? 0 : 1;
}
