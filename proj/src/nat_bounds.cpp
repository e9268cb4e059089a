#include "querygames/nat/bounds.hpp"

#include "querygames/nat/teachers.hpp"

#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace qg::nat {

std::optional<Nat> lower_bound_witness(const NatLearner& learner, const Nat& lo, const Nat& m) {
  if (lo < 0 || m < 0) throw std::invalid_argument("lower_bound_witness: negative range");
  NatTeacher teacher = adversarial_teacher(lo, lo + m);
  Nat rounds = floor_log2(m);
  for (Nat d = lo; d <= lo + m; ++d) {
    if (still_possible(instance(), learner, teacher, d, rounds)) return d;
  }
  return std::nullopt;
}

std::optional<Closed> adversarial_final_interval(const NatLearner& learner, const Nat& lo,
                                                 const Nat& m, const Nat& rounds) {
  NatTeacher teacher = adversarial_teacher(lo, lo + m);
  StateToken q = learner.initial;
  StateToken s = teacher.initial;
  for (Nat i = 0; i < rounds; ++i) {
    StepResult<NatQuery, NatResponse> step = game_step(instance(), learner, teacher, q, s);
    if (step.game_ended()) return std::nullopt;
    q = step.learner_next;
    s = step.teacher_next;
  }
  return adversarial_interval(s);
}

namespace {

// Worst case over the teacher's consistent replies, best case over guesses.
// A guess at position i of s candidates may be answered too-high (i - 1
// candidates stay) or too-low (s - i stay); a branch with no candidates is
// not available to the teacher.
std::size_t minimax_value(std::size_t s, std::unordered_map<std::size_t, std::size_t>& memo) {
  if (s <= 1) return s;
  auto it = memo.find(s);
  if (it != memo.end()) return it->second;
  std::size_t best = SIZE_MAX;
  for (std::size_t i = 1; i <= s; ++i) {
    std::size_t below = minimax_value(i - 1, memo);
    std::size_t above = minimax_value(s - i, memo);
    std::size_t worst = below > above ? below : above;
    if (1 + worst < best) best = 1 + worst;
  }
  memo.emplace(s, best);
  return best;
}

}  // namespace

Nat minimax_optimal_rounds(const Nat& candidates) {
  if (candidates < 1) throw std::invalid_argument("minimax_optimal_rounds: need at least one candidate");
  if (candidates > 10000) throw std::invalid_argument("minimax_optimal_rounds: range too large");
  static std::unordered_map<std::size_t, std::size_t> memo;
  static std::mutex memo_mutex;
  std::lock_guard<std::mutex> lock(memo_mutex);
  return Nat(minimax_value(candidates.convert_to<std::size_t>(), memo));
}

}  // namespace qg::nat
