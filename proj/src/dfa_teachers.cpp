#include "querygames/dfa/teachers.hpp"

#include <algorithm>
#include <memory>
#include <optional>
#include <stdexcept>
#include <utility>

#include "querygames/dfa/enumerate.hpp"
#include "querygames/dfa/product.hpp"

namespace qg::dfa {

namespace {

StateToken fixed_state() { return StateToken::of(0, "t"); }

}  // namespace

Teacher<DfaQuery, DfaResponse> honest_dfa_teacher(Dfa target) {
  validate(target);
  Teacher<DfaQuery, DfaResponse> t;
  t.initial = fixed_state();
  t.step = [target = std::move(target)](const StateToken& s, const DfaQuery& q) {
    if (const auto* mq = std::get_if<MqQuery>(&q))
      return TeacherAnswer<DfaResponse>::reply(BitResponse{accepts(target, mq->word)}, s);
    auto ce = shortest_counterexample(target, std::get<EqQuery>(q).hypothesis);
    if (!ce) return TeacherAnswer<DfaResponse>::end();
    return TeacherAnswer<DfaResponse>::reply(CeResponse{std::move(*ce)}, s);
  };
  return t;
}

Teacher<DfaQuery, DfaResponse> honest_restricted_teacher(Dfa target) {
  validate(target);
  Teacher<DfaQuery, DfaResponse> t;
  t.initial = fixed_state();
  t.step = [target = std::move(target)](const StateToken& s, const DfaQuery& q) {
    if (const auto* mq = std::get_if<MqQuery>(&q))
      return TeacherAnswer<DfaResponse>::reply(BitResponse{accepts(target, mq->word)}, s);
    if (equivalent(target, std::get<EqQuery>(q).hypothesis))
      return TeacherAnswer<DfaResponse>::end();
    return TeacherAnswer<DfaResponse>::reply(NoResponse{}, s);
  };
  return t;
}

Teacher<DfaQuery, DfaResponse> honest_bounded_dfa_teacher(BoundedDfa target) {
  validate(target.machine);
  Teacher<DfaQuery, DfaResponse> t;
  t.initial = fixed_state();
  t.step = [target = std::move(target)](const StateToken& s, const DfaQuery& q) {
    if (const auto* mq = std::get_if<MqQuery>(&q))
      return TeacherAnswer<DfaResponse>::reply(BitResponse{accepts(target.machine, mq->word)}, s);
    auto ce = shortest_counterexample(target.machine, std::get<EqQuery>(q).hypothesis);
    if (!ce || Nat(ce->size()) > target.length_bound) return TeacherAnswer<DfaResponse>::end();
    return TeacherAnswer<DfaResponse>::reply(CeResponse{std::move(*ce)}, s);
  };
  return t;
}

namespace {

struct AdversaryState {
  std::shared_ptr<const std::vector<std::string>> candidates;
  std::vector<bool> alive;
  std::size_t alive_count = 0;
};

StateToken adversary_state(AdversaryState st) {
  // Hex rendering of the alive set keeps keys short and unique.
  std::string key = "adv:";
  for (std::size_t i = 0; i < st.alive.size(); i += 4) {
    int nibble = 0;
    for (std::size_t j = i; j < i + 4 && j < st.alive.size(); ++j)
      nibble = nibble * 2 + (st.alive[j] ? 1 : 0);
    key += "0123456789abcdef"[nibble];
  }
  return StateToken::of(std::move(st), std::move(key));
}

std::optional<std::size_t> candidate_index(const std::string& w, std::size_t n,
                                           const std::vector<char>& alphabet) {
  if (w.size() != n) return std::nullopt;
  std::size_t idx = 0;
  for (char c : w) {
    auto it = std::find(alphabet.begin(), alphabet.end(), c);
    if (it == alphabet.end()) return std::nullopt;
    idx = idx * alphabet.size() + static_cast<std::size_t>(it - alphabet.begin());
  }
  return idx;
}

}  // namespace

Teacher<DfaQuery, DfaResponse> restricted_adversarial_teacher(std::size_t word_length,
                                                              std::vector<char> alphabet) {
  if (alphabet.empty()) throw std::invalid_argument("adversary needs a nonempty alphabet");
  double total = 1;
  for (std::size_t i = 0; i < word_length; ++i) total *= double(alphabet.size());
  if (total > double(1 << 20)) throw std::invalid_argument("adversary candidate set too large");

  AdversaryState init;
  init.candidates = std::make_shared<const std::vector<std::string>>(
      words_of_length(word_length, alphabet));
  init.alive.assign(init.candidates->size(), true);
  init.alive_count = init.candidates->size();

  Teacher<DfaQuery, DfaResponse> t;
  t.initial = adversary_state(std::move(init));
  t.step = [word_length, alphabet](const StateToken& s, const DfaQuery& q) {
    const auto& st = s.as<AdversaryState>();
    if (const auto* mq = std::get_if<MqQuery>(&q)) {
      AdversaryState next = st;
      if (auto idx = candidate_index(mq->word, word_length, alphabet)) {
        if (next.alive[*idx]) {
          next.alive[*idx] = false;
          --next.alive_count;
        }
      }
      return TeacherAnswer<DfaResponse>::reply(BitResponse{false}, adversary_state(std::move(next)));
    }

    const Dfa& h = std::get<EqQuery>(q).hypothesis;
    if (h.alphabet != alphabet)  // foreign hypothesis can never match a candidate
      return TeacherAnswer<DfaResponse>::reply(NoResponse{}, s);
    if (st.alive_count == 1) {
      std::size_t last = 0;
      while (!st.alive[last]) ++last;
      if (equivalent(h, singleton_dfa((*st.candidates)[last], alphabet)))
        return TeacherAnswer<DfaResponse>::end();
    }
    AdversaryState next = st;
    for (std::size_t i = 0; i < next.alive.size(); ++i) {
      if (!next.alive[i]) continue;
      const std::string& w = (*next.candidates)[i];
      // At most one candidate's singleton language can equal L(h).
      if (accepts(h, w) && equivalent(h, singleton_dfa(w, alphabet))) {
        next.alive[i] = false;
        --next.alive_count;
        break;
      }
    }
    return TeacherAnswer<DfaResponse>::reply(NoResponse{}, adversary_state(std::move(next)));
  };
  return t;
}

std::vector<std::string> restricted_alive_words(const StateToken& state) {
  const auto& st = state.as<AdversaryState>();
  std::vector<std::string> out;
  for (std::size_t i = 0; i < st.alive.size(); ++i)
    if (st.alive[i]) out.push_back((*st.candidates)[i]);
  return out;
}

}  // namespace qg::dfa
