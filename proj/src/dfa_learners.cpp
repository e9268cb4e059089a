#include "querygames/dfa/learners.hpp"

#include <algorithm>
#include <cstdio>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>

#include "querygames/core/mix.hpp"
#include "querygames/dfa/enumerate.hpp"
#include "querygames/dfa/product.hpp"

namespace qg::dfa {

std::size_t least_equivalent_index(const std::vector<Dfa>& hypotheses, const Dfa& m) {
  for (std::size_t j = 0; j < hypotheses.size(); ++j)
    if (equivalent(hypotheses[j], m)) return j;
  return hypotheses.size();
}

CertifiedLearner<Dfa, DfaQuery, DfaResponse> enumerator_learner(std::vector<Dfa> hypotheses) {
  if (hypotheses.empty()) throw std::invalid_argument("enumerator needs at least one hypothesis");
  auto hyps = std::make_shared<const std::vector<Dfa>>(std::move(hypotheses));

  auto state_at = [](std::size_t k) { return StateToken::of(k, "enum:" + std::to_string(k)); };

  CertifiedLearner<Dfa, DfaQuery, DfaResponse> cl;
  cl.learner.initial = state_at(0);
  cl.learner.step = [hyps, state_at](const StateToken& s) {
    std::size_t k = s.as<std::size_t>();
    // Past the end of the list every concept in the class is already
    // excluded; keep re-asking the last hypothesis.
    const Dfa& h = (*hyps)[k < hyps->size() ? k : hyps->size() - 1];
    return LearnerStep<DfaQuery, DfaResponse>{
        EqQuery{h}, [state_at, k](const DfaResponse&) { return state_at(k + 1); }};
  };

  cl.certificate.tick = [](const StateToken& s) { return Nat(s.as<std::size_t>()); };
  cl.certificate.allows = [hyps](const StateToken& s) -> Pred<Dfa> {
    std::size_t k = std::min(s.as<std::size_t>(), hyps->size());
    return [hyps, k](const Dfa& m) {
      for (std::size_t j = 0; j < k; ++j)
        if (equivalent((*hyps)[j], m)) return false;
      return true;
    };
  };
  cl.certificate.bound = [hyps](const Dfa& m) { return Nat(1 + least_equivalent_index(*hyps, m)); };
  return cl;
}

namespace {

std::string random_word_from(std::uint64_t& x, std::size_t max_len,
                             const std::vector<char>& alphabet) {
  x = splitmix64(x);
  std::size_t len = x % (max_len + 1);
  std::string w;
  for (std::size_t i = 0; i < len; ++i) {
    x = splitmix64(x);
    w.push_back(alphabet[x % alphabet.size()]);
  }
  return w;
}

Dfa random_machine_from(std::uint64_t& x, std::size_t max_states,
                        const std::vector<char>& alphabet) {
  x = splitmix64(x);
  std::size_t n = 1 + x % max_states;
  Dfa m;
  m.alphabet = alphabet;
  m.initial = 0;
  m.accepting.resize(n);
  m.next.assign(n, std::vector<std::size_t>(alphabet.size()));
  for (std::size_t s = 0; s < n; ++s) {
    x = splitmix64(x);
    m.accepting[s] = x & 1;
    for (std::size_t i = 0; i < alphabet.size(); ++i) {
      x = splitmix64(x);
      m.next[s][i] = x % n;
    }
  }
  return m;
}

}  // namespace

Learner<DfaQuery, DfaResponse> random_dfa_learner(std::uint64_t seed, std::vector<char> alphabet,
                                                  std::size_t word_length,
                                                  std::size_t max_states) {
  if (alphabet.empty()) throw std::invalid_argument("random learner needs a nonempty alphabet");
  if (max_states == 0) throw std::invalid_argument("random learner needs max_states >= 1");

  auto node = [](std::uint64_t s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "rdfa:%016llx", static_cast<unsigned long long>(s));
    return StateToken::of(s, buf);
  };

  Learner<DfaQuery, DfaResponse> l;
  l.initial = node(splitmix64(seed ^ 0xd1ceULL));
  l.step = [node, alphabet, word_length, max_states](const StateToken& s) {
    std::uint64_t x = s.as<std::uint64_t>();
    std::uint64_t pick = splitmix64(x ^ 0x9e37ULL);
    DfaQuery q;
    std::uint64_t stream = splitmix64(x ^ 0x51edULL);
    switch (pick % 4) {
      case 0:
      case 1:
        q = MqQuery{random_word_from(stream, word_length, alphabet)};
        break;
      case 2: {
        // Exact-length single-word guess; the only hypothesis shape that can
        // pin down a "one word of length n" language.
        std::string w;
        for (std::size_t i = 0; i < word_length; ++i) {
          stream = splitmix64(stream);
          w.push_back(alphabet[stream % alphabet.size()]);
        }
        q = EqQuery{singleton_dfa(w, alphabet)};
        break;
      }
      default:
        q = EqQuery{random_machine_from(stream, max_states, alphabet)};
        break;
    }
    return LearnerStep<DfaQuery, DfaResponse>{q, [node, x](const DfaResponse& r) {
                                                return node(splitmix64(
                                                    x ^ fnv1a64(dfa_response_label(r))));
                                              }};
  };
  return l;
}

}  // namespace qg::dfa
