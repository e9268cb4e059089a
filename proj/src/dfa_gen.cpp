#include "querygames/dfa/gen.hpp"

#include <stdexcept>

namespace qg::dfa {

Dfa random_dfa(std::mt19937_64& rng, std::size_t max_states, const std::vector<char>& alphabet) {
  if (max_states == 0) throw std::invalid_argument("need max_states >= 1");
  if (alphabet.empty()) throw std::invalid_argument("need a nonempty alphabet");
  std::size_t n = 1 + rng() % max_states;
  Dfa m;
  m.alphabet = alphabet;
  m.initial = 0;
  m.accepting.resize(n);
  m.next.assign(n, std::vector<std::size_t>(alphabet.size()));
  for (std::size_t s = 0; s < n; ++s) {
    m.accepting[s] = rng() & 1;
    for (std::size_t i = 0; i < alphabet.size(); ++i) m.next[s][i] = rng() % n;
  }
  return m;
}

std::string random_word(std::mt19937_64& rng, std::size_t max_len,
                        const std::vector<char>& alphabet) {
  std::size_t len = rng() % (max_len + 1);
  std::string w;
  for (std::size_t i = 0; i < len; ++i) w.push_back(alphabet[rng() % alphabet.size()]);
  return w;
}

DfaQuery random_dfa_query(std::mt19937_64& rng, const std::vector<char>& alphabet,
                          std::size_t max_word_len, std::size_t max_states) {
  if (rng() & 1) return MqQuery{random_word(rng, max_word_len, alphabet)};
  return EqQuery{random_dfa(rng, max_states, alphabet)};
}

}  // namespace qg::dfa
