#include "querygames/dfa/enumerate.hpp"

#include <cmath>
#include <deque>
#include <set>
#include <stdexcept>

#include "querygames/dfa/product.hpp"

namespace qg::dfa {

std::vector<std::size_t> reachable_states(const Dfa& m) {
  std::vector<bool> seen(m.state_count(), false);
  std::vector<std::size_t> order;
  std::deque<std::size_t> queue{m.initial};
  seen[m.initial] = true;
  while (!queue.empty()) {
    std::size_t s = queue.front();
    queue.pop_front();
    order.push_back(s);
    for (std::size_t t : m.next[s])
      if (!seen[t]) {
        seen[t] = true;
        queue.push_back(t);
      }
  }
  return order;
}

Dfa canonical_reachable(const Dfa& m) {
  auto order = reachable_states(m);
  std::vector<std::size_t> rank(m.state_count(), 0);
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = i;
  Dfa out;
  out.alphabet = m.alphabet;
  out.initial = 0;
  out.accepting.resize(order.size());
  out.next.resize(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    out.accepting[i] = m.accepting[order[i]];
    for (std::size_t t : m.next[order[i]]) out.next[i].push_back(rank[t]);
  }
  return out;
}

std::vector<Dfa> enumerate_dfas(std::size_t max_states, const std::vector<char>& alphabet) {
  if (max_states == 0) throw std::invalid_argument("need at least one state");
  if (alphabet.empty()) throw std::invalid_argument("need a nonempty alphabet");

  for (std::size_t k = 1; k <= max_states; ++k) {
    double combos = std::pow(double(k), double(k * alphabet.size())) * std::pow(2.0, double(k));
    if (combos > 2e7) throw std::invalid_argument("machine enumeration too large");
  }

  std::vector<Dfa> out;
  std::set<std::string> seen;
  for (std::size_t k = 1; k <= max_states; ++k) {
    const std::size_t digits = k * alphabet.size();
    std::vector<std::size_t> table(digits, 0);  // odometer, last digit fastest
    for (;;) {
      Dfa m;
      m.alphabet = alphabet;
      m.initial = 0;
      m.accepting.assign(k, false);
      m.next.assign(k, std::vector<std::size_t>(alphabet.size()));
      for (std::size_t s = 0; s < k; ++s)
        for (std::size_t i = 0; i < alphabet.size(); ++i)
          m.next[s][i] = table[s * alphabet.size() + i];

      // Skip tables whose reachable part is smaller; a representative with
      // fewer states is generated at that smaller size.
      if (reachable_states(m).size() == k) {
        for (std::size_t bits = 0; bits < (std::size_t(1) << k); ++bits) {
          for (std::size_t s = 0; s < k; ++s) m.accepting[s] = (bits >> (k - 1 - s)) & 1;
          Dfa canon = canonical_reachable(m);
          if (seen.insert(dfa_key(canon)).second) out.push_back(canon);
        }
      }

      std::size_t d = digits;
      while (d > 0 && table[d - 1] == k - 1) table[--d] = 0;
      if (d == 0) break;
      ++table[d - 1];
    }
  }
  return out;
}

Dfa singleton_dfa(const std::string& word, const std::vector<char>& alphabet) {
  const std::size_t n = word.size();
  Dfa m;
  m.alphabet = alphabet;
  m.initial = 0;
  // 0..n-1 spine, n accept, n+1 sink
  m.accepting.assign(n + 2, false);
  m.accepting[n] = true;
  const std::size_t sink = n + 1;
  m.next.assign(n + 2, std::vector<std::size_t>(alphabet.size(), sink));
  for (std::size_t i = 0; i < n; ++i) m.next[i][symbol_index(m, word[i])] = i + 1;
  validate(m);
  return m;
}

std::optional<std::string> unique_accepted_word(const Dfa& m, std::size_t length_cap) {
  std::optional<std::string> found;
  for (const auto& w : words_up_to(length_cap, m.alphabet)) {
    if (!accepts(m, w)) continue;
    if (found) return std::nullopt;  // two accepted words
    found = w;
  }
  if (!found) return std::nullopt;
  // Rules out extra accepted words beyond the cap.
  if (!equivalent(m, singleton_dfa(*found, m.alphabet))) return std::nullopt;
  return found;
}

std::vector<std::string> words_of_length(std::size_t length, const std::vector<char>& alphabet) {
  std::vector<std::string> out;
  std::string w(length, alphabet[0]);
  std::vector<std::size_t> digit(length, 0);
  for (;;) {
    out.push_back(w);
    std::size_t d = length;
    while (d > 0 && digit[d - 1] == alphabet.size() - 1) {
      digit[--d] = 0;
      w[d] = alphabet[0];
    }
    if (d == 0) break;
    ++digit[d - 1];
    w[d - 1] = alphabet[digit[d - 1]];
  }
  return out;
}

std::vector<std::string> words_up_to(std::size_t max_len, const std::vector<char>& alphabet) {
  std::vector<std::string> out;
  for (std::size_t len = 0; len <= max_len; ++len) {
    auto layer = words_of_length(len, alphabet);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

}  // namespace qg::dfa
