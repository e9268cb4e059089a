#include "querygames/dfa/product.hpp"

#include <deque>
#include <stdexcept>
#include <vector>

namespace qg::dfa {

std::optional<std::string> shortest_counterexample(const Dfa& a, const Dfa& b) {
  if (a.alphabet != b.alphabet)
    throw std::invalid_argument("counterexample search needs matching alphabets");
  const std::size_t nb = b.state_count();
  const std::size_t sigma = a.alphabet.size();

  // BFS over state pairs; parent links reconstruct the path. FIFO order plus
  // symbol-order expansion makes the first hit shortest and lex-least.
  struct Cell {
    std::size_t parent;
    char symbol;
  };
  std::vector<Cell> via(a.state_count() * nb, Cell{std::size_t(-1), '\0'});
  std::vector<bool> seen(a.state_count() * nb, false);
  auto pack = [nb](std::size_t p, std::size_t q) { return p * nb + q; };

  std::deque<std::size_t> queue;
  std::size_t start = pack(a.initial, b.initial);
  seen[start] = true;
  queue.push_back(start);
  while (!queue.empty()) {
    std::size_t cell = queue.front();
    queue.pop_front();
    std::size_t p = cell / nb, q = cell % nb;
    if (a.accepting[p] != b.accepting[q]) {
      std::string word;
      for (std::size_t c = cell; c != start; c = via[c].parent) word.push_back(via[c].symbol);
      return std::string(word.rbegin(), word.rend());
    }
    for (std::size_t i = 0; i < sigma; ++i) {
      std::size_t succ = pack(a.next[p][i], b.next[q][i]);
      if (!seen[succ]) {
        seen[succ] = true;
        via[succ] = Cell{cell, a.alphabet[i]};
        queue.push_back(succ);
      }
    }
  }
  return std::nullopt;
}

bool equivalent(const Dfa& a, const Dfa& b) { return !shortest_counterexample(a, b).has_value(); }

}  // namespace qg::dfa
