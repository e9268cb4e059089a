#ifndef QUERYGAMES_DFA_DFA_HPP
#define QUERYGAMES_DFA_DFA_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "querygames/errors.hpp"

namespace qg::dfa {

// Deterministic finite automaton over a fixed, ordered alphabet.
// States are dense indices 0..state_count()-1; next[s][i] is the successor of
// state s on the i-th alphabet symbol.
struct Dfa {
  std::vector<char> alphabet;
  std::size_t initial = 0;
  std::vector<bool> accepting;
  std::vector<std::vector<std::size_t>> next;

  std::size_t state_count() const { return accepting.size(); }
};

// Throws std::invalid_argument if the machine's shape is inconsistent
// (empty state set, duplicate alphabet symbols, out-of-range targets, ...).
void validate(const Dfa& m);

// Index of symbol c in m.alphabet, or unknown_symbol_error.
std::size_t symbol_index(const Dfa& m, char c);

// Runs the machine on the word. Throws unknown_symbol_error on foreign symbols.
bool accepts(const Dfa& m, std::string_view word);
std::size_t run_state(const Dfa& m, std::string_view word);

bool operator==(const Dfa& a, const Dfa& b);

// Compact single-line description, used for labels and state keys.
std::string dfa_key(const Dfa& m);

// Plain-text format:
//   states 2
//   initial 0
//   accepting 1
//   alphabet a b
//   trans 0 a 1
//   ...
// Every (state, symbol) pair must get exactly one trans line. Blank lines and
// lines starting with '#' are skipped. Parse failures raise format_error with
// the offending line number.
std::string dfa_to_text(const Dfa& m);
Dfa dfa_from_text(const std::string& text);

}  // namespace qg::dfa

#endif
