#ifndef QUERYGAMES_MEALY_MEALY_HPP
#define QUERYGAMES_MEALY_MEALY_HPP

#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "querygames/errors.hpp"

namespace qg::mealy {

// Mealy machine: every input symbol read emits one output symbol, so output
// words always have the length of the input word. next[s][i] is the
// (output, successor) pair for state s reading the i-th alphabet symbol.
struct Mealy {
  std::vector<char> alphabet;  // input symbols
  std::vector<char> outputs;   // output symbol pool
  std::size_t initial = 0;
  std::vector<std::vector<std::pair<char, std::size_t>>> next;

  std::size_t state_count() const { return next.size(); }
};

void validate(const Mealy& m);
std::size_t symbol_index(const Mealy& m, char c);

// Output word produced by reading the input word; same length by
// construction. Throws unknown_symbol_error on foreign input symbols.
std::string mealy_run(const Mealy& m, std::string_view input);

bool operator==(const Mealy& a, const Mealy& b);
std::string mealy_key(const Mealy& m);

// Shortest input word on which the two machines produce different outputs
// (lex-least among shortest), or nullopt when they are equivalent. Requires
// matching input alphabets.
std::optional<std::string> shortest_output_mismatch(const Mealy& a, const Mealy& b);
bool mealy_equivalent(const Mealy& a, const Mealy& b);

// Plain-text format, analogous to the acceptor format but with an outputs
// line and four-field transitions:
//   states 2
//   initial 0
//   alphabet a b
//   outputs 0 1
//   trans 0 a 1 1    (from, input, output, to)
std::string mealy_to_text(const Mealy& m);
Mealy mealy_from_text(const std::string& text);

Mealy random_mealy(std::mt19937_64& rng, std::size_t max_states,
                   const std::vector<char>& alphabet, const std::vector<char>& outputs);

}  // namespace qg::mealy

#endif
