#ifndef QUERYGAMES_DFA_PRODUCT_HPP
#define QUERYGAMES_DFA_PRODUCT_HPP

#include <optional>
#include <string>

#include "querygames/dfa/dfa.hpp"

namespace qg::dfa {

// Shortest word accepted by exactly one of the two machines, or nullopt when
// the languages coincide. Both machines must use the same alphabet in the same
// order. Among equally short separating words the alphabet-lexicographically
// least one is returned (breadth-first search expands symbols in alphabet
// order).
std::optional<std::string> shortest_counterexample(const Dfa& a, const Dfa& b);

bool equivalent(const Dfa& a, const Dfa& b);

}  // namespace qg::dfa

#endif
