#ifndef QUERYGAMES_DFA_REGEX_HPP
#define QUERYGAMES_DFA_REGEX_HPP

#include <string>
#include <vector>

#include "querygames/dfa/dfa.hpp"

namespace qg::dfa {

// Compiles a pattern to a machine over the given alphabet. Supported syntax:
// alphabet symbols, concatenation, '|' alternation, '*' repetition, and
// parenthesised groups; '*' binds tighter than concatenation, '|' loosest.
// The empty pattern and other malformed input raise regex_parse_error carrying
// the byte position of the problem. The alphabet must not use the
// metacharacters ( ) | *.
Dfa compile_regex(const std::string& pattern, const std::vector<char>& alphabet);

}  // namespace qg::dfa

#endif
