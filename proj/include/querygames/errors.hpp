#ifndef QUERYGAMES_ERRORS_HPP
#define QUERYGAMES_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qg {

// A word used a symbol outside the machine's alphabet.
class unknown_symbol_error : public std::runtime_error {
 public:
  explicit unknown_symbol_error(std::string what) : std::runtime_error(std::move(what)) {}
};

// Malformed machine description, with the 1-based offending line.
class format_error : public std::runtime_error {
 public:
  format_error(std::string what, std::size_t line)
      : std::runtime_error(std::move(what) + " (line " + std::to_string(line) + ")"), line(line) {}
  std::size_t line;
};

// Malformed pattern, with the byte position of the problem.
class regex_parse_error : public std::runtime_error {
 public:
  regex_parse_error(std::string what, std::size_t position)
      : std::runtime_error(std::move(what) + " (position " + std::to_string(position) + ")"),
        position(position) {}
  std::size_t position;
};

}  // namespace qg

#endif
