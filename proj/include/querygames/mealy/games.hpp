#ifndef QUERYGAMES_MEALY_GAMES_HPP
#define QUERYGAMES_MEALY_GAMES_HPP

#include <cstdint>
#include <string>
#include <variant>

#include "querygames/core/game.hpp"
#include "querygames/mealy/mealy.hpp"

namespace qg::mealy {

// Output query: what does the hidden machine emit on this input word?
struct OqQuery {
  std::string word;
};

// Equivalence query: does this machine produce the hidden behaviour?
struct EqQuery {
  Mealy hypothesis;
};

using MealyQuery = std::variant<OqQuery, EqQuery>;

// Output word; legal exactly when it has the input word's length and stays
// within the output pool.
struct OutResponse {
  std::string word;
};

// Input word on which hypothesis and hidden machine disagree.
struct CeResponse {
  std::string word;
};

using MealyResponse = std::variant<OutResponse, CeResponse>;

std::string mealy_query_label(const MealyQuery& q);
std::string mealy_response_label(const MealyResponse& r);

// Transducer game: output queries answered with the emitted word,
// equivalence queries with a disagreeing input word or the end of the game.
GameInstance<Mealy, MealyQuery, MealyResponse> instance(std::vector<char> alphabet,
                                                        std::vector<char> outputs);

// Truthful teacher for a fixed machine; equivalence queries are met with the
// shortest (then lex-least) disagreeing input.
Teacher<MealyQuery, MealyResponse> honest_mealy_teacher(Mealy target);

// Seed-determined query tree mixing output queries (length <= word_length)
// and random hypotheses (<= max_states states). Equal seeds, equal trees.
Learner<MealyQuery, MealyResponse> random_mealy_learner(std::uint64_t seed,
                                                        std::vector<char> alphabet,
                                                        std::vector<char> outputs,
                                                        std::size_t word_length,
                                                        std::size_t max_states = 3);

MealyQuery random_mealy_query(std::mt19937_64& rng, const std::vector<char>& alphabet,
                              const std::vector<char>& outputs, std::size_t max_word_len,
                              std::size_t max_states);

}  // namespace qg::mealy

#endif
