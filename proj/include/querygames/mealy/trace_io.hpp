#ifndef QUERYGAMES_MEALY_TRACE_IO_HPP
#define QUERYGAMES_MEALY_TRACE_IO_HPP

#include <string>

#include "querygames/core/trace_io.hpp"
#include "querygames/mealy/games.hpp"

namespace qg::mealy {

// Machine as a single-line JSON object with keys alphabet, initial, outputs,
// states, trans (rows [from, symbol, output, to]).
std::string mealy_to_json(const Mealy& m);
Mealy mealy_from_json_text(const std::string& text);

// Query: {"oq":"word"} or {"eq":<machine>}. Response: {"out":"word"} or
// {"ce":"word"}.
std::string query_json(const MealyQuery& q);
std::string response_json(const MealyResponse& r);

std::string trace_to_jsonl(const Trace<MealyQuery, MealyResponse>& trace);
Trace<MealyQuery, MealyResponse> trace_from_jsonl(const std::string& text);

}  // namespace qg::mealy

#endif
