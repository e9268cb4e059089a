#ifndef QUERYGAMES_DFA_TRACE_IO_HPP
#define QUERYGAMES_DFA_TRACE_IO_HPP

#include <string>

#include "querygames/core/trace_io.hpp"
#include "querygames/dfa/games.hpp"

namespace qg::dfa {

// Machine as a single-line JSON object with keys accepting (list of state
// indices), alphabet (string of symbols), initial, states, trans (rows
// [from, symbol, to] in state-then-symbol order).
std::string dfa_to_json(const Dfa& m);
Dfa dfa_from_json_text(const std::string& text);

// Query: {"mq":"word"} or {"eq":<machine>}. Response: {"bit":0|1},
// {"ce":"word"}, or "no".
std::string query_json(const DfaQuery& q);
std::string response_json(const DfaResponse& r);

// JSON-lines trace: one record per round ("END" for a final round the
// teacher ended), then the outcome record. Parsing a written trace and
// rewriting it reproduces the bytes exactly.
std::string trace_to_jsonl(const Trace<DfaQuery, DfaResponse>& trace);
Trace<DfaQuery, DfaResponse> trace_from_jsonl(const std::string& text);

}  // namespace qg::dfa

#endif
