#ifndef QUERYGAMES_NAT_TRACE_IO_HPP
#define QUERYGAMES_NAT_TRACE_IO_HPP

#include "querygames/core/trace_io.hpp"
#include "querygames/nat/game.hpp"

#include <string>

namespace qg::nat {

std::string query_json(const NatQuery& query);     // {"guess":<n>}
std::string response_json(NatResponse response);   // "too-low" / "too-high"

std::string trace_to_jsonl(const NatTrace& trace);

// Strict parser for traces produced by trace_to_jsonl. Guesses of any size
// are read exactly. Throws trace_parse_error on malformed input.
NatTrace trace_from_jsonl(const std::string& text);

}  // namespace qg::nat

#endif
