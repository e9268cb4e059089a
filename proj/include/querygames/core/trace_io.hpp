#ifndef QUERYGAMES_CORE_TRACE_IO_HPP
#define QUERYGAMES_CORE_TRACE_IO_HPP

#include "querygames/core/game.hpp"

#include <functional>
#include <stdexcept>
#include <string>

namespace qg {

class trace_parse_error : public std::runtime_error {
 public:
  explicit trace_parse_error(std::string what) : std::runtime_error(std::move(what)) {}
};

inline std::string outcome_name(RunOutcome outcome) {
  switch (outcome) {
    case RunOutcome::Running:
      return "running";
    case RunOutcome::Ended:
      return "ended";
    default:
      return "truncated";
  }
}

// JSON-lines rendering of a trace: one record per round, then a final
// outcome record. The writers must yield raw JSON fragments.
template <typename Q, typename R>
std::string trace_to_jsonl(const Trace<Q, R>& trace,
                           const std::function<std::string(const Q&)>& query_json,
                           const std::function<std::string(const R&)>& response_json) {
  std::string out;
  for (const auto& round : trace.rounds) {
    out += "{\"round\":" + std::to_string(round.index) + ",\"query\":" + query_json(round.query) +
           ",\"response\":" + (round.response ? response_json(*round.response) : std::string("\"END\"")) +
           "}\n";
  }
  out += "{\"outcome\":\"" + outcome_name(trace.outcome) +
         "\",\"result\":null,\"rounds\":" + std::to_string(trace.round_count()) + "}\n";
  return out;
}

}  // namespace qg

#endif
