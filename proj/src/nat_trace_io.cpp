#include "querygames/nat/trace_io.hpp"

#include <cctype>
#include <sstream>

namespace qg::nat {

std::string query_json(const NatQuery& query) { return "{\"guess\":" + query.guess.str() + "}"; }

std::string response_json(NatResponse response) { return "\"" + response_name(response) + "\""; }

std::string trace_to_jsonl(const NatTrace& trace) {
  return qg::trace_to_jsonl<NatQuery, NatResponse>(trace, query_json, response_json);
}

namespace {

void expect(const std::string& line, std::size_t& pos, const std::string& literal) {
  if (line.compare(pos, literal.size(), literal) != 0) {
    throw trace_parse_error("expected '" + literal + "' at position " + std::to_string(pos) + " in: " + line);
  }
  pos += literal.size();
}

Nat parse_number(const std::string& line, std::size_t& pos) {
  std::size_t start = pos;
  while (pos < line.size() && std::isdigit(static_cast<unsigned char>(line[pos]))) ++pos;
  if (pos == start) throw trace_parse_error("expected a number at position " + std::to_string(start) + " in: " + line);
  return Nat(line.substr(start, pos - start));
}

}  // namespace

NatTrace trace_from_jsonl(const std::string& text) {
  NatTrace trace;
  std::istringstream in(text);
  std::string line;
  bool saw_outcome = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (saw_outcome) throw trace_parse_error("content after the outcome record: " + line);
    std::size_t pos = 0;
    if (line.rfind("{\"round\":", 0) == 0) {
      expect(line, pos, "{\"round\":");
      Nat index = parse_number(line, pos);
      expect(line, pos, ",\"query\":{\"guess\":");
      Nat guess = parse_number(line, pos);
      expect(line, pos, "},\"response\":");
      std::optional<NatResponse> response;
      if (line.compare(pos, 5, "\"END\"") == 0) {
        pos += 5;
      } else if (line.compare(pos, 9, "\"too-low\"") == 0) {
        pos += 9;
        response = NatResponse::too_low;
      } else if (line.compare(pos, 10, "\"too-high\"") == 0) {
        pos += 10;
        response = NatResponse::too_high;
      } else {
        throw trace_parse_error("unknown response in: " + line);
      }
      expect(line, pos, "}");
      if (pos != line.size()) throw trace_parse_error("trailing content in: " + line);
      if (index != Nat(trace.rounds.size())) throw trace_parse_error("round indices out of order in: " + line);
      trace.rounds.push_back({trace.rounds.size(), NatQuery{guess}, response});
    } else {
      expect(line, pos, "{\"outcome\":\"");
      std::size_t end = line.find('"', pos);
      if (end == std::string::npos) throw trace_parse_error("unterminated outcome in: " + line);
      std::string outcome = line.substr(pos, end - pos);
      pos = end;
      expect(line, pos, "\",\"result\":null,\"rounds\":");
      Nat rounds = parse_number(line, pos);
      expect(line, pos, "}");
      if (pos != line.size()) throw trace_parse_error("trailing content in: " + line);
      if (outcome == "ended") {
        trace.outcome = RunOutcome::Ended;
      } else if (outcome == "truncated") {
        trace.outcome = RunOutcome::Truncated;
      } else if (outcome == "running") {
        trace.outcome = RunOutcome::Running;
      } else {
        throw trace_parse_error("unknown outcome '" + outcome + "'");
      }
      if (rounds != Nat(trace.rounds.size())) throw trace_parse_error("round count mismatch in: " + line);
      saw_outcome = true;
    }
  }
  if (!saw_outcome) throw trace_parse_error("missing outcome record");
  return trace;
}

}  // namespace qg::nat
