#include "querygames/dfa/trace_io.hpp"

#include <sstream>

#include "json.hpp"

namespace qg::dfa {

namespace {

using nlohmann::json;

json dfa_to_jobj(const Dfa& m) {
  json j;
  j["states"] = m.state_count();
  j["initial"] = m.initial;
  json acc = json::array();
  for (std::size_t s = 0; s < m.state_count(); ++s)
    if (m.accepting[s]) acc.push_back(s);
  j["accepting"] = std::move(acc);
  j["alphabet"] = std::string(m.alphabet.begin(), m.alphabet.end());
  json trans = json::array();
  for (std::size_t s = 0; s < m.state_count(); ++s)
    for (std::size_t i = 0; i < m.alphabet.size(); ++i)
      trans.push_back(json::array({s, std::string(1, m.alphabet[i]), m.next[s][i]}));
  j["trans"] = std::move(trans);
  return j;
}

Dfa dfa_from_jobj(const json& j) {
  if (!j.is_object()) throw trace_parse_error("machine must be a JSON object");
  for (const char* key : {"states", "initial", "accepting", "alphabet", "trans"})
    if (!j.contains(key)) throw trace_parse_error(std::string("machine lacks key ") + key);
  Dfa m;
  std::size_t n = j.at("states").get<std::size_t>();
  if (n == 0) throw trace_parse_error("machine needs at least one state");
  m.accepting.assign(n, false);
  m.initial = j.at("initial").get<std::size_t>();
  for (const auto& s : j.at("accepting")) {
    std::size_t idx = s.get<std::size_t>();
    if (idx >= n) throw trace_parse_error("accepting state out of range");
    m.accepting[idx] = true;
  }
  std::string sigma = j.at("alphabet").get<std::string>();
  m.alphabet.assign(sigma.begin(), sigma.end());
  m.next.assign(n, std::vector<std::size_t>(m.alphabet.size(), 0));
  std::vector<std::vector<bool>> filled(n, std::vector<bool>(m.alphabet.size(), false));
  for (const auto& row : j.at("trans")) {
    if (!row.is_array() || row.size() != 3) throw trace_parse_error("bad trans row");
    std::size_t from = row[0].get<std::size_t>();
    std::string sym = row[1].get<std::string>();
    std::size_t to = row[2].get<std::size_t>();
    if (from >= n || to >= n || sym.size() != 1) throw trace_parse_error("bad trans row");
    std::size_t i;
    try {
      i = symbol_index(m, sym[0]);
    } catch (const unknown_symbol_error& e) {
      throw trace_parse_error(e.what());
    }
    if (filled[from][i]) throw trace_parse_error("duplicate trans row");
    m.next[from][i] = to;
    filled[from][i] = true;
  }
  for (const auto& row : filled)
    for (bool b : row)
      if (!b) throw trace_parse_error("missing trans row");
  try {
    validate(m);
  } catch (const std::invalid_argument& e) {
    throw trace_parse_error(e.what());
  }
  return m;
}

DfaQuery query_from_jobj(const json& j) {
  if (j.is_object() && j.contains("mq")) return MqQuery{j.at("mq").get<std::string>()};
  if (j.is_object() && j.contains("eq")) return EqQuery{dfa_from_jobj(j.at("eq"))};
  throw trace_parse_error("query must carry mq or eq");
}

DfaResponse response_from_jobj(const json& j) {
  if (j.is_string() && j.get<std::string>() == "no") return NoResponse{};
  if (j.is_object() && j.contains("bit")) {
    int b = j.at("bit").get<int>();
    if (b != 0 && b != 1) throw trace_parse_error("bit response must be 0 or 1");
    return BitResponse{b == 1};
  }
  if (j.is_object() && j.contains("ce")) return CeResponse{j.at("ce").get<std::string>()};
  throw trace_parse_error("unrecognised response");
}

}  // namespace

std::string dfa_to_json(const Dfa& m) { return dfa_to_jobj(m).dump(); }

Dfa dfa_from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw trace_parse_error(e.what());
  }
  return dfa_from_jobj(j);
}

std::string query_json(const DfaQuery& q) {
  if (const auto* mq = std::get_if<MqQuery>(&q)) return json{{"mq", mq->word}}.dump();
  return "{\"eq\":" + dfa_to_json(std::get<EqQuery>(q).hypothesis) + "}";
}

std::string response_json(const DfaResponse& r) {
  if (const auto* bit = std::get_if<BitResponse>(&r)) return json{{"bit", bit->value ? 1 : 0}}.dump();
  if (const auto* ce = std::get_if<CeResponse>(&r)) return json{{"ce", ce->word}}.dump();
  return "\"no\"";
}

std::string trace_to_jsonl(const Trace<DfaQuery, DfaResponse>& trace) {
  return qg::trace_to_jsonl<DfaQuery, DfaResponse>(trace, query_json, response_json);
}

Trace<DfaQuery, DfaResponse> trace_from_jsonl(const std::string& text) {
  Trace<DfaQuery, DfaResponse> trace;
  std::istringstream in(text);
  std::string line;
  bool saw_outcome = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (saw_outcome) throw trace_parse_error("content after the outcome record");
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      throw trace_parse_error(e.what());
    }
    if (!j.is_object()) throw trace_parse_error("each line must be a JSON object");
    if (j.contains("outcome")) {
      std::string name = j.at("outcome").get<std::string>();
      if (name == "ended")
        trace.outcome = RunOutcome::Ended;
      else if (name == "truncated")
        trace.outcome = RunOutcome::Truncated;
      else
        throw trace_parse_error("unknown outcome " + name);
      if (!j.contains("rounds") || j.at("rounds").get<std::size_t>() != trace.rounds.size())
        throw trace_parse_error("outcome record disagrees with round count");
      saw_outcome = true;
      continue;
    }
    if (!j.contains("round") || !j.contains("query") || !j.contains("response"))
      throw trace_parse_error("round record lacks a field");
    if (j.at("round").get<std::size_t>() != trace.rounds.size())
      throw trace_parse_error("round indices must be sequential");
    typename Trace<DfaQuery, DfaResponse>::Round round;
    round.index = trace.rounds.size();
    round.query = query_from_jobj(j.at("query"));
    const json& resp = j.at("response");
    if (!(resp.is_string() && resp.get<std::string>() == "END"))
      round.response = response_from_jobj(resp);
    trace.rounds.push_back(std::move(round));
  }
  if (!saw_outcome) throw trace_parse_error("missing outcome record");
  for (std::size_t i = 0; i + 1 < trace.rounds.size(); ++i)
    if (!trace.rounds[i].response) throw trace_parse_error("END before the final round");
  if (trace.outcome == RunOutcome::Ended &&
      (trace.rounds.empty() || trace.rounds.back().response))
    throw trace_parse_error("ended trace must close with an END round");
  if (trace.outcome == RunOutcome::Truncated && !trace.rounds.empty() &&
      !trace.rounds.back().response)
    throw trace_parse_error("truncated trace cannot contain END");
  return trace;
}

}  // namespace qg::dfa
