#include "querygames/mealy/trace_io.hpp"

#include <sstream>

#include "json.hpp"

namespace qg::mealy {

namespace {

using nlohmann::json;

json mealy_to_jobj(const Mealy& m) {
  json j;
  j["states"] = m.state_count();
  j["initial"] = m.initial;
  j["alphabet"] = std::string(m.alphabet.begin(), m.alphabet.end());
  j["outputs"] = std::string(m.outputs.begin(), m.outputs.end());
  json trans = json::array();
  for (std::size_t s = 0; s < m.state_count(); ++s)
    for (std::size_t i = 0; i < m.alphabet.size(); ++i)
      trans.push_back(json::array({s, std::string(1, m.alphabet[i]),
                                   std::string(1, m.next[s][i].first), m.next[s][i].second}));
  j["trans"] = std::move(trans);
  return j;
}

Mealy mealy_from_jobj(const json& j) {
  if (!j.is_object()) throw trace_parse_error("machine must be a JSON object");
  for (const char* key : {"states", "initial", "alphabet", "outputs", "trans"})
    if (!j.contains(key)) throw trace_parse_error(std::string("machine lacks key ") + key);
  Mealy m;
  std::size_t n = j.at("states").get<std::size_t>();
  if (n == 0) throw trace_parse_error("machine needs at least one state");
  m.initial = j.at("initial").get<std::size_t>();
  std::string sigma = j.at("alphabet").get<std::string>();
  m.alphabet.assign(sigma.begin(), sigma.end());
  std::string pool = j.at("outputs").get<std::string>();
  m.outputs.assign(pool.begin(), pool.end());
  if (m.outputs.empty()) throw trace_parse_error("machine needs a nonempty output pool");
  m.next.assign(n, std::vector<std::pair<char, std::size_t>>(m.alphabet.size(),
                                                             {m.outputs[0], 0}));
  std::vector<std::vector<bool>> filled(n, std::vector<bool>(m.alphabet.size(), false));
  for (const auto& row : j.at("trans")) {
    if (!row.is_array() || row.size() != 4) throw trace_parse_error("bad trans row");
    std::size_t from = row[0].get<std::size_t>();
    std::string sym = row[1].get<std::string>();
    std::string out = row[2].get<std::string>();
    std::size_t to = row[3].get<std::size_t>();
    if (from >= n || to >= n || sym.size() != 1 || out.size() != 1)
      throw trace_parse_error("bad trans row");
    std::size_t i;
    try {
      i = symbol_index(m, sym[0]);
    } catch (const unknown_symbol_error& e) {
      throw trace_parse_error(e.what());
    }
    if (filled[from][i]) throw trace_parse_error("duplicate trans row");
    m.next[from][i] = {out[0], to};
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

MealyQuery query_from_jobj(const json& j) {
  if (j.is_object() && j.contains("oq")) return OqQuery{j.at("oq").get<std::string>()};
  if (j.is_object() && j.contains("eq")) return EqQuery{mealy_from_jobj(j.at("eq"))};
  throw trace_parse_error("query must carry oq or eq");
}

MealyResponse response_from_jobj(const json& j) {
  if (j.is_object() && j.contains("out")) return OutResponse{j.at("out").get<std::string>()};
  if (j.is_object() && j.contains("ce")) return CeResponse{j.at("ce").get<std::string>()};
  throw trace_parse_error("unrecognised response");
}

}  // namespace

std::string mealy_to_json(const Mealy& m) { return mealy_to_jobj(m).dump(); }

Mealy mealy_from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw trace_parse_error(e.what());
  }
  return mealy_from_jobj(j);
}

std::string query_json(const MealyQuery& q) {
  if (const auto* oq = std::get_if<OqQuery>(&q)) return json{{"oq", oq->word}}.dump();
  return "{\"eq\":" + mealy_to_json(std::get<EqQuery>(q).hypothesis) + "}";
}

std::string response_json(const MealyResponse& r) {
  if (const auto* out = std::get_if<OutResponse>(&r)) return json{{"out", out->word}}.dump();
  return json{{"ce", std::get<CeResponse>(r).word}}.dump();
}

std::string trace_to_jsonl(const Trace<MealyQuery, MealyResponse>& trace) {
  return qg::trace_to_jsonl<MealyQuery, MealyResponse>(trace, query_json, response_json);
}

Trace<MealyQuery, MealyResponse> trace_from_jsonl(const std::string& text) {
  Trace<MealyQuery, MealyResponse> trace;
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
    typename Trace<MealyQuery, MealyResponse>::Round round;
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

}  // namespace qg::mealy
