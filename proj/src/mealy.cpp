#include "querygames/mealy/mealy.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qg::mealy {

void validate(const Mealy& m) {
  if (m.next.empty()) throw std::invalid_argument("machine needs at least one state");
  if (m.alphabet.empty()) throw std::invalid_argument("machine needs a nonempty alphabet");
  if (m.outputs.empty()) throw std::invalid_argument("machine needs a nonempty output pool");
  if (std::set<char>(m.alphabet.begin(), m.alphabet.end()).size() != m.alphabet.size())
    throw std::invalid_argument("alphabet has duplicate symbols");
  if (std::set<char>(m.outputs.begin(), m.outputs.end()).size() != m.outputs.size())
    throw std::invalid_argument("output pool has duplicate symbols");
  if (m.initial >= m.state_count()) throw std::invalid_argument("initial state out of range");
  for (const auto& row : m.next) {
    if (row.size() != m.alphabet.size())
      throw std::invalid_argument("transition row has wrong width");
    for (const auto& [out, to] : row) {
      if (to >= m.state_count()) throw std::invalid_argument("transition target out of range");
      if (std::find(m.outputs.begin(), m.outputs.end(), out) == m.outputs.end())
        throw std::invalid_argument("transition output not in output pool");
    }
  }
}

std::size_t symbol_index(const Mealy& m, char c) {
  auto it = std::find(m.alphabet.begin(), m.alphabet.end(), c);
  if (it == m.alphabet.end())
    throw unknown_symbol_error(std::string("symbol '") + c + "' not in alphabet");
  return static_cast<std::size_t>(it - m.alphabet.begin());
}

std::string mealy_run(const Mealy& m, std::string_view input) {
  std::string out;
  out.reserve(input.size());
  std::size_t s = m.initial;
  for (char c : input) {
    const auto& [emit, to] = m.next[s][symbol_index(m, c)];
    out.push_back(emit);
    s = to;
  }
  return out;
}

bool operator==(const Mealy& a, const Mealy& b) {
  return a.alphabet == b.alphabet && a.outputs == b.outputs && a.initial == b.initial &&
         a.next == b.next;
}

std::string mealy_key(const Mealy& m) {
  std::ostringstream out;
  out << "mealy:" << m.state_count() << ":" << m.initial << ":";
  for (char c : m.alphabet) out << c;
  out << ":";
  for (char c : m.outputs) out << c;
  out << ":";
  for (const auto& row : m.next)
    for (const auto& [emit, to] : row) out << emit << to << ",";
  return out.str();
}

std::optional<std::string> shortest_output_mismatch(const Mealy& a, const Mealy& b) {
  if (a.alphabet != b.alphabet)
    throw std::invalid_argument("mismatch search needs matching input alphabets");
  const std::size_t nb = b.state_count();
  const std::size_t sigma = a.alphabet.size();

  struct Cell {
    std::size_t parent;
    char symbol;
  };
  std::vector<Cell> via(a.state_count() * nb, Cell{std::size_t(-1), '\0'});
  std::vector<bool> seen(a.state_count() * nb, false);
  auto pack = [nb](std::size_t p, std::size_t q) { return p * nb + q; };
  auto path_to = [&](std::size_t cell, std::size_t start) {
    std::string word;
    for (std::size_t c = cell; c != start; c = via[c].parent) word.push_back(via[c].symbol);
    return std::string(word.rbegin(), word.rend());
  };

  std::size_t start = pack(a.initial, b.initial);
  std::deque<std::size_t> queue{start};
  seen[start] = true;
  while (!queue.empty()) {
    std::size_t cell = queue.front();
    queue.pop_front();
    std::size_t p = cell / nb, q = cell % nb;
    for (std::size_t i = 0; i < sigma; ++i) {
      const auto& [out_a, to_a] = a.next[p][i];
      const auto& [out_b, to_b] = b.next[q][i];
      if (out_a != out_b) return path_to(cell, start) + a.alphabet[i];
      std::size_t succ = pack(to_a, to_b);
      if (!seen[succ]) {
        seen[succ] = true;
        via[succ] = Cell{cell, a.alphabet[i]};
        queue.push_back(succ);
      }
    }
  }
  return std::nullopt;
}

bool mealy_equivalent(const Mealy& a, const Mealy& b) {
  return !shortest_output_mismatch(a, b).has_value();
}

std::string mealy_to_text(const Mealy& m) {
  std::ostringstream out;
  out << "states " << m.state_count() << "\n";
  out << "initial " << m.initial << "\n";
  out << "alphabet";
  for (char c : m.alphabet) out << " " << c;
  out << "\n";
  out << "outputs";
  for (char c : m.outputs) out << " " << c;
  out << "\n";
  for (std::size_t s = 0; s < m.state_count(); ++s)
    for (std::size_t i = 0; i < m.alphabet.size(); ++i)
      out << "trans " << s << " " << m.alphabet[i] << " " << m.next[s][i].first << " "
          << m.next[s][i].second << "\n";
  return out.str();
}

namespace {

std::size_t parse_index(const std::string& tok, std::size_t limit, const char* what,
                        std::size_t line) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(tok, &pos);
  } catch (const std::exception&) {
    throw format_error(std::string("bad ") + what + " '" + tok + "'", line);
  }
  if (pos != tok.size()) throw format_error(std::string("bad ") + what + " '" + tok + "'", line);
  if (v >= limit) throw format_error(std::string(what) + " out of range: " + tok, line);
  return static_cast<std::size_t>(v);
}

}  // namespace

Mealy mealy_from_text(const std::string& text) {
  Mealy m;
  bool have_states = false, have_initial = false, have_alphabet = false, have_outputs = false;
  std::vector<std::pair<std::vector<std::string>, std::size_t>> trans_lines;

  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::vector<std::string> toks;
    std::string t;
    while (ls >> t) toks.push_back(t);
    if (toks.empty() || toks[0][0] == '#') continue;
    const std::string& head = toks[0];
    if (head == "states") {
      if (have_states) throw format_error("duplicate states line", lineno);
      if (toks.size() != 2) throw format_error("states line needs one count", lineno);
      std::size_t n = parse_index(toks[1], std::size_t(1) << 20, "state count", lineno);
      if (n == 0) throw format_error("state count must be positive", lineno);
      m.next.resize(n);
      have_states = true;
    } else if (head == "initial") {
      if (!have_states) throw format_error("initial line before states line", lineno);
      if (have_initial) throw format_error("duplicate initial line", lineno);
      if (toks.size() != 2) throw format_error("initial line needs one state", lineno);
      m.initial = parse_index(toks[1], m.state_count(), "initial state", lineno);
      have_initial = true;
    } else if (head == "alphabet") {
      if (have_alphabet) throw format_error("duplicate alphabet line", lineno);
      if (toks.size() < 2) throw format_error("alphabet must be nonempty", lineno);
      for (std::size_t i = 1; i < toks.size(); ++i) {
        if (toks[i].size() != 1)
          throw format_error("alphabet symbols must be single characters", lineno);
        m.alphabet.push_back(toks[i][0]);
      }
      have_alphabet = true;
    } else if (head == "outputs") {
      if (have_outputs) throw format_error("duplicate outputs line", lineno);
      if (toks.size() < 2) throw format_error("output pool must be nonempty", lineno);
      for (std::size_t i = 1; i < toks.size(); ++i) {
        if (toks[i].size() != 1)
          throw format_error("output symbols must be single characters", lineno);
        m.outputs.push_back(toks[i][0]);
      }
      have_outputs = true;
    } else if (head == "trans") {
      trans_lines.emplace_back(toks, lineno);
    } else {
      throw format_error("unknown directive '" + head + "'", lineno);
    }
  }

  if (!have_states) throw format_error("missing states line", lineno == 0 ? 1 : lineno);
  if (!have_initial) throw format_error("missing initial line", lineno);
  if (!have_alphabet) throw format_error("missing alphabet line", lineno);
  if (!have_outputs) throw format_error("missing outputs line", lineno);

  for (auto& row : m.next)
    row.assign(m.alphabet.size(), {m.outputs[0], std::size_t(0)});
  std::vector<std::vector<bool>> filled(m.state_count(),
                                        std::vector<bool>(m.alphabet.size(), false));
  for (const auto& [toks, ln] : trans_lines) {
    if (toks.size() != 5)
      throw format_error("trans line needs: trans <from> <symbol> <output> <to>", ln);
    std::size_t from = parse_index(toks[1], m.state_count(), "trans source", ln);
    if (toks[2].size() != 1) throw format_error("trans symbol must be a single character", ln);
    std::size_t sym;
    try {
      sym = symbol_index(m, toks[2][0]);
    } catch (const unknown_symbol_error& e) {
      throw format_error(e.what(), ln);
    }
    if (toks[3].size() != 1) throw format_error("trans output must be a single character", ln);
    char out = toks[3][0];
    if (std::find(m.outputs.begin(), m.outputs.end(), out) == m.outputs.end())
      throw format_error("trans output not in output pool", ln);
    std::size_t to = parse_index(toks[4], m.state_count(), "trans target", ln);
    if (filled[from][sym])
      throw format_error("duplicate transition for state " + toks[1] + " symbol " + toks[2], ln);
    m.next[from][sym] = {out, to};
    filled[from][sym] = true;
  }
  for (std::size_t s = 0; s < m.state_count(); ++s)
    for (std::size_t i = 0; i < m.alphabet.size(); ++i)
      if (!filled[s][i])
        throw format_error("missing transition for state " + std::to_string(s) + " symbol " +
                               std::string(1, m.alphabet[i]),
                           lineno);

  validate(m);
  return m;
}

Mealy random_mealy(std::mt19937_64& rng, std::size_t max_states,
                   const std::vector<char>& alphabet, const std::vector<char>& outputs) {
  if (max_states == 0) throw std::invalid_argument("need max_states >= 1");
  if (alphabet.empty() || outputs.empty())
    throw std::invalid_argument("need nonempty alphabet and output pool");
  std::size_t n = 1 + rng() % max_states;
  Mealy m;
  m.alphabet = alphabet;
  m.outputs = outputs;
  m.initial = 0;
  m.next.assign(n, {});
  for (auto& row : m.next)
    for (std::size_t i = 0; i < alphabet.size(); ++i)
      row.push_back({outputs[rng() % outputs.size()], rng() % n});
  return m;
}

}  // namespace qg::mealy
