#include "querygames/dfa/dfa.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qg::dfa {

void validate(const Dfa& m) {
  const std::size_t n = m.accepting.size();
  if (n == 0) throw std::invalid_argument("dfa needs at least one state");
  if (m.alphabet.empty()) throw std::invalid_argument("dfa needs a nonempty alphabet");
  std::set<char> seen(m.alphabet.begin(), m.alphabet.end());
  if (seen.size() != m.alphabet.size())
    throw std::invalid_argument("dfa alphabet has duplicate symbols");
  if (m.initial >= n) throw std::invalid_argument("dfa initial state out of range");
  if (m.next.size() != n) throw std::invalid_argument("dfa transition table has wrong row count");
  for (const auto& row : m.next) {
    if (row.size() != m.alphabet.size())
      throw std::invalid_argument("dfa transition row has wrong width");
    for (std::size_t t : row)
      if (t >= n) throw std::invalid_argument("dfa transition target out of range");
  }
}

std::size_t symbol_index(const Dfa& m, char c) {
  auto it = std::find(m.alphabet.begin(), m.alphabet.end(), c);
  if (it == m.alphabet.end())
    throw unknown_symbol_error(std::string("symbol '") + c + "' not in alphabet");
  return static_cast<std::size_t>(it - m.alphabet.begin());
}

std::size_t run_state(const Dfa& m, std::string_view word) {
  std::size_t s = m.initial;
  for (char c : word) s = m.next[s][symbol_index(m, c)];
  return s;
}

bool accepts(const Dfa& m, std::string_view word) { return m.accepting[run_state(m, word)]; }

bool operator==(const Dfa& a, const Dfa& b) {
  return a.alphabet == b.alphabet && a.initial == b.initial && a.accepting == b.accepting &&
         a.next == b.next;
}

std::string dfa_key(const Dfa& m) {
  std::ostringstream out;
  out << "dfa:" << m.state_count() << ":" << m.initial << ":";
  for (bool b : m.accepting) out << (b ? '1' : '0');
  out << ":";
  for (char c : m.alphabet) out << c;
  out << ":";
  for (const auto& row : m.next)
    for (std::size_t t : row) out << t << ",";
  return out.str();
}

std::string dfa_to_text(const Dfa& m) {
  std::ostringstream out;
  out << "states " << m.state_count() << "\n";
  out << "initial " << m.initial << "\n";
  out << "accepting";
  for (std::size_t s = 0; s < m.state_count(); ++s)
    if (m.accepting[s]) out << " " << s;
  out << "\n";
  out << "alphabet";
  for (char c : m.alphabet) out << " " << c;
  out << "\n";
  for (std::size_t s = 0; s < m.state_count(); ++s)
    for (std::size_t i = 0; i < m.alphabet.size(); ++i)
      out << "trans " << s << " " << m.alphabet[i] << " " << m.next[s][i] << "\n";
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

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> toks;
  std::string t;
  while (in >> t) toks.push_back(t);
  return toks;
}

}  // namespace

Dfa dfa_from_text(const std::string& text) {
  Dfa m;
  bool have_states = false, have_initial = false, have_accepting = false, have_alphabet = false;
  std::vector<std::vector<bool>> filled;
  std::vector<std::pair<std::vector<std::string>, std::size_t>> trans_lines;
  std::vector<std::size_t> accepting_states;
  std::size_t accepting_line = 0;

  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = split_ws(line);
    if (toks.empty() || toks[0][0] == '#') continue;
    const std::string& head = toks[0];
    if (head == "states") {
      if (have_states) throw format_error("duplicate states line", lineno);
      if (toks.size() != 2) throw format_error("states line needs one count", lineno);
      std::size_t n = parse_index(toks[1], std::size_t(1) << 20, "state count", lineno);
      if (n == 0) throw format_error("state count must be positive", lineno);
      m.accepting.assign(n, false);
      have_states = true;
    } else if (head == "initial") {
      if (have_initial) throw format_error("duplicate initial line", lineno);
      if (!have_states) throw format_error("initial line before states line", lineno);
      if (toks.size() != 2) throw format_error("initial line needs one state", lineno);
      m.initial = parse_index(toks[1], m.state_count(), "initial state", lineno);
      have_initial = true;
    } else if (head == "accepting") {
      if (have_accepting) throw format_error("duplicate accepting line", lineno);
      if (!have_states) throw format_error("accepting line before states line", lineno);
      for (std::size_t i = 1; i < toks.size(); ++i)
        accepting_states.push_back(parse_index(toks[i], m.state_count(), "accepting state", lineno));
      accepting_line = lineno;
      have_accepting = true;
    } else if (head == "alphabet") {
      if (have_alphabet) throw format_error("duplicate alphabet line", lineno);
      if (toks.size() < 2) throw format_error("alphabet must be nonempty", lineno);
      for (std::size_t i = 1; i < toks.size(); ++i) {
        if (toks[i].size() != 1)
          throw format_error("alphabet symbols must be single characters", lineno);
        m.alphabet.push_back(toks[i][0]);
      }
      have_alphabet = true;
    } else if (head == "trans") {
      trans_lines.emplace_back(toks, lineno);
    } else {
      throw format_error("unknown directive '" + head + "'", lineno);
    }
  }

  if (!have_states) throw format_error("missing states line", lineno == 0 ? 1 : lineno);
  if (!have_initial) throw format_error("missing initial line", lineno);
  if (!have_alphabet) throw format_error("missing alphabet line", lineno);
  for (std::size_t s : accepting_states) m.accepting[s] = true;
  (void)accepting_line;

  m.next.assign(m.state_count(), std::vector<std::size_t>(m.alphabet.size(), 0));
  filled.assign(m.state_count(), std::vector<bool>(m.alphabet.size(), false));
  for (const auto& [toks, ln] : trans_lines) {
    if (toks.size() != 4) throw format_error("trans line needs: trans <from> <symbol> <to>", ln);
    std::size_t from = parse_index(toks[1], m.state_count(), "trans source", ln);
    if (toks[2].size() != 1) throw format_error("trans symbol must be a single character", ln);
    std::size_t sym;
    try {
      sym = symbol_index(m, toks[2][0]);
    } catch (const unknown_symbol_error& e) {
      throw format_error(e.what(), ln);
    }
    std::size_t to = parse_index(toks[3], m.state_count(), "trans target", ln);
    if (filled[from][sym])
      throw format_error("duplicate transition for state " + toks[1] + " symbol " + toks[2], ln);
    m.next[from][sym] = to;
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

}  // namespace qg::dfa
