#include "querygames/dfa/regex.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace qg::dfa {

namespace {

constexpr int eps = -1;

struct nfa {
  struct edge {
    int sym;  // alphabet index, or eps
    std::size_t to;
  };
  std::vector<std::vector<edge>> nodes;

  std::size_t add() {
    nodes.emplace_back();
    return nodes.size() - 1;
  }
  void link(std::size_t from, int sym, std::size_t to) { nodes[from].push_back({sym, to}); }
};

struct frag {
  std::size_t start, accept;
};

// Thompson construction by recursive descent over
//   alt := cat ('|' cat)*    cat := rep+    rep := atom '*'*
//   atom := symbol | '(' alt ')'
struct parser {
  const std::string& pattern;
  const std::vector<char>& alphabet;
  nfa& machine;
  std::size_t pos = 0;

  bool done() const { return pos >= pattern.size(); }
  char peek() const { return pattern[pos]; }

  bool at_atom_start() const {
    return !done() && peek() != ')' && peek() != '|' && peek() != '*';
  }

  frag parse_alt() {
    frag left = parse_cat();
    while (!done() && peek() == '|') {
      ++pos;
      frag right = parse_cat();
      std::size_t s = machine.add(), t = machine.add();
      machine.link(s, eps, left.start);
      machine.link(s, eps, right.start);
      machine.link(left.accept, eps, t);
      machine.link(right.accept, eps, t);
      left = {s, t};
    }
    return left;
  }

  frag parse_cat() {
    frag left = parse_rep();
    while (at_atom_start()) {
      frag right = parse_rep();
      machine.link(left.accept, eps, right.start);
      left = {left.start, right.accept};
    }
    return left;
  }

  frag parse_rep() {
    frag inner = parse_atom();
    while (!done() && peek() == '*') {
      ++pos;
      std::size_t s = machine.add(), t = machine.add();
      machine.link(s, eps, inner.start);
      machine.link(s, eps, t);
      machine.link(inner.accept, eps, inner.start);
      machine.link(inner.accept, eps, t);
      inner = {s, t};
    }
    return inner;
  }

  frag parse_atom() {
    if (done()) throw regex_parse_error("unexpected end of pattern", pos);
    char c = peek();
    if (c == '(') {
      std::size_t open = pos++;
      frag inner = parse_alt();
      if (done() || peek() != ')') throw regex_parse_error("unclosed group", open);
      ++pos;
      return inner;
    }
    if (c == '*') throw regex_parse_error("'*' needs something to repeat", pos);
    if (c == ')' || c == '|')
      throw regex_parse_error(std::string("expected symbol or group before '") + c + "'", pos);
    auto it = std::find(alphabet.begin(), alphabet.end(), c);
    if (it == alphabet.end())
      throw regex_parse_error(std::string("symbol '") + c + "' not in alphabet", pos);
    ++pos;
    std::size_t s = machine.add(), t = machine.add();
    machine.link(s, static_cast<int>(it - alphabet.begin()), t);
    return {s, t};
  }
};

using state_set = std::vector<std::size_t>;  // sorted

state_set closure(const nfa& machine, state_set states) {
  std::set<std::size_t> acc(states.begin(), states.end());
  std::vector<std::size_t> work(states.begin(), states.end());
  while (!work.empty()) {
    std::size_t s = work.back();
    work.pop_back();
    for (const auto& e : machine.nodes[s])
      if (e.sym == eps && acc.insert(e.to).second) work.push_back(e.to);
  }
  return state_set(acc.begin(), acc.end());
}

}  // namespace

Dfa compile_regex(const std::string& pattern, const std::vector<char>& alphabet) {
  if (alphabet.empty()) throw std::invalid_argument("regex alphabet must be nonempty");
  for (char c : alphabet)
    if (c == '(' || c == ')' || c == '|' || c == '*')
      throw std::invalid_argument("regex alphabet may not contain metacharacters");
  if (std::set<char>(alphabet.begin(), alphabet.end()).size() != alphabet.size())
    throw std::invalid_argument("regex alphabet has duplicate symbols");
  if (pattern.empty()) throw regex_parse_error("empty pattern", 0);

  nfa machine;
  parser p{pattern, alphabet, machine};
  frag whole = p.parse_alt();
  if (!p.done())
    throw regex_parse_error(std::string("unexpected '") + p.peek() + "'", p.pos);

  // Subset construction; the empty set acts as the dead state when reached.
  Dfa out;
  out.alphabet = alphabet;
  std::map<state_set, std::size_t> ids;
  std::vector<state_set> order;
  auto intern = [&](state_set s) {
    auto [it, fresh] = ids.emplace(std::move(s), order.size());
    if (fresh) order.push_back(it->first);
    return it->second;
  };
  intern(closure(machine, {whole.start}));
  for (std::size_t i = 0; i < order.size(); ++i) {
    state_set current = order[i];  // copy: order may reallocate below
    out.accepting.push_back(std::binary_search(current.begin(), current.end(), whole.accept));
    out.next.emplace_back();
    for (std::size_t sym = 0; sym < alphabet.size(); ++sym) {
      std::set<std::size_t> targets;
      for (std::size_t s : current)
        for (const auto& e : machine.nodes[s])
          if (e.sym == static_cast<int>(sym)) targets.insert(e.to);
      out.next[i].push_back(intern(closure(machine, state_set(targets.begin(), targets.end()))));
    }
  }
  out.initial = 0;
  validate(out);
  return out;
}

}  // namespace qg::dfa
