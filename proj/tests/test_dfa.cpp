#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "querygames/dfa/dfa.hpp"
#include "querygames/dfa/enumerate.hpp"
#include "querygames/dfa/gen.hpp"
#include "querygames/dfa/product.hpp"
#include "querygames/dfa/regex.hpp"
#include "querygames/dfa/trace_io.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

using namespace qg::dfa;

namespace {

const std::vector<char> ab{'a', 'b'};
const std::vector<char> just_a{'a'};

// Second opinion on acceptance: map-based lookup instead of index tables.
bool naive_accepts(const Dfa& m, const std::string& w) {
  std::map<std::pair<std::size_t, char>, std::size_t> delta;
  for (std::size_t s = 0; s < m.state_count(); ++s)
    for (std::size_t i = 0; i < m.alphabet.size(); ++i)
      delta[{s, m.alphabet[i]}] = m.next[s][i];
  std::size_t s = m.initial;
  for (char c : w) s = delta.at({s, c});
  return m.accepting[s];
}

// Second opinion on separating words: scan all words shortest-first.
std::optional<std::string> brute_counterexample(const Dfa& a, const Dfa& b, std::size_t max_len) {
  for (const auto& w : words_up_to(max_len, a.alphabet))
    if (accepts(a, w) != accepts(b, w)) return w;
  return std::nullopt;
}

// Even number of a's over {a,b}.
Dfa even_as() {
  Dfa m;
  m.alphabet = ab;
  m.initial = 0;
  m.accepting = {true, false};
  m.next = {{1, 0}, {0, 1}};
  return m;
}

}  // namespace

TEST_CASE("acceptance matches a map-based second evaluator") {
  Dfa m = even_as();
  CHECK(accepts(m, ""));
  CHECK(!accepts(m, "a"));
  CHECK(accepts(m, "aa"));
  CHECK(!accepts(m, "bba"));
  CHECK(accepts(m, "baba"));

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Dfa r = random_dfa(rng, 4, ab);
    std::string w = random_word(rng, 8, ab);
    CHECK(accepts(r, w) == naive_accepts(r, w));
  }
}

TEST_CASE("acceptance rejects foreign symbols") {
  CHECK_THROWS_AS(accepts(even_as(), "abc"), qg::unknown_symbol_error);
  CHECK_THROWS_AS(symbol_index(even_as(), 'z'), qg::unknown_symbol_error);
}

TEST_CASE("shape validation catches malformed machines") {
  Dfa m = even_as();
  validate(m);

  Dfa bad = m;
  bad.initial = 5;
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);

  bad = m;
  bad.next[0][1] = 9;
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);

  bad = m;
  bad.alphabet = {'a', 'a'};
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);

  bad = m;
  bad.next.pop_back();
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);
}

TEST_CASE("text format round-trips and freezes the layout") {
  Dfa m = even_as();
  std::string text = dfa_to_text(m);
  CHECK(text ==
        "states 2\n"
        "initial 0\n"
        "accepting 0\n"
        "alphabet a b\n"
        "trans 0 a 1\n"
        "trans 0 b 0\n"
        "trans 1 a 0\n"
        "trans 1 b 1\n");
  CHECK(dfa_from_text(text) == m);

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    Dfa r = random_dfa(rng, 5, ab);
    CHECK(dfa_from_text(dfa_to_text(r)) == r);
  }
}

TEST_CASE("text format reports the offending line") {
  auto line_of = [](const std::string& text) {
    try {
      dfa_from_text(text);
    } catch (const qg::format_error& e) {
      return e.line;
    }
    return std::size_t(0);
  };

  CHECK(line_of("states 1\ninitial 3\nalphabet a\ntrans 0 a 0\n") == 2);
  CHECK(line_of("states 1\ninitial 0\nalphabet a\ntrans 0 c 0\n") == 4);
  CHECK(line_of("states 1\ninitial 0\nalphabet a\ntrans 0 a 0\ntrans 0 a 0\n") == 5);
  CHECK(line_of("states 1\ninitial 0\nalphabet a\nfrobnicate\n") == 4);
  // comments and blank lines are fine; missing trans reported at the end
  CHECK(line_of("# even\nstates 2\ninitial 0\nalphabet a\n\ntrans 0 a 1\n") == 6);
  CHECK_THROWS_AS(dfa_from_text("initial 0\n"), qg::format_error);
}

TEST_CASE("separating word search agrees with the shortest-first scan") {
  std::mt19937_64 rng(23);
  int disagreements_possible = 0;
  for (int trial = 0; trial < 300; ++trial) {
    Dfa a = random_dfa(rng, 4, ab);
    Dfa b = random_dfa(rng, 4, ab);
    std::size_t cap = a.state_count() * b.state_count();  // length bound for any shortest ce
    auto fast = shortest_counterexample(a, b);
    auto brute = brute_counterexample(a, b, cap);
    CHECK(fast == brute);  // same word, not merely same length
    if (fast) ++disagreements_possible;
  }
  CHECK(disagreements_possible > 50);  // the sweep saw real separations
}

TEST_CASE("separating word search basics") {
  Dfa m = even_as();
  CHECK(!shortest_counterexample(m, m).has_value());
  CHECK(equivalent(m, m));

  Dfa flipped = m;
  flipped.accepting = {false, true};
  auto ce = shortest_counterexample(m, flipped);
  REQUIRE(ce.has_value());
  CHECK(*ce == "");  // differ already on the empty word

  Dfa other = m;
  other.alphabet = {'x', 'y'};
  CHECK_THROWS_AS(shortest_counterexample(m, other), std::invalid_argument);
}

TEST_CASE("word enumeration is shortest-first then lex") {
  CHECK(words_of_length(0, ab) == std::vector<std::string>{""});
  CHECK(words_of_length(2, ab) == std::vector<std::string>{"aa", "ab", "ba", "bb"});
  CHECK(words_up_to(2, ab) ==
        std::vector<std::string>{"", "a", "b", "aa", "ab", "ba", "bb"});
  CHECK(words_up_to(3, just_a) == std::vector<std::string>{"", "a", "aa", "aaa"});
}

TEST_CASE("reachability and canonical renumbering") {
  // State 2 unreachable from 0.
  Dfa m;
  m.alphabet = just_a;
  m.initial = 0;
  m.accepting = {false, true, true};
  m.next = {{1}, {0}, {2}};
  CHECK(reachable_states(m) == std::vector<std::size_t>{0, 1});
  Dfa canon = canonical_reachable(m);
  CHECK(canon.state_count() == 2);
  CHECK(equivalent(canon, m));

  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    Dfa r = random_dfa(rng, 5, ab);
    Dfa c = canonical_reachable(r);
    CHECK(equivalent(r, c));                       // same language
    CHECK(canonical_reachable(c) == c);            // idempotent
    CHECK(reachable_states(c).size() == c.state_count());
  }
}

TEST_CASE("machine enumeration: the one-letter two-state class has 10 members") {
  auto machines = enumerate_dfas(2, just_a);
  CHECK(machines.size() == 10);
  std::set<std::string> keys;
  for (const Dfa& m : machines) {
    validate(m);
    CHECK(m.state_count() <= 2);
    CHECK(canonical_reachable(m) == m);  // members are canonical forms
    keys.insert(dfa_key(m));
  }
  CHECK(keys.size() == machines.size());

  // Completeness: every raw machine of this size reduces to a member.
  int raw_checked = 0;
  for (std::size_t k = 1; k <= 2; ++k) {
    for (std::size_t t0 = 0; t0 < k; ++t0)
      for (std::size_t t1 = 0; t1 < k; ++t1)
        for (std::size_t bits = 0; bits < (std::size_t(1) << k); ++bits) {
          Dfa raw;
          raw.alphabet = just_a;
          raw.initial = 0;
          raw.accepting.resize(k);
          for (std::size_t s = 0; s < k; ++s) raw.accepting[s] = (bits >> s) & 1;
          raw.next = {{t0}};
          if (k == 2) raw.next.push_back({t1});
          CHECK(keys.count(dfa_key(canonical_reachable(raw))) == 1);
          ++raw_checked;
        }
  }
  CHECK(raw_checked == 2 + 16);
}

TEST_CASE("machine enumeration over two letters") {
  auto machines = enumerate_dfas(2, ab);
  // 1-state: 2 acceptance choices. 2-state: 12 fully reachable tables x 4.
  CHECK(machines.size() == 50);
  CHECK(enumerate_dfas(1, ab).size() == 2);
  CHECK_THROWS_AS(enumerate_dfas(9, ab), std::invalid_argument);
}

TEST_CASE("single-word machines") {
  Dfa m = singleton_dfa("ab", ab);
  CHECK(m.state_count() == 4);
  CHECK(accepts(m, "ab"));
  for (const auto& w : words_up_to(4, ab))
    CHECK(accepts(m, w) == (w == "ab"));

  Dfa empty_word = singleton_dfa("", ab);
  CHECK(empty_word.state_count() == 2);
  CHECK(accepts(empty_word, ""));
  CHECK(!accepts(empty_word, "a"));

  CHECK(unique_accepted_word(m, 5) == "ab");
  CHECK(unique_accepted_word(singleton_dfa("bba", ab), 5) == "bba");
  CHECK(!unique_accepted_word(even_as(), 6).has_value());
  Dfa nothing = even_as();
  nothing.accepting = {false, false};
  CHECK(!unique_accepted_word(nothing, 6).has_value());
}

TEST_CASE("pattern compiler matches hand-written language predicates") {
  struct Sample {
    std::string pattern;
    std::function<bool(const std::string&)> in_language;
  };
  auto all_of_char = [](const std::string& w, char c) {
    return std::all_of(w.begin(), w.end(), [c](char x) { return x == c; });
  };
  std::vector<Sample> samples = {
      {"a", [](const std::string& w) { return w == "a"; }},
      {"ab", [](const std::string& w) { return w == "ab"; }},
      {"a|b", [](const std::string& w) { return w == "a" || w == "b"; }},
      {"a*", [&](const std::string& w) { return all_of_char(w, 'a'); }},
      {"(ab)*",
       [](const std::string& w) {
         if (w.size() % 2) return false;
         for (std::size_t i = 0; i < w.size(); i += 2)
           if (w[i] != 'a' || w[i + 1] != 'b') return false;
         return true;
       }},
      {"a(a|b)*", [](const std::string& w) { return !w.empty() && w[0] == 'a'; }},
      {"(a|b)*abb",
       [](const std::string& w) { return w.size() >= 3 && w.substr(w.size() - 3) == "abb"; }},
      {"a*b*",
       [](const std::string& w) {
         auto split = w.find('b');
         if (split == std::string::npos) return true;
         return w.find('a', split) == std::string::npos;
       }},
      {"(aa)*", [&](const std::string& w) { return all_of_char(w, 'a') && w.size() % 2 == 0; }},
      {"b|(ab)*a",
       [](const std::string& w) {
         if (w == "b") return true;
         if (w.size() % 2 == 0) return false;
         for (std::size_t i = 0; i < w.size(); ++i)
           if (w[i] != (i % 2 ? 'b' : 'a')) return false;
         return true;
       }},
  };
  for (const auto& s : samples) {
    CAPTURE(s.pattern);
    Dfa m = compile_regex(s.pattern, ab);
    validate(m);
    for (const auto& w : words_up_to(6, ab)) {
      CAPTURE(w);
      CHECK(accepts(m, w) == s.in_language(w));
    }
  }
}

TEST_CASE("pattern compiler reports error positions") {
  auto position_of = [](const std::string& pattern) {
    try {
      compile_regex(pattern, ab);
    } catch (const qg::regex_parse_error& e) {
      return e.position;
    }
    return std::size_t(9999);
  };
  CHECK(position_of("") == 0);
  CHECK(position_of("a(") == 2);
  CHECK(position_of("a)b") == 1);
  CHECK(position_of("*a") == 0);
  CHECK(position_of("a||b") == 2);
  CHECK(position_of("ac") == 1);
  CHECK(position_of("(ab") == 0);
  CHECK(position_of("a|") == 2);
  CHECK_THROWS_AS(compile_regex("a", std::vector<char>{'*'}), std::invalid_argument);
}

TEST_CASE("machine JSON round-trips byte-for-byte") {
  Dfa m = even_as();
  std::string j = dfa_to_json(m);
  Dfa back = dfa_from_json_text(j);
  CHECK(back == m);
  CHECK(dfa_to_json(back) == j);

  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    Dfa r = random_dfa(rng, 5, ab);
    CHECK(dfa_from_json_text(dfa_to_json(r)) == r);
  }

  CHECK_THROWS_AS(dfa_from_json_text("{\"states\":1}"), qg::trace_parse_error);
  CHECK_THROWS_AS(dfa_from_json_text("not json"), qg::trace_parse_error);
  // missing transition row
  CHECK_THROWS_AS(
      dfa_from_json_text(
          R"({"accepting":[],"alphabet":"ab","initial":0,"states":1,"trans":[[0,"a",0]]})"),
      qg::trace_parse_error);
}
