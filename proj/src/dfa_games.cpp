#include "querygames/dfa/games.hpp"

#include <algorithm>
#include <stdexcept>

#include "querygames/dfa/enumerate.hpp"
#include "querygames/dfa/product.hpp"

namespace qg::dfa {

bool operator==(const MqQuery& a, const MqQuery& b) { return a.word == b.word; }
bool operator==(const EqQuery& a, const EqQuery& b) { return a.hypothesis == b.hypothesis; }
bool operator==(const BitResponse& a, const BitResponse& b) { return a.value == b.value; }
bool operator==(const CeResponse& a, const CeResponse& b) { return a.word == b.word; }
bool operator==(const NoResponse&, const NoResponse&) { return true; }

std::string dfa_query_label(const DfaQuery& q) {
  if (const auto* mq = std::get_if<MqQuery>(&q)) return "mq:'" + mq->word + "'";
  return "eq:" + dfa_key(std::get<EqQuery>(q).hypothesis);
}

std::string dfa_response_label(const DfaResponse& r) {
  if (const auto* bit = std::get_if<BitResponse>(&r)) return bit->value ? "bit:1" : "bit:0";
  if (const auto* ce = std::get_if<CeResponse>(&r)) return "ce:'" + ce->word + "'";
  return "no";
}

namespace {

bool word_over(const std::vector<char>& alphabet, const std::string& w) {
  return std::all_of(w.begin(), w.end(), [&](char c) {
    return std::find(alphabet.begin(), alphabet.end(), c) != alphabet.end();
  });
}

bool is_eq(const DfaQuery& q) { return std::holds_alternative<EqQuery>(q); }

template <typename D>
void fill_common(GameInstance<D, DfaQuery, DfaResponse>& game) {
  game.can_terminate = is_eq;
  game.query_label = dfa_query_label;
  game.response_label = dfa_response_label;
}

std::vector<DfaResponse> both_bits() {
  return {DfaResponse{BitResponse{false}}, DfaResponse{BitResponse{true}}};
}

}  // namespace

GameInstance<Dfa, DfaQuery, DfaResponse> standard_instance(std::vector<char> alphabet) {
  GameInstance<Dfa, DfaQuery, DfaResponse> game;
  game.name = "dfa";
  fill_common(game);
  game.legal_response = [alphabet](const DfaQuery& q, const DfaResponse& r) {
    if (std::holds_alternative<MqQuery>(q)) return std::holds_alternative<BitResponse>(r);
    const auto* ce = std::get_if<CeResponse>(&r);
    return ce != nullptr && word_over(alphabet, ce->word);
  };
  game.semantics = [](const DfaQuery& q, const DfaResponse& r) -> Pred<Dfa> {
    if (const auto* mq = std::get_if<MqQuery>(&q)) {
      bool bit = std::get<BitResponse>(r).value;
      std::string w = mq->word;
      return [w, bit](const Dfa& m) { return accepts(m, w) == bit; };
    }
    Dfa h = std::get<EqQuery>(q).hypothesis;
    std::string w = std::get<CeResponse>(r).word;
    return [h, w](const Dfa& m) { return accepts(m, w) != accepts(h, w); };
  };
  game.enumerate_responses = [alphabet](const DfaQuery& q, std::size_t bound) {
    if (std::holds_alternative<MqQuery>(q)) return both_bits();
    std::vector<DfaResponse> out;
    for (auto& w : words_up_to(bound, alphabet)) out.push_back(CeResponse{std::move(w)});
    return out;
  };
  game.responses_exhaustive = [](const DfaQuery& q) { return !is_eq(q); };
  game.sample = enumerate_dfas(2, alphabet);
  game.concept_label = [](const Dfa& m) { return dfa_key(m); };
  game.install_default_enrich();
  return game;
}

GameInstance<Dfa, DfaQuery, DfaResponse> restricted_instance(std::vector<char> alphabet) {
  GameInstance<Dfa, DfaQuery, DfaResponse> game;
  game.name = "dfa-restricted";
  fill_common(game);
  game.legal_response = [](const DfaQuery& q, const DfaResponse& r) {
    if (std::holds_alternative<MqQuery>(q)) return std::holds_alternative<BitResponse>(r);
    return std::holds_alternative<NoResponse>(r);
  };
  game.semantics = [](const DfaQuery& q, const DfaResponse& r) -> Pred<Dfa> {
    if (const auto* mq = std::get_if<MqQuery>(&q)) {
      bool bit = std::get<BitResponse>(r).value;
      std::string w = mq->word;
      return [w, bit](const Dfa& m) { return accepts(m, w) == bit; };
    }
    // "no" promises a separating word exists, without naming one.
    Dfa h = std::get<EqQuery>(q).hypothesis;
    return [h](const Dfa& m) { return !equivalent(m, h); };
  };
  game.enumerate_responses = [](const DfaQuery& q, std::size_t) {
    if (std::holds_alternative<MqQuery>(q)) return both_bits();
    return std::vector<DfaResponse>{DfaResponse{NoResponse{}}};
  };
  game.responses_exhaustive = [](const DfaQuery&) { return true; };
  game.sample = enumerate_dfas(2, alphabet);
  game.concept_label = [](const Dfa& m) { return dfa_key(m); };
  game.install_default_enrich();
  return game;
}

GameInstance<BoundedDfa, DfaQuery, DfaResponse> ce_size_instance(std::vector<char> alphabet) {
  GameInstance<BoundedDfa, DfaQuery, DfaResponse> game;
  game.name = "dfa-ce-size";
  fill_common(game);
  game.legal_response = [alphabet](const DfaQuery& q, const DfaResponse& r) {
    if (std::holds_alternative<MqQuery>(q)) return std::holds_alternative<BitResponse>(r);
    const auto* ce = std::get_if<CeResponse>(&r);
    return ce != nullptr && word_over(alphabet, ce->word);
  };
  game.semantics = [](const DfaQuery& q, const DfaResponse& r) -> Pred<BoundedDfa> {
    if (const auto* mq = std::get_if<MqQuery>(&q)) {
      bool bit = std::get<BitResponse>(r).value;
      std::string w = mq->word;
      return [w, bit](const BoundedDfa& c) { return accepts(c.machine, w) == bit; };
    }
    // A counterexample only speaks against concepts whose budget admits it.
    Dfa h = std::get<EqQuery>(q).hypothesis;
    std::string w = std::get<CeResponse>(r).word;
    return [h, w](const BoundedDfa& c) {
      return Nat(w.size()) <= c.length_bound && accepts(c.machine, w) != accepts(h, w);
    };
  };
  game.enumerate_responses = [alphabet](const DfaQuery& q, std::size_t bound) {
    if (std::holds_alternative<MqQuery>(q)) return both_bits();
    std::vector<DfaResponse> out;
    for (auto& w : words_up_to(bound, alphabet)) out.push_back(CeResponse{std::move(w)});
    return out;
  };
  game.responses_exhaustive = [](const DfaQuery& q) { return !is_eq(q); };
  for (const Dfa& m : enumerate_dfas(2, alphabet))
    for (int b : {0, 1, 3}) game.sample.push_back(BoundedDfa{m, Nat(b)});
  game.concept_label = [](const BoundedDfa& c) {
    return dfa_key(c.machine) + "<=" + c.length_bound.str();
  };
  game.install_default_enrich();
  return game;
}

}  // namespace qg::dfa
