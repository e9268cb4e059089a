#include "querygames/nat/game.hpp"

namespace qg::nat {

Pred<Nat> semantics(const NatQuery& query, NatResponse response) {
  Nat guess = query.guess;
  if (response == NatResponse::too_low) return [guess](const Nat& d) { return guess < d; };
  return [guess](const Nat& d) { return guess > d; };
}

std::string response_name(NatResponse response) {
  return response == NatResponse::too_low ? "too-low" : "too-high";
}

const NatGame& instance() {
  static const NatGame game = [] {
    NatGame g;
    g.name = "nat";
    g.can_terminate = [](const NatQuery&) { return true; };
    g.legal_response = [](const NatQuery&, NatResponse) { return true; };
    g.semantics = [](const NatQuery& q, const NatResponse& r) { return semantics(q, r); };
    g.enumerate_responses = [](const NatQuery&, std::size_t) {
      return std::vector<NatResponse>{NatResponse::too_low, NatResponse::too_high};
    };
    g.responses_exhaustive = [](const NatQuery&) { return true; };
    g.sample = [] {
      std::vector<Nat> ds;
      for (int d = 0; d <= 32; ++d) ds.emplace_back(d);
      return ds;
    }();
    g.concept_label = [](const Nat& d) { return d.str(); };
    g.query_label = [](const NatQuery& q) { return "guess " + q.guess.str(); };
    g.response_label = [](const NatResponse& r) { return response_name(r); };
    g.install_default_enrich();
    return g;
  }();
  return game;
}

std::string interval_key(const IntervalState& interval) {
  if (const auto* h = std::get_if<HalfOpen>(&interval)) return "[" + h->lo.str() + ",inf)";
  const auto& c = std::get<Closed>(interval);
  return "[" + c.lo.str() + "," + c.hi.str() + "]";
}

bool interval_contains(const IntervalState& interval, const Nat& d) {
  if (const auto* h = std::get_if<HalfOpen>(&interval)) return d >= h->lo;
  const auto& c = std::get<Closed>(interval);
  return c.lo <= d && d <= c.hi;
}

}  // namespace qg::nat
