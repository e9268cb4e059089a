#ifndef QUERYGAMES_DFA_GAMES_HPP
#define QUERYGAMES_DFA_GAMES_HPP

#include <string>
#include <variant>
#include <vector>

#include "querygames/core/game.hpp"
#include "querygames/dfa/dfa.hpp"
#include "querygames/num.hpp"

namespace qg::dfa {

// Membership query: is this word in the hidden language?
struct MqQuery {
  std::string word;
};

// Equivalence query: does this machine match the hidden language?
struct EqQuery {
  Dfa hypothesis;
};

using DfaQuery = std::variant<MqQuery, EqQuery>;

struct BitResponse {
  bool value;
};

// Counterexample to an equivalence query.
struct CeResponse {
  std::string word;
};

// Bare rejection of an equivalence query, for the variant where teachers
// never reveal counterexamples.
struct NoResponse {};

using DfaResponse = std::variant<BitResponse, CeResponse, NoResponse>;

bool operator==(const MqQuery& a, const MqQuery& b);
bool operator==(const EqQuery& a, const EqQuery& b);
bool operator==(const BitResponse& a, const BitResponse& b);
bool operator==(const CeResponse& a, const CeResponse& b);
bool operator==(const NoResponse& a, const NoResponse& b);

// Concept for the counterexample-size variant: a machine together with the
// longest counterexample the concept is willing to accept against an
// equivalence query.
struct BoundedDfa {
  Dfa machine;
  Nat length_bound;
};

std::string dfa_query_label(const DfaQuery& q);
std::string dfa_response_label(const DfaResponse& r);

// Classic machine-learning game: membership queries answered by a bit,
// equivalence queries by a counterexample word or the end of the game.
GameInstance<Dfa, DfaQuery, DfaResponse> standard_instance(std::vector<char> alphabet);

// Variant where equivalence queries are only ever answered "no" (or end the
// game); a "no" means some separating word exists but is not revealed.
GameInstance<Dfa, DfaQuery, DfaResponse> restricted_instance(std::vector<char> alphabet);

// Variant whose concepts carry a counterexample length budget: a
// counterexample only counts against concepts whose budget it fits.
GameInstance<BoundedDfa, DfaQuery, DfaResponse> ce_size_instance(std::vector<char> alphabet);

}  // namespace qg::dfa

#endif
