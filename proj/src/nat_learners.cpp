#include "querygames/nat/learners.hpp"

#include <cstdio>
#include <memory>
#include <optional>
#include <stdexcept>
#include <utility>

#include "querygames/core/mix.hpp"

namespace qg::nat {

namespace {

StateToken interval_state(IntervalState interval) {
  std::string key = interval_key(interval);
  return StateToken::of(std::move(interval), std::move(key));
}

Nat log_window_size(const LogNarrow& w) { return pow2(w.span_exponent); }

StateToken log_state(LogState state) {
  std::string key;
  if (std::holds_alternative<LogStart>(state)) {
    key = "[0,inf)";
  } else if (const auto* d = std::get_if<LogDoubling>(&state)) {
    key = "[" + pow2(d->exponent).str() + ",inf)";
  } else {
    const auto& w = std::get<LogNarrow>(state);
    key = "[" + w.base.str() + "," + (w.base + log_window_size(w) - 1).str() + "]";
  }
  return StateToken::of(std::move(state), std::move(key));
}

}  // namespace

NatCertifiedLearner linear_learner() {
  NatLearner l;
  auto state_of = [](Nat n) { return StateToken::of(n, n.str()); };
  l.initial = state_of(0);
  l.step = [state_of](const StateToken& s) {
    Nat n = s.as<Nat>();
    return LearnerStep<NatQuery, NatResponse>{
        NatQuery{n}, [state_of, n](const NatResponse&) { return state_of(n + 1); }};
  };

  StepBoundCertificate<Nat> cert;
  cert.tick = [](const StateToken& s) { return s.as<Nat>(); };
  cert.allows = [](const StateToken& s) {
    Nat n = s.as<Nat>();
    return Pred<Nat>([n](const Nat& d) { return d >= n; });
  };
  cert.bound = [](const Nat& d) { return d + 1; };
  return {std::move(l), std::move(cert)};
}

NatLearner bisect_learner() { return bisect_learner(IntervalState(HalfOpen{0})); }

NatLearner bisect_learner(IntervalState initial) {
  NatLearner l;
  l.initial = interval_state(std::move(initial));
  l.step = [](const StateToken& s) {
    const IntervalState& iv = s.as<IntervalState>();
    if (const auto* h = std::get_if<HalfOpen>(&iv)) {
      Nat n = h->lo;
      return LearnerStep<NatQuery, NatResponse>{NatQuery{2 * n + 1}, [n](const NatResponse& r) {
        if (r == NatResponse::too_low) return interval_state(HalfOpen{2 * n + 2});
        return interval_state(Closed{n, 2 * n});
      }};
    }
    const auto& c = std::get<Closed>(iv);
    Nat n = c.lo, m = c.hi;
    Nat mid = (n + m) / 2;
    return LearnerStep<NatQuery, NatResponse>{NatQuery{mid}, [n, m, mid](const NatResponse& r) {
      if (r == NatResponse::too_low) return interval_state(Closed{mid + 1 < m ? mid + 1 : m, m});
      return interval_state(Closed{n, mid - 1 > n ? mid - 1 : n});
    }};
  };
  return l;
}

NatCertifiedLearner certified_log_learner() {
  NatLearner l;
  l.initial = log_state(LogStart{});
  l.step = [](const StateToken& s) {
    const LogState& state = s.as<LogState>();
    if (std::holds_alternative<LogStart>(state)) {
      return LearnerStep<NatQuery, NatResponse>{NatQuery{1}, [](const NatResponse& r) {
        if (r == NatResponse::too_low) return log_state(LogDoubling{0});
        return log_state(LogNarrow{0, 0});
      }};
    }
    if (const auto* doubling = std::get_if<LogDoubling>(&state)) {
      Nat b = doubling->exponent;
      return LearnerStep<NatQuery, NatResponse>{NatQuery{pow2(b + 1)}, [b](const NatResponse& r) {
        if (r == NatResponse::too_low) return log_state(LogDoubling{b + 1});
        return log_state(LogNarrow{pow2(b), b});
      }};
    }
    const auto& w = std::get<LogNarrow>(state);
    Nat b = w.base, e = w.span_exponent;
    if (e == 0) {
      // Singleton window: keep asking for it.
      return LearnerStep<NatQuery, NatResponse>{NatQuery{b},
                                                [b](const NatResponse&) { return log_state(LogNarrow{b, 0}); }};
    }
    Nat half = pow2(e - 1);
    return LearnerStep<NatQuery, NatResponse>{NatQuery{b + half - 1}, [b, e, half](const NatResponse& r) {
      if (r == NatResponse::too_low) return log_state(LogNarrow{b + half, e - 1});
      return log_state(LogNarrow{b, e - 1});
    }};
  };

  StepBoundCertificate<Nat> cert;
  cert.tick = [](const StateToken& s) -> Nat {
    const LogState& state = s.as<LogState>();
    if (std::holds_alternative<LogStart>(state)) return 0;
    if (const auto* doubling = std::get_if<LogDoubling>(&state)) return doubling->exponent + 1;
    const auto& w = std::get<LogNarrow>(state);
    return 2 + 2 * floor_log2(w.base) - w.span_exponent;
  };
  cert.allows = [](const StateToken& s) -> Pred<Nat> {
    const LogState& state = s.as<LogState>();
    if (std::holds_alternative<LogStart>(state)) return [](const Nat& d) { return d >= 0; };
    if (const auto* doubling = std::get_if<LogDoubling>(&state)) {
      Nat lo = pow2(doubling->exponent);
      return [lo](const Nat& d) { return d >= lo; };
    }
    const auto& w = std::get<LogNarrow>(state);
    Nat lo = w.base, hi = w.base + log_window_size(w) - 1;
    return [lo, hi](const Nat& d) { return lo <= d && d <= hi; };
  };
  cert.bound = [](const Nat& d) { return 3 + 2 * floor_log2(d); };
  return {std::move(l), std::move(cert)};
}

NatLearner two_round_learner(const NatTeacher& stateless_teacher, const Nat& n0) {
  // Probe the table for the least m whose answer is not too-low.
  std::optional<Nat> found;
  bool ends_there = false;
  for (Nat m = 0; m <= n0; ++m) {
    TeacherAnswer<NatResponse> a = stateless_teacher.step(stateless_teacher.initial, NatQuery{m});
    if (a.is_end() || a.response() != NatResponse::too_low) {
      found = m;
      ends_there = a.is_end();
      break;
    }
  }
  if (!found) {
    throw std::invalid_argument("two_round_learner: teacher answers too-low on all of 0.." + n0.str());
  }

  Nat m = *found;
  NatLearner l;
  if (ends_there) {
    // The teacher ends the game on m; one guess suffices.
    StateToken ask = StateToken::of(Nat(0), "ask:" + m.str());
    l.initial = ask;
    l.step = [m, ask](const StateToken&) {
      return LearnerStep<NatQuery, NatResponse>{NatQuery{m}, [ask](const NatResponse&) { return ask; }};
    };
    return l;
  }

  // The teacher answers too-high on m and, by minimality, too-low below it:
  // the two responses exclude everything.
  Nat second = m == 0 ? Nat(0) : m - 1;
  StateToken first = StateToken::of(Nat(0), "ask:" + m.str());
  StateToken rest = StateToken::of(Nat(1), "ask:" + second.str());
  l.initial = first;
  l.step = [m, second, first, rest](const StateToken& s) {
    Nat g = s.as<Nat>() == 0 ? m : second;
    return LearnerStep<NatQuery, NatResponse>{NatQuery{g}, [rest](const NatResponse&) { return rest; }};
  };
  return l;
}

NatLearner random_tree_learner(std::uint64_t seed, const Nat& lo, const Nat& hi) {
  if (hi < lo) throw std::invalid_argument("random_tree_learner: interval is empty");

  struct Node {
    Nat lo, hi;
    std::uint64_t node_seed;
  };
  auto node_state = [](Node n) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(n.node_seed));
    std::string key = std::string("r:") + buf + ":" + n.lo.str() + ":" + n.hi.str();
    return StateToken::of(std::move(n), std::move(key));
  };

  Nat lo0 = lo, hi0 = hi;
  NatLearner l;
  l.initial = node_state(Node{lo, hi, splitmix64(seed)});
  l.step = [node_state, lo0, hi0](const StateToken& s) {
    const Node& node = s.as<Node>();
    Nat width = node.hi - node.lo + 1;
    Nat guess = node.lo + Nat(splitmix64(node.node_seed ^ 0xa5a5a5a5ULL)) % width;
    return LearnerStep<NatQuery, NatResponse>{
        NatQuery{guess}, [node_state, node, guess, lo0, hi0](const NatResponse& r) {
          Nat lo2 = node.lo, hi2 = node.hi;
          if (r == NatResponse::too_low) {
            lo2 = guess + 1;
          } else if (guess == 0) {
            lo2 = 1;  // impossible answer; reset below
            hi2 = 0;
          } else {
            hi2 = guess - 1;
          }
          if (lo2 > hi2) {
            lo2 = lo0;
            hi2 = hi0;
          }
          std::uint64_t child = splitmix64(node.node_seed ^ (r == NatResponse::too_low ? 0x1111ULL : 0x2222ULL));
          return node_state(Node{lo2, hi2, child});
        }};
  };
  return l;
}

NatLearner scripted_learner(std::vector<Nat> guesses) {
  if (guesses.empty()) throw std::invalid_argument("scripted_learner: empty script");
  auto script = std::make_shared<std::vector<Nat>>(std::move(guesses));
  auto state_of = [](std::size_t i) { return StateToken::of(i, "step:" + std::to_string(i)); };
  NatLearner l;
  l.initial = state_of(0);
  l.step = [script, state_of](const StateToken& s) {
    std::size_t i = s.as<std::size_t>();
    std::size_t next = i + 1 < script->size() ? i + 1 : script->size() - 1;
    return LearnerStep<NatQuery, NatResponse>{NatQuery{(*script)[i]},
                                              [state_of, next](const NatResponse&) { return state_of(next); }};
  };
  return l;
}

}  // namespace qg::nat
