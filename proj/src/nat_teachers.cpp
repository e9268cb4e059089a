#include "querygames/nat/teachers.hpp"

#include <stdexcept>

namespace qg::nat {

namespace {

StateToken unit_state(const std::string& key) { return StateToken::of(std::monostate{}, key); }

StateToken closed_state(Closed interval) {
  std::string key = interval_key(IntervalState(interval));
  return StateToken::of(std::move(interval), std::move(key));
}

}  // namespace

NatTeacher honest_teacher(const Nat& d) {
  NatTeacher t;
  t.initial = unit_state("honest:" + d.str());
  t.step = [d](const StateToken& s, const NatQuery& q) {
    if (q.guess == d) return TeacherAnswer<NatResponse>::end();
    NatResponse r = q.guess < d ? NatResponse::too_low : NatResponse::too_high;
    return TeacherAnswer<NatResponse>::reply(r, s);
  };
  return t;
}

NatTeacher constant_too_low_teacher() {
  NatTeacher t;
  t.initial = unit_state("const-too-low");
  t.step = [](const StateToken& s, const NatQuery&) {
    return TeacherAnswer<NatResponse>::reply(NatResponse::too_low, s);
  };
  return t;
}

NatTeacher adversarial_teacher(const Nat& lo, const Nat& hi) {
  if (lo < 0 || hi < lo) throw std::invalid_argument("adversarial_teacher: interval is empty");
  NatTeacher t;
  t.initial = closed_state(Closed{lo, hi});
  t.step = [](const StateToken& s, const NatQuery& q) {
    const Closed& iv = s.as<Closed>();
    const Nat& k = q.guess;
    if (iv.lo == k && k == iv.hi) return TeacherAnswer<NatResponse>::end();
    Nat mid = (iv.lo + iv.hi) / 2;
    if (k <= mid) {
      Nat lo2 = k + 1 > iv.lo ? k + 1 : iv.lo;
      return TeacherAnswer<NatResponse>::reply(NatResponse::too_low, closed_state(Closed{lo2, iv.hi}));
    }
    Nat hi2 = k - 1 < iv.hi ? k - 1 : iv.hi;
    return TeacherAnswer<NatResponse>::reply(NatResponse::too_high, closed_state(Closed{iv.lo, hi2}));
  };
  return t;
}

Closed adversarial_interval(const StateToken& state) { return state.as<Closed>(); }

}  // namespace qg::nat
