// Python bindings for the query game engine: the number-guessing game, the
// acceptor games, and the transducer game, plus bound checking utilities.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "querygames/core/certificate.hpp"
#include "querygames/core/engine.hpp"
#include "querygames/dfa/enumerate.hpp"
#include "querygames/dfa/games.hpp"
#include "querygames/dfa/learners.hpp"
#include "querygames/dfa/product.hpp"
#include "querygames/dfa/regex.hpp"
#include "querygames/dfa/teachers.hpp"
#include "querygames/dfa/trace_io.hpp"
#include "querygames/errors.hpp"
#include "querygames/mealy/games.hpp"
#include "querygames/mealy/mealy.hpp"
#include "querygames/mealy/trace_io.hpp"
#include "querygames/nat/bounds.hpp"
#include "querygames/nat/game.hpp"
#include "querygames/nat/learners.hpp"
#include "querygames/nat/teachers.hpp"
#include "querygames/nat/trace_io.hpp"
#include "querygames/num.hpp"

namespace py = pybind11;
using qg::Nat;

// Arbitrary-precision values cross the boundary as Python ints, mediated by
// decimal strings so no precision is lost in either direction.
namespace pybind11::detail {
template <>
struct type_caster<Nat> {
 public:
  PYBIND11_TYPE_CASTER(Nat, const_name("int"));

  bool load(handle src, bool) {
    if (!PyLong_Check(src.ptr())) return false;
    try {
      value = Nat(py::str(src).cast<std::string>());
    } catch (...) {
      return false;
    }
    return true;
  }

  static handle cast(const Nat& n, return_value_policy, handle) {
    return PyLong_FromString(n.str().c_str(), nullptr, 10);
  }
};
}  // namespace pybind11::detail

namespace {

std::vector<char> chars_of(const std::string& s) { return {s.begin(), s.end()}; }
std::string string_of(const std::vector<char>& v) { return {v.begin(), v.end()}; }

py::object opt_str(const std::optional<std::string>& s) {
  return s ? py::object(py::str(*s)) : py::object(py::none());
}

// --- number game ------------------------------------------------------------

struct PyNatLearner {
  qg::nat::NatLearner inner;
};
struct PyNatTeacher {
  qg::nat::NatTeacher inner;
};

py::dict nat_play(const PyNatLearner& learner, const PyNatTeacher& teacher, const Nat& max_rounds) {
  auto trace = qg::run(qg::nat::instance(), learner.inner, teacher.inner, max_rounds);
  py::list rounds;
  for (const auto& r : trace.rounds) {
    py::dict d;
    d["guess"] = r.query.guess;
    d["response"] =
        r.response ? py::object(py::str(qg::nat::response_name(*r.response))) : py::object(py::none());
    rounds.append(d);
  }
  py::dict out;
  out["rounds"] = rounds;
  out["outcome"] = qg::outcome_name(trace.outcome);
  out["round_count"] = trace.round_count();
  out["jsonl"] = qg::nat::trace_to_jsonl(trace);
  return out;
}

py::dict nat_verify(const std::string& learner, const Nat& max_concept, std::size_t depth) {
  qg::nat::NatCertifiedLearner certified;
  if (learner == "log")
    certified = qg::nat::certified_log_learner();
  else if (learner == "linear")
    certified = qg::nat::linear_learner();
  else
    throw std::invalid_argument("certified learners are 'log' and 'linear'");

  std::vector<Nat> sample;
  for (Nat d = 0; d <= max_concept; ++d) sample.push_back(d);
  auto cert = qg::verify_certificate(qg::nat::instance(), certified.learner, certified.certificate,
                                     sample, depth, 0);

  std::vector<qg::NamedTeacher<qg::nat::NatQuery, qg::nat::NatResponse>> teachers;
  for (const Nat& d : sample)
    teachers.push_back({"honest:" + d.str(), qg::nat::honest_teacher(d)});
  teachers.push_back({"const-too-low", qg::nat::constant_too_low_teacher()});
  teachers.push_back({"adversarial", qg::nat::adversarial_teacher(0, max_concept * 2 + 1)});
  auto bounds = qg::check_learner_correct(qg::nat::instance(), certified.learner,
                                          certified.certificate.bound, teachers, sample);

  py::dict out;
  out["certificate_ok"] = cert.ok();
  out["violations"] = cert.violations.size();
  out["states_explored"] = cert.states_explored;
  out["bounds_ok"] = bounds.ok();
  out["checks"] = bounds.checks;
  return out;
}

// --- acceptor game ----------------------------------------------------------

py::dict dfa_trace_dict(const qg::Trace<qg::dfa::DfaQuery, qg::dfa::DfaResponse>& trace) {
  py::list rounds;
  for (const auto& r : trace.rounds) {
    py::dict d;
    d["query"] = qg::dfa::dfa_query_label(r.query);
    d["response"] = r.response ? py::object(py::str(qg::dfa::dfa_response_label(*r.response)))
                               : py::object(py::none());
    rounds.append(d);
  }
  py::dict out;
  out["rounds"] = rounds;
  out["outcome"] = qg::outcome_name(trace.outcome);
  out["round_count"] = trace.round_count();
  out["jsonl"] = qg::dfa::trace_to_jsonl(trace);
  return out;
}

py::dict dfa_learn(const qg::dfa::Dfa& target, std::size_t max_states, bool restricted,
                   const Nat& max_rounds) {
  auto hypotheses = qg::dfa::enumerate_dfas(max_states, target.alphabet);
  auto learner = qg::dfa::enumerator_learner(hypotheses).learner;
  auto game = restricted ? qg::dfa::restricted_instance(target.alphabet)
                         : qg::dfa::standard_instance(target.alphabet);
  auto teacher = restricted ? qg::dfa::honest_restricted_teacher(target)
                            : qg::dfa::honest_dfa_teacher(target);
  auto trace = qg::run(game, learner, teacher, max_rounds);
  py::dict out = dfa_trace_dict(trace);
  out["found"] = py::none();
  if (trace.ended() && !trace.rounds.empty()) {
    const auto& final_query = trace.rounds.back().query;
    if (const auto* eq = std::get_if<qg::dfa::EqQuery>(&final_query))
      out["found"] = eq->hypothesis;
  }
  return out;
}

// --- transducer game --------------------------------------------------------

py::dict mealy_explore(const qg::mealy::Mealy& target, std::uint64_t seed, std::size_t word_length,
                       const Nat& max_rounds) {
  auto learner =
      qg::mealy::random_mealy_learner(seed, target.alphabet, target.outputs, word_length);
  auto trace = qg::run(qg::mealy::instance(target.alphabet, target.outputs), learner,
                       qg::mealy::honest_mealy_teacher(target), max_rounds);
  py::list rounds;
  for (const auto& r : trace.rounds) {
    py::dict d;
    d["query"] = qg::mealy::mealy_query_label(r.query);
    d["response"] = r.response ? py::object(py::str(qg::mealy::mealy_response_label(*r.response)))
                               : py::object(py::none());
    rounds.append(d);
  }
  py::dict out;
  out["rounds"] = rounds;
  out["outcome"] = qg::outcome_name(trace.outcome);
  out["round_count"] = trace.round_count();
  out["jsonl"] = qg::mealy::trace_to_jsonl(trace);
  return out;
}

}  // namespace

PYBIND11_MODULE(querygames, m) {
  m.doc() = "query game engine: learners vs teachers with checkable round bounds";

  m.def("floor_log2", &qg::floor_log2, py::arg("n"));
  m.def("ceil_log2", &qg::ceil_log2, py::arg("n"));
  m.def("pow2", &qg::pow2, py::arg("e"));

  py::register_exception<qg::format_error>(m, "FormatError", PyExc_ValueError);
  py::register_exception<qg::regex_parse_error>(m, "RegexError", PyExc_ValueError);

  // --- nat ----------------------------------------------------------------
  py::module_ nat = m.def_submodule("nat", "number-guessing game");
  py::class_<PyNatLearner>(nat, "Learner");
  py::class_<PyNatTeacher>(nat, "Teacher");

  nat.def("linear_learner", [] { return PyNatLearner{qg::nat::linear_learner().learner}; });
  nat.def("bisect_learner", [] { return PyNatLearner{qg::nat::bisect_learner()}; });
  nat.def(
      "bisect_learner",
      [](const Nat& lo, const Nat& hi) {
        return PyNatLearner{qg::nat::bisect_learner(qg::nat::Closed{lo, hi})};
      },
      py::arg("lo"), py::arg("hi"));
  nat.def("log_learner", [] { return PyNatLearner{qg::nat::certified_log_learner().learner}; });
  nat.def(
      "random_learner",
      [](std::uint64_t seed, const Nat& lo, const Nat& hi) {
        return PyNatLearner{qg::nat::random_tree_learner(seed, lo, hi)};
      },
      py::arg("seed"), py::arg("lo"), py::arg("hi"));

  nat.def("honest_teacher", [](const Nat& d) { return PyNatTeacher{qg::nat::honest_teacher(d)}; },
          py::arg("d"));
  nat.def("constant_too_low_teacher",
          [] { return PyNatTeacher{qg::nat::constant_too_low_teacher()}; });
  nat.def(
      "adversarial_teacher",
      [](const Nat& lo, const Nat& hi) { return PyNatTeacher{qg::nat::adversarial_teacher(lo, hi)}; },
      py::arg("lo"), py::arg("hi"));

  nat.def("play", &nat_play, py::arg("learner"), py::arg("teacher"), py::arg("max_rounds") = 256);
  nat.def(
      "finds_within",
      [](const PyNatLearner& l, const PyNatTeacher& t, const Nat& d, const Nat& n) {
        return qg::finds_within(qg::nat::instance(), l.inner, t.inner, d, n);
      },
      py::arg("learner"), py::arg("teacher"), py::arg("d"), py::arg("n"));
  nat.def(
      "still_possible",
      [](const PyNatLearner& l, const PyNatTeacher& t, const Nat& d, const Nat& n) {
        return qg::still_possible(qg::nat::instance(), l.inner, t.inner, d, n);
      },
      py::arg("learner"), py::arg("teacher"), py::arg("d"), py::arg("n"));
  nat.def(
      "lower_bound_witness",
      [](const PyNatLearner& l, const Nat& lo, const Nat& m) -> py::object {
        auto w = qg::nat::lower_bound_witness(l.inner, lo, m);
        return w ? py::cast(*w) : py::object(py::none());
      },
      py::arg("learner"), py::arg("lo"), py::arg("m"));
  nat.def("minimax_optimal_rounds", &qg::nat::minimax_optimal_rounds, py::arg("candidates"));
  nat.def("verify", &nat_verify, py::arg("learner"), py::arg("max_concept") = 128,
          py::arg("depth") = 30);
  nat.def(
      "parse_trace",
      [](const std::string& text) {
        auto trace = qg::nat::trace_from_jsonl(text);
        py::dict out;
        out["outcome"] = qg::outcome_name(trace.outcome);
        out["round_count"] = trace.round_count();
        out["jsonl"] = qg::nat::trace_to_jsonl(trace);
        return out;
      },
      py::arg("jsonl"));

  // --- dfa ----------------------------------------------------------------
  py::module_ dfa = m.def_submodule("dfa", "acceptor learning games");
  py::class_<qg::dfa::Dfa>(dfa, "Dfa")
      .def_static("from_text", [](const std::string& t) { return qg::dfa::dfa_from_text(t); },
                  py::arg("text"))
      .def_static(
          "from_regex",
          [](const std::string& pattern, const std::string& alphabet) {
            return qg::dfa::compile_regex(pattern, chars_of(alphabet));
          },
          py::arg("pattern"), py::arg("alphabet"))
      .def("to_text", [](const qg::dfa::Dfa& m_) { return qg::dfa::dfa_to_text(m_); })
      .def("accepts",
           [](const qg::dfa::Dfa& m_, const std::string& w) { return qg::dfa::accepts(m_, w); },
           py::arg("word"))
      .def_property_readonly("states", [](const qg::dfa::Dfa& m_) { return m_.state_count(); })
      .def_property_readonly("alphabet",
                             [](const qg::dfa::Dfa& m_) { return string_of(m_.alphabet); })
      .def("key", [](const qg::dfa::Dfa& m_) { return qg::dfa::dfa_key(m_); })
      .def("__eq__", [](const qg::dfa::Dfa& a, const qg::dfa::Dfa& b) { return a == b; })
      .def("__repr__",
           [](const qg::dfa::Dfa& m_) { return "<Dfa " + qg::dfa::dfa_key(m_) + ">"; });

  dfa.def("equivalent", &qg::dfa::equivalent, py::arg("a"), py::arg("b"));
  dfa.def(
      "shortest_counterexample",
      [](const qg::dfa::Dfa& a, const qg::dfa::Dfa& b) {
        return opt_str(qg::dfa::shortest_counterexample(a, b));
      },
      py::arg("a"), py::arg("b"));
  dfa.def(
      "enumerate",
      [](std::size_t max_states, const std::string& alphabet) {
        return qg::dfa::enumerate_dfas(max_states, chars_of(alphabet));
      },
      py::arg("max_states"), py::arg("alphabet"));
  dfa.def(
      "singleton",
      [](const std::string& word, const std::string& alphabet) {
        return qg::dfa::singleton_dfa(word, chars_of(alphabet));
      },
      py::arg("word"), py::arg("alphabet"));
  dfa.def("learn", &dfa_learn, py::arg("target"), py::arg("max_states") = 2,
          py::arg("restricted") = false, py::arg("max_rounds") = 256);

  // --- mealy --------------------------------------------------------------
  py::module_ mealy = m.def_submodule("mealy", "transducer learning game");
  py::class_<qg::mealy::Mealy>(mealy, "Mealy")
      .def_static("from_text",
                  [](const std::string& t) { return qg::mealy::mealy_from_text(t); },
                  py::arg("text"))
      .def("to_text", [](const qg::mealy::Mealy& m_) { return qg::mealy::mealy_to_text(m_); })
      .def("run",
           [](const qg::mealy::Mealy& m_, const std::string& w) {
             return qg::mealy::mealy_run(m_, w);
           },
           py::arg("word"))
      .def_property_readonly("states",
                             [](const qg::mealy::Mealy& m_) { return m_.state_count(); })
      .def_property_readonly("alphabet",
                             [](const qg::mealy::Mealy& m_) { return string_of(m_.alphabet); })
      .def_property_readonly("outputs",
                             [](const qg::mealy::Mealy& m_) { return string_of(m_.outputs); })
      .def("key", [](const qg::mealy::Mealy& m_) { return qg::mealy::mealy_key(m_); })
      .def("__repr__",
           [](const qg::mealy::Mealy& m_) { return "<Mealy " + qg::mealy::mealy_key(m_) + ">"; });

  mealy.def("equivalent", &qg::mealy::mealy_equivalent, py::arg("a"), py::arg("b"));
  mealy.def(
      "shortest_output_mismatch",
      [](const qg::mealy::Mealy& a, const qg::mealy::Mealy& b) {
        return opt_str(qg::mealy::shortest_output_mismatch(a, b));
      },
      py::arg("a"), py::arg("b"));
  mealy.def("explore", &mealy_explore, py::arg("target"), py::arg("seed") = 1,
            py::arg("word_length") = 3, py::arg("max_rounds") = 64);
}
