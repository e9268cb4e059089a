// qg: command-line front end for the query game engine.
//
// Subcommands: play, verify-bound, lower-bound, minimax, retraction-check.
// The game id (nat, dfa, dfa-restricted, dfa-ce-size, mealy) is a positional
// argument. Exit codes: play exits 0 when the game ends, 2 when it is
// truncated at --max-rounds; the checking subcommands exit 0 when clean and
// 1 on violations; configuration errors exit 1 with a message naming the
// offending field.

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "querygames/core/certificate.hpp"
#include "querygames/core/engine.hpp"
#include "querygames/core/probe.hpp"
#include "querygames/dfa/enumerate.hpp"
#include "querygames/dfa/games.hpp"
#include "querygames/dfa/gen.hpp"
#include "querygames/dfa/learners.hpp"
#include "querygames/dfa/product.hpp"
#include "querygames/dfa/teachers.hpp"
#include "querygames/dfa/trace_io.hpp"
#include "querygames/mealy/games.hpp"
#include "querygames/mealy/trace_io.hpp"
#include "querygames/nat/bounds.hpp"
#include "querygames/nat/game.hpp"
#include "querygames/nat/learners.hpp"
#include "querygames/nat/teachers.hpp"
#include "querygames/nat/trace_io.hpp"
#include "querygames/num.hpp"

using qg::Nat;

namespace {

[[noreturn]] void config_error(const std::string& field, const std::string& message) {
  std::cerr << "error: " << field << ": " << message << "\n";
  std::exit(1);
}

Nat parse_nat(const std::string& text, const std::string& field) {
  if (text.empty()) config_error(field, "expected a number");
  for (char c : text)
    if (c < '0' || c > '9') config_error(field, "'" + text + "' is not a natural number");
  return Nat(text);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  return parts;
}

std::string read_file(const std::string& path, const std::string& field) {
  std::ifstream in(path);
  if (!in) config_error(field, "cannot open file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<char> parse_alphabet(const std::string& text, const std::string& field) {
  if (text.empty()) config_error(field, "alphabet must be nonempty");
  std::vector<char> out(text.begin(), text.end());
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = i + 1; j < out.size(); ++j)
      if (out[i] == out[j]) config_error(field, "duplicate symbol '" + std::string(1, out[i]) + "'");
  return out;
}

// Writes a one-line machine-readable report when --json was given; "-" means
// standard output.
void emit_report(const std::string& json_path, const nlohmann::json& report) {
  if (json_path.empty()) return;
  std::string line = report.dump() + "\n";
  if (json_path == "-") {
    std::cout << line;
    return;
  }
  std::ofstream out(json_path);
  if (!out) config_error("--json", "cannot open " + json_path + " for writing");
  out << line;
}

// --- number game pieces -----------------------------------------------------

qg::nat::NatTeacher interactive_nat_teacher() {
  qg::nat::NatTeacher t;
  t.initial = qg::StateToken::of(0, "interactive");
  t.step = [](const qg::StateToken& s, const qg::nat::NatQuery& q) {
    for (;;) {
      std::cerr << "guess " << q.guess.str() << " -- reply too-low, too-high, or correct: "
                << std::flush;
      std::string line;
      if (!std::getline(std::cin, line))
        throw std::runtime_error("interactive teacher: input ended");
      while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
      std::size_t start = line.find_first_not_of(' ');
      if (start != std::string::npos) line = line.substr(start);
      if (line == "too-low")
        return qg::TeacherAnswer<qg::nat::NatResponse>::reply(qg::nat::NatResponse::too_low, s);
      if (line == "too-high")
        return qg::TeacherAnswer<qg::nat::NatResponse>::reply(qg::nat::NatResponse::too_high, s);
      if (line == "correct" || line == "end")
        return qg::TeacherAnswer<qg::nat::NatResponse>::end();
      std::cerr << "unrecognised reply '" << line << "'\n";
    }
  };
  return t;
}

qg::nat::NatTeacher make_nat_teacher(const std::string& spec) {
  auto parts = split(spec, ':');
  if (parts[0] == "honest" && parts.size() == 2)
    return qg::nat::honest_teacher(parse_nat(parts[1], "--teacher"));
  if (spec == "const-too-low") return qg::nat::constant_too_low_teacher();
  if (parts[0] == "adversarial" && parts.size() == 3) {
    Nat lo = parse_nat(parts[1], "--teacher");
    Nat hi = parse_nat(parts[2], "--teacher");
    if (lo > hi) config_error("--teacher", "adversarial interval is empty");
    return qg::nat::adversarial_teacher(lo, hi);
  }
  if (spec == "interactive") return interactive_nat_teacher();
  config_error("--teacher",
               "unknown number-game teacher '" + spec +
                   "' (try honest:<d>, const-too-low, adversarial:<lo>:<hi>, interactive)");
}

qg::nat::NatLearner make_nat_learner(const std::string& spec, std::uint64_t seed) {
  auto parts = split(spec, ':');
  if (spec == "linear") return qg::nat::linear_learner().learner;
  if (spec == "bisect") return qg::nat::bisect_learner();
  if (parts[0] == "bisect" && parts.size() == 3) {
    Nat lo = parse_nat(parts[1], "--learner");
    Nat hi = parse_nat(parts[2], "--learner");
    if (lo > hi) config_error("--learner", "bisect interval is empty");
    return qg::nat::bisect_learner(qg::nat::Closed{lo, hi});
  }
  if (spec == "log") return qg::nat::certified_log_learner().learner;
  if (spec == "random") return qg::nat::random_tree_learner(seed, 0, 1023);
  config_error("--learner",
               "unknown number-game learner '" + spec +
                   "' (try linear, bisect, bisect:<lo>:<hi>, log, random)");
}

// --- machine game pieces ----------------------------------------------------

struct DfaClass {
  std::size_t max_states = 0;
  std::vector<char> alphabet;
};

DfaClass parse_dfa_class(const std::string& spec) {
  auto marker = spec.find("-states-");
  if (marker == std::string::npos || marker == 0)
    config_error("--class", "expected <k>-states-<alphabet>, e.g. 2-states-ab");
  std::string count = spec.substr(0, marker);
  for (char c : count)
    if (c < '0' || c > '9') config_error("--class", "'" + count + "' is not a state count");
  DfaClass cls;
  cls.max_states = std::stoul(count);
  if (cls.max_states == 0) config_error("--class", "state count must be positive");
  cls.alphabet = parse_alphabet(spec.substr(marker + 8), "--class");
  return cls;
}

qg::dfa::Dfa load_dfa(const std::string& path) {
  try {
    return qg::dfa::dfa_from_text(read_file(path, "--teacher"));
  } catch (const qg::format_error& e) {
    config_error("--teacher", path + ": " + e.what());
  }
}

qg::mealy::Mealy load_mealy(const std::string& path) {
  try {
    return qg::mealy::mealy_from_text(read_file(path, "--teacher"));
  } catch (const qg::format_error& e) {
    config_error("--teacher", path + ": " + e.what());
  }
}

// --- shared play driver -----------------------------------------------------

template <typename D, typename Q, typename R, typename ToJsonl>
int do_play(const qg::GameInstance<D, Q, R>& game, const qg::Learner<Q, R>& learner,
            const qg::Teacher<Q, R>& teacher, const Nat& max_rounds, const std::string& json_path,
            ToJsonl&& to_jsonl) {
  qg::Trace<Q, R> trace;
  try {
    trace = qg::run(game, learner, teacher, max_rounds);
  } catch (const qg::illegal_response_error& e) {
    std::cerr << "error: teacher broke the rules: " << e.what() << "\n";
    return 1;
  }

  const bool json_to_stdout = json_path == "-";
  if (!json_to_stdout) {
    for (const auto& round : trace.rounds)
      std::cout << "[" << round.index << "] " << game.query_label(round.query) << " -> "
                << (round.response ? game.response_label(*round.response) : std::string("END"))
                << "\n";
    std::cout << "outcome: " << qg::outcome_name(trace.outcome) << " after "
              << trace.round_count() << " round" << (trace.round_count() == 1 ? "" : "s") << "\n";
  }
  if (!json_path.empty()) {
    std::string text = to_jsonl(trace);
    if (json_to_stdout) {
      std::cout << text;
    } else {
      std::ofstream out(json_path);
      if (!out) config_error("--json", "cannot open " + json_path + " for writing");
      out << text;
    }
  }
  return trace.ended() ? 0 : 2;
}

// --- subcommand option bag --------------------------------------------------

struct Options {
  std::string game;
  std::string learner;
  std::string teacher;
  std::string json_path;
  std::string dfa_class;
  std::string alphabet = "ab";
  std::string outputs = "01";
  std::string max_rounds = "64";
  std::uint64_t seed = 1;
  std::size_t word_len = 2;
  std::size_t queries = 0;
  std::string ce_budget = "3";
  std::string lo = "0";
  std::string m = "100";
  std::string explicit_bound;
  std::size_t random_learners = 0;
  std::string candidates;
  std::size_t samples = 200;
  std::size_t depth = 0;  // 0: pick a depth that covers the learner's state graph
  std::size_t enum_bound = 3;
  std::string d_max = "128";
};

int cmd_play(const Options& opt) {
  Nat max_rounds = parse_nat(opt.max_rounds, "--max-rounds");

  if (opt.game == "nat") {
    auto learner = make_nat_learner(opt.learner, opt.seed);
    auto teacher = make_nat_teacher(opt.teacher);
    return do_play(qg::nat::instance(), learner, teacher, max_rounds, opt.json_path,
                   [](const qg::nat::NatTrace& t) { return qg::nat::trace_to_jsonl(t); });
  }

  if (opt.game == "dfa" || opt.game == "dfa-restricted" || opt.game == "dfa-ce-size") {
    auto teacher_parts = split(opt.teacher, ':');
    std::vector<char> alphabet;
    qg::Teacher<qg::dfa::DfaQuery, qg::dfa::DfaResponse> teacher;

    if (teacher_parts[0] == "honest" && teacher_parts.size() == 3 && teacher_parts[1] == "dfa") {
      qg::dfa::Dfa target = load_dfa(teacher_parts[2]);
      alphabet = target.alphabet;
      if (opt.game == "dfa")
        teacher = qg::dfa::honest_dfa_teacher(target);
      else if (opt.game == "dfa-restricted")
        teacher = qg::dfa::honest_restricted_teacher(target);
      else
        teacher = qg::dfa::honest_bounded_dfa_teacher(
            {target, parse_nat(opt.ce_budget, "--ce-budget")});
    } else if (teacher_parts[0] == "adversarial" && teacher_parts.size() == 2) {
      if (opt.game != "dfa-restricted")
        config_error("--teacher", "the adversarial machine teacher plays the restricted game only");
      for (char c : teacher_parts[1])
        if (c < '0' || c > '9')
          config_error("--teacher", "adversarial:<word-length> needs a number");
      std::size_t n = std::stoul(teacher_parts[1]);
      alphabet = parse_alphabet(opt.alphabet, "--alphabet");
      teacher = qg::dfa::restricted_adversarial_teacher(n, alphabet);
    } else {
      config_error("--teacher", "unknown machine-game teacher '" + opt.teacher +
                                    "' (try honest:dfa:<path> or adversarial:<word-length>)");
    }

    qg::Learner<qg::dfa::DfaQuery, qg::dfa::DfaResponse> learner;
    if (opt.learner == "enumerator") {
      if (opt.dfa_class.empty())
        config_error("--class", "the enumerator learner needs --class <k>-states-<alphabet>");
      DfaClass cls = parse_dfa_class(opt.dfa_class);
      if (cls.alphabet != alphabet)
        config_error("--class", "class alphabet does not match the teacher's alphabet");
      learner = qg::dfa::enumerator_learner(qg::dfa::enumerate_dfas(cls.max_states, cls.alphabet))
                    .learner;
    } else if (opt.learner == "random") {
      learner = qg::dfa::random_dfa_learner(opt.seed, alphabet, opt.word_len);
    } else {
      config_error("--learner", "unknown machine-game learner '" + opt.learner +
                                    "' (try enumerator or random)");
    }

    auto to_jsonl = [](const qg::Trace<qg::dfa::DfaQuery, qg::dfa::DfaResponse>& t) {
      return qg::dfa::trace_to_jsonl(t);
    };
    if (opt.game == "dfa")
      return do_play(qg::dfa::standard_instance(alphabet), learner, teacher, max_rounds,
                     opt.json_path, to_jsonl);
    if (opt.game == "dfa-restricted")
      return do_play(qg::dfa::restricted_instance(alphabet), learner, teacher, max_rounds,
                     opt.json_path, to_jsonl);
    return do_play(qg::dfa::ce_size_instance(alphabet), learner, teacher, max_rounds,
                   opt.json_path, to_jsonl);
  }

  if (opt.game == "mealy") {
    auto teacher_parts = split(opt.teacher, ':');
    if (!(teacher_parts[0] == "honest" && teacher_parts.size() == 3 &&
          teacher_parts[1] == "mealy"))
      config_error("--teacher", "the transducer game needs --teacher honest:mealy:<path>");
    qg::mealy::Mealy target = load_mealy(teacher_parts[2]);
    if (opt.learner != "random")
      config_error("--learner", "the transducer game supports the random learner only");
    auto learner = qg::mealy::random_mealy_learner(opt.seed, target.alphabet, target.outputs,
                                                   opt.word_len);
    return do_play(qg::mealy::instance(target.alphabet, target.outputs), learner,
                   qg::mealy::honest_mealy_teacher(target), max_rounds, opt.json_path,
                   [](const qg::Trace<qg::mealy::MealyQuery, qg::mealy::MealyResponse>& t) {
                     return qg::mealy::trace_to_jsonl(t);
                   });
  }

  config_error("game", "unknown game '" + opt.game +
                           "' (try nat, dfa, dfa-restricted, dfa-ce-size, mealy)");
}

// --- verify-bound -----------------------------------------------------------

// For a reported failure, replay the game to find how many rounds the learner
// actually needed (or report that the cap was hit).
template <typename D, typename Q, typename R>
std::string rounds_taken(const qg::GameInstance<D, Q, R>& game, const qg::Learner<Q, R>& learner,
                         const qg::Teacher<Q, R>& teacher, const D& d, const Nat& cap) {
  for (Nat n = 0; n <= cap; ++n)
    if (qg::finds_within(game, learner, teacher, d, n)) return n.str();
  return "> " + cap.str();
}

template <typename D, typename Q, typename R>
int report_verification(const qg::GameInstance<D, Q, R>& game, const qg::Learner<Q, R>& learner,
                        const std::optional<qg::StepBoundCertificate<D>>& certificate,
                        const std::function<Nat(const D&)>& bound, const std::vector<D>& sample,
                        const std::vector<qg::NamedTeacher<Q, R>>& crossed,
                        const std::vector<std::pair<qg::NamedTeacher<Q, R>, D>>& paired,
                        std::size_t depth, std::size_t enum_bound, const std::string& json_path) {
  bool cert_ok = true;
  nlohmann::json report;
  if (certificate) {
    auto cert_report =
        qg::verify_certificate(game, learner, *certificate, sample, depth, enum_bound);
    cert_ok = cert_report.ok();
    std::cout << "certificate: " << (cert_ok ? "ok" : "VIOLATED") << " (states explored "
              << cert_report.states_explored << ", depth " << cert_report.depth << ", responses "
              << (cert_report.responses_exhaustive ? "exhaustive" : "bounded") << ")\n";
    for (std::size_t i = 0; i < cert_report.violations.size() && i < 5; ++i) {
      const auto& v = cert_report.violations[i];
      std::cout << "  item " << v.item << " at state " << v.state << ", concept "
                << v.concept_label << (v.response.empty() ? "" : ", response " + v.response)
                << ": " << v.detail << "\n";
    }
    if (cert_report.violations.size() > 5)
      std::cout << "  ... and " << (cert_report.violations.size() - 5) << " more\n";
    report["certificate_ok"] = cert_ok;
    report["states_explored"] = cert_report.states_explored;
    report["violations"] = cert_report.violations.size();
  } else {
    std::cout << "certificate: none shipped; checking the explicit bound only\n";
  }

  // Stateless/adversarial teachers are crossed with the whole sample; honest
  // teachers are paired with their own concept so large sweeps stay afforable.
  qg::BoundCheckReport bounds = qg::check_learner_correct(game, learner, bound, crossed, sample);
  for (const auto& [teacher, d] : paired) {
    auto one = qg::check_learner_correct(game, learner, bound, {teacher}, {d});
    bounds.checks += one.checks;
    for (auto& f : one.failures) bounds.failures.push_back(f);
  }
  std::cout << "bounds: " << (bounds.ok() ? "ok" : "VIOLATED") << " (" << bounds.checks
            << " teacher/concept checks)\n";

  // Name the first few offending pairs with the rounds they actually needed.
  std::size_t shown = 0;
  for (const auto& f : bounds.failures) {
    if (shown++ == 5) {
      std::cout << "  ... and " << (bounds.failures.size() - 5) << " more\n";
      break;
    }
    std::string taken = "?";
    for (const auto& t : crossed)
      if (t.name == f.teacher)
        for (const auto& d : sample)
          if (game.concept_label(d) == f.concept_label)
            taken = rounds_taken(game, learner, t.teacher, d, f.bound * 4 + 16);
    for (const auto& [t, d] : paired)
      if (t.name == f.teacher && game.concept_label(d) == f.concept_label)
        taken = rounds_taken(game, learner, t.teacher, d, f.bound * 4 + 16);
    std::cout << "  teacher " << f.teacher << ", concept " << f.concept_label << ": took " << taken
              << " rounds, bound " << f.bound.str() << "\n";
  }

  report["bounds_ok"] = bounds.ok();
  report["checks"] = bounds.checks;
  report["failures"] = bounds.failures.size();
  emit_report(json_path, report);
  return cert_ok && bounds.ok() ? 0 : 1;
}

int cmd_verify_bound(const Options& opt) {
  std::optional<Nat> explicit_bound;
  if (!opt.explicit_bound.empty())
    explicit_bound = parse_nat(opt.explicit_bound, "--bound");

  if (opt.game == "nat") {
    using NatCert = std::optional<qg::StepBoundCertificate<Nat>>;
    qg::nat::NatLearner learner;
    NatCert certificate;
    std::function<Nat(const Nat&)> bound;

    if (opt.learner == "log" || opt.learner == "linear") {
      auto certified =
          opt.learner == "log" ? qg::nat::certified_log_learner() : qg::nat::linear_learner();
      learner = certified.learner;
      certificate = certified.certificate;
      bound = certified.certificate.bound;
    } else if (explicit_bound) {
      learner = make_nat_learner(opt.learner, opt.seed);
    } else {
      config_error("--learner", "learner '" + opt.learner +
                                    "' ships no certificate; give an explicit --bound");
    }
    if (explicit_bound) {
      certificate.reset();  // an explicit bound overrides the shipped certificate
      Nat b = *explicit_bound;
      bound = [b](const Nat&) { return b; };
    }

    Nat d_max = parse_nat(opt.d_max, "--d-max");
    std::vector<Nat> sample;
    for (Nat d = 0; d <= d_max; ++d) sample.push_back(d);
    std::vector<qg::NamedTeacher<qg::nat::NatQuery, qg::nat::NatResponse>> crossed;
    crossed.push_back({"const-too-low", qg::nat::constant_too_low_teacher()});
    crossed.push_back({"adversarial", qg::nat::adversarial_teacher(0, d_max * 2 + 1)});
    std::vector<std::pair<qg::NamedTeacher<qg::nat::NatQuery, qg::nat::NatResponse>, Nat>> paired;
    for (const Nat& d : sample)
      paired.push_back({{"honest:" + d.str(), qg::nat::honest_teacher(d)}, d});
    std::size_t depth = opt.depth ? opt.depth : 30;
    return report_verification(qg::nat::instance(), learner, certificate, bound, sample, crossed,
                               paired, depth, opt.enum_bound, opt.json_path);
  }

  if (opt.game == "dfa" || opt.game == "dfa-restricted") {
    if (opt.learner != "enumerator")
      config_error("--learner", "the certified machine-game learner is the enumerator");
    if (opt.dfa_class.empty())
      config_error("--class", "the enumerator learner needs --class <k>-states-<alphabet>");
    DfaClass cls = parse_dfa_class(opt.dfa_class);
    auto hypotheses = qg::dfa::enumerate_dfas(cls.max_states, cls.alphabet);
    auto certified = qg::dfa::enumerator_learner(hypotheses);
    std::optional<qg::StepBoundCertificate<qg::dfa::Dfa>> certificate = certified.certificate;
    std::function<Nat(const qg::dfa::Dfa&)> bound = certified.certificate.bound;
    if (explicit_bound) {
      certificate.reset();
      Nat b = *explicit_bound;
      bound = [b](const qg::dfa::Dfa&) { return b; };
    }

    std::vector<std::pair<qg::NamedTeacher<qg::dfa::DfaQuery, qg::dfa::DfaResponse>, qg::dfa::Dfa>>
        paired;
    for (const auto& machine : hypotheses) {
      auto teacher = opt.game == "dfa" ? qg::dfa::honest_dfa_teacher(machine)
                                       : qg::dfa::honest_restricted_teacher(machine);
      paired.push_back({{"honest:" + qg::dfa::dfa_key(machine), teacher}, machine});
    }
    auto game = opt.game == "dfa" ? qg::dfa::standard_instance(cls.alphabet)
                                  : qg::dfa::restricted_instance(cls.alphabet);
    std::size_t depth = opt.depth ? opt.depth : hypotheses.size() + 2;
    return report_verification(game, certified.learner, certificate, bound, hypotheses, {},
                               paired, depth, opt.enum_bound, opt.json_path);
  }

  config_error("game", "verify-bound supports nat, dfa, and dfa-restricted");
}

// --- lower-bound ------------------------------------------------------------

int cmd_lower_bound(const Options& opt) {
  if (opt.game == "nat") {
    Nat lo = parse_nat(opt.lo, "--lo");
    Nat m = parse_nat(opt.m, "--m");
    Nat rounds = qg::floor_log2(m);
    std::vector<std::pair<std::string, qg::nat::NatLearner>> learners;
    learners.emplace_back(opt.learner, make_nat_learner(opt.learner, opt.seed));
    for (std::size_t k = 0; k < opt.random_learners; ++k)
      learners.emplace_back("random:" + std::to_string(k),
                            qg::nat::random_tree_learner(k, lo, lo + m));

    std::cout << "adversary interval [" << lo.str() << "," << Nat(lo + m).str() << "], "
              << rounds.str() << " rounds\n";
    bool all_ok = true;
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [name, learner] : learners) {
      auto witness = qg::nat::lower_bound_witness(learner, lo, m);
      nlohmann::json entry{{"learner", name}};
      if (witness) {
        std::cout << "learner " << name << ": witness " << witness->str() << " still possible\n";
        entry["witness"] = witness->str();
      } else {
        std::cout << "learner " << name << ": NO WITNESS — every concept excluded\n";
        entry["witness"] = nullptr;
        all_ok = false;
      }
      entries.push_back(entry);
    }
    emit_report(opt.json_path,
                {{"ok", all_ok}, {"rounds", rounds.str()}, {"learners", entries}});
    return all_ok ? 0 : 1;
  }

  if (opt.game == "dfa-restricted") {
    std::vector<char> alphabet = parse_alphabet(opt.alphabet, "--alphabet");
    double total = 1;
    for (std::size_t i = 0; i < opt.word_len; ++i) total *= double(alphabet.size());
    if (total > 4096) config_error("--word-len", "candidate set too large for a sweep");
    std::size_t candidates = std::size_t(total);
    std::size_t queries = opt.queries ? opt.queries : candidates - 1;
    std::size_t floor = candidates > queries ? candidates - queries : 0;

    auto words = qg::dfa::words_of_length(opt.word_len, alphabet);
    std::vector<qg::dfa::Dfa> singles;
    for (const auto& w : words) singles.push_back(qg::dfa::singleton_dfa(w, alphabet));

    std::vector<std::pair<std::string, qg::Learner<qg::dfa::DfaQuery, qg::dfa::DfaResponse>>>
        learners;
    if (opt.learner == "enumerator") {
      learners.emplace_back("enumerator", qg::dfa::enumerator_learner(singles).learner);
    } else if (opt.learner == "random") {
      learners.emplace_back("random", qg::dfa::random_dfa_learner(opt.seed, alphabet, opt.word_len));
    } else {
      config_error("--learner", "unknown machine-game learner '" + opt.learner +
                                    "' (try enumerator or random)");
    }
    for (std::size_t k = 0; k < opt.random_learners; ++k)
      learners.emplace_back("random:" + std::to_string(k),
                            qg::dfa::random_dfa_learner(k, alphabet, opt.word_len));

    auto game = qg::dfa::restricted_instance(alphabet);
    auto adversary = qg::dfa::restricted_adversarial_teacher(opt.word_len, alphabet);
    std::cout << "single-word concepts of length " << opt.word_len << ": " << candidates
              << "; budget " << queries << " queries; guaranteed floor " << floor << "\n";

    bool all_ok = true;
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [name, learner] : learners) {
      std::size_t alive = 0;
      std::optional<std::string> witness;
      for (std::size_t i = 0; i < singles.size(); ++i) {
        if (qg::still_possible(game, learner, adversary, singles[i], Nat(queries))) {
          ++alive;
          if (!witness) witness = words[i];
        }
      }
      bool ok = alive >= floor && alive >= 1;
      all_ok = all_ok && ok;
      std::cout << "learner " << name << ": " << alive << " still possible"
                << (witness ? ", e.g. '" + *witness + "'" : "") << (ok ? "" : "  BELOW FLOOR")
                << "\n";
      entries.push_back({{"learner", name},
                         {"alive", alive},
                         {"witness", witness ? nlohmann::json(*witness) : nlohmann::json()}});
    }
    emit_report(opt.json_path, {{"ok", all_ok},
                                {"candidates", candidates},
                                {"queries", queries},
                                {"floor", floor},
                                {"learners", entries}});
    return all_ok ? 0 : 1;
  }

  config_error("game", "lower-bound supports nat and dfa-restricted");
}

// --- minimax ----------------------------------------------------------------

int cmd_minimax(const Options& opt) {
  if (opt.candidates.empty()) config_error("--candidates", "required");
  Nat s = parse_nat(opt.candidates, "--candidates");
  try {
    Nat rounds = qg::nat::minimax_optimal_rounds(s);
    std::cout << rounds.str() << "\n";
    emit_report(opt.json_path, {{"candidates", s.str()}, {"rounds", rounds.str()}});
  } catch (const std::invalid_argument& e) {
    config_error("--candidates", e.what());
  }
  return 0;
}

// --- retraction-check -------------------------------------------------------

int cmd_retraction_check(const Options& opt) {
  std::mt19937_64 rng(opt.seed);
  std::size_t checked = 0;
  bool all_ok = true;
  bool matched = false;
  const bool all = opt.game == "all";

  if (all || opt.game == "nat") {
    matched = true;
    const auto& game = qg::nat::instance();
    std::function<std::string(const qg::nat::NatResponse&)> label =
        [](const qg::nat::NatResponse& r) { return qg::nat::response_name(r); };
    for (std::size_t i = 0; i < opt.samples; ++i) {
      // Mix small and large guesses so both response branches get exercised.
      Nat guess = i % 5 == 0 ? Nat(rng()) : Nat(rng() % 1024);
      auto step = qg::probe_step<qg::nat::NatQuery, qg::nat::NatResponse>({guess}, label);
      if (!qg::semantics_retraction_check(game, step, opt.enum_bound)) all_ok = false;
      ++checked;
    }
  }

  if (all || opt.game == "dfa" || opt.game == "dfa-restricted" || opt.game == "dfa-ce-size") {
    matched = true;
    std::vector<char> alphabet = parse_alphabet(opt.alphabet, "--alphabet");
    std::function<std::string(const qg::dfa::DfaResponse&)> label = qg::dfa::dfa_response_label;
    auto sweep = [&](const auto& game) {
      for (std::size_t i = 0; i < opt.samples; ++i) {
        auto step = qg::probe_step<qg::dfa::DfaQuery, qg::dfa::DfaResponse>(
            qg::dfa::random_dfa_query(rng, alphabet, 4, 3), label);
        if (!qg::semantics_retraction_check(game, step, opt.enum_bound)) all_ok = false;
        ++checked;
      }
    };
    if (all || opt.game == "dfa") sweep(qg::dfa::standard_instance(alphabet));
    if (all || opt.game == "dfa-restricted") sweep(qg::dfa::restricted_instance(alphabet));
    if (all || opt.game == "dfa-ce-size") sweep(qg::dfa::ce_size_instance(alphabet));
  }

  if (all || opt.game == "mealy") {
    matched = true;
    std::vector<char> alphabet = parse_alphabet(opt.alphabet, "--alphabet");
    std::vector<char> outputs = parse_alphabet(opt.outputs, "--outputs");
    const auto game = qg::mealy::instance(alphabet, outputs);
    std::function<std::string(const qg::mealy::MealyResponse&)> label =
        qg::mealy::mealy_response_label;
    for (std::size_t i = 0; i < opt.samples; ++i) {
      auto step = qg::probe_step<qg::mealy::MealyQuery, qg::mealy::MealyResponse>(
          qg::mealy::random_mealy_query(rng, alphabet, outputs, 4, 3), label);
      if (!qg::semantics_retraction_check(game, step, opt.enum_bound)) all_ok = false;
      ++checked;
    }
  }

  if (!matched)
    config_error("game", "unknown game '" + opt.game +
                             "' (try nat, dfa, dfa-restricted, dfa-ce-size, mealy, all)");
  std::cout << "projection law: " << (all_ok ? "ok" : "VIOLATED") << " (" << checked
            << " query heads)\n";
  emit_report(opt.json_path, {{"ok", all_ok}, {"checked", checked}});
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"query game engine: learners vs teachers with checkable round bounds"};
  app.require_subcommand(1);
  Options opt;

  // Global flags; subcommands fall through to them, so they may appear before
  // or after the subcommand.
  app.add_option("--seed", opt.seed, "seed for randomised learners");
  app.add_option("--json", opt.json_path, "machine-readable output here ('-' for stdout)");
  app.add_option("--max-rounds", opt.max_rounds,
                 "truncate a played game after this many rounds (default 64)");

  auto add_common = [&](CLI::App* cmd, bool game_required) {
    cmd->fallthrough();
    auto* pos = cmd->add_option("game", opt.game,
                                "game id: nat, dfa, dfa-restricted, dfa-ce-size, mealy");
    if (game_required) pos->required();
    cmd->add_option("--alphabet", opt.alphabet, "machine-game alphabet (default ab)");
  };

  CLI::App* play = app.add_subcommand("play", "play one game and print the trace");
  add_common(play, true);
  play->add_option("--learner", opt.learner, "learner spec")->required();
  play->add_option("--teacher", opt.teacher, "teacher spec")->required();
  play->add_option("--class", opt.dfa_class, "hypothesis class for the enumerator learner");
  play->add_option("--word-len", opt.word_len, "word length for random machine learners");
  play->add_option("--ce-budget", opt.ce_budget, "concept budget in the dfa-ce-size game");
  play->add_option("--outputs", opt.outputs, "transducer output pool (default 01)");

  CLI::App* verify = app.add_subcommand("verify-bound",
                                        "check a learner's certificate and its promised bounds");
  add_common(verify, true);
  verify->add_option("--learner", opt.learner, "certified learner (log, linear, enumerator)")
      ->required();
  verify->add_option("--bound", opt.explicit_bound,
                     "check this constant bound instead of the shipped certificate");
  verify->add_option("--d-max", opt.d_max, "largest sampled number concept (default 128)");
  verify->add_option("--class", opt.dfa_class, "hypothesis class for the enumerator learner");
  verify->add_option("--depth", opt.depth, "state exploration depth (default fits the learner)");
  verify->add_option("--enum-bound", opt.enum_bound, "response enumeration bound");

  CLI::App* lower = app.add_subcommand("lower-bound",
                                       "exhibit concepts an adversary keeps alive");
  add_common(lower, true);
  lower->add_option("--learner", opt.learner, "learner spec (default bisect / enumerator)");
  lower->add_option("--lo", opt.lo, "lower end of the adversary interval");
  lower->add_option("--m", opt.m, "adversary range size (rounds = floor(log2 m))");
  lower->add_option("--random-learners", opt.random_learners,
                    "additionally try this many seeded random learners");
  lower->add_option("--word-len", opt.word_len, "candidate word length (machine game)");
  lower->add_option("--queries", opt.queries, "query budget (machine game)");

  CLI::App* minimax = app.add_subcommand("minimax", "optimal guessing rounds for a finite range");
  minimax->fallthrough();
  minimax->add_option("--candidates", opt.candidates, "number of candidates")->required();

  CLI::App* retraction = app.add_subcommand("retraction-check",
                                            "sweep the enrichment projection law");
  add_common(retraction, false);
  retraction->add_option("--samples", opt.samples, "query heads per game");
  retraction->add_option("--enum-bound", opt.enum_bound, "response enumeration bound");
  retraction->add_option("--outputs", opt.outputs, "transducer output pool (default 01)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (play->parsed()) return cmd_play(opt);
    if (verify->parsed()) return cmd_verify_bound(opt);
    if (lower->parsed()) {
      if (opt.game.empty()) config_error("game", "required (nat or dfa-restricted)");
      if (opt.learner.empty()) opt.learner = opt.game == "nat" ? "bisect" : "enumerator";
      return cmd_lower_bound(opt);
    }
    if (minimax->parsed()) return cmd_minimax(opt);
    if (retraction->parsed()) {
      if (opt.game.empty()) opt.game = "all";
      return cmd_retraction_check(opt);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
