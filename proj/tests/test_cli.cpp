#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

#include "querygames/dfa/trace_io.hpp"
#include "querygames/mealy/trace_io.hpp"
#include "querygames/nat/trace_io.hpp"

// Drives the installed qg binary end to end; QG_CLI_PATH comes from the build.

namespace {

struct CmdResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr merged
};

CmdResult run_cli(const std::string& args) {
  std::string cmd = std::string(QG_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CmdResult result;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) result.output.append(buf, n);
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  REQUIRE(out.good());
  out << text;
}

const char* odd_as_dfa =
    "states 2\ninitial 0\naccepting 1\nalphabet a b\n"
    "trans 0 a 1\ntrans 0 b 0\ntrans 1 a 0\ntrans 1 b 1\n";

const char* toggle_mealy =
    "states 2\ninitial 0\nalphabet a b\noutputs 0 1\n"
    "trans 0 a 0 1\ntrans 0 b 1 0\ntrans 1 a 1 0\ntrans 1 b 0 1\n";

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

std::string last_line(const std::string& text) {
  auto end = text.find_last_not_of('\n');
  if (end == std::string::npos) return "";
  auto start = text.rfind('\n', end);
  return text.substr(start == std::string::npos ? 0 : start + 1, end - (start == std::string::npos ? 0 : start + 1) + 1);
}

}  // namespace

TEST_CASE("play: bisect against an honest teacher ends and reports the rounds") {
  auto r = run_cli("play nat --learner bisect --teacher honest:37");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "outcome: ended after 7 rounds"));
  CHECK(contains(r.output, "guess 37 -> END"));

  auto small = run_cli("play nat --learner bisect --teacher honest:2 --max-rounds 20");
  CHECK(small.exit_code == 0);
  CHECK(contains(small.output, "outcome: ended after 4 rounds"));
}

TEST_CASE("play: truncation at --max-rounds exits 2") {
  auto r = run_cli("play nat --learner linear --teacher honest:50 --max-rounds 5");
  CHECK(r.exit_code == 2);
  CHECK(contains(r.output, "outcome: truncated after 5 rounds"));

  auto stubborn = run_cli("play nat --learner linear --teacher const-too-low --max-rounds 3");
  CHECK(stubborn.exit_code == 2);
  CHECK(contains(stubborn.output, "outcome: truncated after 3 rounds"));
}

TEST_CASE("play: JSON trace on stdout parses back and reserializes identically") {
  auto r = run_cli("play nat --learner log --teacher honest:9 --json -");
  CHECK(r.exit_code == 0);
  CHECK(!contains(r.output, "outcome:"));  // human lines suppressed
  auto trace = qg::nat::trace_from_jsonl(r.output);
  CHECK(trace.ended());
  CHECK(trace.round_count() == 7);
  CHECK(qg::nat::trace_to_jsonl(trace) == r.output);
}

TEST_CASE("play: machine game from a teacher file, enumerator learner") {
  write_file("cli_odd_as.dfa", odd_as_dfa);
  auto r = run_cli(
      "play dfa --learner enumerator --class 2-states-ab "
      "--teacher honest:dfa:cli_odd_as.dfa --json cli_odd_as.jsonl");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "outcome: ended after 24 rounds"));

  auto trace = qg::dfa::trace_from_jsonl(slurp("cli_odd_as.jsonl"));
  CHECK(trace.ended());
  CHECK(trace.round_count() == 24);
  CHECK(qg::dfa::trace_to_jsonl(trace) == slurp("cli_odd_as.jsonl"));
}

TEST_CASE("play: restricted game against the withholding adversary") {
  auto r = run_cli(
      "play dfa-restricted --learner random --seed 7 --teacher adversarial:2 "
      "--word-len 2 --max-rounds 6");
  CHECK(r.exit_code == 2);  // six rounds cannot finish the four-candidate game
  CHECK(contains(r.output, "truncated"));
}

TEST_CASE("play: transducer game round-trips its JSON trace") {
  write_file("cli_toggle.mealy", toggle_mealy);
  auto r = run_cli(
      "play mealy --learner random --seed 5 --teacher honest:mealy:cli_toggle.mealy "
      "--max-rounds 6 --json -");
  CHECK(r.exit_code == 2);
  auto trace = qg::mealy::trace_from_jsonl(r.output);
  CHECK(trace.round_count() == 6);
  CHECK(qg::mealy::trace_to_jsonl(trace) == r.output);
}

TEST_CASE("config errors name the offending field and exit 1") {
  auto bad_game = run_cli("play bogus --learner linear --teacher honest:1");
  CHECK(bad_game.exit_code == 1);
  CHECK(contains(bad_game.output, "game"));
  CHECK(contains(bad_game.output, "bogus"));

  auto bad_teacher = run_cli("play nat --learner linear --teacher nonsense");
  CHECK(bad_teacher.exit_code == 1);
  CHECK(contains(bad_teacher.output, "--teacher"));

  auto missing = run_cli("play nat --learner linear");
  CHECK(missing.exit_code == 1);
  CHECK(contains(missing.output, "--teacher"));

  auto bad_number = run_cli("play nat --learner linear --teacher honest:-3");
  CHECK(bad_number.exit_code == 1);
  CHECK(contains(bad_number.output, "--teacher"));

  write_file("cli_odd_as.dfa", odd_as_dfa);
  auto bad_class = run_cli(
      "play dfa --learner enumerator --class 2-states-xy "
      "--teacher honest:dfa:cli_odd_as.dfa");
  CHECK(bad_class.exit_code == 1);
  CHECK(contains(bad_class.output, "--class"));
  CHECK(contains(bad_class.output, "alphabet"));

  auto bad_file = run_cli("play dfa --learner random --teacher honest:dfa:no_such_file");
  CHECK(bad_file.exit_code == 1);
  CHECK(contains(bad_file.output, "no_such_file"));
}

TEST_CASE("minimax: value for the hundred-and-one candidate game") {
  auto r = run_cli("minimax --candidates 101");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "7\n");

  auto zero = run_cli("minimax --candidates 0");
  CHECK(zero.exit_code == 1);
  CHECK(contains(zero.output, "--candidates"));
}

TEST_CASE("lower-bound: every learner keeps a witness through the guaranteed rounds") {
  auto r = run_cli("lower-bound nat --learner bisect --lo 1 --m 99 --random-learners 5");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "adversary interval [1,100], 6 rounds"));
  CHECK(contains(r.output, "learner bisect: witness"));
  CHECK(contains(r.output, "learner random:4: witness"));
  CHECK(!contains(r.output, "NO WITNESS"));
}

TEST_CASE("lower-bound: a single-candidate range is trivially safe") {
  auto r = run_cli("lower-bound nat --lo 0 --m 1");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "0 rounds"));
  CHECK(contains(r.output, "witness"));
}

TEST_CASE("lower-bound: singleton languages survive the restricted query budget") {
  auto r = run_cli("lower-bound dfa-restricted --word-len 2");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "guaranteed floor 1"));
  CHECK(contains(r.output, "learner enumerator: 1 still possible"));

  auto big = run_cli("lower-bound dfa-restricted --word-len 8 --queries 100");
  CHECK(big.exit_code == 0);
  CHECK(contains(big.output, "guaranteed floor 156"));
  CHECK(contains(big.output, "learner enumerator: 156 still possible"));
}

TEST_CASE("verify-bound: log and linear certificates come back clean") {
  auto log = run_cli("verify-bound nat --learner log --d-max 64");
  CHECK(log.exit_code == 0);
  CHECK(contains(log.output, "certificate: ok"));
  CHECK(contains(log.output, "bounds: ok"));

  auto linear = run_cli("verify-bound nat --learner linear --d-max 32 --depth 40");
  CHECK(linear.exit_code == 0);
  CHECK(contains(linear.output, "certificate: ok"));
}

TEST_CASE("verify-bound: an explicit bound that is too small is refuted with a concept") {
  auto r = run_cli("verify-bound nat --learner bisect --bound 1");
  CHECK(r.exit_code == 1);
  CHECK(contains(r.output, "bounds: VIOLATED"));
  CHECK(contains(r.output, "concept 2"));
  CHECK(contains(r.output, "bound 1"));

  // an uncertified learner without --bound is a configuration error
  auto no_bound = run_cli("verify-bound nat --learner bisect");
  CHECK(no_bound.exit_code == 1);
  CHECK(contains(no_bound.output, "--bound"));
}

TEST_CASE("verify-bound: enumerator certificate over a small machine class") {
  auto r = run_cli("verify-bound dfa-restricted --learner enumerator --class 2-states-a");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "certificate: ok"));
  CHECK(contains(r.output, "responses exhaustive"));
}

TEST_CASE("verify-bound: --json emits a machine-readable report line") {
  auto r = run_cli("verify-bound nat --learner log --d-max 16 --json -");
  CHECK(r.exit_code == 0);
  auto report = nlohmann::json::parse(last_line(r.output));
  CHECK(report.at("certificate_ok") == true);
  CHECK(report.at("bounds_ok") == true);
  CHECK(report.at("failures") == 0);
}

TEST_CASE("retraction-check: projection law sweeps cleanly over every game") {
  auto r = run_cli("retraction-check --samples 100 --seed 9");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "projection law: ok (500 query heads)"));
}

TEST_CASE("interactive teacher: scripted stdin plays a full game") {
  write_file("cli_replies.txt", "too-low\nnope\ntoo-high\ncorrect\n");
  auto r = run_cli("play nat --learner bisect --teacher interactive < cli_replies.txt");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "unrecognised reply 'nope'"));
  CHECK(contains(r.output, "outcome: ended after 3 rounds"));
}
