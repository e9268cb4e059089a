#include "querygames/mealy/games.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

#include "querygames/core/mix.hpp"

namespace qg::mealy {

std::string mealy_query_label(const MealyQuery& q) {
  if (const auto* oq = std::get_if<OqQuery>(&q)) return "oq:'" + oq->word + "'";
  return "eq:" + mealy_key(std::get<EqQuery>(q).hypothesis);
}

std::string mealy_response_label(const MealyResponse& r) {
  if (const auto* out = std::get_if<OutResponse>(&r)) return "out:'" + out->word + "'";
  return "ce:'" + std::get<CeResponse>(r).word + "'";
}

namespace {

bool word_over(const std::vector<char>& pool, const std::string& w) {
  return std::all_of(w.begin(), w.end(), [&](char c) {
    return std::find(pool.begin(), pool.end(), c) != pool.end();
  });
}

std::vector<std::string> output_words(std::size_t length, const std::vector<char>& outputs) {
  double total = 1;
  for (std::size_t i = 0; i < length; ++i) total *= double(outputs.size());
  if (total > 1e5) throw std::invalid_argument("output response enumeration too large");
  std::vector<std::string> words{""};
  for (std::size_t i = 0; i < length; ++i) {
    std::vector<std::string> grown;
    for (const auto& w : words)
      for (char c : outputs) grown.push_back(w + c);
    words = std::move(grown);
  }
  return words;
}

std::vector<std::string> input_words_up_to(std::size_t max_len,
                                           const std::vector<char>& alphabet) {
  std::vector<std::string> out{""}, layer{""};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::string> grown;
    for (const auto& w : layer)
      for (char c : alphabet) grown.push_back(w + c);
    out.insert(out.end(), grown.begin(), grown.end());
    layer = std::move(grown);
  }
  return out;
}

}  // namespace

GameInstance<Mealy, MealyQuery, MealyResponse> instance(std::vector<char> alphabet,
                                                        std::vector<char> outputs) {
  GameInstance<Mealy, MealyQuery, MealyResponse> game;
  game.name = "mealy";
  game.can_terminate = [](const MealyQuery& q) { return std::holds_alternative<EqQuery>(q); };
  game.query_label = mealy_query_label;
  game.response_label = mealy_response_label;
  game.legal_response = [alphabet, outputs](const MealyQuery& q, const MealyResponse& r) {
    if (const auto* oq = std::get_if<OqQuery>(&q)) {
      const auto* out = std::get_if<OutResponse>(&r);
      return out != nullptr && out->word.size() == oq->word.size() &&
             word_over(outputs, out->word);
    }
    const auto* ce = std::get_if<CeResponse>(&r);
    return ce != nullptr && word_over(alphabet, ce->word);
  };
  game.semantics = [](const MealyQuery& q, const MealyResponse& r) -> Pred<Mealy> {
    if (const auto* oq = std::get_if<OqQuery>(&q)) {
      std::string w = oq->word;
      std::string v = std::get<OutResponse>(r).word;
      return [w, v](const Mealy& m) { return mealy_run(m, w) == v; };
    }
    Mealy h = std::get<EqQuery>(q).hypothesis;
    std::string u = std::get<CeResponse>(r).word;
    return [h, u](const Mealy& m) { return mealy_run(m, u) != mealy_run(h, u); };
  };
  game.enumerate_responses = [alphabet, outputs](const MealyQuery& q, std::size_t bound) {
    std::vector<MealyResponse> out;
    if (const auto* oq = std::get_if<OqQuery>(&q)) {
      for (auto& v : output_words(oq->word.size(), outputs)) out.push_back(OutResponse{std::move(v)});
    } else {
      for (auto& u : input_words_up_to(bound, alphabet)) out.push_back(CeResponse{std::move(u)});
    }
    return out;
  };
  game.responses_exhaustive = [](const MealyQuery& q) {
    return std::holds_alternative<OqQuery>(q);
  };
  std::mt19937_64 sample_rng(2024);
  for (int i = 0; i < 20; ++i)
    game.sample.push_back(random_mealy(sample_rng, 3, alphabet, outputs));
  game.concept_label = [](const Mealy& m) { return mealy_key(m); };
  game.install_default_enrich();
  return game;
}

Teacher<MealyQuery, MealyResponse> honest_mealy_teacher(Mealy target) {
  validate(target);
  Teacher<MealyQuery, MealyResponse> t;
  t.initial = StateToken::of(0, "t");
  t.step = [target = std::move(target)](const StateToken& s, const MealyQuery& q) {
    if (const auto* oq = std::get_if<OqQuery>(&q))
      return TeacherAnswer<MealyResponse>::reply(OutResponse{mealy_run(target, oq->word)}, s);
    auto ce = shortest_output_mismatch(target, std::get<EqQuery>(q).hypothesis);
    if (!ce) return TeacherAnswer<MealyResponse>::end();
    return TeacherAnswer<MealyResponse>::reply(CeResponse{std::move(*ce)}, s);
  };
  return t;
}

Learner<MealyQuery, MealyResponse> random_mealy_learner(std::uint64_t seed,
                                                        std::vector<char> alphabet,
                                                        std::vector<char> outputs,
                                                        std::size_t word_length,
                                                        std::size_t max_states) {
  if (alphabet.empty() || outputs.empty())
    throw std::invalid_argument("random learner needs nonempty alphabet and output pool");
  if (max_states == 0) throw std::invalid_argument("random learner needs max_states >= 1");

  auto node = [](std::uint64_t s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "rmealy:%016llx", static_cast<unsigned long long>(s));
    return StateToken::of(s, buf);
  };

  Learner<MealyQuery, MealyResponse> l;
  l.initial = node(splitmix64(seed ^ 0x3e47ULL));
  l.step = [node, alphabet, outputs, word_length, max_states](const StateToken& s) {
    std::uint64_t x = s.as<std::uint64_t>();
    std::uint64_t stream = splitmix64(x ^ 0x77aaULL);
    MealyQuery q;
    if (splitmix64(x ^ 0xbeefULL) & 1) {
      stream = splitmix64(stream);
      std::size_t len = stream % (word_length + 1);
      std::string w;
      for (std::size_t i = 0; i < len; ++i) {
        stream = splitmix64(stream);
        w.push_back(alphabet[stream % alphabet.size()]);
      }
      q = OqQuery{std::move(w)};
    } else {
      Mealy h;
      h.alphabet = alphabet;
      h.outputs = outputs;
      h.initial = 0;
      stream = splitmix64(stream);
      std::size_t n = 1 + stream % max_states;
      h.next.assign(n, {});
      for (auto& row : h.next)
        for (std::size_t i = 0; i < alphabet.size(); ++i) {
          stream = splitmix64(stream);
          row.push_back({outputs[stream % outputs.size()], splitmix64(stream ^ 0x5ULL) % n});
        }
      q = EqQuery{std::move(h)};
    }
    return LearnerStep<MealyQuery, MealyResponse>{
        q, [node, x](const MealyResponse& r) {
          return node(splitmix64(x ^ fnv1a64(mealy_response_label(r))));
        }};
  };
  return l;
}

MealyQuery random_mealy_query(std::mt19937_64& rng, const std::vector<char>& alphabet,
                              const std::vector<char>& outputs, std::size_t max_word_len,
                              std::size_t max_states) {
  if (rng() & 1) {
    std::size_t len = rng() % (max_word_len + 1);
    std::string w;
    for (std::size_t i = 0; i < len; ++i) w.push_back(alphabet[rng() % alphabet.size()]);
    return OqQuery{std::move(w)};
  }
  return EqQuery{random_mealy(rng, max_states, alphabet, outputs)};
}

}  // namespace qg::mealy
