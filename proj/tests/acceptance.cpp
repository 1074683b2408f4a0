// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Every criterion must also finish inside its time limit.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "galois/builtins.hpp"
#include "galois/combinators.hpp"
#include "galois/connections.hpp"
#include "galois/oracle.hpp"
#include "galois/runner.hpp"
#include "json.hpp"

using namespace galois;
using json = nlohmann::ordered_json;

namespace {

constexpr double kLimitSeconds = 10.0;

const unsigned kWorkers = std::max(1u, std::thread::hardware_concurrency());

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

json run_json(Command command, const std::string& target, Universe u, unsigned workers = kWorkers,
              std::uint64_t budget = kDefaultBudget, int* exit_code = nullptr) {
  RunConfig cfg;
  cfg.command = command;
  cfg.target = target;
  cfg.universe = u;
  cfg.format = Format::json;
  cfg.workers = workers;
  cfg.budget = budget;
  const auto r = run(cfg);
  if (exit_code) *exit_code = r.exit_code;
  if (r.exit_code >= 2) return json{{"verdict", "error"}, {"error", r.error}};
  return json::parse(r.output);
}

Outcome order_laws() {
  Outcome o;
  const Universe u{3, 5};
  for (const char* name : {"prefix", "sublist", "suffix", "product", "pair-prefix"}) {
    // pair-prefix has 66430 elements: 4.4e9 relation evaluations
    const std::uint64_t budget = std::string(name) == "pair-prefix" ? 10'000'000'000ull : kDefaultBudget;
    const auto j = run_json(Command::check_order, name, u, kWorkers, budget);
    o.require(j["verdict"] == "pass", std::string(name) + ": " + j.dump());
    if (std::string(name) == "prefix" || std::string(name) == "sublist") {
      o.require(j["least_element"]["type"] == "seq" && j["least_element"]["value"] == "",
                std::string(name) + ": least element is not []");
    }
  }
  return o;
}

Outcome spec_conformance() {
  Outcome o;
  for (const auto s : kAllSpecs) {
    const auto j = run_json(Command::check_spec, std::string(to_string(s)), {2, 5});
    o.require(j["verdict"] == "pass", j.dump());
  }
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  const Universe u{2, 5};
  const auto seqs = enum_seqs(u);
  auto same = [&](const auto& r, const auto& expected, const std::string& what) {
    using T = std::decay_t<decltype(expected)>;
    o.require(!is_error(r), what + ": oracle has no answer");
    if (!is_error(r)) o.require(std::get<T>(r) == expected, what + ": combinator differs from oracle");
  };
  for (const auto& xs : seqs) {
    const std::string at = " at " + render_value(xs, 2);
    for (Pred p : enum_preds(u)) {
      same(oracle_take_while(p, xs, u), take_while(p, xs), "takeWhile" + at);
      same(oracle_filter(p, xs, u), filter_p(p, xs), "filter" + at);
      same(oracle_drop_while(p, xs, u), drop_while(p, xs), "dropWhile" + at);
    }
    for (std::uint64_t n = 0; n <= u.max_len + 1; ++n) same(oracle_take(n, xs, u), take_n(n, xs), "take" + at);
    for (const auto& ys : seqs) same(oracle_zip(xs, ys, u), zip_pair(xs, ys), "zip" + at);
  }
  return o;
}

Outcome fusion() {
  Outcome o;
  const auto j = run_json(Command::check_laws, "fusion", {2, 5});
  o.require(j["verdict"] == "pass", j.dump());
  o.require(j["cases_checked"] == 2 * 16 * 63, "expected 16 predicate pairs x 63 sequences per combinator");
  return o;
}

Outcome idempotency() {
  Outcome o;
  const Universe u{2, 5};
  for (Pred p : enum_preds(u)) {
    const CheckOptions opts{kDefaultBudget, kWorkers};
    const Binding param{"p", p};
    o.require(check_idempotent("takeWhile", [p](const Seq& x) { return take_while(p, x); }, u, opts, param).passed(),
              "takeWhile");
    o.require(check_idempotent("filter", [p](const Seq& x) { return filter_p(p, x); }, u, opts, param).passed(),
              "filter");
    o.require(check_idempotent("dropWhile", [p](const Seq& x) { return drop_while(p, x); }, u, opts, param).passed(),
              "dropWhile");
  }
  return o;
}

Outcome zip_unzip() {
  Outcome o;
  const Universe u{2, 3};
  const CheckOptions opts{kDefaultBudget, kWorkers};
  const auto c = zip_gc();
  o.require(check_canonical_gc(c, u, opts).passed(), "zip connection");
  o.require(check_cancellation(c, u, Side::left, opts).passed(), "left cancellation");
  o.require(check_cancellation(c, u, Side::right, opts).passed(), "right cancellation");
  for (const auto& zs : Carrier<PairSeq>::all({2, 4})) {
    o.require(zip_uncurried(unzip_pair(zs)) == zs, "zip . unzip at " + render_value(zs, 2));
  }
  bool witnessed = false;
  for (const auto& xy : Carrier<SeqPair>::all(u)) {
    if (xy.first.size() != xy.second.size() && unzip_pair(zip_uncurried(xy)) != xy) {
      std::printf("  unzip . zip differs from the identity at %s\n", render_value(xy, 2).c_str());
      witnessed = true;
      break;
    }
  }
  o.require(witnessed, "no unequal-length pair breaks unzip . zip");
  return o;
}

Outcome split_append() {
  Outcome o;
  const auto j = run_json(Command::check_laws, "split-append", {2, 5});
  o.require(j["verdict"] == "pass", j.dump());
  return o;
}

Outcome indirect_equality() {
  Outcome o;
  for (const char* order : {"prefix", "sublist"}) {
    RunConfig cfg;
    cfg.command = Command::check_laws;
    cfg.target = "indirect-equality";
    cfg.subject = order;
    cfg.universe = {2, 4};
    cfg.workers = kWorkers;
    const auto r = run(cfg);
    o.require(r.exit_code == 0, std::string(order) + ": " + r.output + r.error);
  }
  return o;
}

// The witness must re-validate from its JSON form alone.
Outcome non_gc_detection() {
  Outcome o;
  int code = 0;
  auto j = run_json(Command::find_counterexample, "words-unwords", {2, 6}, kWorkers, kDefaultBudget, &code);
  o.require(code == 1 && j["verdict"] == "fail", "words-unwords: " + j.dump());
  if (code == 1) {
    const auto w = witness_from_json(j["counterexample"]["bindings"]);
    const auto& y = binding_as<SeqList>(w, "y");
    const Seq fy = unwords_join(y);
    const Seq fgfy = unwords_join(words_split(fy));
    std::printf("  words-unwords: y = %s, unwords y = %s, unwords (words (unwords y)) = %s\n",
                render_value(y, 2).c_str(), render_value(fy, 2).c_str(), render_value(fgfy, 2).c_str());
    o.require(fgfy != fy, "words-unwords witness does not violate f . g . f = f");
    // trailing-separator collapse: one segment ending in the separator, which the round trip strips
    o.require(y.size() == 1 && !y.front().empty() && y.front().back() == kSeparator,
              "words-unwords witness is not a single segment with a trailing separator");
    o.require(fgfy.size() < fy.size() && is_prefix(fgfy, fy), "round trip does not just drop trailing separators");
    const SeqList hello{make_seq({1, 0, 0, 0})};
    o.require(unwords_join(words_split(unwords_join(hello))) == make_seq({1}), "[1,0,0,0] does not collapse to [1]");
  }

  j = run_json(Command::find_counterexample, "lines-unlines", {2, 6}, kWorkers, kDefaultBudget, &code);
  o.require(code == 1 && j["verdict"] == "fail", "lines-unlines: " + j.dump());
  if (code == 1) {
    const auto w = witness_from_json(j["counterexample"]["bindings"]);
    const std::string clause = j["counterexample"]["clause"];
    std::printf("  lines-unlines: %s with %s\n", clause.c_str(), j["counterexample"]["bindings"].dump().c_str());
    bool violated = false;
    if (clause.starts_with("cancellation-left")) {
      const auto& x = binding_as<Seq>(w, "x");
      violated = !is_prefix(unlines_join(lines_split(x)), x);
    } else if (clause.find("f(g(f(y)))") != std::string::npos) {
      const auto fy = unlines_join(binding_as<SeqList>(w, "y"));
      violated = unlines_join(lines_split(fy)) != fy;
    } else {
      const auto gx = lines_split(binding_as<Seq>(w, "x"));
      violated = lines_split(unlines_join(gx)) != gx;
    }
    o.require(violated, "lines-unlines witness does not re-validate");
  }
  return o;
}

Outcome determinism() {
  Outcome o;
  struct Suite {
    Command command;
    const char* target;
    Universe u;
  };
  const Suite suites[] = {
      {Command::check_order, "prefix", {3, 5}},      {Command::check_order, "sublist", {3, 5}},
      {Command::check_order, "suffix", {3, 5}},      {Command::check_order, "product", {3, 5}},
      {Command::check_spec, "takeWhile", {2, 5}},    {Command::check_spec, "take", {2, 5}},
      {Command::check_spec, "filter", {2, 5}},       {Command::check_spec, "dropWhile", {2, 5}},
      {Command::check_spec, "zip", {2, 5}},          {Command::check_gc, "zip", {2, 3}},
      {Command::check_gc, "words-unwords", {2, 5}},  {Command::check_laws, "fusion", {2, 5}},
      {Command::check_laws, "idempotent", {2, 5}},   {Command::check_laws, "split-append", {2, 5}},
      {Command::check_laws, "semi-inverse", {2, 4}}, {Command::check_laws, "indirect-equality", {2, 4}},
      {Command::find_counterexample, "words-unwords", {2, 6}},
      {Command::find_counterexample, "lines-unlines", {2, 6}},
  };
  for (const auto& s : suites) {
    std::string reports[2];
    const unsigned workers[2] = {1, 4};
    for (int i = 0; i < 2; ++i) {
      RunConfig cfg;
      cfg.command = s.command;
      cfg.target = s.target;
      cfg.universe = s.u;
      cfg.format = Format::json;
      cfg.workers = workers[i];
      reports[i] = run(cfg).output;
    }
    o.require(!reports[0].empty() && reports[0] == reports[1],
              std::string(to_string(s.command)) + " " + s.target + " differs between 1 and 4 workers");
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"order laws (k=3, L=5)", order_laws},
      {"spec conformance (k=2, L=5)", spec_conformance},
      {"oracle equivalence (k=2, L=5)", oracle_equivalence},
      {"fusion (k=2, L=5)", fusion},
      {"idempotency (k=2, L=5)", idempotency},
      {"zip/unzip (k=2, L=3)", zip_unzip},
      {"split/append (k=2, L=5)", split_append},
      {"indirect equality (k=2, L=4)", indirect_equality},
      {"non-GC detection (k=2, L=6)", non_gc_detection},
      {"determinism (workers 1 vs 4)", determinism},
  };
  std::printf("acceptance: %u worker(s), limit %.0f s per criterion\n", kWorkers, kLimitSeconds);
  int failures = 0;
  int index = 0;
  for (const auto& c : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.ok = false;
      out.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (out.ok && seconds >= kLimitSeconds) {
      out.ok = false;
      out.detail = "exceeded the time limit";
    }
    std::printf("%s %2d %-32s %7.2f s%s%s\n", out.ok ? "PASS" : "FAIL", index, c.name, seconds,
                out.ok ? "" : "  ", out.detail.c_str());
    std::fflush(stdout);
    failures += out.ok ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
