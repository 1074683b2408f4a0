#include "galois/runner.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <utility>
#include <vector>

#include "galois/builtins.hpp"
#include "galois/combinators.hpp"
#include "galois/connections.hpp"
#include "galois/oracle.hpp"
#include "galois/orders.hpp"

namespace galois {

namespace {

using json = nlohmann::ordered_json;

constexpr std::array<std::string_view, 5> kOrders = {"prefix", "sublist", "suffix", "product", "pair-prefix"};
constexpr std::array<std::string_view, 10> kLaws = {
    "gc",      "cancellation-left", "cancellation-right", "semi-inverse", "injective-adjoint",
    "idempotent", "fusion",         "indirect-equality",  "order-laws",   "split-append"};
constexpr std::array<std::string_view, 2> kPairs = {"words-unwords", "lines-unlines"};

std::vector<std::string_view> spec_names() {
  std::vector<std::string_view> out;
  for (auto s : kAllSpecs) out.push_back(to_string(s));
  return out;
}

template <class Range>
bool contains(const Range& r, std::string_view name) {
  return std::find(std::begin(r), std::end(r), name) != std::end(r);
}

template <class Range>
std::string join(const Range& r) {
  std::string out;
  for (const auto& s : r) {
    if (!out.empty()) out += ", ";
    out += s;
  }
  return out;
}

/// What a command produced, before formatting.
struct Outcome {
  CheckReport report;
  std::vector<CheckReport> laws;  // per-law / per-subject breakdown, when there is more than one
  std::optional<Value> least_element;
  std::optional<Value> value;
  std::optional<OracleError<Value>> oracle_error;
};

/// Runs checks one after another against a shared budget, stopping at the
/// first one that does not pass.
class Sequence {
 public:
  explicit Sequence(const CheckOptions& opts) : opts_(opts) {}

  template <class Fn>
  bool add(Fn&& check) {
    parts_.push_back(check(remaining(opts_, spent_)));
    spent_ = sat_add(spent_, parts_.back().evaluations);
    return parts_.back().passed();
  }

  CheckReport merged(std::string law, std::string subject) const {
    return merge_reports(std::move(law), std::move(subject), parts_);
  }
  const std::vector<CheckReport>& parts() const { return parts_; }

 private:
  CheckOptions opts_;
  std::uint64_t spent_ = 0;
  std::vector<CheckReport> parts_;
};

bool keep_parameter(const std::optional<Binding>& parameter, const RunConfig& cfg) {
  if (!parameter) return true;
  if (const auto* p = std::get_if<Pred>(&parameter->value)) return !cfg.pred || *cfg.pred == *p;
  if (const auto* n = std::get_if<std::uint64_t>(&parameter->value)) return !cfg.n || *cfg.n == *n;
  return true;
}

template <class T>
std::vector<T> select(std::vector<T> family, const RunConfig& cfg) {
  std::erase_if(family, [&](const T& m) { return !keep_parameter(m.parameter, cfg); });
  if (family.empty()) throw UsageError("--pred / --n selects no member of the family");
  return family;
}

// ---- orders

template <class T>
Outcome order_outcome(const OrderDef<T>& o, const RunConfig& cfg, const CheckOptions& opts) {
  const auto laws = check_order_laws(o, cfg.universe, opts);
  Outcome out;
  out.report = summarize(laws);
  out.laws = {laws.reflexive, laws.transitive, laws.antisymmetric};
  if (laws.least_element) out.least_element = Value(*laws.least_element);
  return out;
}

template <class Fn>
auto with_order(std::string_view name, Fn&& fn) {
  if (name == "prefix") return fn(prefix_order());
  if (name == "sublist") return fn(sublist_order());
  if (name == "suffix") return fn(suffix_order());
  if (name == "product") return fn(product_order());
  if (name == "pair-prefix") return fn(pair_prefix_order());
  throw UsageError("unknown order '" + std::string(name) + "' (expected one of: " + join(kOrders) + ")");
}

// ---- specs and connections

template <class Fn>
auto with_spec_family(std::string_view name, const RunConfig& cfg, Fn&& fn) {
  const auto& u = cfg.universe;
  if (name == "takeWhile") return fn(select(take_while_specs(u), cfg));
  if (name == "take") return fn(select(take_specs(u), cfg));
  if (name == "filter") return fn(select(filter_specs(u), cfg));
  if (name == "dropWhile") return fn(select(drop_while_specs(u), cfg));
  if (name == "zip") return fn(std::vector{zip_spec()});
  throw UsageError("unknown spec '" + std::string(name) + "' (expected one of: " + join(spec_names()) + ")");
}

template <class Fn>
auto with_gc_family(std::string_view name, const RunConfig& cfg, Fn&& fn) {
  const auto& u = cfg.universe;
  if (name == "takeWhile") return fn(select(take_while_gcs(u), cfg));
  if (name == "take") return fn(std::vector{take_gc()});
  if (name == "filter") return fn(select(filter_gcs(u), cfg));
  if (name == "dropWhile") return fn(select(drop_while_gcs(u), cfg));
  if (name == "zip") return fn(std::vector{zip_gc()});
  if (name == "words-unwords") return fn(std::vector{words_unwords_gc()});
  if (name == "lines-unlines") return fn(std::vector{lines_unlines_gc()});
  throw UsageError("unknown connection '" + std::string(name) + "' (expected a spec or pair name)");
}

/// Applies `law` to every member of a connection family; stops at the first non-pass.
template <class Law>
CheckReport gc_family_law(std::string_view law_name, std::string_view subject, const RunConfig& cfg,
                          const CheckOptions& opts, Law&& law) {
  return with_gc_family(subject, cfg, [&](const auto& family) {
    Sequence seq(opts);
    for (const auto& member : family) {
      if (!seq.add([&](const CheckOptions& o) { return law(member, cfg.universe, o); })) break;
    }
    return seq.merged(std::string(law_name), std::string(subject));
  });
}

Outcome check_spec_outcome(const RunConfig& cfg, const CheckOptions& opts) {
  Outcome out;
  out.report = with_spec_family(cfg.target, cfg, [&](const auto& family) {
    return check_family(family, cfg.universe, opts);
  });
  out.report.subject = cfg.target;
  return out;
}

Outcome check_gc_outcome(const RunConfig& cfg, const CheckOptions& opts) {
  Sequence seq(opts);
  auto gc = [](const auto& c, const Universe& u, const CheckOptions& o) { return check_canonical_gc(c, u, o); };
  auto monotone = [](const auto& c, const Universe& u, const CheckOptions& o) {
    return check_monotone_adjoints(c, u, o);
  };
  if (seq.add([&](const CheckOptions& o) { return gc_family_law("gc", cfg.target, cfg, o, gc); })) {
    seq.add([&](const CheckOptions& o) { return gc_family_law("monotone", cfg.target, cfg, o, monotone); });
  }
  Outcome out;
  out.report = seq.merged("gc", cfg.target);
  out.laws = seq.parts();
  return out;
}

// ---- check-laws

std::vector<std::string> default_subjects(std::string_view law) {
  if (law == "idempotent") return {"takeWhile", "take", "filter", "dropWhile"};
  if (law == "fusion") return {"takeWhile", "filter"};
  if (law == "indirect-equality" || law == "order-laws") return {kOrders.begin(), kOrders.end()};
  if (law == "split-append") return {"takeWhile/dropWhile"};
  return {"takeWhile", "take", "filter", "dropWhile", "zip"};
}

void require_subject(std::string_view law, std::string_view subject) {
  auto allowed = default_subjects(law);
  if (law == "gc" || law.starts_with("cancellation") || law == "semi-inverse" || law == "injective-adjoint") {
    allowed.insert(allowed.end(), kPairs.begin(), kPairs.end());
  }
  if (!contains(allowed, subject)) {
    throw UsageError("law '" + std::string(law) + "' has no subject '" + std::string(subject) +
                     "' (expected one of: " + join(allowed) + ")");
  }
}

CheckReport idempotent_for(std::string_view subject, const RunConfig& cfg, const CheckOptions& opts) {
  Sequence seq(opts);
  const std::string name(subject);
  if (subject == "take") {
    for (std::uint64_t n = 0; n <= std::uint64_t{cfg.universe.max_len} + 1; ++n) {
      const Binding param{"n", n};
      if (!keep_parameter(param, cfg)) continue;
      auto h = [n](const Seq& xs) { return take_n(n, xs); };
      if (!seq.add([&](const CheckOptions& o) { return check_idempotent(name, h, cfg.universe, o, param); })) break;
    }
  } else {
    Seq (*fn)(Pred, const Seq&) = subject == "takeWhile" ? take_while : subject == "filter" ? filter_p : drop_while;
    for (Pred p : enum_preds(cfg.universe)) {
      const Binding param{"p", p};
      if (!keep_parameter(param, cfg)) continue;
      auto h = [fn, p](const Seq& xs) { return fn(p, xs); };
      if (!seq.add([&](const CheckOptions& o) { return check_idempotent(name, h, cfg.universe, o, param); })) break;
    }
  }
  if (seq.parts().empty()) throw UsageError("--pred / --n selects no member of the family");
  return seq.merged("idempotent", name);
}

CheckReport law_for(std::string_view law, std::string_view subject, const RunConfig& cfg, const CheckOptions& opts) {
  const auto& u = cfg.universe;
  if (law == "gc") {
    return gc_family_law(law, subject, cfg, opts,
                         [](const auto& c, const Universe& uu, const CheckOptions& o) { return check_canonical_gc(c, uu, o); });
  }
  if (law == "cancellation-left" || law == "cancellation-right") {
    const Side side = law == "cancellation-left" ? Side::left : Side::right;
    return gc_family_law(law, subject, cfg, opts, [side](const auto& c, const Universe& uu, const CheckOptions& o) {
      return check_cancellation(c, uu, side, o);
    });
  }
  if (law == "semi-inverse") {
    return gc_family_law(law, subject, cfg, opts,
                         [](const auto& c, const Universe& uu, const CheckOptions& o) { return check_semi_inverse(c, uu, o); });
  }
  if (law == "injective-adjoint") {
    return gc_family_law(law, subject, cfg, opts, [](const auto& c, const Universe& uu, const CheckOptions& o) {
      return check_injective_adjoint(c, uu, o);
    });
  }
  if (law == "idempotent") return idempotent_for(subject, cfg, opts);
  if (law == "fusion") {
    return check_fusion_law(std::string(subject), subject == "takeWhile" ? take_while : filter_p, u, opts);
  }
  if (law == "indirect-equality") {
    return with_order(subject, [&](const auto& o) { return check_indirect_equality(o, u, opts); });
  }
  if (law == "order-laws") {
    return with_order(subject, [&](const auto& o) { return summarize(check_order_laws(o, u, opts)); });
  }
  return check_split_append(u, opts);
}

Outcome check_laws_outcome(const RunConfig& cfg, const CheckOptions& opts) {
  if (!contains(kLaws, cfg.target)) {
    throw UsageError("unknown law '" + cfg.target + "' (expected one of: " + join(kLaws) + ")");
  }
  std::vector<std::string> subjects = default_subjects(cfg.target);
  if (cfg.subject) {
    require_subject(cfg.target, *cfg.subject);
    subjects = {*cfg.subject};
  }
  Sequence seq(opts);
  for (const auto& s : subjects) {
    if (!seq.add([&](const CheckOptions& o) { return law_for(cfg.target, s, cfg, o); })) break;
  }
  Outcome out;
  out.report = seq.merged(cfg.target, join(subjects));
  if (subjects.size() > 1) out.laws = seq.parts();
  return out;
}

// ---- find-counterexample and oracle

Outcome find_outcome(const RunConfig& cfg, const CheckOptions& opts) {
  const auto pair = parse_non_gc_pair(cfg.target);
  if (!pair) throw UsageError("unknown pair '" + cfg.target + "' (expected one of: " + join(kPairs) + ")");
  Outcome out;
  out.report = find_non_gc_counterexample(*pair, cfg.universe, opts);
  return out;
}

Seq parse_member(std::string_view text, const Universe& u) {
  Seq xs;
  try {
    xs = parse_csv(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--input: ") + e.what());
  }
  if (!u.contains(xs)) {
    throw UsageError("--input '" + std::string(text) + "' is not in the universe (k=" +
                     std::to_string(u.alphabet_size) + ", L=" + std::to_string(u.max_len) + ")");
  }
  return xs;
}

Outcome oracle_outcome(const RunConfig& cfg) {
  const auto spec = parse_spec_name(cfg.target);
  if (!spec) throw UsageError("unknown spec '" + cfg.target + "' (expected one of: " + join(spec_names()) + ")");
  if (!cfg.input) throw UsageError("oracle needs --input");
  OracleQuery q;
  if (*spec == SpecName::zip) {
    const auto semi = cfg.input->find(';');
    if (semi == std::string::npos) throw UsageError("zip oracle input is two lists separated by ';', e.g. \"1,0;1\"");
    q.input = parse_member(std::string_view(*cfg.input).substr(0, semi), cfg.universe);
    q.second = parse_member(std::string_view(*cfg.input).substr(semi + 1), cfg.universe);
  } else {
    q.input = parse_member(*cfg.input, cfg.universe);
  }
  if (*spec == SpecName::take) {
    if (!cfg.n) throw UsageError("oracle for take needs --n");
    q.n = *cfg.n;
  } else if (*spec != SpecName::zip) {
    if (!cfg.pred) throw UsageError("oracle for " + cfg.target + " needs --pred");
    q.pred = *cfg.pred;
  }

  Stopwatch clock;
  auto result = oracle_spec(*spec, q, cfg.universe);
  Outcome out;
  out.report.law = "oracle";
  out.report.subject = cfg.target;
  out.report.cases_checked = 1;
  if (auto* v = std::get_if<Value>(&result)) {
    out.value = std::move(*v);
  } else {
    out.report.verdict = Verdict::fail;
    out.oracle_error = std::move(std::get<OracleError<Value>>(result));
  }
  out.report.elapsed = clock.elapsed();
  return out;
}

// ---- formatting

json typed(const Value& v, unsigned k) { return json{{"type", value_type(v)}, {"value", value_to_json(v, k)}}; }

json elapsed_json(const CheckReport& r, bool timing) {
  if (!timing) return 0;
  return std::chrono::duration<double, std::milli>(r.elapsed).count();
}

json counterexample_json(const CheckReport& r, unsigned k) {
  if (!r.counterexample) return nullptr;
  return json{{"law", r.law}, {"subject", r.subject}, {"clause", r.clause}, {"bindings", witness_to_json(*r.counterexample, k)}};
}

std::string to_json(const RunConfig& cfg, const Outcome& out) {
  const unsigned k = cfg.universe.alphabet_size;
  json j;
  j["command"] = to_string(cfg.command);
  j["target"] = cfg.target;
  j["universe"] = {{"alphabet_size", cfg.universe.alphabet_size}, {"max_len", cfg.universe.max_len}};
  j["cases_checked"] = out.report.cases_checked;
  j["verdict"] = to_string(out.report.verdict);
  j["counterexample"] = counterexample_json(out.report, k);
  j["elapsed_ms"] = elapsed_json(out.report, cfg.timing);
  j["tool_version"] = kToolVersion;
  if (cfg.subject) j["subject"] = *cfg.subject;
  if (!out.laws.empty()) {
    json laws = json::array();
    for (const auto& r : out.laws) {
      laws.push_back({{"law", r.law},
                      {"subject", r.subject},
                      {"verdict", to_string(r.verdict)},
                      {"cases_checked", r.cases_checked}});
    }
    j["laws"] = std::move(laws);
  }
  if (cfg.command == Command::check_order) {
    j["least_element"] = out.least_element ? typed(*out.least_element, k) : json(nullptr);
  }
  if (cfg.command == Command::oracle) {
    j["value"] = out.value ? typed(*out.value, k) : json(nullptr);
    if (out.oracle_error) {
      json maxima = json::array();
      for (const auto& m : out.oracle_error->maxima) maxima.push_back(typed(m, k));
      j["oracle_error"] = {{"kind", to_string(out.oracle_error->kind)}, {"maxima", std::move(maxima)}};
    }
  }
  return j.dump(2) + "\n";
}

std::string render_binding(const Binding& b, unsigned k) {
  if (const auto* p = std::get_if<Pred>(&b.value)) return format_pred(*p, k);
  return render_value(b.value, k);
}

std::string to_text(const RunConfig& cfg, const Outcome& out) {
  const unsigned k = cfg.universe.alphabet_size;
  std::ostringstream os;
  os << to_string(out.report.verdict) << ": " << to_string(cfg.command) << ' ' << cfg.target
     << " (k=" << k << ", L=" << cfg.universe.max_len << "), " << out.report.cases_checked << " cases";
  if (cfg.timing) os << ", " << elapsed_json(out.report, true).get<double>() << " ms";
  os << '\n';
  for (const auto& r : out.laws) {
    os << "  " << r.law << ' ' << r.subject << ": " << to_string(r.verdict) << ", " << r.cases_checked
       << " cases\n";
  }
  if (out.least_element) os << "  least element: " << render_value(*out.least_element, k) << '\n';
  if (out.value) os << "  value: " << render_value(*out.value, k) << '\n';
  if (out.oracle_error) {
    os << "  " << to_string(out.oracle_error->kind);
    for (const auto& m : out.oracle_error->maxima) os << ' ' << render_value(m, k);
    os << '\n';
  }
  if (out.report.counterexample) {
    os << "  counterexample (" << out.report.law << ", " << out.report.subject << "): " << out.report.clause
       << '\n';
    for (const auto& b : *out.report.counterexample) os << "    " << b.name << " = " << render_binding(b, k) << '\n';
  }
  return os.str();
}

Outcome dispatch(const RunConfig& cfg) {
  const CheckOptions opts{cfg.budget, std::max(1u, cfg.workers)};
  switch (cfg.command) {
    case Command::check_order: return with_order(cfg.target, [&](const auto& o) { return order_outcome(o, cfg, opts); });
    case Command::check_spec: return check_spec_outcome(cfg, opts);
    case Command::check_gc: return check_gc_outcome(cfg, opts);
    case Command::check_laws: return check_laws_outcome(cfg, opts);
    case Command::find_counterexample: return find_outcome(cfg, opts);
    case Command::oracle: return oracle_outcome(cfg);
  }
  throw UsageError("unknown command");
}

}  // namespace

std::string_view to_string(Command c) noexcept {
  switch (c) {
    case Command::check_order: return "check-order";
    case Command::check_spec: return "check-spec";
    case Command::check_gc: return "check-gc";
    case Command::check_laws: return "check-laws";
    case Command::find_counterexample: return "find-counterexample";
    case Command::oracle: return "oracle";
  }
  return "?";
}

std::optional<Command> parse_command(std::string_view name) noexcept {
  for (auto c : {Command::check_order, Command::check_spec, Command::check_gc, Command::check_laws,
                 Command::find_counterexample, Command::oracle}) {
    if (to_string(c) == name) return c;
  }
  return std::nullopt;
}

RunResult run(const RunConfig& cfg) {
  RunResult result;
  try {
    cfg.universe.validate();
    if (cfg.pred && (cfg.pred->members() & ~Pred::full(cfg.universe.alphabet_size).members()) != 0) {
      throw UsageError("--pred mentions elements outside the alphabet of size " +
                       std::to_string(cfg.universe.alphabet_size));
    }
    const Outcome out = dispatch(cfg);
    result.output = cfg.format == Format::json ? to_json(cfg, out) : to_text(cfg, out);
    result.exit_code = out.report.passed() ? 0 : 1;
  } catch (const UniverseTooLarge& e) {
    result.exit_code = 2;
    result.error = e.what();
  } catch (const std::invalid_argument& e) {
    result.exit_code = 2;
    result.error = e.what();
  } catch (const std::exception& e) {
    result.exit_code = 3;
    result.error = std::string("internal error: ") + e.what();
  }
  return result;
}

std::string list_targets() {
  auto line = [](std::string_view group, auto names) {
    std::vector<std::string> sorted(names.begin(), names.end());
    std::sort(sorted.begin(), sorted.end());
    std::string out(group);
    out += ':';
    for (const auto& n : sorted) out += ' ' + n;
    return out + '\n';
  };
  return line("orders", kOrders) + line("specs", spec_names()) + line("laws", kLaws) + line("pairs", kPairs);
}

}  // namespace galois
