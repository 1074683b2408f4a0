#include "galois/connections.hpp"

#include "galois/builtins.hpp"
#include "galois/combinators.hpp"

namespace galois {

CheckReport check_idempotent(const std::string& name, const std::function<Seq(const Seq&)>& h, const Universe& u,
                             const CheckOptions& opts, const std::optional<Binding>& parameter) {
  Stopwatch clock;
  const auto evaluations = sat_mul(seq_count(u), 2);
  require_budget("idempotency of " + name, evaluations, opts);
  const auto seqs = enum_seqs(u);
  auto scanned = scan(seqs.size(), opts.workers, [&](std::size_t i) {
    CaseOutcome out{1, {}};
    const Seq once = h(seqs[i]);
    if (h(once) != once) out.witness = detail::with_parameter(parameter, {{"x", seqs[i]}});
    return out;
  });
  return detail::make_report("idempotent", name, std::move(scanned), evaluations, "h(h(x)) = h(x)", clock);
}

CheckReport check_fusion_law(const std::string& name, const std::function<Seq(Pred, const Seq&)>& fn,
                             const Universe& u, const CheckOptions& opts) {
  Stopwatch clock;
  const auto preds = enum_preds(u);
  const auto evaluations = sat_mul(sat_mul(sat_mul(preds.size(), preds.size()), seq_count(u)), 3);
  require_budget("fusion for " + name, evaluations, opts);
  const auto seqs = enum_seqs(u);
  const std::size_t np = preds.size();
  // outer quantifier: the (p, q) pair, p-major
  auto scanned = scan(np * np, opts.workers, [&](std::size_t pq) {
    const Pred p = preds[pq / np];
    const Pred q = preds[pq % np];
    const Pred both = pred_and(p, q);
    CaseOutcome out;
    for (const auto& xs : seqs) {
      ++out.cases;
      if (fn(p, fn(q, xs)) != fn(both, xs)) {
        out.witness = Witness{{"p", p}, {"q", q}, {"x", xs}};
        break;
      }
    }
    return out;
  });
  return detail::make_report("fusion", name, std::move(scanned), evaluations,
                             name + " p . " + name + " q = " + name + " (p and q)", clock);
}

CheckReport check_fusion(const Universe& u, const CheckOptions& opts) {
  std::vector<CheckReport> parts;
  parts.push_back(check_fusion_law("takeWhile", take_while, u, opts));
  if (parts.back().passed()) parts.push_back(check_fusion_law("filter", filter_p, u, remaining(opts, parts[0].evaluations)));
  return merge_reports("fusion", "takeWhile, filter", parts);
}

CheckReport check_split_append(const Universe& u, const CheckOptions& opts) {
  Stopwatch clock;
  const auto preds = enum_preds(u);
  const auto evaluations = sat_mul(sat_mul(preds.size(), seq_count(u)), 2);
  require_budget("takeWhile/dropWhile split", evaluations, opts);
  const auto seqs = enum_seqs(u);
  auto scanned = scan(preds.size(), opts.workers, [&](std::size_t i) {
    const Pred p = preds[i];
    CaseOutcome out;
    for (const auto& xs : seqs) {
      ++out.cases;
      if (concat(take_while(p, xs), drop_while(p, xs)) != xs) {
        out.witness = Witness{{"p", p}, {"x", xs}};
        break;
      }
    }
    return out;
  });
  return detail::make_report("split-append", "takeWhile/dropWhile", std::move(scanned), evaluations,
                             "takeWhile p x ++ dropWhile p x = x", clock);
}

std::string_view to_string(NonGcPair p) noexcept {
  return p == NonGcPair::words_unwords ? "words-unwords" : "lines-unlines";
}

std::optional<NonGcPair> parse_non_gc_pair(std::string_view name) noexcept {
  if (name == "words-unwords") return NonGcPair::words_unwords;
  if (name == "lines-unlines") return NonGcPair::lines_unlines;
  return std::nullopt;
}

CheckReport find_non_gc_counterexample(NonGcPair pair, const Universe& u, const CheckOptions& opts) {
  Stopwatch clock;
  const auto c = pair == NonGcPair::words_unwords ? words_unwords_gc() : lines_unlines_gc();
  const auto nx = Carrier<Seq>::count(u);
  const auto ny = Carrier<SeqList>::count(u);
  const auto evaluations = sat_mul(sat_add(sat_mul(nx, 2), ny), 2);
  require_budget("non-GC search for " + c.name, evaluations, opts);
  const auto xs = Carrier<Seq>::all(u);
  const auto ys = Carrier<SeqList>::all(u);

  std::uint64_t cases = 0;
  auto finish = [&](ScanResult scanned, std::string clause) {
    scanned.cases += cases;
    return detail::make_report("non-gc", c.name, std::move(scanned), evaluations, std::move(clause), clock);
  };

  auto step = scan(ys.size(), opts.workers, [&](std::size_t j) {
    CaseOutcome out{1, {}};
    const Seq fy = c.lower(ys[j]);
    if (c.lower(c.upper(fy)) != fy) out.witness = Witness{{"y", ys[j]}};
    return out;
  });
  if (step.witness) return finish(std::move(step), "semi-inverse: f(g(f(y))) = f(y)");
  cases += step.cases;

  step = scan(xs.size(), opts.workers, [&](std::size_t i) {
    CaseOutcome out{1, {}};
    const SeqList gx = c.upper(xs[i]);
    if (c.upper(c.lower(gx)) != gx) out.witness = Witness{{"x", xs[i]}};
    return out;
  });
  if (step.witness) return finish(std::move(step), "semi-inverse: g(f(g(x))) = g(x)");
  cases += step.cases;

  step = scan(xs.size(), opts.workers, [&](std::size_t i) {
    CaseOutcome out{1, {}};
    if (!c.order_a.leq(c.lower(c.upper(xs[i])), xs[i])) out.witness = Witness{{"x", xs[i]}};
    return out;
  });
  return finish(std::move(step), "cancellation-left: f(g(x)) prefix x");
}

}  // namespace galois
