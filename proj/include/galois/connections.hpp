#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "galois/carrier.hpp"
#include "galois/engine.hpp"
#include "galois/oracle.hpp"
#include "galois/orders.hpp"
#include "galois/report.hpp"

namespace galois {

/// Pointwise easy-hard specification: easy(y, x) <=> order.leq(y, hard(x)).
/// `hard` is the implementation under test. `domain`, when set, restricts the
/// y quantifier to a sub-poset (dropWhile only relates lists whose head fails p).
template <class In, class Out>
struct EasyHardSpec {
  std::string name;
  std::optional<Binding> parameter;
  EasyCondition<Out, In> easy;
  OrderDef<Out> order;
  std::function<Out(const In&)> hard;
  std::function<bool(const Out&)> domain = {};
};

/// Two-function form: f(y) <=_A x  <=>  y <=_B g(x), for f : B -> A, g : A -> B.
///
/// `restrict_b`, when set, narrows B to a sub-poset. The takeWhile, filter and
/// dropWhile connections use it with f = inclusion.
template <class A, class B>
struct CanonicalGC {
  std::string name;
  std::optional<Binding> parameter;
  std::function<A(const B&)> lower;
  std::function<B(const A&)> upper;
  OrderDef<A> order_a;
  OrderDef<B> order_b;
  std::function<bool(const B&)> restrict_b;
};

enum class Side { left, right };

namespace detail {

inline Witness with_parameter(const std::optional<Binding>& parameter, Witness rest) {
  if (!parameter) return rest;
  Witness out{*parameter};
  out.insert(out.end(), std::make_move_iterator(rest.begin()), std::make_move_iterator(rest.end()));
  return out;
}

inline CheckReport make_report(std::string law, std::string subject, ScanResult scanned,
                               std::uint64_t evaluations, std::string clause, const Stopwatch& clock) {
  CheckReport r;
  r.law = std::move(law);
  r.subject = std::move(subject);
  r.cases_checked = scanned.cases;
  r.evaluations = evaluations;
  if (scanned.witness) {
    r.verdict = Verdict::fail;
    r.counterexample = std::move(scanned.witness);
    r.clause = std::move(clause);
  }
  r.elapsed = clock.elapsed();
  return r;
}

template <class T>
std::vector<T> materialize(const Universe& u, const std::function<bool(const T&)>& keep) {
  auto all = Carrier<T>::all(u);
  if (!keep) return all;
  std::vector<T> out;
  for (auto& v : all) {
    if (keep(v)) out.push_back(std::move(v));
  }
  return out;
}

template <class A, class B>
struct Domains {
  std::vector<A> a;
  std::vector<B> b;
};

template <class A, class B>
Domains<A, B> domains(const CanonicalGC<A, B>& c, const Universe& u, std::uint64_t projected,
                      std::string_view law, const CheckOptions& opts) {
  require_budget(std::string(law) + " for " + c.name, projected, opts);
  return {Carrier<A>::all(u), materialize<B>(u, c.restrict_b)};
}

}  // namespace detail

template <class In, class Out>
CheckReport check_easy_hard(const EasyHardSpec<In, Out>& s, std::span<const In> inputs,
                            std::span<const Out> outputs, const CheckOptions& opts = {}) {
  Stopwatch clock;
  const auto evaluations = sat_mul(sat_mul(inputs.size(), outputs.size()), 2);
  require_budget("easy-hard check of " + s.name, evaluations, opts);
  auto scanned = scan(inputs.size(), opts.workers, [&](std::size_t i) {
    const In& x = inputs[i];
    const Out best = s.hard(x);
    CaseOutcome out;
    for (const auto& y : outputs) {
      if (s.domain && !s.domain(y)) continue;
      ++out.cases;
      if (s.easy.holds(y, x) != s.order.leq(y, best)) {
        out.witness = detail::with_parameter(s.parameter, {{"x", x}, {"y", y}});
        break;
      }
    }
    return out;
  });
  return detail::make_report("easy-hard", s.name, std::move(scanned), evaluations,
                             s.easy.description + "  <=>  y " + s.order.name + " hard(x)", clock);
}

template <class In, class Out>
CheckReport check_easy_hard(const EasyHardSpec<In, Out>& s, const Universe& u, const CheckOptions& opts = {}) {
  require_budget("easy-hard check of " + s.name,
                 sat_mul(sat_mul(Carrier<In>::count(u), Carrier<Out>::count(u)), 2), opts);
  const auto inputs = Carrier<In>::all(u);
  const auto outputs = Carrier<Out>::all(u);
  return check_easy_hard(s, std::span<const In>(inputs), std::span<const Out>(outputs), opts);
}

/// Exhaustively checks f(y) <=_A x <=> y <=_B g(x), x outermost.
template <class A, class B>
CheckReport check_canonical_gc(const CanonicalGC<A, B>& c, const Universe& u, const CheckOptions& opts = {}) {
  Stopwatch clock;
  const auto evaluations = sat_mul(sat_mul(Carrier<A>::count(u), Carrier<B>::count(u)), 2);
  const auto d = detail::domains(c, u, evaluations, "gc", opts);
  std::vector<A> lowered;
  lowered.reserve(d.b.size());
  for (const auto& y : d.b) lowered.push_back(c.lower(y));
  auto scanned = scan(d.a.size(), opts.workers, [&](std::size_t i) {
    const A& x = d.a[i];
    const B gx = c.upper(x);
    CaseOutcome out;
    for (std::size_t j = 0; j < d.b.size(); ++j) {
      ++out.cases;
      if (c.order_a.leq(lowered[j], x) != c.order_b.leq(d.b[j], gx)) {
        out.witness = detail::with_parameter(c.parameter, {{"x", x}, {"y", d.b[j]}});
        break;
      }
    }
    return out;
  });
  return detail::make_report("gc", c.name, std::move(scanned), evaluations,
                             "f(y) " + c.order_a.name + " x  <=>  y " + c.order_b.name + " g(x)", clock);
}

/// left: f(g(x)) <=_A x for all x.  right: y <=_B g(f(y)) for all y.
template <class A, class B>
CheckReport check_cancellation(const CanonicalGC<A, B>& c, const Universe& u, Side side,
                               const CheckOptions& opts = {}) {
  Stopwatch clock;
  const bool left = side == Side::left;
  const std::string law = left ? "cancellation-left" : "cancellation-right";
  const auto evaluations = left ? Carrier<A>::count(u) : Carrier<B>::count(u);
  const auto d = detail::domains(c, u, evaluations, law, opts);
  ScanResult scanned;
  if (left) {
    scanned = scan(d.a.size(), opts.workers, [&](std::size_t i) {
      CaseOutcome out{1, {}};
      const A& x = d.a[i];
      if (!c.order_a.leq(c.lower(c.upper(x)), x)) out.witness = detail::with_parameter(c.parameter, {{"x", x}});
      return out;
    });
  } else {
    scanned = scan(d.b.size(), opts.workers, [&](std::size_t j) {
      CaseOutcome out{1, {}};
      const B& y = d.b[j];
      if (!c.order_b.leq(y, c.upper(c.lower(y)))) out.witness = detail::with_parameter(c.parameter, {{"y", y}});
      return out;
    });
  }
  return detail::make_report(law, c.name, std::move(scanned), evaluations,
                             left ? "f(g(x)) " + c.order_a.name + " x" : "y " + c.order_b.name + " g(f(y))",
                             clock);
}

/// g(f(g(x))) = g(x) for all x, then f(g(f(y))) = f(y) for all y.
template <class A, class B>
CheckReport check_semi_inverse(const CanonicalGC<A, B>& c, const Universe& u, const CheckOptions& opts = {}) {
  Stopwatch clock;
  const auto evaluations = sat_add(Carrier<A>::count(u), Carrier<B>::count(u));
  const auto d = detail::domains(c, u, evaluations, "semi-inverse", opts);
  auto upper_side = scan(d.a.size(), opts.workers, [&](std::size_t i) {
    CaseOutcome out{1, {}};
    const A& x = d.a[i];
    const B gx = c.upper(x);
    if (c.upper(c.lower(gx)) != gx) out.witness = detail::with_parameter(c.parameter, {{"x", x}});
    return out;
  });
  if (upper_side.witness) {
    return detail::make_report("semi-inverse", c.name, std::move(upper_side), evaluations, "g(f(g(x))) = g(x)",
                               clock);
  }
  auto lower_side = scan(d.b.size(), opts.workers, [&](std::size_t j) {
    CaseOutcome out{1, {}};
    const B& y = d.b[j];
    const A fy = c.lower(y);
    if (c.lower(c.upper(fy)) != fy) out.witness = detail::with_parameter(c.parameter, {{"y", y}});
    return out;
  });
  lower_side.cases += upper_side.cases;
  return detail::make_report("semi-inverse", c.name, std::move(lower_side), evaluations, "f(g(f(y))) = f(y)",
                             clock);
}

/// When f is injective on B, g(f(y)) = y for all y. A non-injective f gives
/// not-applicable with the first colliding pair (y1 earlier than y2).
template <class A, class B>
CheckReport check_injective_adjoint(const CanonicalGC<A, B>& c, const Universe& u, const CheckOptions& opts = {}) {
  Stopwatch clock;
  const auto evaluations = sat_mul(Carrier<B>::count(u), 2);
  const auto d = detail::domains(c, u, evaluations, "injective-adjoint", opts);
  std::map<A, std::size_t> seen;
  std::uint64_t cases = 0;
  for (std::size_t j = 0; j < d.b.size(); ++j) {
    ++cases;
    auto [it, fresh] = seen.emplace(c.lower(d.b[j]), j);
    if (!fresh) {
      CheckReport r;
      r.law = "injective-adjoint";
      r.subject = c.name;
      r.verdict = Verdict::not_applicable;
      r.cases_checked = cases;
      r.evaluations = evaluations;
      r.clause = "f(y1) = f(y2) with y1 != y2 (f not injective)";
      r.counterexample = detail::with_parameter(c.parameter, {{"y1", d.b[it->second]}, {"y2", d.b[j]}});
      r.elapsed = clock.elapsed();
      return r;
    }
  }
  auto scanned = scan(d.b.size(), opts.workers, [&](std::size_t j) {
    CaseOutcome out{1, {}};
    const B& y = d.b[j];
    if (c.upper(c.lower(y)) != y) out.witness = detail::with_parameter(c.parameter, {{"y", y}});
    return out;
  });
  scanned.cases += cases;
  return detail::make_report("injective-adjoint", c.name, std::move(scanned), evaluations, "g(f(y)) = y", clock);
}

/// Both adjoints are monotone: y1 <=_B y2 => f(y1) <=_A f(y2), x1 <=_A x2 => g(x1) <=_B g(x2).
template <class A, class B>
CheckReport check_monotone_adjoints(const CanonicalGC<A, B>& c, const Universe& u, const CheckOptions& opts = {}) {
  Stopwatch clock;
  const auto na = Carrier<A>::count(u);
  const auto nb = Carrier<B>::count(u);
  const auto evaluations = sat_mul(sat_add(sat_mul(na, na), sat_mul(nb, nb)), 2);
  const auto d = detail::domains(c, u, evaluations, "monotone", opts);
  std::vector<A> fs;
  for (const auto& y : d.b) fs.push_back(c.lower(y));
  std::vector<B> gs;
  for (const auto& x : d.a) gs.push_back(c.upper(x));

  auto lower_side = scan(d.b.size(), opts.workers, [&](std::size_t i) {
    CaseOutcome out;
    for (std::size_t j = 0; j < d.b.size(); ++j) {
      ++out.cases;
      if (c.order_b.leq(d.b[i], d.b[j]) && !c.order_a.leq(fs[i], fs[j])) {
        out.witness = detail::with_parameter(c.parameter, {{"y1", d.b[i]}, {"y2", d.b[j]}});
        break;
      }
    }
    return out;
  });
  if (lower_side.witness) {
    return detail::make_report("monotone", c.name, std::move(lower_side), evaluations,
                               "y1 <= y2 implies f(y1) <= f(y2)", clock);
  }
  auto upper_side = scan(d.a.size(), opts.workers, [&](std::size_t i) {
    CaseOutcome out;
    for (std::size_t j = 0; j < d.a.size(); ++j) {
      ++out.cases;
      if (c.order_a.leq(d.a[i], d.a[j]) && !c.order_b.leq(gs[i], gs[j])) {
        out.witness = detail::with_parameter(c.parameter, {{"x1", d.a[i]}, {"x2", d.a[j]}});
        break;
      }
    }
    return out;
  });
  upper_side.cases += lower_side.cases;
  return detail::make_report("monotone", c.name, std::move(upper_side), evaluations,
                             "x1 <= x2 implies g(x1) <= g(x2)", clock);
}

/// (for all z: z <= x <=> z <= y) implies x = y, over all pairs (x, y).
/// Lower sets are recorded as bitsets from one n^2 relation scan.
template <class T>
CheckReport check_indirect_equality(const OrderDef<T>& o, const Universe& u, const CheckOptions& opts = {}) {
  Stopwatch clock;
  const auto count = Carrier<T>::count(u);
  const auto evaluations = sat_mul(count, count);
  require_budget("indirect equality for " + o.name, evaluations, opts);
  const auto carrier = Carrier<T>::all(u);
  const std::size_t n = carrier.size();
  const std::size_t words = (n + 63) / 64;
  std::vector<std::uint64_t> below(n * words, 0);
  parallel_for(n, opts.workers, [&](std::size_t x) {
    for (std::size_t z = 0; z < n; ++z) {
      if (o.leq(carrier[z], carrier[x])) below[x * words + z / 64] |= std::uint64_t{1} << (z % 64);
    }
  });
  auto scanned = scan(n, opts.workers, [&](std::size_t x) {
    CaseOutcome out;
    for (std::size_t y = 0; y < n; ++y) {
      ++out.cases;
      const bool same_lower_set =
          std::equal(below.begin() + x * words, below.begin() + (x + 1) * words, below.begin() + y * words);
      if (same_lower_set && carrier[x] != carrier[y]) {
        out.witness = Witness{{"x", carrier[x]}, {"y", carrier[y]}};
        break;
      }
    }
    return out;
  });
  return detail::make_report("indirect-equality", o.name, std::move(scanned), evaluations,
                             "(for all z: z <= x <=> z <= y) implies x = y", clock);
}

/// h(h(x)) = h(x) for every sequence x.
CheckReport check_idempotent(const std::string& name, const std::function<Seq(const Seq&)>& h, const Universe& u,
                             const CheckOptions& opts = {}, const std::optional<Binding>& parameter = {});

/// fn(p, fn(q, xs)) = fn(p and q, xs) over all predicate pairs and sequences.
CheckReport check_fusion_law(const std::string& name, const std::function<Seq(Pred, const Seq&)>& fn,
                             const Universe& u, const CheckOptions& opts = {});

/// Fusion for takeWhile and for filter.
CheckReport check_fusion(const Universe& u, const CheckOptions& opts = {});

/// takeWhile p xs ++ dropWhile p xs = xs over all p and xs.
CheckReport check_split_append(const Universe& u, const CheckOptions& opts = {});

enum class NonGcPair { words_unwords, lines_unlines };

std::string_view to_string(NonGcPair p) noexcept;
std::optional<NonGcPair> parse_non_gc_pair(std::string_view name) noexcept;

/// Searches for evidence that the split/join pair is not a Galois connection,
/// with f = the join (unwords / unlines) and g = the split (words / lines).
///
/// The consequences are tried in a fixed order and the first violated one is
/// reported: f(g(f(y))) = f(y), then g(f(g(x))) = g(x), then f(g(x)) <= x
/// under the prefix order. A passing report means no witness exists in this
/// universe (the bounds have to grow).
CheckReport find_non_gc_counterexample(NonGcPair pair, const Universe& u, const CheckOptions& opts = {});

}  // namespace galois
