#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "galois/carrier.hpp"
#include "galois/engine.hpp"
#include "galois/report.hpp"

namespace galois {

/// A named binary relation claimed to be a partial order on carrier T.
template <class T>
struct OrderDef {
  std::string name;
  std::function<bool(const T&, const T&)> leq;
};

// The three inductive sequence orders. Each follows its defining clauses
// directly; the concatenation/selection characterizations are test oracles.

/// ys is a prefix of xs: ys = [] or heads agree and the tails are in prefix order.
bool is_prefix(const Seq& ys, const Seq& xs) noexcept;
/// ys is an order-preserving selection from xs: at each step drop the head of xs or keep it.
bool is_sublist(const Seq& ys, const Seq& xs) noexcept;
/// s is l or a suffix of the tail of l.
bool is_suffix(const Seq& s, const Seq& l) noexcept;
/// Componentwise: a.n <= b.n and a.seq prefix of b.seq.
bool product_leq(const NatSeq& a, const NatSeq& b) noexcept;
bool is_pair_prefix(const PairSeq& zs, const PairSeq& ws) noexcept;
/// Prefix order on both components of a pair of sequences.
bool prefix_pair_leq(const SeqPair& a, const SeqPair& b) noexcept;
/// Prefix order on lists of sequences, with sequence equality on elements.
bool is_seq_list_prefix(const SeqList& a, const SeqList& b) noexcept;

OrderDef<Seq> prefix_order();
OrderDef<Seq> sublist_order();
OrderDef<Seq> suffix_order();
OrderDef<NatSeq> product_order();
OrderDef<PairSeq> pair_prefix_order();
OrderDef<SeqPair> prefix_pair_order();
OrderDef<SeqList> seq_list_prefix_order();

template <class T>
struct OrderLawReport {
  std::string order;
  CheckReport reflexive;
  CheckReport transitive;
  CheckReport antisymmetric;
  std::optional<T> least_element;

  bool ok() const noexcept { return reflexive.passed() && transitive.passed() && antisymmetric.passed(); }
};

/// Checks reflexivity, transitivity and antisymmetry of `o` over every element
/// of `carrier` and reports the least element when there is exactly one.
///
/// The relation is evaluated once per ordered pair (n^2 calls); transitivity
/// then walks every chain x <= y <= z through the recorded up-sets, so the
/// cubic quantifier costs only the chains that actually exist. Both the n^2
/// scan and the chain count are charged against the budget.
template <class T>
OrderLawReport<T> check_order_laws(const OrderDef<T>& o, std::span<const T> carrier, const CheckOptions& opts) {
  Stopwatch clock;
  const std::size_t n = carrier.size();
  const std::uint64_t pairs = sat_mul(n, n);
  require_budget("order laws for " + o.name, pairs, opts);

  // up[x] = indices y with x <= y, ascending.
  std::vector<std::vector<std::uint32_t>> up(n);
  std::atomic<std::uint64_t> related{0};
  parallel_for(n, opts.workers, [&](std::size_t x) {
    auto& row = up[x];
    for (std::size_t y = 0; y < n; ++y) {
      if (o.leq(carrier[x], carrier[y])) row.push_back(static_cast<std::uint32_t>(y));
    }
    if (sat_add(pairs, related.fetch_add(row.size()) + row.size()) > opts.budget) {
      throw UniverseTooLarge("order laws for " + o.name + " (related pairs)", pairs + related.load(),
                             opts.budget);
    }
  });
  auto related_to = [&](std::size_t a, std::size_t b) {
    return std::binary_search(up[a].begin(), up[a].end(), static_cast<std::uint32_t>(b));
  };

  std::uint64_t chains = 0;
  for (std::size_t x = 0; x < n; ++x) {
    for (auto y : up[x]) chains = sat_add(chains, up[y].size());
  }
  require_budget("order laws for " + o.name, sat_add(pairs, chains), opts);

  OrderLawReport<T> report;
  report.order = o.name;
  auto init = [&](CheckReport& r, std::string law) {
    r.law = std::move(law);
    r.subject = o.name;
  };
  init(report.reflexive, "reflexivity");
  init(report.antisymmetric, "antisymmetry");
  init(report.transitive, "transitivity");

  for (std::size_t x = 0; x < n; ++x) {
    ++report.reflexive.cases_checked;
    if (!related_to(x, x)) {
      report.reflexive.verdict = Verdict::fail;
      report.reflexive.clause = "x <= x";
      report.reflexive.counterexample = Witness{{"x", carrier[x]}};
      break;
    }
  }
  report.reflexive.evaluations = n;

  report.antisymmetric.cases_checked = pairs;
  report.antisymmetric.evaluations = pairs;
  for (std::size_t x = 0; x < n && report.antisymmetric.passed(); ++x) {
    for (auto y : up[x]) {
      if (y != x && related_to(y, x)) {
        report.antisymmetric.verdict = Verdict::fail;
        report.antisymmetric.clause = "x <= y and y <= x implies x = y";
        report.antisymmetric.cases_checked = x * n + y + 1;
        report.antisymmetric.counterexample = Witness{{"x", carrier[x]}, {"y", carrier[y]}};
        break;
      }
    }
  }

  report.transitive.evaluations = chains;
  for (std::size_t x = 0; x < n && report.transitive.passed(); ++x) {
    for (auto y : up[x]) {
      for (auto z : up[y]) {
        ++report.transitive.cases_checked;
        if (!related_to(x, z)) {
          report.transitive.verdict = Verdict::fail;
          report.transitive.clause = "x <= y and y <= z implies x <= z";
          report.transitive.counterexample = Witness{{"x", carrier[x]}, {"y", carrier[y]}, {"z", carrier[z]}};
          break;
        }
      }
      if (!report.transitive.passed()) break;
    }
  }

  std::optional<std::size_t> least;
  for (std::size_t x = 0; x < n; ++x) {
    if (up[x].size() != n) continue;
    if (least) {
      least.reset();
      break;
    }
    least = x;
  }
  if (least) report.least_element = carrier[*least];

  const auto spent = clock.elapsed();
  report.reflexive.elapsed = report.antisymmetric.elapsed = report.transitive.elapsed = spent;
  return report;
}

template <class T>
OrderLawReport<T> check_order_laws(const OrderDef<T>& o, const Universe& u, const CheckOptions& opts = {}) {
  const auto n = Carrier<T>::count(u);
  require_budget("order laws for " + o.name, sat_mul(n, n), opts);
  const auto carrier = Carrier<T>::all(u);
  return check_order_laws(o, std::span<const T>(carrier), opts);
}

/// The order-law report as a single CheckReport (first failing law wins).
template <class T>
CheckReport summarize(const OrderLawReport<T>& r) {
  const CheckReport parts[] = {r.reflexive, r.transitive, r.antisymmetric};
  auto out = merge_reports("order-laws", r.order, parts);
  out.elapsed = r.reflexive.elapsed;
  return out;
}

}  // namespace galois
