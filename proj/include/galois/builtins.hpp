#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "galois/combinators.hpp"
#include "galois/connections.hpp"

namespace galois {

using PredFn = std::function<Seq(Pred, const Seq&)>;
using BoundFn = std::function<Seq(std::uint64_t, const Seq&)>;
using ZipFn = std::function<PairSeq(const Seq&, const Seq&)>;

// Easy-hard specification families, one member per predicate / bound. The
// implementation under test defaults to the reference combinator; tests swap
// in the oracle or a deliberately broken version.

std::vector<EasyHardSpec<Seq, Seq>> take_while_specs(const Universe& u, PredFn impl = take_while);
/// One member per bound n in [0, L+1].
std::vector<EasyHardSpec<Seq, Seq>> take_specs(const Universe& u, BoundFn impl = take_n);
std::vector<EasyHardSpec<Seq, Seq>> filter_specs(const Universe& u, PredFn impl = filter_p);
/// z ranges over the lists whose head fails p; any suffix of dropWhile p l
/// is below it, but only those are related to l by the easy side.
std::vector<EasyHardSpec<Seq, Seq>> drop_while_specs(const Universe& u, PredFn impl = drop_while);
EasyHardSpec<SeqPair, PairSeq> zip_spec(ZipFn impl = zip_pair);

/// Runs a whole family; stops at the first failing member.
template <class In, class Out>
CheckReport check_family(const std::vector<EasyHardSpec<In, Out>>& family, const Universe& u,
                         const CheckOptions& opts = {}) {
  require_budget("easy-hard family",
                 sat_mul(sat_mul(sat_mul(Carrier<In>::count(u), Carrier<Out>::count(u)), 2), family.size()),
                 opts);
  const auto inputs = Carrier<In>::all(u);
  const auto outputs = Carrier<Out>::all(u);
  std::vector<CheckReport> parts;
  for (const auto& member : family) {
    parts.push_back(check_easy_hard(member, std::span<const In>(inputs), std::span<const Out>(outputs),
                                    remaining(opts, 0)));
    if (!parts.back().passed()) break;
  }
  return merge_reports("easy-hard", family.empty() ? "" : family.front().name, parts);
}

// Canonical (two-function) connections.

/// f = inclusion of {ys : all p ys}, g = takeWhile p, prefix order on both sides.
std::vector<CanonicalGC<Seq, Seq>> take_while_gcs(const Universe& u);
/// f = inclusion of {ys : all p ys}, g = filter p, sublist order on both sides.
std::vector<CanonicalGC<Seq, Seq>> filter_gcs(const Universe& u);
/// f = inclusion of {z : headFails p z}, g = dropWhile p, suffix order on both sides.
std::vector<CanonicalGC<Seq, Seq>> drop_while_gcs(const Universe& u);
/// f ys = (length ys, ys), g (n, xs) = take n xs; product order on A, prefix on B.
CanonicalGC<NatSeq, Seq> take_gc();
/// f = unzip, g = uncurried zip; prefix x prefix on A, pair-prefix on B.
CanonicalGC<SeqPair, PairSeq> zip_gc();
/// f = g = identity under the prefix order.
CanonicalGC<Seq, Seq> identity_gc();

/// Claimed connections that are not: f = unwords / unlines, g = words / lines.
CanonicalGC<Seq, SeqList> words_unwords_gc();
CanonicalGC<Seq, SeqList> lines_unlines_gc();

}  // namespace galois
