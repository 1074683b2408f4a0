#pragma once

#include <cstdint>

#include "galois/core.hpp"

namespace galois {

// Reference implementations of the sequence combinators under verification.

Seq take_while(Pred p, const Seq& xs);
/// First min(n, length xs) elements; n beyond the length is clamped.
Seq take_n(std::uint64_t n, const Seq& xs);
Seq filter_p(Pred p, const Seq& xs);
Seq drop_while(Pred p, const Seq& xs);
/// True on the empty sequence, otherwise whether the head fails p.
bool head_fails(Pred p, const Seq& xs) noexcept;

PairSeq zip_pair(const Seq& xs, const Seq& ys);
/// zip taking its two arguments as one pair.
PairSeq zip_uncurried(const SeqPair& xy);
SeqPair unzip_pair(const PairSeq& zs);
Seq map_fst(const PairSeq& zs);
Seq map_snd(const PairSeq& zs);

/// Splits on maximal separator runs and drops empty segments.
SeqList words_split(const Seq& s);
/// Joins with exactly one separator between consecutive segments.
Seq unwords_join(const SeqList& ws);
/// Cuts at every separator; a final separator does not open an empty segment.
SeqList lines_split(const Seq& s);
/// Appends one separator after every segment.
Seq unlines_join(const SeqList& ws);

Seq reverse_seq(const Seq& xs);

}  // namespace galois
