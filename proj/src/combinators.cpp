#include "galois/combinators.hpp"

#include <algorithm>

namespace galois {

Seq take_while(Pred p, const Seq& xs) {
  Seq out;
  for (Elem x : xs) {
    if (!p(x)) break;
    out.push_back(x);
  }
  return out;
}

Seq take_n(std::uint64_t n, const Seq& xs) {
  const auto len = static_cast<std::size_t>(std::min<std::uint64_t>(n, xs.size()));
  return Seq(xs.begin(), xs.begin() + static_cast<std::ptrdiff_t>(len));
}

Seq filter_p(Pred p, const Seq& xs) {
  Seq out;
  std::copy_if(xs.begin(), xs.end(), std::back_inserter(out), p);
  return out;
}

Seq drop_while(Pred p, const Seq& xs) {
  auto it = std::find_if_not(xs.begin(), xs.end(), p);
  return Seq(it, xs.end());
}

bool head_fails(Pred p, const Seq& xs) noexcept { return xs.empty() || !p(xs.front()); }

PairSeq zip_pair(const Seq& xs, const Seq& ys) {
  PairSeq out;
  const std::size_t n = std::min(xs.size(), ys.size());
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(xs[i], ys[i]);
  return out;
}

PairSeq zip_uncurried(const SeqPair& xy) { return zip_pair(xy.first, xy.second); }

Seq map_fst(const PairSeq& zs) {
  Seq out;
  out.reserve(zs.size());
  for (const auto& z : zs) out.push_back(z.first);
  return out;
}

Seq map_snd(const PairSeq& zs) {
  Seq out;
  out.reserve(zs.size());
  for (const auto& z : zs) out.push_back(z.second);
  return out;
}

SeqPair unzip_pair(const PairSeq& zs) { return {map_fst(zs), map_snd(zs)}; }

SeqList words_split(const Seq& s) {
  SeqList out;
  Seq word;
  for (Elem e : s) {
    if (e != kSeparator) {
      word.push_back(e);
    } else if (!word.empty()) {
      out.push_back(std::move(word));
      word.clear();
    }
  }
  if (!word.empty()) out.push_back(std::move(word));
  return out;
}

Seq unwords_join(const SeqList& ws) {
  Seq out;
  for (std::size_t i = 0; i < ws.size(); ++i) {
    if (i != 0) out.push_back(kSeparator);
    out.insert(out.end(), ws[i].begin(), ws[i].end());
  }
  return out;
}

SeqList lines_split(const Seq& s) {
  SeqList out;
  Seq line;
  for (Elem e : s) {
    if (e == kSeparator) {
      out.push_back(std::move(line));
      line.clear();
    } else {
      line.push_back(e);
    }
  }
  if (!line.empty()) out.push_back(std::move(line));
  return out;
}

Seq unlines_join(const SeqList& ws) {
  Seq out;
  for (const auto& w : ws) {
    out.insert(out.end(), w.begin(), w.end());
    out.push_back(kSeparator);
  }
  return out;
}

Seq reverse_seq(const Seq& xs) { return Seq(xs.rbegin(), xs.rend()); }

}  // namespace galois
