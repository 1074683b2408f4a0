#include "galois/orders.hpp"

namespace galois {

namespace {

template <class T>
bool prefix_of(std::span<const T> ys, std::span<const T> xs) {
  if (ys.empty()) return true;
  if (xs.empty()) return false;
  return ys.front() == xs.front() && prefix_of(ys.subspan(1), xs.subspan(1));
}

bool sublist_of(std::span<const Elem> ys, std::span<const Elem> xs) {
  if (ys.empty()) return true;
  if (xs.empty()) return false;
  return (ys.front() == xs.front() && sublist_of(ys.subspan(1), xs.subspan(1))) ||
         sublist_of(ys, xs.subspan(1));
}

bool suffix_of(std::span<const Elem> s, std::span<const Elem> l) {
  if (l.empty()) return s.empty();
  return std::equal(s.begin(), s.end(), l.begin(), l.end()) || suffix_of(s, l.subspan(1));
}

}  // namespace

bool is_prefix(const Seq& ys, const Seq& xs) noexcept {
  return prefix_of<Elem>(ys, xs);
}

bool is_sublist(const Seq& ys, const Seq& xs) noexcept { return sublist_of(ys, xs); }

bool is_suffix(const Seq& s, const Seq& l) noexcept { return suffix_of(s, l); }

bool product_leq(const NatSeq& a, const NatSeq& b) noexcept {
  return a.n <= b.n && is_prefix(a.seq, b.seq);
}

bool is_pair_prefix(const PairSeq& zs, const PairSeq& ws) noexcept {
  return prefix_of<std::pair<Elem, Elem>>(zs, ws);
}

bool prefix_pair_leq(const SeqPair& a, const SeqPair& b) noexcept {
  return is_prefix(a.first, b.first) && is_prefix(a.second, b.second);
}

bool is_seq_list_prefix(const SeqList& a, const SeqList& b) noexcept {
  return prefix_of<Seq>(a, b);
}

OrderDef<Seq> prefix_order() { return {"prefix", is_prefix}; }
OrderDef<Seq> sublist_order() { return {"sublist", is_sublist}; }
OrderDef<Seq> suffix_order() { return {"suffix", is_suffix}; }
OrderDef<NatSeq> product_order() { return {"product", product_leq}; }
OrderDef<PairSeq> pair_prefix_order() { return {"pair-prefix", is_pair_prefix}; }
OrderDef<SeqPair> prefix_pair_order() { return {"prefix-x-prefix", prefix_pair_leq}; }
OrderDef<SeqList> seq_list_prefix_order() { return {"seq-list-prefix", is_seq_list_prefix}; }

}  // namespace galois
