#include "galois/builtins.hpp"

namespace galois {

namespace {

std::vector<EasyHardSpec<Seq, Seq>> pred_family(const Universe& u, const std::string& name,
                                                const OrderDef<Seq>& order,
                                                EasyCondition<Seq, Seq> (*easy)(Pred), const PredFn& impl) {
  std::vector<EasyHardSpec<Seq, Seq>> out;
  for (Pred p : enum_preds(u)) {
    out.push_back({name, Binding{"p", p}, easy(p), order, [impl, p](const Seq& xs) { return impl(p, xs); }});
  }
  return out;
}

std::vector<CanonicalGC<Seq, Seq>> inclusion_family(const Universe& u, const std::string& name,
                                                   const OrderDef<Seq>& order, Seq (*hard)(Pred, const Seq&),
                                                   bool (*admissible)(Pred, const Seq&)) {
  std::vector<CanonicalGC<Seq, Seq>> out;
  for (Pred p : enum_preds(u)) {
    out.push_back({name,
                   Binding{"p", p},
                   [](const Seq& ys) { return ys; },
                   [hard, p](const Seq& xs) { return hard(p, xs); },
                   order,
                   order,
                   [admissible, p](const Seq& ys) { return admissible(p, ys); }});
  }
  return out;
}

bool all_p(Pred p, const Seq& ys) { return all_satisfy(p, ys); }

}  // namespace

std::vector<EasyHardSpec<Seq, Seq>> take_while_specs(const Universe& u, PredFn impl) {
  return pred_family(u, "takeWhile", prefix_order(), take_while_easy, impl);
}

std::vector<EasyHardSpec<Seq, Seq>> take_specs(const Universe& u, BoundFn impl) {
  std::vector<EasyHardSpec<Seq, Seq>> out;
  for (std::uint64_t n = 0; n <= std::uint64_t{u.max_len} + 1; ++n) {
    out.push_back({"take", Binding{"n", n}, take_easy(n), prefix_order(),
                   [impl, n](const Seq& xs) { return impl(n, xs); }});
  }
  return out;
}

std::vector<EasyHardSpec<Seq, Seq>> filter_specs(const Universe& u, PredFn impl) {
  return pred_family(u, "filter", sublist_order(), filter_easy, impl);
}

std::vector<EasyHardSpec<Seq, Seq>> drop_while_specs(const Universe& u, PredFn impl) {
  auto family = pred_family(u, "dropWhile", suffix_order(), drop_while_easy, impl);
  for (auto& member : family) {
    const Pred p = std::get<Pred>(member.parameter->value);
    member.domain = [p](const Seq& z) { return head_fails(p, z); };
  }
  return family;
}

EasyHardSpec<SeqPair, PairSeq> zip_spec(ZipFn impl) {
  return {"zip", std::nullopt, zip_easy(), pair_prefix_order(),
          [impl](const SeqPair& xy) { return impl(xy.first, xy.second); }};
}

std::vector<CanonicalGC<Seq, Seq>> take_while_gcs(const Universe& u) {
  return inclusion_family(u, "takeWhile", prefix_order(), take_while, all_p);
}

std::vector<CanonicalGC<Seq, Seq>> filter_gcs(const Universe& u) {
  return inclusion_family(u, "filter", sublist_order(), filter_p, all_p);
}

std::vector<CanonicalGC<Seq, Seq>> drop_while_gcs(const Universe& u) {
  return inclusion_family(u, "dropWhile", suffix_order(), drop_while, head_fails);
}

CanonicalGC<NatSeq, Seq> take_gc() {
  return {"take",
          std::nullopt,
          [](const Seq& ys) { return NatSeq{ys.size(), ys}; },
          [](const NatSeq& a) { return take_n(a.n, a.seq); },
          product_order(),
          prefix_order(),
          {}};
}

CanonicalGC<SeqPair, PairSeq> zip_gc() {
  return {"zip", std::nullopt, unzip_pair, zip_uncurried, prefix_pair_order(), pair_prefix_order(), {}};
}

CanonicalGC<Seq, Seq> identity_gc() {
  auto id = [](const Seq& xs) { return xs; };
  return {"identity", std::nullopt, id, id, prefix_order(), prefix_order(), {}};
}

CanonicalGC<Seq, SeqList> words_unwords_gc() {
  return {"words-unwords", std::nullopt, unwords_join, words_split, prefix_order(), seq_list_prefix_order(), {}};
}

CanonicalGC<Seq, SeqList> lines_unlines_gc() {
  return {"lines-unlines", std::nullopt, unlines_join, lines_split, prefix_order(), seq_list_prefix_order(), {}};
}

}  // namespace galois
