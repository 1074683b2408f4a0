#include "galois/oracle.hpp"

#include <stdexcept>

#include "galois/combinators.hpp"

namespace galois {

namespace {

void require_member(const Universe& u, const Seq& xs) {
  u.validate();
  if (!u.contains(xs)) {
    throw std::invalid_argument("input " + render_value(xs, u.alphabet_size) +
                                " is not a member of the universe (k=" + std::to_string(u.alphabet_size) +
                                ", L=" + std::to_string(u.max_len) + ")");
  }
}

template <class T>
OracleResult<Value> widen(OracleResult<T> r) {
  if (auto* v = std::get_if<T>(&r)) return Value(std::move(*v));
  auto& err = std::get<OracleError<T>>(r);
  OracleError<Value> out{err.kind, {}};
  for (auto& m : err.maxima) out.maxima.emplace_back(std::move(m));
  return out;
}

OracleResult<Seq> seq_oracle(const OrderDef<Seq>& o, const EasyCondition<Seq, Seq>& easy, const Seq& xs,
                             const Universe& u) {
  require_member(u, xs);
  return best_under(o, easy, xs, u);
}

}  // namespace

std::string_view to_string(OracleErrorKind k) noexcept {
  return k == OracleErrorKind::no_greatest ? "no-greatest" : "empty-candidates";
}

EasyCondition<Seq, Seq> take_while_easy(Pred p) {
  return {"ys prefix of xs and all p ys",
          [p](const Seq& ys, const Seq& xs) { return is_prefix(ys, xs) && all_satisfy(p, ys); }};
}

EasyCondition<Seq, Seq> take_easy(std::uint64_t n) {
  return {"length ys <= n and ys prefix of xs",
          [n](const Seq& ys, const Seq& xs) { return ys.size() <= n && is_prefix(ys, xs); }};
}

EasyCondition<Seq, Seq> filter_easy(Pred p) {
  return {"ys sublist of xs and all p ys",
          [p](const Seq& ys, const Seq& xs) { return is_sublist(ys, xs) && all_satisfy(p, ys); }};
}

EasyCondition<Seq, Seq> drop_while_easy(Pred p) {
  return {"headFails p z and z suffix of l",
          [p](const Seq& z, const Seq& l) { return head_fails(p, z) && is_suffix(z, l); }};
}

EasyCondition<PairSeq, SeqPair> zip_easy() {
  return {"map fst zs prefix of xs and map snd zs prefix of ys", [](const PairSeq& zs, const SeqPair& xy) {
            const auto [fst, snd] = unzip_pair(zs);
            return is_prefix(fst, xy.first) && is_prefix(snd, xy.second);
          }};
}

std::string_view to_string(SpecName s) noexcept {
  switch (s) {
    case SpecName::take_while: return "takeWhile";
    case SpecName::take: return "take";
    case SpecName::filter: return "filter";
    case SpecName::drop_while: return "dropWhile";
    case SpecName::zip: return "zip";
  }
  return "?";
}

std::optional<SpecName> parse_spec_name(std::string_view name) noexcept {
  for (auto s : kAllSpecs) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

OracleResult<Seq> oracle_take_while(Pred p, const Seq& xs, const Universe& u) {
  return seq_oracle(prefix_order(), take_while_easy(p), xs, u);
}

OracleResult<Seq> oracle_take(std::uint64_t n, const Seq& xs, const Universe& u) {
  return seq_oracle(prefix_order(), take_easy(n), xs, u);
}

OracleResult<Seq> oracle_filter(Pred p, const Seq& xs, const Universe& u) {
  return seq_oracle(sublist_order(), filter_easy(p), xs, u);
}

OracleResult<Seq> oracle_drop_while(Pred p, const Seq& xs, const Universe& u) {
  return seq_oracle(suffix_order(), drop_while_easy(p), xs, u);
}

OracleResult<PairSeq> oracle_zip(const Seq& xs, const Seq& ys, const Universe& u) {
  require_member(u, xs);
  require_member(u, ys);
  const auto bound = static_cast<unsigned>(std::min(xs.size(), ys.size()));
  const auto candidates = Carrier<PairSeq>::up_to(u, bound);
  const SeqPair input{xs, ys};
  const auto easy = zip_easy();
  return greatest_satisfying(pair_prefix_order(), std::span<const PairSeq>(candidates),
                             [&](const PairSeq& zs) { return easy.holds(zs, input); });
}

OracleResult<Value> oracle_spec(SpecName name, const OracleQuery& q, const Universe& u) {
  switch (name) {
    case SpecName::take_while: return widen(oracle_take_while(q.pred, q.input, u));
    case SpecName::take: return widen(oracle_take(q.n, q.input, u));
    case SpecName::filter: return widen(oracle_filter(q.pred, q.input, u));
    case SpecName::drop_while: return widen(oracle_drop_while(q.pred, q.input, u));
    case SpecName::zip: return widen(oracle_zip(q.input, q.second, u));
  }
  throw std::invalid_argument("unknown spec");
}

}  // namespace galois
