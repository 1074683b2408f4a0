#include "doctest.h"

#include "galois/combinators.hpp"
#include "galois/oracle.hpp"

using namespace galois;

namespace {

const Universe u6{6, 3};
const Pred even = Pred::of({0, 2, 4});
const Pred odd = Pred::of({1, 3, 5});
const Seq s245 = make_seq({2, 4, 5});

template <class T>
const T& value(const OracleResult<T>& r) {
  REQUIRE_FALSE(is_error(r));
  return std::get<T>(r);
}

}  // namespace

TEST_CASE("oracle examples over a six-symbol alphabet") {
  CHECK(value(oracle_take_while(even, s245, u6)) == make_seq({2, 4}));
  CHECK(value(oracle_take(2, s245, u6)) == make_seq({2, 4}));
  CHECK(value(oracle_take(9, s245, u6)) == s245);
  CHECK(value(oracle_filter(even, s245, u6)) == make_seq({2, 4}));
  CHECK(value(oracle_filter(odd, s245, u6)) == make_seq({5}));
  CHECK(value(oracle_drop_while(even, s245, u6)) == make_seq({5}));
  CHECK(value(oracle_zip(make_seq({1, 2, 3}), make_seq({4, 5}), u6)) ==
        PairSeq{{elem(1), elem(4)}, {elem(2), elem(5)}});
}

TEST_CASE("filter oracle on [1,0,1] with p = {0}") {
  CHECK(value(oracle_filter(Pred(0b01), make_seq({1, 0, 1}), Universe{2, 5})) == make_seq({0}));
}

TEST_CASE("oracle rejects inputs outside the universe") {
  CHECK_THROWS_AS(oracle_filter(even, make_seq({7}), u6), std::invalid_argument);
  CHECK_THROWS_AS(oracle_take(1, make_seq({1, 1, 1, 1}), u6), std::invalid_argument);
}

TEST_CASE("incomparable maxima give no-greatest with the maxima listed") {
  // sublists of [0,1] of length <= 1: [0] and [1] are incomparable
  const EasyCondition<Seq, Seq> short_sublist{"", [](const Seq& ys, const Seq& xs) {
                                                return ys.size() <= 1 && is_sublist(ys, xs);
                                              }};
  const auto r = best_under(sublist_order(), short_sublist, make_seq({0, 1}), Universe{2, 2});
  REQUIRE(is_error(r));
  const auto& err = std::get<OracleError<Seq>>(r);
  CHECK(err.kind == OracleErrorKind::no_greatest);
  CHECK(err.maxima == std::vector<Seq>{make_seq({0}), make_seq({1})});
  CHECK(to_string(err.kind) == "no-greatest");
}

TEST_CASE("a preorder tie is reported, not broken") {
  const OrderDef<Seq> by_length{"length", [](const Seq& a, const Seq& b) { return a.size() <= b.size(); }};
  const auto all = enum_seqs({2, 1});
  const auto r = greatest_satisfying(by_length, std::span<const Seq>(all), [](const Seq&) { return true; });
  REQUIRE(is_error(r));
  CHECK(std::get<OracleError<Seq>>(r).maxima.size() == 2);
}

TEST_CASE("an empty easy set gives empty-candidates") {
  const EasyCondition<Seq, Seq> never{"", [](const Seq&, const Seq&) { return false; }};
  const auto r = best_under(prefix_order(), never, make_seq({1}), Universe{2, 2});
  REQUIRE(is_error(r));
  CHECK(std::get<OracleError<Seq>>(r).kind == OracleErrorKind::empty_candidates);
}

TEST_CASE("oracle equals the combinators exhaustively at (2, 4)") {
  const Universe u{2, 4};
  for (const auto& xs : enum_seqs(u)) {
    for (Pred p : enum_preds(u)) {
      REQUIRE(value(oracle_take_while(p, xs, u)) == take_while(p, xs));
      REQUIRE(value(oracle_filter(p, xs, u)) == filter_p(p, xs));
      REQUIRE(value(oracle_drop_while(p, xs, u)) == drop_while(p, xs));
    }
    for (std::uint64_t n = 0; n <= 5; ++n) REQUIRE(value(oracle_take(n, xs, u)) == take_n(n, xs));
    for (const auto& ys : enum_seqs(u)) REQUIRE(value(oracle_zip(xs, ys, u)) == zip_pair(xs, ys));
  }
}

TEST_CASE("spec names and dispatch") {
  CHECK(parse_spec_name("dropWhile") == SpecName::drop_while);
  CHECK_FALSE(parse_spec_name("drop_while").has_value());
  OracleQuery q;
  q.pred = even;
  q.input = s245;
  const auto r = oracle_spec(SpecName::take_while, q, u6);
  REQUIRE_FALSE(is_error(r));
  CHECK(std::get<Seq>(std::get<Value>(r)) == make_seq({2, 4}));
}
