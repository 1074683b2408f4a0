#include "doctest.h"

#include "galois/builtins.hpp"
#include "galois/combinators.hpp"
#include "galois/connections.hpp"
#include "reference.hpp"

using namespace galois;

namespace {

const Universe small{2, 3};

template <class GC>
void all_gc_laws_pass(const GC& c, const Universe& u) {
  CAPTURE(c.name);
  CHECK(check_canonical_gc(c, u).passed());
  CHECK(check_cancellation(c, u, Side::left).passed());
  CHECK(check_cancellation(c, u, Side::right).passed());
  CHECK(check_semi_inverse(c, u).passed());
  CHECK(check_monotone_adjoints(c, u).passed());
}

}  // namespace

TEST_CASE("spec families pass with the reference combinators") {
  CHECK(check_family(take_while_specs(small), small).passed());
  CHECK(check_family(take_specs(small), small).passed());
  CHECK(check_family(filter_specs(small), small).passed());
  CHECK(check_family(drop_while_specs(small), small).passed());
  CHECK(check_family(std::vector{zip_spec()}, Universe{2, 2}).passed());
}

TEST_CASE("takeWhile spec at (2, 4) checks 4 x 31 x 31 cases") {
  const auto r = check_family(take_while_specs({2, 4}), {2, 4});
  CHECK(r.passed());
  CHECK(r.cases_checked == 3844);
}

TEST_CASE("spec families also pass with the oracle as implementation") {
  const Universe u{2, 2};
  auto via_oracle = [&](Pred p, const Seq& xs) { return std::get<Seq>(oracle_filter(p, xs, u)); };
  CHECK(check_family(filter_specs(u, via_oracle), u).passed());
}

TEST_CASE("broken implementations are caught with the first witness") {
  // filter that forgets the last kept element
  auto lossy = [](Pred p, const Seq& xs) {
    auto out = filter_p(p, xs);
    if (!out.empty()) out.pop_back();
    return out;
  };
  const auto r = check_family(filter_specs(small, lossy), small);
  REQUIRE(r.verdict == Verdict::fail);
  const auto& w = *r.counterexample;
  // p = {0}: first x whose filter is non-empty is [0]; the first y failing is [0]
  CHECK(binding_as<Pred>(w, "p").members() == 1);
  CHECK(binding_as<Seq>(w, "x") == make_seq({0}));
  CHECK(binding_as<Seq>(w, "y") == make_seq({0}));

  // takeWhile implemented as filter
  const auto t = check_family(take_while_specs(small, filter_p), small);
  REQUIRE(t.verdict == Verdict::fail);
  CHECK(binding_as<Seq>(*t.counterexample, "x") == make_seq({1, 0}));
}

TEST_CASE("identity as hard part with p = {} fails at y = x = [0]") {
  const Universe u{1, 1};
  const EasyHardSpec<Seq, Seq> s{"takeWhile", Binding{"p", Pred()}, take_while_easy(Pred()), prefix_order(),
                                 [](const Seq& xs) { return xs; }};
  const auto r = check_easy_hard(s, u);
  REQUIRE(r.verdict == Verdict::fail);
  CHECK(binding_as<Seq>(*r.counterexample, "x") == make_seq({0}));
  CHECK(binding_as<Seq>(*r.counterexample, "y") == make_seq({0}));
}

TEST_CASE("canonical connections satisfy every consequence") {
  for (const auto& c : take_while_gcs(small)) all_gc_laws_pass(c, small);
  for (const auto& c : filter_gcs(small)) all_gc_laws_pass(c, small);
  for (const auto& c : drop_while_gcs(small)) all_gc_laws_pass(c, small);
  all_gc_laws_pass(take_gc(), small);
  all_gc_laws_pass(zip_gc(), Universe{2, 2});
  all_gc_laws_pass(identity_gc(), small);
}

TEST_CASE("injective lower adjoints give g . f = id") {
  for (const auto& c : take_while_gcs(small)) CHECK(check_injective_adjoint(c, small).passed());
  CHECK(check_injective_adjoint(take_gc(), small).passed());
  CHECK(check_injective_adjoint(zip_gc(), Universe{2, 2}).passed());
}

TEST_CASE("non-injective lower adjoint is not-applicable with the colliding pair") {
  // f = take 1 collapses [0] and [0,0]
  CanonicalGC<Seq, Seq> c = identity_gc();
  c.lower = [](const Seq& ys) { return take_n(1, ys); };
  const auto r = check_injective_adjoint(c, Universe{1, 2});
  CHECK(r.verdict == Verdict::not_applicable);
  CHECK(binding_as<Seq>(*r.counterexample, "y1") == make_seq({0}));
  CHECK(binding_as<Seq>(*r.counterexample, "y2") == make_seq({0, 0}));
}

TEST_CASE("a wrong upper adjoint breaks the connection") {
  CanonicalGC<Seq, Seq> c = take_while_gcs(small)[1];  // p = {0}
  c.upper = [](const Seq& xs) { return filter_p(Pred(1), xs); };
  const auto r = check_canonical_gc(c, small);
  REQUIRE(r.verdict == Verdict::fail);
  CHECK(r.counterexample->front().name == "p");
  CHECK(binding_as<Seq>(*r.counterexample, "x") == make_seq({1, 0}));
}

TEST_CASE("zip: unzip . zip is not the identity on unequal lengths") {
  const auto c = zip_gc();
  const SeqPair xy{make_seq({0, 1}), make_seq({1})};
  CHECK(c.lower(c.upper(xy)) != xy);
  CHECK(check_cancellation(c, Universe{2, 2}, Side::left).passed());
}

TEST_CASE("idempotency") {
  for (Pred p : enum_preds(small)) {
    CHECK(check_idempotent("takeWhile", [p](const Seq& x) { return take_while(p, x); }, small).passed());
    CHECK(check_idempotent("filter", [p](const Seq& x) { return filter_p(p, x); }, small).passed());
    CHECK(check_idempotent("dropWhile", [p](const Seq& x) { return drop_while(p, x); }, small).passed());
  }
  const auto r = check_idempotent("reverse", reverse_seq, small);
  REQUIRE(r.verdict == Verdict::fail);
  CHECK(binding_as<Seq>(*r.counterexample, "x") == make_seq({0, 1}));
}

TEST_CASE("fusion and split/append") {
  const auto f = check_fusion(small);
  CHECK(f.passed());
  CHECK(f.cases_checked == 2 * 16 * ref::seq_count(2, 3));
  CHECK(check_split_append(small).passed());

  // dropWhile does not fuse: dropWhile {0} . dropWhile {1} on [1,0,1] is [1], not [1,0,1]
  const auto d = check_fusion_law("dropWhile", drop_while, small);
  CHECK(d.verdict == Verdict::fail);
}

TEST_CASE("indirect equality holds for partial orders, fails for preorders") {
  CHECK(check_indirect_equality(prefix_order(), small).passed());
  CHECK(check_indirect_equality(sublist_order(), small).passed());
  CHECK(check_indirect_equality(product_order(), small).passed());
  const OrderDef<Seq> by_length{"length", [](const Seq& a, const Seq& b) { return a.size() <= b.size(); }};
  const auto r = check_indirect_equality(by_length, small);
  REQUIRE(r.verdict == Verdict::fail);
  CHECK(binding_as<Seq>(*r.counterexample, "x") == make_seq({0}));
  CHECK(binding_as<Seq>(*r.counterexample, "y") == make_seq({1}));
}

TEST_CASE("words/unwords: the trailing-separator collapse is found") {
  const auto r = find_non_gc_counterexample(NonGcPair::words_unwords, Universe{2, 6});
  REQUIRE(r.verdict == Verdict::fail);
  const auto& y = binding_as<SeqList>(*r.counterexample, "y");
  REQUIRE(y.size() == 1);
  REQUIRE_FALSE(y.front().empty());
  CHECK(y.front().back() == kSeparator);
  const auto fy = unwords_join(y);
  CHECK(unwords_join(words_split(fy)) != fy);

  // the "Hello   " shape itself
  const SeqList hello{make_seq({1, 0, 0, 0})};
  CHECK(unwords_join(words_split(unwords_join(hello))) == make_seq({1}));
  CHECK(unwords_join(hello) == make_seq({1, 0, 0, 0}));
}

TEST_CASE("lines/unlines: witness found, none at L = 0") {
  const auto r = find_non_gc_counterexample(NonGcPair::lines_unlines, Universe{2, 6});
  REQUIRE(r.verdict == Verdict::fail);
  const auto& x = binding_as<Seq>(*r.counterexample, "x");
  CHECK(x == make_seq({1}));
  CHECK_FALSE(is_prefix(unlines_join(lines_split(x)), x));
  CHECK(find_non_gc_counterexample(NonGcPair::lines_unlines, Universe{2, 0}).passed());
  CHECK(parse_non_gc_pair("lines-unlines") == NonGcPair::lines_unlines);
  CHECK(to_string(NonGcPair::words_unwords) == "words-unwords");
}

TEST_CASE("budget is enforced before any work") {
  CHECK_THROWS_AS(check_canonical_gc(zip_gc(), Universe{2, 5}, {1000, 1}), UniverseTooLarge);
  CHECK_THROWS_AS(check_fusion(Universe{2, 5}, {1000, 1}), UniverseTooLarge);
  CHECK_THROWS_AS(find_non_gc_counterexample(NonGcPair::words_unwords, Universe{2, 6}, {10, 1}), UniverseTooLarge);
}

TEST_CASE("reports do not depend on the worker count") {
  const Universe u{2, 4};
  auto lossy = [](Pred p, const Seq& xs) { return take_n(1, filter_p(p, xs)); };
  for (unsigned workers : {2u, 3u, 8u}) {
    const CheckOptions one{kDefaultBudget, 1}, many{kDefaultBudget, workers};
    const auto a = check_family(filter_specs(u, lossy), u, one);
    const auto b = check_family(filter_specs(u, lossy), u, many);
    CHECK(a.cases_checked == b.cases_checked);
    CHECK(a.counterexample == b.counterexample);
    const auto c = find_non_gc_counterexample(NonGcPair::words_unwords, u, one);
    const auto d = find_non_gc_counterexample(NonGcPair::words_unwords, u, many);
    CHECK(c.cases_checked == d.cases_checked);
    CHECK(c.counterexample == d.counterexample);
  }
}

TEST_CASE("dropWhile equivalence needs z restricted to lists whose head fails") {
  auto spec = drop_while_specs(small)[1];  // p = {0}
  CHECK(check_easy_hard(spec, small).passed());
  spec.domain = {};
  const auto r = check_easy_hard(spec, small);
  REQUIRE(r.verdict == Verdict::fail);
  CHECK(binding_as<Seq>(*r.counterexample, "x") == make_seq({1, 0}));
  CHECK(binding_as<Seq>(*r.counterexample, "y") == make_seq({0}));
}
