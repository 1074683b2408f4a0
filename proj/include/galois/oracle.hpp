#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "galois/carrier.hpp"
#include "galois/orders.hpp"
#include "galois/report.hpp"

namespace galois {

/// The easy side of a specification: a decidable relation between a
/// candidate answer and the input.
template <class Out, class In>
struct EasyCondition {
  std::string description;
  std::function<bool(const Out&, const In&)> holds;
};

enum class OracleErrorKind { no_greatest, empty_candidates };

std::string_view to_string(OracleErrorKind k) noexcept;

/// Raised (as a value) when the easy set has no greatest element.
/// no_greatest carries the maximal candidates that tie.
template <class T>
struct OracleError {
  OracleErrorKind kind = OracleErrorKind::empty_candidates;
  std::vector<T> maxima;
};

template <class T>
using OracleResult = std::variant<T, OracleError<T>>;

template <class T>
bool is_error(const OracleResult<T>& r) noexcept {
  return std::holds_alternative<OracleError<T>>(r);
}

/// Every carrier element y with o.leq(y, x), in enumeration order.
template <class T>
std::vector<T> candidates_below(const OrderDef<T>& o, const T& x, std::span<const T> carrier) {
  std::vector<T> out;
  for (const auto& y : carrier) {
    if (o.leq(y, x)) out.push_back(y);
  }
  return out;
}

template <class T>
std::vector<T> candidates_below(const OrderDef<T>& o, const T& x, const Universe& u) {
  const auto carrier = Carrier<T>::all(u);
  return candidates_below(o, x, std::span<const T>(carrier));
}

/// The greatest element of { c in candidates : keep(c) } under `o`.
///
/// Ties are never broken: when several candidates are each above every other
/// member, or when there are several maximal members, the result is
/// no_greatest with those members listed.
template <class T, class Keep>
OracleResult<T> greatest_satisfying(const OrderDef<T>& o, std::span<const T> candidates, Keep&& keep) {
  std::vector<const T*> kept;
  for (const auto& c : candidates) {
    if (keep(c)) kept.push_back(&c);
  }
  if (kept.empty()) return OracleError<T>{OracleErrorKind::empty_candidates, {}};

  std::vector<const T*> greatest;
  for (const T* m : kept) {
    bool above_all = true;
    for (const T* y : kept) {
      if (!o.leq(*y, *m)) {
        above_all = false;
        break;
      }
    }
    if (above_all) greatest.push_back(m);
  }
  if (greatest.size() == 1) return *greatest.front();

  OracleError<T> err{OracleErrorKind::no_greatest, {}};
  if (!greatest.empty()) {
    for (const T* g : greatest) err.maxima.push_back(*g);
    return err;
  }
  // maximal: nothing strictly above
  for (const T* m : kept) {
    bool maximal = true;
    for (const T* y : kept) {
      if (o.leq(*m, *y) && !o.leq(*y, *m)) {
        maximal = false;
        break;
      }
    }
    if (maximal) err.maxima.push_back(*m);
  }
  return err;
}

/// Brute-force hard part: the greatest y <= x (under o) satisfying easy(y, x).
template <class T>
OracleResult<T> best_under(const OrderDef<T>& o, const EasyCondition<T, T>& easy, const T& x,
                           std::span<const T> carrier) {
  const auto below = candidates_below(o, x, carrier);
  return greatest_satisfying(o, std::span<const T>(below), [&](const T& y) { return easy.holds(y, x); });
}

template <class T>
OracleResult<T> best_under(const OrderDef<T>& o, const EasyCondition<T, T>& easy, const T& x, const Universe& u) {
  const auto carrier = Carrier<T>::all(u);
  return best_under(o, easy, x, std::span<const T>(carrier));
}

// Easy sides of the five specifications. Each includes the order part, so
// easy(y, x) is exactly the left-hand side of "easy(y, x) <=> y <= hard(x)".
EasyCondition<Seq, Seq> take_while_easy(Pred p);
EasyCondition<Seq, Seq> take_easy(std::uint64_t n);
EasyCondition<Seq, Seq> filter_easy(Pred p);
EasyCondition<Seq, Seq> drop_while_easy(Pred p);
EasyCondition<PairSeq, SeqPair> zip_easy();

enum class SpecName { take_while, take, filter, drop_while, zip };

inline constexpr SpecName kAllSpecs[] = {SpecName::take_while, SpecName::take, SpecName::filter,
                                         SpecName::drop_while, SpecName::zip};

std::string_view to_string(SpecName s) noexcept;
std::optional<SpecName> parse_spec_name(std::string_view name) noexcept;

// Oracles for the individual specifications. Inputs must be universe members
// (std::invalid_argument otherwise).
OracleResult<Seq> oracle_take_while(Pred p, const Seq& xs, const Universe& u);
OracleResult<Seq> oracle_take(std::uint64_t n, const Seq& xs, const Universe& u);
OracleResult<Seq> oracle_filter(Pred p, const Seq& xs, const Universe& u);
OracleResult<Seq> oracle_drop_while(Pred p, const Seq& xs, const Universe& u);
/// Candidates are the pair sequences no longer than min(|xs|, |ys|).
OracleResult<PairSeq> oracle_zip(const Seq& xs, const Seq& ys, const Universe& u);

struct OracleQuery {
  Pred pred;
  std::uint64_t n = 0;
  Seq input;
  Seq second;  // zip only
};

/// Dispatch by spec name; the answer is a Seq or (for zip) a PairSeq.
OracleResult<Value> oracle_spec(SpecName name, const OracleQuery& q, const Universe& u);

}  // namespace galois
