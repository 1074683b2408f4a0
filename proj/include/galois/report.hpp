#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"

#include "galois/core.hpp"

namespace galois {

/// Any value a law can quantify over; witnesses are lists of these.
using Value = std::variant<std::uint64_t, Pred, Seq, PairSeq, NatSeq, SeqPair, SeqList>;

struct Binding {
  std::string name;
  Value value;

  friend bool operator==(const Binding&, const Binding&) = default;
};

/// Bound variables of a violated law instance, outermost quantifier first.
using Witness = std::vector<Binding>;

enum class Verdict { pass, fail, not_applicable };

std::string_view to_string(Verdict v) noexcept;

/// Outcome of one exhaustive check.
///
/// A failing report always carries the counterexample that comes first in
/// enumeration order (outermost quantifier first), independent of how many
/// workers took part. `clause` names the violated equation or implication.
struct CheckReport {
  std::string law;
  std::string subject;
  Verdict verdict = Verdict::pass;
  std::uint64_t cases_checked = 0;
  /// Projected relation/function evaluations charged against the budget.
  std::uint64_t evaluations = 0;
  std::optional<Witness> counterexample;
  std::string clause;
  std::chrono::nanoseconds elapsed{0};

  bool passed() const noexcept { return verdict == Verdict::pass; }
};

/// Folds the reports of a family (e.g. one per predicate) into one: cases
/// add up and the first non-passing member decides the verdict.
CheckReport merge_reports(std::string law, std::string subject, std::span<const CheckReport> parts);

// Element encoding shared by the CLI (--input, --pred) and JSON reports.
std::string format_csv(const Seq& xs);
Seq parse_csv(std::string_view text);  // throws std::invalid_argument
std::string format_pred(Pred p, unsigned alphabet_size);
Pred parse_pred(std::string_view text);  // 0b..., 0x... or decimal

std::string_view value_type(const Value& v) noexcept;
/// Human readable form, e.g. [1,0] or [(0,1),(1,1)].
std::string render_value(const Value& v, unsigned alphabet_size);
nlohmann::ordered_json value_to_json(const Value& v, unsigned alphabet_size);
/// Inverse of value_to_json; throws std::invalid_argument on malformed input.
Value value_from_json(std::string_view type, const nlohmann::ordered_json& j);

nlohmann::ordered_json witness_to_json(const Witness& w, unsigned alphabet_size);
Witness witness_from_json(const nlohmann::ordered_json& j);

/// Looks up a binding by name; throws std::out_of_range if absent.
const Value& binding(const Witness& w, std::string_view name);

template <class T>
const T& binding_as(const Witness& w, std::string_view name) {
  return std::get<T>(binding(w, name));
}

}  // namespace galois
