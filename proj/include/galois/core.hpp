#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

namespace galois {

/// A symbol of the finite alphabet. Symbols are abstract indices, not characters.
enum class Elem : std::uint8_t {};

constexpr Elem elem(unsigned id) noexcept { return static_cast<Elem>(id); }
constexpr unsigned index_of(Elem e) noexcept { return static_cast<unsigned>(e); }

/// Element 0 acts as the separator ("space" / "newline") for words and lines.
inline constexpr Elem kSeparator = elem(0);

using Seq = std::vector<Elem>;
using PairSeq = std::vector<std::pair<Elem, Elem>>;
using SeqPair = std::pair<Seq, Seq>;
using SeqList = std::vector<Seq>;

/// Carrier of the product order: a length bound paired with a sequence.
struct NatSeq {
  std::uint64_t n = 0;
  Seq seq;

  friend auto operator<=>(const NatSeq&, const NatSeq&) = default;
  friend bool operator==(const NatSeq&, const NatSeq&) = default;
};

/// Largest supported alphabet. Predicates are bitmasks and the check space
/// quantifies over all 2^k of them.
inline constexpr unsigned kMaxAlphabet = 16;

/// A total predicate on alphabet symbols, stored extensionally as a member set.
class Pred {
 public:
  constexpr Pred() noexcept = default;
  constexpr explicit Pred(std::uint32_t members) noexcept : members_(members) {}

  static constexpr Pred full(unsigned alphabet_size) noexcept {
    return Pred(alphabet_size >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << alphabet_size) - 1);
  }
  static Pred of(std::initializer_list<unsigned> ids);

  constexpr bool operator()(Elem e) const noexcept {
    return index_of(e) < 32 && ((members_ >> index_of(e)) & 1u) != 0;
  }
  constexpr std::uint32_t members() const noexcept { return members_; }

  friend constexpr bool operator==(Pred, Pred) noexcept = default;

 private:
  std::uint32_t members_ = 0;
};

class InvalidUniverse : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Enumeration bounds of a finite check space: alphabet {0..k-1}, lengths 0..L.
struct Universe {
  unsigned alphabet_size = 2;
  unsigned max_len = 5;

  /// Throws InvalidUniverse unless 1 <= alphabet_size <= kMaxAlphabet.
  void validate() const;

  bool in_alphabet(Elem e) const noexcept { return index_of(e) < alphabet_size; }
  bool contains(const Seq& xs) const noexcept;
  bool contains(const PairSeq& zs) const noexcept;

  friend bool operator==(const Universe&, const Universe&) = default;
};

/// Number of sequences of length <= max_len, saturating at UINT64_MAX.
std::uint64_t seq_count(const Universe& u) noexcept;

/// Every sequence of the universe exactly once, shortest first and
/// lexicographic within a length.
std::vector<Seq> enum_seqs(const Universe& u);

/// All 2^k predicates by ascending bitmask.
std::vector<Pred> enum_preds(const Universe& u);

bool all_satisfy(Pred p, const Seq& xs) noexcept;
Pred pred_and(Pred p, Pred q) noexcept;
Pred pred_or(Pred p, Pred q) noexcept;

/// Length-then-lexicographic comparison; this is the enumeration order.
bool shortlex_less(const Seq& a, const Seq& b) noexcept;

Seq make_seq(std::initializer_list<unsigned> ids);
Seq concat(const Seq& a, const Seq& b);

}  // namespace galois
