#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "galois/core.hpp"

namespace galois {

// Carrier<T> enumerates the finite slice of domain T selected by a universe.
// count() is computed without materializing and saturates at UINT64_MAX so
// budgets can be checked before any allocation happens.
template <class T>
struct Carrier;

template <>
struct Carrier<Seq> {
  static constexpr std::string_view name = "seq";
  static std::uint64_t count(const Universe& u) noexcept { return seq_count(u); }
  static std::vector<Seq> all(const Universe& u) { return enum_seqs(u); }
};

/// Pair sequences over the k*k pair alphabet, length-then-lexicographic.
template <>
struct Carrier<PairSeq> {
  static constexpr std::string_view name = "pair-seq";
  static std::uint64_t count(const Universe& u) noexcept;
  static std::vector<PairSeq> all(const Universe& u);
  /// Only pair sequences no longer than max_len.
  static std::vector<PairSeq> up_to(const Universe& u, unsigned max_len);
};

/// (n, xs) with n in [0, L+1] (n-major), so bounds beyond every length occur.
template <>
struct Carrier<NatSeq> {
  static constexpr std::string_view name = "nat-seq";
  static std::uint64_t count(const Universe& u) noexcept;
  static std::vector<NatSeq> all(const Universe& u);
};

/// (xs, ys), xs-major.
template <>
struct Carrier<SeqPair> {
  static constexpr std::string_view name = "seq-pair";
  static std::uint64_t count(const Universe& u) noexcept;
  static std::vector<SeqPair> all(const Universe& u);
};

/// Lists of segments whose single-separator rendering has length <= L.
/// Ordered by rendered length, then segment count, then segments shortlex.
template <>
struct Carrier<SeqList> {
  static constexpr std::string_view name = "seq-list";
  static std::uint64_t count(const Universe& u) noexcept;
  static std::vector<SeqList> all(const Universe& u);
};

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) noexcept;
std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) noexcept;

}  // namespace galois
