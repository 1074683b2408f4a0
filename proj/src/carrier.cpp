#include "galois/carrier.hpp"

#include <algorithm>
#include <limits>
#include <tuple>

namespace galois {

namespace {

constexpr auto kSaturated = std::numeric_limits<std::uint64_t>::max();

std::size_t rendered_length(const SeqList& ws) {
  std::size_t total = ws.empty() ? 0 : ws.size() - 1;
  for (const auto& w : ws) total += w.size();
  return total;
}

bool seq_list_less(const SeqList& a, const SeqList& b) {
  const auto ra = rendered_length(a);
  const auto rb = rendered_length(b);
  if (ra != rb) return ra < rb;
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), shortlex_less);
}

void extend_lists(const std::vector<Seq>& segments, unsigned max_len, SeqList& cur,
                  std::size_t used, std::vector<SeqList>& out) {
  for (const auto& s : segments) {
    const std::size_t cost = used + s.size() + (cur.empty() ? 0 : 1);
    if (cost > max_len) continue;
    cur.push_back(s);
    out.push_back(cur);
    extend_lists(segments, max_len, cur, cost, out);
    cur.pop_back();
  }
}

}  // namespace

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) noexcept {
  return a > kSaturated - b ? kSaturated : a + b;
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) noexcept {
  if (a == 0 || b == 0) return 0;
  return a > kSaturated / b ? kSaturated : a * b;
}

std::uint64_t Carrier<PairSeq>::count(const Universe& u) noexcept {
  return seq_count(Universe{u.alphabet_size * u.alphabet_size, u.max_len});
}

std::vector<PairSeq> Carrier<PairSeq>::all(const Universe& u) { return up_to(u, u.max_len); }

std::vector<PairSeq> Carrier<PairSeq>::up_to(const Universe& u, unsigned max_len) {
  u.validate();
  const unsigned k = u.alphabet_size;
  // Enumerate codes over the pair alphabet; code a*k+b keeps (a,b) lexicographic.
  std::vector<PairSeq> out;
  for (unsigned len = 0; len <= std::min(max_len, u.max_len); ++len) {
    std::vector<unsigned> code(len, 0);
    bool more = true;
    while (more) {
      PairSeq zs;
      zs.reserve(len);
      for (unsigned c : code) zs.emplace_back(elem(c / k), elem(c % k));
      out.push_back(std::move(zs));
      more = false;
      for (std::size_t i = len; i-- > 0;) {
        if (code[i] + 1 < k * k) {
          ++code[i];
          more = true;
          break;
        }
        code[i] = 0;
      }
    }
  }
  return out;
}

std::uint64_t Carrier<NatSeq>::count(const Universe& u) noexcept {
  return sat_mul(std::uint64_t{u.max_len} + 2, seq_count(u));
}

std::vector<NatSeq> Carrier<NatSeq>::all(const Universe& u) {
  const auto seqs = enum_seqs(u);
  std::vector<NatSeq> out;
  out.reserve((u.max_len + 2) * seqs.size());
  for (std::uint64_t n = 0; n <= std::uint64_t{u.max_len} + 1; ++n) {
    for (const auto& xs : seqs) out.push_back(NatSeq{n, xs});
  }
  return out;
}

std::uint64_t Carrier<SeqPair>::count(const Universe& u) noexcept {
  const auto n = seq_count(u);
  return sat_mul(n, n);
}

std::vector<SeqPair> Carrier<SeqPair>::all(const Universe& u) {
  const auto seqs = enum_seqs(u);
  std::vector<SeqPair> out;
  out.reserve(seqs.size() * seqs.size());
  for (const auto& xs : seqs) {
    for (const auto& ys : seqs) out.emplace_back(xs, ys);
  }
  return out;
}

std::uint64_t Carrier<SeqList>::count(const Universe& u) noexcept {
  // nonempty[s]: lists of >= 1 segment whose rendering has length exactly s.
  // The first segment has length l, then either the list ends (l == s) or a
  // separator follows and a nonempty list of rendered length s-l-1 remains.
  std::vector<std::uint64_t> power(u.max_len + 1, 1);
  for (unsigned i = 1; i <= u.max_len; ++i) power[i] = sat_mul(power[i - 1], u.alphabet_size);
  std::vector<std::uint64_t> nonempty(u.max_len + 1, 0);
  std::uint64_t total = 1;  // the empty list
  for (unsigned s = 0; s <= u.max_len; ++s) {
    std::uint64_t c = power[s];
    for (unsigned l = 0; l < s; ++l) c = sat_add(c, sat_mul(power[l], nonempty[s - l - 1]));
    nonempty[s] = c;
    total = sat_add(total, c);
  }
  return total;
}

std::vector<SeqList> Carrier<SeqList>::all(const Universe& u) {
  const auto segments = enum_seqs(u);
  std::vector<SeqList> out;
  out.emplace_back();
  SeqList cur;
  extend_lists(segments, u.max_len, cur, 0, out);
  std::sort(out.begin(), out.end(), seq_list_less);
  return out;
}

}  // namespace galois
