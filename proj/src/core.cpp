#include "galois/core.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace galois {

Pred Pred::of(std::initializer_list<unsigned> ids) {
  std::uint32_t members = 0;
  for (unsigned id : ids) {
    if (id >= 32) throw std::out_of_range("predicate member out of range: " + std::to_string(id));
    members |= std::uint32_t{1} << id;
  }
  return Pred(members);
}

void Universe::validate() const {
  if (alphabet_size < 1 || alphabet_size > kMaxAlphabet) {
    throw InvalidUniverse("alphabet size must be in [1, " + std::to_string(kMaxAlphabet) +
                          "], got " + std::to_string(alphabet_size));
  }
}

bool Universe::contains(const Seq& xs) const noexcept {
  return xs.size() <= max_len &&
         std::all_of(xs.begin(), xs.end(), [this](Elem e) { return in_alphabet(e); });
}

bool Universe::contains(const PairSeq& zs) const noexcept {
  return zs.size() <= max_len && std::all_of(zs.begin(), zs.end(), [this](const auto& z) {
           return in_alphabet(z.first) && in_alphabet(z.second);
         });
}

std::uint64_t seq_count(const Universe& u) noexcept {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 0;
  std::uint64_t power = 1;
  for (unsigned n = 0; n <= u.max_len; ++n) {
    if (total > kMax - power) return kMax;
    total += power;
    if (n == u.max_len) break;
    if (power > kMax / u.alphabet_size) return kMax;
    power *= u.alphabet_size;
  }
  return total;
}

std::vector<Seq> enum_seqs(const Universe& u) {
  u.validate();
  std::vector<Seq> out;
  out.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(seq_count(u), 1u << 20)));
  for (unsigned len = 0; len <= u.max_len; ++len) {
    Seq cur(len, elem(0));
    bool more = true;
    while (more) {
      out.push_back(cur);
      // odometer step, last position fastest
      more = false;
      for (std::size_t i = len; i-- > 0;) {
        if (index_of(cur[i]) + 1 < u.alphabet_size) {
          cur[i] = elem(index_of(cur[i]) + 1);
          more = true;
          break;
        }
        cur[i] = elem(0);
      }
    }
  }
  return out;
}

std::vector<Pred> enum_preds(const Universe& u) {
  u.validate();
  std::vector<Pred> out;
  const std::uint32_t count = std::uint32_t{1} << u.alphabet_size;
  out.reserve(count);
  for (std::uint32_t mask = 0; mask < count; ++mask) out.emplace_back(mask);
  return out;
}

bool all_satisfy(Pred p, const Seq& xs) noexcept {
  return std::all_of(xs.begin(), xs.end(), p);
}

Pred pred_and(Pred p, Pred q) noexcept { return Pred(p.members() & q.members()); }
Pred pred_or(Pred p, Pred q) noexcept { return Pred(p.members() | q.members()); }

bool shortlex_less(const Seq& a, const Seq& b) noexcept {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

Seq make_seq(std::initializer_list<unsigned> ids) {
  Seq out;
  out.reserve(ids.size());
  for (unsigned id : ids) {
    if (id > 255) throw std::out_of_range("element id out of range: " + std::to_string(id));
    out.push_back(elem(id));
  }
  return out;
}

Seq concat(const Seq& a, const Seq& b) {
  Seq out(a);
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace galois
