#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "galois/carrier.hpp"
#include "galois/report.hpp"

namespace galois {

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

struct CheckOptions {
  /// Cap on projected primitive evaluations (relation or function calls).
  std::uint64_t budget = kDefaultBudget;
  unsigned workers = 1;
};

class UniverseTooLarge : public std::runtime_error {
 public:
  UniverseTooLarge(std::string_view what, std::uint64_t projected, std::uint64_t budget);

  std::uint64_t projected() const noexcept { return projected_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t projected_;
  std::uint64_t budget_;
};

/// Throws UniverseTooLarge when `projected` exceeds the budget.
void require_budget(std::string_view what, std::uint64_t projected, const CheckOptions& opts);

/// Options for the next check of a sequence, with the budget already spent removed.
CheckOptions remaining(const CheckOptions& opts, std::uint64_t spent) noexcept;

struct CaseOutcome {
  std::uint64_t cases = 0;
  std::optional<Witness> witness;
};

struct ScanResult {
  std::uint64_t cases = 0;
  std::optional<Witness> witness;
};

namespace detail {

template <class Fn>
void run_workers(unsigned workers, Fn&& fn) {
  std::exception_ptr error;
  std::mutex error_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        try {
          fn();
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      });
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace detail

/// Runs body(i) for every outer index i in [0, outer) and returns the first
/// witness in index order. body(i) scans the inner quantifiers of outer value
/// i and stops at its own first violation.
///
/// Outer indices are split into contiguous chunks. A chunk stops at its first
/// failure and chunks after the earliest failing one are abandoned, so the
/// case count (everything before the witness, plus the witness) and the
/// witness itself do not depend on the number of workers.
template <class Body>
ScanResult scan(std::size_t outer, unsigned workers, Body&& body) {
  ScanResult result;
  if (workers <= 1 || outer < 2) {
    for (std::size_t i = 0; i < outer; ++i) {
      CaseOutcome out = body(i);
      result.cases += out.cases;
      if (out.witness) {
        result.witness = std::move(out.witness);
        break;
      }
    }
    return result;
  }

  const std::size_t chunk = std::max<std::size_t>(1, outer / (std::size_t{workers} * 16));
  const std::size_t chunks = (outer + chunk - 1) / chunk;
  struct ChunkResult {
    std::uint64_t cases = 0;
    std::optional<Witness> witness;
  };
  std::vector<ChunkResult> parts(chunks);
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> first_failure{chunks};

  detail::run_workers(std::min<std::size_t>(workers, chunks), [&] {
    while (true) {
      const std::size_t c = next.fetch_add(1);
      if (c >= chunks || c > first_failure.load()) return;
      auto& part = parts[c];
      const std::size_t end = std::min(outer, (c + 1) * chunk);
      for (std::size_t i = c * chunk; i < end; ++i) {
        CaseOutcome out = body(i);
        part.cases += out.cases;
        if (out.witness) {
          part.witness = std::move(out.witness);
          std::size_t seen = first_failure.load();
          while (c < seen && !first_failure.compare_exchange_weak(seen, c)) {
          }
          break;
        }
      }
    }
  });

  for (auto& part : parts) {
    result.cases += part.cases;
    if (part.witness) {
      result.witness = std::move(part.witness);
      break;
    }
  }
  return result;
}

/// Runs fn(i) for every i in [0, n); fn must only touch state owned by i.
template <class Fn>
void parallel_for(std::size_t n, unsigned workers, Fn&& fn) {
  if (workers <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  const std::size_t chunk = std::max<std::size_t>(1, n / (std::size_t{workers} * 16));
  std::atomic<std::size_t> next{0};
  detail::run_workers(std::min<std::size_t>(workers, n), [&] {
    while (true) {
      const std::size_t start = next.fetch_add(chunk);
      if (start >= n) return;
      const std::size_t end = std::min(n, start + chunk);
      for (std::size_t i = start; i < end; ++i) fn(i);
    }
  });
}

class Stopwatch {
 public:
  std::chrono::nanoseconds elapsed() const {
    return std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start_);
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace galois
