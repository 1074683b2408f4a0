#include "galois/engine.hpp"

namespace galois {

UniverseTooLarge::UniverseTooLarge(std::string_view what, std::uint64_t projected, std::uint64_t budget)
    : std::runtime_error(std::string(what) + ": projected " + std::to_string(projected) +
                         " evaluations exceed the budget of " + std::to_string(budget) +
                         " (shrink the universe or raise --budget)"),
      projected_(projected),
      budget_(budget) {}

void require_budget(std::string_view what, std::uint64_t projected, const CheckOptions& opts) {
  if (projected > opts.budget) throw UniverseTooLarge(what, projected, opts.budget);
}

CheckOptions remaining(const CheckOptions& opts, std::uint64_t spent) noexcept {
  CheckOptions out = opts;
  out.budget = spent >= opts.budget ? 0 : opts.budget - spent;
  return out;
}

}  // namespace galois
