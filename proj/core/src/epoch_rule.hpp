#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "dtn/temporal_metrics.hpp"

namespace dtn::detail {

// Applies the epoch rule: distance from the first occurrence, then from every
// occurrence after the first arrival; the minimum wins. `arrival(e)` returns
// the arrival window for a journey starting at epoch e.
template <typename ArrivalFn>
TemporalDistance min_over_epochs(std::span<const std::size_t> epochs, ArrivalFn&& arrival) {
  if (epochs.empty()) return TemporalDistance::unreachable();
  const std::optional<std::size_t> first = arrival(epochs.front());
  if (!first) return TemporalDistance::unreachable();
  std::size_t best = *first - epochs.front();
  for (std::size_t e : epochs) {
    if (e <= *first) continue;
    if (best == 0) break;
    if (const auto a = arrival(e)) best = std::min(best, *a - e);
  }
  return TemporalDistance::reachable(best);
}

}  // namespace dtn::detail
