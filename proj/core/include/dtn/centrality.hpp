#pragma once

#include <span>
#include <vector>

#include "dtn/trace_model.hpp"

namespace dtn {

struct CentralityScore {
  NodeId node;
  double value = 0.0;

  friend bool operator==(const CentralityScore&, const CentralityScore&) = default;
};

// Descending by value, ties by ascending node id. The head is the
// "(id, value)" pair a report shows.
std::vector<CentralityScore> rank_nodes(std::span<const CentralityScore> scores);

}  // namespace dtn
