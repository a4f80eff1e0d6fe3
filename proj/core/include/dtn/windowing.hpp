#pragma once

// Window-size selection and materialization of a trace as a sequence of
// fixed-width snapshots (the temporal graph).

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "dtn/trace_model.hpp"

namespace dtn {

struct PairAggregate {
  NodeId a;
  NodeId b;
  Seconds total_contact_time = 0.0;
  std::size_t occurrence_count = 0;
};

// One aggregate per unordered pair with at least one contact inside the period.
std::vector<PairAggregate> pair_aggregates(const ContactTrace& trace, const AnalysisPeriod& period);

// Sum of contact time over sum of occurrences. Throws AnalysisError
// ("no contacts in period") for an empty list.
Seconds average_meeting_time(std::span<const PairAggregate> aggregates);

// Smallest positive multiple of 60 s strictly greater than the average
// meeting time.
Seconds recommend_window(std::span<const PairAggregate> aggregates);
Seconds recommend_window_for(Seconds average_meeting_time);

// ceil((t_max - t_min) / w), at least 1. Quotients within 1e-9 (relative) of
// an integer are treated as that integer.
std::size_t window_count(const AnalysisPeriod& period, Seconds w);

using NodeIndex = std::size_t;
using Edge = std::pair<NodeIndex, NodeIndex>;

struct Snapshot {
  std::vector<Edge> edges;            // sorted, first < second
  std::vector<NodeIndex> occurring;   // sorted endpoints of `edges`
};

// A trace cut into W windows [t_min + k*w, t_min + (k+1)*w); the last window
// is closed at t_max. Nodes are addressed by dense index in label order.
class SnapshotSequence {
 public:
  SnapshotSequence(std::vector<NodeId> labels, Seconds t_min, Seconds t_max, Seconds width,
                   std::vector<Snapshot> windows);

  Seconds window_width() const { return width_; }
  std::size_t window_count() const { return windows_.size(); }
  Seconds t_min() const { return t_min_; }
  Seconds t_max() const { return t_max_; }

  std::size_t node_count() const { return labels_.size(); }
  std::span<const NodeId> labels() const { return labels_; }
  NodeId label(NodeIndex index) const { return labels_.at(index); }
  // Throws AnalysisError for a label outside the node set.
  NodeIndex index_of(NodeId id) const;

  const Snapshot& window(std::size_t k) const { return windows_.at(k); }
  std::span<const Snapshot> windows() const { return windows_; }

  // Window indices in which the node has at least one contact, ascending.
  std::span<const std::size_t> occurrences(NodeIndex node) const { return occurrences_.at(node); }

  // Window containing instant t (clamped to the sequence).
  std::size_t window_of(Seconds t) const;

 private:
  std::vector<NodeId> labels_;
  Seconds t_min_;
  Seconds t_max_;
  Seconds width_;
  std::vector<Snapshot> windows_;
  std::vector<std::vector<std::size_t>> occurrences_;
};

// Each event becomes an edge of every window it intersects. Events outside
// the period are ignored; the node universe is the trace's node set.
SnapshotSequence build_snapshots(const ContactTrace& trace, const AnalysisPeriod& period,
                                 const WindowConfig& cfg);

}  // namespace dtn
