#pragma once

// Core domain types for contact traces: node labels, contact intervals, the
// trace container and the analysis period / window configuration.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dtn {

using Seconds = double;

// Original node label as it appears in the input files.
struct NodeId {
  std::uint64_t value = 0;

  friend constexpr auto operator<=>(NodeId, NodeId) = default;
};

std::string to_string(NodeId id);

// One contact interval between an unordered node pair. Instantaneous contacts
// (start == end) are legal.
struct ContactEvent {
  NodeId a;
  NodeId b;
  Seconds start = 0.0;
  Seconds end = 0.0;

  Seconds duration() const { return end - start; }

  // Same contact with the pair stored as (min, max).
  ContactEvent canonical() const;

  friend bool operator==(const ContactEvent&, const ContactEvent&) = default;
};

// Strict weak order used for every sorted event list in the library:
// (start, end, a, b).
bool event_less(const ContactEvent& lhs, const ContactEvent& rhs);

// Thrown for invalid analysis inputs (empty periods, too few nodes, ...).
class AnalysisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class AnalysisPeriod {
 public:
  // Throws std::invalid_argument unless t_min < t_max.
  AnalysisPeriod(Seconds t_min, Seconds t_max);

  Seconds t_min() const { return t_min_; }
  Seconds t_max() const { return t_max_; }
  Seconds length() const { return t_max_ - t_min_; }

 private:
  Seconds t_min_;
  Seconds t_max_;
};

// Maximum number of hops a message may take inside a single window.
class Horizon {
 public:
  static Horizon unlimited() { return Horizon{}; }
  // Throws std::invalid_argument for zero.
  static Horizon of(std::size_t max_hops);

  bool is_unlimited() const { return !max_hops_.has_value(); }
  // Effective per-window hop cap for a graph with `node_count` nodes.
  std::size_t cap(std::size_t node_count) const;
  std::optional<std::size_t> max_hops() const { return max_hops_; }

 private:
  std::optional<std::size_t> max_hops_;
};

struct WindowConfig {
  Seconds width = 0.0;
  Horizon horizon = Horizon::unlimited();

  // Throws std::invalid_argument unless width > 0 and finite.
  static WindowConfig make(Seconds width, Horizon horizon = Horizon::unlimited());
};

// Ordered, immutable collection of contacts. Events are stored canonical
// (a <= b) and sorted with event_less; nodes are the sorted distinct labels
// of all events plus any explicitly supplied isolated nodes. Dense indices
// 0..N-1 follow the label order.
class ContactTrace {
 public:
  ContactTrace() = default;
  explicit ContactTrace(std::vector<ContactEvent> events,
                        std::vector<NodeId> extra_nodes = {},
                        std::optional<std::pair<Seconds, Seconds>> span = std::nullopt);

  std::span<const ContactEvent> events() const { return events_; }
  std::span<const NodeId> nodes() const { return nodes_; }
  std::size_t node_count() const { return nodes_.size(); }
  bool empty() const { return events_.empty(); }

  // Observation span. Defaults to [min start, max end] of the events.
  Seconds span_min() const { return span_min_; }
  Seconds span_max() const { return span_max_; }

  std::optional<std::size_t> index_of(NodeId id) const;
  NodeId label(std::size_t index) const { return nodes_.at(index); }

  // All contacts of the unordered pair, in trace order.
  std::vector<ContactEvent> contacts_between(NodeId x, NodeId y) const;

 private:
  std::vector<ContactEvent> events_;
  std::vector<NodeId> nodes_;
  Seconds span_min_ = 0.0;
  Seconds span_max_ = 0.0;
};

struct Violation {
  enum class Rule { SelfContact, ReversedInterval, NonFiniteTime, OutsideSpan };

  std::size_t event_index = 0;
  Rule rule = Rule::SelfContact;

  friend bool operator==(const Violation&, const Violation&) = default;
};

std::string_view rule_name(Violation::Rule rule);

// Returns one record per broken invariant; empty means the trace is valid.
std::vector<Violation> validate_trace(const ContactTrace& trace);

}  // namespace dtn
