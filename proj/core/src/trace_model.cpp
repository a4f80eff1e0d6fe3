#include "dtn/trace_model.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

namespace dtn {

std::string to_string(NodeId id) { return std::to_string(id.value); }

ContactEvent ContactEvent::canonical() const {
  ContactEvent out = *this;
  if (out.b < out.a) std::swap(out.a, out.b);
  return out;
}

bool event_less(const ContactEvent& lhs, const ContactEvent& rhs) {
  return std::tie(lhs.start, lhs.end, lhs.a, lhs.b) <
         std::tie(rhs.start, rhs.end, rhs.a, rhs.b);
}

AnalysisPeriod::AnalysisPeriod(Seconds t_min, Seconds t_max) : t_min_(t_min), t_max_(t_max) {
  if (!std::isfinite(t_min) || !std::isfinite(t_max) || !(t_min < t_max)) {
    throw std::invalid_argument("analysis period requires t_min < t_max");
  }
}

Horizon Horizon::of(std::size_t max_hops) {
  if (max_hops == 0) throw std::invalid_argument("horizon must be a positive hop count");
  Horizon h;
  h.max_hops_ = max_hops;
  return h;
}

std::size_t Horizon::cap(std::size_t node_count) const {
  // A shortest journey never needs more than N-1 hops inside one window.
  const std::size_t natural = node_count > 0 ? node_count - 1 : 0;
  if (!max_hops_) return natural;
  return std::min(*max_hops_, natural);
}

WindowConfig WindowConfig::make(Seconds width, Horizon horizon) {
  if (!std::isfinite(width) || !(width > 0.0)) {
    throw std::invalid_argument("window width must be positive");
  }
  return WindowConfig{width, horizon};
}

ContactTrace::ContactTrace(std::vector<ContactEvent> events, std::vector<NodeId> extra_nodes,
                           std::optional<std::pair<Seconds, Seconds>> span)
    : events_(std::move(events)), nodes_(std::move(extra_nodes)) {
  for (auto& e : events_) e = e.canonical();
  std::sort(events_.begin(), events_.end(), event_less);

  nodes_.reserve(nodes_.size() + 2 * events_.size());
  for (const auto& e : events_) {
    nodes_.push_back(e.a);
    nodes_.push_back(e.b);
  }
  std::sort(nodes_.begin(), nodes_.end());
  nodes_.erase(std::unique(nodes_.begin(), nodes_.end()), nodes_.end());

  if (span) {
    span_min_ = span->first;
    span_max_ = span->second;
  } else if (!events_.empty()) {
    span_min_ = events_.front().start;
    span_max_ = events_.front().end;
    for (const auto& e : events_) {
      span_min_ = std::min(span_min_, e.start);
      span_max_ = std::max(span_max_, e.end);
    }
  }
}

std::optional<std::size_t> ContactTrace::index_of(NodeId id) const {
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), id);
  if (it == nodes_.end() || *it != id) return std::nullopt;
  return static_cast<std::size_t>(it - nodes_.begin());
}

std::vector<ContactEvent> ContactTrace::contacts_between(NodeId x, NodeId y) const {
  if (y < x) std::swap(x, y);
  std::vector<ContactEvent> out;
  for (const auto& e : events_) {
    if (e.a == x && e.b == y) out.push_back(e);
  }
  return out;
}

std::string_view rule_name(Violation::Rule rule) {
  switch (rule) {
    case Violation::Rule::SelfContact: return "self-contact";
    case Violation::Rule::ReversedInterval: return "reversed-interval";
    case Violation::Rule::NonFiniteTime: return "non-finite-time";
    case Violation::Rule::OutsideSpan: return "outside-span";
  }
  return "unknown";
}

std::vector<Violation> validate_trace(const ContactTrace& trace) {
  std::vector<Violation> out;
  const auto events = trace.events();
  for (std::size_t i = 0; i < events.size(); ++i) {
    const auto& e = events[i];
    if (e.a == e.b) out.push_back({i, Violation::Rule::SelfContact});
    if (!std::isfinite(e.start) || !std::isfinite(e.end)) {
      out.push_back({i, Violation::Rule::NonFiniteTime});
      continue;
    }
    if (e.start > e.end) out.push_back({i, Violation::Rule::ReversedInterval});
    if (e.start < trace.span_min() || e.end > trace.span_max()) {
      out.push_back({i, Violation::Rule::OutsideSpan});
    }
  }
  return out;
}

}  // namespace dtn
