#include "dtn/temporal_metrics.hpp"

#include <algorithm>
#include <stdexcept>

namespace dtn {

std::vector<CentralityScore> rank_nodes(std::span<const CentralityScore> scores) {
  std::vector<CentralityScore> out(scores.begin(), scores.end());
  std::stable_sort(out.begin(), out.end(), [](const CentralityScore& l, const CentralityScore& r) {
    if (l.value != r.value) return l.value > r.value;
    return l.node < r.node;
  });
  return out;
}

TemporalDistance TemporalDistance::from_encoded(std::int64_t value) {
  if (value < -1) throw std::invalid_argument("temporal distance must be >= -1");
  return TemporalDistance(value);
}

std::size_t TemporalDistance::hops() const {
  if (!is_reachable()) throw std::logic_error("unreachable temporal distance has no hop count");
  return static_cast<std::size_t>(value_);
}

std::string to_string(TemporalDistance d) {
  return d.is_reachable() ? std::to_string(d.hops()) : "unreachable";
}

TemporalDistanceMatrix::TemporalDistanceMatrix(std::vector<NodeId> labels,
                                               std::vector<TemporalDistance> entries)
    : labels_(std::move(labels)), entries_(std::move(entries)) {
  if (entries_.size() != labels_.size() * labels_.size()) {
    throw std::invalid_argument("distance matrix must be N x N");
  }
}

TemporalDistanceMatrix TemporalDistanceMatrix::from_encoded(
    std::vector<NodeId> labels, const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t n = labels.size();
  if (rows.size() != n) throw std::invalid_argument("distance matrix must have one row per label");
  std::vector<TemporalDistance> entries;
  entries.reserve(n * n);
  for (const auto& row : rows) {
    if (row.size() != n) throw std::invalid_argument("distance matrix must be square");
    for (auto v : row) entries.push_back(TemporalDistance::from_encoded(v));
  }
  return TemporalDistanceMatrix(std::move(labels), std::move(entries));
}

std::size_t TemporalDistanceMatrix::index_of(NodeId id) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == id) return i;
  }
  throw AnalysisError("unknown node " + to_string(id));
}

std::vector<std::vector<std::int64_t>> TemporalDistanceMatrix::encoded() const {
  std::vector<std::vector<std::int64_t>> rows(size(), std::vector<std::int64_t>(size()));
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = 0; j < size(); ++j) rows[i][j] = at(i, j).encoded();
  }
  return rows;
}

std::string format_matrix(const TemporalDistanceMatrix& matrix) {
  std::string out = "[";
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    if (i > 0) out += ",\n ";
    out += '[';
    for (std::size_t j = 0; j < matrix.size(); ++j) {
      if (j > 0) out += ", ";
      out += std::to_string(matrix.at(i, j).encoded());
    }
    out += ']';
  }
  out += ']';
  return out;
}

std::size_t reachable_pair_count(const TemporalDistanceMatrix& matrix) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    for (std::size_t j = 0; j < matrix.size(); ++j) {
      if (i != j && matrix.at(i, j).is_reachable()) ++count;
    }
  }
  return count;
}

Seconds average_temporal_distance(const TemporalDistanceMatrix& matrix, Seconds w) {
  const std::size_t n = matrix.size();
  if (n < 2) throw AnalysisError("average temporal distance needs at least 2 nodes");
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && matrix.at(i, j).is_reachable()) sum += static_cast<double>(matrix.at(i, j).hops());
    }
  }
  return w * sum / (static_cast<double>(n) * static_cast<double>(n - 1));
}

TemporalDiameter temporal_diameter(const TemporalDistanceMatrix& matrix, Seconds w) {
  TemporalDiameter d;
  bool any = false;
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    for (std::size_t j = 0; j < matrix.size(); ++j) {
      const auto e = matrix.at(i, j);
      if (i == j || !e.is_reachable()) continue;
      any = true;
      d.hops = std::max(d.hops, e.hops());
    }
  }
  d.disconnected = !any;
  d.seconds = static_cast<double>(d.hops) * w;
  return d;
}

namespace {

double closeness_of(const TemporalDistanceMatrix& matrix, std::size_t window_count, std::size_t i) {
  double sum = 0.0;
  for (std::size_t j = 0; j < matrix.size(); ++j) {
    const auto e = matrix.at(i, j);
    if (i != j && e.is_reachable()) sum += static_cast<double>(e.hops());
  }
  return sum / (static_cast<double>(window_count) * static_cast<double>(matrix.size() - 1));
}

void check_closeness_args(const TemporalDistanceMatrix& matrix, std::size_t window_count) {
  if (matrix.size() < 2) throw AnalysisError("temporal closeness needs at least 2 nodes");
  if (window_count == 0) throw AnalysisError("temporal closeness needs at least 1 window");
}

}  // namespace

CentralityScore temporal_closeness(const TemporalDistanceMatrix& matrix, std::size_t window_count,
                                   NodeId node) {
  check_closeness_args(matrix, window_count);
  const auto i = matrix.index_of(node);
  return {node, closeness_of(matrix, window_count, i)};
}

std::vector<CentralityScore> temporal_closeness_all(const TemporalDistanceMatrix& matrix,
                                                    std::size_t window_count) {
  check_closeness_args(matrix, window_count);
  std::vector<CentralityScore> out;
  out.reserve(matrix.size());
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    out.push_back({matrix.labels()[i], closeness_of(matrix, window_count, i)});
  }
  return out;
}

}  // namespace dtn
