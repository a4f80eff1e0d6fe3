#include "dtn/rwp_gen.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace dtn {

void RwpParams::validate() const {
  auto fail = [](const std::string& what) { throw std::invalid_argument(what); };
  if (node_count < 2) fail("node_count must be at least 2");
  if (!(duration > 0.0) || !std::isfinite(duration)) fail("duration must be positive");
  if (!(area_width > 0.0) || !(area_height > 0.0)) fail("area must be positive");
  if (!(range > 0.0)) fail("range must be positive");
  if (!(speed_min > 0.0)) fail("speed_min must be positive");
  if (!(speed_max >= speed_min) || !std::isfinite(speed_max)) fail("speed_max must be >= speed_min");
  if (!(pause_max >= 0.0)) fail("pause_max must be non-negative");
  if (!(tick > 0.0) || tick > duration) fail("tick must be positive and at most the duration");
}

RwpSimulator::RwpSimulator(const RwpParams& params) : params_(params), rng_(params.seed) {
  params_.validate();
  last_tick_ = static_cast<std::size_t>(std::floor(params_.duration / params_.tick + 1e-9));
  std::uniform_real_distribution<double> ux(0.0, params_.area_width);
  std::uniform_real_distribution<double> uy(0.0, params_.area_height);
  positions_.resize(params_.node_count);
  motion_.resize(params_.node_count);
  for (auto& p : positions_) p = {ux(rng_), uy(rng_)};
  for (std::size_t i = 0; i < params_.node_count; ++i) pick_waypoint(i);
}

Seconds RwpSimulator::time() const {
  // Dividing by the rate keeps multiples of 0.1 exact in decimal output.
  return static_cast<double>(tick_) / (1.0 / params_.tick);
}

bool RwpSimulator::in_range(std::size_t i, std::size_t j) const {
  const double dx = positions_[i].x - positions_[j].x;
  const double dy = positions_[i].y - positions_[j].y;
  return dx * dx + dy * dy <= params_.range * params_.range;
}

void RwpSimulator::pick_waypoint(std::size_t node) {
  std::uniform_real_distribution<double> ux(0.0, params_.area_width);
  std::uniform_real_distribution<double> uy(0.0, params_.area_height);
  std::uniform_real_distribution<double> us(params_.speed_min, params_.speed_max);
  auto& m = motion_[node];
  m.target = {ux(rng_), uy(rng_)};
  m.speed = us(rng_);
}

void RwpSimulator::step() {
  std::uniform_real_distribution<double> up(0.0, params_.pause_max);
  for (std::size_t i = 0; i < positions_.size(); ++i) {
    auto& m = motion_[i];
    Seconds budget = params_.tick;
    while (budget > 0.0) {
      if (m.pause_left > 0.0) {
        const Seconds used = std::min(budget, m.pause_left);
        m.pause_left -= used;
        budget -= used;
        if (m.pause_left <= 0.0) pick_waypoint(i);
        continue;
      }
      auto& p = positions_[i];
      const double dx = m.target.x - p.x;
      const double dy = m.target.y - p.y;
      const double remaining = std::hypot(dx, dy);
      const double reach = m.speed * budget;
      if (reach < remaining) {
        p.x += dx * reach / remaining;
        p.y += dy * reach / remaining;
        budget = 0.0;
      } else {
        p = m.target;
        budget -= remaining / m.speed;
        m.pause_left = params_.pause_max > 0.0 ? up(rng_) : 0.0;
        if (m.pause_left <= 0.0) pick_waypoint(i);
      }
    }
  }
  ++tick_;
}

ContactTrace generate(const RwpParams& params) {
  RwpSimulator sim(params);
  const std::size_t n = params.node_count;
  std::vector<long long> open_since(n * n, -1);
  std::vector<ContactEvent> events;
  auto close = [&](std::size_t i, std::size_t j, Seconds end) {
    const Seconds start = static_cast<double>(open_since[i * n + j]) / (1.0 / params.tick);
    if (end > start) events.push_back({NodeId{i}, NodeId{j}, start, end});
    open_since[i * n + j] = -1;
  };
  while (true) {
    const auto k = static_cast<long long>(sim.tick_index());
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const bool near = sim.in_range(i, j);
        const bool open = open_since[i * n + j] >= 0;
        if (near && !open) {
          open_since[i * n + j] = k;
        } else if (!near && open) {
          close(i, j, sim.time());
        }
      }
    }
    if (sim.tick_index() == sim.last_tick()) break;
    sim.step();
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (open_since[i * n + j] >= 0) close(i, j, params.duration);
    }
  }
  std::vector<NodeId> nodes;
  for (std::size_t i = 0; i < n; ++i) nodes.push_back(NodeId{i});
  return ContactTrace(std::move(events), std::move(nodes), std::make_pair(0.0, params.duration));
}

}  // namespace dtn
