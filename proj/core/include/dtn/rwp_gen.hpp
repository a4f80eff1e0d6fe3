#pragma once

// Random-waypoint contact generator. Nodes start at uniform positions, pick a
// uniform destination and speed, travel there in a straight line, pause for
// a uniform time and repeat. Positions are sampled every `tick` seconds; a
// pair is in contact while its distance is within `range`.
//
// The random source is std::mt19937_64 seeded with `seed`, so a given seed
// reproduces the same trace on the same standard library.

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "dtn/trace_model.hpp"

namespace dtn {

struct RwpParams {
  std::size_t node_count = 10;
  Seconds duration = 3600.0;
  double area_width = 1000.0;   // meters
  double area_height = 1000.0;  // meters
  double range = 100.0;         // meters
  double speed_min = 0.5;       // m/s
  double speed_max = 1.5;       // m/s
  Seconds pause_max = 120.0;
  Seconds tick = 0.1;
  std::uint64_t seed = 1;

  // Throws std::invalid_argument naming the first bad field.
  void validate() const;
};

struct Position {
  double x = 0.0;
  double y = 0.0;
};

// Step-by-step mobility, exposed so contacts can be checked against the
// positions that produced them.
class RwpSimulator {
 public:
  explicit RwpSimulator(const RwpParams& params);

  // Sample index; the current positions belong to time tick_index() * tick.
  std::size_t tick_index() const { return tick_; }
  Seconds time() const;
  // Number of the last tick inside the duration.
  std::size_t last_tick() const { return last_tick_; }

  const std::vector<Position>& positions() const { return positions_; }
  bool in_range(std::size_t i, std::size_t j) const;

  void step();

 private:
  struct Motion {
    Position target;
    double speed = 0.0;
    Seconds pause_left = 0.0;
  };

  void pick_waypoint(std::size_t node);

  RwpParams params_;
  std::mt19937_64 rng_;
  std::vector<Position> positions_;
  std::vector<Motion> motion_;
  std::size_t tick_ = 0;
  std::size_t last_tick_ = 0;
};

// Contacts open at the first in-range sample and close at the first sample
// out of range (or at `duration`). Contacts shorter than one tick are
// dropped. Node ids are 0..node_count-1; every node is part of the trace,
// whose span is [0, duration].
ContactTrace generate(const RwpParams& params);

}  // namespace dtn
