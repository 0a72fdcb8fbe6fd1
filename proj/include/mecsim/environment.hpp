#ifndef MECSIM_ENVIRONMENT_HPP
#define MECSIM_ENVIRONMENT_HPP

#include <cstdint>
#include <vector>

#include "mecsim/scenario.hpp"

namespace mecsim {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

double distance_m(const Vec2& a, const Vec2& b);

// Base stations on a regular square grid inside [0, side]^2, row-major,
// offset half a pitch from the edges.
struct BaseStationLayout {
  std::vector<Vec2> positions;

  static BaseStationLayout regular_grid(int num_bs, double side_m);
  int size() const { return static_cast<int>(positions.size()); }
};

// Path loss 127 + 30 log10(d/1km) in dB, returned as a linear power gain.
// Distances below 1 m are clamped.
double large_scale_gain(double distance_m);

// Gains toward every BS from one user position.
std::vector<double> large_scale_gains(const BaseStationLayout& layout,
                                      const Vec2& user);

// Sequential waypoint draws for one user, uniform over the square.
class WaypointSampler {
 public:
  WaypointSampler(std::uint64_t seed, double side_m)
      : seed_(seed), side_(side_m) {}

  Vec2 next() {
    const std::uint64_t i = count_++;
    return {rng::uniform(rng::derive(seed_, 1, i), 0.0, side_),
            rng::uniform(rng::derive(seed_, 2, i), 0.0, side_)};
  }

 private:
  std::uint64_t seed_;
  std::uint64_t count_ = 0;
  double side_;
};

// Random-waypoint state: walk straight to the waypoint at constant speed,
// then pick a new uniform waypoint (zero pause time).
struct RwpState {
  Vec2 position;
  Vec2 waypoint;
  double speed_mps = 5.0;
};

RwpState rwp_init(WaypointSampler& waypoints, double speed_mps);
RwpState rwp_advance(RwpState state, double duration_s,
                     WaypointSampler& waypoints);

// Per-slot channel gain toward one BS: h = g * H.
struct ChannelSample {
  double small_scale = 0.0;  // g, Exp(1)
  double gain = 0.0;         // h
};

ChannelSample sample_channel(const RngStreams& streams, int bs,
                             std::int64_t slot, double large_gain);

// Per-frame uniform compute-rate draws for every BS.
std::vector<double> draw_compute_rates(const RngStreams& streams,
                                       std::int64_t frame, int num_bs,
                                       double lo, double hi);

}  // namespace mecsim

#endif  // MECSIM_ENVIRONMENT_HPP
