#include "mecsim/environment.hpp"

#include <cmath>
#include <stdexcept>

namespace mecsim {

double distance_m(const Vec2& a, const Vec2& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

BaseStationLayout BaseStationLayout::regular_grid(int num_bs, double side_m) {
  if (num_bs < 1) throw std::invalid_argument("regular_grid: num_bs >= 1");
  const int rows = static_cast<int>(std::ceil(std::sqrt(num_bs)));
  const double pitch = side_m / rows;
  BaseStationLayout layout;
  layout.positions.reserve(num_bs);
  for (int i = 0; i < num_bs; ++i) {
    const int r = i / rows;
    const int c = i % rows;
    layout.positions.push_back(
        {pitch * (c + 0.5), pitch * (r + 0.5)});
  }
  return layout;
}

double large_scale_gain(double distance_m) {
  const double d = std::max(distance_m, 1.0);  // floor avoids PL -> -inf
  const double path_loss_db = 127.0 + 30.0 * std::log10(d / 1000.0);
  return std::pow(10.0, -path_loss_db / 10.0);
}

std::vector<double> large_scale_gains(const BaseStationLayout& layout,
                                      const Vec2& user) {
  std::vector<double> gains(layout.positions.size());
  for (std::size_t n = 0; n < layout.positions.size(); ++n) {
    gains[n] = large_scale_gain(distance_m(user, layout.positions[n]));
  }
  return gains;
}

RwpState rwp_init(WaypointSampler& waypoints, double speed_mps) {
  RwpState state;
  state.position = waypoints.next();
  state.waypoint = waypoints.next();
  state.speed_mps = speed_mps;
  return state;
}

RwpState rwp_advance(RwpState state, double duration_s,
                     WaypointSampler& waypoints) {
  double remaining = duration_s;
  while (remaining > 0.0) {
    const double dx = state.waypoint.x - state.position.x;
    const double dy = state.waypoint.y - state.position.y;
    const double to_waypoint = std::hypot(dx, dy);
    const double travel = state.speed_mps * remaining;
    if (travel < to_waypoint) {
      const double frac = travel / to_waypoint;
      state.position.x += dx * frac;
      state.position.y += dy * frac;
      break;
    }
    // reach the waypoint, spend the travel time, draw the next one
    state.position = state.waypoint;
    remaining -= to_waypoint / state.speed_mps;
    state.waypoint = waypoints.next();
  }
  return state;
}

ChannelSample sample_channel(const RngStreams& streams, int bs,
                             std::int64_t slot, double large_gain) {
  ChannelSample sample;
  sample.small_scale = streams.small_scale(bs, slot);
  sample.gain = sample.small_scale * large_gain;
  return sample;
}

std::vector<double> draw_compute_rates(const RngStreams& streams,
                                       std::int64_t frame, int num_bs,
                                       double lo, double hi) {
  std::vector<double> rates(num_bs);
  for (int n = 0; n < num_bs; ++n) {
    rates[n] = streams.compute_rate(n, frame, lo, hi);
  }
  return rates;
}

}  // namespace mecsim
