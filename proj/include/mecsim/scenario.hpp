#ifndef MECSIM_SCENARIO_HPP
#define MECSIM_SCENARIO_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "mecsim/rng.hpp"

namespace mecsim {

// Homogeneous computation task: L input bits, a per-bit cycle demand, a hard
// completion deadline and a Bernoulli arrival probability per slot.
struct TaskSpec {
  double input_bits = 5000.0;      // L
  double cycles_per_bit = 2640.0;  // xi_total / L
  double deadline_s = 0.01;        // tau_d
  double arrival_prob = 0.5;       // rho

  double total_cycles() const { return input_bits * cycles_per_bit; }
};

// Two-timescale calendar: slots of length tau grouped into frames of T slots.
// A migration blanks the first C slots of its frame.
struct FrameSchedule {
  double slot_len_s = 0.01;  // tau
  int frame_slots = 500;     // T
  int migration_slots = 5;   // C
  int horizon_frames = 2500; // K

  // C/T, the fraction of a frame lost to a migration
  double outage_ratio() const {
    return static_cast<double>(migration_slots) / frame_slots;
  }
  double frame_duration_s() const { return slot_len_s * frame_slots; }
  std::int64_t total_slots() const {
    return static_cast<std::int64_t>(frame_slots) * horizon_frames;
  }
};

struct ScenarioConfig {
  TaskSpec task;
  FrameSchedule schedule;
  int num_bs = 25;
  double area_side_m = 2000.0;
  double bandwidth_hz = 1.0e7;          // W
  double noise_power_w = default_noise_w(1.0e7);
  double peak_power_w = 1.0;            // Pbar
  double compute_rate_lo = 1.0e10;      // cycles/s
  double compute_rate_hi = 2.0e10;
  double control_v = 5000.0;            // V
  double reliability_eps = 1.0e-3;      // epsilon
  double user_speed_mps = 5.0;
  std::uint64_t seed = 1;

  // -174 dBm/Hz thermal noise over the given bandwidth, in watts
  static double default_noise_w(double bandwidth_hz);

  // Throws std::invalid_argument on any violated bound.
  void validate() const;
};

// Slot index sets of frame k: the migration outage slots (first C slots when
// a migration happens, empty otherwise) and the remaining offloadable slots.
struct SlotIndexSets {
  std::int64_t migration_begin = 0;  // [migration_begin, migration_end)
  std::int64_t migration_end = 0;
  std::int64_t offload_begin = 0;    // [offload_begin, offload_end)
  std::int64_t offload_end = 0;

  std::int64_t migration_count() const { return migration_end - migration_begin; }
  bool in_migration(std::int64_t t) const {
    return t >= migration_begin && t < migration_end;
  }
};

SlotIndexSets slot_index_sets(const FrameSchedule& schedule, std::int64_t frame,
                              bool migrated);

// Named substreams derived from one master seed. All draws are counter-based:
// independent of evaluation order and of how many other streams exist.
class RngStreams {
 public:
  explicit RngStreams(std::uint64_t master_seed) : seed_(master_seed) {}

  // Bernoulli(rho) task arrival at slot t
  bool arrival(std::int64_t slot, double rho) const {
    return rng::bernoulli(rng::derive(seed_, kArrival, 0, slot), rho);
  }

  // Unit-mean exponential small-scale fading toward BS n at slot t
  double small_scale(int bs, std::int64_t slot) const {
    return rng::exp1(rng::derive(seed_, kFading, bs, slot));
  }

  // Per-frame compute rate of BS n, uniform in [lo, hi]
  double compute_rate(int bs, std::int64_t frame, double lo, double hi) const {
    return rng::uniform(rng::derive(seed_, kCompute, bs, frame), lo, hi);
  }

  // Seed for the sequential mobility stream (waypoint draws)
  std::uint64_t mobility_seed() const { return rng::derive(seed_, kMobility); }

  // Independent streams for user i of a multiuser run
  RngStreams for_user(int user) const {
    return RngStreams(rng::derive(seed_, kUser, user));
  }

  // Master seed for replication r of a sweep/experiment
  static std::uint64_t replication_seed(std::uint64_t seed, int replication) {
    return rng::derive(seed, kReplication, replication);
  }

  std::uint64_t seed() const { return seed_; }

 private:
  enum Tag : std::uint64_t {
    kArrival = 1,
    kFading = 2,
    kCompute = 3,
    kMobility = 4,
    kUser = 5,
    kReplication = 6,
  };

  std::uint64_t seed_;
};

}  // namespace mecsim

#endif  // MECSIM_SCENARIO_HPP
