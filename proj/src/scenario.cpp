#include "mecsim/scenario.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace mecsim {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument("scenario: " + what);
}

}  // namespace

double ScenarioConfig::default_noise_w(double bandwidth_hz) {
  // -174 dBm/Hz -> watts/Hz, times bandwidth
  return std::pow(10.0, (-174.0 - 30.0) / 10.0) * bandwidth_hz;
}

void ScenarioConfig::validate() const {
  require(task.input_bits > 0, "input_bits must be > 0");
  require(task.cycles_per_bit > 0, "cycles_per_bit must be > 0");
  require(task.deadline_s > 0, "deadline_s must be > 0");
  require(task.deadline_s <= schedule.slot_len_s + 1e-12,
          "deadline_s must not exceed slot_len_s");
  require(task.arrival_prob >= 0 && task.arrival_prob <= 1,
          "arrival_prob must be in [0, 1]");
  require(schedule.slot_len_s > 0, "slot_len_s must be > 0");
  require(schedule.frame_slots >= 1, "frame_slots must be >= 1");
  require(schedule.migration_slots >= 0 &&
              schedule.migration_slots < schedule.frame_slots,
          "migration_slots must satisfy 0 <= C < T");
  require(schedule.horizon_frames >= 1, "horizon_frames must be >= 1");
  require(num_bs >= 1, "num_bs must be >= 1");
  require(area_side_m > 0, "area_side_m must be > 0");
  require(bandwidth_hz > 0, "bandwidth_hz must be > 0");
  require(noise_power_w > 0, "noise_power_w must be > 0");
  require(peak_power_w > 0, "peak_power_w must be > 0");
  require(compute_rate_lo > 0 && compute_rate_lo <= compute_rate_hi,
          "compute rates must satisfy 0 < lo <= hi");
  require(control_v >= 0, "control_v must be >= 0");
  require(reliability_eps > 0 && reliability_eps < 1,
          "reliability_eps must be in (0, 1)");
  require(user_speed_mps > 0, "user_speed_mps must be > 0");
}

SlotIndexSets slot_index_sets(const FrameSchedule& schedule, std::int64_t frame,
                              bool migrated) {
  const std::int64_t start = frame * schedule.frame_slots;
  const std::int64_t end = start + schedule.frame_slots;
  SlotIndexSets sets;
  sets.migration_begin = start;
  sets.migration_end = migrated ? start + schedule.migration_slots : start;
  sets.offload_begin = sets.migration_end;
  sets.offload_end = end;
  return sets;
}

}  // namespace mecsim
