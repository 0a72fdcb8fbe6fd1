#ifndef MECSIM_OFFLOADING_HPP
#define MECSIM_OFFLOADING_HPP

#include <limits>

#include "mecsim/scenario.hpp"

namespace mecsim {

// Radio and task constants reused by every per-slot computation.
struct OffloadModel {
  double input_bits = 5000.0;    // L
  double total_cycles = 1.32e7;  // xi
  double deadline_s = 0.01;      // tau_d
  double bandwidth_hz = 1.0e7;   // W
  double noise_w = 3.9810717055349695e-14;
  double peak_power_w = 1.0;

  static OffloadModel from_config(const ScenarioConfig& cfg);

  // Transmission time budget deadline - xi/f. Non-positive means the compute
  // phase alone misses the deadline.
  double time_budget_s(double rate) const {
    return deadline_s - total_cycles / rate;
  }

  // SNR needed to push L bits through in the time budget:
  // 2^(L / (W * tb)) - 1. +inf when the budget is gone.
  double required_snr(double rate) const {
    const double tb = time_budget_s(rate);
    if (tb <= 0.0) return std::numeric_limits<double>::infinity();
    return std::exp2(input_bits / (bandwidth_hz * tb)) - 1.0;
  }
};

// Inputs of one slot decision. queue_len is the frame-start queue value that
// prices a dropped task for the whole frame.
struct SlotDecisionContext {
  double gain = 0.0;          // h
  double compute_rate = 0.0;  // f
  double queue_len = 0.0;     // Q(kT)
  double control_v = 0.0;     // V
  bool during_migration = false;
  bool arrival = false;       // a(t)
};

struct SlotOutcome {
  double power_w = 0.0;   // p*
  bool failed = false;    // X(t)
  double energy_j = 0.0;  // energy actually spent
  bool dropped = false;   // arrived task deliberately not offloaded
};

// Offload-plus-compute latency at transmit power p.
double offload_latency_s(const OffloadModel& model, double gain, double rate,
                         double power);

// Transmit energy at power p (power times transmission time).
double offload_energy_j(const OffloadModel& model, double gain, double power);

// Minimum power meeting the deadline; +inf when no power can.
double min_power_w(const OffloadModel& model, double gain, double rate);

// Largest power worth spending on one task: min{Q/(V*tb), Pbar}. Zero when
// the queue is empty or the time budget is gone.
double max_power_w(const OffloadModel& model, double rate, double queue_len,
                   double control_v);

// Threshold rule: transmit at min power when it does not exceed the cap,
// otherwise drop. Migration slots and empty slots spend nothing.
SlotOutcome optimal_power(const OffloadModel& model,
                          const SlotDecisionContext& ctx);

}  // namespace mecsim

#endif  // MECSIM_OFFLOADING_HPP
