#include "mecsim/offloading.hpp"

#include <cmath>

namespace mecsim {

OffloadModel OffloadModel::from_config(const ScenarioConfig& cfg) {
  OffloadModel model;
  model.input_bits = cfg.task.input_bits;
  model.total_cycles = cfg.task.total_cycles();
  model.deadline_s = cfg.task.deadline_s;
  model.bandwidth_hz = cfg.bandwidth_hz;
  model.noise_w = cfg.noise_power_w;
  model.peak_power_w = cfg.peak_power_w;
  return model;
}

double offload_latency_s(const OffloadModel& model, double gain, double rate,
                         double power) {
  const double snr = power * gain / model.noise_w;
  const double tx_rate = model.bandwidth_hz * std::log2(1.0 + snr);
  return model.input_bits / tx_rate + model.total_cycles / rate;
}

double offload_energy_j(const OffloadModel& model, double gain, double power) {
  const double snr = power * gain / model.noise_w;
  const double tx_rate = model.bandwidth_hz * std::log2(1.0 + snr);
  return model.input_bits * power / tx_rate;
}

double min_power_w(const OffloadModel& model, double gain, double rate) {
  return model.noise_w / gain * model.required_snr(rate);
}

double max_power_w(const OffloadModel& model, double rate, double queue_len,
                   double control_v) {
  const double tb = model.time_budget_s(rate);
  if (tb <= 0.0) return 0.0;
  if (queue_len <= 0.0) return 0.0;  // dropping is free, never pay energy
  if (control_v <= 0.0) return model.peak_power_w;
  return std::min(queue_len / (control_v * tb), model.peak_power_w);
}

SlotOutcome optimal_power(const OffloadModel& model,
                          const SlotDecisionContext& ctx) {
  SlotOutcome out;
  if (ctx.during_migration) {
    out.failed = ctx.arrival;  // service interrupted
    return out;
  }
  if (!ctx.arrival) return out;

  const double p_min = min_power_w(model, ctx.gain, ctx.compute_rate);
  const double p_max =
      max_power_w(model, ctx.compute_rate, ctx.queue_len, ctx.control_v);
  if (p_min <= p_max) {
    out.power_w = p_min;
    out.energy_j = offload_energy_j(model, ctx.gain, p_min);
  } else {
    out.failed = true;
    out.dropped = true;
  }
  return out;
}

}  // namespace mecsim
