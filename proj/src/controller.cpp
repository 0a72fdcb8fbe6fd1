#include "mecsim/controller.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mecsim/numerics.hpp"

namespace mecsim {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

double queue_update(double queue, bool failed, double eps) {
  return std::max(queue + (failed ? 1.0 : 0.0) - eps, 0.0);
}

FrameCost frame_cost_terms(const OffloadModel& model, double rate,
                           double queue, double control_v) {
  FrameCost cost;
  const double tb = model.time_budget_s(rate);
  if (tb <= 0.0) {
    cost.min_gain = kInf;
    return cost;  // compute phase alone misses the deadline
  }
  cost.feasible = true;
  const double snr = model.required_snr(rate);
  cost.energy_coef = model.noise_w * tb * snr;
  const double p_max = max_power_w(model, rate, queue, control_v);
  cost.min_gain = p_max > 0.0 ? model.noise_w * snr / p_max : kInf;
  return cost;
}

double z_frame(const OffloadModel& model, double large_gain, double rate,
               double queue, double control_v) {
  const FrameCost cost = frame_cost_terms(model, rate, queue, control_v);
  if (!cost.feasible) return queue;  // every arrival is dropped
  const double ratio = cost.min_gain / large_gain;
  if (std::isinf(ratio)) return queue;
  const double energy_term = control_v * cost.energy_coef / large_gain *
                             exp_integral_e1(ratio);
  return energy_term + queue * (-std::expm1(-ratio));
}

double z_frame_sum(double z, double queue, bool same_bs, double arrival_prob,
                   const FrameSchedule& schedule) {
  const double t = schedule.frame_slots;
  const double c = schedule.migration_slots;
  if (same_bs) return arrival_prob * t * z;
  return arrival_prob * (t - c) * z + arrival_prob * c * queue;
}

FrameDecision migrate_decision(const OffloadModel& model,
                               const FrameCostInputs& inputs,
                               double arrival_prob,
                               const FrameSchedule& schedule) {
  const int n = static_cast<int>(inputs.large_gains.size());
  FrameDecision decision;
  decision.z.resize(n);
  decision.z_sum.resize(n);
  decision.candidate_bs = -1;
  for (int i = 0; i < n; ++i) {
    decision.z[i] = z_frame(model, inputs.large_gains[i], inputs.rates[i],
                            inputs.queue, inputs.control_v);
    decision.z_sum[i] = z_frame_sum(decision.z[i], inputs.queue,
                                    i == inputs.prev_bs, arrival_prob,
                                    schedule);
    if (i != inputs.prev_bs &&
        (decision.candidate_bs < 0 ||
         decision.z[i] < decision.z[decision.candidate_bs])) {
      decision.candidate_bs = i;
    }
  }
  decision.chosen_bs = inputs.prev_bs;
  if (decision.candidate_bs >= 0) {
    const double alpha = schedule.outage_ratio();
    const double switch_cost = (1.0 - alpha) * decision.z[decision.candidate_bs] +
                               alpha * inputs.queue;
    if (switch_cost < decision.z[inputs.prev_bs]) {
      decision.chosen_bs = decision.candidate_bs;
      decision.migrated = true;
    }
  }
  return decision;
}

namespace {

// Best alternative by largest gain, lowest index on ties.
int argmax_gain_excluding(std::span<const double> gains, int excluded) {
  int best = -1;
  for (int i = 0; i < static_cast<int>(gains.size()); ++i) {
    if (i == excluded) continue;
    if (best < 0 || gains[i] > gains[best]) best = i;
  }
  return best;
}

}  // namespace

FastDecision prop3_policy(const OffloadModel& model,
                          std::span<const double> large_gains,
                          double shared_rate, double queue, double control_v,
                          int prev_bs, double arrival_prob,
                          const FrameSchedule& schedule) {
  const int n = static_cast<int>(large_gains.size());
  std::vector<double> rates(n, shared_rate);
  const auto fallback = [&] {
    const FrameDecision exact = migrate_decision(
        model,
        FrameCostInputs{large_gains, rates, queue, control_v, prev_bs},
        arrival_prob, schedule);
    return FastDecision{exact.chosen_bs, exact.migrated, exact.candidate_bs,
                        FastRule::kFallback};
  };

  const int candidate = argmax_gain_excluding(large_gains, prev_bs);
  if (candidate < 0) {
    return FastDecision{prev_bs, false, -1, FastRule::kStayThreshold};
  }
  const FrameCost cost = frame_cost_terms(model, shared_rate, queue, control_v);
  const double alpha = schedule.outage_ratio();
  const double log_term = -std::log1p(-alpha);  // ln(1/(1-alpha))
  if (!cost.feasible || !std::isfinite(cost.min_gain) || log_term <= 0.0) {
    return fallback();  // degenerate: thresholds undefined
  }
  const double h_alpha = cost.min_gain / log_term;
  const double h_prev = large_gains[prev_bs];
  const double h_cand = large_gains[candidate];
  if (h_prev > h_alpha) {
    return FastDecision{prev_bs, false, candidate, FastRule::kStayThreshold};
  }
  const double margin = std::min(h_alpha / (h_alpha + h_cand), 0.5);
  if (h_prev <= h_cand * margin) {
    return FastDecision{candidate, true, candidate,
                        FastRule::kMigrateThreshold};
  }
  return fallback();
}

std::optional<FastDecision> prop4_policy(const OffloadModel& model,
                                         std::span<const double> large_gains,
                                         std::span<const double> rates,
                                         double queue, double control_v,
                                         int prev_bs, double arrival_prob,
                                         const FrameSchedule& schedule) {
  const int n = static_cast<int>(large_gains.size());
  std::vector<double> nu(n);
  for (int i = 0; i < n; ++i) {
    const double tb = model.time_budget_s(rates[i]);
    if (tb <= 0.0) return std::nullopt;  // rate precondition violated
    if (queue > 0.0 &&
        (control_v <= 0.0 ||
         model.peak_power_w <= queue / (control_v * tb))) {
      return std::nullopt;  // peak power binds somewhere
    }
    const FrameCost cost = frame_cost_terms(model, rates[i], queue, control_v);
    nu[i] = cost.min_gain / large_gains[i];
  }

  const auto fallback = [&] {
    const FrameDecision exact = migrate_decision(
        model, FrameCostInputs{large_gains, rates, queue, control_v, prev_bs},
        arrival_prob, schedule);
    return FastDecision{exact.chosen_bs, exact.migrated, exact.candidate_bs,
                        FastRule::kFallback};
  };

  int candidate = -1;
  for (int i = 0; i < n; ++i) {
    if (i == prev_bs) continue;
    if (candidate < 0 || nu[i] < nu[candidate]) candidate = i;
  }
  if (candidate < 0) {
    return FastDecision{prev_bs, false, -1, FastRule::kStayThreshold};
  }
  for (double v : nu) {
    if (!std::isfinite(v)) return fallback();  // Q = 0 degenerates every nu
  }
  const double log_term = -std::log1p(-schedule.outage_ratio());
  if (nu[prev_bs] < log_term) {
    return FastDecision{prev_bs, false, candidate, FastRule::kStayThreshold};
  }
  if (nu[prev_bs] >= std::max(nu[candidate] + log_term, 2.0 * nu[candidate])) {
    return FastDecision{candidate, true, candidate,
                        FastRule::kMigrateThreshold};
  }
  return fallback();
}

DriftDiagnostics drift_diagnostics(const SimTrace& trace,
                                   const ScenarioConfig& cfg) {
  DriftDiagnostics diag;
  const double rho = cfg.task.arrival_prob;
  const double eps = cfg.reliability_eps;
  const int t_slots = cfg.schedule.frame_slots;
  diag.b1 = 0.5 * (rho + eps * eps);
  diag.b2 = diag.b1 + (t_slots - 1) * ((1.0 - eps) * rho + eps * eps) / 2.0;
  diag.e_max =
      cfg.peak_power_w *
      std::max(cfg.task.deadline_s - cfg.task.total_cycles() / cfg.compute_rate_hi,
               0.0);
  diag.control_v = cfg.control_v;

  const int frames = trace.frames();
  diag.drift_plus_penalty.resize(frames);
  diag.bound_rhs.resize(frames);
  double queue_sum = 0.0;
  for (int k = 0; k < frames; ++k) {
    const double q0 = trace.queue_at_frame[k];
    const double q1 = trace.queue_at_frame[k + 1];
    const double penalty = cfg.control_v * trace.frame_energy_j[k];
    diag.drift_plus_penalty[k] = 0.5 * (q1 * q1 - q0 * q0) + penalty;
    diag.bound_rhs[k] =
        diag.b2 * t_slots + penalty +
        q0 * (static_cast<double>(trace.frame_failures[k]) - eps * t_slots);
    if (diag.drift_plus_penalty[k] >
        diag.bound_rhs[k] + 1e-9 * std::abs(diag.bound_rhs[k])) {
      diag.bound_holds = false;
    }
    queue_sum += q0;
  }
  diag.mean_queue = frames > 0 ? queue_sum / frames : 0.0;
  return diag;
}

}  // namespace mecsim
