#ifndef MECSIM_CONTROLLER_HPP
#define MECSIM_CONTROLLER_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mecsim/offloading.hpp"
#include "mecsim/scenario.hpp"

namespace mecsim {

// Reliability-debt queue: grows by 1 - eps on a failure, drains by eps
// otherwise, clamped at zero.
double queue_update(double queue, bool failed, double eps);

// Per-arrival expected-cost ingredients of one BS-frame. energy_coef is the
// numerator e(k) of the conditional energy term; min_gain is the channel
// threshold below which the task is dropped.
struct FrameCost {
  double energy_coef = 0.0;
  double min_gain = 0.0;
  bool feasible = false;
};

FrameCost frame_cost_terms(const OffloadModel& model, double rate,
                           double queue, double control_v);

// Expected per-arrival cost of one offloadable slot under Rayleigh fading:
//   Z = (V e / H) E1(h_min / H) + Q (1 - exp(-h_min / H)).
// An infeasible rate prices every arrival at the drop cost Q.
double z_frame(const OffloadModel& model, double large_gain, double rate,
               double queue, double control_v);

// Frame-total expected cost: rho T Z when staying, rho (T-C) Z + rho C Q when
// migrating (the outage slots fail every arrival).
double z_frame_sum(double z, double queue, bool same_bs, double arrival_prob,
                   const FrameSchedule& schedule);

struct FrameCostInputs {
  std::span<const double> large_gains;  // H_n(k)
  std::span<const double> rates;        // f_n(k)
  double queue = 0.0;                   // Q(kT)
  double control_v = 0.0;
  int prev_bs = 0;                      // n(k-1)
};

struct FrameDecision {
  int chosen_bs = 0;
  bool migrated = false;
  int candidate_bs = -1;      // best alternative, -1 with a single BS
  std::vector<double> z;      // per-BS per-arrival cost
  std::vector<double> z_sum;  // per-BS frame cost
};

// Exact rule: migrate to the cheapest alternative iff
// (1-alpha) Z_cand + alpha Q < Z_prev. Ties keep the current BS; ties among
// alternatives go to the lowest index. Equals the argmin of z_sum.
FrameDecision migrate_decision(const OffloadModel& model,
                               const FrameCostInputs& inputs,
                               double arrival_prob,
                               const FrameSchedule& schedule);

// Which branch produced a fast-policy decision.
enum class FastRule { kStayThreshold, kMigrateThreshold, kFallback };

struct FastDecision {
  int chosen_bs = 0;
  bool migrated = false;
  int candidate_bs = -1;
  FastRule rule = FastRule::kFallback;
};

// Fast rule for BSs sharing one compute rate: candidate is the strongest
// alternative gain; stay when the serving gain clears h_alpha; migrate when
// the serving gain is dominated per the sufficient test; otherwise defer to
// the exact rule.
FastDecision prop3_policy(const OffloadModel& model,
                          std::span<const double> large_gains,
                          double shared_rate, double queue, double control_v,
                          int prev_bs, double arrival_prob,
                          const FrameSchedule& schedule);

// Fast rule for heterogeneous rates under an effectively unconstrained peak
// power (requires Pbar > Q/(V tb_n) for every BS, else returns nullopt).
// Works on nu_n = h_min_n / H_n.
std::optional<FastDecision> prop4_policy(const OffloadModel& model,
                                         std::span<const double> large_gains,
                                         std::span<const double> rates,
                                         double queue, double control_v,
                                         int prev_bs, double arrival_prob,
                                         const FrameSchedule& schedule);

// Frame-level record of one simulated trajectory.
struct SimTrace {
  std::vector<double> queue_at_frame;  // Q(kT), k = 0..K (K+1 entries)
  std::vector<double> frame_energy_j;
  std::vector<std::int64_t> frame_failures;
  std::vector<std::int64_t> frame_arrivals;
  std::vector<std::uint8_t> migrated;
  std::vector<int> serving_bs;
  std::vector<double> z_chosen;      // cost of the chosen BS
  std::vector<double> z_runner_up;   // cost of the best alternative
  std::vector<double> user_x, user_y;

  int frames() const { return static_cast<int>(frame_energy_j.size()); }
};

// Drift constants and the realized per-frame drift-plus-penalty against the
// bound evaluated on the same trace.
struct DriftDiagnostics {
  double b1 = 0.0;    // (rho + eps^2) / 2
  double b2 = 0.0;    // b1 + (T-1)((1-eps) rho + eps^2) / 2
  double e_max = 0.0; // Pbar * (tau_d - xi / f_hi)
  double control_v = 0.0;
  std::vector<double> drift_plus_penalty;
  std::vector<double> bound_rhs;
  bool bound_holds = true;
  double mean_queue = 0.0;

  // Queue-length bound of the tradeoff theorem for a hypothetical slack.
  double queue_bound_for_slack(double delta) const {
    return (b2 + control_v * e_max) / delta;
  }
};

DriftDiagnostics drift_diagnostics(const SimTrace& trace,
                                   const ScenarioConfig& cfg);

}  // namespace mecsim

#endif  // MECSIM_CONTROLLER_HPP
