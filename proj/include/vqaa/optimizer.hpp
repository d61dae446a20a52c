#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "vqaa/rng.hpp"

namespace vqaa {

enum class OptMethod { GradientDescent, Hyperspherical, PlaneRotation };

struct OptimizerConfig {
  OptMethod method = OptMethod::Hyperspherical;
  double learning_rate = 0.5;
  double fd_step = 3.0;                // radians
  double rotation_angle = 0.5;         // PlaneRotation only
  std::uint64_t max_iterations = 512;
};

// One measurement = one stochastic cost evaluation (key decode plus one
// classical target evaluation). Totals follow the iterations-times-probes
// convention; the per-iteration base sample is not re-counted.
struct MeasurementCounter {
  std::uint64_t total_measurements = 0;
  std::uint64_t iterations = 0;
};

using CostFn = std::function<double(std::span<const double>)>;

double wrap_angle(double a);  // to (-pi, pi]

// Forward difference against the already-sampled base cost; one
// measurement per probed parameter.
std::vector<double> estimate_gradient(const CostFn& cost_at,
                                      std::span<const double> params,
                                      double base_cost, double fd_step,
                                      MeasurementCounter& counter);

// params - lr * gradient, wrapped to (-pi, pi].
std::vector<double> gd_step(std::span<const double> params,
                            std::span<const double> gradient, double learning_rate);

// Standard hyperspherical convention: x1 = r cos(a1),
// xk = r cos(ak) prod_{j<k} sin(aj), x_{n+1} = r prod sin(aj);
// a_{1..n-1} in [0, pi], a_n in (-pi, pi].
void to_hyperspherical(std::span<const double> point, double& r,
                       std::vector<double>& angles);
std::vector<double> from_hyperspherical(double r, std::span<const double> angles);

std::vector<double> gradient_descent_step(std::span<const double> params,
                                          double sampled_cost, const CostFn& cost_at,
                                          const OptimizerConfig& config,
                                          MeasurementCounter& counter);

// Lifts (params, cost) to hyperspherical coordinates, descends on the
// angles and the radius, and maps back. cost_at and sampled_cost must
// already be on the lifted scale (cost / output width).
std::vector<double> hyperspherical_step(std::span<const double> params,
                                        double sampled_cost, const CostFn& cost_at,
                                        const OptimizerConfig& config,
                                        MeasurementCounter& counter);

// Rotates one (coordinate, cost-axis) plane, takes a finite-difference
// descent step in the rotated frame, rotates back.
std::vector<double> plane_rotation_step(std::span<const double> params,
                                        double sampled_cost, const CostFn& cost_at,
                                        const OptimizerConfig& config,
                                        MeasurementCounter& counter, RngStream& rng);

}  // namespace vqaa
