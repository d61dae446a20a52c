#include "vqaa/optimizer.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace vqaa {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kMinRadius = 1e-12;
}  // namespace

double wrap_angle(double a) {
  a = std::fmod(a, 2.0 * kPi);
  if (a > kPi) a -= 2.0 * kPi;
  if (a <= -kPi) a += 2.0 * kPi;
  return a;
}

std::vector<double> estimate_gradient(const CostFn& cost_at,
                                      std::span<const double> params,
                                      double base_cost, double fd_step,
                                      MeasurementCounter& counter) {
  std::vector<double> probe(params.begin(), params.end());
  std::vector<double> grad(params.size());
  for (size_t i = 0; i < params.size(); ++i) {
    double saved = probe[i];
    probe[i] = saved + fd_step;
    double c = cost_at(probe);
    ++counter.total_measurements;
    grad[i] = (c - base_cost) / fd_step;
    probe[i] = saved;
  }
  return grad;
}

std::vector<double> gd_step(std::span<const double> params,
                            std::span<const double> gradient, double learning_rate) {
  if (params.size() != gradient.size())
    throw std::invalid_argument("gradient length mismatch");
  std::vector<double> out(params.size());
  for (size_t i = 0; i < params.size(); ++i)
    out[i] = wrap_angle(params[i] - learning_rate * gradient[i]);
  return out;
}

void to_hyperspherical(std::span<const double> point, double& r,
                       std::vector<double>& angles) {
  size_t dim = point.size();
  if (dim < 2) throw std::invalid_argument("need at least 2 coordinates");
  double sq = 0.0;
  for (double x : point) sq += x * x;
  r = std::sqrt(sq);
  if (r == 0.0) throw std::invalid_argument("angles undefined at the origin");
  angles.assign(dim - 1, 0.0);
  double tail = sq;  // sum of squares of point[k..]
  for (size_t k = 0; k + 2 < dim; ++k) {
    double rest = std::sqrt(std::max(tail - point[k] * point[k], 0.0));
    angles[k] = std::atan2(rest, point[k]);  // [0, pi]
    tail -= point[k] * point[k];
  }
  angles[dim - 2] = std::atan2(point[dim - 1], point[dim - 2]);  // (-pi, pi]
}

std::vector<double> from_hyperspherical(double r, std::span<const double> angles) {
  std::vector<double> point(angles.size() + 1);
  double running = r;
  for (size_t k = 0; k < angles.size(); ++k) {
    point[k] = running * std::cos(angles[k]);
    running *= std::sin(angles[k]);
  }
  point[angles.size()] = running;
  return point;
}

std::vector<double> gradient_descent_step(std::span<const double> params,
                                          double sampled_cost, const CostFn& cost_at,
                                          const OptimizerConfig& config,
                                          MeasurementCounter& counter) {
  auto grad = estimate_gradient(cost_at, params, sampled_cost, config.fd_step, counter);
  return gd_step(params, grad, config.learning_rate);
}

std::vector<double> hyperspherical_step(std::span<const double> params,
                                        double sampled_cost, const CostFn& cost_at,
                                        const OptimizerConfig& config,
                                        MeasurementCounter& counter) {
  size_t n = params.size();
  if (sampled_cost == 0.0) return {params.begin(), params.end()};
  std::vector<double> lifted(params.begin(), params.end());
  lifted.push_back(sampled_cost);
  double sq = 0.0;
  for (double x : lifted) sq += x * x;
  if (sq < kMinRadius * kMinRadius)
    return gradient_descent_step(params, sampled_cost, cost_at, config, counter);

  double r;
  std::vector<double> angles;
  to_hyperspherical(lifted, r, angles);

  std::vector<double> grad(n, 0.0);
  std::vector<double> probe_angles = angles;
  for (size_t i = 0; i < n; ++i) {
    double saved = probe_angles[i];
    probe_angles[i] = saved + config.fd_step;
    std::vector<double> cart = from_hyperspherical(r, probe_angles);
    cart.pop_back();  // cost coordinate is not an input
    double c = cost_at(cart);
    ++counter.total_measurements;
    grad[i] = (c - sampled_cost) / config.fd_step;
    probe_angles[i] = saved;
  }
  std::vector<double> cart_r = from_hyperspherical(r + config.fd_step, angles);
  cart_r.pop_back();
  double c_r = cost_at(cart_r);
  ++counter.total_measurements;
  double grad_r = (c_r - sampled_cost) / config.fd_step;

  for (size_t i = 0; i < n; ++i) angles[i] -= config.learning_rate * grad[i];
  r = std::max(r - config.learning_rate * grad_r, kMinRadius);

  std::vector<double> updated = from_hyperspherical(r, angles);
  std::vector<double> out(n);
  for (size_t i = 0; i < n; ++i) out[i] = wrap_angle(updated[i]);
  return out;
}

std::vector<double> plane_rotation_step(std::span<const double> params,
                                        double sampled_cost, const CostFn& cost_at,
                                        const OptimizerConfig& config,
                                        MeasurementCounter& counter, RngStream& rng) {
  size_t n = params.size();
  size_t axis = rng.below(n);
  double c = std::cos(config.rotation_angle);
  double s = std::sin(config.rotation_angle);

  // Lifted point and its image under the (axis, cost-axis) plane rotation.
  std::vector<double> x(params.begin(), params.end());
  x.push_back(sampled_cost);
  std::vector<double> y = x;
  y[axis] = c * x[axis] + s * x[n];
  y[n] = -s * x[axis] + c * x[n];

  std::vector<double> grad(n, 0.0);
  std::vector<double> probe(n);
  for (size_t j = 0; j < n; ++j) {
    for (size_t k = 0; k < n; ++k) probe[k] = x[k];
    // Step along the rotated frame's j-th basis vector (row j of R).
    probe[j] += (j == axis) ? config.fd_step * c : config.fd_step;
    double cj = cost_at(probe);
    ++counter.total_measurements;
    grad[j] = (cj - sampled_cost) / config.fd_step;
  }

  for (size_t j = 0; j < n; ++j) y[j] -= config.learning_rate * grad[j];
  // Rotate back and drop the cost coordinate.
  std::vector<double> out(n);
  for (size_t j = 0; j < n; ++j) {
    double v = (j == axis) ? c * y[axis] - s * y[n] : y[j];
    out[j] = wrap_angle(v);
  }
  return out;
}

}  // namespace vqaa
