#ifndef HERMITELAB_PROCESS_HPP
#define HERMITELAB_PROCESS_HPP

#include <cstdint>

#include "hermitelab/fgn.hpp"
#include "hermitelab/kernel.hpp"
#include "hermitelab/path.hpp"

namespace hermitelab {

inline constexpr double kDefaultTailTol = 1e-6;

// Pilot streams live in their own region of the stream space so they can
// never collide with user replications.
inline constexpr std::uint64_t kPilotStreamBase = 1ULL << 62;

// Variance-normalization constant for the Hermite-variation approximation
// at the given per-unit-time resolution: 1/sqrt(Var-hat(Z(1))) estimated
// over pilot_reps Monte Carlo replications on dedicated streams.  Cached.
double hermite_normalization(const HurstSpec& spec, std::size_t n_per_unit,
                             std::size_t pilot_reps, std::uint64_t seed);

// Approximate Hermite process path on [0, t_max], Z(0) = 0, n_grid+1 output
// points, built from the normalized Hermite-variation sum of H_q applied to
// a stationary Gaussian sequence of Hurst index H0 with n_internal points.
// q = 1 bypasses the approximation and returns exact fBm.
// normalization = 0 requests the cached pilot estimate.
SamplePath hermite_path(const HurstSpec& spec, std::size_t n_grid, double t_max,
                        std::size_t n_internal, std::uint64_t seed, std::uint64_t stream,
                        double normalization = 0.0, std::size_t pilot_reps = 200);

// Discretized causal filter X(t_j) = sum_{u_i <= t_j} x(t_j - u_i) dZ(u_i)
// over the truncation window [0, M].  Z is a level path that must cover
// [-(M + burn_in), t_max]; the output starts at time 0.
SamplePath moving_average(const SamplePath& z, const Kernel& x, double truncation,
                          double burn_in, double tail_tol = kDefaultTailTol);

// Hermite-Ornstein-Uhlenbeck path: hermite_path composed with the
// exponential kernel; truncation and burn-in auto-selected from alpha.
// n_per_unit is the internal Hermite-sum resolution per unit time
// (0 selects a default of 8 grid points per output step).
SamplePath hou_path(const HurstSpec& spec, double alpha, std::size_t n_grid, double t_max,
                    std::uint64_t seed, std::uint64_t stream, std::size_t n_per_unit = 0);

} // namespace hermitelab

#endif
