#include "hermitelab/process.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "hermitelab/rng.hpp"

namespace hermitelab {

namespace {

// Probabilists' Hermite polynomial H_q(x), unit variance.
double hermite_value(int q, double x) {
    if (q == 0) return 1.0;
    double hm1 = 1.0, h = x;
    for (int k = 1; k < q; ++k) {
        double next = x * h - static_cast<double>(k) * hm1;
        hm1 = h;
        h = next;
    }
    return h;
}

double raw_variation_z1(const HurstSpec& spec, std::size_t n_per_unit,
                        std::uint64_t seed, std::uint64_t stream) {
    SamplePath xi = fgn(spec.h0(), n_per_unit, 1.0, seed, stream);
    double s = 0.0;
    for (double v : xi.values) s += hermite_value(spec.q, v);
    return s * std::pow(static_cast<double>(n_per_unit), -spec.H);
}

} // namespace

double hermite_normalization(const HurstSpec& spec, std::size_t n_per_unit,
                             std::size_t pilot_reps, std::uint64_t seed) {
    spec.validate();
    if (n_per_unit < 2) throw std::invalid_argument("hermite_normalization: n_per_unit too small");
    if (pilot_reps < 2) throw std::invalid_argument("hermite_normalization: need pilot_reps >= 2");

    using Key = std::tuple<int, double, std::size_t, std::size_t, std::uint64_t>;
    static std::mutex mu;
    static std::map<Key, double> cache;
    Key key{spec.q, spec.H, n_per_unit, pilot_reps, seed};
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }

    // Z(1) is centered for q >= 2, so the second moment is the variance.
    double sumsq = 0.0;
    for (std::size_t r = 0; r < pilot_reps; ++r) {
        double z = raw_variation_z1(spec, n_per_unit, seed, kPilotStreamBase + r);
        sumsq += z * z;
    }
    double var = sumsq / static_cast<double>(pilot_reps);
    if (!(var > 0)) throw std::runtime_error("hermite_normalization: degenerate pilot variance");
    double norm = 1.0 / std::sqrt(var);

    std::lock_guard<std::mutex> lock(mu);
    cache[key] = norm;
    return norm;
}

SamplePath hermite_path(const HurstSpec& spec, std::size_t n_grid, double t_max,
                        std::size_t n_internal, std::uint64_t seed, std::uint64_t stream,
                        double normalization, std::size_t pilot_reps) {
    spec.validate();
    if (n_grid < 2 || !(t_max > 0)) throw std::invalid_argument("hermite_path: bad grid");
    if (n_internal < n_grid) throw std::invalid_argument("hermite_path: n_internal below n_grid");

    const double dt_out = t_max / static_cast<double>(n_grid);

    if (spec.q == 1) {
        SamplePath incr = fgn(spec.H, n_grid, dt_out, seed, stream);
        SamplePath z;
        z.dt = dt_out;
        z.seed = seed;
        z.rng_stream = stream;
        z.values.resize(n_grid + 1);
        z.values[0] = 0.0;
        for (std::size_t i = 0; i < n_grid; ++i) z.values[i + 1] = z.values[i] + incr.values[i];
        std::ostringstream os;
        os << "fbm(H=" << spec.H << ",n=" << n_grid << ",t_max=" << t_max << ")";
        z.model = os.str();
        return z;
    }

    const double n_per_unit = static_cast<double>(n_internal) / t_max;
    if (normalization == 0.0) {
        auto pilot_n = static_cast<std::size_t>(std::llround(n_per_unit));
        normalization = hermite_normalization(spec, pilot_n, pilot_reps, seed);
    }

    SamplePath xi = fgn(spec.h0(), n_internal, 1.0, seed, stream);
    const double scale = normalization * std::pow(n_per_unit, -spec.H);

    SamplePath z;
    z.dt = dt_out;
    z.seed = seed;
    z.rng_stream = stream;
    z.values.resize(n_grid + 1);
    z.values[0] = 0.0;
    double run = 0.0;
    std::size_t next_out = 1;
    for (std::size_t i = 0; i < n_internal; ++i) {
        run += hermite_value(spec.q, xi.values[i]);
        // emit output point when we cross its internal index
        while (next_out <= n_grid &&
               i + 1 >= static_cast<std::size_t>(std::llround(
                            static_cast<double>(next_out) * static_cast<double>(n_internal) /
                            static_cast<double>(n_grid)))) {
            z.values[next_out] = scale * run;
            ++next_out;
        }
    }
    while (next_out <= n_grid) z.values[next_out++] = scale * run;

    std::ostringstream os;
    os << "hermite(q=" << spec.q << ",H=" << spec.H << ",n=" << n_grid
       << ",n_internal=" << n_internal << ",t_max=" << t_max << ",norm=" << normalization << ")";
    z.model = os.str();
    return z;
}

SamplePath moving_average(const SamplePath& z, const Kernel& x, double truncation,
                          double burn_in, double tail_tol) {
    if (z.values.size() < 2) throw std::invalid_argument("moving_average: path too short");
    if (!(truncation > 0) || burn_in < 0) throw std::invalid_argument("moving_average: bad window");
    double tail = x.tail_mass(truncation);
    if (tail > tail_tol) {
        std::ostringstream os;
        os << "moving_average: kernel tail mass " << tail << " beyond M=" << truncation
           << " exceeds tolerance " << tail_tol << "; suggested M=" << x.truncation_for(tail_tol);
        throw std::invalid_argument(os.str());
    }

    const double dt = z.dt;
    if (z.t0 > -(truncation + burn_in) + 0.5 * dt) {
        throw std::invalid_argument("moving_average: Z does not cover [-(M + burn_in), t_max]");
    }
    const auto K = static_cast<std::size_t>(std::llround(truncation / dt));
    if (K < 1) throw std::invalid_argument("moving_average: truncation below grid step");

    std::vector<double> w(K);
    for (std::size_t k = 0; k < K; ++k) w[k] = x((static_cast<double>(k) + 0.5) * dt);

    const auto j0 = static_cast<std::size_t>(std::llround(-z.t0 / dt));
    if (j0 < K || j0 >= z.values.size())
        throw std::invalid_argument("moving_average: insufficient pre-history in Z");

    const std::size_t n_out = z.values.size() - j0;
    SamplePath out;
    out.dt = dt;
    out.t0 = 0.0;
    out.seed = z.seed;
    out.rng_stream = z.rng_stream;
    out.values.resize(n_out);
    for (std::size_t j = 0; j < n_out; ++j) {
        const std::size_t jz = j0 + j;  // index of time j*dt in z
        double acc = 0.0;
        for (std::size_t k = 0; k < K; ++k) {
            const std::size_t i = jz - 1 - k;  // increment [i*dt, (i+1)*dt) relative to z
            acc += w[k] * (z.values[i + 1] - z.values[i]);
        }
        out.values[j] = acc;
    }
    out.model = "ma(" + x.describe() + ",M=" + std::to_string(truncation) + ") o " + z.model;
    return out;
}

SamplePath hou_path(const HurstSpec& spec, double alpha, std::size_t n_grid, double t_max,
                    std::uint64_t seed, std::uint64_t stream, std::size_t n_per_unit) {
    spec.validate();
    if (!(alpha > 0)) throw std::invalid_argument("hou_path: alpha must be positive");
    Kernel x = Kernel::exponential(alpha);
    const double M = x.truncation_for(kDefaultTailTol);
    const double burn = M;
    const double dt = t_max / static_cast<double>(n_grid);

    const auto n_pre = static_cast<std::size_t>(std::ceil((M + burn) / dt));
    const std::size_t n_z = n_grid + n_pre;
    const double span = static_cast<double>(n_z) * dt;

    SamplePath z;
    if (spec.q == 1) {
        z = hermite_path(spec, n_z, span, n_z, seed, stream);
    } else {
        if (n_per_unit == 0)
            n_per_unit = static_cast<std::size_t>(std::ceil(8.0 / dt));
        auto n_internal = static_cast<std::size_t>(std::ceil(span * static_cast<double>(n_per_unit)));
        z = hermite_path(spec, n_z, span, n_internal, seed, stream);
    }
    z.t0 = -static_cast<double>(n_pre) * dt;
    return moving_average(z, x, M, burn);
}

} // namespace hermitelab
