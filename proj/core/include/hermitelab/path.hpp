#ifndef HERMITELAB_PATH_HPP
#define HERMITELAB_PATH_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace hermitelab {

// Uniformly sampled realization.  values[i] is the sample at t0 + i*dt.
// The metadata fields are sufficient to regenerate the path bit-identically.
struct SamplePath {
    double dt = 0.0;
    double t0 = 0.0;
    std::vector<double> values;
    std::uint64_t seed = 0;
    std::uint64_t rng_stream = 0;
    std::string model;  // human-readable generation parameters

    std::size_t size() const { return values.size(); }
    double time_at(std::size_t i) const { return t0 + static_cast<double>(i) * dt; }
    double t_end() const { return values.empty() ? t0 : time_at(values.size() - 1); }

    // Index of the last grid point with time <= t.
    std::size_t index_at(double t) const;
};

void write_csv(const SamplePath& path, const std::string& filename);

// Compact binary: magic, model string, dt/t0/seed/stream header, then
// little-endian 64-bit float payload.
void write_binary(const SamplePath& path, const std::string& filename);
SamplePath read_binary(const std::string& filename);

// Shortest round-trip decimal representation of a double.
std::string format_double(double x);

} // namespace hermitelab

#endif
