#ifndef HERMITELAB_RNG_HPP
#define HERMITELAB_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>

namespace hermitelab {

// Counter-based seeding: every (seed, stream) pair owns an independent
// generator, so replications parallelize by stream index without any shared
// state.  Gaussians come from our own Box-Muller so that output does not
// depend on the standard library's normal_distribution implementation.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream) {
        // SplitMix64 over the pair; two rounds decorrelate nearby streams.
        std::uint64_t z = seed * 0x9E3779B97F4A7C15ULL + stream;
        gen_.seed(mix(mix(z)) ^ mix(stream + 0x632BE59BD9B4E019ULL));
    }

    std::uint64_t next_u64() { return gen_(); }

    // Uniform in (0, 1).
    double next_uniform() {
        return (static_cast<double>(gen_() >> 11) + 0.5) * (1.0 / 9007199254740992.0);
    }

    double next_gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = next_uniform();
        double u2 = next_uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double c = std::cos(6.283185307179586476925286766559 * u2);
        double s = std::sin(6.283185307179586476925286766559 * u2);
        spare_ = r * s;
        have_spare_ = true;
        return r * c;
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9E3779B97F4A7C15ULL;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::mt19937_64 gen_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

} // namespace hermitelab

#endif
