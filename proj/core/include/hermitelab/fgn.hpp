#ifndef HERMITELAB_FGN_HPP
#define HERMITELAB_FGN_HPP

#include <cstdint>

#include "hermitelab/path.hpp"

namespace hermitelab {

// The pair (q, H) and the derived kernel exponent H0 = 1 - (1-H)/q.
struct HurstSpec {
    int q = 1;
    double H = 0.75;

    double h0() const { return 1.0 - (1.0 - H) / static_cast<double>(q); }

    void validate() const;
};

// gamma(k) = dt^{2H0}/2 * (|k+1|^{2H0} - 2|k|^{2H0} + |k-1|^{2H0})
double fgn_autocovariance(double h0, double dt, long k);

// Stationary fractional Gaussian noise of length n, exact in distribution
// via circulant embedding of the covariance.  values[i] is the increment of
// fBm over [i*dt, (i+1)*dt].
SamplePath fgn(double h0, std::size_t n, double dt,
               std::uint64_t seed, std::uint64_t stream);

} // namespace hermitelab

#endif
