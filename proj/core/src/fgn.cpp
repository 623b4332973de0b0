#include "hermitelab/fgn.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "hermitelab/fft.hpp"
#include "hermitelab/rng.hpp"

namespace hermitelab {

void HurstSpec::validate() const {
    if (q < 1) throw std::invalid_argument("HurstSpec: q must be >= 1");
    if (!(H > 0.5 && H < 1.0)) throw std::invalid_argument("HurstSpec: H must lie in (1/2, 1)");
}

double fgn_autocovariance(double h0, double dt, long k) {
    double ak = std::abs(static_cast<double>(k));
    double g = 0.5 * (std::pow(ak + 1.0, 2.0 * h0) - 2.0 * std::pow(ak, 2.0 * h0) +
                      std::pow(std::abs(ak - 1.0), 2.0 * h0));
    return g * std::pow(dt, 2.0 * h0);
}

namespace {

// Circulant eigenvalues for unit-step fGn, embedding size 2N.  Cached per
// (h0, N); read-mostly after warmup.
std::shared_ptr<const std::vector<double>> circulant_eigenvalues(double h0, std::size_t N) {
    static std::mutex mu;
    static std::map<std::pair<double, std::size_t>, std::shared_ptr<const std::vector<double>>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find({h0, N});
        if (it != cache.end()) return it->second;
    }

    std::vector<std::complex<double>> c(2 * N);
    for (std::size_t j = 0; j <= N; ++j) c[j] = fgn_autocovariance(h0, 1.0, static_cast<long>(j));
    for (std::size_t j = 1; j < N; ++j) c[2 * N - j] = c[j];
    fft(c);

    auto lam = std::make_shared<std::vector<double>>(2 * N);
    double min_lam = 0.0;
    for (std::size_t j = 0; j < 2 * N; ++j) {
        (*lam)[j] = c[j].real();
        min_lam = std::min(min_lam, (*lam)[j]);
    }
    // fGn embeddings are nonneg definite for H in (1/2,1); clamp FFT round-off.
    if (min_lam < -1e-8 * (*lam)[0])
        throw std::runtime_error("fgn: circulant embedding not nonnegative definite");
    for (auto& l : *lam) l = std::max(l, 0.0);

    std::lock_guard<std::mutex> lock(mu);
    cache[{h0, N}] = lam;
    return lam;
}

} // namespace

SamplePath fgn(double h0, std::size_t n, double dt, std::uint64_t seed, std::uint64_t stream) {
    if (!(h0 > 0.0 && h0 < 1.0)) throw std::invalid_argument("fgn: H0 must lie in (0,1)");
    if (n < 2 || !(dt > 0)) throw std::invalid_argument("fgn: need n >= 2 and dt > 0");

    SamplePath path;
    path.dt = dt;
    path.seed = seed;
    path.rng_stream = stream;
    {
        std::ostringstream os;
        os << "fgn(H0=" << h0 << ",n=" << n << ",dt=" << dt << ")";
        path.model = os.str();
    }
    path.values.resize(n);

    RngStream rng(seed, stream);

    if (std::abs(h0 - 0.5) < 1e-14) {
        double sd = std::pow(dt, h0);
        for (auto& v : path.values) v = sd * rng.next_gaussian();
        return path;
    }

    const std::size_t N = next_pow2(n);
    const std::size_t M = 2 * N;
    auto lam = circulant_eigenvalues(h0, N);

    std::vector<std::complex<double>> w(M);
    const double invM = 1.0 / static_cast<double>(M);
    w[0] = std::sqrt((*lam)[0] * invM) * rng.next_gaussian();
    w[N] = std::sqrt((*lam)[N] * invM) * rng.next_gaussian();
    for (std::size_t j = 1; j < N; ++j) {
        double s = std::sqrt(0.5 * (*lam)[j] * invM);
        double re = rng.next_gaussian();
        double im = rng.next_gaussian();
        w[j] = std::complex<double>(s * re, s * im);
        w[M - j] = std::conj(w[j]);
    }
    fft(w);

    const double scale = std::pow(dt, h0);
    for (std::size_t i = 0; i < n; ++i) path.values[i] = scale * w[i].real();
    return path;
}

} // namespace hermitelab
