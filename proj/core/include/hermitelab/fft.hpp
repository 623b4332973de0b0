#ifndef HERMITELAB_FFT_HPP
#define HERMITELAB_FFT_HPP

#include <complex>
#include <cstddef>
#include <vector>

namespace hermitelab {

// In-place iterative radix-2 FFT; data.size() must be a power of two.
void fft(std::vector<std::complex<double>>& data, bool inverse = false);

inline std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

} // namespace hermitelab

#endif
