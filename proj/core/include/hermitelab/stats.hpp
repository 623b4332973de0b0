#ifndef HERMITELAB_STATS_HPP
#define HERMITELAB_STATS_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace hermitelab {

struct Moments {
    std::size_t n = 0;
    double mean = 0.0;
    double variance = 0.0;        // unbiased
    double skewness = 0.0;
    double excess_kurtosis = 0.0;
    double variance_se = 0.0;     // SE of the variance estimate (empirical 4th moment)
};

Moments moments(std::span<const double> xs);

// D'Agostino-Pearson K^2 omnibus normality test; returns the p-value.
double dagostino_pvalue(std::span<const double> xs);

struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double slope_se = 0.0;
};

// Weighted least squares of y on x with weights w (inverse variances).
LineFit wls_fit(std::span<const double> x, std::span<const double> y,
                std::span<const double> w);

} // namespace hermitelab

#endif
