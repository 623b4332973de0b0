#include "hermitelab/stats.hpp"

#include <cmath>
#include <stdexcept>

namespace hermitelab {

Moments moments(std::span<const double> xs) {
    Moments m;
    m.n = xs.size();
    if (m.n < 2) throw std::invalid_argument("moments: need at least 2 samples");
    double sum = 0.0;
    for (double x : xs) sum += x;
    m.mean = sum / static_cast<double>(m.n);
    double m2 = 0.0, m3 = 0.0, m4 = 0.0;
    for (double x : xs) {
        double d = x - m.mean;
        double d2 = d * d;
        m2 += d2;
        m3 += d2 * d;
        m4 += d2 * d2;
    }
    double n = static_cast<double>(m.n);
    m2 /= n;
    m3 /= n;
    m4 /= n;
    m.variance = m2 * n / (n - 1.0);
    if (m2 > 0) {
        m.skewness = m3 / std::pow(m2, 1.5);
        m.excess_kurtosis = m4 / (m2 * m2) - 3.0;
        // SE of the (biased-corrected) variance via the empirical fourth moment.
        m.variance_se = std::sqrt(std::max(0.0, m4 - m2 * m2) / n);
    }
    return m;
}

double dagostino_pvalue(std::span<const double> xs) {
    const auto m = moments(xs);
    const double n = static_cast<double>(m.n);
    if (m.n < 20) throw std::invalid_argument("dagostino_pvalue: need at least 20 samples");

    // Skewness transform (D'Agostino 1970).
    double g1 = m.skewness;
    double y = g1 * std::sqrt((n + 1.0) * (n + 3.0) / (6.0 * (n - 2.0)));
    double beta2 = 3.0 * (n * n + 27.0 * n - 70.0) * (n + 1.0) * (n + 3.0) /
                   ((n - 2.0) * (n + 5.0) * (n + 7.0) * (n + 9.0));
    double w2 = -1.0 + std::sqrt(2.0 * (beta2 - 1.0));
    double delta = 1.0 / std::sqrt(0.5 * std::log(w2));
    double alpha = std::sqrt(2.0 / (w2 - 1.0));
    double ya = y / alpha;
    double z1 = delta * std::log(ya + std::sqrt(ya * ya + 1.0));

    // Kurtosis transform (Anscombe-Glynn 1983).
    double g2 = m.excess_kurtosis;
    double eb2 = -6.0 / (n + 1.0);
    double vb2 = 24.0 * n * (n - 2.0) * (n - 3.0) / ((n + 1.0) * (n + 1.0) * (n + 3.0) * (n + 5.0));
    double xx = (g2 - eb2) / std::sqrt(vb2);
    double sb = 6.0 * (n * n - 5.0 * n + 2.0) / ((n + 7.0) * (n + 9.0)) *
                std::sqrt(6.0 * (n + 3.0) * (n + 5.0) / (n * (n - 2.0) * (n - 3.0)));
    double a = 6.0 + 8.0 / sb * (2.0 / sb + std::sqrt(1.0 + 4.0 / (sb * sb)));
    double t = (1.0 - 2.0 / (9.0 * a)) -
               std::cbrt((1.0 - 2.0 / a) / (1.0 + xx * std::sqrt(2.0 / (a - 4.0))));
    double z2 = t / std::sqrt(2.0 / (9.0 * a));

    double k2 = z1 * z1 + z2 * z2;
    return std::exp(-0.5 * k2);  // chi-squared(2) survival function
}

LineFit wls_fit(std::span<const double> x, std::span<const double> y,
                std::span<const double> w) {
    if (x.size() != y.size() || x.size() != w.size() || x.size() < 2)
        throw std::invalid_argument("wls_fit: need matching arrays with >= 2 points");
    double sw = 0, swx = 0, swy = 0, swxx = 0, swxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sw += w[i];
        swx += w[i] * x[i];
        swy += w[i] * y[i];
        swxx += w[i] * x[i] * x[i];
        swxy += w[i] * x[i] * y[i];
    }
    double det = sw * swxx - swx * swx;
    if (det <= 0) throw std::runtime_error("wls_fit: degenerate design");
    LineFit fit;
    fit.slope = (sw * swxy - swx * swy) / det;
    fit.intercept = (swxx * swy - swx * swxy) / det;
    fit.slope_se = std::sqrt(sw / det);
    return fit;
}

} // namespace hermitelab
