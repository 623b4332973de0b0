#ifndef HERMITELAB_QUADRATURE_HPP
#define HERMITELAB_QUADRATURE_HPP

#include <functional>
#include <vector>

namespace hermitelab {

struct QuadResult {
    double value = 0.0;
    double abs_error = 0.0;
    std::size_t evals = 0;

    QuadResult& operator+=(const QuadResult& o) {
        value += o.value;
        abs_error += o.abs_error;
        evals += o.evals;
        return *this;
    }
};

using Integrand = std::function<double(double)>;

// Adaptive Gauss-Kronrod (G7,K15) on [a, b].  Interior nodes only, so
// integrable endpoint singularities are handled by subdivision.
QuadResult integrate(const Integrand& f, double a, double b,
                     double abs_tol = 1e-10, double rel_tol = 1e-9,
                     std::size_t max_segments = 4000);

// Same, with the interval split at the given interior points first
// (known kinks or singularities).
QuadResult integrate_split(const Integrand& f, double a, double b,
                           std::vector<double> split_points,
                           double abs_tol = 1e-10, double rel_tol = 1e-9,
                           std::size_t max_segments = 4000);

// Integral over [a, infinity) via the map t = a + u/(1-u).
QuadResult integrate_half_line(const Integrand& f, double a,
                               double abs_tol = 1e-10, double rel_tol = 1e-9,
                               std::size_t max_segments = 4000);

// Integral over the whole real line.
QuadResult integrate_real_line(const Integrand& f,
                               double abs_tol = 1e-10, double rel_tol = 1e-9,
                               std::size_t max_segments = 4000);

} // namespace hermitelab

#endif
