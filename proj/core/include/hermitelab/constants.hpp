#ifndef HERMITELAB_CONSTANTS_HPP
#define HERMITELAB_CONSTANTS_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "hermitelab/chaos.hpp"
#include "hermitelab/fgn.hpp"
#include "hermitelab/hermite.hpp"
#include "hermitelab/kernel.hpp"

namespace hermitelab {

enum class ConstantMethod { ClosedForm, Quadrature, MonteCarlo };

const char* to_string(ConstantMethod m);

struct ConstantResult {
    double value = 0.0;
    double abs_error = 0.0;  // estimate; >= 0
    ConstantMethod method = ConstantMethod::ClosedForm;
    std::string inputs;                 // human-readable digest of the inputs
    std::optional<std::uint64_t> seed;  // Monte Carlo results only

    bool agrees_with(const ConstantResult& o) const {
        double tol = 3.0 * (abs_error + o.abs_error);
        double d = value - o.value;
        return (d < 0 ? -d : d) <= tol;
    }
};

// Normalization constant of the Hermite process, Var(Z(1)) = 1:
// c^2 = H(2H-1) / (q! B(H0 - 1/2, 2 - 2H0)^q), via log-Gamma.
ConstantResult c_hq(const HurstSpec& spec);

// Independent oracle for c_hq: evaluates the Beta factor and the variance
// double integral int_{[0,1]^2} |s-s'|^{2H-2} by quadrature.
ConstantResult c_hq_quadrature(const HurstSpec& spec);

// int_0^infty x(v) dv
ConstantResult kernel_integral(const Kernel& x);

// K_{x,alpha,H0} = int_{R_+^n} prod_k x(v_k) prod_{i<j} |v_i - v_j|^{(2H0-2) a_ij} dv.
// Adaptive quadrature for n <= 3, importance-sampled Monte Carlo (exponential
// proposal matched to the kernel's decay) for n >= 4.  The HLS admissibility
// precondition is enforced; force_mc requests the Monte Carlo path for small n
// (dual-method cross-checks).
ConstantResult k_x_alpha(const Kernel& x, const ContractionIndex& alpha, const HurstSpec& spec,
                         std::uint64_t seed = 2026, std::size_t mc_samples = 200000,
                         bool force_mc = false);

// The Remark-1.3 limit constants for S_T with P(X), X the x-moving average of
// Z^{H,q}:
//   K1 = sum_{n>=3 odd} a_n c_{H,q}^n sum_{alpha: m=1} C_alpha K_{x,alpha} / c_{H0,1}
//   K2 = sum_{n>=2}     a_n c_{H,q}^n sum_{alpha: m=2} C_alpha K_{x,alpha} / c_{2H0-1,2}
//        + a_1 1{q=2} int x
// with a_n the power-basis coefficients of P.
struct LimitConstants {
    ConstantResult k1;
    ConstantResult k2;
};

LimitConstants limit_constants(const Polynomial& p, const Kernel& x, const HurstSpec& spec,
                               std::uint64_t seed = 2026);

// Stationary covariance of the exponential moving average of fBm (the
// fractional Ornstein-Uhlenbeck stationary solution):
// rho(s) = H(2H-1) int int x(a) x(b) |s-a+b|^{2H-2} da db, x = e^{-alpha y}.
ConstantResult fou_covariance(double H, double alpha, double s);

// Same covariance for a general moving-average kernel.
ConstantResult ma_covariance(const Kernel& x, double H, double s);

// Breuer-Major long-run variance for q = 1, H < 1 - 1/(2d):
// sigma^2 = sum_{k>=d} k! b_k^2 * 2 int_0^infty rho(s)^k ds,
// with b_k the Hermite coefficients of P at variance rho(0).
ConstantResult breuer_major_sigma(const Polynomial& p, const Kernel& x, const HurstSpec& spec);

// Critical-case constant a_d sqrt(d! 3/(16 alpha^2)) at H = 1 - 1/(2d)
// (informational).
ConstantResult fou_critical_constant(double a_d, int d, double alpha);

} // namespace hermitelab

#endif
