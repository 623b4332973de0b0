#include "hermitelab/constants.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "hermitelab/power_counting.hpp"
#include "hermitelab/quadrature.hpp"
#include "hermitelab/rng.hpp"

namespace hermitelab {

namespace {

double rational_to_double(const Rational& r) { return static_cast<double>(r); }

std::string hurst_digest(const HurstSpec& spec) {
    std::ostringstream os;
    os << "q=" << spec.q << ",H=" << spec.H;
    return os.str();
}

// log B(a, b)
double log_beta(double a, double b) { return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b); }

// B(a, b) for a, b in (0, 1) by quadrature, endpoint singularities removed by
// the substitutions t = u^{1/a} and 1 - t = w^{1/b}.
QuadResult beta_quadrature(double a, double b) {
    auto left = integrate(
        [a, b](double u) { return std::pow(1.0 - std::pow(u, 1.0 / a), b - 1.0); }, 0.0,
        std::pow(0.5, a), 1e-12, 1e-10);
    auto right = integrate(
        [a, b](double w) { return std::pow(1.0 - std::pow(w, 1.0 / b), a - 1.0); }, 0.0,
        std::pow(0.5, b), 1e-12, 1e-10);
    QuadResult r;
    r.value = left.value / a + right.value / b;
    r.abs_error = left.abs_error / a + right.abs_error / b;
    r.evals = left.evals + right.evals;
    return r;
}

// Autocorrelation C(u) = int_0^infty x(v) x(v+|u|) dv of a causal kernel.
// Exponential kernels get the closed form amp^2 e^{-alpha u} / (2 alpha).
std::function<double(double)> autocorrelation(const Kernel& x) {
    if (x.kind() == Kernel::Kind::Exponential) {
        double a = x.alpha();
        double c = x.amplitude() * x.amplitude() / (2.0 * a);
        return [a, c](double u) { return c * std::exp(-a * std::abs(u)); };
    }
    double M = x.truncation_for(1e-10);
    return [x, M](double u) {
        double au = std::abs(u);
        return integrate([&x, au](double v) { return x(v) * x(v + au); }, 0.0, M, 1e-11, 1e-8, 600)
            .value;
    };
}

double factorial_d(int n) {
    double f = 1.0;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

} // namespace

const char* to_string(ConstantMethod m) {
    switch (m) {
        case ConstantMethod::ClosedForm: return "CLOSED_FORM";
        case ConstantMethod::Quadrature: return "QUADRATURE";
        case ConstantMethod::MonteCarlo: return "MONTE_CARLO";
    }
    return "?";
}

ConstantResult c_hq(const HurstSpec& spec) {
    spec.validate();
    const double H = spec.H;
    const double h0 = spec.h0();
    double log_c2 = std::log(H * (2.0 * H - 1.0)) - std::lgamma(spec.q + 1.0)
                  - spec.q * log_beta(h0 - 0.5, 2.0 - 2.0 * h0);
    ConstantResult r;
    r.value = std::exp(0.5 * log_c2);
    r.abs_error = 8e-15 * r.value;
    r.method = ConstantMethod::ClosedForm;
    r.inputs = "c_hq(" + hurst_digest(spec) + ")";
    return r;
}

ConstantResult c_hq_quadrature(const HurstSpec& spec) {
    spec.validate();
    const double H = spec.H;
    const double h0 = spec.h0();
    QuadResult beta = beta_quadrature(h0 - 0.5, 2.0 - 2.0 * h0);
    // int_{[0,1]^2} |s-s'|^{2H-2} ds ds' = (2/c) int_0^1 (1 - w^{1/c}) dw, c = 2H-1
    const double c = 2.0 * H - 1.0;
    QuadResult v = integrate([c](double w) { return 1.0 - std::pow(w, 1.0 / c); }, 0.0, 1.0,
                             1e-12, 1e-10);
    double variance_int = 2.0 / c * v.value;
    // Var(Z(1)) = c^2 q! B^q * variance_int = 1
    double inv_c2 = factorial_d(spec.q) * std::pow(beta.value, spec.q) * variance_int;
    ConstantResult r;
    r.value = 1.0 / std::sqrt(inv_c2);
    double rel = spec.q * beta.abs_error / beta.value + 2.0 / c * v.abs_error / variance_int;
    r.abs_error = 0.5 * rel * r.value + 1e-14 * r.value;
    r.method = ConstantMethod::Quadrature;
    r.inputs = "c_hq_quadrature(" + hurst_digest(spec) + ")";
    return r;
}

ConstantResult kernel_integral(const Kernel& x) {
    double M = x.truncation_for(1e-12);
    QuadResult q = integrate([&x](double v) { return x(v); }, 0.0, M, 1e-12, 1e-10);
    ConstantResult r;
    r.value = q.value + x.tail_mass(M);
    r.abs_error = q.abs_error + 1e-12;
    r.method = ConstantMethod::Quadrature;
    r.inputs = "int(" + x.describe() + ")";
    return r;
}

namespace {

ConstantResult k_x_alpha_mc(const Kernel& x, const ContractionIndex& alpha, double p_unit,
                            std::uint64_t seed, std::size_t samples) {
    const int n = alpha.n;
    double lambda;
    if (x.kind() == Kernel::Kind::Exponential) {
        lambda = x.alpha();
    } else {
        // rate matched to the kernel's half-mass point
        double total = x.tail_mass(0.0);
        double lo = 0.0, hi = x.truncation_for(1e-9);
        for (int it = 0; it < 80; ++it) {
            double mid = 0.5 * (lo + hi);
            (x.tail_mass(mid) > 0.5 * total ? lo : hi) = mid;
        }
        lambda = std::log(2.0) / std::max(0.5 * (lo + hi), 1e-12);
    }

    RngStream rng(seed, 0xC0257A27u);
    double sum = 0.0, sumsq = 0.0;
    std::vector<double> v(static_cast<std::size_t>(n));
    for (std::size_t it = 0; it < samples; ++it) {
        double w = 1.0;
        for (int k = 0; k < n; ++k) {
            v[static_cast<std::size_t>(k)] = -std::log(rng.next_uniform()) / lambda;
            w *= x(v[static_cast<std::size_t>(k)]) *
                 std::exp(lambda * v[static_cast<std::size_t>(k)]) / lambda;
        }
        for (int i = 1; i <= n; ++i) {
            for (int j = i + 1; j <= n; ++j) {
                int a = alpha.at(i, j);
                if (a == 0) continue;
                w *= std::pow(std::abs(v[static_cast<std::size_t>(i - 1)] -
                                       v[static_cast<std::size_t>(j - 1)]),
                              p_unit * a);
            }
        }
        sum += w;
        sumsq += w * w;
    }
    double mean = sum / static_cast<double>(samples);
    double var = std::max(sumsq / static_cast<double>(samples) - mean * mean, 0.0);
    ConstantResult r;
    r.value = mean;
    r.abs_error = std::sqrt(var / static_cast<double>(samples));
    r.method = ConstantMethod::MonteCarlo;
    r.seed = seed;
    return r;
}

} // namespace

ConstantResult k_x_alpha(const Kernel& x, const ContractionIndex& alpha, const HurstSpec& spec,
                         std::uint64_t seed, std::size_t mc_samples, bool force_mc) {
    spec.validate();
    if (alpha.q != spec.q || !alpha.valid())
        throw std::invalid_argument("k_x_alpha: alpha not in A_{n,q} for this spec");
    HlsReport hls = hls_admissible(alpha.n, alpha.q, Rational(spec.H), alpha);
    if (!hls.admissible)
        throw std::domain_error("k_x_alpha: HLS admissibility fails: " + hls.detail);

    const int n = alpha.n;
    const double p_unit = 2.0 * (spec.h0() - 1.0);  // 2H0 - 2 in (-1, 0)
    std::ostringstream digest;
    digest << "K(" << x.describe() << ",n=" << n << ",|alpha|=" << alpha.total() << ","
           << hurst_digest(spec) << ")";

    if (alpha.total() == 0) {
        ConstantResult base = kernel_integral(x);
        ConstantResult r;
        r.value = std::pow(base.value, n);
        r.abs_error = n * std::pow(base.value, n - 1) * base.abs_error;
        r.method = ConstantMethod::Quadrature;
        r.inputs = digest.str();
        return r;
    }

    if (n >= 4 || force_mc) {
        ConstantResult r = k_x_alpha_mc(x, alpha, p_unit, seed, mc_samples);
        r.inputs = digest.str();
        return r;
    }

    ConstantResult r;
    r.method = ConstantMethod::Quadrature;
    r.inputs = digest.str();

    if (n == 1) {
        return kernel_integral(x);  // no pairs possible; unreachable when total > 0
    }

    if (n == 2) {
        // K = 2 int_0^infty u^p C(u) du, then u = w^{1/(p+1)} removes the
        // singularity at 0.
        const double p = p_unit * alpha.at(1, 2);
        auto C = autocorrelation(x);
        const double s = 1.0 / (p + 1.0);
        const double t_max = x.truncation_for(1e-12) * 2.0;
        const double w_max = std::pow(t_max, p + 1.0);
        QuadResult q = integrate([&C, s](double w) { return C(std::pow(w, s)); }, 0.0, w_max,
                                 1e-12, 1e-9);
        r.value = 2.0 / (p + 1.0) * q.value;
        r.abs_error = 2.0 / (p + 1.0) * q.abs_error + 2.0 * C(t_max) * t_max;
        return r;
    }

    // n == 3: iterated adaptive quadrature with splits at the diagonals.
    const double p12 = p_unit * alpha.at(1, 2);
    const double p13 = p_unit * alpha.at(1, 3);
    const double p23 = p_unit * alpha.at(2, 3);
    const double M = x.truncation_for(1e-9);
    auto pw = [](double d, double p) { return p == 0.0 ? 1.0 : std::pow(std::abs(d), p); };

    auto outer = integrate(
        [&](double v1) {
            auto mid = integrate(
                [&](double v2) {
                    std::vector<double> s3;
                    for (double sp : {v1, v2})
                        if (sp > 0 && sp < M) s3.push_back(sp);
                    auto in = integrate_split(
                        [&](double v3) {
                            return x(v3) * pw(v1 - v3, p13) * pw(v2 - v3, p23);
                        },
                        0.0, M, s3, 1e-10, 1e-7, 200);
                    return x(v2) * pw(v1 - v2, p12) * in.value;
                },
                0.0, M, 1e-9, 1e-6, 150);
            return x(v1) * mid.value;
        },
        0.0, M, 1e-8, 1e-5, 120);
    r.value = outer.value;
    r.abs_error = std::max(outer.abs_error, 1e-4 * std::abs(outer.value))
                + 3.0 * x.tail_mass(M) * std::abs(outer.value);
    return r;
}

LimitConstants limit_constants(const Polynomial& p, const Kernel& x, const HurstSpec& spec,
                               std::uint64_t seed) {
    spec.validate();
    if (spec.q < 2) throw std::invalid_argument("limit_constants: requires q >= 2");
    const double h0 = spec.h0();
    const double c = c_hq(spec).value;

    // K(x, alpha) summed over A_{n,q} with m(alpha) = m_target, weighted C_alpha.
    auto chaos_sum = [&](int n, int m_target, double& err) {
        double s = 0.0;
        err = 0.0;
        for (const auto& alpha : enumerate_indices(n, spec.q, m_target)) {
            double coef = to_double(coefficient(alpha));
            ConstantResult k = k_x_alpha(x, alpha, spec, seed);
            s += coef * k.value;
            err += coef * k.abs_error;
        }
        return s;
    };

    LimitConstants out;
    out.k1.method = out.k2.method = ConstantMethod::Quadrature;
    out.k1.inputs = "K1(" + x.describe() + "," + hurst_digest(spec) + ")";
    out.k2.inputs = "K2(" + x.describe() + "," + hurst_digest(spec) + ")";
    out.k1.seed = out.k2.seed = seed;

    double k1 = 0.0, k1_err = 0.0;
    bool k1_terms = false;
    for (int n = 3; n <= p.degree(); n += 2) {
        if (p.coeff(n) == 0) continue;
        if ((n * spec.q - 1) % 2 != 0) continue;  // m = 1 needs odd nq
        double err = 0.0;
        double s = chaos_sum(n, 1, err);
        if (s == 0.0 && err == 0.0) continue;
        double a_n = rational_to_double(p.coeff(n));
        k1 += a_n * std::pow(c, n) * s;
        k1_err += std::abs(a_n) * std::pow(c, n) * err;
        k1_terms = true;
    }
    if (k1_terms) {
        double c1 = c_hq(HurstSpec{1, h0}).value;
        k1 /= c1;
        k1_err /= c1;
    }
    out.k1.value = k1;
    out.k1.abs_error = k1_err;

    double k2 = 0.0, k2_err = 0.0;
    bool k2_terms = false;
    for (int n = 2; n <= p.degree(); ++n) {
        if (p.coeff(n) == 0) continue;
        if ((n * spec.q) % 2 != 0) continue;  // m = 2 needs even nq
        double err = 0.0;
        double s = chaos_sum(n, 2, err);
        if (s == 0.0 && err == 0.0) continue;
        double a_n = rational_to_double(p.coeff(n));
        k2 += a_n * std::pow(c, n) * s;
        k2_err += std::abs(a_n) * std::pow(c, n) * err;
        k2_terms = true;
    }
    if (k2_terms) {
        double h2 = 2.0 * h0 - 1.0;
        if (!(h2 > 0.5))
            throw std::domain_error("limit_constants: Rosenblatt limit needs H0 > 3/4");
        double c2 = c_hq(HurstSpec{2, h2}).value;
        k2 /= c2;
        k2_err /= c2;
    }
    if (spec.q == 2 && p.coeff(1) != 0) {
        ConstantResult ix = kernel_integral(x);
        k2 += rational_to_double(p.coeff(1)) * ix.value;
        k2_err += std::abs(rational_to_double(p.coeff(1))) * ix.abs_error;
    }
    out.k2.value = k2;
    out.k2.abs_error = k2_err;
    return out;
}

namespace {

// rho(s) = H (2H-1) int_R C(u) |s-u|^{2H-2} du with C the kernel
// autocorrelation; substituting t = |s-u| = w^{1/(2H-1)} gives
// rho(s) = H int_0^infty [C(s - t(w)) + C(s + t(w))] dw, singularity-free.
ConstantResult ma_covariance_impl(const std::function<double(double)>& C, double H, double s,
                                  double t_max, const std::string& digest) {
    if (!(H > 0.5 && H < 1.0)) throw std::invalid_argument("ma_covariance: H in (1/2,1)");
    if (!(s >= 0.0)) throw std::invalid_argument("ma_covariance: s >= 0");
    const double c = 2.0 * H - 1.0;
    const double w_max = std::pow(t_max + s, c);
    std::vector<double> splits;
    double kink = std::pow(s, c);
    if (kink > 0 && kink < w_max) splits.push_back(kink);
    QuadResult q = integrate_split(
        [&C, c, s](double w) {
            double t = std::pow(w, 1.0 / c);
            return C(s - t) + C(s + t);
        },
        0.0, w_max, splits, 1e-12, 1e-9);
    ConstantResult r;
    r.value = H * q.value;
    r.abs_error = H * q.abs_error + H * 2.0 * std::abs(C(t_max)) * w_max * 1e-3 + 1e-15;
    r.method = ConstantMethod::Quadrature;
    r.inputs = digest;
    return r;
}

} // namespace

ConstantResult fou_covariance(double H, double alpha, double s) {
    if (!(alpha > 0)) throw std::invalid_argument("fou_covariance: alpha > 0");
    auto C = [alpha](double u) { return std::exp(-alpha * std::abs(u)) / (2.0 * alpha); };
    std::ostringstream os;
    os << "rho_fou(H=" << H << ",alpha=" << alpha << ",s=" << s << ")";
    return ma_covariance_impl(C, H, s, s + 60.0 / alpha, os.str());
}

ConstantResult ma_covariance(const Kernel& x, double H, double s) {
    auto C0 = autocorrelation(x);
    auto C = [C0](double u) { return C0(std::abs(u)); };
    std::ostringstream os;
    os << "rho_ma(" << x.describe() << ",H=" << H << ",s=" << s << ")";
    return ma_covariance_impl(C, H, s, s + 2.0 * x.truncation_for(1e-10), os.str());
}

ConstantResult breuer_major_sigma(const Polynomial& p, const Kernel& x, const HurstSpec& spec) {
    spec.validate();
    if (spec.q != 1) throw std::invalid_argument("breuer_major_sigma: q = 1 only");
    const double H = spec.H;

    ConstantResult rho0 = ma_covariance(x, H, 0.0);
    HermiteExpansion exp_p = expand(p, Rational(rho0.value));
    if (!exp_p.rank) throw std::invalid_argument("breuer_major_sigma: constant polynomial");
    const int d = *exp_p.rank;
    if (!(d * (2.0 * H - 2.0) < -1.0))
        throw std::domain_error("breuer_major_sigma: rho^d not integrable (needs H < 1 - 1/(2d))");

    auto rho = [&](double s) { return ma_covariance(x, H, s).value; };
    const double S = std::max(40.0, 4.0 * x.truncation_for(1e-8));

    double sum = 0.0, err = 0.0;
    for (const auto& [k, bk] : exp_p.coeffs) {
        double b = rational_to_double(bk);
        if (b == 0.0) continue;
        QuadResult ik = integrate([&rho, k](double s) { return std::pow(rho(s), k); }, 0.0, S,
                                  1e-9, 1e-6, 250);
        // power-law tail rho(s) ~ c s^{2H-2}: int_S^infty rho^k ~ rho(S)^k S / (-k(2H-2)-1)
        double tail = std::pow(rho(S), k) * S / (-k * (2.0 * H - 2.0) - 1.0);
        double term = factorial_d(k) * b * b * 2.0 * (ik.value + tail);
        sum += term;
        err += factorial_d(k) * b * b * 2.0 * (ik.abs_error + tail);
    }
    ConstantResult r;
    r.value = std::sqrt(sum);
    r.abs_error = r.value > 0 ? 0.5 * err / r.value : err;
    r.method = ConstantMethod::Quadrature;
    r.inputs = "breuer_major(" + x.describe() + ",H=" + std::to_string(H) + ")";
    return r;
}

ConstantResult fou_critical_constant(double a_d, int d, double alpha) {
    if (d < 1 || !(alpha > 0)) throw std::invalid_argument("fou_critical_constant: bad inputs");
    ConstantResult r;
    r.value = a_d * std::sqrt(factorial_d(d) * 3.0 / (16.0 * alpha * alpha));
    r.abs_error = 4e-16 * std::abs(r.value);
    r.method = ConstantMethod::ClosedForm;
    r.inputs = "fou_critical(d=" + std::to_string(d) + ",alpha=" + std::to_string(alpha) + ")";
    return r;
}

} // namespace hermitelab
