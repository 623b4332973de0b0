#ifndef HERMITELAB_HERMITE_HPP
#define HERMITELAB_HERMITE_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hermitelab/bigint.hpp"

namespace hermitelab {

// Power-basis polynomial with exact rational coefficients.
struct Polynomial {
    std::vector<Rational> coeffs;  // coeffs[k] multiplies x^k

    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> c) : coeffs(std::move(c)) { trim(); }

    static Polynomial monomial(int k, Rational c = 1) {
        std::vector<Rational> v(static_cast<std::size_t>(k) + 1, Rational(0));
        v[static_cast<std::size_t>(k)] = std::move(c);
        return Polynomial(std::move(v));
    }

    void trim() {
        while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    }
    bool is_zero() const { return coeffs.empty(); }
    int degree() const { return coeffs.empty() ? -1 : static_cast<int>(coeffs.size()) - 1; }

    Rational coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(coeffs.size())) return 0;
        return coeffs[static_cast<std::size_t>(k)];
    }

    Rational eval(const Rational& x) const {
        Rational r = 0;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) r = r * x + *it;
        return r;
    }
    double eval(double x) const {
        double r = 0;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
            r = r * x + static_cast<double>(*it);
        return r;
    }

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rational& c) const;
    bool operator==(const Polynomial& o) const { return coeffs == o.coeffs; }
};

// k-th probabilists' Hermite polynomial rescaled to variance sigma2:
// H_0 = 1, H_1 = x, H_{k+1} = x H_k - sigma2 k H_{k-1}.  Orthogonal for
// N(0, sigma2) with E[H_k^2] = k! sigma2^k.
Polynomial hermite_polynomial(int k, const Rational& variance);

// P = mean_term + sum_{k >= rank} coeffs[k] * H_k^{sigma2}, exactly.
struct HermiteExpansion {
    Rational variance;
    Rational mean_term;
    std::map<int, Rational> coeffs;    // k >= 1 only, nonzero entries
    std::optional<int> rank;           // empty for constant polynomials

    Polynomial reconstruct() const;
};

HermiteExpansion expand(const Polynomial& p, const Rational& variance);

// Smallest k >= 1 with b_k != 0; throws for constant polynomials.
int centered_rank(const Polynomial& p, const Rational& variance);

// E[P(G)] with G ~ N(0, sigma2), via sigma^{2j} (2j-1)!!.
Rational gaussian_mean(const Polynomial& p, const Rational& variance);

enum class RegimeFamily { Brownian, Fbm, HermiteD, Rosenblatt };

struct RegimeLabel {
    RegimeFamily family;
    Rational normalization_exponent;    // e such that T^e S_T is tight
    std::optional<Rational> limit_hurst;
    int rank_used = 0;

    // Power of T that Var(S_T(1)) follows: T^e S_T(1) is tight with a
    // nondegenerate limit, so Var(S_T(1)) ~ T^{-2e}.
    Rational predicted_variance_slope() const {
        return -2 * normalization_exponent;
    }
};

const char* to_string(RegimeFamily f);

// Limit regime of T^e int_0^{Tt}(P(X)-E) ds per the dichotomy between the
// Gaussian (q=1) and Hermite-driven (q>=2) cases.  For q=1 the boundary
// H = 1 - 1/(2d) is rejected.
RegimeLabel classify_regime(int q, const Rational& H, const Polynomial& p,
                            const Rational& variance);

} // namespace hermitelab

#endif
