#include "hermitelab/hermite.hpp"

namespace hermitelab {

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.coeffs.size() > coeffs.size()) coeffs.resize(o.coeffs.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.coeffs.size() > coeffs.size()) coeffs.resize(o.coeffs.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs.size(); ++i) coeffs[i] -= o.coeffs[i];
    trim();
    return *this;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Rational> r(coeffs.size() + o.coeffs.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs.size(); ++j) r[i + j] += coeffs[i] * o.coeffs[j];
    return Polynomial(std::move(r));
}

Polynomial Polynomial::operator*(const Rational& c) const {
    Polynomial r = *this;
    for (auto& a : r.coeffs) a *= c;
    r.trim();
    return r;
}

Polynomial hermite_polynomial(int k, const Rational& variance) {
    if (k < 0) throw std::invalid_argument("hermite_polynomial: k must be >= 0");
    if (variance <= 0) throw std::invalid_argument("hermite_polynomial: variance must be positive");
    Polynomial hm1 = Polynomial::monomial(0);  // H_0
    if (k == 0) return hm1;
    Polynomial h = Polynomial::monomial(1);    // H_1
    const Polynomial x = Polynomial::monomial(1);
    for (int i = 1; i < k; ++i) {
        Polynomial next = x * h;
        next -= hm1 * (variance * i);
        hm1 = std::move(h);
        h = std::move(next);
    }
    return h;
}

Rational gaussian_mean(const Polynomial& p, const Rational& variance) {
    if (variance <= 0) throw std::invalid_argument("gaussian_mean: variance must be positive");
    Rational mean = 0;
    for (int k = 0; k <= p.degree(); k += 2) {
        // E[G^k] = sigma2^{k/2} (k-1)!!
        Rational moment = 1;
        for (int j = 0; j < k / 2; ++j) moment *= variance;
        moment *= Rational(double_factorial(k - 1));
        mean += p.coeff(k) * moment;
    }
    return mean;
}

Polynomial HermiteExpansion::reconstruct() const {
    Polynomial r = Polynomial::monomial(0, mean_term);
    for (const auto& [k, b] : coeffs) r += hermite_polynomial(k, variance) * b;
    return r;
}

HermiteExpansion expand(const Polynomial& p, const Rational& variance) {
    if (variance <= 0) throw std::invalid_argument("expand: variance must be positive");
    HermiteExpansion e;
    e.variance = variance;
    e.mean_term = 0;
    // Peel off leading terms: H_k is monic of degree k.
    Polynomial rem = p;
    while (rem.degree() >= 1) {
        int k = rem.degree();
        Rational b = rem.coeff(k);
        e.coeffs[k] = b;
        rem -= hermite_polynomial(k, variance) * b;
    }
    e.mean_term = rem.coeff(0);
    for (auto it = e.coeffs.begin(); it != e.coeffs.end();) {
        if (it->second == 0) it = e.coeffs.erase(it); else ++it;
    }
    if (!e.coeffs.empty()) e.rank = e.coeffs.begin()->first;
    return e;
}

int centered_rank(const Polynomial& p, const Rational& variance) {
    auto e = expand(p, variance);
    if (!e.rank) throw std::domain_error("centered_rank: rank undefined for constant polynomial");
    return *e.rank;
}

const char* to_string(RegimeFamily f) {
    switch (f) {
        case RegimeFamily::Brownian: return "BROWNIAN";
        case RegimeFamily::Fbm: return "FBM";
        case RegimeFamily::HermiteD: return "HERMITE_D";
        case RegimeFamily::Rosenblatt: return "ROSENBLATT";
    }
    return "?";
}

RegimeLabel classify_regime(int q, const Rational& H, const Polynomial& p,
                            const Rational& variance) {
    if (q < 1) throw std::invalid_argument("classify_regime: q must be >= 1");
    if (!(H > Rational(1, 2) && H < 1))
        throw std::invalid_argument("classify_regime: H must lie in (1/2, 1)");
    const Rational h0 = 1 - (1 - H) / q;

    RegimeLabel label;
    if (q == 1) {
        int d = centered_rank(p, variance);
        label.rank_used = d;
        Rational threshold = 1 - Rational(1, 2 * d);
        if (H == threshold)
            throw std::domain_error(
                "classify_regime: critical case H = 1 - 1/(2d); only covered for the OU functional");
        if (d >= 2 && H < threshold) {
            label.family = RegimeFamily::Brownian;
            label.normalization_exponent = Rational(-1, 2);
            label.limit_hurst = std::nullopt;
        } else {
            // H above the threshold (always the case when d = 1); the limit is
            // the d-th Hermite process, Gaussian (fBm) when d = 1.
            label.family = RegimeFamily::HermiteD;
            label.normalization_exponent = d * (1 - H) - 1;
            label.limit_hurst = 1 - d * (1 - H);
        }
        return label;
    }

    // q >= 2: the dichotomy depends only on the parity of q and on whether
    // some odd-degree monomial coefficient is nonzero.
    bool odd_term = false;
    for (int k = 1; k <= p.degree(); k += 2)
        if (p.coeff(k) != 0) odd_term = true;
    label.rank_used = p.degree() >= 1 ? 1 : 0;
    if (q % 2 == 1 && odd_term) {
        label.family = RegimeFamily::Fbm;
        label.normalization_exponent = -h0;
        label.limit_hurst = h0;
    } else {
        label.family = RegimeFamily::Rosenblatt;
        label.normalization_exponent = 1 - 2 * h0;
        label.limit_hurst = 2 * h0 - 1;
    }
    return label;
}

} // namespace hermitelab
