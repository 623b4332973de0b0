#include "hermitelab/chaos.hpp"

namespace hermitelab {

namespace {

void enumerate_rec(ContractionIndex& cur, std::size_t pos,
                   std::vector<int>& degree,  // per-factor contracted legs, 1-based
                   const std::vector<std::pair<int, int>>& pairs,
                   std::optional<int> order_filter,
                   std::vector<ContractionIndex>& out) {
    if (pos == pairs.size()) {
        if (!order_filter || cur.order() == *order_filter) out.push_back(cur);
        return;
    }
    auto [i, j] = pairs[pos];
    int cap = std::min(cur.q - degree[i], cur.q - degree[j]);
    for (int v = 0; v <= cap; ++v) {
        cur.entries[pos] = v;
        degree[i] += v;
        degree[j] += v;
        enumerate_rec(cur, pos + 1, degree, pairs, order_filter, out);
        degree[i] -= v;
        degree[j] -= v;
    }
    cur.entries[pos] = 0;
}

} // namespace

std::vector<ContractionIndex> enumerate_indices(int n, int q,
                                                std::optional<int> order_filter) {
    if (n < 1 || q < 1) throw std::invalid_argument("enumerate_indices: n and q must be >= 1");
    if (order_filter) {
        int m = *order_filter;
        if (m < 0 || m > n * q) throw std::invalid_argument("enumerate_indices: order filter out of range");
        if ((n * q - m) % 2 != 0)
            throw std::invalid_argument("enumerate_indices: order filter has wrong parity (nq - m must be even)");
    }
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) pairs.emplace_back(i, j);

    ContractionIndex cur(n, q);
    std::vector<int> degree(static_cast<std::size_t>(n) + 1, 0);
    std::vector<ContractionIndex> out;
    enumerate_rec(cur, 0, degree, pairs, order_filter, out);
    return out;
}

BigInt coefficient(const ContractionIndex& alpha) {
    if (!alpha.valid()) throw std::invalid_argument("coefficient: index not in A_{n,q}");
    BigInt num = 1;
    BigInt qfact = factorial(alpha.q);
    for (int k = 0; k < alpha.n; ++k) num *= qfact;
    BigInt den = 1;
    for (int k = 1; k <= alpha.n; ++k) den *= factorial(alpha.q - alpha.degree(k));
    for (int e : alpha.entries) den *= factorial(e);
    return num / den;
}

FreeLegProfile free_leg_profile(const ContractionIndex& alpha) {
    if (!alpha.valid()) throw std::invalid_argument("free_leg_profile: index not in A_{n,q}");
    FreeLegProfile p;
    p.beta0.resize(alpha.n);
    p.beta.resize(alpha.n);
    int run = 0;
    for (int k = 1; k <= alpha.n; ++k) {
        p.beta0[k - 1] = alpha.q - alpha.degree(k);
        run += p.beta0[k - 1];
        p.beta[k - 1] = run;
    }
    p.m = run;
    return p;
}

BigInt gaussian_moment(int n) {
    if (n < 2 || n % 2 != 0)
        throw std::invalid_argument("gaussian_moment: n must be even and >= 2 (A^0_{n,1} is empty for odd nq)");
    BigInt s = 0;
    for (const auto& alpha : enumerate_indices(n, 1, 0)) s += coefficient(alpha);
    return s;
}

} // namespace hermitelab
