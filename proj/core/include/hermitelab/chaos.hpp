#ifndef HERMITELAB_CHAOS_HPP
#define HERMITELAB_CHAOS_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "hermitelab/bigint.hpp"

namespace hermitelab {

// Multi-index alpha = (alpha_ij, 1 <= i < j <= n) driving the contraction
// expansion of a product of n multiple integrals of order q.  Entries are
// stored flattened in lexicographic (i,j) order:
// (1,2),(1,3),...,(1,n),(2,3),...,(n-1,n).
struct ContractionIndex {
    int n = 0;
    int q = 0;
    std::vector<int> entries;

    ContractionIndex() = default;
    ContractionIndex(int n_, int q_)
        : n(n_), q(q_), entries(static_cast<std::size_t>(n_) * (n_ - 1) / 2, 0) {}

    static std::size_t flat(int n, int i, int j) {
        // 1-based i < j.
        return static_cast<std::size_t>(i - 1) * n - static_cast<std::size_t>(i) * (i - 1) / 2
             + static_cast<std::size_t>(j - i - 1);
    }

    int at(int i, int j) const { return entries[flat(n, i, j)]; }
    int& at(int i, int j) { return entries[flat(n, i, j)]; }

    // |alpha|
    int total() const {
        int s = 0;
        for (int e : entries) s += e;
        return s;
    }

    // Row degree: sum of alpha_ij over pairs containing k (1-based).
    int degree(int k) const {
        int s = 0;
        for (int i = 1; i <= n; ++i) {
            for (int j = i + 1; j <= n; ++j) {
                if (i == k || j == k) s += at(i, j);
            }
        }
        return s;
    }

    // Number of free coordinates m = nq - 2|alpha|.
    int order() const { return n * q - 2 * total(); }

    // Membership in A_{n,q}.
    bool valid() const {
        if (n < 1 || q < 1) return false;
        for (int e : entries)
            if (e < 0) return false;
        for (int k = 1; k <= n; ++k)
            if (degree(k) > q) return false;
        return true;
    }

    bool operator==(const ContractionIndex& o) const {
        return n == o.n && q == o.q && entries == o.entries;
    }
};

struct FreeLegProfile {
    std::vector<int> beta0;  // free legs per factor
    std::vector<int> beta;   // running sums, beta[k] = beta0[1] + ... + beta0[k]
    int m = 0;
};

// All of A_{n,q}, lexicographic on the flattened entry vector; optionally
// restricted to indices with m(alpha) = order_filter.
std::vector<ContractionIndex> enumerate_indices(int n, int q,
                                                std::optional<int> order_filter = std::nullopt);

// C_alpha = q!^n / (prod beta0_k! * prod alpha_ij!), exact.
BigInt coefficient(const ContractionIndex& alpha);

FreeLegProfile free_leg_profile(const ContractionIndex& alpha);

// Sum of C_alpha over A^0_{n,1}; equals the n-th moment (n-1)!! of a
// standard Gaussian.  Rejects odd n.
BigInt gaussian_moment(int n);

} // namespace hermitelab

#endif
