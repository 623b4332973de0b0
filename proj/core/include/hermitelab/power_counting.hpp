#ifndef HERMITELAB_POWER_COUNTING_HPP
#define HERMITELAB_POWER_COUNTING_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hermitelab/bigint.hpp"
#include "hermitelab/chaos.hpp"

namespace hermitelab {

// Finiteness question for integrals of prod_i f_i(M_i(v)) over R^n, where
// each f_i behaves like |t|^{mu_i} near 0 and |t|^{nu_i} near infinity and
// the M_i are linear functionals with exact rational coordinates.
struct PowerCountingProblem {
    int n = 0;
    std::vector<std::vector<Rational>> functionals;        // K rows of length n
    std::vector<std::pair<Rational, Rational>> exponents;  // (mu_i, nu_i) per row

    std::size_t size() const { return functionals.size(); }
    void validate() const;
};

enum class Finiteness { Yes, ConditionsViolated, HypothesisFailed };

const char* to_string(Finiteness f);

struct CountingVerdict {
    Finiteness finite = Finiteness::Yes;

    // For CONDITIONS_VIOLATED: the offending independent subset (0-based row
    // indices) and the value of d0 (condition_a = true) or d_inf.
    struct Witness {
        std::vector<int> subset;
        Rational value;
        bool condition_a = true;
    };
    std::optional<Witness> witness;
    std::size_t subsets_examined = 0;  // distinct spans, empty span included
};

// Decides finiteness by the power-counting conditions
//   (a) d0(W) = dim Span(W) + sum_{M_i in Span(W)} mu_i > 0
//       for every nonempty linearly independent W,
//   (b) d_inf(W') = n - dim Span(W') + sum_{M_i not in Span(W')} nu_i < 0
//       for every proper independent subset, the empty one included.
// Requires dim Span(T) = n; otherwise HYPOTHESIS_FAILED (no verdict).
// bounded_domain restricts the integral to a neighborhood of the origin,
// where finiteness is equivalent to condition (a) alone.
CountingVerdict check_integrability(const PowerCountingProblem& problem,
                                    bool bounded_domain = false);

// Hardy-Littlewood-Sobolev admissibility of the K_{x,alpha,H0} integral:
// with p = 1/(1 - (1-H) 2|alpha|/(nq)) and gamma_ij = (2-2H0) alpha_ij,
// requires p in (1, n), p < 1/H, every nonzero gamma_ij in (0, 1), and the
// scaling identity sum gamma_ij = n(1 - 1/p).  alpha = 0 is the plain L^1
// case.  All comparisons exact rational.
struct HlsReport {
    bool admissible = false;
    Rational p = 0;
    Rational gamma_sum = 0;
    Rational gamma_max = 0;
    std::string detail;
};

HlsReport hls_admissible(int n, int q, const Rational& H, const ContractionIndex& alpha);

enum class OracleVerdict { Convergent, Divergent, Inconclusive };

const char* to_string(OracleVerdict v);

// Numerical cross-check for n <= 2: integrates prod |M_i(v)|^{mu_i or nu_i}
// (exponent switching at |M_i| = 1) over exhaustion domains [-R_l, R_l]^n
// minus the tubes {|M_i| < eps_l}, R_l = 4^l, eps_l = 4^{-l}, l = 1..4, and
// classifies by the growth of the partial integrals.  Definitive answers are
// conservative; ambiguous growth returns Inconclusive.
OracleVerdict divergence_oracle(const PowerCountingProblem& problem);

// The Proposition 4.3 system on variables (w_1..w_n, w'_1..w'_n, xi):
// rows {w_k}, {w'_k} with exponents (0, -L), the pair differences
// {w_i - w_j}, {w'_i - w'_j} with exponent (2H0-2) alpha_ij at zero and
// infinity, and {xi - w_k + w'_k} with exponent (2H0-2) beta_k.
PowerCountingProblem proposition_43_problem(const ContractionIndex& alpha,
                                            const std::vector<int>& beta,
                                            const Rational& two_h0_minus_2,
                                            const Rational& L);

} // namespace hermitelab

#endif
