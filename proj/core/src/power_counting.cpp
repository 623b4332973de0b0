#include "hermitelab/power_counting.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hermitelab/quadrature.hpp"

namespace hermitelab {

namespace {

constexpr std::size_t kMaxFunctionals = 24;

// Exact row-reduced basis of a subspace of Q^n.  Rows are kept in reduced
// row-echelon form ordered by pivot column, so two equal spans serialize to
// the same signature.
class Basis {
public:
    explicit Basis(int n) : n_(n) {}

    int dim() const { return static_cast<int>(rows_.size()); }

    std::vector<Rational> reduce(std::vector<Rational> v) const {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const Rational& f = v[static_cast<std::size_t>(pivots_[r])];
            if (f != 0) {
                for (int j = 0; j < n_; ++j)
                    v[static_cast<std::size_t>(j)] -= f * rows_[r][static_cast<std::size_t>(j)];
            }
        }
        return v;
    }

    bool contains(const std::vector<Rational>& v) const {
        auto r = reduce(v);
        return std::all_of(r.begin(), r.end(), [](const Rational& x) { return x == 0; });
    }

    // Adds v to the span; returns false (no change) when v is dependent.
    bool add(const std::vector<Rational>& v) {
        auto r = reduce(v);
        int pivot = -1;
        for (int j = 0; j < n_; ++j) {
            if (r[static_cast<std::size_t>(j)] != 0) {
                pivot = j;
                break;
            }
        }
        if (pivot < 0) return false;
        Rational inv = r[static_cast<std::size_t>(pivot)];
        for (int j = 0; j < n_; ++j) r[static_cast<std::size_t>(j)] /= inv;
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            Rational f = rows_[k][static_cast<std::size_t>(pivot)];
            if (f != 0) {
                for (int j = 0; j < n_; ++j)
                    rows_[k][static_cast<std::size_t>(j)] -= f * r[static_cast<std::size_t>(j)];
            }
        }
        auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), pivot);
        auto idx = static_cast<std::size_t>(pos - pivots_.begin());
        pivots_.insert(pos, pivot);
        rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(r));
        return true;
    }

    std::string signature() const {
        std::ostringstream os;
        for (const auto& row : rows_) {
            for (const auto& x : row) os << x << ',';
            os << ';';
        }
        return os.str();
    }

private:
    int n_;
    std::vector<std::vector<Rational>> rows_;
    std::vector<int> pivots_;
};

struct SpanCheck {
    const PowerCountingProblem& problem;
    bool bounded_domain;
    std::set<std::string> seen;
    std::size_t examined = 0;
    std::optional<CountingVerdict::Witness> violation;

    // Checks conditions (a)/(b) on the span of `subset`; returns false when a
    // violation is recorded (DFS in index order, so the first hit is the
    // lexicographically smallest witness).
    bool examine(const Basis& basis, const std::vector<int>& subset) {
        ++examined;
        Rational d0 = basis.dim();
        Rational dinf = problem.n - basis.dim();
        for (std::size_t i = 0; i < problem.size(); ++i) {
            if (basis.contains(problem.functionals[i]))
                d0 += problem.exponents[i].first;
            else
                dinf += problem.exponents[i].second;
        }
        if (!subset.empty() && !(d0 > 0)) {
            violation = CountingVerdict::Witness{subset, d0, true};
            return false;
        }
        if (!bounded_domain && basis.dim() < problem.n && !(dinf < 0)) {
            violation = CountingVerdict::Witness{subset, dinf, false};
            return false;
        }
        return true;
    }

    bool dfs(const Basis& basis, std::vector<int>& subset, std::size_t start) {
        for (std::size_t i = start; i < problem.size(); ++i) {
            Basis next = basis;
            if (!next.add(problem.functionals[i])) continue;
            if (!seen.insert(next.signature()).second) continue;
            subset.push_back(static_cast<int>(i));
            if (!examine(next, subset)) return false;
            if (!dfs(next, subset, i + 1)) return false;
            subset.pop_back();
        }
        return true;
    }
};

} // namespace

void PowerCountingProblem::validate() const {
    if (n < 1) throw std::invalid_argument("power counting: dimension must be positive");
    if (functionals.empty()) throw std::invalid_argument("power counting: need K >= 1 functionals");
    if (functionals.size() > kMaxFunctionals)
        throw std::length_error("power counting: more than 24 functionals unsupported");
    if (exponents.size() != functionals.size())
        throw std::invalid_argument("power counting: exponent count mismatch");
    for (const auto& row : functionals) {
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("power counting: functional has wrong dimension");
        if (std::all_of(row.begin(), row.end(), [](const Rational& x) { return x == 0; }))
            throw std::invalid_argument("power counting: zero functional");
    }
}

const char* to_string(Finiteness f) {
    switch (f) {
        case Finiteness::Yes: return "YES";
        case Finiteness::ConditionsViolated: return "CONDITIONS_VIOLATED";
        case Finiteness::HypothesisFailed: return "HYPOTHESIS_FAILED";
    }
    return "?";
}

const char* to_string(OracleVerdict v) {
    switch (v) {
        case OracleVerdict::Convergent: return "CONVERGENT";
        case OracleVerdict::Divergent: return "DIVERGENT";
        case OracleVerdict::Inconclusive: return "INCONCLUSIVE";
    }
    return "?";
}

CountingVerdict check_integrability(const PowerCountingProblem& problem, bool bounded_domain) {
    problem.validate();

    Basis full(problem.n);
    for (const auto& row : problem.functionals) full.add(row);
    if (full.dim() < problem.n) {
        CountingVerdict v;
        v.finite = Finiteness::HypothesisFailed;
        return v;
    }

    SpanCheck check{problem, bounded_domain, {}, 0, std::nullopt};
    Basis empty(problem.n);
    std::vector<int> subset;
    check.seen.insert(empty.signature());
    bool ok = check.examine(empty, subset) && check.dfs(empty, subset, 0);

    CountingVerdict v;
    v.subsets_examined = check.examined;
    if (ok) {
        v.finite = Finiteness::Yes;
    } else {
        v.finite = Finiteness::ConditionsViolated;
        v.witness = check.violation;
    }
    return v;
}

HlsReport hls_admissible(int n, int q, const Rational& H, const ContractionIndex& alpha) {
    if (alpha.n != n || alpha.q != q || !alpha.valid())
        throw std::invalid_argument("hls_admissible: alpha not in A_{n,q}");
    if (!(H > Rational(1, 2) && H < 1))
        throw std::invalid_argument("hls_admissible: need H in (1/2, 1)");

    HlsReport rep;
    const Rational gamma_unit = Rational(2) * (1 - H) / q;  // 2 - 2 H0
    const int total = alpha.total();
    rep.gamma_sum = gamma_unit * total;
    for (int e : alpha.entries) rep.gamma_max = std::max(rep.gamma_max, gamma_unit * e);

    std::ostringstream os;
    if (total == 0) {
        rep.admissible = true;
        rep.p = 1;
        os << "alpha = 0: no singular factors, plain L^1 case (p = 1 edge)";
        rep.detail = os.str();
        return rep;
    }

    // p = 1 / (1 - (1-H) 2|alpha| / (nq))
    Rational denom = 1 - (1 - H) * 2 * total / (Rational(n) * q);
    bool ok = true;
    if (denom <= 0) {
        os << "p undefined: 1 - (1-H)2|alpha|/(nq) = " << denom << " <= 0; ";
        ok = false;
        rep.p = 0;
    } else {
        rep.p = 1 / denom;
        os << "p = " << rep.p;
        if (!(rep.p < n)) {
            os << " !< n = " << n << "; ";
            ok = false;
        }
        Rational inv_h = 1 / H;
        if (!(rep.p < inv_h)) {
            os << " !< 1/H = " << inv_h
               << (rep.p == inv_h ? " (boundary)" : "") << "; ";
            ok = false;
        }
    }
    for (int e : alpha.entries) {
        if (e == 0) continue;
        Rational g = gamma_unit * e;
        if (!(g > 0 && g < 1)) {
            os << " gamma = " << g << " outside (0,1); ";
            ok = false;
        }
    }
    if (ok && rep.p != 0) {
        // scaling identity sum gamma = n (1 - 1/p); holds by construction
        Rational rhs = n * (1 - 1 / rep.p);
        if (rep.gamma_sum != rhs) {
            os << " scaling identity violated: sum gamma = " << rep.gamma_sum
               << " vs n(1-1/p) = " << rhs << "; ";
            ok = false;
        } else {
            os << "; sum gamma = n(1-1/p) = " << rep.gamma_sum;
        }
    }
    rep.admissible = ok;
    rep.detail = os.str();
    return rep;
}

namespace {

double piecewise_power(double t, double mu, double nu) {
    double a = std::abs(t);
    if (a == 0.0) return mu == 0.0 ? 1.0 : 0.0;  // tube-excluded anyway
    return a <= 1.0 ? std::pow(a, mu) : std::pow(a, nu);
}

// Partial integral at exhaustion level l for a 1- or 2-dimensional problem.
double oracle_level(const PowerCountingProblem& p, int level) {
    const double eps = std::pow(4.0, -level);
    const double R = std::pow(4.0, level);
    std::vector<double> mu(p.size()), nu(p.size());
    std::vector<std::vector<double>> m(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        mu[i] = static_cast<double>(p.exponents[i].first);
        nu[i] = static_cast<double>(p.exponents[i].second);
        for (const auto& c : p.functionals[i]) m[i].push_back(static_cast<double>(c));
    }

    if (p.n == 1) {
        auto f = [&](double x) {
            double v = 1.0;
            for (std::size_t i = 0; i < p.size(); ++i) {
                double t = m[i][0] * x;
                if (mu[i] < 0 && std::abs(t) < eps) return 0.0;
                v *= piecewise_power(t, mu[i], nu[i]);
            }
            return v;
        };
        std::vector<double> splits;
        for (std::size_t i = 0; i < p.size(); ++i) {
            double b = 1.0 / std::abs(m[i][0]);
            if (b > eps && b < R) splits.push_back(b);
            double tb = eps / std::abs(m[i][0]);
            if (tb > eps && tb < R) splits.push_back(tb);
        }
        // integrand is even in x
        return 2.0 * integrate_split(f, eps, R, splits, 1e-9, 1e-6).value;
    }

    // n == 2; integrand is invariant under v -> -v, so integrate x >= 0 twice.
    auto inner = [&](double x) {
        auto g = [&](double y) {
            double v = 1.0;
            for (std::size_t i = 0; i < p.size(); ++i) {
                double t = m[i][0] * x + m[i][1] * y;
                if (mu[i] < 0 && std::abs(t) < eps) return 0.0;
                v *= piecewise_power(t, mu[i], nu[i]);
            }
            return v;
        };
        std::vector<double> splits;
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (m[i][1] == 0.0) continue;
            for (double c : {-1.0, -eps, eps, 1.0}) {
                double y = (c - m[i][0] * x) / m[i][1];
                if (y > -R && y < R) splits.push_back(y);
            }
        }
        return integrate_split(g, -R, R, splits, 1e-8, 1e-5, 2000).value;
    };
    std::vector<double> xsplits{eps};
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (m[i][0] == 0.0) continue;
        for (double c : {eps, 1.0}) {
            double x = c / std::abs(m[i][0]);
            if (x > 0 && x < R) xsplits.push_back(x);
        }
    }
    return 2.0 * integrate_split(inner, 0.0, R, xsplits, 1e-8, 1e-4, 2000).value;
}

} // namespace

OracleVerdict divergence_oracle(const PowerCountingProblem& problem) {
    problem.validate();
    if (problem.n > 2) throw std::invalid_argument("divergence_oracle: n <= 2 only");
    for (const auto& [mu, nu] : problem.exponents) {
        if (mu < -3 || mu > 0 || nu < -3 || nu > 0)
            throw std::invalid_argument("divergence_oracle: exponents must lie in [-3, 0]");
    }

    double I[4];
    for (int l = 0; l < 4; ++l) I[l] = oracle_level(problem, l + 1);
    double D[3];
    for (int l = 0; l < 3; ++l) D[l] = I[l + 1] - I[l];

    bool nondecreasing = D[1] >= 0.995 * D[0] && D[2] >= 0.995 * D[1];
    bool grew = I[3] >= 1.5 * I[0];
    if (nondecreasing && grew && D[0] > 0) return OracleVerdict::Divergent;

    bool geometric = D[1] <= (2.0 / 3.0) * D[0] && D[2] <= (2.0 / 3.0) * std::max(D[1], 0.0);
    bool settled = I[3] > 0 && D[2] <= 1e-9 * I[3];
    if (geometric || settled) return OracleVerdict::Convergent;

    return OracleVerdict::Inconclusive;
}

PowerCountingProblem proposition_43_problem(const ContractionIndex& alpha,
                                            const std::vector<int>& beta,
                                            const Rational& two_h0_minus_2,
                                            const Rational& L) {
    if (!alpha.valid()) throw std::invalid_argument("proposition_43_problem: bad alpha");
    const int n = alpha.n;
    if (static_cast<int>(beta.size()) != n)
        throw std::invalid_argument("proposition_43_problem: beta size mismatch");

    PowerCountingProblem p;
    p.n = 2 * n + 1;
    auto unit = [&](int col) {
        std::vector<Rational> v(static_cast<std::size_t>(p.n), 0);
        v[static_cast<std::size_t>(col)] = 1;
        return v;
    };
    // w_k and w'_k with exponents (0, -L)
    for (int k = 0; k < 2 * n; ++k) {
        p.functionals.push_back(unit(k));
        p.exponents.emplace_back(Rational(0), -L);
    }
    // pair differences on both blocks
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            Rational e = two_h0_minus_2 * alpha.at(i, j);
            for (int block : {0, n}) {
                auto v = unit(block + i - 1);
                v[static_cast<std::size_t>(block + j - 1)] = -1;
                p.functionals.push_back(std::move(v));
                p.exponents.emplace_back(e, e);
            }
        }
    }
    // xi - w_k + w'_k
    for (int k = 0; k < n; ++k) {
        auto v = unit(2 * n);
        v[static_cast<std::size_t>(k)] = -1;
        v[static_cast<std::size_t>(n + k)] = 1;
        p.functionals.push_back(std::move(v));
        Rational e = two_h0_minus_2 * beta[static_cast<std::size_t>(k)];
        p.exponents.emplace_back(e, e);
    }
    return p;
}

} // namespace hermitelab
