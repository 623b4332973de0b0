#ifndef HERMITELAB_BIGINT_HPP
#define HERMITELAB_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace hermitelab {

// Exact arithmetic used everywhere a wrong digit would silently corrupt a
// verdict: chaos coefficients, Hermite expansions, power-counting exponents.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt factorial(int n) {
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

inline BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    BigInt r = 1;
    for (int i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

// (n-1)!! for even n means product of odd numbers up to n-1.
inline BigInt double_factorial(int n) {
    BigInt r = 1;
    for (int i = n; i >= 2; i -= 2) r *= i;
    return r;
}

inline double to_double(const Rational& r) {
    return static_cast<double>(r);
}

} // namespace hermitelab

#endif
