#ifndef MFSYM_ARITH_HPP
#define MFSYM_ARITH_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>

namespace mfsym {

using Integer = boost::multiprecision::cpp_int;

inline Integer factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial of negative argument");
    Integer r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Integer binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Integer r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

inline Integer int_pow(Integer base, int exp) {
    Integer r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

// quotient that must be exact; the caller names the failing computation
inline Integer exact_div(const Integer& num, const Integer& den, const char* what) {
    if (den == 0) throw std::invalid_argument(std::string(what) + ": division by zero");
    Integer q = num / den;
    if (q * den != num)
        throw std::runtime_error(std::string(what) + ": quotient is not integral");
    return q;
}

} // namespace mfsym

#endif // MFSYM_ARITH_HPP
