#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace mmc {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Malformed user input (bad partition string, bad flag value). CLI exit code 2.
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input outside a module's supported range (enumeration too large, table too
// deep). CLI exit code 3.
struct capacity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two engines that must agree did not. CLI exit code 4.
struct disagreement_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A consistency check that can only fail through an implementation bug.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

inline Int factorial(int n) {
    if (n < 0) throw internal_error("factorial of negative argument");
    Int r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

// (2k-1)!! style semifactorial; (-1)!! = 1 and 0!! = 1 by convention.
inline Int double_factorial(int n) {
    Int r = 1;
    for (int i = n; i > 1; i -= 2) r *= i;
    return r;
}

inline Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

}  // namespace mmc
