#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace scrollfano {

// Section counts and linear-system dimensions grow fast in the parameters,
// so every count in the public API is an arbitrary-precision integer.
using Int = boost::multiprecision::cpp_int;

// C(n, k) with the usual conventions: 0 whenever n < 0, k < 0 or k > n.
// Small arguments hit a thread-local Pascal triangle; large ones fall back
// to the multiplicative formula.
Int binomial(std::int64_t n, std::int64_t k);

// Number of lattice points (p_1..p_s) with p_i >= 0 and sum <= bound,
// i.e. C(bound + s, s); 0 for bound < 0.
Int simplex_points(std::int64_t bound, int s);

inline std::int64_t gcd_abs(std::int64_t a, std::int64_t b) {
    return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
}

}  // namespace scrollfano
