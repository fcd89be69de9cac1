#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace qz {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Thrown on violated preconditions and malformed input. The CLI maps it to
// exit code 2; verification mismatches are reported as data, not exceptions.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

inline Int pow_int(const Int& base, unsigned exp) {
    Int r = 1;
    for (unsigned i = 0; i < exp; ++i) r *= base;
    return r;
}

// p-adic valuation; v_p(0) is represented by the caller-supplied infinity
// sentinel (we use INT_MAX via valuation() == -1 convention nowhere; callers
// check for zero first or use the optional-style helper below).
inline int valuation(Int x, const Int& p) {
    if (x == 0) throw Error("valuation: v_p(0) is infinite");
    if (x < 0) x = -x;
    int v = 0;
    while (x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

// Valuation with infinity encoded as a large sentinel, convenient when
// taking minima over matrix entries that may vanish.
constexpr int kValInfinity = 1 << 28;

inline int valuation_or_inf(const Int& x, const Int& p) {
    return x == 0 ? kValInfinity : valuation(x, p);
}

// Trial division; the primes used here are small (they are enumeration
// moduli, not cryptographic).
inline bool is_prime(const Int& n) {
    if (n < 2) return false;
    for (Int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline void require_prime(const Int& p, const std::string& who) {
    if (!is_prime(p)) throw Error(who + ": " + p.str() + " is not prime");
}

}  // namespace qz
