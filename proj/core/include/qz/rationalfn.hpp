#pragma once

// Exact rational functions in q, t_1..t_a and symbols, stored as a
// numerator/denominator pair of IntPoly in canonical form:
//   - no negative exponents (cleared by a joint monomial shift),
//   - joint integer content 1,
//   - the denominator's lowest term (minimal key) has positive coefficient,
//   - symbols may appear in numerators only.
// Equality is decided by cross-multiplication, so no factorization or gcd of
// multivariate polynomials is ever needed.
//
// A denominator factor list may be attached for display purposes; it is
// validated against the actual denominator and dropped by any arithmetic
// that invalidates it.

#include <optional>
#include <string>
#include <vector>

#include "qz/intpoly.hpp"

namespace qz {

// A single monomial c * q^dq * prod t_i^{dt_i} with rational coefficient.
struct Monomial {
    Rat coeff;
    int q_exp = 0;
    std::vector<int> t_exps;

    bool operator==(const Monomial& o) const = default;
    std::string to_string() const;
};

class RationalFn {
public:
    RationalFn() : num_(IntPoly::constant(0)), den_(IntPoly::constant(1)) {}
    RationalFn(IntPoly num, IntPoly den, std::vector<IntPoly> den_factors = {});

    static RationalFn from_poly(IntPoly p);
    static RationalFn one(VarShape shape = {});

    const IntPoly& num() const { return num_; }
    const IntPoly& den() const { return den_; }
    const std::vector<IntPoly>& den_factors() const { return den_factors_; }
    const VarShape& shape() const { return num_.shape(); }
    bool is_zero() const { return num_.is_zero(); }

    bool operator==(const RationalFn& o) const;

    RationalFn operator-() const;
    RationalFn operator+(const RationalFn& o) const;
    RationalFn operator-(const RationalFn& o) const;
    RationalFn operator*(const RationalFn& o) const;
    RationalFn operator/(const RationalFn& o) const;
    RationalFn& operator+=(const RationalFn& o) { return *this = *this + o; }
    RationalFn& operator*=(const RationalFn& o) { return *this = *this * o; }
    RationalFn pow(unsigned e) const;
    RationalFn inverse() const;  // throws if the numerator contains symbols

    // Simultaneous substitution q -> q^{-1}, t_i -> t_i^{-1} (symbols pick up
    // q^{-weight}), renormalized back to polynomial form.
    RationalFn invert_qt() const;

    RationalFn collapsed_univariate() const;  // every t_i -> t
    RationalFn with_symbol_value(const std::string& name, const Int& value) const;

    Rat eval(const Rat& q_val, const std::vector<Rat>& t_vals) const;

    std::string to_string() const;

private:
    IntPoly num_, den_;
    std::vector<IntPoly> den_factors_;

    void normalize();
};

// If a == m * b for a monomial m in q and the t's (symbol exponents must
// cancel), return m; otherwise nullopt. This is how predicted functional
// equations are checked: the ratio zeta|_{q->1/q} / zeta must be an exact
// signed monomial.
std::optional<Monomial> monomial_ratio(const RationalFn& a, const RationalFn& b);

}  // namespace qz
