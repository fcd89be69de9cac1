#pragma once

// Truncated power series in t_1..t_a whose coefficients are exact Laurent
// polynomials in q (optionally carrying symbols). Terms are kept up to a
// total t-degree bound. Used to cross-check closed-form rational functions
// against brute-force sublattice counts: expand the formula, substitute
// q = p, and compare coefficient tables.

#include <map>
#include <string>
#include <vector>

#include "qz/intpoly.hpp"
#include "qz/rationalfn.hpp"

namespace qz {

struct GradedLexLess {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
};

class PowerSeries {
public:
    // Coefficients are keyed by t-exponent tuples; values are polynomials in
    // q alone (t_arity 0), possibly with symbols.
    using CoeffMap = std::map<std::vector<int>, IntPoly, GradedLexLess>;

    PowerSeries(int t_arity, int bound, VarShape coeff_shape = {})
        : t_arity_(t_arity), bound_(bound), coeff_shape_(std::move(coeff_shape)) {
        if (coeff_shape_.t_arity != 0)
            throw Error("PowerSeries: coefficient shape must not contain t-variables");
    }

    static PowerSeries from_poly(const IntPoly& p, int bound);

    int t_arity() const { return t_arity_; }
    int bound() const { return bound_; }
    const CoeffMap& coefficients() const { return coeff_; }
    IntPoly coefficient(const std::vector<int>& t_exps) const;  // zero if absent

    void add(const std::vector<int>& t_exps, const IntPoly& c);

    bool operator==(const PowerSeries& o) const;  // same arity, bound, coefficients
    // True if coefficients agree up to min(bound, o.bound).
    bool agrees_with(const PowerSeries& o) const;

    PowerSeries operator+(const PowerSeries& o) const;
    PowerSeries operator-(const PowerSeries& o) const;
    PowerSeries operator*(const PowerSeries& o) const;
    PowerSeries scaled(const IntPoly& c) const;  // c must be t-free
    PowerSeries pow(unsigned e) const;
    PowerSeries truncated(int new_bound) const;

    // Substitute q = p exactly. Throws if symbols remain or any coefficient
    // fails to be an integer (Laurent q-exponents make this a real check).
    std::map<std::vector<int>, Int> at_q(const Int& p) const;

    std::string to_string() const;

private:
    int t_arity_;
    int bound_;
    VarShape coeff_shape_;
    CoeffMap coeff_;
};

// Expand a rational function as a power series up to total t-degree `bound`.
// Requires the denominator's t-constant part to be a single term +-q^k, which
// every normalized Euler factor in this library satisfies.
PowerSeries series_expand(const RationalFn& f, int bound);

}  // namespace qz
