#pragma once

// Exact multivariate polynomials with arbitrary-precision integer
// coefficients in the variable q, counting variables t_1..t_a, and optional
// named symbols (e.g. the elliptic point count). A symbol carries an
// inversion weight w: the substitution q -> q^{-1} maps it to q^{-w} * itself.
//
// Terms are keyed by the exponent tuple [q, t_1..t_a, symbols...] under
// lexicographic order, which is the canonical term order used for leading
// terms and printing. q-exponents may be negative (Laurent) internally;
// RationalFn normalizes so that stored numerators and denominators are
// honest polynomials.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qz/bigint.hpp"

namespace qz {

struct FrobeniusSymbol {
    std::string name;
    int weight = 1;

    bool operator==(const FrobeniusSymbol& o) const = default;
    bool operator<(const FrobeniusSymbol& o) const { return name < o.name; }
};

// Variable layout shared by a polynomial's terms: number of t-variables and
// the (name-sorted) symbol list.
struct VarShape {
    int t_arity = 0;
    std::vector<FrobeniusSymbol> symbols;

    bool operator==(const VarShape& o) const = default;
    int key_size() const { return 1 + t_arity + static_cast<int>(symbols.size()); }
};

VarShape merge_shapes(const VarShape& a, const VarShape& b);

class IntPoly {
public:
    using Key = std::vector<int>;  // [q_exp, t_exps..., sym_exps...]

    IntPoly() = default;
    explicit IntPoly(VarShape shape) : shape_(std::move(shape)) {}

    static IntPoly constant(const Int& c, VarShape shape = {});
    static IntPoly monomial(const Int& coeff, int q_exp, const std::vector<int>& t_exps,
                            VarShape shape);
    // Convenience builders (shape deduced minimally, promote as needed).
    static IntPoly q(int exp = 1);
    static IntPoly t(int index, int arity, int exp = 1);  // index is 1-based
    static IntPoly symbol(const FrobeniusSymbol& s);

    const VarShape& shape() const { return shape_; }
    const std::map<Key, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool operator==(const IntPoly& o) const;

    // Promote to a compatible superset shape. Throws if a symbol name clashes
    // with a different weight.
    IntPoly promoted(const VarShape& target) const;

    IntPoly operator-() const;
    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly& operator+=(const IntPoly& o) { return *this = *this + o; }
    IntPoly& operator-=(const IntPoly& o) { return *this = *this - o; }
    IntPoly& operator*=(const IntPoly& o) { return *this = *this * o; }
    IntPoly operator*(const Int& c) const;
    IntPoly pow(unsigned e) const;

    // Leading term under the canonical (lexicographic) order.
    std::pair<Key, Int> leading_term() const;  // throws on zero
    bool is_monomial() const { return terms_.size() == 1; }
    Int content() const;  // gcd of |coefficients|, 0 for the zero poly
    IntPoly divided_by_content(const Int& g) const;

    int min_q_exp() const;  // 0 for the zero polynomial
    int max_q_exp() const;
    int max_weighted_q_exp() const;  // max over terms of q_exp + sum w_j * sym_exp_j
    std::vector<int> max_t_exps() const;
    int max_total_t_degree() const;
    bool has_symbols() const;
    bool has_negative_exponents() const;

    // Multiply by the monomial q^dq * prod t_i^{dt_i} (exponent shift).
    IntPoly shifted(int dq, const std::vector<int>& dt) const;

    // q -> q^{-1}, t_i -> t_i^{-1}, symbol -> q^{-weight} symbol (a raw
    // Laurent substitution; RationalFn::invert_qt clears denominators).
    IntPoly inverted_qt() const;

    // Substitutions.
    IntPoly with_symbol_value(const std::string& name, const Int& value) const;
    IntPoly collapsed_univariate() const;      // every t_i -> t (arity 1)
    IntPoly with_q_as_t1() const;              // q -> t_1 (used for C_n(t, t))
    IntPoly with_t_scaled(int index, int factor) const;  // t_i -> t_i^factor

    // Full evaluation; every symbol must have been substituted away.
    Rat eval(const Rat& q_val, const std::vector<Rat>& t_vals) const;

    std::string to_string() const;

    void add_term(const Key& key, const Int& coeff);  // maintains invariants

private:
    VarShape shape_;
    std::map<Key, Int> terms_;
};

IntPoly operator*(const Int& c, const IntPoly& p);

// 1 - q^a * prod t_i^{e_i}: the ubiquitous denominator factor.
IntPoly one_minus_monomial(int q_exp, const std::vector<int>& t_exps, VarShape shape);

}  // namespace qz
