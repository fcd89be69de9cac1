#include "qz/forms.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "qz/expr.hpp"
#include "qz/posets.hpp"

namespace qz {

namespace {

const VarShape kUni{1, {}};

long get_param(const std::map<std::string, long>& params, const std::string& key,
               std::optional<long> fallback = std::nullopt) {
    auto it = params.find(key);
    if (it != params.end()) return it->second;
    if (fallback) return *fallback;
    throw Error("builtin_formula: missing parameter '" + key + "'");
}

RationalFn from_factors(IntPoly num, std::vector<IntPoly> factors, const VarShape& shape) {
    num = num.promoted(shape);
    IntPoly den = IntPoly::constant(1, shape);
    for (auto& f : factors) {
        f = f.promoted(shape);
        den *= f;
    }
    return RationalFn(std::move(num), std::move(den), std::move(factors));
}

// Parse a polynomial given in the canonical one-t-variable notation.
IntPoly poly(const std::string& src, const std::vector<FrobeniusSymbol>& symbols = {}) {
    RationalFn f = expr::parse_rational(src, 1, symbols);
    if (!(f.den() == IntPoly::constant(1, f.den().shape())))
        throw Error("internal: expected a polynomial, got " + src);
    return f.num();
}

// 1 - q^a t^b as a univariate factor.
IntPoly fac(int a, int b) { return one_minus_monomial(a, {b}, kUni); }

RationalFn star_rank2_formula(long a) {
    switch (a) {
        case 1:
            return from_factors(IntPoly::constant(1, kUni), {fac(0, 1), fac(1, 1)}, kUni);
        case 2:
            return from_factors(IntPoly::constant(1, kUni),
                                {fac(0, 1), fac(0, 2), fac(1, 1), fac(1, 2)}, kUni);
        case 3:
            return from_factors(
                poly("(1+t^2)*(1-q*t^4)"),
                {fac(0, 1), fac(0, 2), fac(0, 3), fac(1, 1), fac(1, 2), fac(1, 2), fac(1, 3)},
                kUni);
        case 4:
            return from_factors(
                poly("1-t+3*t^2+q*t^2-t^3+q^2*t^4-q*t^4+t^4+q*t^5-5*q*t^6+q*t^7-3*q^2*t^7"
                     "-2*q^3*t^7-5*q*t^8-2*q^3*t^9+q^2*t^9+2*q*t^9-2*q^4*t^10-q^3*t^10"
                     "+2*q^2*t^10+5*q^4*t^11-q^4*t^12+3*q^3*t^12+2*q^2*t^12+5*q^4*t^13"
                     "-q^4*t^14-q^5*t^15+q^4*t^15-q^3*t^15+q^5*t^16-q^4*t^17-3*q^5*t^17"
                     "+q^5*t^18-q^5*t^19"),
                {fac(0, 1), fac(0, 1), fac(0, 3), fac(0, 4), fac(1, 1), fac(1, 2), fac(1, 2),
                 fac(1, 3), fac(1, 3), fac(1, 4), fac(3, 5)},
                kUni);
        default:
            throw Error("builtin_formula: star with m=2 has a closed form only for "
                        "a <= 4; use the arm-by-arm series for larger a");
    }
}

std::vector<IntPoly> elliptic_den_factors() {
    return {fac(0, 1), fac(1, 1), fac(2, 1), fac(2, 4), fac(2, 5), fac(1, 3), fac(0, 6)};
}

}  // namespace

RationalFn zeta_free_local(int n) {
    if (n < 0) throw Error("zeta_free_local: negative rank");
    std::vector<IntPoly> factors;
    for (int i = 0; i < n; ++i) factors.push_back(fac(i, 1));
    return from_factors(IntPoly::constant(1, kUni), std::move(factors), kUni);
}

RationalFn kronecker1_local(int n1, int n2, int i, int m) {
    if (n1 < 0 || n2 < 0 || i < 0 || i > n2 || m < 0)
        throw Error("kronecker1_local: need n1, n2 >= 0, 0 <= i <= n2, m >= 0");
    std::vector<IntPoly> factors;
    for (int j = 1; j <= i; ++j) factors.push_back(fac(j - 1, 2));
    for (int k = i + 1; k <= n2; ++k) factors.push_back(fac(k - 1, 1));
    for (int l = 1; l <= n1; ++l) factors.push_back(fac(l - 1, 1));
    return from_factors(IntPoly::monomial(1, 0, {m}, kUni), std::move(factors), kUni);
}

IntPoly carlitz_polynomial(int n) {
    if (n < 0) throw Error("carlitz_polynomial: negative index");
    if (n > 9) throw Error("carlitz_polynomial: index too large to enumerate S_n");
    IntPoly out(kUni);
    if (n == 0) {
        out.add_term({0, 0}, 1);
        return out;
    }
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    do {
        out.add_term({major_index(w), static_cast<int>(descent_set(w).size())}, 1);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

RationalFn star_thin(int a) {
    if (a < 1) throw Error("star_thin: need a >= 1");
    IntPoly num = carlitz_polynomial(a - 1).with_q_as_t1();
    std::vector<IntPoly> factors;
    for (int i = 1; i <= a; ++i) factors.push_back(fac(0, i));
    return from_factors(std::move(num), std::move(factors), kUni);
}

bool macmahon_identity_check(int a, int bound) {
    if (a < 1 || bound < 0) throw Error("macmahon_identity_check: need a >= 1, bound >= 0");
    IntPoly lhs(kUni);
    for (int r = 0; r <= bound; ++r) {
        IntPoly geom(kUni);  // 1 + t + ... + t^r
        for (int s = 0; s <= r; ++s) geom.add_term({0, s}, 1);
        lhs += geom.pow(static_cast<unsigned>(a - 1)).shifted(0, {r});
    }
    return PowerSeries::from_poly(lhs, bound) == series_expand(star_thin(a), bound);
}

IntPoly subgroup_zeta_two_part(int l1, int l2) {
    if (l2 < 0 || l1 < l2) throw Error("subgroup_zeta_two_part: need l1 >= l2 >= 0");
    IntPoly out(kUni);
    for (int a = 0; a <= l1; ++a)
        for (int d = 0; d <= l2; ++d) out.add_term({std::min(d, l1 - a), a + d}, 1);
    return out;
}

PowerSeries star_V2a_series(int a, int bound) {
    if (a < 1 || bound < 0) throw Error("star_V2a_series: need a >= 1, bound >= 0");
    const unsigned arms = static_cast<unsigned>(a - 1);
    PowerSeries total(1, bound);
    for (int r0 = 0; 2 * r0 <= bound; ++r0) {
        IntPoly head = subgroup_zeta_two_part(r0, r0).pow(arms).shifted(0, {2 * r0});
        total = total + PowerSeries::from_poly(head, bound);
        for (int r1 = 1; 2 * r0 + r1 <= bound; ++r1) {
            // (1 + q^{-1}) q^{r1} = q^{r1} + q^{r1-1}
            IntPoly unit(kUni);
            unit.add_term({r1, 0}, 1);
            unit.add_term({r1 - 1, 0}, 1);
            IntPoly term =
                (unit * subgroup_zeta_two_part(r0 + r1, r0).pow(arms)).shifted(0, {2 * r0 + r1});
            total = total + PowerSeries::from_poly(term, bound);
        }
    }
    return total;
}

std::pair<int, int> iso_exponent(const MatZ& phi, const Int& p) {
    require_prime(p, "iso_exponent");
    SnfResult snf = smith_normal_form(phi);
    int v = 0;
    for (const Int& d : snf.divisors()) v += valuation(d, p);
    return {snf.rank, v};
}

Int elliptic_point_count(const Int& D, const Int& p) {
    require_prime(p, "elliptic_point_count");
    if ((2 * D) % p == 0)
        throw Error("elliptic_point_count: requires p coprime to 2D (good reduction)");
    if (p > 1000000) throw Error("elliptic_point_count: p too large for direct enumeration");
    std::vector<bool> is_square(p.convert_to<size_t>(), false);
    for (Int y = 0; y < p; ++y) is_square[((y * y) % p).convert_to<size_t>()] = true;
    Int count = 1;  // point at infinity
    for (Int x = 0; x < p; ++x) {
        Int rhs = ((x * x * x - D * x) % p + p) % p;
        if (rhs == 0)
            count += 1;
        else if (is_square[rhs.convert_to<size_t>()])
            count += 2;
    }
    return count;
}

RationalFn builtin_formula(const std::string& name,
                           const std::map<std::string, long>& params) {
    if (name == "free") {
        long n = get_param(params, "n");
        if (n < 0 || n > 64) throw Error("builtin_formula: free needs 0 <= n <= 64");
        return zeta_free_local(static_cast<int>(n));
    }
    if (name == "heisenberg")
        return from_factors(IntPoly::constant(1, kUni), {fac(0, 1), fac(1, 1), fac(2, 3)},
                            kUni);
    if (name == "graded_heisenberg") {
        const VarShape shape{2, {}};
        return from_factors(IntPoly::constant(1, shape),
                            {one_minus_monomial(0, {1, 0}, shape),
                             one_minus_monomial(1, {1, 0}, shape),
                             one_minus_monomial(0, {2, 1}, shape)},
                            shape);
    }
    if (name == "star_thin") return star_thin(static_cast<int>(get_param(params, "a")));
    if (name == "star") {
        long m = get_param(params, "m");
        long a = get_param(params, "a");
        if (m < 1 || a < 1) throw Error("builtin_formula: star needs m >= 1, a >= 1");
        if (m == 1) return star_thin(static_cast<int>(a));
        if (m == 2) return star_rank2_formula(a);
        throw Error("builtin_formula: star has closed forms only for m = 1 and m = 2");
    }
    if (name == "dual_star") {
        long m = get_param(params, "m");
        long a = get_param(params, "a");
        if (m < 1 || a < 1) throw Error("builtin_formula: dual_star needs m >= 1, a >= 1");
        std::vector<IntPoly> factors;
        for (long i = 0; i < m; ++i) factors.push_back(fac(static_cast<int>(i), static_cast<int>(a)));
        for (long i = 0; i < m; ++i)
            for (long copy = 1; copy < a; ++copy) factors.push_back(fac(static_cast<int>(i), 1));
        return from_factors(IntPoly::constant(1, kUni), std::move(factors), kUni);
    }
    if (name == "d4")
        return from_factors(poly("1+2*t^3-2*t^4-t^7"),
                            {fac(0, 1), fac(0, 1), fac(0, 1), fac(0, 3), fac(0, 5), fac(1, 4)},
                            kUni);
    if (name == "kron2") {
        long res = get_param(params, "res");
        if (res == 1)
            return from_factors(poly("(1+t^2)*(1-t^3)"),
                                {fac(0, 1), fac(0, 2), fac(0, 4), fac(1, 1), fac(1, 3)}, kUni);
        if (res == 3)
            return from_factors(poly("1+t^3"), {fac(0, 1), fac(0, 4), fac(1, 1), fac(1, 3)},
                                kUni);
        throw Error("builtin_formula: kron2 needs res = 1 or res = 3 (the residue of q mod 4)");
    }
    if (name == "elliptic_w1")
        return from_factors(poly("1+(q+1)*(t^4+t^5)+q*t^9"),
                            {fac(0, 1), fac(1, 1), fac(2, 1), fac(2, 4), fac(2, 5), fac(0, 6)},
                            kUni);
    if (name == "elliptic_w2")
        return from_factors(poly("t^3*(1-t)*(1+q*t^5)"), elliptic_den_factors(), kUni);
    if (name == "elliptic") {
        const FrobeniusSymbol e{"E", 1};
        const VarShape shape{1, {e}};
        IntPoly num = poly(
            "(1+(q+1)*(t^4+t^5)+q*t^9)*(1-q*t^3)+E*t^3*(1-t)*(1+q*t^5)", {e});
        return from_factors(std::move(num), elliptic_den_factors(), shape);
    }
    if (name == "kronecker1")
        return kronecker1_local(static_cast<int>(get_param(params, "n1")),
                                static_cast<int>(get_param(params, "n2")),
                                static_cast<int>(get_param(params, "i")),
                                static_cast<int>(get_param(params, "m", 0)));
    std::string known;
    for (const auto& k : builtin_formula_names()) known += (known.empty() ? "" : ", ") + k;
    throw Error("builtin_formula: unknown name '" + name + "' (known: " + known + ")");
}

std::vector<std::string> builtin_formula_names() {
    return {"free",        "heisenberg", "graded_heisenberg", "star_thin",
            "star",        "dual_star",  "d4",                "kron2",
            "elliptic_w1", "elliptic_w2", "elliptic",         "kronecker1"};
}

}  // namespace qz
