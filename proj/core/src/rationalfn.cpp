#include "qz/rationalfn.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "qz/expr.hpp"

namespace qz {

namespace {

int key_degree(const IntPoly::Key& k) {
    int d = 0;
    for (int e : k) d += e;
    return d;
}

// Exact division by (1 - x^m), peeling quotient terms from the lex-smallest
// side; nullopt when the division is not exact.
std::optional<IntPoly> divide_by_one_minus(const IntPoly& p, const IntPoly::Key& m) {
    int max_deg = 0;
    for (const auto& [k, c] : p.terms()) max_deg = std::max(max_deg, key_degree(k));
    const int m_deg = key_degree(m);
    IntPoly rest = p;
    IntPoly quo(p.shape());
    while (!rest.is_zero()) {
        IntPoly::Key k = rest.terms().begin()->first;
        Int c = rest.terms().begin()->second;
        if (key_degree(k) + m_deg > max_deg) return std::nullopt;
        IntPoly term(p.shape());
        term.add_term(k, c);
        quo += term;
        IntPoly::Key up = k;
        for (size_t i = 0; i < up.size(); ++i) up[i] += m[i];
        IntPoly moved(p.shape());
        moved.add_term(up, c);
        rest = rest - term + moved;
    }
    return quo;
}

// Factor a normalized denominator as a product of binomials (1 - monomial),
// smallest monomial first; empty when it has any other shape. This keeps
// rendering canonical for functions built by parsing or arithmetic, which
// lose the factored form of their inputs.
std::vector<IntPoly> binomial_factorization(const IntPoly& den) {
    std::vector<IntPoly> out;
    const IntPoly one = IntPoly::constant(1, den.shape());
    const IntPoly::Key zero(static_cast<size_t>(den.shape().key_size()), 0);
    IntPoly rest = den;
    while (!(rest == one)) {
        auto it = rest.terms().begin();
        if (it->first != zero || it->second != 1) return {};
        auto second = std::next(it);
        if (second == rest.terms().end()) return {};
        IntPoly::Key m = second->first;
        std::optional<IntPoly> quo = divide_by_one_minus(rest, m);
        if (!quo) return {};
        IntPoly f(den.shape());
        f.add_term(zero, 1);
        f.add_term(m, -1);
        out.push_back(std::move(f));
        rest = std::move(*quo);
    }
    // Graded-lex factor order: (1-t)(1-q*t)(1-q^2*t^3) and friends.
    std::stable_sort(out.begin(), out.end(), [](const IntPoly& a, const IntPoly& b) {
        const IntPoly::Key& ka = std::next(a.terms().begin())->first;
        const IntPoly::Key& kb = std::next(b.terms().begin())->first;
        int da = key_degree(ka), db = key_degree(kb);
        return da != db ? da < db : ka < kb;
    });
    return out;
}

}  // namespace

std::string Monomial::to_string() const {
    std::ostringstream os;
    os << coeff.str();
    if (q_exp != 0) os << " q^" << q_exp;
    for (size_t i = 0; i < t_exps.size(); ++i) {
        if (t_exps[i] == 0) continue;
        os << " t";
        if (t_exps.size() > 1) os << (i + 1);
        os << "^" << t_exps[i];
    }
    return os.str();
}

RationalFn::RationalFn(IntPoly num, IntPoly den, std::vector<IntPoly> den_factors)
    : num_(std::move(num)), den_(std::move(den)), den_factors_(std::move(den_factors)) {
    normalize();
}

RationalFn RationalFn::from_poly(IntPoly p) {
    VarShape s = p.shape();
    return RationalFn(std::move(p), IntPoly::constant(1, s));
}

RationalFn RationalFn::one(VarShape shape) {
    return RationalFn(IntPoly::constant(1, shape), IntPoly::constant(1, shape));
}

void RationalFn::normalize() {
    if (den_.is_zero()) throw Error("RationalFn: zero denominator");
    VarShape m = merge_shapes(num_.shape(), den_.shape());
    num_ = num_.promoted(m);
    den_ = den_.promoted(m);
    if (den_.has_symbols())
        throw Error("RationalFn: symbols are not allowed in denominators");
    if (num_.is_zero()) {
        den_ = IntPoly::constant(1, m);
        den_factors_.clear();
        return;
    }

    // Clear negative exponents by a joint monomial shift.
    int dq = 0;
    std::vector<int> dt(m.t_arity, 0);
    bool shift = false;
    auto scan = [&](const IntPoly& p) {
        for (const auto& [key, c] : p.terms()) {
            if (key[0] < -dq) { dq = -key[0]; shift = true; }
            for (int i = 0; i < m.t_arity; ++i)
                if (key[1 + i] < -dt[i]) { dt[i] = -key[1 + i]; shift = true; }
            for (size_t j = 0; j < m.symbols.size(); ++j)
                if (key[1 + m.t_arity + j] < 0)
                    throw Error("RationalFn: negative symbol exponent");
        }
    };
    scan(num_);
    scan(den_);
    if (shift) {
        num_ = num_.shifted(dq, dt);
        den_ = den_.shifted(dq, dt);
        den_factors_.clear();
    }

    Int g = boost::multiprecision::gcd(num_.content(), den_.content());
    if (g > 1) {
        num_ = num_.divided_by_content(g);
        den_ = den_.divided_by_content(g);
        den_factors_.clear();
    }
    if (den_.terms().begin()->second < 0) {
        num_ = -num_;
        den_ = -den_;
        den_factors_.clear();
    }

    if (!den_factors_.empty()) {
        IntPoly prod = IntPoly::constant(1, m);
        for (const auto& f : den_factors_) prod *= f.promoted(merge_shapes(f.shape(), m));
        if (!(prod == den_)) den_factors_.clear();
    }
    if (den_factors_.empty() && den_.terms().size() > 1)
        den_factors_ = binomial_factorization(den_);
}

bool RationalFn::operator==(const RationalFn& o) const {
    return num_ * o.den_ == o.num_ * den_;
}

RationalFn RationalFn::operator-() const {
    RationalFn out = *this;
    out.num_ = -out.num_;
    return out;
}

RationalFn RationalFn::operator+(const RationalFn& o) const {
    return RationalFn(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFn RationalFn::operator-(const RationalFn& o) const { return *this + (-o); }

RationalFn RationalFn::operator*(const RationalFn& o) const {
    std::vector<IntPoly> factors;
    if (!den_factors_.empty() && !o.den_factors_.empty()) {
        factors = den_factors_;
        factors.insert(factors.end(), o.den_factors_.begin(), o.den_factors_.end());
    }
    return RationalFn(num_ * o.num_, den_ * o.den_, std::move(factors));
}

RationalFn RationalFn::operator/(const RationalFn& o) const { return *this * o.inverse(); }

RationalFn RationalFn::pow(unsigned e) const {
    RationalFn acc = RationalFn::one(shape());
    RationalFn base = *this;
    while (e > 0) {
        if (e & 1u) acc *= base;
        base = (e >>= 1) ? base * base : base;
    }
    return acc;
}

RationalFn RationalFn::inverse() const {
    if (num_.is_zero()) throw Error("RationalFn::inverse: division by zero");
    return RationalFn(den_, num_);
}

RationalFn RationalFn::invert_qt() const {
    return RationalFn(num_.inverted_qt(), den_.inverted_qt());
}

RationalFn RationalFn::collapsed_univariate() const {
    std::vector<IntPoly> factors;
    factors.reserve(den_factors_.size());
    for (const auto& f : den_factors_) factors.push_back(f.collapsed_univariate());
    return RationalFn(num_.collapsed_univariate(), den_.collapsed_univariate(),
                      std::move(factors));
}

RationalFn RationalFn::with_symbol_value(const std::string& name, const Int& value) const {
    // Denominators are symbol-free, but their shape still carries the slot.
    return RationalFn(num_.with_symbol_value(name, value),
                      den_.with_symbol_value(name, 0));
}

Rat RationalFn::eval(const Rat& q_val, const std::vector<Rat>& t_vals) const {
    Rat d = den_.eval(q_val, t_vals);
    if (d == 0) throw Error("RationalFn::eval: denominator vanishes at this point");
    return num_.eval(q_val, t_vals) / d;
}

std::string RationalFn::to_string() const { return expr::render(*this); }

std::optional<Monomial> monomial_ratio(const RationalFn& a, const RationalFn& b) {
    if (a.is_zero() || b.is_zero()) return std::nullopt;
    // a == m*b  <=>  a.num*b.den == m * b.num*a.den.
    IntPoly p = a.num() * b.den();
    IntPoly r = b.num() * a.den();
    VarShape m = merge_shapes(p.shape(), r.shape());
    p = p.promoted(m);
    r = r.promoted(m);
    if (p.terms().size() != r.terms().size()) return std::nullopt;

    auto [pk, pc] = p.leading_term();
    auto [rk, rc] = r.leading_term();
    Monomial mono;
    mono.q_exp = pk[0] - rk[0];
    mono.t_exps.resize(m.t_arity);
    for (int i = 0; i < m.t_arity; ++i) mono.t_exps[i] = pk[1 + i] - rk[1 + i];
    for (size_t j = 0; j < m.symbols.size(); ++j)
        if (pk[1 + m.t_arity + j] != rk[1 + m.t_arity + j]) return std::nullopt;
    mono.coeff = Rat(pc) / Rat(rc);

    // Verify q(num/den) * shifted r equals p with the candidate coefficient:
    // denominator(mono.coeff) * p == numerator(mono.coeff) * shift(r).
    std::vector<int> dt(mono.t_exps);
    IntPoly rs = r.shifted(mono.q_exp, dt);
    IntPoly lhs = p * Int(boost::multiprecision::denominator(mono.coeff));
    IntPoly rhs = rs * Int(boost::multiprecision::numerator(mono.coeff));
    if (!(lhs == rhs)) return std::nullopt;
    return mono;
}

}  // namespace qz
