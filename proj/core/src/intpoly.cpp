#include "qz/intpoly.hpp"

#include <algorithm>
#include <sstream>

#include "qz/expr.hpp"

namespace qz {

VarShape merge_shapes(const VarShape& a, const VarShape& b) {
    VarShape out;
    out.t_arity = std::max(a.t_arity, b.t_arity);
    out.symbols = a.symbols;
    for (const auto& s : b.symbols) {
        auto it = std::find_if(out.symbols.begin(), out.symbols.end(),
                               [&](const FrobeniusSymbol& x) { return x.name == s.name; });
        if (it == out.symbols.end()) {
            out.symbols.push_back(s);
        } else if (it->weight != s.weight) {
            throw Error("symbol '" + s.name + "' carries conflicting inversion weights");
        }
    }
    std::sort(out.symbols.begin(), out.symbols.end());
    return out;
}

void IntPoly::add_term(const Key& key, const Int& coeff) {
    if (key.size() != static_cast<size_t>(shape_.key_size()))
        throw Error("IntPoly::add_term: key length does not match shape");
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(key, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

IntPoly IntPoly::constant(const Int& c, VarShape shape) {
    IntPoly p(std::move(shape));
    p.add_term(Key(p.shape_.key_size(), 0), c);
    return p;
}

IntPoly IntPoly::monomial(const Int& coeff, int q_exp, const std::vector<int>& t_exps,
                          VarShape shape) {
    if (static_cast<int>(t_exps.size()) != shape.t_arity)
        throw Error("IntPoly::monomial: t-exponent count does not match shape");
    IntPoly p(std::move(shape));
    Key key(p.shape_.key_size(), 0);
    key[0] = q_exp;
    for (size_t i = 0; i < t_exps.size(); ++i) key[1 + i] = t_exps[i];
    p.add_term(key, coeff);
    return p;
}

IntPoly IntPoly::q(int exp) { return monomial(1, exp, {}, VarShape{}); }

IntPoly IntPoly::t(int index, int arity, int exp) {
    if (index < 1 || index > arity) throw Error("IntPoly::t: index out of range");
    std::vector<int> te(arity, 0);
    te[index - 1] = exp;
    return monomial(1, 0, te, VarShape{arity, {}});
}

IntPoly IntPoly::symbol(const FrobeniusSymbol& s) {
    IntPoly p(VarShape{0, {s}});
    Key key(p.shape_.key_size(), 0);
    key[1] = 1;
    p.add_term(key, 1);
    return p;
}

bool IntPoly::operator==(const IntPoly& o) const {
    if (shape_ == o.shape_) return terms_ == o.terms_;
    VarShape m = merge_shapes(shape_, o.shape_);
    return promoted(m).terms_ == o.promoted(m).terms_;
}

IntPoly IntPoly::promoted(const VarShape& target) const {
    if (shape_ == target) return *this;
    if (target.t_arity < shape_.t_arity)
        throw Error("IntPoly::promoted: cannot shrink t-arity");
    // Map each of our symbol slots to its slot in the target.
    std::vector<int> sym_slot(shape_.symbols.size());
    for (size_t i = 0; i < shape_.symbols.size(); ++i) {
        auto it = std::find_if(target.symbols.begin(), target.symbols.end(),
                               [&](const FrobeniusSymbol& x) {
                                   return x.name == shape_.symbols[i].name;
                               });
        if (it == target.symbols.end())
            throw Error("IntPoly::promoted: target shape lacks symbol '" +
                        shape_.symbols[i].name + "'");
        if (it->weight != shape_.symbols[i].weight)
            throw Error("IntPoly::promoted: symbol weight mismatch for '" +
                        shape_.symbols[i].name + "'");
        sym_slot[i] = 1 + target.t_arity + static_cast<int>(it - target.symbols.begin());
    }
    IntPoly out(target);
    for (const auto& [key, c] : terms_) {
        Key nk(target.key_size(), 0);
        nk[0] = key[0];
        for (int i = 0; i < shape_.t_arity; ++i) nk[1 + i] = key[1 + i];
        for (size_t i = 0; i < shape_.symbols.size(); ++i)
            nk[sym_slot[i]] = key[1 + shape_.t_arity + i];
        out.add_term(nk, c);
    }
    return out;
}

IntPoly IntPoly::operator-() const {
    IntPoly out(shape_);
    for (const auto& [key, c] : terms_) out.terms_.emplace(key, -c);
    return out;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    if (!(shape_ == o.shape_)) {
        VarShape m = merge_shapes(shape_, o.shape_);
        return promoted(m) + o.promoted(m);
    }
    IntPoly out = *this;
    for (const auto& [key, c] : o.terms_) out.add_term(key, c);
    return out;
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + (-o); }

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (!(shape_ == o.shape_)) {
        VarShape m = merge_shapes(shape_, o.shape_);
        return promoted(m) * o.promoted(m);
    }
    IntPoly out(shape_);
    const int n = shape_.key_size();
    Key key(n);
    for (const auto& [ka, ca] : terms_) {
        for (const auto& [kb, cb] : o.terms_) {
            for (int i = 0; i < n; ++i) key[i] = ka[i] + kb[i];
            out.add_term(key, ca * cb);
        }
    }
    return out;
}

IntPoly IntPoly::operator*(const Int& c) const {
    if (c == 0) return IntPoly(shape_);
    IntPoly out(shape_);
    for (const auto& [key, v] : terms_) out.terms_.emplace(key, v * c);
    return out;
}

IntPoly operator*(const Int& c, const IntPoly& p) { return p * c; }

IntPoly IntPoly::pow(unsigned e) const {
    IntPoly acc = IntPoly::constant(1, shape_);
    IntPoly base = *this;
    while (e > 0) {
        if (e & 1u) acc *= base;
        base = (e >>= 1) ? base * base : base;
    }
    return acc;
}

std::pair<IntPoly::Key, Int> IntPoly::leading_term() const {
    if (terms_.empty()) throw Error("IntPoly::leading_term: zero polynomial");
    auto it = std::prev(terms_.end());
    return {it->first, it->second};
}

Int IntPoly::content() const {
    Int g = 0;
    for (const auto& [key, c] : terms_) {
        g = boost::multiprecision::gcd(g, c);
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::divided_by_content(const Int& g) const {
    if (g == 0 || g == 1) return *this;
    IntPoly out(shape_);
    for (const auto& [key, c] : terms_) {
        if (c % g != 0) throw Error("IntPoly::divided_by_content: not divisible");
        out.terms_.emplace(key, c / g);
    }
    return out;
}

int IntPoly::min_q_exp() const {
    int m = 0;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        if (first || key[0] < m) m = key[0];
        first = false;
    }
    return m;
}

int IntPoly::max_q_exp() const {
    int m = 0;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        if (first || key[0] > m) m = key[0];
        first = false;
    }
    return m;
}

int IntPoly::max_weighted_q_exp() const {
    int m = 0;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        int e = key[0];
        for (size_t j = 0; j < shape_.symbols.size(); ++j)
            e += shape_.symbols[j].weight * key[1 + shape_.t_arity + j];
        if (first || e > m) m = e;
        first = false;
    }
    return m;
}

std::vector<int> IntPoly::max_t_exps() const {
    std::vector<int> m(shape_.t_arity, 0);
    for (const auto& [key, c] : terms_)
        for (int i = 0; i < shape_.t_arity; ++i) m[i] = std::max(m[i], key[1 + i]);
    return m;
}

int IntPoly::max_total_t_degree() const {
    int m = 0;
    for (const auto& [key, c] : terms_) {
        int d = 0;
        for (int i = 0; i < shape_.t_arity; ++i) d += key[1 + i];
        m = std::max(m, d);
    }
    return m;
}

bool IntPoly::has_symbols() const {
    for (const auto& [key, c] : terms_)
        for (size_t j = 0; j < shape_.symbols.size(); ++j)
            if (key[1 + shape_.t_arity + j] != 0) return true;
    return false;
}

bool IntPoly::has_negative_exponents() const {
    for (const auto& [key, c] : terms_)
        for (int e : key)
            if (e < 0) return true;
    return false;
}

IntPoly IntPoly::shifted(int dq, const std::vector<int>& dt) const {
    if (static_cast<int>(dt.size()) != shape_.t_arity)
        throw Error("IntPoly::shifted: t-shift arity mismatch");
    IntPoly out(shape_);
    for (const auto& [key, c] : terms_) {
        Key nk = key;
        nk[0] += dq;
        for (int i = 0; i < shape_.t_arity; ++i) nk[1 + i] += dt[i];
        out.terms_.emplace(nk, c);
    }
    return out;
}

IntPoly IntPoly::inverted_qt() const {
    IntPoly out(shape_);
    for (const auto& [key, c] : terms_) {
        Key nk = key;
        nk[0] = -key[0];
        for (int i = 0; i < shape_.t_arity; ++i) nk[1 + i] = -key[1 + i];
        // Symbols are inversion-covariant: each occurrence contributes a
        // factor q^{-weight} but the symbol exponent itself is unchanged.
        for (size_t j = 0; j < shape_.symbols.size(); ++j)
            nk[0] -= shape_.symbols[j].weight * key[1 + shape_.t_arity + j];
        out.add_term(nk, c);
    }
    return out;
}

IntPoly IntPoly::with_symbol_value(const std::string& name, const Int& value) const {
    auto it = std::find_if(shape_.symbols.begin(), shape_.symbols.end(),
                           [&](const FrobeniusSymbol& s) { return s.name == name; });
    if (it == shape_.symbols.end())
        throw Error("IntPoly::with_symbol_value: unknown symbol '" + name + "'");
    int slot = 1 + shape_.t_arity + static_cast<int>(it - shape_.symbols.begin());
    VarShape ns = shape_;
    ns.symbols.erase(ns.symbols.begin() + (it - shape_.symbols.begin()));
    IntPoly out(ns);
    for (const auto& [key, c] : terms_) {
        int e = key[slot];
        if (e < 0) throw Error("IntPoly::with_symbol_value: negative symbol exponent");
        Key nk;
        nk.reserve(key.size() - 1);
        for (size_t i = 0; i < key.size(); ++i)
            if (static_cast<int>(i) != slot) nk.push_back(key[i]);
        out.add_term(nk, c * pow_int(value, e));
    }
    return out;
}

IntPoly IntPoly::collapsed_univariate() const {
    VarShape ns = shape_;
    ns.t_arity = 1;
    IntPoly out(ns);
    for (const auto& [key, c] : terms_) {
        Key nk(ns.key_size(), 0);
        nk[0] = key[0];
        for (int i = 0; i < shape_.t_arity; ++i) nk[1] += key[1 + i];
        for (size_t j = 0; j < shape_.symbols.size(); ++j)
            nk[2 + j] = key[1 + shape_.t_arity + j];
        out.add_term(nk, c);
    }
    return out;
}

IntPoly IntPoly::with_q_as_t1() const {
    if (shape_.t_arity < 1) throw Error("IntPoly::with_q_as_t1: needs at least one t");
    IntPoly out(shape_);
    for (const auto& [key, c] : terms_) {
        Key nk = key;
        nk[1] += nk[0];
        nk[0] = 0;
        out.add_term(nk, c);
    }
    return out;
}

IntPoly IntPoly::with_t_scaled(int index, int factor) const {
    if (index < 1 || index > shape_.t_arity)
        throw Error("IntPoly::with_t_scaled: index out of range");
    IntPoly out(shape_);
    for (const auto& [key, c] : terms_) {
        Key nk = key;
        nk[index] *= factor;
        out.add_term(nk, c);
    }
    return out;
}

Rat IntPoly::eval(const Rat& q_val, const std::vector<Rat>& t_vals) const {
    if (static_cast<int>(t_vals.size()) != shape_.t_arity)
        throw Error("IntPoly::eval: t-value count does not match arity");
    if (has_symbols()) throw Error("IntPoly::eval: unsubstituted symbols remain");
    auto rat_pow = [](const Rat& b, int e) -> Rat {
        if (e == 0) return Rat(1);
        if (b == 0) {
            if (e < 0) throw Error("IntPoly::eval: 0 raised to a negative power");
            return Rat(0);
        }
        Rat acc(1), base = e < 0 ? Rat(1) / b : b;
        for (int i = 0; i < std::abs(e); ++i) acc *= base;
        return acc;
    };
    Rat sum(0);
    for (const auto& [key, c] : terms_) {
        Rat term(c);
        term *= rat_pow(q_val, key[0]);
        for (int i = 0; i < shape_.t_arity; ++i) term *= rat_pow(t_vals[i], key[1 + i]);
        sum += term;
    }
    return sum;
}

std::string IntPoly::to_string() const { return expr::render(*this); }

IntPoly one_minus_monomial(int q_exp, const std::vector<int>& t_exps, VarShape shape) {
    return IntPoly::constant(1, shape) - IntPoly::monomial(1, q_exp, t_exps, shape);
}

}  // namespace qz
