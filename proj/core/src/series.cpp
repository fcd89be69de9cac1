#include "qz/series.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace qz {

bool GradedLexLess::operator()(const std::vector<int>& a, const std::vector<int>& b) const {
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da < db;
    return a < b;
}

PowerSeries PowerSeries::from_poly(const IntPoly& p, int bound) {
    const VarShape& s = p.shape();
    PowerSeries out(s.t_arity, bound, VarShape{0, s.symbols});
    VarShape cs{0, s.symbols};
    for (const auto& [key, c] : p.terms()) {
        std::vector<int> te(key.begin() + 1, key.begin() + 1 + s.t_arity);
        int total = std::accumulate(te.begin(), te.end(), 0);
        for (int e : te)
            if (e < 0) throw Error("PowerSeries::from_poly: negative t-exponent");
        if (total > bound) continue;
        IntPoly::Key ck;
        ck.push_back(key[0]);
        for (size_t j = 0; j < s.symbols.size(); ++j) ck.push_back(key[1 + s.t_arity + j]);
        IntPoly cp(cs);
        cp.add_term(ck, c);
        out.add(te, cp);
    }
    return out;
}

IntPoly PowerSeries::coefficient(const std::vector<int>& t_exps) const {
    auto it = coeff_.find(t_exps);
    if (it == coeff_.end()) return IntPoly(coeff_shape_);
    return it->second;
}

void PowerSeries::add(const std::vector<int>& t_exps, const IntPoly& c) {
    if (static_cast<int>(t_exps.size()) != t_arity_)
        throw Error("PowerSeries::add: t-exponent arity mismatch");
    if (c.shape().t_arity != 0)
        throw Error("PowerSeries::add: coefficient contains t-variables");
    int total = std::accumulate(t_exps.begin(), t_exps.end(), 0);
    if (total > bound_) return;
    coeff_shape_ = merge_shapes(coeff_shape_, c.shape());
    auto it = coeff_.find(t_exps);
    if (it == coeff_.end()) {
        if (!c.is_zero()) coeff_.emplace(t_exps, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) coeff_.erase(it);
    }
}

bool PowerSeries::operator==(const PowerSeries& o) const {
    if (t_arity_ != o.t_arity_ || bound_ != o.bound_) return false;
    if (coeff_.size() != o.coeff_.size()) return false;
    auto it = coeff_.begin();
    auto jt = o.coeff_.begin();
    for (; it != coeff_.end(); ++it, ++jt) {
        if (it->first != jt->first || !(it->second == jt->second)) return false;
    }
    return true;
}

bool PowerSeries::agrees_with(const PowerSeries& o) const {
    if (t_arity_ != o.t_arity_) return false;
    int b = std::min(bound_, o.bound_);
    return truncated(b).coefficients() == o.truncated(b).coefficients();
}

PowerSeries PowerSeries::operator+(const PowerSeries& o) const {
    if (t_arity_ != o.t_arity_) throw Error("PowerSeries::+: arity mismatch");
    PowerSeries out(t_arity_, std::min(bound_, o.bound_),
                    merge_shapes(coeff_shape_, o.coeff_shape_));
    for (const auto& [k, c] : coeff_) out.add(k, c);
    for (const auto& [k, c] : o.coeff_) out.add(k, c);
    return out;
}

PowerSeries PowerSeries::operator-(const PowerSeries& o) const {
    return *this + o.scaled(IntPoly::constant(-1));
}

PowerSeries PowerSeries::operator*(const PowerSeries& o) const {
    if (t_arity_ != o.t_arity_) throw Error("PowerSeries::*: arity mismatch");
    PowerSeries out(t_arity_, std::min(bound_, o.bound_),
                    merge_shapes(coeff_shape_, o.coeff_shape_));
    std::vector<int> key(t_arity_);
    for (const auto& [ka, ca] : coeff_) {
        int da = std::accumulate(ka.begin(), ka.end(), 0);
        for (const auto& [kb, cb] : o.coeff_) {
            int db = std::accumulate(kb.begin(), kb.end(), 0);
            if (da + db > out.bound_) continue;
            for (int i = 0; i < t_arity_; ++i) key[i] = ka[i] + kb[i];
            out.add(key, ca * cb);
        }
    }
    return out;
}

PowerSeries PowerSeries::scaled(const IntPoly& c) const {
    if (c.shape().t_arity != 0) throw Error("PowerSeries::scaled: scalar contains t");
    PowerSeries out(t_arity_, bound_, merge_shapes(coeff_shape_, c.shape()));
    for (const auto& [k, v] : coeff_) out.add(k, v * c);
    return out;
}

PowerSeries PowerSeries::pow(unsigned e) const {
    PowerSeries acc(t_arity_, bound_, coeff_shape_);
    acc.add(std::vector<int>(t_arity_, 0), IntPoly::constant(1, coeff_shape_));
    PowerSeries base = *this;
    while (e > 0) {
        if (e & 1u) acc = acc * base;
        if ((e >>= 1)) base = base * base;
    }
    return acc;
}

PowerSeries PowerSeries::truncated(int new_bound) const {
    PowerSeries out(t_arity_, std::min(bound_, new_bound), coeff_shape_);
    for (const auto& [k, c] : coeff_) out.add(k, c);
    return out;
}

std::map<std::vector<int>, Int> PowerSeries::at_q(const Int& p) const {
    std::map<std::vector<int>, Int> out;
    for (const auto& [k, c] : coeff_) {
        if (c.has_symbols())
            throw Error("PowerSeries::at_q: unsubstituted symbols remain");
        Rat v = c.eval(Rat(p), {});
        if (boost::multiprecision::denominator(v) != 1)
            throw Error("PowerSeries::at_q: non-integral coefficient at q=" + p.str());
        Int vi = boost::multiprecision::numerator(v);
        if (vi != 0) out.emplace(k, vi);
    }
    return out;
}

std::string PowerSeries::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : coeff_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")";
        for (int i = 0; i < t_arity_; ++i) {
            if (k[i] == 0) continue;
            os << "*t";
            if (t_arity_ > 1) os << (i + 1);
            if (k[i] != 1) os << "^" << k[i];
        }
    }
    if (first) os << "0";
    os << " + O(deg " << (bound_ + 1) << ")";
    return os.str();
}

namespace {

// Group a polynomial's terms by t-exponent tuple; values are q/symbol polys.
std::map<std::vector<int>, IntPoly, GradedLexLess> group_by_t(const IntPoly& p) {
    const VarShape& s = p.shape();
    VarShape cs{0, s.symbols};
    std::map<std::vector<int>, IntPoly, GradedLexLess> out;
    for (const auto& [key, c] : p.terms()) {
        std::vector<int> te(key.begin() + 1, key.begin() + 1 + s.t_arity);
        IntPoly::Key ck;
        ck.push_back(key[0]);
        for (size_t j = 0; j < s.symbols.size(); ++j) ck.push_back(key[1 + s.t_arity + j]);
        auto [it, inserted] = out.emplace(te, IntPoly(cs));
        it->second.add_term(ck, c);
    }
    return out;
}

void enumerate_tuples(int arity, int bound, std::vector<int>& cur, int pos, int remaining,
                      const std::function<void(const std::vector<int>&)>& fn) {
    if (pos == arity) {
        fn(cur);
        return;
    }
    for (int e = 0; e <= remaining; ++e) {
        cur[pos] = e;
        enumerate_tuples(arity, bound, cur, pos + 1, remaining - e, fn);
    }
    cur[pos] = 0;
}

}  // namespace

PowerSeries series_expand(const RationalFn& f, int bound) {
    const VarShape& s = f.shape();
    auto nmap = group_by_t(f.num());
    auto dmap = group_by_t(f.den());

    std::vector<int> zero(s.t_arity, 0);
    auto d0it = dmap.find(zero);
    if (d0it == dmap.end())
        throw Error("series_expand: denominator has no t-constant term");
    const IntPoly& d0 = d0it->second;
    if (!d0.is_monomial())
        throw Error("series_expand: t-constant part of denominator is not a monomial unit");
    auto [d0key, d0coeff] = d0.leading_term();
    if (!(d0coeff == 1 || d0coeff == -1))
        throw Error("series_expand: t-constant part of denominator is not a unit");
    int d0q = d0key[0];
    bool d0neg = d0coeff == -1;

    VarShape cs{0, s.symbols};
    PowerSeries out(s.t_arity, bound, cs);

    // March through exponent tuples in graded-lex order; every term of the
    // recurrence only references strictly smaller tuples, already computed.
    std::vector<int> cur(s.t_arity, 0);
    std::vector<int> diff(s.t_arity);
    enumerate_tuples(s.t_arity, bound, cur, 0, bound, [&](const std::vector<int>& beta) {
        IntPoly acc(cs);
        auto nit = nmap.find(beta);
        if (nit != nmap.end()) acc += nit->second;
        for (const auto& [delta, dpoly] : dmap) {
            bool all_zero = true, ok = true;
            for (int i = 0; i < s.t_arity; ++i) {
                diff[i] = beta[i] - delta[i];
                if (diff[i] < 0) { ok = false; break; }
                if (delta[i] != 0) all_zero = false;
            }
            if (!ok || all_zero) continue;
            IntPoly prev = out.coefficient(diff);
            if (prev.is_zero()) continue;
            acc -= prev * dpoly;
        }
        if (acc.is_zero()) return;
        // Divide by d0 = +-q^{d0q}: shift exponents, flip sign if needed.
        IntPoly coeff(cs);
        for (const auto& [key, c] : acc.terms()) {
            IntPoly::Key nk = key;
            nk[0] -= d0q;
            coeff.add_term(nk, d0neg ? -c : c);
        }
        out.add(beta, coeff);
    });
    return out;
}

}  // namespace qz
