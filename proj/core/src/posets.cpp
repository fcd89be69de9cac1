#include "qz/posets.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "json.hpp"

namespace qz {

namespace {

std::string join_errors(const std::vector<std::string>& errs) {
    std::ostringstream os;
    for (size_t i = 0; i < errs.size(); ++i) os << (i ? "; " : "") << errs[i];
    return os.str();
}

}  // namespace

Poset::Poset(int n, std::vector<std::pair<int, int>> relations) : n_(n) {
    if (n < 0) throw Error("Poset: negative size");
    build(std::move(relations), /*allow_relabel=*/true);
}

void Poset::build(std::vector<std::pair<int, int>> relations, bool allow_relabel) {
    std::vector<std::string> errs;
    for (const auto& [a, b] : relations) {
        if (a < 1 || a > n_ || b < 1 || b > n_)
            errs.push_back("relation (" + std::to_string(a) + "," + std::to_string(b) +
                           ") out of range 1.." + std::to_string(n_));
        else if (a == b)
            errs.push_back("reflexive relation (" + std::to_string(a) + "," +
                           std::to_string(b) + ")");
    }
    if (!errs.empty()) throw Error("Poset: " + join_errors(errs));

    less_.assign(n_, std::vector<bool>(n_, false));
    for (const auto& [a, b] : relations) less_[a - 1][b - 1] = true;
    for (int k = 0; k < n_; ++k)
        for (int i = 0; i < n_; ++i)
            if (less_[i][k])
                for (int j = 0; j < n_; ++j)
                    if (less_[k][j]) less_[i][j] = true;
    for (int i = 0; i < n_; ++i)
        if (less_[i][i])
            throw Error("Poset: relations contain a cycle through element " +
                        std::to_string(i + 1));

    bool natural = true;
    for (int a = 0; a < n_ && natural; ++a)
        for (int b = 0; b < a && natural; ++b)
            if (less_[a][b]) natural = false;

    if (!natural) {
        if (!allow_relabel) throw Error("Poset: internal relabeling failed");
        // Relabel along the canonical linear extension that always takes the
        // smallest-labeled available element.
        std::vector<int> new_label(n_, 0);
        std::vector<bool> placed(n_, false);
        for (int next = 1; next <= n_; ++next) {
            int pick = -1;
            for (int x = 0; x < n_; ++x) {
                if (placed[x]) continue;
                bool ready = true;
                for (int y = 0; y < n_; ++y)
                    if (less_[y][x] && !placed[y]) ready = false;
                if (ready) {
                    pick = x;
                    break;
                }
            }
            placed[pick] = true;
            new_label[pick] = next;
        }
        std::vector<std::pair<int, int>> mapped;
        mapped.reserve(relations.size());
        for (const auto& [a, b] : relations)
            mapped.emplace_back(new_label[a - 1], new_label[b - 1]);
        build(std::move(mapped), /*allow_relabel=*/false);
        relabel_ = std::move(new_label);
        return;
    }

    relabel_.resize(n_);
    std::iota(relabel_.begin(), relabel_.end(), 1);
    covers_.clear();
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b) {
            if (!less_[a][b]) continue;
            bool direct = true;
            for (int c = 0; c < n_ && direct; ++c)
                if (less_[a][c] && less_[c][b]) direct = false;
            if (direct) covers_.emplace_back(a + 1, b + 1);
        }
}

bool Poset::less(int a, int b) const {
    if (a < 1 || a > n_ || b < 1 || b > n_) throw Error("Poset::less: label out of range");
    return less_[a - 1][b - 1];
}

bool Poset::was_relabeled() const {
    for (int i = 0; i < n_; ++i)
        if (relabel_[i] != i + 1) return true;
    return false;
}

Poset Poset::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("Poset: invalid JSON: ") + e.what());
    }
    std::vector<std::string> errs;
    int n = 0;
    std::vector<std::pair<int, int>> rels;
    if (!j.is_object()) {
        errs.push_back("top level must be an object");
    } else {
        if (!j.contains("n") || !j["n"].is_number_integer())
            errs.push_back("missing integer field \"n\"");
        else
            n = j["n"].get<int>();
        if (!j.contains("covers") || !j["covers"].is_array()) {
            errs.push_back("missing array field \"covers\"");
        } else {
            for (const auto& c : j["covers"]) {
                if (!c.is_array() || c.size() != 2 || !c[0].is_number_integer() ||
                    !c[1].is_number_integer()) {
                    errs.push_back("each cover must be a pair of integers");
                    break;
                }
                rels.emplace_back(c[0].get<int>(), c[1].get<int>());
            }
        }
    }
    if (!errs.empty()) throw Error("Poset: " + join_errors(errs));
    return Poset(n, std::move(rels));
}

std::string Poset::to_json() const {
    nlohmann::ordered_json j;
    j["n"] = n_;
    j["covers"] = nlohmann::ordered_json::array();
    for (const auto& [a, b] : covers_) j["covers"].push_back({a, b});
    return j.dump();
}

std::vector<std::vector<int>> Poset::linear_extensions(int max_n) const {
    if (n_ > max_n)
        throw Error("linear_extensions: poset has " + std::to_string(n_) +
                    " elements, cap is " + std::to_string(max_n));
    std::vector<std::vector<int>> out;
    std::vector<int> word;
    std::vector<bool> used(n_, false);
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(word.size()) == n_) {
            out.push_back(word);
            return;
        }
        for (int x = 0; x < n_; ++x) {
            if (used[x]) continue;
            bool ready = true;
            for (int y = 0; y < n_; ++y)
                if (less_[y][x] && !used[y]) ready = false;
            if (!ready) continue;
            used[x] = true;
            word.push_back(x + 1);
            self(self);
            word.pop_back();
            used[x] = false;
        }
    };
    rec(rec);
    return out;
}

std::vector<int> descent_set(const std::vector<int>& w) {
    std::vector<int> des;
    for (size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] > w[i + 1]) des.push_back(static_cast<int>(i + 1));
    return des;
}

int major_index(const std::vector<int>& w) {
    int maj = 0;
    for (int d : descent_set(w)) maj += d;
    return maj;
}

int inversion_count(const std::vector<int>& w) {
    int inv = 0;
    for (size_t i = 0; i < w.size(); ++i)
        for (size_t j = i + 1; j < w.size(); ++j)
            if (w[i] > w[j]) ++inv;
    return inv;
}

RationalFn stanley_gf(const Poset& p, int max_n) {
    const VarShape shape{1, {}};
    IntPoly num(shape);
    for (const auto& ext : p.linear_extensions(max_n))
        num.add_term({0, major_index(ext)}, 1);
    IntPoly den = IntPoly::constant(1, shape);
    std::vector<IntPoly> factors;
    for (int i = 1; i <= p.size(); ++i) {
        factors.push_back(one_minus_monomial(0, {i}, shape));
        den *= factors.back();
    }
    return RationalFn(std::move(num), std::move(den), std::move(factors));
}

Int ppartition_count(const Poset& p, int m) {
    if (m < 0) return 0;
    const int n = p.size();
    std::vector<int> value(n, 0);
    // Natural labeling: every element's order-predecessors have smaller
    // labels, so assigning sigma in label order sees all upper bounds.
    auto rec = [&](auto&& self, int idx, int remaining) -> Int {
        if (idx == n) return remaining == 0 ? 1 : 0;
        int cap = remaining;
        for (int y = 1; y <= idx; ++y)
            if (p.less(y, idx + 1)) cap = std::min(cap, value[y - 1]);
        Int total = 0;
        for (int v = 0; v <= cap; ++v) {
            value[idx] = v;
            total += self(self, idx + 1, remaining - v);
        }
        return total;
    };
    return rec(rec, 0, m);
}

DeltaChainResult delta_chain(const Poset& p) {
    const int n = p.size();
    std::vector<std::set<int>> lengths(n);
    auto lengths_from = [&](auto&& self, int x) -> const std::set<int>& {
        if (!lengths[x].empty()) return lengths[x];
        bool has_successor = false;
        for (const auto& [a, b] : p.covers()) {
            if (a != x + 1) continue;
            has_successor = true;
            for (int s : self(self, b - 1)) lengths[x].insert(1 + s);
        }
        if (!has_successor) lengths[x].insert(1);
        return lengths[x];
    };
    DeltaChainResult res;
    res.is_delta_chain = true;
    res.element_delta.resize(n);
    for (int x = 0; x < n; ++x) {
        const auto& s = lengths_from(lengths_from, x);
        if (s.size() != 1) res.is_delta_chain = false;
        res.element_delta[x] = *s.rbegin();
        res.delta_sum += res.element_delta[x];
    }
    return res;
}

Representation hasse_rep(const Poset& p) {
    std::vector<Vertex> vs;
    for (int i = 1; i <= p.size(); ++i) vs.push_back({"v" + std::to_string(i), 1});
    std::vector<Arrow> as;
    for (const auto& [a, b] : p.covers())
        as.push_back({"c" + std::to_string(a) + "_" + std::to_string(b), a - 1, b - 1,
                      MatZ::identity(1)});
    return Representation(std::move(vs), std::move(as));
}

IntPoly gaussian_binomial(int m, int k) {
    if (k < 0 || k > m) throw Error("gaussian_binomial: need 0 <= k <= m");
    const VarShape shape{1, {}};
    // table[j] holds [i choose j]_X while i sweeps 0..m.
    std::vector<IntPoly> table(k + 1, IntPoly(shape));
    table[0] = IntPoly::constant(1, shape);
    for (int i = 1; i <= m; ++i)
        for (int j = std::min(i, k); j >= 1; --j) {
            IntPoly next = table[j - 1];
            if (j <= i - 1) next += table[j].shifted(0, {j});
            table[j] = std::move(next);
        }
    return table[k];
}

IntPoly q_multinomial_descent(int n, const std::vector<int>& descents) {
    if (n < 1) throw Error("q_multinomial_descent: need n >= 1");
    if (n > 9) throw Error("q_multinomial_descent: n too large for the permutation check");
    std::vector<int> I = descents;
    std::sort(I.begin(), I.end());
    I.erase(std::unique(I.begin(), I.end()), I.end());
    for (int i : I)
        if (i < 1 || i > n - 1)
            throw Error("q_multinomial_descent: descent position " + std::to_string(i) +
                        " out of range 1.." + std::to_string(n - 1));

    // Composition of n cut at the allowed descent positions.
    std::vector<int> parts;
    int prev = 0;
    for (int i : I) {
        parts.push_back(i - prev);
        prev = i;
    }
    parts.push_back(n - prev);

    const VarShape shape{1, {}};
    IntPoly product = IntPoly::constant(1, shape);
    int prefix = parts[0];
    for (size_t j = 1; j < parts.size(); ++j) {
        prefix += parts[j];
        product *= gaussian_binomial(prefix, parts[j]);
    }

    IntPoly by_length(shape);
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    do {
        const std::vector<int> des = descent_set(w);
        if (std::includes(I.begin(), I.end(), des.begin(), des.end()))
            by_length.add_term({0, inversion_count(w)}, 1);
    } while (std::next_permutation(w.begin(), w.end()));

    if (!(product == by_length))
        throw Error("q_multinomial_descent: Gaussian-binomial product disagrees with "
                    "the length generating function");
    return product;
}

bool coxeter_identity_check(int n, int max_n) {
    if (n < 1 || n > std::min(max_n, 8))
        throw Error("coxeter_identity_check: n out of range");
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    const int full_length = n * (n - 1) / 2;
    do {
        std::vector<int> ww0(n);
        for (int i = 0; i < n; ++i) ww0[i] = n + 1 - w[i];
        const std::vector<int> des = descent_set(w);
        const std::vector<int> des0 = descent_set(ww0);
        std::vector<int> expected;
        for (int i = 1; i <= n - 1; ++i)
            if (!std::binary_search(des.begin(), des.end(), i)) expected.push_back(i);
        if (des0 != expected) return false;
        if (inversion_count(w) + inversion_count(ww0) != full_length) return false;
    } while (std::next_permutation(w.begin(), w.end()));
    return true;
}

const std::vector<std::pair<std::string, Poset>>& poset_catalog() {
    static const std::vector<std::pair<std::string, Poset>> catalog = [] {
        std::vector<std::pair<std::string, Poset>> c;
        auto chain = [](int n) {
            std::vector<std::pair<int, int>> r;
            for (int i = 1; i < n; ++i) r.emplace_back(i, i + 1);
            return Poset(n, r);
        };
        auto star = [](int n) {
            std::vector<std::pair<int, int>> r;
            for (int j = 2; j <= n; ++j) r.emplace_back(1, j);
            return Poset(n, r);
        };
        for (int n = 1; n <= 5; ++n) c.emplace_back("chain" + std::to_string(n), chain(n));
        for (int n = 2; n <= 4; ++n)
            c.emplace_back("antichain" + std::to_string(n), Poset(n, {}));
        for (int n = 3; n <= 5; ++n) c.emplace_back("star" + std::to_string(n), star(n));
        c.emplace_back("dualstar3", Poset(3, {{1, 3}, {2, 3}}));
        c.emplace_back("diamond", Poset(4, {{1, 2}, {1, 3}, {2, 4}, {3, 4}}));
        c.emplace_back("nposet", Poset(4, {{1, 3}, {2, 3}, {2, 4}}));
        c.emplace_back("witness", Poset(4, {{1, 2}, {1, 3}, {3, 4}}));
        c.emplace_back("grid2x3", Poset(6, {{1, 2}, {2, 3}, {4, 5}, {5, 6},
                                            {1, 4}, {2, 5}, {3, 6}}));
        return c;
    }();
    return catalog;
}

}  // namespace qz
