#include "qz/verify.hpp"

#include <array>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <utility>

#include "json.hpp"
#include "qz/forms.hpp"
#include "qz/funeq.hpp"
#include "qz/invariants.hpp"
#include "qz/lattice.hpp"
#include "qz/posets.hpp"
#include "qz/quiver.hpp"
#include "qz/series.hpp"
#include "qz/structure.hpp"

namespace qz {

namespace {

// Counts comparisons and keeps only the first failure message; the message
// callback is evaluated lazily so passing checks stay cheap.
struct Tally {
    long long comparisons = 0;
    long long failures = 0;
    std::string first_failure;

    template <class F>
    void check(bool ok, F&& describe) {
        ++comparisons;
        if (!ok) {
            ++failures;
            if (first_failure.empty()) first_failure = describe();
        }
    }

    std::string summary() const {
        if (failures == 0) return std::to_string(comparisons) + " comparisons";
        return std::to_string(failures) + " of " + std::to_string(comparisons) +
               " comparisons failed; first: " + first_failure;
    }
};

std::string key_str(const std::vector<int>& key) {
    std::string s = "(";
    for (size_t i = 0; i < key.size(); ++i) s += (i ? "," : "") + std::to_string(key[i]);
    return s + ")";
}

Int value_at(const std::map<std::vector<int>, Int>& m, const std::vector<int>& key) {
    auto it = m.find(key);
    return it == m.end() ? Int(0) : it->second;
}

// Every enumerated key must match the series coefficient (absent = 0), and
// every nonzero series coefficient must lie inside the enumerated key range.
void compare_counts(Tally& t, const std::string& label, const CountTable& got,
                    const std::map<std::vector<int>, Int>& want) {
    for (const auto& [key, val] : got.counts) {
        Int w = value_at(want, key);
        t.check(val == w, [&] {
            return label + " at " + key_str(key) + ": enumerated " + val.str() +
                   ", series " + w.str();
        });
    }
    for (const auto& [key, w] : want)
        if (w != 0)
            t.check(got.counts.count(key) > 0, [&] {
                return label + ": series coefficient at " + key_str(key) +
                       " outside the enumerated range";
            });
}

void count_case(Tally& t, const std::string& label, const Representation& rep,
                const RationalFn& formula, long p, int bound, bool multivariate) {
    CountOptions opts;
    opts.bound = bound;
    opts.multivariate = multivariate;
    opts.ceiling = Int("2000000000");
    CountTable got = count_subreps(rep, p, opts);
    PowerSeries series = series_expand(formula, bound);
    compare_counts(t, label, got, series.at_q(Int(p)));
}

// ---- check: brute-force counts against the closed forms ----

void counts_check(Tally& t, const VerifyOptions& opts) {
    const bool fast = opts.fast;

    {
        Representation rep = builtin_rep("heisenberg");
        RationalFn f = builtin_formula("heisenberg");
        for (long p : {2L, 3L}) {
            if (fast && p == 3) continue;
            count_case(t, "heisenberg p=" + std::to_string(p), rep, f, p,
                       fast ? 5 : 8, false);
        }
    }
    {
        Representation rep = builtin_rep("graded_heisenberg");
        RationalFn f = builtin_formula("graded_heisenberg");
        for (long p : {2L, 3L}) {
            if (fast && p == 3) continue;
            count_case(t, "graded_heisenberg p=" + std::to_string(p), rep, f, p,
                       fast ? 4 : 5, true);
        }
    }
    for (long a = 1; a <= (fast ? 4 : 5); ++a) {
        Representation rep = builtin_rep("star", {{"m", 1}, {"a", a}});
        RationalFn f = builtin_formula("star", {{"m", 1}, {"a", a}});
        count_case(t, "star(1," + std::to_string(a) + ")", rep, f, 2, fast ? 6 : 8,
                   false);
    }
    for (long a = 1; a <= (fast ? 2 : 3); ++a) {
        Representation rep = builtin_rep("star", {{"m", 2}, {"a", a}});
        RationalFn f = builtin_formula("star", {{"m", 2}, {"a", a}});
        count_case(t, "star(2," + std::to_string(a) + ")", rep, f, 2, fast ? 4 : 5,
                   false);
    }
    for (long m = 1; m <= 2; ++m)
        for (long a = 1; a <= (fast ? 2 : 3); ++a) {
            Representation rep = builtin_rep("dual_star", {{"m", m}, {"a", a}});
            RationalFn f = builtin_formula("dual_star", {{"m", m}, {"a", a}});
            count_case(t,
                       "dual_star(" + std::to_string(m) + "," + std::to_string(a) + ")",
                       rep, f, 2, fast ? 4 : 5, false);
        }
    count_case(t, "d4", builtin_rep("d4"), builtin_formula("d4"), 2, fast ? 4 : 6,
               false);
    for (long p : {5L, 3L}) {
        if (fast && p == 5) continue;
        long res = p % 4;
        Representation rep = builtin_rep("kron2");
        RationalFn f = builtin_formula("kron2", {{"res", res}});
        count_case(t, "kron2 p=" + std::to_string(p), rep, f, p, fast ? 4 : 5, false);
    }
    for (long p : {3L, 5L}) {
        if (fast && p == 5) continue;
        Representation rep = builtin_rep("elliptic", {{"D", 1}});
        RationalFn f =
            builtin_formula("elliptic").with_symbol_value("E", elliptic_point_count(1, p));
        count_case(t, "elliptic p=" + std::to_string(p), rep, f, p, fast ? 3 : 4,
                   false);
    }
}

// ---- check: functional equations ----

std::string symmetry_str(int sign, long long b, const std::vector<int>& c) {
    std::string s = "(";
    s += (sign < 0 ? "-1" : "+1");
    s += ", q^" + std::to_string(b) + ", t";
    s += key_str(c);
    return s + ")";
}

void expect_symmetry(Tally& t, const std::string& label, const Representation& rep,
                     int sign, long long b, const std::vector<int>& c_exps,
                     const RationalFn* formula = nullptr) {
    SymmetryData pred = predicted_symmetry(rep);
    t.check(pred.sign == sign && pred.b == b && pred.c_exps == c_exps, [&] {
        return label + ": predicted " + symmetry_str(pred.sign, pred.b, pred.c_exps) +
               ", expected " + symmetry_str(sign, b, c_exps);
    });
    if (formula) {
        FuneqReport rep2 = verify_funeq(*formula, pred);
        t.check(rep2.holds, [&] {
            return label + ": functional equation failed (" + rep2.residual + ")";
        });
    }
}

void funeq_check(Tally& t, const VerifyOptions&) {
    for (long n = 1; n <= 5; ++n) {
        Representation rep = builtin_rep("star", {{"m", n}, {"a", 1}});
        RationalFn f = builtin_formula("free", {{"n", n}});
        expect_symmetry(t, "free n=" + std::to_string(n), rep, n % 2 ? -1 : 1,
                        n * (n - 1) / 2, {static_cast<int>(n)}, &f);
    }
    {
        RationalFn f = builtin_formula("heisenberg");
        expect_symmetry(t, "heisenberg", builtin_rep("heisenberg"), -1, 3, {5}, &f);
    }
    {
        Representation rep = builtin_rep("graded_heisenberg");
        RationalFn f = builtin_formula("graded_heisenberg");
        expect_symmetry(t, "graded_heisenberg", rep, -1, 1, {4, 1}, &f);
        // The collapsed univariate function must satisfy the summed equation.
        RationalFn uni = f.collapsed_univariate();
        FuneqReport r = verify_funeq(uni, predicted_symmetry(rep));
        t.check(r.holds, [&] {
            return "graded_heisenberg collapsed: functional equation failed (" +
                   r.residual + ")";
        });
    }
    for (long a = 1; a <= 7; ++a) {
        Representation rep = builtin_rep("star", {{"m", 1}, {"a", a}});
        RationalFn f = builtin_formula("star", {{"m", 1}, {"a", a}});
        std::vector<int> c(static_cast<size_t>(a), 1);
        if (a >= 2) c[0] = 2;
        expect_symmetry(t, "star(1," + std::to_string(a) + ")", rep, a % 2 ? -1 : 1, 0,
                        c, &f);
    }
    for (long a = 1; a <= 4; ++a) {
        Representation rep = builtin_rep("star", {{"m", 2}, {"a", a}});
        RationalFn f = builtin_formula("star", {{"m", 2}, {"a", a}});
        std::vector<int> c(static_cast<size_t>(a), 2);
        if (a >= 2) c[0] = 4;
        expect_symmetry(t, "star(2," + std::to_string(a) + ")", rep, 1, a, c, &f);
    }
    for (long m = 1; m <= 3; ++m)
        for (long a = 1; a <= 4; ++a) {
            Representation rep = builtin_rep("dual_star", {{"m", m}, {"a", a}});
            RationalFn f = builtin_formula("dual_star", {{"m", m}, {"a", a}});
            std::vector<int> c(static_cast<size_t>(a), static_cast<int>(2 * m));
            c[0] = static_cast<int>(m);
            int sign = (m * a) % 2 ? -1 : 1;
            expect_symmetry(t,
                            "dual_star(" + std::to_string(m) + "," + std::to_string(a) + ")",
                            rep, sign, a * (m * (m - 1) / 2), c, &f);
        }
    {
        RationalFn f = builtin_formula("d4");
        expect_symmetry(t, "d4", builtin_rep("d4"), -1, 1, {2, 2, 2, 2}, &f);
    }
    for (long res : {1L, 3L}) {
        RationalFn f = builtin_formula("kron2", {{"res", res}});
        expect_symmetry(t, "kron2 res=" + std::to_string(res), builtin_rep("kron2"), 1,
                        2, {4, 2}, &f);
    }
    {
        RationalFn f = builtin_formula("elliptic");
        expect_symmetry(t, "elliptic", builtin_rep("elliptic"), 1, 6, {6, 3}, &f);
    }
    for (long d = 2; d <= 4; ++d) {
        Representation rep = builtin_rep("free_nilpotent", {{"c", 2}, {"d", d}});
        long n2 = d * (d - 1) / 2;
        long b = d * (d - 1) / 2 + n2 * (n2 - 1) / 2;
        int sign = (d + n2) % 2 ? -1 : 1;
        expect_symmetry(t, "free_nilpotent(2," + std::to_string(d) + ")", rep, sign, b,
                        {static_cast<int>(2 * d), static_cast<int>(n2)});
    }
    for (auto [c, r1, r2] : std::vector<std::array<long, 3>>{
             {2, 1, 0}, {2, 1, 1}, {2, 2, 1}, {3, 1, 0}, {3, 2, 1}, {4, 1, 1}}) {
        Representation rep =
            builtin_rep("l_lambda", {{"c", c}, {"r1", r1}, {"r2", r2}});
        long n = 1 + c * r1 + r2;
        long top = 1 + r1 + r2;
        long b = top * (top - 1) / 2 + (c - 1) * (r1 * (r1 - 1) / 2);
        std::vector<int> cexp;
        cexp.push_back(static_cast<int>(top + (c - 1) * (1 + r1)));
        for (long j = 2; j <= c; ++j) cexp.push_back(static_cast<int>(r1 * (c - j + 1)));
        std::string label = "l_lambda(" + std::to_string(c) + "," + std::to_string(r1) +
                            "," + std::to_string(r2) + ")";
        expect_symmetry(t, label, rep, n % 2 ? -1 : 1, b, cexp);
        SymmetryData pred = predicted_symmetry(rep);
        t.check(pred.univariate_exponent() == c + (c + 1) * c / 2 * r1 + r2, [&] {
            return label + ": univariate t-exponent " +
                   std::to_string(pred.univariate_exponent());
        });
    }
    // Controls through poset generating functions: a graded poset satisfies
    // the predicted equation, the ungraded witness must fail it.
    {
        Poset diamond(4, {{1, 2}, {1, 3}, {2, 4}, {3, 4}});
        FuneqReport good =
            verify_funeq(stanley_gf(diamond), predicted_symmetry(hasse_rep(diamond)));
        t.check(good.holds,
                [&] { return "diamond poset control failed (" + good.residual + ")"; });
        Poset witness(4, {{1, 2}, {1, 3}, {3, 4}});
        FuneqReport bad =
            verify_funeq(stanley_gf(witness), predicted_symmetry(hasse_rep(witness)));
        t.check(!bad.holds, [&] {
            return "witness poset unexpectedly satisfies the functional equation";
        });
    }
}

// ---- check: poset partition counts and reciprocity ----

void posets_check(Tally& t, const VerifyOptions& opts) {
    const int bound = opts.fast ? 6 : 10;
    for (const auto& [name, P] : poset_catalog()) {
        RationalFn gf = stanley_gf(P);
        std::map<std::vector<int>, Int> coeffs =
            series_expand(gf, bound).at_q(Int(2));  // coefficients are q-free
        for (int m = 0; m <= bound; ++m) {
            Int direct = ppartition_count(P, m);
            t.check(direct == value_at(coeffs, {m}), [&] {
                return name + " m=" + std::to_string(m) + ": direct " + direct.str() +
                       ", series " + value_at(coeffs, {m}).str();
            });
        }
        Representation rep = hasse_rep(P);
        for (long p : {2L, 3L}) {
            CountOptions co;
            co.bound = bound;
            CountTable got = count_subreps(rep, p, co);
            for (int m = 0; m <= bound; ++m) {
                Int direct = ppartition_count(P, m);
                t.check(got.at({m}) == direct, [&] {
                    return name + " p=" + std::to_string(p) + " m=" + std::to_string(m) +
                           ": quiver " + got.at({m}).str() + ", direct " + direct.str();
                });
            }
        }
        DeltaChainResult dc = delta_chain(P);
        std::optional<Monomial> ratio = monomial_ratio(gf.invert_qt(), gf);
        Monomial expect;
        expect.coeff = P.size() % 2 ? Rat(-1) : Rat(1);
        expect.q_exp = 0;
        expect.t_exps = {static_cast<int>(dc.delta_sum)};
        bool reciprocal = ratio.has_value() && *ratio == expect;
        t.check(reciprocal == dc.is_delta_chain, [&] {
            return name + ": reciprocity " + (reciprocal ? "holds" : "fails") +
                   " but the poset is " + (dc.is_delta_chain ? "" : "not ") +
                   "a delta-chain";
        });
        if (dc.is_delta_chain) {
            long long uni = predicted_symmetry(rep).univariate_exponent();
            t.check(dc.delta_sum == uni, [&] {
                return name + ": delta sum " + std::to_string(dc.delta_sum) +
                       " vs predicted t-exponent " + std::to_string(uni);
            });
        }
    }
}

// ---- check: plain sublattice enumeration ----

void enumeration_check(Tally& t, const VerifyOptions& opts) {
    const int max_n = opts.fast ? 3 : 4;
    const int max_e = opts.fast ? 4 : 5;
    for (int n = 0; n <= max_n; ++n) {
        PowerSeries free_series = series_expand(zeta_free_local(n), max_e);
        for (long p : {2L, 3L}) {
            std::map<std::vector<int>, Int> coeffs = free_series.at_q(Int(p));
            for (int e = 0; e <= max_e; ++e) {
                Int dp = count_sublattices(n, p, e);
                t.check(dp == value_at(coeffs, {e}), [&] {
                    return "free n=" + std::to_string(n) + " p=" + std::to_string(p) +
                           " e=" + std::to_string(e) + ": table " + dp.str() +
                           ", series " + value_at(coeffs, {e}).str();
                });
                if (dp <= 2000000) {
                    long long streamed = 0;
                    for_each_sublattice(n, p, e, [&](const LocalLattice&) { ++streamed; });
                    t.check(dp == streamed, [&] {
                        return "free n=" + std::to_string(n) + " p=" + std::to_string(p) +
                               " e=" + std::to_string(e) + ": table " + dp.str() +
                               ", streamed " + std::to_string(streamed);
                    });
                }
            }
        }
    }
    // Counting invariant sublattices of the underlying module (projections
    // plus extended arrow operators) must reproduce the per-index totals of
    // the quiver count.
    for (const char* name : {"heisenberg", "graded_heisenberg", "kron2"}) {
        Representation rep = builtin_rep(name);
        std::vector<MatZ> ops = rep.to_submodule_instance();
        for (long p : {2L, 3L}) {
            CountOptions co;
            co.bound = 3;
            CountTable direct = count_subreps(rep, p, co);
            CountTable module = count_invariant_sublattices(rep.total_rank(), ops, p, 3);
            for (int m = 0; m <= 3; ++m)
                t.check(direct.at({m}) == module.at({m}), [&] {
                    return std::string(name) + " p=" + std::to_string(p) +
                           " m=" + std::to_string(m) + ": quiver " + direct.at({m}).str() +
                           ", module " + module.at({m}).str();
                });
        }
    }
}

// ---- check: tuple invariants ----

template <class Fn>
void for_each_vertex_tuple(const Representation& rep, long p, int max_total, Fn&& fn) {
    LatticeTuple T;
    T.p = p;
    int a = rep.num_vertices();
    T.parts.resize(a);
    std::function<void(int, int)> rec = [&](int v, int left) {
        if (v == a) {
            fn(std::as_const(T));
            return;
        }
        for (int e = 0; e <= left; ++e)
            for_each_sublattice(rep.rank(v), p, e, [&](const LocalLattice& L) {
                T.parts[v] = L;
                rec(v + 1, left - e);
            });
    };
    rec(0, max_total);
}

void invariants_check(Tally& t, const VerifyOptions& opts) {
    const long p = 2;
    const int max_total = opts.fast ? 3 : 4;
    const int n_random = opts.fast ? 100 : 1000;
    const char* names[] = {"heisenberg", "graded_heisenberg", "m4"};
    for (size_t idx = 0; idx < 3; ++idx) {
        const std::string name = names[idx];
        Representation rep = builtin_rep(name);
        DeltaContext ctx = make_delta_context(rep, cocentral_grading(rep), p);
        auto probe = [&](const LatticeTuple& T, const std::string& origin) {
            int search = m_tilde_1_search(ctx, T);
            int formula = m_tilde_1_formula(ctx, T);
            t.check(search == formula, [&] {
                return name + " " + origin + ": search " + std::to_string(search) +
                       ", formula " + std::to_string(formula);
            });
            int tau = tau_of_tuple(to_graded(ctx, T));
            t.check(search <= tau, [&] {
                return name + " " + origin + ": value " + std::to_string(search) +
                       " exceeds tau " + std::to_string(tau);
            });
            t.check(lemma_mc_check(ctx, T), [&] {
                return name + " " + origin + ": minimal-valuation identity failed";
            });
        };
        long long enumerated = 0;
        for_each_vertex_tuple(rep, p, max_total, [&](const LatticeTuple& T) {
            ++enumerated;
            probe(T, "tuple #" + std::to_string(enumerated));
        });
        std::mt19937_64 rng(opts.seed + 1000 * idx);
        for (int i = 0; i < n_random; ++i)
            probe(random_tuple(rep, p, 2, rng), "random #" + std::to_string(i));
    }
}

// ---- check: combinatorial identities ----

void combinatorics_check(Tally& t, const VerifyOptions& opts) {
    for (int n = 1; n <= 6; ++n) {
        for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
            std::vector<int> I;
            for (int i = 1; i < n; ++i)
                if (mask & (1u << (i - 1))) I.push_back(i);
            // The construction itself cross-checks the descent-class sum
            // against the product of Gaussian binomials and throws on any
            // mismatch; evaluating at q = 1 adds an independent count.
            IntPoly prod = q_multinomial_descent(n, I);
            Int expect = 1;
            for (int i = 2; i <= n; ++i) expect *= i;
            int prev = 0;
            for (size_t j = 0; j <= I.size(); ++j) {
                int next = j < I.size() ? I[j] : n;
                Int fact = 1;
                for (int i = 2; i <= next - prev; ++i) fact *= i;
                expect /= fact;
                prev = next;
            }
            t.check(prod.eval(Rat(1), {Rat(1)}) == Rat(expect), [&] {
                return "q-multinomial n=" + std::to_string(n) + " |I|=" +
                       std::to_string(I.size()) + ": value at q=1 differs from " +
                       expect.str();
            });
        }
        t.check(coxeter_identity_check(n), [&] {
            return "longest-element complementation fails at n=" + std::to_string(n);
        });
    }
    const int B = opts.fast ? 8 : 12;
    for (int a = 1; a <= 5; ++a)
        t.check(macmahon_identity_check(a, B), [&] {
            return "thin-star series identity fails at a=" + std::to_string(a);
        });
    {
        RationalFn w1 = builtin_formula("elliptic_w1");
        RationalFn w2 = builtin_formula("elliptic_w2");
        std::optional<Monomial> r1 = monomial_ratio(w1.invert_qt(), w1);
        std::optional<Monomial> r2 = monomial_ratio(w2.invert_qt(), w2);
        Monomial e1, e2;
        e1.coeff = Rat(1);
        e1.q_exp = 6;
        e1.t_exps = {9};
        e2.coeff = Rat(1);
        e2.q_exp = 7;
        e2.t_exps = {9};
        t.check(r1.has_value() && *r1 == e1,
                [&] { return std::string("first elliptic part: inversion ratio is ") +
                             (r1 ? r1->to_string() : "not a monomial"); });
        t.check(r2.has_value() && *r2 == e2,
                [&] { return std::string("second elliptic part: inversion ratio is ") +
                             (r2 ? r2->to_string() : "not a monomial"); });
    }
}

// ---- check: homogeneity classification ----

void homogeneity_check(Tally& t, const VerifyOptions&) {
    auto expect_h = [&](const std::string& label, const Representation& rep, bool want) {
        HomogeneityResult r = check_homogeneity(rep, cocentral_grading(rep));
        t.check(r.homogeneous == want, [&] {
            return label + ": expected " + (want ? "homogeneous" : "inhomogeneous");
        });
    };
    expect_h("heisenberg", builtin_rep("heisenberg"), true);
    expect_h("graded_heisenberg", builtin_rep("graded_heisenberg"), true);
    expect_h("m4", builtin_rep("m4"), true);
    expect_h("m4_graded", builtin_rep("m4_graded"), true);
    for (long d = 2; d <= 4; ++d)
        expect_h("free_nilpotent(2," + std::to_string(d) + ")",
                 builtin_rep("free_nilpotent", {{"c", 2}, {"d", d}}), true);
    for (auto [c, r1, r2] : std::vector<std::array<long, 3>>{
             {2, 1, 0}, {2, 1, 1}, {3, 1, 0}, {3, 2, 1}})
        expect_h("l_lambda(" + std::to_string(c) + "," + std::to_string(r1) + "," +
                     std::to_string(r2) + ")",
                 builtin_rep("l_lambda", {{"c", c}, {"r1", r1}, {"r2", r2}}), true);
    expect_h("elliptic", builtin_rep("elliptic"), true);
    expect_h("fil4", builtin_rep("fil4"), false);
    expect_h("fil4_graded", builtin_rep("fil4_graded"), false);
    // Hasse representations are homogeneous exactly for delta-chain posets.
    for (const auto& [name, P] : poset_catalog())
        expect_h("hasse:" + name, hasse_rep(P), delta_chain(P).is_delta_chain);
}

struct CheckEntry {
    const char* slug;
    const char* title;
    void (*fn)(Tally&, const VerifyOptions&);
};

constexpr CheckEntry kChecks[] = {
    {"counts", "brute-force subrepresentation counts match the closed forms",
     counts_check},
    {"funeq", "predicted local functional equations hold and controls fail", funeq_check},
    {"posets", "partition counts, generating functions, and reciprocity agree",
     posets_check},
    {"enumeration", "sublattice totals and module-invariant counts agree",
     enumeration_check},
    {"invariants", "corner search matches the valuation formula on tuples",
     invariants_check},
    {"combinatorics", "q-multinomial, complementation, and series identities hold",
     combinatorics_check},
    {"homogeneity", "gradings classify the homogeneous representations", homogeneity_check},
};

}  // namespace

std::vector<std::string> check_slugs() {
    std::vector<std::string> out;
    for (const auto& e : kChecks) out.emplace_back(e.slug);
    return out;
}

CheckResult run_check(const std::string& slug, const VerifyOptions& opts) {
    for (const auto& e : kChecks) {
        if (slug != e.slug) continue;
        CheckResult r;
        r.slug = e.slug;
        r.title = e.title;
        auto start = std::chrono::steady_clock::now();
        Tally t;
        try {
            e.fn(t, opts);
            r.passed = t.failures == 0;
            r.detail = t.summary();
        } catch (const std::exception& ex) {
            r.passed = false;
            r.detail = std::string("exception: ") + ex.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                        .count();
        return r;
    }
    throw Error("unknown check: " + slug);
}

std::vector<CheckResult> run_all_checks(const VerifyOptions& opts) {
    std::vector<CheckResult> out;
    for (const auto& e : kChecks) out.push_back(run_check(e.slug, opts));
    return out;
}

std::string checks_report_json(const std::vector<CheckResult>& results,
                               const VerifyOptions& opts) {
    nlohmann::ordered_json j;
    j["fast"] = opts.fast;
    j["seed"] = opts.seed;
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    bool all = true;
    for (const CheckResult& r : results) {
        nlohmann::ordered_json cj;
        cj["slug"] = r.slug;
        cj["title"] = r.title;
        cj["passed"] = r.passed;
        cj["seconds"] = r.seconds;
        cj["detail"] = r.detail;
        arr.push_back(std::move(cj));
        all = all && r.passed;
    }
    j["checks"] = std::move(arr);
    j["all_passed"] = all;
    return j.dump(2);
}

}  // namespace qz
