#include "qz/lattice.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <utility>

#include "json.hpp"

namespace qz {

namespace {

constexpr int kMaxFastDim = 16;
const Int kFastIndexLimit = Int(1) << 31;

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

void require_prime(long p) {
    if (!is_prime(p)) throw Error("prime expected, got " + std::to_string(p));
}

// Power that must fit comfortably in machine words; guards the enumeration.
long long small_pow(long p, int e) {
    Int v = pow_int(Int(p), e);
    if (v >= kFastIndexLimit)
        throw Error("p^e = " + v.str() + " exceeds the 31-bit enumeration limit");
    return v.convert_to<long long>();
}

// Enumerates every HNF matrix of an index-p^e sublattice of Z^n as a flat
// row-major array of machine integers. Diagonal exponent compositions run in
// lexicographic order; above-diagonal residues in odometer order (last
// position fastest).
void for_each_hnf(int n, long p, int e,
                  const std::function<void(const std::vector<long long>&)>& cb) {
    if (n == 0) {
        if (e == 0) cb({});
        return;
    }
    small_pow(p, e);
    std::vector<int> a(n, 0);
    std::vector<long long> mat(static_cast<size_t>(n) * n, 0);
    std::function<void(int, int)> rec = [&](int pos, int remaining) {
        if (pos == n - 1) {
            a[pos] = remaining;
            std::vector<long long> diag(n);
            for (int i = 0; i < n; ++i) diag[i] = small_pow(p, a[i]);
            std::fill(mat.begin(), mat.end(), 0);
            for (int i = 0; i < n; ++i) mat[static_cast<size_t>(i) * n + i] = diag[i];
            std::vector<std::pair<int, int>> slots;  // (i, j), j > i, free residues
            for (int j = 1; j < n; ++j)
                if (diag[j] > 1)
                    for (int i = 0; i < j; ++i) slots.emplace_back(i, j);
            while (true) {
                cb(mat);
                int k = static_cast<int>(slots.size()) - 1;
                for (; k >= 0; --k) {
                    auto [i, j] = slots[k];
                    long long& v = mat[static_cast<size_t>(i) * n + j];
                    if (++v < diag[j]) break;
                    v = 0;
                }
                if (k < 0) break;
            }
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            a[pos] = v;
            rec(pos + 1, remaining - v);
        }
    };
    rec(0, e);
}

MatZ mat_from_flat(int n, const std::vector<long long>& flat) {
    MatZ m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = flat[static_cast<size_t>(i) * n + j];
    return m;
}

}  // namespace

LocalLattice make_lattice(long p, const MatZ& basis_rows) {
    require_prime(p);
    int n = basis_rows.cols;
    HnfResult h = row_hnf(basis_rows);
    if (h.rank != n) throw Error("make_lattice: basis does not have full rank");
    LocalLattice L;
    L.p = p;
    L.basis = h.H.row_slice(0, n);
    L.index_exponent = 0;
    for (int j = 0; j < n; ++j) {
        Int d = L.basis.at(j, j);
        int v = 0;
        while (d % p == 0) {
            d /= p;
            ++v;
        }
        if (d != 1)
            throw Error("make_lattice: index is not a power of " + std::to_string(p));
        L.index_exponent += v;
    }
    return L;
}

LocalLattice standard_lattice(long p, int n) {
    LocalLattice L;
    L.p = p;
    L.basis = MatZ::identity(n);
    L.index_exponent = 0;
    return L;
}

Int count_sublattices(int n, long p, int e) {
    if (n < 0 || e < 0) throw Error("count_sublattices: negative arguments");
    std::vector<Int> cur(e + 1, Int(0));
    cur[0] = 1;
    for (int j = 1; j <= n; ++j) {
        std::vector<Int> next(e + 1, Int(0));
        for (int s = 0; s <= e; ++s)
            for (int d = 0; d <= s; ++d)
                next[s] += pow_int(Int(p), d * (j - 1)) * cur[s - d];
        cur = std::move(next);
    }
    return cur[e];
}

void for_each_sublattice(int n, long p, int e,
                         const std::function<void(const LocalLattice&)>& f) {
    require_prime(p);
    for_each_hnf(n, p, e, [&](const std::vector<long long>& flat) {
        LocalLattice L;
        L.p = p;
        L.basis = mat_from_flat(n, flat);
        L.index_exponent = e;
        f(L);
    });
}

std::vector<LocalLattice> enum_sublattices(int n, long p, int e) {
    std::vector<LocalLattice> out;
    for_each_sublattice(n, p, e, [&](const LocalLattice& L) { out.push_back(L); });
    return out;
}

int LatticeTuple::total_exponent() const {
    int e = 0;
    for (const auto& part : parts) e += part.index_exponent;
    return e;
}

std::vector<int> LatticeTuple::exponent_vector() const {
    std::vector<int> e;
    e.reserve(parts.size());
    for (const auto& part : parts) e.push_back(part.index_exponent);
    return e;
}

LatticeTuple full_tuple(const Representation& rep, long p) {
    LatticeTuple T;
    T.p = p;
    for (int h = 0; h < rep.num_vertices(); ++h)
        T.parts.push_back(standard_lattice(p, rep.rank(h)));
    return T;
}

LatticeTuple random_tuple(const Representation& rep, long p, int max_exponent,
                          std::mt19937_64& rng) {
    require_prime(p);
    if (max_exponent < 0) throw Error("random_tuple: negative exponent bound");
    LatticeTuple T;
    T.p = p;
    for (int h = 0; h < rep.num_vertices(); ++h) {
        int n = rep.rank(h);
        MatZ m(n, n);
        int e = 0;
        std::vector<long long> diag(n);
        for (int i = 0; i < n; ++i) {
            int ai = static_cast<int>(rng() % static_cast<unsigned long long>(max_exponent + 1));
            diag[i] = small_pow(p, ai);
            m.at(i, i) = diag[i];
            e += ai;
        }
        for (int j = 1; j < n; ++j)
            if (diag[j] > 1)
                for (int i = 0; i < j; ++i)
                    m.at(i, j) = static_cast<long long>(
                        rng() % static_cast<unsigned long long>(diag[j]));
        LocalLattice L;
        L.p = p;
        L.basis = std::move(m);
        L.index_exponent = e;
        T.parts.push_back(std::move(L));
    }
    return T;
}

namespace {

void validate_tuple(const Representation& rep, const LatticeTuple& T) {
    if (static_cast<int>(T.parts.size()) != rep.num_vertices())
        throw Error("lattice tuple has " + std::to_string(T.parts.size()) +
                    " parts for " + std::to_string(rep.num_vertices()) + " vertices");
    for (int h = 0; h < rep.num_vertices(); ++h) {
        if (T.parts[h].dim() != rep.rank(h))
            throw Error("lattice tuple part " + std::to_string(h) +
                        " has wrong dimension");
        if (T.parts[h].p != T.p)
            throw Error("lattice tuple mixes primes");
    }
}

}  // namespace

bool is_subrep(const Representation& rep, const LatticeTuple& T) {
    validate_tuple(rep, T);
    int a = rep.num_vertices();
    std::vector<MatZ> adj(a);
    std::vector<Int> mod(a);
    for (int h = 0; h < a; ++h) {
        if (rep.rank(h) == 0 || T.parts[h].index_exponent == 0) continue;
        adj[h] = adjugate(T.parts[h].basis);
        mod[h] = pow_int(Int(T.p), T.parts[h].index_exponent);
    }
    for (const auto& ar : rep.arrows()) {
        int h = ar.head;
        if (rep.rank(h) == 0 || T.parts[h].index_exponent == 0) continue;
        MatZ prod = T.parts[ar.tail].basis * ar.matrix;
        for (int i = 0; i < prod.rows; ++i) {
            std::vector<Int> y = prod.row_vec(i) * adj[h];
            for (const Int& c : y)
                if (c % mod[h] != 0) return false;
        }
    }
    return true;
}

Int CountTable::at(const std::vector<int>& key) const {
    auto it = counts.find(key);
    return it == counts.end() ? Int(0) : it->second;
}

std::vector<Int> CountTable::univariate() const {
    if (multivariate) throw Error("CountTable::univariate on a multivariate table");
    std::vector<Int> out(bound + 1, Int(0));
    for (const auto& [k, v] : counts) out[k[0]] = v;
    return out;
}

std::string CountTable::to_json() const {
    nlohmann::ordered_json j;
    j["prime"] = prime;
    j["mode"] = multivariate ? "multivariate" : "univariate";
    nlohmann::ordered_json cj = nlohmann::ordered_json::object();
    const Int js_safe = (Int(1) << 53);
    for (const auto& [key, value] : counts) {
        std::string ks;
        for (size_t i = 0; i < key.size(); ++i)
            ks += (i ? "," : "") + std::to_string(key[i]);
        if (value <= js_safe)
            cj[ks] = value.convert_to<long long>();
        else
            cj[ks] = value.str();
    }
    j["counts"] = std::move(cj);
    return j.dump(2);
}

namespace {

// ---- fast counting backend: machine-word lattices with cached adjugates ----

struct SmallLattice {
    std::vector<int32_t> m;    // n x n HNF, row-major
    std::vector<int32_t> adj;  // adjugate reduced into [0, p^e)
    long long pe = 1;          // p^e
};

// Adjugate of an upper-triangular HNF matrix by integer back substitution on
// M * X = det * I; exact, then reduced modulo p^e = det. Entries of the
// adjugate are cofactors, bounded by (n-1)! det^{n-1}; when (n-1)! det^n
// fits a machine word the whole substitution runs on long long.
void adjugate_mod(int n, const std::vector<long long>& mat, const Int& det,
                  std::vector<int32_t>& out) {
    out.assign(static_cast<size_t>(n) * n, 0);
    Int word_bound = 1;
    for (int i = 2; i <= n - 1; ++i) word_bound *= i;
    for (int i = 0; i < n; ++i) word_bound *= det;
    if (word_bound < (Int(1) << 62)) {
        const long long d = det.convert_to<long long>();
        std::vector<long long> x(static_cast<size_t>(n) * n, 0);
        for (int j = 0; j < n; ++j)
            for (int i = j; i >= 0; --i) {  // the adjugate is upper triangular
                long long acc = i == j ? d : 0;
                for (int k = i + 1; k <= j; ++k) {
                    long long mik = mat[static_cast<size_t>(i) * n + k];
                    if (mik != 0) acc -= mik * x[static_cast<size_t>(k) * n + j];
                }
                long long mii = mat[static_cast<size_t>(i) * n + i];
                if (acc % mii != 0)
                    throw Error("adjugate_mod: non-integral back substitution");
                long long xi = acc / mii;
                x[static_cast<size_t>(i) * n + j] = xi;
                long long r = xi % d;
                if (r < 0) r += d;
                out[static_cast<size_t>(i) * n + j] = static_cast<int32_t>(r);
            }
        return;
    }
    std::vector<Int> x(static_cast<size_t>(n) * n, Int(0));
    for (int j = 0; j < n; ++j)
        for (int i = n - 1; i >= 0; --i) {
            Int acc = i == j ? det : Int(0);
            for (int k = i + 1; k < n; ++k) {
                long long mik = mat[static_cast<size_t>(i) * n + k];
                if (mik != 0) acc -= mik * x[static_cast<size_t>(k) * n + j];
            }
            long long mii = mat[static_cast<size_t>(i) * n + i];
            if (acc % mii != 0) throw Error("adjugate_mod: non-integral back substitution");
            x[static_cast<size_t>(i) * n + j] = acc / mii;
        }
    for (size_t idx = 0; idx < x.size(); ++idx) {
        Int r = x[idx] % det;
        if (r < 0) r += det;
        out[idx] = static_cast<int32_t>(r.convert_to<long long>());
    }
}

// Lattice lists are cached per (rank, exponent) while the total stays under
// this budget; larger lists are regenerated on each pass to keep memory flat
// (the first vertex is enumerated only once, so single-vertex counts never
// pay for regeneration).
constexpr long long kListCacheBudget = 256LL << 20;

struct FastBackend {
    long p;
    std::map<std::pair<int, int>, std::vector<SmallLattice>> cache;
    long long cached_bytes = 0;
    // Arrow matrices as machine words, one per arrow.
    std::vector<std::vector<long long>> f;
    std::vector<int> f_rows, f_cols;

    using Item = SmallLattice;

    template <class Fn>
    void for_each(int n, int e, Fn&& fn) {
        auto key = std::make_pair(n, e);
        auto it = cache.find(key);
        if (it == cache.end()) {
            Int bytes = count_sublattices(n, p, e) * (8LL * n * n + 112);
            if (bytes + cached_bytes > kListCacheBudget) {
                stream(n, e, fn);
                return;
            }
            std::vector<SmallLattice> out;
            stream(n, e, [&](const SmallLattice& s) { out.push_back(s); });
            cached_bytes += bytes.convert_to<long long>();
            it = cache.emplace(key, std::move(out)).first;
        }
        for (const SmallLattice& s : it->second) fn(s);
    }

    template <class Fn>
    void stream(int n, int e, Fn&& fn) const {
        Int det = pow_int(Int(p), e);
        SmallLattice s;
        s.pe = det.convert_to<long long>();
        if (e == 0) s.adj.assign(static_cast<size_t>(n) * n, 0);
        for_each_hnf(n, p, e, [&](const std::vector<long long>& mat) {
            s.m.assign(mat.begin(), mat.end());
            if (e > 0) adjugate_mod(n, mat, det, s.adj);
            fn(std::as_const(s));
        });
    }

    bool arrow_ok(int arrow, const SmallLattice& Lt, const SmallLattice& Lh) const {
        const long long pe = Lh.pe;
        if (pe == 1) return true;
        const int nt = f_rows[arrow];
        const int nh = f_cols[arrow];
        const auto& F = f[arrow];
        std::array<long long, kMaxFastDim> r{};
        for (int i = 0; i < nt; ++i) {
            for (int k = 0; k < nh; ++k) {
                long long acc = 0;
                for (int j = 0; j < nt; ++j) {
                    long long mij = Lt.m[static_cast<size_t>(i) * nt + j];
                    if (mij == 0) continue;
                    acc += mij * (F[static_cast<size_t>(j) * nh + k] % pe) % pe;
                }
                acc %= pe;
                r[k] = acc < 0 ? acc + pe : acc;
            }
            for (int c = 0; c < nh; ++c) {
                long long acc = 0;
                for (int k = 0; k < nh; ++k)
                    acc += r[k] * Lh.adj[static_cast<size_t>(k) * nh + c] % pe;
                if (acc % pe != 0) return false;
            }
        }
        return true;
    }
};

// ---- exact fallback backend: big-integer lattices ----

struct BigLattice {
    MatZ basis;
    MatZ adj;
    Int pe = 1;
};

struct BigBackend {
    long p;
    std::map<std::pair<int, int>, std::vector<BigLattice>> cache;
    long long cached_bytes = 0;
    std::vector<MatZ> f;

    using Item = BigLattice;

    template <class Fn>
    void for_each(int n, int e, Fn&& fn) {
        auto key = std::make_pair(n, e);
        auto it = cache.find(key);
        if (it == cache.end()) {
            Int bytes = count_sublattices(n, p, e) * (128LL * n * n + 160);
            if (bytes + cached_bytes > kListCacheBudget) {
                stream(n, e, fn);
                return;
            }
            std::vector<BigLattice> out;
            stream(n, e, [&](const BigLattice& b) { out.push_back(b); });
            cached_bytes += bytes.convert_to<long long>();
            it = cache.emplace(key, std::move(out)).first;
        }
        for (const BigLattice& b : it->second) fn(b);
    }

    template <class Fn>
    void stream(int n, int e, Fn&& fn) const {
        Int pe = pow_int(Int(p), e);
        for_each_sublattice(n, p, e, [&](const LocalLattice& L) {
            BigLattice b;
            b.basis = L.basis;
            b.pe = pe;
            if (e > 0 && n > 0) b.adj = adjugate(L.basis);
            fn(std::as_const(b));
        });
    }

    bool arrow_ok(int arrow, const BigLattice& Lt, const BigLattice& Lh) const {
        if (Lh.pe == 1) return true;
        MatZ prod = Lt.basis * f[arrow];
        for (int i = 0; i < prod.rows; ++i) {
            std::vector<Int> y = prod.row_vec(i) * Lh.adj;
            for (const Int& c : y)
                if (c % Lh.pe != 0) return false;
        }
        return true;
    }
};

template <class Backend>
void count_recursive(const Representation& rep, Backend& backend, int bound,
                     bool multivariate, CountTable& table) {
    int a = rep.num_vertices();
    // Arrows become testable once their later endpoint is assigned.
    std::vector<std::vector<int>> arrows_by_max(a);
    for (size_t k = 0; k < rep.arrows().size(); ++k)
        arrows_by_max[std::max(rep.arrows()[k].tail, rep.arrows()[k].head)].push_back(
            static_cast<int>(k));
    using Rec = typename Backend::Item;
    std::vector<const Rec*> chosen(a, nullptr);
    std::vector<int> evec(a, 0);
    std::function<void(int, int)> rec = [&](int v, int used) {
        if (v == a) {
            std::vector<int> key =
                multivariate ? evec : std::vector<int>{std::accumulate(
                                          evec.begin(), evec.end(), 0)};
            table.counts[key] += 1;
            return;
        }
        for (int ev = 0; ev + used <= bound; ++ev) {
            evec[v] = ev;
            backend.for_each(rep.rank(v), ev, [&](const Rec& L) {
                chosen[v] = &L;
                for (int k : arrows_by_max[v]) {
                    const auto& ar = rep.arrows()[k];
                    if (!backend.arrow_ok(k, *chosen[ar.tail], *chosen[ar.head]))
                        return;
                }
                rec(v + 1, used + ev);
            });
        }
    };
    rec(0, 0);
}

void init_keys(CountTable& table, const Representation& rep, int bound,
               bool multivariate) {
    if (!multivariate) {
        for (int e = 0; e <= bound; ++e) table.counts[{e}] = 0;
        return;
    }
    int a = rep.num_vertices();
    std::vector<int> evec(a, 0);
    std::function<void(int, int)> rec = [&](int v, int used) {
        if (v == a) {
            table.counts[evec] = 0;
            return;
        }
        for (int ev = 0; ev + used <= bound; ++ev) {
            evec[v] = ev;
            rec(v + 1, used + ev);
        }
    };
    rec(0, 0);
}

Int predicted_candidates(const Representation& rep, long p, int bound) {
    int a = rep.num_vertices();
    // Per-vertex generating counts convolved under the total-degree cap.
    std::vector<Int> acc(bound + 1, Int(0));
    acc[0] = 1;
    for (int v = 0; v < a; ++v) {
        std::vector<Int> next(bound + 1, Int(0));
        for (int s = 0; s <= bound; ++s) {
            if (acc[s] == 0) continue;
            for (int ev = 0; s + ev <= bound; ++ev)
                next[s + ev] += acc[s] * count_sublattices(rep.rank(v), p, ev);
        }
        acc = std::move(next);
    }
    Int total = 0;
    for (const Int& c : acc) total += c;
    return total;
}

// ---- acceleration: enumerate sources inside intersected arrow preimages ----

// Basis of {x : x * F lies in L}, where L has p-power index p^e.
MatZ preimage_lattice(const MatZ& F, const LocalLattice& L) {
    int nt = F.rows;
    int nh = F.cols;
    if (nh == 0 || L.index_exponent == 0) return MatZ::identity(nt);
    MatZ A = F * adjugate(L.basis);
    Int pe = pow_int(Int(L.p), L.index_exponent);
    MatZ stacked(nt + nh, nh);
    for (int i = 0; i < nt; ++i)
        for (int j = 0; j < nh; ++j) stacked.at(i, j) = A.at(i, j);
    for (int j = 0; j < nh; ++j) stacked.at(nt + j, j) = pe;
    MatZ K = left_kernel(stacked);
    MatZ pre = K.col_slice(0, nt);
    if (row_hnf(pre).rank != nt)
        throw Error("preimage_lattice: preimage is not full rank");
    return pre;
}

MatZ intersect_lattices(const MatZ& B1, const MatZ& B2) {
    MatZ stacked = B1.vstack(Int(-1) * B2);
    MatZ K = left_kernel(stacked);
    return K.col_slice(0, B1.rows) * B1;
}

std::vector<int> reverse_topological_order(const Representation& rep) {
    int a = rep.num_vertices();
    std::vector<int> outdeg(a, 0);
    std::vector<std::vector<int>> into(a);  // arrows by head: gives tails
    for (const auto& ar : rep.arrows()) {
        if (ar.tail == ar.head)
            throw Error("accelerated counting requires an acyclic quiver (loop found)");
        ++outdeg[ar.tail];
        into[ar.head].push_back(ar.tail);
    }
    std::vector<int> order;
    std::vector<int> ready;
    for (int v = 0; v < a; ++v)
        if (outdeg[v] == 0) ready.push_back(v);
    while (!ready.empty()) {
        int v = ready.back();
        ready.pop_back();
        order.push_back(v);
        for (int t : into[v])
            if (--outdeg[t] == 0) ready.push_back(t);
    }
    if (static_cast<int>(order.size()) != a)
        throw Error("accelerated counting requires an acyclic quiver (cycle found)");
    return order;
}

void count_accelerated(const Representation& rep, long p, int bound, bool multivariate,
                       CountTable& table) {
    int a = rep.num_vertices();
    std::vector<int> order = reverse_topological_order(rep);
    std::vector<LocalLattice> chosen(a);
    std::vector<int> evec(a, 0);
    std::function<void(int, int)> rec = [&](int step, int used) {
        if (step == a) {
            std::vector<int> key =
                multivariate ? evec : std::vector<int>{std::accumulate(
                                          evec.begin(), evec.end(), 0)};
            table.counts[key] += 1;
            return;
        }
        int v = order[step];
        int n = rep.rank(v);
        MatZ P = MatZ::identity(n);
        for (const auto& ar : rep.arrows()) {
            if (ar.tail != v) continue;
            P = intersect_lattices(P, preimage_lattice(ar.matrix, chosen[ar.head]));
        }
        LocalLattice Pl = make_lattice(p, P);
        for (int ev = Pl.index_exponent; ev + used <= bound; ++ev) {
            evec[v] = ev;
            for_each_sublattice(n, p, ev - Pl.index_exponent, [&](const LocalLattice& H) {
                chosen[v] = make_lattice(p, H.basis * Pl.basis);
                rec(step + 1, used + ev);
            });
        }
    };
    rec(0, 0);
}

}  // namespace

CountTable count_subreps(const Representation& rep, long p, const CountOptions& opt) {
    require_prime(p);
    if (rep.total_rank() < 1) throw Error("count_subreps: representation has rank 0");
    if (opt.bound < 0) throw Error("count_subreps: negative bound");
    Int predicted = predicted_candidates(rep, p, opt.bound);
    if (predicted > opt.ceiling)
        throw Error("count_subreps: predicted " + predicted.str() +
                    " candidate tuples exceed the ceiling " + opt.ceiling.str());
    CountTable table;
    table.prime = p;
    table.multivariate = opt.multivariate;
    table.bound = opt.bound;
    init_keys(table, rep, opt.bound, opt.multivariate);
    if (opt.accelerate) {
        count_accelerated(rep, p, opt.bound, opt.multivariate, table);
        return table;
    }
    bool fast = pow_int(Int(p), opt.bound) < kFastIndexLimit;
    for (int h = 0; h < rep.num_vertices() && fast; ++h)
        if (rep.rank(h) > kMaxFastDim) fast = false;
    const Int word_limit = Int(1) << 62;
    for (const auto& ar : rep.arrows()) {
        for (const Int& x : ar.matrix.a)
            if (x >= word_limit || x <= -word_limit) {
                fast = false;
                break;
            }
        if (!fast) break;
    }
    if (fast) {
        FastBackend backend;
        backend.p = p;
        for (const auto& ar : rep.arrows()) {
            std::vector<long long> flat;
            flat.reserve(ar.matrix.a.size());
            for (const Int& x : ar.matrix.a) flat.push_back(x.convert_to<long long>());
            backend.f.push_back(std::move(flat));
            backend.f_rows.push_back(ar.matrix.rows);
            backend.f_cols.push_back(ar.matrix.cols);
        }
        count_recursive(rep, backend, opt.bound, opt.multivariate, table);
    } else {
        BigBackend backend;
        backend.p = p;
        for (const auto& ar : rep.arrows()) backend.f.push_back(ar.matrix);
        count_recursive(rep, backend, opt.bound, opt.multivariate, table);
    }
    return table;
}

CountTable count_invariant_sublattices(int n, const std::vector<MatZ>& operators, long p,
                                       int bound, const Int& ceiling) {
    std::vector<Vertex> vs{{"v1", n}};
    std::vector<Arrow> as;
    for (size_t k = 0; k < operators.size(); ++k) {
        if (operators[k].rows != n || operators[k].cols != n)
            throw Error("count_invariant_sublattices: operator " + std::to_string(k) +
                        " is not " + std::to_string(n) + "x" + std::to_string(n));
        as.push_back({"op" + std::to_string(k + 1), 0, 0, operators[k]});
    }
    Representation rep(std::move(vs), std::move(as));
    CountOptions opt;
    opt.bound = bound;
    opt.ceiling = ceiling;
    return count_subreps(rep, p, opt);
}

}  // namespace qz
