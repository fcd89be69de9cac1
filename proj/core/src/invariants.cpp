#include "qz/invariants.hpp"

#include <algorithm>

namespace qz {

std::vector<int> NuInvariant::descents_star() const {
    std::vector<int> out = descents;
    out.push_back(n);
    return out;
}

std::vector<int> NuInvariant::jumps_star() const {
    std::vector<int> out = jumps;
    out.push_back(trailing);
    return out;
}

int NuInvariant::index_exponent() const {
    std::vector<int> pos = descents_star();
    std::vector<int> r = jumps_star();
    int e = 0;
    for (size_t i = 0; i < pos.size(); ++i) e += pos[i] * r[i];
    return e;
}

std::vector<int> NuInvariant::reconstructed_exponents() const {
    std::vector<int> pos = descents_star();
    std::vector<int> r = jumps_star();
    std::vector<int> lambda(n, 0);
    for (int i = 1; i <= n; ++i)
        for (size_t k = 0; k < pos.size(); ++k)
            if (pos[k] >= i) lambda[i - 1] += r[k];
    return lambda;
}

NuInvariant nu_invariant(const LocalLattice& L) {
    NuInvariant nu;
    nu.n = L.dim();
    if (nu.n == 0) return nu;
    SnfResult snf = smith_normal_form(L.basis);
    if (snf.rank != nu.n) throw Error("nu_invariant: lattice basis is singular");
    std::vector<int> asc;
    for (const Int& d : snf.divisors()) asc.push_back(valuation(d, L.p));
    nu.exponents.assign(asc.rbegin(), asc.rend());
    for (int i = 1; i < nu.n; ++i)
        if (nu.exponents[i - 1] > nu.exponents[i]) {
            nu.descents.push_back(i);
            nu.jumps.push_back(nu.exponents[i - 1] - nu.exponents[i]);
        }
    nu.trailing = nu.exponents.back();
    return nu;
}

DeltaContext make_delta_context(const Representation& rep, const Grading& g, long p) {
    HomogeneityResult hom = check_homogeneity(rep, g);
    if (!hom.homogeneous) {
        const auto& w = *hom.witness;
        throw Error("delta invariants need a homogeneous representation; generator " +
                    std::to_string(w.generator) + " maps vertex " + std::to_string(w.tail) +
                    " layer " + std::to_string(w.from_layer) + " into vertex " +
                    std::to_string(w.head) + " layer " + std::to_string(w.to_layer));
    }
    DeltaContext ctx;
    ctx.p = p;
    ctx.grading = g;
    std::vector<MatZ> trans = transformed_arrow_matrices(rep, g);
    std::vector<Vertex> vs;
    for (int h = 0; h < rep.num_vertices(); ++h) vs.push_back(rep.vertices()[h]);
    std::vector<Arrow> as;
    for (size_t k = 0; k < rep.arrows().size(); ++k) {
        Arrow ar = rep.arrows()[k];
        ar.matrix = trans[k];
        as.push_back(std::move(ar));
    }
    ctx.graded = Representation(std::move(vs), std::move(as));
    for (int h = 0; h < rep.num_vertices(); ++h)
        ctx.delta.push_back(delta_matrix(g, h, p));
    return ctx;
}

LatticeTuple to_graded(const DeltaContext& ctx, const LatticeTuple& T) {
    if (static_cast<int>(T.parts.size()) != ctx.num_vertices())
        throw Error("to_graded: tuple size mismatch");
    LatticeTuple out;
    out.p = T.p;
    for (int h = 0; h < ctx.num_vertices(); ++h) {
        if (ctx.graded.rank(h) == 0) {
            out.parts.push_back(T.parts[h]);
            continue;
        }
        out.parts.push_back(
            make_lattice(T.p, T.parts[h].basis * ctx.grading.basis_change_inv[h]));
    }
    return out;
}

LatticeTuple scale_by_delta(const DeltaContext& ctx, const LatticeTuple& graded_tuple,
                            int m) {
    if (m < 0) throw Error("scale_by_delta: negative power");
    LatticeTuple out;
    out.p = graded_tuple.p;
    for (int h = 0; h < ctx.num_vertices(); ++h) {
        if (ctx.graded.rank(h) == 0 || m == 0) {
            out.parts.push_back(graded_tuple.parts[h]);
            continue;
        }
        MatZ scaled = graded_tuple.parts[h].basis;
        for (int k = 0; k < m; ++k) scaled = scaled * ctx.delta[h];
        out.parts.push_back(make_lattice(graded_tuple.p, scaled));
    }
    return out;
}

int tau_of_tuple(const LatticeTuple& graded_tuple) {
    int tau = 0;
    for (const auto& part : graded_tuple.parts) tau += nu_invariant(part).tau();
    return tau;
}

int m_tilde_1_search(const DeltaContext& ctx, const LatticeTuple& T) {
    LatticeTuple graded = to_graded(ctx, T);
    int tau = tau_of_tuple(graded);
    for (int m = 0; m <= tau; ++m)
        if (is_subrep(ctx.graded, scale_by_delta(ctx, graded, m))) return m;
    throw Error("m_tilde_1_search: no delta power up to tau(M) = " + std::to_string(tau) +
                " yields a subrepresentation");
}

namespace {

// alpha_h with Lambda_h = row span of D_h * alpha_h^{-1}, D_h the descending
// elementary divisor diagonal: alpha = V * P from the ascending Smith form
// S = U M V, P the reversal permutation. Returns (alpha, alpha^{-1}).
std::pair<MatZ, MatZ> alpha_decomposition(const LocalLattice& L) {
    int n = L.dim();
    SnfResult snf = smith_normal_form(L.basis);
    MatZ P(n, n);
    for (int i = 0; i < n; ++i) P.at(i, n - 1 - i) = 1;
    return {snf.V * P, P * snf.Vinv};
}

}  // namespace

int m_tilde_1_formula(const DeltaContext& ctx, const LatticeTuple& T) {
    LatticeTuple graded = to_graded(ctx, T);
    int a = ctx.num_vertices();
    std::vector<NuInvariant> nu(a);
    std::vector<MatZ> alpha(a), alpha_inv(a);
    for (int h = 0; h < a; ++h) {
        nu[h] = nu_invariant(graded.parts[h]);
        if (graded.parts[h].dim() > 0) {
            auto [al, al_inv] = alpha_decomposition(graded.parts[h]);
            alpha[h] = al;
            alpha_inv[h] = al_inv;
        }
    }
    int tau_total = 0;
    for (int h = 0; h < a; ++h) tau_total += nu[h].tau();

    // Trailing jump weight at the source: sum of r_{t,rho} over rho in I_t^*
    // with rho >= r; leading jump weight at the target: sum of r_{h,iota}
    // over iota in I_h^* with iota < i.
    auto suffix_weight = [](const NuInvariant& v, int r) {
        std::vector<int> pos = v.descents_star();
        std::vector<int> jr = v.jumps_star();
        int s = 0;
        for (size_t k = 0; k < pos.size(); ++k)
            if (pos[k] >= r) s += jr[k];
        return s;
    };
    auto prefix_weight = [](const NuInvariant& v, int i) {
        std::vector<int> pos = v.descents_star();
        std::vector<int> jr = v.jumps_star();
        int s = 0;
        for (size_t k = 0; k < pos.size(); ++k)
            if (pos[k] < i) s += jr[k];
        return s;
    };

    int m1 = tau_total;  // generator-free pairs contribute tau'(h) + tau(h)
    // Group conjugated generator blocks by ordered vertex pair.
    std::map<std::pair<int, int>, std::vector<MatZ>> blocks;
    for (const auto& ar : ctx.graded.arrows()) {
        if (ctx.graded.rank(ar.tail) == 0 || ctx.graded.rank(ar.head) == 0) continue;
        blocks[{ar.tail, ar.head}].push_back(alpha_inv[ar.tail] * ar.matrix *
                                             alpha[ar.head]);
    }
    for (const auto& [pair_th, bs] : blocks) {
        auto [t, h] = pair_th;
        int nt = ctx.graded.rank(t);
        int nh = ctx.graded.rank(h);
        // Minimal valuation over generators, then over the corner
        // {rows >= r} x {columns <= i}.
        std::vector<std::vector<int>> w(nt, std::vector<int>(nh, kValInfinity));
        for (const MatZ& B : bs)
            for (int rho = 0; rho < nt; ++rho)
                for (int iota = 0; iota < nh; ++iota)
                    w[rho][iota] =
                        std::min(w[rho][iota], valuation_or_inf(B.at(rho, iota), ctx.p));
        std::vector<std::vector<int>> corner(nt + 1, std::vector<int>(nh + 1, kValInfinity));
        for (int rho = nt - 1; rho >= 0; --rho)
            for (int iota = 0; iota < nh; ++iota)
                corner[rho][iota] =
                    std::min({w[rho][iota], corner[rho + 1][iota],
                              iota > 0 ? corner[rho][iota - 1] : kValInfinity});
        int m_th = nu[h].tau();
        for (int i = 1; i <= nh; ++i)
            for (int r = 1; r <= nt; ++r) {
                int v = corner[r - 1][i - 1];
                if (v >= kValInfinity) continue;
                m_th = std::min(m_th,
                                suffix_weight(nu[t], r) + prefix_weight(nu[h], i) + v);
            }
        m1 = std::min(m1, (tau_total - nu[h].tau()) + m_th);
    }
    int m_tilde = tau_total - m1;
    if (m_tilde < 0 || m_tilde > tau_total)
        throw Error("m_tilde_1_formula: value escapes [0, tau(M)]");
    return m_tilde;
}

int m_tilde_1(const DeltaContext& ctx, const LatticeTuple& T) {
    int by_search = m_tilde_1_search(ctx, T);
    int by_formula = m_tilde_1_formula(ctx, T);
    if (by_search != by_formula)
        throw Error("m_tilde_1: search gives " + std::to_string(by_search) +
                    " but the valuation formula gives " + std::to_string(by_formula));
    return by_search;
}

int m_2(const DeltaContext& ctx, const LatticeTuple& T) {
    LatticeTuple graded = to_graded(ctx, T);
    bool maximal = false;
    for (const auto& part : graded.parts)
        if (part.dim() > 0 && nu_invariant(part).trailing_zero()) maximal = true;
    if (!maximal)
        throw Error("m_2 is defined for maximal tuples only (every vertex has all "
                    "elementary divisors divisible by p)");
    int best = kValInfinity;
    for (int h = 0; h < ctx.num_vertices(); ++h) {
        int nh = ctx.graded.rank(h);
        int nc = ctx.grading.layer_ranks[h][ctx.grading.c - 1];
        if (nh == 0 || nc == 0) continue;
        const MatZ& M = graded.parts[h].basis;
        for (int i = 0; i < nh; ++i)
            for (int j = nh - nc; j < nh; ++j)
                best = std::min(best, valuation_or_inf(M.at(i, j), ctx.p));
    }
    if (best >= kValInfinity) throw Error("m_2: no trailing-layer columns exist");
    return best;
}

int min_valuation(const LatticeTuple& T, long p) {
    int best = kValInfinity;
    for (const auto& part : T.parts)
        for (const Int& x : part.basis.a) best = std::min(best, valuation_or_inf(x, p));
    return best;
}

bool lemma_mc_check(const DeltaContext& ctx, const LatticeTuple& T) {
    LatticeTuple graded = to_graded(ctx, T);
    if (!is_subrep(ctx.graded, graded)) return true;
    LatticeTuple shifted = scale_by_delta(ctx, graded, 1);
    return min_valuation(graded, ctx.p) == min_valuation(shifted, ctx.p);
}

bool delta_ray_check(const DeltaContext& ctx, const LatticeTuple& T, int extra) {
    LatticeTuple graded = to_graded(ctx, T);
    int first = m_tilde_1_search(ctx, T);
    for (int m = 0; m < first; ++m)
        if (is_subrep(ctx.graded, scale_by_delta(ctx, graded, m))) return false;
    for (int m = first; m <= first + extra; ++m)
        if (!is_subrep(ctx.graded, scale_by_delta(ctx, graded, m))) return false;
    return true;
}

}  // namespace qz
