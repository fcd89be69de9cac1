#include "qz/structure.hpp"

#include <algorithm>
#include <deque>

namespace qz {

namespace {

MatZ hstack(const MatZ& A, const MatZ& B) {
    if (A.rows != B.rows) throw Error("hstack: row mismatch");
    MatZ out(A.rows, A.cols + B.cols);
    for (int i = 0; i < A.rows; ++i) {
        for (int j = 0; j < A.cols; ++j) out.at(i, j) = A.at(i, j);
        for (int j = 0; j < B.cols; ++j) out.at(i, A.cols + j) = B.at(i, j);
    }
    return out;
}

MatZ sub_block(const MatZ& M, int r0, int r1, int c0, int c1) {
    return M.row_slice(r0, r1).col_slice(c0, c1);
}

// Columns spanning the rational orthogonal complement of the row span of B,
// i.e. a matrix N with x*N = 0 iff x lies in the rational row span of B
// (valid because B is saturated).
MatZ row_span_complement(const MatZ& B) {
    return left_kernel(B.transpose()).transpose();
}

int total_rank_of(const std::vector<MatZ>& per_vertex) {
    int r = 0;
    for (const auto& m : per_vertex) r += m.rows;
    return r;
}

std::vector<Int> vectorize(const MatZ& m) {
    return m.a;
}

MatZ unimodular_inverse(const MatZ& U) {
    Int det = determinant(U);
    if (det != 1 && det != -1) throw Error("unimodular_inverse: determinant is not a unit");
    return det * adjugate(U);
}

}  // namespace

std::optional<int> nilpotency_class(const Representation& rep) {
    int a = rep.num_vertices();
    std::vector<MatZ> W(a);
    for (int h = 0; h < a; ++h) W[h] = MatZ::identity(rep.rank(h));
    int n = rep.total_rank();
    int rank = total_rank_of(W);
    for (int k = 1; k <= n + 1; ++k) {
        std::vector<MatZ> next(a);
        for (int h = 0; h < a; ++h) next[h] = MatZ(0, rep.rank(h));
        for (const auto& ar : rep.arrows()) {
            if (W[ar.tail].rows == 0) continue;
            next[ar.head] = next[ar.head].vstack(W[ar.tail] * ar.matrix);
        }
        for (int h = 0; h < a; ++h)
            if (next[h].rows > 0) next[h] = saturate_rows(next[h]);
        int next_rank = total_rank_of(next);
        if (next_rank == 0) return k;
        if (next_rank == rank) return std::nullopt;  // plateau above zero: not nilpotent
        W = std::move(next);
        rank = next_rank;
    }
    return std::nullopt;
}

CentralizerSeries centralizer_series(const Representation& rep) {
    std::optional<int> c_img = nilpotency_class(rep);
    if (!c_img) throw Error("centralizer_series: representation is not nilpotent");
    int a = rep.num_vertices();
    CentralizerSeries out;
    std::vector<MatZ> Z(a);
    for (int h = 0; h < a; ++h) Z[h] = MatZ(0, rep.rank(h));
    out.bases.push_back(Z);
    while (true) {
        // Complements first, so that membership in Z_i is a kernel condition.
        std::vector<MatZ> compl_cols(a);
        for (int h = 0; h < a; ++h) compl_cols[h] = row_span_complement(Z[h]);
        std::vector<MatZ> next(a);
        bool full = true;
        for (int h = 0; h < a; ++h) {
            MatZ conditions(rep.rank(h), 0);
            for (const auto& ar : rep.arrows()) {
                if (ar.tail != h) continue;
                if (compl_cols[ar.head].cols == 0) continue;  // head already inside Z_i
                conditions = hstack(conditions, ar.matrix * compl_cols[ar.head]);
            }
            next[h] = conditions.cols == 0 ? MatZ::identity(rep.rank(h))
                                           : left_kernel(conditions);
            if (next[h].rows < rep.rank(h)) full = false;
        }
        if (total_rank_of(next) == total_rank_of(Z) && !full)
            throw Error("centralizer_series: series stalls below the full module");
        for (int h = 0; h < a; ++h)
            if (next[h].rows == rep.rank(h)) next[h] = MatZ::identity(rep.rank(h));
        out.bases.push_back(next);
        Z = std::move(next);
        if (full) break;
    }
    out.c = static_cast<int>(out.bases.size()) - 1;
    if (out.c == 0) {  // rank-0 module: keep the convention c = 1
        out.bases.push_back(out.bases.back());
        out.c = 1;
    }
    if (out.c != *c_img)
        throw Error("centralizer_series: series length disagrees with the image chain");
    out.corank.assign(a, std::vector<int>(out.c + 1, 0));
    out.total_corank.assign(out.c + 1, 0);
    for (int i = 0; i <= out.c; ++i)
        for (int h = 0; h < a; ++h) {
            out.corank[h][i] = rep.rank(h) - out.bases[i][h].rows;
            out.total_corank[i] += out.corank[h][i];
        }
    return out;
}

std::vector<int> Grading::layer_offsets(int h) const {
    std::vector<int> off(c + 1, 0);
    for (int j = 0; j < c; ++j) off[j + 1] = off[j] + layer_ranks[h][j];
    return off;
}

Grading cocentral_grading(const Representation& rep) {
    CentralizerSeries series = centralizer_series(rep);
    int a = rep.num_vertices();
    Grading g;
    g.c = series.c;
    g.layer_ranks.assign(a, std::vector<int>(g.c, 0));
    g.basis_change.resize(a);
    g.basis_change_inv.resize(a);
    for (int h = 0; h < a; ++h) {
        int n_h = rep.rank(h);
        MatZ U(0, n_h);
        // Layer c-i+1 completes a basis of Z_{i-1} to one of Z_i; descending i
        // lays the blocks out from layer 1 (complement of Z_{c-1}) downward.
        for (int i = g.c; i >= 1; --i) {
            const MatZ& Bi = series.bases[i][h];
            const MatZ& Bprev = series.bases[i - 1][h];
            MatZ X(Bprev.rows, Bi.rows);
            for (int r = 0; r < Bprev.rows; ++r) {
                auto coords = solve_left_z(Bprev.row_vec(r), Bi);
                if (!coords)
                    throw Error("cocentral_grading: centralizer chain is not nested");
                for (int k = 0; k < Bi.rows; ++k) X.at(r, k) = (*coords)[k];
            }
            MatZ T = complete_to_unimodular(X);
            MatZ complement = T.row_slice(Bprev.rows, Bi.rows) * Bi;
            g.layer_ranks[h][g.c - i] = complement.rows;
            U = U.vstack(complement);
        }
        if (U.rows != n_h) throw Error("cocentral_grading: layer ranks do not add up");
        if (n_h > 0 && !is_unimodular(U))
            throw Error("cocentral_grading: basis change is not unimodular");
        g.basis_change[h] = U;
        g.basis_change_inv[h] = n_h == 0 ? U : unimodular_inverse(U);
    }
    return g;
}

void validate_grading(const Representation& rep, const Grading& g) {
    std::vector<std::string> errors;
    int a = rep.num_vertices();
    if (g.num_vertices() != a) {
        throw Error("invalid grading: vertex count mismatch");
    }
    if (g.c < 1) errors.push_back("layer count c must be >= 1");
    CentralizerSeries series = centralizer_series(rep);
    if (g.c != series.c)
        errors.push_back("layer count " + std::to_string(g.c) +
                         " differs from the centralizer series length " +
                         std::to_string(series.c));
    for (int h = 0; h < a && errors.empty(); ++h) {
        std::string where = "vertex " + std::to_string(h) + ": ";
        int n_h = rep.rank(h);
        if (static_cast<int>(g.layer_ranks[h].size()) != g.c) {
            errors.push_back(where + "layer rank list has wrong length");
            continue;
        }
        int sum = 0;
        for (int r : g.layer_ranks[h]) {
            if (r < 0) errors.push_back(where + "negative layer rank");
            sum += r;
        }
        if (sum != n_h) {
            errors.push_back(where + "layer ranks do not sum to the vertex rank");
            continue;
        }
        const MatZ& U = g.basis_change[h];
        if (U.rows != n_h || U.cols != n_h) {
            errors.push_back(where + "basis change has wrong shape");
            continue;
        }
        if (n_h == 0) continue;
        if (!is_unimodular(U)) {
            errors.push_back(where + "basis change is not unimodular");
            continue;
        }
        if (!(U * g.basis_change_inv[h] == MatZ::identity(n_h))) {
            errors.push_back(where + "recorded inverse is wrong");
            continue;
        }
        std::vector<int> off = g.layer_offsets(h);
        for (int i = 1; i < g.c; ++i) {
            // Trailing layers c-i+1..c must span Z_i at this vertex.
            MatZ trailing = U.row_slice(off[g.c - i], n_h);
            const MatZ& Zi = series.bases[i][h];
            if (trailing.rows != Zi.rows) {
                errors.push_back(where + "trailing blocks for Z_" + std::to_string(i) +
                                 " have rank " + std::to_string(trailing.rows) +
                                 ", expected " + std::to_string(Zi.rows));
                continue;
            }
            bool spans = true;
            for (int r = 0; r < trailing.rows && spans; ++r)
                spans = in_row_span_q(trailing.row_vec(r), Zi);
            if (!spans)
                errors.push_back(where + "trailing blocks do not span Z_" +
                                 std::to_string(i));
        }
    }
    if (!errors.empty()) {
        std::string msg = "invalid grading:";
        for (const auto& e : errors) msg += "\n  - " + e;
        throw Error(msg);
    }
}

std::vector<MatZ> transformed_arrow_matrices(const Representation& rep, const Grading& g) {
    std::vector<MatZ> out;
    out.reserve(rep.arrows().size());
    for (const auto& ar : rep.arrows())
        out.push_back(g.basis_change[ar.tail] * ar.matrix * g.basis_change_inv[ar.head]);
    return out;
}

bool EndAlgebra::contains(const MatZ& m) const {
    if (m.rows != n || m.cols != n) return false;
    if (m.is_zero()) return true;
    return in_row_span_z(vectorize(m), span_hnf);
}

EndAlgebra algebra_closure(int n, const std::vector<MatZ>& generators) {
    EndAlgebra alg;
    alg.n = n;
    alg.generators = generators;
    alg.span_hnf = MatZ(0, n * n);
    for (size_t k = 0; k < generators.size(); ++k) {
        const MatZ& gmat = generators[k];
        if (gmat.rows != n || gmat.cols != n)
            throw Error("algebra_closure: generator " + std::to_string(k) +
                        " is not " + std::to_string(n) + "x" + std::to_string(n));
        MatZ power = MatZ::identity(n);
        for (int i = 0; i < n; ++i) power = power * gmat;
        if (!power.is_zero())
            throw Error("algebra_closure: generator " + std::to_string(k) +
                        " is not nilpotent");
    }
    auto add = [&alg](const MatZ& m) {
        if (alg.contains(m)) return false;
        MatZ row(1, alg.span_hnf.cols);
        row.a = vectorize(m);
        HnfResult reduced = row_hnf(alg.span_hnf.vstack(row));
        alg.span_hnf = reduced.H.row_slice(0, reduced.rank);
        return true;
    };
    std::deque<MatZ> queue;
    for (const auto& gmat : generators)
        if (add(gmat)) queue.push_back(gmat);
    // Right extension reaches every word: each word of length >= 2 is a
    // shorter word times a generator.
    while (!queue.empty()) {
        MatZ w = std::move(queue.front());
        queue.pop_front();
        for (const auto& gmat : generators) {
            MatZ prod = w * gmat;
            if (add(prod)) queue.push_back(prod);
        }
    }
    for (int r = 0; r < alg.span_hnf.rows; ++r) {
        MatZ m(n, n);
        m.a = alg.span_hnf.row_vec(r);
        alg.basis.push_back(std::move(m));
    }
    return alg;
}

namespace {

std::optional<HomogeneityViolation> scan_generator(const Representation& rep,
                                                   const Grading& g, const MatZ& gen,
                                                   int gen_index) {
    std::vector<int> off = rep.block_offsets();
    for (int t = 0; t < rep.num_vertices(); ++t) {
        for (int h = 0; h < rep.num_vertices(); ++h) {
            if (rep.rank(t) == 0 || rep.rank(h) == 0) continue;
            MatZ block = g.basis_change[t] *
                         sub_block(gen, off[t], off[t + 1], off[h], off[h + 1]) *
                         g.basis_change_inv[h];
            std::vector<int> toff = g.layer_offsets(t);
            std::vector<int> hoff = g.layer_offsets(h);
            for (int i = 1; i <= g.c; ++i) {
                for (int j = 1; j <= g.c; ++j) {
                    if (j == i + 1) continue;
                    if (!sub_block(block, toff[i - 1], toff[i], hoff[j - 1], hoff[j])
                             .is_zero())
                        return HomogeneityViolation{gen_index, t, h, i, j};
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace

HomogeneityResult check_homogeneity(const Representation& rep, const Grading& g,
                                    const std::vector<MatZ>& generators) {
    validate_grading(rep, g);
    int n = rep.total_rank();
    std::vector<MatZ> arrow_exts = rep.extended_arrow_matrices();
    if (!(generators == arrow_exts)) {
        EndAlgebra from_arrows = algebra_closure(n, arrow_exts);
        for (size_t k = 0; k < generators.size(); ++k)
            if (!from_arrows.contains(generators[k]))
                throw Error("check_homogeneity: generator " + std::to_string(k) +
                            " lies outside the arrow-generated algebra");
        EndAlgebra from_gens = algebra_closure(n, generators);
        for (size_t k = 0; k < arrow_exts.size(); ++k)
            if (!from_gens.contains(arrow_exts[k]))
                throw Error(
                    "check_homogeneity: generators do not generate the arrow algebra "
                    "(arrow " +
                    std::to_string(k) + " is not in their span)");
    }
    for (size_t k = 0; k < generators.size(); ++k) {
        if (generators[k].rows != n || generators[k].cols != n)
            throw Error("check_homogeneity: generator " + std::to_string(k) +
                        " has wrong shape");
        auto witness = scan_generator(rep, g, generators[k], static_cast<int>(k));
        if (witness) return HomogeneityResult{false, witness};
    }
    return HomogeneityResult{true, std::nullopt};
}

HomogeneityResult check_homogeneity(const Representation& rep, const Grading& g) {
    return check_homogeneity(rep, g, rep.extended_arrow_matrices());
}

MatZ delta_matrix(const Grading& g, int h, long p) {
    std::vector<int> off = g.layer_offsets(h);
    int n_h = off[g.c];
    MatZ d(n_h, n_h);
    for (int j = 1; j <= g.c; ++j)
        for (int i = off[j - 1]; i < off[j]; ++i) d.at(i, i) = pow_int(Int(p), g.c - j);
    return d;
}

bool lemma_newdelta_check(const Representation& rep, const Grading& g, long p) {
    std::vector<MatZ> trans = transformed_arrow_matrices(rep, g);
    for (size_t k = 0; k < trans.size(); ++k) {
        int t = rep.arrows()[k].tail;
        int h = rep.arrows()[k].head;
        MatZ lhs = delta_matrix(g, t, p) * trans[k];
        MatZ rhs = Int(p) * (trans[k] * delta_matrix(g, h, p));
        if (!(lhs == rhs)) return false;
    }
    return true;
}

}  // namespace qz
