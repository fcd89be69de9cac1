#include "qz/intmat.hpp"

#include <algorithm>
#include <sstream>

namespace qz {

MatZ MatZ::identity(int n) {
    MatZ I(n, n);
    for (int i = 0; i < n; ++i) I.at(i, i) = 1;
    return I;
}

MatZ MatZ::from_rows(const std::vector<std::vector<Int>>& rws) {
    if (rws.empty()) return MatZ(0, 0);
    MatZ M(static_cast<int>(rws.size()), static_cast<int>(rws[0].size()));
    for (int i = 0; i < M.rows; ++i) {
        if (static_cast<int>(rws[i].size()) != M.cols) throw Error("from_rows: ragged rows");
        for (int j = 0; j < M.cols; ++j) M.at(i, j) = rws[i][j];
    }
    return M;
}

MatZ MatZ::from_int_rows(const std::vector<std::vector<long long>>& rws) {
    if (rws.empty()) return MatZ(0, 0);
    MatZ M(static_cast<int>(rws.size()), static_cast<int>(rws[0].size()));
    for (int i = 0; i < M.rows; ++i) {
        if (static_cast<int>(rws[i].size()) != M.cols) throw Error("from_int_rows: ragged rows");
        for (int j = 0; j < M.cols; ++j) M.at(i, j) = rws[i][j];
    }
    return M;
}

bool MatZ::is_zero() const {
    return std::all_of(a.begin(), a.end(), [](const Int& x) { return x == 0; });
}

MatZ MatZ::transpose() const {
    MatZ T(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) T.at(j, i) = at(i, j);
    return T;
}

MatZ MatZ::row(int i) const {
    MatZ R(1, cols);
    for (int j = 0; j < cols; ++j) R.at(0, j) = at(i, j);
    return R;
}

MatZ MatZ::row_slice(int r0, int r1) const {
    MatZ R(r1 - r0, cols);
    for (int i = r0; i < r1; ++i)
        for (int j = 0; j < cols; ++j) R.at(i - r0, j) = at(i, j);
    return R;
}

MatZ MatZ::col_slice(int c0, int c1) const {
    MatZ R(rows, c1 - c0);
    for (int i = 0; i < rows; ++i)
        for (int j = c0; j < c1; ++j) R.at(i, j - c0) = at(i, j);
    return R;
}

std::vector<Int> MatZ::row_vec(int i) const {
    return std::vector<Int>(a.begin() + static_cast<size_t>(i) * cols,
                            a.begin() + static_cast<size_t>(i + 1) * cols);
}

std::vector<Int> MatZ::col_vec(int j) const {
    std::vector<Int> v(rows);
    for (int i = 0; i < rows; ++i) v[i] = at(i, j);
    return v;
}

MatZ MatZ::vstack(const MatZ& other) const {
    if (rows == 0 && cols == 0) return other;
    if (other.rows == 0) return *this;
    if (cols != other.cols) throw Error("vstack: column mismatch");
    MatZ R(rows + other.rows, cols);
    std::copy(a.begin(), a.end(), R.a.begin());
    std::copy(other.a.begin(), other.a.end(), R.a.begin() + a.size());
    return R;
}

std::string MatZ::to_string() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows; ++i) {
        os << (i ? "; " : "");
        for (int j = 0; j < cols; ++j) os << (j ? " " : "") << at(i, j);
    }
    os << "]";
    return os.str();
}

MatZ operator*(const MatZ& A, const MatZ& B) {
    if (A.cols != B.rows) throw Error("matmul: shape mismatch");
    MatZ C(A.rows, B.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int k = 0; k < A.cols; ++k) {
            const Int& aik = A.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < B.cols; ++j) C.at(i, j) += aik * B.at(k, j);
        }
    return C;
}

MatZ operator+(const MatZ& A, const MatZ& B) {
    if (A.rows != B.rows || A.cols != B.cols) throw Error("matadd: shape mismatch");
    MatZ C = A;
    for (size_t i = 0; i < C.a.size(); ++i) C.a[i] += B.a[i];
    return C;
}

MatZ operator-(const MatZ& A, const MatZ& B) {
    if (A.rows != B.rows || A.cols != B.cols) throw Error("matsub: shape mismatch");
    MatZ C = A;
    for (size_t i = 0; i < C.a.size(); ++i) C.a[i] -= B.a[i];
    return C;
}

MatZ operator*(const Int& c, const MatZ& A) {
    MatZ C = A;
    for (auto& x : C.a) x *= c;
    return C;
}

std::vector<Int> operator*(const std::vector<Int>& x, const MatZ& A) {
    if (static_cast<int>(x.size()) != A.rows) throw Error("vecmat: shape mismatch");
    std::vector<Int> y(A.cols);
    for (int i = 0; i < A.rows; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < A.cols; ++j) y[j] += x[i] * A.at(i, j);
    }
    return y;
}

namespace {

// Floor division, needed so that off-pivot entries land in [0, pivot).
Int fdiv(const Int& num, const Int& den) {
    Int q = num / den;
    if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
    return q;
}

void swap_rows(MatZ& M, int i, int j) {
    if (i == j) return;
    for (int c = 0; c < M.cols; ++c) std::swap(M.at(i, c), M.at(j, c));
}

void add_row(MatZ& M, int dst, int src, const Int& f) {
    if (f == 0) return;
    for (int c = 0; c < M.cols; ++c) M.at(dst, c) += f * M.at(src, c);
}

void negate_row(MatZ& M, int i) {
    for (int c = 0; c < M.cols; ++c) M.at(i, c) = -M.at(i, c);
}

void swap_cols(MatZ& M, int i, int j) {
    if (i == j) return;
    for (int r = 0; r < M.rows; ++r) std::swap(M.at(r, i), M.at(r, j));
}

void add_col(MatZ& M, int dst, int src, const Int& f) {
    if (f == 0) return;
    for (int r = 0; r < M.rows; ++r) M.at(r, dst) += f * M.at(r, src);
}

void negate_col(MatZ& M, int j) {
    for (int r = 0; r < M.rows; ++r) M.at(r, j) = -M.at(r, j);
}

}  // namespace

HnfResult row_hnf(const MatZ& A) {
    HnfResult R;
    R.H = A;
    R.T = MatZ::identity(A.rows);
    MatZ& H = R.H;
    MatZ& T = R.T;
    int r = 0;
    for (int col = 0; col < A.cols && r < A.rows; ++col) {
        // Euclidean elimination below row r in this column.
        while (true) {
            int piv = -1;
            Int best;
            for (int i = r; i < A.rows; ++i) {
                if (H.at(i, col) == 0) continue;
                Int v = abs(H.at(i, col));
                if (piv < 0 || v < best) {
                    piv = i;
                    best = v;
                }
            }
            if (piv < 0) break;  // column clear below r
            swap_rows(H, r, piv);
            swap_rows(T, r, piv);
            bool clean = true;
            for (int i = r + 1; i < A.rows; ++i) {
                if (H.at(i, col) == 0) continue;
                Int f = -fdiv(H.at(i, col), H.at(r, col));
                add_row(H, i, r, f);
                add_row(T, i, r, f);
                if (H.at(i, col) != 0) clean = false;
            }
            if (clean) break;
        }
        if (H.at(r, col) == 0) continue;
        if (H.at(r, col) < 0) {
            negate_row(H, r);
            negate_row(T, r);
        }
        // Reduce entries above the pivot into [0, pivot).
        for (int i = 0; i < r; ++i) {
            Int f = -fdiv(H.at(i, col), H.at(r, col));
            add_row(H, i, r, f);
            add_row(T, i, r, f);
        }
        R.pivot_cols.push_back(col);
        ++r;
    }
    R.rank = r;
    return R;
}

std::vector<Int> SnfResult::divisors() const {
    std::vector<Int> d;
    for (int i = 0; i < rank; ++i) d.push_back(S.at(i, i));
    return d;
}

SnfResult smith_normal_form(const MatZ& A) {
    SnfResult R;
    R.S = A;
    R.U = MatZ::identity(A.rows);
    R.Uinv = MatZ::identity(A.rows);
    R.V = MatZ::identity(A.cols);
    R.Vinv = MatZ::identity(A.cols);
    MatZ& S = R.S;

    auto row_op_swap = [&](int i, int j) {
        swap_rows(S, i, j);
        swap_rows(R.U, i, j);
        swap_cols(R.Uinv, i, j);
    };
    auto row_op_add = [&](int dst, int src, const Int& f) {
        add_row(S, dst, src, f);
        add_row(R.U, dst, src, f);
        add_col(R.Uinv, src, dst, -f);
    };
    auto row_op_neg = [&](int i) {
        negate_row(S, i);
        negate_row(R.U, i);
        negate_col(R.Uinv, i);
    };
    auto col_op_swap = [&](int i, int j) {
        swap_cols(S, i, j);
        swap_cols(R.V, i, j);
        swap_rows(R.Vinv, i, j);
    };
    auto col_op_add = [&](int dst, int src, const Int& f) {
        add_col(S, dst, src, f);
        add_col(R.V, dst, src, f);
        add_row(R.Vinv, src, dst, -f);
    };

    const int nmin = std::min(A.rows, A.cols);
    int k = 0;
    for (; k < nmin; ++k) {
        while (true) {
            // First minimal nonzero |entry| in row-major order of S[k:, k:].
            int pi = -1, pj = -1;
            Int best;
            for (int i = k; i < A.rows; ++i)
                for (int j = k; j < A.cols; ++j) {
                    if (S.at(i, j) == 0) continue;
                    Int v = abs(S.at(i, j));
                    if (pi < 0 || v < best) {
                        pi = i;
                        pj = j;
                        best = v;
                    }
                }
            if (pi < 0) break;  // lower-right block is all zero
            row_op_swap(k, pi);
            col_op_swap(k, pj);
            bool lone = true;
            for (int i = k + 1; i < A.rows; ++i) {
                if (S.at(i, k) == 0) continue;
                row_op_add(i, k, -fdiv(S.at(i, k), S.at(k, k)));
                if (S.at(i, k) != 0) lone = false;
            }
            for (int j = k + 1; j < A.cols; ++j) {
                if (S.at(k, j) == 0) continue;
                col_op_add(j, k, -fdiv(S.at(k, j), S.at(k, k)));
                if (S.at(k, j) != 0) lone = false;
            }
            if (!lone) continue;
            // Divisibility sweep: fold in any entry the pivot does not divide.
            int bi = -1, bj = -1;
            for (int i = k + 1; i < A.rows && bi < 0; ++i)
                for (int j = k + 1; j < A.cols; ++j)
                    if (S.at(i, j) % S.at(k, k) != 0) {
                        bi = i;
                        bj = j;
                        break;
                    }
            if (bi < 0) break;
            row_op_add(k, bi, 1);
        }
        if (S.at(k, k) == 0) break;
        if (S.at(k, k) < 0) row_op_neg(k);
    }
    R.rank = k;
    return R;
}

Int determinant(const MatZ& A) {
    if (!A.is_square()) throw Error("determinant: matrix not square");
    const int n = A.rows;
    if (n == 0) return 1;
    // Bareiss fraction-free elimination.
    MatZ M = A;
    Int sign = 1, prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (M.at(k, k) == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (M.at(i, k) != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) return 0;
            swap_rows(M, k, piv);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                M.at(i, j) = (M.at(i, j) * M.at(k, k) - M.at(i, k) * M.at(k, j)) / prev;
        prev = M.at(k, k);
    }
    return sign * M.at(n - 1, n - 1);
}

bool is_unimodular(const MatZ& A) {
    if (!A.is_square()) return false;
    Int d = determinant(A);
    return d == 1 || d == -1;
}

MatZ adjugate(const MatZ& A) {
    if (!A.is_square()) throw Error("adjugate: matrix not square");
    const int n = A.rows;
    MatZ adj(n, n);
    if (n == 0) return adj;
    Int det = determinant(A);
    if (det == 0) throw Error("adjugate: matrix is singular");
    // Exact Gauss-Jordan over Q on [A | I], then scale the inverse by det.
    std::vector<std::vector<Rat>> M(n, std::vector<Rat>(2 * n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) M[i][j] = Rat(A.at(i, j));
        M[i][n + i] = 1;
    }
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int i = c; i < n; ++i)
            if (M[i][c] != 0) {
                piv = i;
                break;
            }
        std::swap(M[c], M[piv]);
        Rat inv = Rat(1) / M[c][c];
        for (int j = c; j < 2 * n; ++j) M[c][j] *= inv;
        for (int i = 0; i < n; ++i) {
            if (i == c || M[i][c] == 0) continue;
            Rat f = M[i][c];
            for (int j = c; j < 2 * n; ++j) M[i][j] -= f * M[c][j];
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rat e = Rat(det) * M[i][n + j];
            if (denominator(e) != 1) throw Error("adjugate: internal exactness failure");
            adj.at(i, j) = numerator(e);
        }
    return adj;
}

MatZ left_kernel(const MatZ& A) {
    HnfResult h = row_hnf(A);
    return h.T.row_slice(h.rank, A.rows);
}

MatZ saturate_rows(const MatZ& A) {
    SnfResult s = smith_normal_form(A);
    // A = Uinv S Vinv, so the rational row span is spanned by the first
    // rank rows of Vinv, which are primitive (part of a unimodular matrix).
    return s.Vinv.row_slice(0, s.rank);
}

bool is_saturated_basis(const MatZ& A) {
    SnfResult s = smith_normal_form(A);
    if (s.rank != A.rows) return false;
    for (const Int& d : s.divisors())
        if (d != 1) return false;
    return true;
}

bool in_row_span_z(const std::vector<Int>& x, const MatZ& A) {
    return solve_left_z(x, A).has_value();
}

bool in_row_span_q(const std::vector<Int>& x, const MatZ& A) {
    if (static_cast<int>(x.size()) != A.cols) throw Error("in_row_span_q: length mismatch");
    MatZ X(1, A.cols);
    for (int j = 0; j < A.cols; ++j) X.at(0, j) = x[j];
    return row_hnf(A.vstack(X)).rank == row_hnf(A).rank;
}

std::optional<std::vector<Int>> solve_left_z(const std::vector<Int>& x, const MatZ& A) {
    if (static_cast<int>(x.size()) != A.cols) throw Error("solve_left_z: length mismatch");
    HnfResult h = row_hnf(A);
    std::vector<Int> rem = x;
    std::vector<Int> coef(A.rows);
    for (int r = 0; r < h.rank; ++r) {
        int pc = h.pivot_cols[r];
        if (rem[pc] == 0) continue;
        if (rem[pc] % h.H.at(r, pc) != 0) return std::nullopt;
        Int c = rem[pc] / h.H.at(r, pc);
        for (int j = 0; j < A.cols; ++j) rem[j] -= c * h.H.at(r, j);
        // Coefficients w.r.t. the original rows via the transform T.
        for (int i = 0; i < A.rows; ++i) coef[i] += c * h.T.at(r, i);
    }
    for (const Int& v : rem)
        if (v != 0) return std::nullopt;
    return coef;
}

MatZ complete_to_unimodular(const MatZ& C) {
    const int k = C.rows, n = C.cols;
    if (k > n) throw Error("complete_to_unimodular: more rows than columns");
    if (k > 0 && !is_saturated_basis(C)) throw Error("complete_to_unimodular: rows not a saturated basis");
    MatZ cur = C;
    // Greedily append standard basis vectors that keep the span saturated.
    for (int j = 0; j < n && cur.rows < n; ++j) {
        MatZ e(1, n);
        e.at(0, j) = 1;
        MatZ cand = cur.vstack(e);
        if (is_saturated_basis(cand)) cur = std::move(cand);
    }
    if (cur.rows < n) {
        // Fallback: Smith-based completion of whatever is left. With
        // cur = Uinv S Vinv and all divisors 1, the bottom rows of Vinv
        // extend the span to a unimodular basis.
        SnfResult s = smith_normal_form(cur);
        MatZ rest = s.Vinv.row_slice(s.rank, n);
        for (int i = 0; i < rest.rows && cur.rows < n; ++i) {
            MatZ cand = cur.vstack(rest.row(i));
            if (is_saturated_basis(cand)) cur = std::move(cand);
        }
    }
    if (cur.rows != n || !is_unimodular(cur)) throw Error("complete_to_unimodular: completion failed");
    return cur;
}

}  // namespace qz
