#pragma once

// Exact integer matrix algebra: Hermite and Smith normal forms with
// transforms, saturated kernels, adjugates, unimodular basis completion.
// Everything is over cpp_int; matrices are dense and row-major. Vectors are
// rows throughout the library and matrices act by right multiplication.

#include <optional>
#include <vector>

#include "qz/bigint.hpp"

namespace qz {

struct MatZ {
    int rows = 0;
    int cols = 0;
    std::vector<Int> a;

    MatZ() = default;
    MatZ(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    static MatZ identity(int n);
    static MatZ from_rows(const std::vector<std::vector<Int>>& rws);
    static MatZ from_int_rows(const std::vector<std::vector<long long>>& rws);

    Int& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Int& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    bool is_zero() const;
    bool is_square() const { return rows == cols; }
    bool operator==(const MatZ& o) const { return rows == o.rows && cols == o.cols && a == o.a; }

    MatZ transpose() const;
    MatZ row(int i) const;
    // Rows [r0, r1) as a new matrix.
    MatZ row_slice(int r0, int r1) const;
    // Columns [c0, c1) as a new matrix.
    MatZ col_slice(int c0, int c1) const;
    std::vector<Int> row_vec(int i) const;
    std::vector<Int> col_vec(int j) const;
    // Stack other below this.
    MatZ vstack(const MatZ& other) const;
    std::string to_string() const;
};

MatZ operator*(const MatZ& A, const MatZ& B);
MatZ operator+(const MatZ& A, const MatZ& B);
MatZ operator-(const MatZ& A, const MatZ& B);
MatZ operator*(const Int& c, const MatZ& A);
std::vector<Int> operator*(const std::vector<Int>& x, const MatZ& A);

// Row-style Hermite normal form: H = T * A with T unimodular. Pivot entries
// are positive, entries above each pivot are reduced into [0, pivot). Zero
// rows sink to the bottom; rank = number of nonzero rows. Deterministic.
struct HnfResult {
    MatZ H;
    MatZ T;
    int rank = 0;
    std::vector<int> pivot_cols;  // one per nonzero row of H
};
HnfResult row_hnf(const MatZ& A);

// Smith normal form S = U * A * V with U, V unimodular and
// S = diag(d_1 | d_2 | ... | d_r, 0, ...), d_i > 0. The inverses are tracked
// so no matrix inversion is ever needed downstream. Pivot selection is the
// first entry of minimal absolute value in row-major order, so the
// decomposition is deterministic for fixed input.
struct SnfResult {
    MatZ S, U, V, Uinv, Vinv;
    int rank = 0;
    std::vector<Int> divisors() const;  // the nonzero d_i
};
SnfResult smith_normal_form(const MatZ& A);

Int determinant(const MatZ& A);
bool is_unimodular(const MatZ& A);

// Adjugate of a nonsingular square matrix: adj(A) = det(A) * A^{-1}, exact.
MatZ adjugate(const MatZ& A);

// Basis (possibly empty) of the left kernel {x : x*A = 0}; the result spans a
// saturated (pure) sublattice by construction.
MatZ left_kernel(const MatZ& A);

// Basis of the saturation of the row span of A: the largest sublattice L
// with rowspan(A) <= L and L/rowspan(A) torsion. Rows form a primitive basis.
MatZ saturate_rows(const MatZ& A);

// True when the rows of A span a saturated sublattice of full row rank
// (equivalently: all elementary divisors are 1).
bool is_saturated_basis(const MatZ& A);

// Membership of x in the integer row span of A.
bool in_row_span_z(const std::vector<Int>& x, const MatZ& A);
// Membership of x in the rational row span of A.
bool in_row_span_q(const std::vector<Int>& x, const MatZ& A);
// Integer coordinates c with c*A = x, if they exist (A need not be square).
std::optional<std::vector<Int>> solve_left_z(const std::vector<Int>& x, const MatZ& A);

// Given a saturated basis C (k x n, k <= n), return an n x n unimodular
// matrix whose first k rows are exactly C. Standard basis vectors are
// preferred as completion rows (checked in index order), which keeps
// cocentral basis changes equal to the identity whenever the input flag is
// already coordinate-aligned; a Smith-based completion covers the rest.
MatZ complete_to_unimodular(const MatZ& C);

}  // namespace qz
