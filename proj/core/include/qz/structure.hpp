#pragma once

// Structure theory of integer quiver representations: nilpotency class via
// the monotone image chain, the upper centralizer series, cocentral gradings
// realizing that series, the layer-homogeneity condition on generators, and
// integral closures of endomorphism algebras.

#include <optional>
#include <string>
#include <vector>

#include "qz/intmat.hpp"
#include "qz/quiver.hpp"

namespace qz {

// Upper centralizer series 0 = Z_0 <= Z_1 <= ... <= Z_c = V, where
// Z_{i+1}/Z_i is the joint kernel of all arrow actions on V/Z_i.
struct CentralizerSeries {
    int c = 1;
    // bases[i][h]: saturated row basis of Z_i at vertex h, for i = 0..c.
    std::vector<std::vector<MatZ>> bases;
    // corank[h][i] = rank(V_h) - rank(Z_i at h), for i = 0..c.
    std::vector<std::vector<int>> corank;
    // total_corank[i] = sum of corank[h][i] over vertices h.
    std::vector<int> total_corank;
};

// Smallest c such that every path of length c acts as zero (and some path of
// length c-1 does not), computed from the image chain
// W_k = span of all path images of length k. Empty when the chain plateaus
// at a nonzero rank, i.e. the representation is not nilpotent.
std::optional<int> nilpotency_class(const Representation& rep);

// Throws when the representation is not nilpotent.
CentralizerSeries centralizer_series(const Representation& rep);

// A per-vertex splitting of V_h into layers 1..c such that for every i the
// trailing layers c-i+1..c span Z_i at that vertex. Rows of basis_change[h]
// are the graded basis vectors in standard coordinates, layer 1 first; a row
// vector x in graded coordinates corresponds to x * basis_change[h] in
// standard coordinates, so lattices transform by M |-> M * basis_change_inv.
struct Grading {
    int c = 1;
    std::vector<std::vector<int>> layer_ranks;  // [vertex][layer-1]
    std::vector<MatZ> basis_change;             // U_h, unimodular
    std::vector<MatZ> basis_change_inv;         // U_h^{-1}

    int num_vertices() const { return static_cast<int>(layer_ranks.size()); }
    // Offsets of the layer blocks inside vertex h: c+1 prefix sums.
    std::vector<int> layer_offsets(int h) const;
};

// Deterministic cocentral grading built by completing a basis of Z_{i-1} to
// one of Z_i (iterated Smith normal form), layer by layer.
// Throws when the representation is not nilpotent.
Grading cocentral_grading(const Representation& rep);

// Verifies a grading against a representation: block sizes, unimodularity,
// inverse consistency, and that trailing blocks span the centralizer series.
// Throws with a list of every violated condition.
void validate_grading(const Representation& rep, const Grading& g);

// Arrow matrices rewritten in graded coordinates:
// transformed[k] = U_{tail} * F_k * U_{head}^{-1}.
std::vector<MatZ> transformed_arrow_matrices(const Representation& rep, const Grading& g);

struct HomogeneityViolation {
    int generator = -1;  // index into the supplied generator list
    int tail = -1;       // vertex indices of the offending block
    int head = -1;
    int from_layer = 1;  // 1-based layers with a nonzero block, to_layer != from_layer+1
    int to_layer = 1;
};

struct HomogeneityResult {
    bool homogeneous = false;
    std::optional<HomogeneityViolation> witness;
};

// True iff, in graded coordinates, every generator's (t,h) vertex block maps
// layer i into layer i+1 only. Generators are n x n matrices over the total
// rank; they must lie in and generate the same integral algebra as the arrow
// extensions (verified, throws otherwise).
HomogeneityResult check_homogeneity(const Representation& rep, const Grading& g,
                                    const std::vector<MatZ>& generators);

// Convenience overload using the representation's own arrow extensions.
HomogeneityResult check_homogeneity(const Representation& rep, const Grading& g);

// Integral span of all products of the generators (words of length >= 1),
// closed under multiplication. Only defined for nilpotent generators.
struct EndAlgebra {
    int n = 0;                    // matrices act on Z^n
    std::vector<MatZ> generators;
    std::vector<MatZ> basis;      // Z-basis of the span, HNF-reduced
    MatZ span_hnf;                // basis rows, vectorized (rank x n^2)

    bool contains(const MatZ& m) const;
    int rank() const { return span_hnf.rows; }
};

// Throws when a generator is not nilpotent. An empty generator list yields
// the zero algebra.
EndAlgebra algebra_closure(int n, const std::vector<MatZ>& generators);

// The grading's scaling matrix at vertex h: diagonal p^{c-j} on layer j, in
// graded coordinates.
MatZ delta_matrix(const Grading& g, int h, long p);

// For every arrow block C in graded coordinates, checks the exact matrix
// identity delta_tail * C == p * C * delta_head, which holds iff every
// surviving layer block sits one layer below the diagonal. Equivalent to
// homogeneity of the arrow generators; checked as exact integer arithmetic.
bool lemma_newdelta_check(const Representation& rep, const Grading& g, long p);

}  // namespace qz
