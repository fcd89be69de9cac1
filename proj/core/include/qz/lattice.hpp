#pragma once

// Enumeration of finite-index p-power sublattices in Hermite normal form,
// the subrepresentation test, and exhaustive subrepresentation counting by
// index vector. Counting uses a machine-word fast path (lattice entries and
// adjugates reduced modulo p^e) sized by an upfront overflow check, with an
// exact big-integer fallback.

#include <functional>
#include <map>
#include <random>
#include <vector>

#include "qz/intmat.hpp"
#include "qz/quiver.hpp"

namespace qz {

// A finite-index sublattice of Z^n, p-power index, basis rows in Hermite
// normal form: upper triangular, diagonal p^{a_i}, entries above the
// diagonal reduced modulo the diagonal entry of their column.
struct LocalLattice {
    long p = 2;
    MatZ basis;
    int index_exponent = 0;

    int dim() const { return basis.rows; }
};

// Canonicalize an arbitrary full-rank basis (HNF reduction); validates that
// the index is a power of p.
LocalLattice make_lattice(long p, const MatZ& basis_rows);

LocalLattice standard_lattice(long p, int n);

// Number of index-p^e sublattices of Z^n: coefficient of t^e in
// prod_{i=0}^{n-1} 1/(1 - p^i t), computed by direct recursion (used as the
// enumeration oracle and for resource prediction).
Int count_sublattices(int n, long p, int e);

// Calls f for every index-p^e sublattice of Z^n exactly once, in a fixed
// deterministic order (diagonal exponent compositions in lexicographic
// order, then above-diagonal residues in odometer order).
void for_each_sublattice(int n, long p, int e,
                         const std::function<void(const LocalLattice&)>& f);

std::vector<LocalLattice> enum_sublattices(int n, long p, int e);

// One sublattice per vertex, all at the same prime.
struct LatticeTuple {
    long p = 2;
    std::vector<LocalLattice> parts;

    int total_exponent() const;
    std::vector<int> exponent_vector() const;
};

LatticeTuple full_tuple(const Representation& rep, long p);

// Pseudorandom tuple: each vertex gets independent diagonal exponents drawn
// uniformly from 0..max_exponent and uniform residues (plain modulo draws
// from the supplied generator, so results are reproducible cross-platform).
LatticeTuple random_tuple(const Representation& rep, long p, int max_exponent,
                          std::mt19937_64& rng);

// True iff for every arrow phi the rows of M_{tail} * F_phi lie in the
// p-local row span of M_{head}; membership is tested via
// x * adj(M_head) == 0 modulo p^{v_p(det M_head)}.
bool is_subrep(const Representation& rep, const LatticeTuple& T);

// Counts keyed by index-exponent vector; univariate tables aggregate to the
// single total exponent. The zero key always has count 1 (the full tuple).
struct CountTable {
    long prime = 2;
    bool multivariate = false;
    int bound = 0;
    std::map<std::vector<int>, Int> counts;

    Int at(const std::vector<int>& key) const;
    // Dense counts (a_{p^0}, ..., a_{p^bound}); univariate tables only.
    std::vector<Int> univariate() const;
    std::string to_json() const;
};

struct CountOptions {
    int bound = 0;
    bool multivariate = false;
    // Refuse runs whose predicted candidate-tuple count exceeds this.
    Int ceiling = Int(100000000);
    // Enumerate sources inside intersected arrow preimages instead of the
    // full product space. Requires an acyclic quiver; counts are identical
    // to the naive enumeration by construction.
    bool accelerate = false;
};

CountTable count_subreps(const Representation& rep, long p, const CountOptions& opt);

// Sublattices of Z^n invariant under every operator (right action); equals
// count_subreps on the corresponding one-vertex loop representation.
CountTable count_invariant_sublattices(int n, const std::vector<MatZ>& operators, long p,
                                       int bound, const Int& ceiling = Int(100000000));

}  // namespace qz
