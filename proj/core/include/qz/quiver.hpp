#pragma once

// Quivers and integer representations. Vectors are rows and maps act by
// right multiplication: an arrow phi with tail t and head h carries an
// n_t x n_h integer matrix F_phi, and a path w = phi_1 ... phi_k (each head
// feeding the next tail) acts as x -> x * F_{phi_1} * ... * F_{phi_k}.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qz/intmat.hpp"

namespace qz {

struct Vertex {
    std::string id;
    int rank = 0;
};

struct Arrow {
    std::string id;
    int tail = 0;  // vertex indices
    int head = 0;
    MatZ matrix;
};

class Representation {
public:
    Representation() = default;
    Representation(std::vector<Vertex> vertices, std::vector<Arrow> arrows);

    int num_vertices() const { return static_cast<int>(vertices_.size()); }
    int num_arrows() const { return static_cast<int>(arrows_.size()); }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    int rank(int v) const { return vertices_[v].rank; }
    int total_rank() const;
    int vertex_index(const std::string& id) const;  // throws on unknown id

    // Offset of each vertex's coordinate block inside the direct sum.
    std::vector<int> block_offsets() const;

    // Matrix of the path given by arrow indices (in traversal order); arrows
    // must chain head-to-tail. The empty path is rejected (no base vertex).
    MatZ path_matrix(const std::vector<int>& arrow_indices) const;

    // The n x n extension e_phi of each arrow matrix (zero outside the
    // tail-row/head-column block), in arrow order.
    std::vector<MatZ> extended_arrow_matrices() const;

    // e_phi extensions plus the vertex projections pi_iota: a sublattice of
    // Z^n is invariant under all of these iff it is the direct sum of a
    // subrepresentation support. Projections come first, in vertex order.
    std::vector<MatZ> to_submodule_instance() const;

    std::string to_json() const;
    static Representation from_json(const std::string& text);

private:
    std::vector<Vertex> vertices_;
    std::vector<Arrow> arrows_;

    void validate() const;  // collects every offending field into one error
};

// Builders for the example representations. Parameters are validated; an
// unknown name or invalid parameter set is rejected with the list of
// supported names.
//
//   heisenberg          loop quiver, rank 3, arrows ad x1, ad x2
//   graded_heisenberg   two vertices (2,1), arrows ad x1, ad x2
//   fil4                loop quiver, rank 5 (class-4 filiform + extra bracket)
//   fil4_graded         graded quiver of fil4: ranks (2,1,1,1), 5 arrows
//   m4                  loop quiver, rank 5 (model filiform, no extra bracket)
//   m4_graded           graded quiver of m4: ranks (2,1,1,1), 4 arrows
//   free_nilpotent      c<=2, d: ranks (d, d(d-1)/2), bracket arrows
//   l_lambda            c, r1, r2: amalgam of r1 class-c filiforms sharing a
//                       common derivation plus r2 central generators
//   star                m, a: vertex 1 -> each of a-1 rays, identity m x m
//   dual_star           m, a: each of a-1 rays -> vertex 1, identity m x m
//   d4                  three rank-1 sources into a rank-2 center
//   kron2               two arrows rank 2 -> rank 2: identity and rotation
//   elliptic            D: three arrows rank 3 -> rank 3 from y^2 = x^3 - Dx
Representation builtin_rep(const std::string& name,
                           const std::map<std::string, long>& params = {});
std::vector<std::string> builtin_rep_names();

// Graded-submodule quiver of a family of operators on Z^n split into layers:
// one vertex per layer, and for every operator and every (source layer,
// target layer) pair with a nonzero block, an arrow carrying that block.
Representation graded_quiver_rep(const std::vector<MatZ>& operators,
                                 const std::vector<int>& layer_ranks);

}  // namespace qz
