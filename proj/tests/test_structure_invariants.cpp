#include <random>

#include "doctest.h"
#include "qz/invariants.hpp"
#include "qz/lattice.hpp"
#include "qz/quiver.hpp"
#include "qz/structure.hpp"

using namespace qz;

namespace {

LocalLattice diag_lattice(long p, const std::vector<long long>& d) {
    int n = static_cast<int>(d.size());
    MatZ m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = d[i];
    return make_lattice(p, m);
}

}  // namespace

TEST_CASE("nilpotency classes of the builtin representations") {
    CHECK(nilpotency_class(builtin_rep("heisenberg")) == 2);
    CHECK(nilpotency_class(builtin_rep("graded_heisenberg")) == 2);
    CHECK(nilpotency_class(builtin_rep("fil4")) == 4);
    CHECK(nilpotency_class(builtin_rep("m4")) == 4);
    CHECK(nilpotency_class(builtin_rep("d4")) == 2);
    CHECK(nilpotency_class(builtin_rep("star", {{"m", 2}, {"a", 3}})) == 2);
    CHECK(nilpotency_class(builtin_rep("star", {{"m", 2}, {"a", 1}})) == 1);
    // An identity loop never dies.
    Representation bad({Vertex{"v", 1}}, {Arrow{"e", 0, 0, MatZ::identity(1)}});
    CHECK_FALSE(nilpotency_class(bad).has_value());
    CHECK_THROWS_AS(centralizer_series(bad), Error);
}

TEST_CASE("centralizer coranks feed the symmetry exponents") {
    CentralizerSeries cs = centralizer_series(builtin_rep("heisenberg"));
    CHECK(cs.c == 2);
    REQUIRE(cs.corank.size() == 1);
    CHECK(cs.corank[0] == std::vector<int>{3, 2, 0});

    CentralizerSeries gh = centralizer_series(builtin_rep("graded_heisenberg"));
    CHECK(gh.c == 2);
    CHECK(gh.corank[0] == std::vector<int>{2, 2, 0});
    CHECK(gh.corank[1] == std::vector<int>{1, 0, 0});
    CHECK(gh.total_corank[0] == 3);
    CHECK(gh.total_corank[1] == 2);
}

TEST_CASE("cocentral gradings validate and classify homogeneity") {
    for (const char* name : {"heisenberg", "graded_heisenberg", "m4", "m4_graded",
                             "elliptic", "d4"}) {
        Representation rep = builtin_rep(name);
        Grading g = cocentral_grading(rep);
        validate_grading(rep, g);
        CHECK(check_homogeneity(rep, g).homogeneous);
    }
    {
        Representation rep = builtin_rep("heisenberg");
        Grading g = cocentral_grading(rep);
        CHECK(g.c == 2);
        CHECK(g.layer_ranks == std::vector<std::vector<int>>{{2, 1}});
    }
    {
        Representation rep = builtin_rep("fil4");
        Grading g = cocentral_grading(rep);
        CHECK(g.c == 4);
        HomogeneityResult r = check_homogeneity(rep, g);
        CHECK_FALSE(r.homogeneous);
        REQUIRE(r.witness.has_value());
        CHECK(r.witness->generator == 1);
        CHECK(r.witness->from_layer == 2);
        CHECK(r.witness->to_layer == 4);
    }
}

TEST_CASE("generated endomorphism algebras close under products") {
    Representation rep = builtin_rep("heisenberg");
    EndAlgebra alg = algebra_closure(3, rep.extended_arrow_matrices());
    CHECK(alg.rank() == 2);
    for (const MatZ& g : rep.extended_arrow_matrices()) CHECK(alg.contains(g));
    CHECK(alg.contains(rep.extended_arrow_matrices()[0] * rep.extended_arrow_matrices()[1]));
    CHECK_FALSE(alg.contains(MatZ::identity(3)));

    EndAlgebra m4 = algebra_closure(5, builtin_rep("m4").extended_arrow_matrices());
    CHECK(m4.rank() >= 4);  // generators plus nonzero length-2 words
}

TEST_CASE("descent encoding of elementary divisors") {
    NuInvariant id = nu_invariant(diag_lattice(2, {1, 1, 1}));
    CHECK(id.descents.empty());
    CHECK(id.trailing == 0);
    CHECK(id.index_exponent() == 0);

    NuInvariant a = nu_invariant(diag_lattice(2, {4, 2, 1}));
    CHECK(a.exponents == std::vector<int>{2, 1, 0});
    CHECK(a.descents == std::vector<int>{1, 2});
    CHECK(a.jumps == std::vector<int>{1, 1});
    CHECK(a.trailing == 0);
    CHECK(a.trailing_zero());
    CHECK(a.index_exponent() == 3);
    CHECK(a.reconstructed_exponents() == a.exponents);

    NuInvariant b = nu_invariant(diag_lattice(2, {4, 2}));
    CHECK(b.exponents == std::vector<int>{2, 1});
    CHECK(b.descents == std::vector<int>{1});
    CHECK(b.jumps == std::vector<int>{1});
    CHECK(b.trailing == 1);
    CHECK_FALSE(b.trailing_zero());
    CHECK(b.index_exponent() == 3);
    CHECK(b.descents_star() == std::vector<int>{1, 2});
    CHECK(b.jumps_star() == std::vector<int>{1, 1});

    // The encoding sees elementary divisors, not the written basis.
    MatZ skew = MatZ::from_int_rows({{2, 1}, {0, 2}});
    NuInvariant c = nu_invariant(make_lattice(2, skew));
    CHECK(c.exponents == std::vector<int>{2, 0});
    CHECK(c.index_exponent() == 2);
}

TEST_CASE("delta-shift thresholds by search and by valuation formula") {
    Representation gh = builtin_rep("graded_heisenberg");
    DeltaContext ctx = make_delta_context(gh, cocentral_grading(gh), 2);
    LatticeTuple T;
    T.p = 2;
    T.parts = {make_lattice(2, MatZ::identity(2)),
               make_lattice(2, MatZ::from_int_rows({{2}}))};
    CHECK_FALSE(is_subrep(gh, T));
    CHECK(m_tilde_1_search(ctx, T) == 1);
    CHECK(m_tilde_1_formula(ctx, T) == 1);
    CHECK(m_tilde_1(ctx, T) == 1);
    CHECK(is_subrep(gh, scale_by_delta(ctx, to_graded(ctx, T), 1)));

    // Subrepresentations sit at threshold zero.
    LatticeTuple full = full_tuple(gh, 2);
    CHECK(m_tilde_1(ctx, full) == 0);

    Representation heis = builtin_rep("heisenberg");
    DeltaContext hctx = make_delta_context(heis, cocentral_grading(heis), 2);
    LatticeTuple H;
    H.p = 2;
    H.parts = {make_lattice(2, MatZ::from_int_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 4}}))};
    CHECK(m_2(hctx, H) == 2);
    CHECK(m_2(hctx, full_tuple(heis, 2)) == 0);
    LatticeTuple scaled;
    scaled.p = 2;
    scaled.parts = {make_lattice(2, Int(2) * MatZ::identity(3))};
    CHECK_THROWS_AS(m_2(hctx, scaled), Error);  // a homothety multiple is not maximal
}

TEST_CASE("minimal valuations survive the delta shift on subrepresentations") {
    Representation heis = builtin_rep("heisenberg");
    DeltaContext ctx = make_delta_context(heis, cocentral_grading(heis), 2);
    std::mt19937_64 rng(7);
    int subreps_seen = 0;
    for (int i = 0; i < 300; ++i) {
        LatticeTuple T = random_tuple(heis, 2, 2, rng);
        CHECK(lemma_mc_check(ctx, T));
        if (is_subrep(heis, T)) ++subreps_seen;
        int m1 = m_tilde_1(ctx, T);
        CHECK(m1 <= tau_of_tuple(to_graded(ctx, T)));
        CHECK(delta_ray_check(ctx, T, 2));
    }
    CHECK(subreps_seen > 0);
}
