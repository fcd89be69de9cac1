#include <random>

#include "doctest.h"
#include "json.hpp"
#include "qz/forms.hpp"
#include "qz/lattice.hpp"
#include "qz/quiver.hpp"
#include "qz/series.hpp"

using namespace qz;

namespace {

MatZ diag3(long long a, long long b, long long c) {
    return MatZ::from_int_rows({{a, 0, 0}, {0, b, 0}, {0, 0, c}});
}

}  // namespace

TEST_CASE("sublattice totals at small scales") {
    CHECK(count_sublattices(1, 2, 3) == 1);
    CHECK(count_sublattices(2, 2, 1) == 3);
    CHECK(count_sublattices(3, 2, 2) == 35);
    CHECK(count_sublattices(2, 3, 2) == 13);
    CHECK(count_sublattices(0, 2, 0) == 1);
    CHECK(count_sublattices(0, 2, 1) == 0);
    CHECK(enum_sublattices(3, 2, 2).size() == 35);
}

TEST_CASE("enumerated bases are reduced Hermite forms") {
    long long seen = 0;
    for_each_sublattice(3, 5, 2, [&](const LocalLattice& L) {
        ++seen;
        CHECK(L.p == 5);
        CHECK(L.index_exponent == 2);
        Int det = 1;
        for (int i = 0; i < 3; ++i) {
            det *= L.basis.at(i, i);
            for (int j = 0; j < 3; ++j) {
                if (j < i) CHECK(L.basis.at(i, j) == 0);
                if (j > i) {
                    CHECK(L.basis.at(i, j) >= 0);
                    CHECK(L.basis.at(i, j) < L.basis.at(j, j));
                }
            }
        }
        CHECK(det == 25);
    });
    CHECK(seen == count_sublattices(3, 5, 2));
}

TEST_CASE("subrepresentation membership for the rank-3 commutator module") {
    Representation rep = builtin_rep("heisenberg");
    LatticeTuple T;
    T.p = 2;
    // Images of the generator actions land in the span of the last basis
    // vector, so closing under the maps constrains only that coordinate.
    T.parts = {make_lattice(2, diag3(1, 1, 2))};
    CHECK_FALSE(is_subrep(rep, T));
    T.parts = {make_lattice(2, diag3(2, 1, 1))};
    CHECK(is_subrep(rep, T));
    T.parts = {make_lattice(2, diag3(2, 2, 2))};
    CHECK(is_subrep(rep, T));
    CHECK(full_tuple(rep, 2).total_exponent() == 0);
    CHECK(is_subrep(rep, full_tuple(rep, 2)));
}

TEST_CASE("univariate counts for the rank-3 commutator module") {
    Representation rep = builtin_rep("heisenberg");
    CountOptions opts;
    opts.bound = 2;
    CountTable table = count_subreps(rep, 2, opts);
    CHECK(table.at({0}) == 1);
    CHECK(table.at({1}) == 3);
    CHECK(table.at({2}) == 7);
    CHECK(table.univariate() == std::vector<Int>{1, 3, 7});
}

TEST_CASE("multivariate counts keyed by vertex exponents") {
    Representation rep = builtin_rep("graded_heisenberg");
    CountOptions opts;
    opts.bound = 4;
    opts.multivariate = true;
    CountTable table = count_subreps(rep, 2, opts);
    CHECK(table.at({0, 0}) == 1);
    CHECK(table.at({1, 0}) == 3);
    CHECK(table.at({0, 1}) == 0);  // shrinking only the target breaks closure
    CHECK(table.at({1, 1}) == 0);
    CHECK(table.at({2, 0}) == 7);
    CHECK(table.at({2, 1}) == 1);
    CHECK(table.at({3, 1}) == 3);
    CHECK_THROWS_AS(table.univariate(), Error);
}

TEST_CASE("acceleration by arrow preimages matches the naive product scan") {
    for (const char* name : {"graded_heisenberg", "d4", "kron2"}) {
        Representation rep = builtin_rep(name);
        CountOptions naive;
        naive.bound = 3;
        naive.multivariate = true;
        CountOptions fast = naive;
        fast.accelerate = true;
        CHECK(count_subreps(rep, 2, naive).counts == count_subreps(rep, 2, fast).counts);
    }
    Representation star12 = builtin_rep("star", {{"m", 1}, {"a", 2}});
    CountOptions naive;
    naive.bound = 4;
    CountOptions fast = naive;
    fast.accelerate = true;
    CHECK(count_subreps(star12, 3, naive).counts == count_subreps(star12, 3, fast).counts);
}

TEST_CASE("invariant sublattices of explicit operator sets") {
    // No operators: every sublattice counts.
    CountTable free1 = count_invariant_sublattices(1, {}, 2, 3);
    CHECK(free1.univariate() == std::vector<Int>{1, 1, 1, 1});
    CountTable free2 = count_invariant_sublattices(2, {MatZ(2, 2)}, 2, 2);
    CHECK(free2.univariate() == std::vector<Int>{1, 3, 7});
    // The single Jordan block fixes one of the three index-2 sublattices.
    MatZ nil = MatZ::from_int_rows({{0, 1}, {0, 0}});
    CountTable jordan = count_invariant_sublattices(2, {nil}, 2, 1);
    CHECK(jordan.univariate() == std::vector<Int>{1, 1});

    // Cross-oracle: operator-invariant counting of the flattened module
    // agrees with the per-vertex subrepresentation count.
    for (const char* name : {"star", "heisenberg"}) {
        Representation rep = name == std::string("star")
                                 ? builtin_rep("star", {{"m", 1}, {"a", 2}})
                                 : builtin_rep(name);
        CountOptions opts;
        opts.bound = 3;
        CountTable direct = count_subreps(rep, 2, opts);
        CountTable module =
            count_invariant_sublattices(rep.total_rank(), rep.to_submodule_instance(), 2, 3);
        CHECK(direct.counts == module.counts);
    }
}

TEST_CASE("count tables serialize with comma-joined keys") {
    Representation rep = builtin_rep("graded_heisenberg");
    CountOptions opts;
    opts.bound = 1;
    opts.multivariate = true;
    CountTable table = count_subreps(rep, 2, opts);
    auto j = nlohmann::json::parse(table.to_json());
    CHECK(j["prime"] == 2);
    CHECK(j["mode"] == "multivariate");
    CHECK(j["counts"]["0,0"] == 1);
    CHECK(j["counts"]["1,0"] == 3);
    CHECK(j["counts"]["0,1"] == 0);
}

TEST_CASE("resource ceiling refuses oversized runs") {
    Representation rep = builtin_rep("heisenberg");
    CountOptions opts;
    opts.bound = 3;
    opts.ceiling = 5;
    CHECK_THROWS_AS(count_subreps(rep, 2, opts), Error);
}

TEST_CASE("random tuples are reproducible and respect the exponent cap") {
    Representation rep = builtin_rep("graded_heisenberg");
    std::mt19937_64 a(123), b(123);
    for (int i = 0; i < 20; ++i) {
        LatticeTuple Ta = random_tuple(rep, 2, 2, a);
        LatticeTuple Tb = random_tuple(rep, 2, 2, b);
        REQUIRE(Ta.parts.size() == Tb.parts.size());
        for (size_t v = 0; v < Ta.parts.size(); ++v) {
            CHECK(Ta.parts[v].basis == Tb.parts[v].basis);
            CHECK(Ta.parts[v].index_exponent <= 2 * Ta.parts[v].dim());
        }
    }
    std::mt19937_64 c(124);
    bool any_different = false;
    for (int i = 0; i < 20; ++i) {
        LatticeTuple Ta = random_tuple(rep, 2, 2, a);
        LatticeTuple Tc = random_tuple(rep, 2, 2, c);
        for (size_t v = 0; v < Ta.parts.size(); ++v)
            any_different = any_different || !(Ta.parts[v].basis == Tc.parts[v].basis);
    }
    CHECK(any_different);
}

TEST_CASE("streamed enumeration equals the table for larger blocks") {
    for (long p : {2L, 3L})
        for (int e = 0; e <= 4; ++e) {
            long long seen = 0;
            for_each_sublattice(4, p, e, [&](const LocalLattice&) { ++seen; });
            CHECK(Int(seen) == count_sublattices(4, p, e));
        }
}
