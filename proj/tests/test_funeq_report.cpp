#include <algorithm>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "qz/forms.hpp"
#include "qz/funeq.hpp"
#include "qz/posets.hpp"
#include "qz/quiver.hpp"
#include "qz/verify.hpp"

using namespace qz;

namespace {

SymmetryData symmetry_of(const std::string& name,
                         const std::map<std::string, long>& params = {}) {
    return predicted_symmetry(builtin_rep(name, params));
}

}  // namespace

TEST_CASE("predicted symmetry data from representation invariants") {
    SymmetryData heis = symmetry_of("heisenberg");
    CHECK(heis.n == 3);
    CHECK(heis.sign == -1);
    CHECK(heis.b == 3);
    CHECK(heis.c_exps == std::vector<int>{5});
    CHECK(heis.univariate_exponent() == 5);

    SymmetryData gh = symmetry_of("graded_heisenberg");
    CHECK(gh.n == 3);
    CHECK(gh.sign == -1);
    CHECK(gh.b == 1);
    CHECK(gh.c_exps == std::vector<int>{4, 1});
    CHECK(gh.univariate_exponent() == 5);

    SymmetryData d4 = symmetry_of("d4");
    CHECK(d4.n == 5);
    CHECK(d4.sign == -1);
    CHECK(d4.b == 1);
    CHECK(d4.c_exps == std::vector<int>{2, 2, 2, 2});
    CHECK(d4.univariate_exponent() == 8);

    SymmetryData kron = symmetry_of("kron2");
    CHECK(kron.n == 4);
    CHECK(kron.sign == 1);
    CHECK(kron.b == 2);
    CHECK(kron.c_exps == std::vector<int>{4, 2});

    SymmetryData ell = symmetry_of("elliptic");
    CHECK(ell.n == 6);
    CHECK(ell.sign == 1);
    CHECK(ell.b == 6);
    CHECK(ell.c_exps == std::vector<int>{6, 3});
    CHECK(ell.univariate_exponent() == 9);

    // A star with one-dimensional arms and a trivial center behaves like the
    // free lattice on its vertex set.
    SymmetryData free3 = symmetry_of("star", {{"m", 3}, {"a", 1}});
    CHECK(free3.n == 3);
    CHECK(free3.sign == -1);
    CHECK(free3.b == 3);
    CHECK(free3.c_exps == std::vector<int>{3});

    SymmetryData ds = symmetry_of("dual_star", {{"m", 2}, {"a", 3}});
    CHECK(ds.n == 6);
    CHECK(ds.sign == 1);
    CHECK(ds.b == 3);
    CHECK(ds.c_exps == std::vector<int>{2, 4, 4});

    Monomial uni = ds.predicted_monomial(true);
    CHECK(uni == Monomial{Rat(1), 3, {10}});
    Monomial multi = ds.predicted_monomial(false);
    CHECK(multi == Monomial{Rat(1), 3, {2, 4, 4}});
}

TEST_CASE("functional equation verification: positive cases") {
    FuneqReport heis =
        verify_funeq(builtin_formula("heisenberg"), symmetry_of("heisenberg"));
    CHECK(heis.holds);
    CHECK(heis.ratio_is_monomial);
    REQUIRE(heis.observed.has_value());
    CHECK(*heis.observed == Monomial{Rat(-1), 3, {5}});
    CHECK(heis.residual.empty());

    // Multivariate check against the per-vertex exponents.
    FuneqReport gh = verify_funeq(builtin_formula("graded_heisenberg"),
                                  symmetry_of("graded_heisenberg"));
    CHECK(gh.holds);
    CHECK(*gh.observed == Monomial{Rat(-1), 1, {4, 1}});

    // Collapsing the variables collapses the prediction.
    FuneqReport ghc = verify_funeq(builtin_formula("graded_heisenberg").collapsed_univariate(),
                                   symmetry_of("graded_heisenberg"));
    CHECK(ghc.holds);
    CHECK(*ghc.observed == Monomial{Rat(-1), 1, {5}});

    // The elliptic example carries its Frobenius symbol through the
    // inversion; the symbol exponents cancel in the ratio.
    FuneqReport ell = verify_funeq(builtin_formula("elliptic"), symmetry_of("elliptic"));
    CHECK(ell.holds);
    CHECK(*ell.observed == Monomial{Rat(1), 6, {9}});

    for (long res : {1L, 3L}) {
        FuneqReport kr =
            verify_funeq(builtin_formula("kron2", {{"res", res}}), symmetry_of("kron2"));
        CHECK(kr.holds);
        CHECK(*kr.observed == Monomial{Rat(1), 2, {6}});
    }
}

TEST_CASE("functional equation verification: failures are reported") {
    // {1<2, 1<3, 3<4} is not a delta-chain; its generating function violates
    // the symmetry its Hasse representation would predict.
    const Poset witness(4, {{1, 2}, {1, 3}, {3, 4}});
    REQUIRE(!delta_chain(witness).is_delta_chain);
    FuneqReport bad = verify_funeq(stanley_gf(witness), predicted_symmetry(hasse_rep(witness)));
    CHECK(!bad.holds);
    CHECK(!bad.residual.empty());

    // Plain wrong formula for a real representation.
    FuneqReport wrong = verify_funeq(zeta_free_local(2), symmetry_of("heisenberg"));
    CHECK(!wrong.holds);

    // Arity mismatch is an error, not a failed report.
    CHECK_THROWS_AS(verify_funeq(builtin_formula("graded_heisenberg"),
                                 symmetry_of("heisenberg")),
                    Error);
}

TEST_CASE("functional equation report serialization") {
    FuneqReport ok = verify_funeq(builtin_formula("heisenberg"), symmetry_of("heisenberg"));
    auto j = nlohmann::json::parse(funeq_report_json(ok));
    CHECK(j["n"] == 3);
    CHECK(j["predicted"]["sign"] == -1);
    CHECK(j["predicted"]["q_exp"] == 3);
    CHECK(j["predicted"]["t_exps"] == std::vector<int>{5});
    CHECK(j["observed"]["coeff"] == "-1");
    CHECK(j["observed"]["t_exps"] == std::vector<int>{5});
    CHECK(j["ratio_is_monomial"] == true);
    CHECK(j["holds"] == true);
    CHECK(!j.contains("residual"));

    FuneqReport bad = verify_funeq(zeta_free_local(2), symmetry_of("heisenberg"));
    auto jb = nlohmann::json::parse(funeq_report_json(bad));
    CHECK(jb["holds"] == false);
    CHECK(jb.contains("residual"));
}

TEST_CASE("verification registry") {
    std::vector<std::string> slugs = check_slugs();
    CHECK(slugs == std::vector<std::string>{"counts", "funeq", "posets", "enumeration",
                                            "invariants", "combinatorics", "homogeneity"});

    VerifyOptions fast;
    fast.fast = true;
    CheckResult comb = run_check("combinatorics", fast);
    CHECK(comb.slug == "combinatorics");
    CHECK(comb.passed);
    CHECK(!comb.detail.empty());
    CHECK(comb.seconds >= 0.0);

    CheckResult homog = run_check("homogeneity", fast);
    CHECK(homog.passed);

    CHECK_THROWS_AS(run_check("no_such_check", fast), Error);

    auto j = nlohmann::json::parse(checks_report_json({comb, homog}, fast));
    CHECK(j["fast"] == true);
    CHECK(j["checks"].size() == 2);
    CHECK(j["checks"][0]["slug"] == "combinatorics");
    CHECK(j["checks"][0]["passed"] == true);
    CHECK(j["all_passed"] == true);
}
