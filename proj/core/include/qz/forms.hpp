#pragma once

// Closed-form zeta functions of the example representations, together with
// the auxiliary counting identities (Carlitz polynomials, the thin-star
// summation identity, rank-two subgroup zetas, the arm-by-arm series for the
// rank-two stars) used to cross-check them.
//
// All formulas are returned in normalized form with factored denominators,
// so they render exactly as they are usually written, e.g.
//   star_thin(3)  ->  (1+t^2)/((1-t)(1-t^2)(1-t^3)).

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qz/intmat.hpp"
#include "qz/intpoly.hpp"
#include "qz/rationalfn.hpp"
#include "qz/series.hpp"

namespace qz {

// prod_{i=0}^{n-1} 1/(1 - q^i t), the sublattice zeta function of Z^n with no
// operators; n = 0 gives 1.
RationalFn zeta_free_local(int n);

// t^m * prod_{j=1}^{i} 1/(1-q^{j-1} t^2)
//     * prod_{k=i+1}^{n2} 1/(1-q^{k-1} t)
//     * prod_{l=1}^{n1} 1/(1-q^{l-1} t).
// Requires 0 <= i <= n2 and m >= 0.
RationalFn kronecker1_local(int n1, int n2, int i, int m);

// C_n(x, q) = sum_{w in S_n} x^{des(w)} q^{maj(w)} with x as the t-variable.
// C_0 = 1.
IntPoly carlitz_polynomial(int n);

// C_{a-1}(t, t) / prod_{i=1}^{a} (1 - t^i): the univariate, q-free zeta
// function of the thin star with a vertices (a >= 1).
RationalFn star_thin(int a);

// Truncated check of sum_{r>=0} t^r ((1-t^{r+1})/(1-t))^{a-1} = star_thin(a)
// up to total degree `bound`.
bool macmahon_identity_check(int a, int bound);

// sum_{a=0}^{l1} sum_{d=0}^{l2} q^{min(d, l1-a)} t^{a+d}: the subgroup zeta
// polynomial of the finite abelian p-group of type (l1, l2), as a polynomial
// in q and one t-variable. Requires l1 >= l2 >= 0.
IntPoly subgroup_zeta_two_part(int l1, int l2);

// Series (up to total t-degree `bound`) of the rank-two star with a vertices,
// summed arm by arm over the cokernel type at the center:
//   sum_{r0>=0} t^{2 r0} ( Z_{(r0,r0)}^{a-1}
//        + (1+q^{-1}) sum_{r1>=1} (q t)^{r1} Z_{(r0+r1,r0)}^{a-1} )
// with Z the subgroup zeta polynomial above. Valid for every a >= 1; this is
// the only exact form available for a >= 5.
PowerSeries star_V2a_series(int a, int bound);

// (rank, p-adic valuation of the product of the nonzero elementary divisors)
// of an integer matrix.
std::pair<int, int> iso_exponent(const MatZ& phi, const Int& p);

// Number of points of Y^2 = X^3 - D X over F_p including the point at
// infinity, by direct enumeration. Requires p prime and p not dividing 2D.
Int elliptic_point_count(const Int& D, const Int& p);

// Catalog of closed-form zeta functions, keyed like the builtin
// representations:
//   free               n             prod_{i<n} 1/(1-q^i t)
//   heisenberg                       1/((1-t)(1-q t)(1-q^2 t^3))
//   graded_heisenberg                1/((1-t1)(1-q t1)(1-t1^2 t2))
//   star_thin          a             alias for star with m=1
//   star               m, a          m=1 any a; m=2 needs a<=4
//   dual_star          m, a
//   d4
//   kron2              res           residue of q mod 4, res in {1,3}
//   elliptic_w1, elliptic_w2
//   elliptic                         W1 + E*W2 with the weight-1 symbol E
//   kronecker1         n1, n2, i, m
// Unknown names or invalid parameters raise Error listing the options.
RationalFn builtin_formula(const std::string& name,
                           const std::map<std::string, long>& params = {});
std::vector<std::string> builtin_formula_names();

}  // namespace qz
