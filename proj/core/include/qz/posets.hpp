#pragma once

// Finite posets, their (P-partition) generating functions, and the descent
// combinatorics used to cross-check them.
//
// A poset on {1..n} is stored with a natural labeling (x < y in the order
// implies x < y as integers). Input that violates this is relabeled along a
// canonical linear extension and the permutation is recorded, so callers can
// report results in the original labels.
//
// The generating function
//   G_P(X) = (sum over linear extensions pi of X^{maj(pi)}) / prod_{i=1}^n (1 - X^i)
// enumerates order-reversing maps P -> N_0 by total weight; ppartition_count
// recomputes the coefficients by direct enumeration as an independent check.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qz/intpoly.hpp"
#include "qz/quiver.hpp"
#include "qz/rationalfn.hpp"

namespace qz {

inline constexpr int kMaxExtensionElements = 10;

class Poset {
public:
    // Relations are 1-based (a, b) pairs meaning a < b. Any acyclic relation
    // list is accepted; it is closed transitively and reduced to covers.
    Poset(int n, std::vector<std::pair<int, int>> relations);

    static Poset from_json(const std::string& text);
    std::string to_json() const;

    int size() const { return n_; }
    const std::vector<std::pair<int, int>>& covers() const { return covers_; }
    bool less(int a, int b) const;  // strict order, 1-based

    // relabeling()[old-1] = new label; identity when the input was natural.
    const std::vector<int>& relabeling() const { return relabel_; }
    bool was_relabeled() const;

    // All linear extensions as words of labels. Throws if n exceeds the cap
    // (the count can grow factorially).
    std::vector<std::vector<int>> linear_extensions(int max_n = kMaxExtensionElements) const;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> covers_;
    std::vector<std::vector<bool>> less_;
    std::vector<int> relabel_;

    void build(std::vector<std::pair<int, int>> relations, bool allow_relabel);
};

// Permutation/word statistics (words have distinct entries).
std::vector<int> descent_set(const std::vector<int>& w);  // 1-based positions
int major_index(const std::vector<int>& w);
int inversion_count(const std::vector<int>& w);

// G_P(X) as a rational function in one variable with factored denominator
// prod_{i=1}^n (1 - X^i). Render with t_name = "X" for display.
RationalFn stanley_gf(const Poset& p, int max_n = kMaxExtensionElements);

// Number of order-reversing maps P -> N_0 of total weight m, by direct
// enumeration. Agrees with the series coefficients of stanley_gf.
Int ppartition_count(const Poset& p, int m);

// A poset is a delta-chain if for every element x all maximal chains of the
// filter {y : y >= x} have the same length. delta(x) is the number of
// elements in the longest chain starting at x (1 for a maximal element).
struct DeltaChainResult {
    bool is_delta_chain = false;
    std::vector<int> element_delta;  // longest-chain length per element
    long long delta_sum = 0;         // sum of element_delta (meaningful when
                                     // is_delta_chain; still filled otherwise)
};
DeltaChainResult delta_chain(const Poset& p);

// The quiver representation of the Hasse diagram: one rank-1 vertex per
// element and an identity arrow tail -> head for every cover tail < head.
// Its submodule zeta function is univariate and equals G_P(t).
Representation hasse_rep(const Poset& p);

// Gaussian binomial coefficient [m choose k]_X via the q-Pascal recursion.
IntPoly gaussian_binomial(int m, int k);

// The descent-class multinomial: computed both as a product of Gaussian
// binomials over the composition of n induced by I and as
// sum_{w in S_n, Des(w) subset I} X^{inv(w)}; the two are checked against
// each other before returning.
IntPoly q_multinomial_descent(int n, const std::vector<int>& descents);

// For every w in S_n (n <= max_n <= 8): composing with the longest element
// w0 on the right complements the descent set and complements the length to
// n(n-1)/2. Returns true if all permutations satisfy both identities.
bool coxeter_identity_check(int n, int max_n = 8);

// Named example posets used throughout the test suite.
const std::vector<std::pair<std::string, Poset>>& poset_catalog();

}  // namespace qz
