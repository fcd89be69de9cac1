#pragma once

// Predicted local functional equation of a submodule zeta function: under
// q -> q^{-1}, t_i -> t_i^{-1} the function is reproduced up to the sign
// (-1)^n, a power of q determined by the vertex ranks, and per-vertex powers
// of t determined by the coranks of the centralizer series. The prediction
// is computed from the representation alone and checked exactly against a
// closed-form zeta function via monomial_ratio.

#include <optional>
#include <string>
#include <vector>

#include "qz/quiver.hpp"
#include "qz/rationalfn.hpp"
#include "qz/structure.hpp"

namespace qz {

struct SymmetryData {
    int n = 0;     // total rank; the predicted sign is (-1)^n
    int sign = 1;
    long long b = 0;            // q-exponent: sum over vertices of C(n_h, 2)
    std::vector<int> c_exps;    // t_h-exponent: sum of coranks of Z_0..Z_{c-1} at h

    long long univariate_exponent() const;
    // The predicted ratio zeta|_{q->1/q} / zeta as a monomial; collapse = true
    // sums the t-exponents into a single variable.
    Monomial predicted_monomial(bool collapse) const;
};

SymmetryData predicted_symmetry(const Representation& rep);

struct FuneqReport {
    SymmetryData predicted;
    bool ratio_is_monomial = false;
    std::optional<Monomial> observed;  // the actual ratio when it is a monomial
    bool holds = false;
    std::string residual;  // observed/predicted factor (or the non-monomial
                           // ratio) when the check fails; empty when it holds
};

// Checks zeta against the prediction. The zeta function may be multivariate
// (one t per vertex, in vertex order) or univariate (specialized t_h = t);
// the arity picks the comparison. Symbols of positive weight are allowed and
// must cancel in the ratio.
FuneqReport verify_funeq(const RationalFn& zeta, const SymmetryData& predicted);

std::string funeq_report_json(const FuneqReport& report);

}  // namespace qz
