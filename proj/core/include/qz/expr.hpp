#pragma once

// Canonical string rendering and parsing for polynomials and rational
// functions. Rendering is deterministic (terms in canonical order, ascending)
// and round-trips through parse_rational. The grammar supports implicit
// multiplication ("(1-t)(1-q*t)", "2t^3"), explicit '*' and '/', integer
// exponents with '^', and named symbols.

#include <string>
#include <vector>

#include "qz/intpoly.hpp"

namespace qz {
class RationalFn;
}

namespace qz::expr {

struct RenderOptions {
    std::string q_name = "q";
    std::string t_name = "t";  // arity > 1 renders as t1, t2, ...
};

std::string render(const IntPoly& p, const RenderOptions& opts = {});
std::string render(const RationalFn& f, const RenderOptions& opts = {});

// Parse an expression over q, t (or t1..tN), optional alias names for t1
// (e.g. "X" for single-variable polynomials), and declared symbols.
RationalFn parse_rational(const std::string& src, int t_arity,
                          const std::vector<FrobeniusSymbol>& symbols = {},
                          const std::vector<std::string>& t1_aliases = {"X", "x"});

}  // namespace qz::expr
