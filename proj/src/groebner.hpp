#pragma once

// Internal binomial Groebner engine used by markov_basis. Binomials are kept
// as pairs of monomials (not difference vectors): before saturation finishes
// the two sides may share variables and that common factor is meaningful.

#include <cstdint>
#include <utility>
#include <vector>

#include "matchtoric/toric.hpp"

namespace matchtoric::detail {

using Exp = std::vector<int>;

struct GbCounters {
    long long pairs_processed = 0;
    long long basis_peak = 0;
};

// Reduced Groebner basis of the binomial ideal generated by gens (pairs of
// exponent vectors, all the same length, each pair graded: equal coordinate
// sums), with respect to the degree-compatible reverse lex order in which
// variable `cheap` (0-based) is the cheapest; then every element is divided
// by the largest power of x_cheap dividing it. The result generates the
// saturation of the input ideal by x_cheap.
std::vector<std::pair<Exp, Exp>> saturation_round(std::vector<std::pair<Exp, Exp>> gens,
                                                  int cheap, const ToricBudget& budget,
                                                  GbCounters& counters);

}  // namespace matchtoric::detail
