#pragma once

#include <utility>
#include <vector>

#include <gmpxx.h>

// Reference computations that share no code with the library.
namespace oracle {

// (color, exponent), colors 0-based.
using Letters = std::vector<std::pair<int, int>>;

// <z_{c1}^{e1} * ... * z_{cm}^{em}, f_{i1,-d1} ... f_{ik,-dk}> at a rational
// value of q, with the product and the contour integral both expanded as
// truncated iterated Laurent series in |z_1| << ... << |z_k|.
// cartan[i][j] = (alpha_i, alpha_j).
mpq_class pairing_at(const std::vector<std::vector<int>>& cartan, const Letters& element, const Letters& word,
                     const mpq_class& q);

}  // namespace oracle
