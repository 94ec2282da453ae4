#pragma once

// Exact integer determinants via fraction-free (Bareiss) elimination.

#include <utility>
#include <vector>

#include "cassini/matrix.hpp"
#include "cassini/types.hpp"

namespace cassini {

struct DetResult {
    Term value;
    // (elimination step, pivot row chosen) per step, in order; diagnostics.
    // Shorter than dim when a fully zero pivot column short-circuits to 0.
    std::vector<std::pair<int, int>> pivot_trace;
};

// Fraction-free elimination with deterministic pivoting: the pivot is the
// first nonzero entry scanning down the current column, and every row swap
// flips the tracked sign. All intermediates stay integral.
DetResult determinant(const ExactMatrix& m);

}  // namespace cassini
