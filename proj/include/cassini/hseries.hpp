#pragma once

// Exact coefficients of the power series
//   (1 - x) / (1 - x^k - x^{k+ell-1} + x^{k+ell})
// whose m-th coefficient is the complete homogeneous symmetric function
// h_m evaluated at the reciprocal roots of the characteristic polynomial.

#include <vector>

#include "cassini/types.hpp"

namespace cassini {

struct HSeries {
    Params params;
    std::vector<Term> coeffs;  // coeffs[m] = h_m(1/r_1, ..., 1/r_{k+ell-1})
};

// Coefficients 0..m_max via the linear recurrence
//   h_m = n_m + h_{m-k} + h_{m-k-ell+1} - h_{m-k-ell},
// with numerator terms n_0 = 1, n_1 = -1 and out-of-range indices
// contributing 0. For m <= k+ell-2 the coefficients follow the pattern
// +1 if k | m, -1 if k | m-1, else 0.
HSeries h_coefficients(const Params& p, int m_max);

// The coefficient at m = ell-1, which drives the case classification:
// +1 if k | ell-1, -1 if k | ell-2 (zero counts as a multiple), else 0.
int h_ell_minus_1(const Params& p);

}  // namespace cassini
