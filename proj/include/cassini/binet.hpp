#pragma once

// Binet-type coefficients: the weights a_i that express the tilde sequence
// as T[n] = sum_i a_i r_i^n over the characteristic roots.

#include <complex>
#include <vector>

#include "cassini/roots.hpp"
#include "cassini/types.hpp"

namespace cassini {

struct BinetCoeffs {
    Params params;
    std::vector<Complex> values;  // a_i, aligned with RootSet::roots
};

// Coefficients from the explicit interpolation formula with the tilde
// initial values (T[0] = T[k] = ... = T[k+ell-2] = 1, the rest 0).
BinetCoeffs binet_coefficients(const RootSet& rs);

// sum_i a_i r_i^n.
Complex binet_eval(const RootSet& rs, const BinetCoeffs& coeffs, long n);

}  // namespace cassini
