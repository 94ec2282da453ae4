#pragma once

// Characteristic polynomial of the dying-rabbit recurrence and a
// deterministic simultaneous-iteration root finder for it.

#include <complex>
#include <vector>

#include "cassini/types.hpp"

namespace cassini {

using Complex = std::complex<double>;

// g(x) = x^{k+ell-1} - (1 + x + ... + x^{k-1}), evaluated in the expanded
// polynomial form, which is defined at x = 1 (g(1) = 1 - k).
Complex char_poly_eval(const Params& p, Complex x);

// Derivative g'(x), same expanded form.
Complex char_poly_deriv(const Params& p, Complex x);

struct RootSet {
    Params params;
    std::vector<Complex> roots;  // all k+ell-1 roots, sorted by (re, im)
    double residual_bound;       // max |g(r_i)|
    double separation;           // min pairwise |r_i - r_j|
};

// All roots of g via Aberth-Ehrlich simultaneous iteration. Initial guesses
// are equally spaced on the circle of radius 1 + max coefficient magnitude
// (with a fixed phase offset), so results are reproducible. Converges when
// the largest correction step drops below 1e-13; iteration cap 500.
// Throws numeric_failure (carrying the best residual) if the iteration does
// not converge, if the residual bound exceeds tol, or if the computed roots
// are not numerically distinct and distinct from 1.
RootSet find_roots(const Params& p, double tol);

}  // namespace cassini
