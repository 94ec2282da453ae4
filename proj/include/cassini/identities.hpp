#pragma once

// Numeric verification of each step in the determinant derivation: root
// products, the factored characteristic polynomial, symmetric-function
// coefficients, Vandermonde products, the roots-of-unity product, the
// Schur-to-h reduction, and the assembled product formula.

#include <complex>
#include <string>
#include <vector>

#include "cassini/binet.hpp"
#include "cassini/roots.hpp"
#include "cassini/types.hpp"

namespace cassini {

// Scale-aware residual |a - b| / max(1, |a|, |b|). The Vandermonde-squared
// products reach discriminant scale (1e7 already at k+ell = 9), where an
// absolute residual would be meaningless.
double residual(Complex a, Complex b);

// h_m(xs) via the prefix recurrence h_m(x_1..x_j) = h_m(x_1..x_{j-1}) +
// x_j h_{m-1}(x_1..x_j); O(m * |xs|).
Complex h_numeric(const std::vector<Complex>& xs, int m);

// h_m(xs) by direct enumeration of all degree-m monomials. Exponential in m;
// the independent route used by schur_h_check. Throws std::invalid_argument
// when the term count is unreasonably large.
Complex h_direct_sum(const std::vector<Complex>& xs, int m);

// Determinant of a complex matrix by partially pivoted elimination.
Complex complex_determinant(std::vector<std::vector<Complex>> m);

struct IdentityCheck {
    std::string name;  // "(a) product of roots", ...
    double residual;
    bool pass;
};

struct IdentityReport {
    Params params;
    std::vector<IdentityCheck> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// The six derivation identities, each reported with its residual:
//   (a) prod r_i = (-1)^{k+ell}
//   (b) g(x) = -prod(1 - x/r_i) at five fixed sample points
//   (c) numeric h_m at reciprocal roots equals the exact series coefficients
//       for m = 0..k+ell-2
//   (d) prod_{i<j}(r_j-r_i)(1/r_i-1/r_j) = prod_{i<j}(r_j-r_i)^2 / (-1)^{k+ell}
//   (e) prod_j (r_j^ell-1)/(r_j(r_j-1)) = (-1)^{(k+ell)ell} *
//       prod_{i=1}^{ell-1} (w^{i(k-1)}-1)/(w^i-1), w = exp(2*pi*i/ell)
//   (f) that omega product is 1 if gcd(ell, k-1) = 1 and 0 otherwise
// A failed identity is a report entry, not an error.
IdentityReport verify_root_identities(const Params& p, double tol);

struct SchurCheck {
    Complex quotient;  // det(power matrix) / Vandermonde
    Complex h_value;   // direct monomial sum
    double residual;
    bool pass;
};

// Verifies det(x_i^{lambda_j + N - j}) / prod_{i<j}(x_i - x_j) = h_m(xs)
// for the single-row partition lambda = (m, 0, ..., 0). Points must be
// pairwise distinct and nonzero (std::invalid_argument otherwise).
SchurCheck schur_h_check(int m, const std::vector<Complex>& xs, double tol = 1e-8);

// Evaluates the assembled product formula
//   (prod a_j) * (prod_{i<j}(r_j-r_i)(1/r_i-1/r_j)) * (prod r_i)^{k+2ell-3}
//     * h_{ell-1}(1/r_1, ..., 1/r_{k+ell-1})
// from a fresh root set; the result is a near-integer matching the exact
// determinant of the j=0 tilde matrix.
Complex product_formula_det(const Params& p, double tol);

}  // namespace cassini
