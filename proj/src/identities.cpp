#include "cassini/identities.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "cassini/determinant.hpp"
#include "cassini/hseries.hpp"
#include "cassini/matrix.hpp"

namespace cassini {

double residual(Complex a, Complex b) {
    const double scale = std::max({1.0, std::abs(a), std::abs(b)});
    return std::abs(a - b) / scale;
}

Complex h_numeric(const std::vector<Complex>& xs, int m) {
    if (m < 0) throw std::domain_error("h_numeric requires m >= 0");
    std::vector<Complex> h(static_cast<std::size_t>(m) + 1, 0.0);
    h[0] = 1.0;
    for (const Complex& x : xs)
        for (int d = 1; d <= m; ++d) h[static_cast<std::size_t>(d)] += x * h[static_cast<std::size_t>(d) - 1];
    return h[static_cast<std::size_t>(m)];
}

Complex h_direct_sum(const std::vector<Complex>& xs, int m) {
    if (m < 0) throw std::domain_error("h_direct_sum requires m >= 0");
    const int n = static_cast<int>(xs.size());
    if (n == 0) return m == 0 ? 1.0 : 0.0;

    // term count is C(n+m-1, m); refuse absurd enumerations
    double count = 1.0;
    for (int i = 1; i <= m; ++i) count *= static_cast<double>(n - 1 + i) / i;
    if (count > 5e6)
        throw std::invalid_argument("h_direct_sum: monomial count too large for direct enumeration");

    // enumerate nondecreasing index tuples (i_1 <= ... <= i_m)
    Complex total = 0.0;
    std::vector<int> idx(static_cast<std::size_t>(m), 0);
    while (true) {
        Complex prod = 1.0;
        for (int i : idx) prod *= xs[static_cast<std::size_t>(i)];
        total += prod;
        int pos = m - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - 1) --pos;
        if (pos < 0) break;
        const int next = idx[static_cast<std::size_t>(pos)] + 1;
        for (int i = pos; i < m; ++i) idx[static_cast<std::size_t>(i)] = next;
    }
    return total;
}

Complex complex_determinant(std::vector<std::vector<Complex>> m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("complex_determinant: matrix not square");

    Complex det = 1.0;
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t pivot = step;
        for (std::size_t i = step + 1; i < n; ++i)
            if (std::abs(m[i][step]) > std::abs(m[pivot][step])) pivot = i;
        if (std::abs(m[pivot][step]) == 0.0) return 0.0;
        if (pivot != step) {
            std::swap(m[pivot], m[step]);
            det = -det;
        }
        det *= m[step][step];
        for (std::size_t i = step + 1; i < n; ++i) {
            const Complex factor = m[i][step] / m[step][step];
            for (std::size_t c = step; c < n; ++c) m[i][c] -= factor * m[step][c];
        }
    }
    return det;
}

namespace {

Complex int_pow(Complex base, long e) {
    Complex acc = 1.0;
    bool invert = false;
    if (e < 0) {
        invert = true;
        e = -e;
    }
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return invert ? 1.0 / acc : acc;
}

double parity_sign(long e) { return e % 2 == 0 ? 1.0 : -1.0; }

// prod_{i<j} (r_j - r_i)(1/r_i - 1/r_j)
Complex vandermonde_reciprocal_product(const std::vector<Complex>& r) {
    Complex prod = 1.0;
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = i + 1; j < r.size(); ++j)
            prod *= (r[j] - r[i]) * (1.0 / r[i] - 1.0 / r[j]);
    return prod;
}

// prod_{i=1}^{ell-1} (w^{i(k-1)} - 1)/(w^i - 1) for w = exp(2*pi*i/ell)
Complex omega_product(const Params& p) {
    const Complex omega = std::polar(1.0, 2.0 * std::numbers::pi / p.ell);
    Complex prod = 1.0;
    for (int i = 1; i <= p.ell - 1; ++i)
        prod *= (int_pow(omega, static_cast<long>(i) * (p.k - 1)) - 1.0) / (int_pow(omega, i) - 1.0);
    return prod;
}

}  // namespace

IdentityReport verify_root_identities(const Params& p, double tol) {
    if (tol <= 0.0) throw std::domain_error("verify_root_identities requires tol > 0");
    const RootSet rs = find_roots(p, tol);
    const auto& r = rs.roots;
    const int n = p.dim();

    IdentityReport report{p, {}};
    const auto record = [&](std::string name, double res) {
        report.checks.push_back({std::move(name), res, res < tol});
    };

    // (a) product of all roots
    Complex root_product = 1.0;
    for (const auto& ri : r) root_product *= ri;
    record("(a) product of roots", residual(root_product, parity_sign(p.k + p.ell)));

    // (b) factorization g(x) = -prod(1 - x/r_i) at fixed probe points
    const Complex probes[] = {{0.37, 0.21}, {-0.64, 0.0}, {0.11, -0.83}, {1.07, 0.13}, {-0.29, -0.55}};
    double worst_b = 0.0;
    for (const Complex& x : probes) {
        Complex prod = 1.0;
        for (const auto& ri : r) prod *= 1.0 - x / ri;
        worst_b = std::max(worst_b, residual(char_poly_eval(p, x), -prod));
    }
    record("(b) factored form at probes", worst_b);

    // (c) numeric h_m at reciprocal roots vs exact series coefficients
    std::vector<Complex> reciprocal;
    reciprocal.reserve(r.size());
    for (const auto& ri : r) reciprocal.push_back(1.0 / ri);
    const HSeries series = h_coefficients(p, n - 1);
    double worst_c = 0.0;
    for (int m = 0; m <= n - 1; ++m) {
        const double exact = series.coeffs[static_cast<std::size_t>(m)].get_d();
        worst_c = std::max(worst_c, residual(h_numeric(reciprocal, m), exact));
    }
    record("(c) h-series from roots", worst_c);

    // (d) reciprocal Vandermonde product vs squared form
    Complex squared = 1.0;
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = i + 1; j < r.size(); ++j) squared *= (r[j] - r[i]) * (r[j] - r[i]);
    record("(d) Vandermonde squared", residual(vandermonde_reciprocal_product(r),
                                               squared / parity_sign(p.k + p.ell)));

    // (e) bracket product vs roots-of-unity product
    Complex bracket_product = 1.0;
    for (const auto& ri : r) bracket_product *= (int_pow(ri, p.ell) - 1.0) / (ri * (ri - 1.0));
    const Complex omega_side =
        parity_sign(static_cast<long>(p.k + p.ell) * p.ell) * omega_product(p);
    record("(e) roots-of-unity product", residual(bracket_product, omega_side));

    // (f) the omega product collapses to the gcd indicator
    const double indicator = std::gcd(p.ell, p.k - 1) == 1 ? 1.0 : 0.0;
    record("(f) gcd indicator", residual(omega_product(p), indicator));

    return report;
}

SchurCheck schur_h_check(int m, const std::vector<Complex>& xs, double tol) {
    if (m < 0) throw std::domain_error("schur_h_check requires m >= 0");
    if (xs.empty()) throw std::invalid_argument("schur_h_check requires at least one point");
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (xs[i] == Complex(0.0)) throw std::invalid_argument("schur_h_check: points must be nonzero");
        for (std::size_t j = i + 1; j < xs.size(); ++j)
            if (xs[i] == xs[j])
                throw std::invalid_argument("schur_h_check: points must be pairwise distinct");
    }

    const int n = static_cast<int>(xs.size());
    // lambda = (m, 0, ..., 0): column j (1-based) has exponent lambda_j + n - j
    std::vector<std::vector<Complex>> power(static_cast<std::size_t>(n),
                                            std::vector<Complex>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const long exponent = (j == 0 ? m : 0) + n - 1 - j;
            power[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                int_pow(xs[static_cast<std::size_t>(i)], exponent);
        }

    Complex vandermonde = 1.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            vandermonde *= xs[static_cast<std::size_t>(i)] - xs[static_cast<std::size_t>(j)];

    SchurCheck check;
    check.quotient = complex_determinant(std::move(power)) / vandermonde;
    check.h_value = h_direct_sum(xs, m);
    check.residual = residual(check.quotient, check.h_value);
    check.pass = check.residual < tol;
    return check;
}

Complex product_formula_det(const Params& p, double tol) {
    const RootSet rs = find_roots(p, tol);
    const BinetCoeffs coeffs = binet_coefficients(rs);

    Complex a_product = 1.0;
    for (const auto& a : coeffs.values) a_product *= a;

    Complex root_product = 1.0;
    for (const auto& ri : rs.roots) root_product *= ri;

    std::vector<Complex> reciprocal;
    reciprocal.reserve(rs.roots.size());
    for (const auto& ri : rs.roots) reciprocal.push_back(1.0 / ri);

    return a_product * vandermonde_reciprocal_product(rs.roots) *
           int_pow(root_product, p.k + 2L * p.ell - 3) * h_numeric(reciprocal, p.ell - 1);
}

}  // namespace cassini
