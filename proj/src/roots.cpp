#include "cassini/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace cassini {

Complex char_poly_eval(const Params& p, Complex x) {
    // geometric sum written out, so x = 1 is a regular point
    Complex power = 1.0;
    Complex geo = 0.0;
    for (int i = 0; i < p.k; ++i) {
        geo += power;
        power *= x;
    }
    for (int i = p.k; i < p.dim(); ++i) power *= x;
    return power - geo;
}

Complex char_poly_deriv(const Params& p, Complex x) {
    const int n = p.dim();
    Complex power = 1.0;  // x^0
    Complex sum = 0.0;
    for (int i = 1; i < p.k; ++i) {
        sum += static_cast<double>(i) * power;
        power *= x;
    }
    // power is x^{k-1} here; raise it to x^{n-1}
    for (int i = p.k - 1; i < n - 1; ++i) power *= x;
    return static_cast<double>(n) * power - sum;
}

namespace {

double max_residual(const Params& p, const std::vector<Complex>& roots) {
    double worst = 0.0;
    for (const auto& r : roots) worst = std::max(worst, std::abs(char_poly_eval(p, r)));
    return worst;
}

double min_separation(const std::vector<Complex>& roots) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < roots.size(); ++i)
        for (std::size_t j = i + 1; j < roots.size(); ++j)
            best = std::min(best, std::abs(roots[i] - roots[j]));
    return best;
}

}  // namespace

RootSet find_roots(const Params& p, double tol) {
    if (tol <= 0.0) throw std::domain_error("find_roots requires tol > 0");
    const int n = p.dim();
    constexpr int max_iterations = 500;
    constexpr double step_tol = 1e-13;

    // Non-leading coefficients of g are 0 or -1, so the classic root bound
    // 1 + max|coeff| puts every root inside radius 2. The fixed phase
    // offset keeps guesses off the real axis.
    const double radius = 2.0;
    constexpr double phase = 0.3;
    std::vector<Complex> z(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double angle = 2.0 * std::numbers::pi * i / n + phase;
        z[static_cast<std::size_t>(i)] = std::polar(radius, angle);
    }

    // Aberth-Ehrlich simultaneous iteration, in-place updates
    bool converged = false;
    for (int iter = 0; iter < max_iterations && !converged; ++iter) {
        double max_step = 0.0;
        for (int i = 0; i < n; ++i) {
            const Complex zi = z[static_cast<std::size_t>(i)];
            const Complex w = char_poly_eval(p, zi) / char_poly_deriv(p, zi);
            Complex repulsion = 0.0;
            for (int j = 0; j < n; ++j)
                if (j != i) repulsion += 1.0 / (zi - z[static_cast<std::size_t>(j)]);
            const Complex denom = 1.0 - w * repulsion;
            const Complex step = std::abs(denom) > 1e-300 ? w / denom : w;
            z[static_cast<std::size_t>(i)] = zi - step;
            max_step = std::max(max_step, std::abs(step));
        }
        converged = max_step < step_tol;
    }

    const double residual_bound = max_residual(p, z);
    if (!converged) {
        std::ostringstream msg;
        msg << "root iteration did not converge for k=" << p.k << " ell=" << p.ell
            << " after " << max_iterations << " iterations; best residual " << residual_bound;
        throw numeric_failure(msg.str(), residual_bound);
    }
    if (residual_bound > tol) {
        std::ostringstream msg;
        msg << "root residual " << residual_bound << " exceeds tol " << tol << " for k=" << p.k
            << " ell=" << p.ell;
        throw numeric_failure(msg.str(), residual_bound);
    }

    std::sort(z.begin(), z.end(), [](const Complex& a, const Complex& b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });

    const double separation = min_separation(z);
    if (separation < 1e-12)
        throw numeric_failure("computed roots are not numerically distinct", residual_bound);
    for (const auto& r : z)
        if (std::abs(r - Complex(1.0)) < 1e-12)
            throw numeric_failure("a computed root coincides with 1", residual_bound);

    return RootSet{p, std::move(z), residual_bound, separation};
}

}  // namespace cassini
