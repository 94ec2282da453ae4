// Acceptance gate: every result the library claims, checked end to end with
// pinned tolerances and runtime budgets. Prints one line per criterion and
// exits nonzero if any fails.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <exception>
#include <random>
#include <string>
#include <vector>

#include "cassini/binet.hpp"
#include "cassini/closed_form.hpp"
#include "cassini/determinant.hpp"
#include "cassini/hseries.hpp"
#include "cassini/identities.hpp"
#include "cassini/matrix.hpp"
#include "cassini/roots.hpp"
#include "cassini/sequences.hpp"
#include "oracles.hpp"

using namespace cassini;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void report(int idx, const std::string& name, bool ok, const std::string& detail = "") {
    std::printf("[%s] %2d. %s%s%s\n", ok ? "PASS" : "FAIL", idx, name.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++failures;
}

template <typename F>
void criterion(int idx, const std::string& name, F body) {
    try {
        body();
    } catch (const std::exception& e) {
        report(idx, name, false, std::string("exception: ") + e.what());
    }
}

std::string elapsed_str(double secs) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.2fs", secs);
    return buf;
}

// matrices collected for the elimination-vs-cofactor cross-check (criterion 11)
std::vector<ExactMatrix> small_matrices;

void collect(const ExactMatrix& m) {
    if (m.dim() <= 5) small_matrices.push_back(m);
}

}  // namespace

int main() {
    // 1. Cassini identity, exact, n = 0..200, under one second.
    criterion(1, "cassini identity n=0..200", [] {
        const auto start = Clock::now();
        const auto f = classic_fibonacci(203);
        bool ok = true;
        for (std::size_t n = 0; n <= 200; ++n) {
            const Term lhs = f[n] * f[n + 2] - f[n + 1] * f[n + 1];
            ok = ok && lhs == (n % 2 == 0 ? 1 : -1);
            if (n <= 30)
                collect(ExactMatrix::from_rows({{f[n], f[n + 1]}, {f[n + 1], f[n + 2]}}));
        }
        const double secs = seconds_since(start);
        report(1, "cassini identity n=0..200", ok && secs < 1.0, elapsed_str(secs));
    });

    // 2. Miles determinant closed form, k = 2..7, n = 0..25, under ten seconds.
    criterion(2, "miles determinant k=2..7 n=0..25", [] {
        const auto start = Clock::now();
        bool ok = true;
        for (int k = 2; k <= 7; ++k)
            for (int n = 0; n <= 25; ++n) {
                const ExactMatrix m = build_miles_matrix(k, n);
                collect(m);
                ok = ok && determinant(m).value == miles_closed(k, n);
            }
        const double secs = seconds_since(start);
        report(2, "miles determinant k=2..7 n=0..25", ok && secs < 10.0, elapsed_str(secs));
    });

    // 3. Closed form vs exact elimination, bit-exact, k, l = 2..12 at j = 0, under a minute.
    criterion(3, "closed form vs exact determinant, k,l=2..12, j=0", [] {
        const auto start = Clock::now();
        bool ok = true;
        for (int k = 2; k <= 12; ++k)
            for (int l = 2; l <= 12; ++l) {
                const Params p(k, l);
                const ExactMatrix m = build_tilde_matrix(p, 0);
                collect(m);
                ok = ok && determinant(m).value == closed_det_tilde(p, 0);
            }
        const double secs = seconds_since(start);
        report(3, "closed form vs exact determinant, k,l=2..12, j=0", ok && secs < 60.0,
               elapsed_str(secs));
    });

    // 4. Shift rule, k, l = 2..8, j = 0..15.
    criterion(4, "shift rule k,l=2..8 j=0..15", [] {
        bool ok = true;
        for (int k = 2; k <= 8; ++k)
            for (int l = 2; l <= 8; ++l) {
                const Params p(k, l);
                const Term base = determinant(build_tilde_matrix(p, 0)).value;
                for (int j = 0; j <= 15; ++j) {
                    const ExactMatrix m = build_tilde_matrix(p, j);
                    collect(m);
                    const Term det = determinant(m).value;
                    const int flip =
                        (static_cast<long>(j) * (k + l - 2)) % 2 == 0 ? 1 : -1;
                    ok = ok && det == flip * base;           // the shift rule itself
                    ok = ok && det == closed_det_tilde(p, j);  // and the closed form
                }
            }
        report(4, "shift rule k,l=2..8 j=0..15", ok);
    });

    // 5. Original matrix is the shifted tilde matrix, k, l = 2..8, j = 0..10.
    criterion(5, "original matrix relation k,l=2..8 j=0..10", [] {
        bool ok = true;
        for (int k = 2; k <= 8; ++k)
            for (int l = 2; l <= 8; ++l) {
                const Params p(k, l);
                for (int j = 0; j <= 10; ++j) {
                    const ExactMatrix orig = build_original_matrix(p, j);
                    const ExactMatrix shifted = build_tilde_matrix(p, j + k + 1);
                    collect(orig);
                    ok = ok && orig == shifted;
                    ok = ok && determinant(orig).value == determinant(shifted).value;
                }
            }
        report(5, "original matrix relation k,l=2..8 j=0..10", ok);
    });

    // 6. h-series coefficients: divisibility pattern for k, l <= 12; numeric
    //    match against the roots within 1e-6 for k, l <= 8.
    criterion(6, "h-series pattern (k,l<=12) and numeric match (k,l<=8)", [] {
        bool ok = true;
        for (int k = 2; k <= 12; ++k)
            for (int l = 2; l <= 12; ++l) {
                const Params p(k, l);
                const auto coeffs = h_coefficients(p, p.dim() - 1).coeffs;
                for (int m = 0; m <= p.dim() - 1; ++m) {
                    const int expected = m % k == 0 ? 1 : ((m - 1) % k == 0 ? -1 : 0);
                    ok = ok && coeffs[static_cast<std::size_t>(m)] == expected;
                }
            }
        for (int k = 2; k <= 8; ++k)
            for (int l = 2; l <= 8; ++l) {
                const Params p(k, l);
                const RootSet rs = find_roots(p, 1e-8);
                std::vector<Complex> recip;
                for (const Complex& r : rs.roots) recip.push_back(1.0 / r);
                const auto coeffs = h_coefficients(p, p.dim() - 1).coeffs;
                for (int m = 0; m <= p.dim() - 1; ++m) {
                    const Complex numeric = h_numeric(recip, m);
                    const double exact = coeffs[static_cast<std::size_t>(m)].get_d();
                    ok = ok && std::abs(numeric - Complex(exact, 0.0)) < 1e-6;
                }
            }
        report(6, "h-series pattern (k,l<=12) and numeric match (k,l<=8)", ok);
    });

    // 7. Derivation identity suite, every residual below 1e-8, k, l = 2..8.
    criterion(7, "derivation identities (a)-(f), k,l=2..8, residual<1e-8", [] {
        bool ok = true;
        double worst = 0.0;
        for (int k = 2; k <= 8; ++k)
            for (int l = 2; l <= 8; ++l) {
                const IdentityReport rep = verify_root_identities(Params(k, l), 1e-8);
                ok = ok && rep.checks.size() == 6 && rep.all_pass();
                for (const IdentityCheck& c : rep.checks) worst = std::max(worst, c.residual);
            }
        char detail[48];
        std::snprintf(detail, sizeof detail, "worst residual %.2e", worst);
        report(7, "derivation identities (a)-(f), k,l=2..8, residual<1e-8", ok, detail);
    });

    // 8. Assembled product formula within 1e-6 of the exact determinant.
    criterion(8, "product formula vs exact determinant, k,l=2..8", [] {
        bool ok = true;
        double worst = 0.0;
        for (int k = 2; k <= 8; ++k)
            for (int l = 2; l <= 8; ++l) {
                const Params p(k, l);
                const Complex numeric = product_formula_det(p, 1e-8);
                const Term exact = determinant(build_tilde_matrix(p, 0)).value;
                const double err = std::abs(numeric - Complex(exact.get_d(), 0.0));
                worst = std::max(worst, err);
                ok = ok && err < 1e-6;
            }
        char detail[48];
        std::snprintf(detail, sizeof detail, "worst error %.2e", worst);
        report(8, "product formula vs exact determinant, k,l=2..8", ok, detail);
    });

    // 9. Periodicity in l: observed minimal period divides k0 * rad(k0-1).
    criterion(9, "period of |det| in l divides k0*rad(k0-1), k0=2..8", [] {
        bool ok = true;
        std::string periods;
        for (int k0 = 2; k0 <= 8; ++k0) {
            const long bound = k0 * radical(k0 - 1);
            const PeriodReport rep = alpha_period_analysis(k0, static_cast<int>(2 + 3 * bound));
            ok = ok && rep.bound == bound && rep.period.has_value() && rep.divides_bound;
            periods += (k0 > 2 ? "," : "") + std::to_string(rep.period ? *rep.period : -1);
        }
        report(9, "period of |det| in l divides k0*rad(k0-1), k0=2..8", ok,
               "periods " + periods);
    });

    // 10. Vanishing in k for l0 >= 3, plus the even-k exception at l0 = 2.
    criterion(10, "|det| vanishes for k>=l0 (l0=3..10); l0=2 stays 1 at even k", [] {
        bool ok = true;
        for (int l0 = 3; l0 <= 10; ++l0) {
            const TailReport rep = beta_tail_analysis(l0, l0 + 10);
            for (int k = 2; k <= l0 + 10; ++k) {
                const int v = rep.values[static_cast<std::size_t>(k - 2)];
                if (k >= l0) ok = ok && v == 0;
            }
            ok = ok && rep.tail_zero_from.has_value() && *rep.tail_zero_from <= l0;
        }
        const TailReport exception = beta_tail_analysis(2, 20);
        bool even_ones = true;
        for (int k = 2; k <= 20; ++k)
            even_ones =
                even_ones && exception.values[static_cast<std::size_t>(k - 2)] == (k % 2 == 0);
        ok = ok && even_ones && !exception.tail_zero_from.has_value();
        report(10, "|det| vanishes for k>=l0 (l0=3..10); l0=2 stays 1 at even k", ok,
               even_ones ? "l0=2 keeps |det|=1 at every even k<=20" : "");
    });

    // 11. Elimination vs cofactor expansion: every dim<=5 matrix seen above,
    //     plus 100 random integer matrices with entries in [-9, 9].
    criterion(11, "elimination equals cofactor expansion", [] {
        bool ok = true;
        for (const ExactMatrix& m : small_matrices)
            ok = ok && determinant(m).value == oracle::cofactor_det(m);

        std::mt19937 rng(424242);
        std::uniform_int_distribution<int> entry(-9, 9);
        for (int trial = 0; trial < 100; ++trial) {
            const int dim = 2 + trial % 4;
            std::vector<Term> entries;
            for (int i = 0; i < dim * dim; ++i) entries.emplace_back(entry(rng));
            const ExactMatrix m(dim, std::move(entries));
            ok = ok && determinant(m).value == oracle::cofactor_det(m);
        }
        char detail[64];
        std::snprintf(detail, sizeof detail, "%zu collected + 100 random matrices",
                      small_matrices.size());
        report(11, "elimination equals cofactor expansion", ok, detail);
    });

    if (failures == 0) {
        std::printf("all 11 acceptance criteria pass\n");
        return 0;
    }
    std::printf("%d acceptance criteria FAILED\n", failures);
    return 1;
}
