#include "doctest.h"

#include <cmath>
#include <complex>
#include <vector>

#include "cassini/binet.hpp"
#include "cassini/determinant.hpp"
#include "cassini/identities.hpp"
#include "cassini/matrix.hpp"
#include "cassini/sequences.hpp"

using namespace cassini;

TEST_CASE("root expansion reproduces the integer sequence") {
    for (const Params p : {Params(2, 2), Params(3, 2), Params(2, 3), Params(4, 5)}) {
        const RootSet rs = find_roots(p, 1e-8);
        const BinetCoeffs coeffs = binet_coefficients(rs);
        REQUIRE(coeffs.values.size() == rs.roots.size());
        const auto seq = tilde_sequence(p, 26);
        for (long n = 0; n < 26; ++n) {
            const Complex approx = binet_eval(rs, coeffs, n);
            const double target = seq[static_cast<std::size_t>(n)].get_d();
            CHECK(std::abs(approx - Complex(target, 0.0)) <
                  1e-9 * std::max(1.0, std::abs(target)));
        }
    }
}

TEST_CASE("scale-aware residual") {
    CHECK(residual({0.0, 0.0}, {0.0, 0.0}) == 0.0);
    CHECK(residual({3.0, 0.0}, {4.0, 0.0}) == doctest::Approx(0.25));
    CHECK(residual({1e8, 0.0}, {1e8 + 1.0, 0.0}) == doctest::Approx(1.0 / (1e8 + 1.0)));
    CHECK(residual({0.5, 0.0}, {0.25, 0.0}) == doctest::Approx(0.25));  // floor at scale 1
}

TEST_CASE("two routes to the complete homogeneous sums agree") {
    const std::vector<Complex> xs{{0.3, 0.7}, {-1.2, 0.4}, {2.0, -0.5}, {0.9, 0.0}};
    for (int m = 0; m <= 6; ++m)
        CHECK(std::abs(h_numeric(xs, m) - h_direct_sum(xs, m)) <
              1e-10 * std::max(1.0, std::abs(h_direct_sum(xs, m))));

    CHECK(h_numeric({}, 0) == Complex(1.0, 0.0));
    CHECK(h_direct_sum({}, 0) == Complex(1.0, 0.0));
    CHECK(h_direct_sum({}, 3) == Complex(0.0, 0.0));
    CHECK_THROWS_AS(h_numeric(xs, -1), std::domain_error);
    CHECK_THROWS_AS(h_direct_sum(xs, 400), std::invalid_argument);  // enumeration too large
}

TEST_CASE("complex determinant") {
    CHECK(std::abs(complex_determinant({{{2.0, 0.0}, {0.0, 0.0}}, {{0.0, 0.0}, {3.0, 0.0}}}) -
                   Complex(6.0, 0.0)) < 1e-12);
    CHECK(std::abs(complex_determinant({{{1.0, 0.0}, {2.0, 0.0}}, {{2.0, 0.0}, {4.0, 0.0}}})) <
          1e-12);
    // det [[0,1],[1,0]] = -1 exercises pivoting
    CHECK(std::abs(complex_determinant({{{0.0, 0.0}, {1.0, 0.0}}, {{1.0, 0.0}, {0.0, 0.0}}}) -
                   Complex(-1.0, 0.0)) < 1e-12);
    CHECK_THROWS_AS(complex_determinant({{{1.0, 0.0}, {2.0, 0.0}}}), std::invalid_argument);
}

TEST_CASE("schur quotient equals the direct monomial sum") {
    const SchurCheck fixed = schur_h_check(2, {{2.0, 0.0}, {3.0, 0.0}, {5.0, 0.0}});
    CHECK(std::abs(fixed.h_value - Complex(69.0, 0.0)) < 1e-9);
    CHECK(std::abs(fixed.quotient - Complex(69.0, 0.0)) < 1e-7);
    CHECK(fixed.residual < 1e-8);
    CHECK(fixed.pass);

    const std::vector<Complex> xs{{0.4, 0.3}, {-0.8, 0.1}, {1.1, -0.6}, {0.2, 0.9}};
    for (int m = 0; m <= 5; ++m) {
        const SchurCheck c = schur_h_check(m, xs);
        CHECK(c.pass);
        CHECK(c.residual < 1e-10);
    }

    CHECK_THROWS_AS(schur_h_check(2, {{1.0, 0.0}, {1.0, 0.0}}), std::invalid_argument);
    CHECK_THROWS_AS(schur_h_check(2, {{1.0, 0.0}, {0.0, 0.0}}), std::invalid_argument);
    CHECK_THROWS_AS(schur_h_check(2, {}), std::invalid_argument);
}

TEST_CASE("derivation identities hold across parameter shapes") {
    // includes the gcd > 1 shape (3, 2) where the omega product vanishes and
    // the large-discriminant shape (4, 5)
    for (const Params p : {Params(2, 2), Params(2, 3), Params(3, 2), Params(4, 5), Params(3, 4)}) {
        const IdentityReport rep = verify_root_identities(p, 1e-8);
        REQUIRE(rep.checks.size() == 6);
        CHECK(rep.checks[0].name == "(a) product of roots");
        CHECK(rep.checks[5].name == "(f) gcd indicator");
        for (const IdentityCheck& c : rep.checks) {
            INFO(p.k, " ", p.ell, " ", c.name, " residual ", c.residual);
            CHECK(c.pass);
        }
        CHECK(rep.all_pass());
    }
    CHECK_THROWS_AS(verify_root_identities(Params(2, 2), 0.0), std::domain_error);
}

TEST_CASE("assembled product formula lands on the exact determinant") {
    for (const Params p : {Params(2, 2), Params(2, 3), Params(3, 2), Params(4, 4)}) {
        const Complex numeric = product_formula_det(p, 1e-8);
        const Term exact = determinant(build_tilde_matrix(p, 0)).value;
        CHECK(std::abs(numeric - Complex(exact.get_d(), 0.0)) < 1e-9);
    }
}
