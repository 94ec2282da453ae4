#pragma once

// Closed-form determinant values: case classification with its sign, the
// j-shift rule, the original-matrix reduction, the Miles formula, and the
// periodicity / vanishing analyses.

#include <optional>
#include <string>
#include <vector>

#include "cassini/types.hpp"

namespace cassini {

enum class Case { a, b, zero };

// Classification of det(tilde matrix, j=0):
//   Case::a    ell-1 = alpha*k and gcd(ell, k-1) = 1; sign (-1)^{(k+ell)(k+ell-1)/2 + 1}
//   Case::b    ell-2 = beta*k  and gcd(ell, k-1) = 1; sign (-1)^{(k+ell)(k+ell-1)/2}
//   Case::zero otherwise (determinant vanishes)
// Zero counts as a multiple of k, so ell = 2 always satisfies the Case::b
// divisibility condition with beta = 0. The two cases are mutually
// exclusive for k >= 2.
struct CaseLabel {
    Case tag = Case::zero;
    int multiple = 0;        // alpha for Case::a, beta for Case::b
    long sign_exponent = 0;  // meaningful for Case::a / Case::b only

    // +1 or -1 for cases a/b, 0 for the zero case.
    int sign() const {
        if (tag == Case::zero) return 0;
        return sign_exponent % 2 == 0 ? 1 : -1;
    }

    // "A(1)", "B(0)", "zero"; stable tokens used by CSV/JSON output.
    std::string to_string() const;
};

CaseLabel classify(const Params& p);

// det of the tilde matrix at shift j: (-1)^{j(k+ell-2)} times the j=0 value.
// Always in {-1, 0, +1}.
int closed_det_tilde(const Params& p, int j);

// det of the original matrix at shift j; equals closed_det_tilde(p, j+k+1).
int closed_det_original(const Params& p, int j);

// Closed form for the Miles k x k determinant: (-1)^{(2n+k)(k-1)/2}.
int miles_closed(int k, long n);

// Product of the distinct primes dividing n; radical(1) = 1. Requires n >= 1.
long radical(long n);

// Fix k0 and scan ell: values of |closed_det_tilde| are periodic in ell with
// period dividing k0 * radical(k0-1).
struct PeriodReport {
    int k0;
    std::vector<int> observed_values;  // index ell-2, entries in {0,1}
    std::optional<int> period;         // minimal p <= bound, if the window is p-periodic
    long bound;                        // k0 * radical(k0-1)
    bool divides_bound;
};

// Scans ell = 2..l_max. Requires l_max >= 2 + 3*bound (three full candidate
// periods); otherwise throws analysis_error naming the needed l_max.
PeriodReport alpha_period_analysis(int k0, int l_max);

// Fix ell0 and scan k: values of |closed_det_tilde| are eventually zero for
// ell0 >= 3 (for ell0 = 2 the even-k values stay 1 forever).
struct TailReport {
    int l0;
    std::vector<int> values;               // index k-2, entries in {0,1}
    std::optional<int> tail_zero_from;     // least K with all-zero values for k >= K
};

// Scans k = 2..k_max. Requires k_max >= l0 + 5; otherwise throws
// analysis_error.
TailReport beta_tail_analysis(int l0, int k_max);

}  // namespace cassini
