#include "cassini/determinant.hpp"

#include <utility>

namespace cassini {

DetResult determinant(const ExactMatrix& m) {
    const int n = m.dim();
    std::vector<Term> a(m.entries());
    const auto at = [&](int i, int c) -> Term& {
        return a[static_cast<std::size_t>(i) * n + c];
    };

    DetResult result;
    result.pivot_trace.reserve(static_cast<std::size_t>(n));
    int sign = 1;
    Term prev_pivot(1);

    for (int step = 0; step < n; ++step) {
        // first nonzero entry scanning down the column
        int pivot_row = -1;
        for (int i = step; i < n; ++i) {
            if (sgn(at(i, step)) != 0) {
                pivot_row = i;
                break;
            }
        }
        if (pivot_row < 0) {
            // fully zero pivot column: singular
            result.value = 0;
            return result;
        }
        if (pivot_row != step) {
            for (int c = step; c < n; ++c) std::swap(at(step, c), at(pivot_row, c));
            sign = -sign;
        }
        result.pivot_trace.emplace_back(step, pivot_row);

        const Term& pivot = at(step, step);
        for (int i = step + 1; i < n; ++i) {
            for (int c = step + 1; c < n; ++c) {
                Term num = at(i, c) * pivot - at(i, step) * at(step, c);
                // the one-step condensation quotient is exactly divisible
                // by the previous pivot
                mpz_divexact(at(i, c).get_mpz_t(), num.get_mpz_t(), prev_pivot.get_mpz_t());
            }
            at(i, step) = 0;
        }
        prev_pivot = pivot;
    }

    result.value = sign > 0 ? at(n - 1, n - 1) : Term(-at(n - 1, n - 1));
    return result;
}

}  // namespace cassini
