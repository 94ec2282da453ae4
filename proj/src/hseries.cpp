#include "cassini/hseries.hpp"

#include <utility>

namespace cassini {

HSeries h_coefficients(const Params& p, int m_max) {
    if (m_max < 0) throw std::domain_error("h_coefficients requires m_max >= 0");
    HSeries series{p, {}};
    auto& h = series.coeffs;
    h.reserve(static_cast<std::size_t>(m_max) + 1);
    for (int m = 0; m <= m_max; ++m) {
        Term v = m == 0 ? 1 : (m == 1 ? -1 : 0);  // numerator 1 - x
        if (m - p.k >= 0) v += h[m - p.k];
        if (m - p.k - p.ell + 1 >= 0) v += h[m - p.k - p.ell + 1];
        if (m - p.k - p.ell >= 0) v -= h[m - p.k - p.ell];
        h.push_back(std::move(v));
    }
    return series;
}

int h_ell_minus_1(const Params& p) {
    if ((p.ell - 1) % p.k == 0) return 1;
    if ((p.ell - 2) % p.k == 0) return -1;  // zero counts as a multiple
    return 0;
}

}  // namespace cassini
