#include "cassini/binet.hpp"

namespace cassini {

namespace {

Complex int_pow(Complex base, long e) {
    Complex acc = 1.0;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

}  // namespace

BinetCoeffs binet_coefficients(const RootSet& rs) {
    const Params& p = rs.params;
    const int n = p.dim();
    const auto& r = rs.roots;

    // tilde initial values: index 0 and indices k..k+ell-2 are 1, the rest 0
    const auto initial = [&](int idx) -> double { return idx == 0 || idx >= p.k ? 1.0 : 0.0; };

    BinetCoeffs coeffs{p, {}};
    coeffs.values.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const Complex ri = r[static_cast<std::size_t>(i)];

        Complex denom = 1.0;
        for (int j = 0; j < n; ++j) {
            if (j > i) denom *= r[static_cast<std::size_t>(j)] - ri;
            if (j < i) denom *= ri - r[static_cast<std::size_t>(j)];
        }
        // (-1)^{k+ell+i-1} with 1-based root index i
        const double sign = (p.k + p.ell + i) % 2 == 0 ? 1.0 : -1.0;

        Complex bracket = 0.0;
        for (int l = 0; l <= p.k - 2; ++l)
            bracket += initial(l) * (int_pow(ri, l + 1) - 1.0) / (int_pow(ri, l + 1) * (ri - 1.0));
        for (int l = p.k - 1; l <= p.k + p.ell - 3; ++l)
            bracket += initial(l) * (int_pow(ri, p.k) - 1.0) / (int_pow(ri, l + 1) * (ri - 1.0));
        bracket += initial(p.k + p.ell - 2);

        coeffs.values.push_back(sign / denom * bracket);
    }
    return coeffs;
}

Complex binet_eval(const RootSet& rs, const BinetCoeffs& coeffs, long n) {
    Complex sum = 0.0;
    for (std::size_t i = 0; i < rs.roots.size(); ++i)
        sum += coeffs.values[i] * int_pow(rs.roots[i], n);
    return sum;
}

}  // namespace cassini
