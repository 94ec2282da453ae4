#include "cassini/closed_form.hpp"

#include <cassert>
#include <numeric>

namespace cassini {

std::string CaseLabel::to_string() const {
    switch (tag) {
        case Case::a:
            return "A(" + std::to_string(multiple) + ")";
        case Case::b:
            return "B(" + std::to_string(multiple) + ")";
        case Case::zero:
            return "zero";
    }
    return "?";
}

CaseLabel classify(const Params& p) {
    const long s = p.k + p.ell;
    assert(s * (s - 1) % 2 == 0);
    const long half = s * (s - 1) / 2;
    const bool coprime = std::gcd(p.ell, p.k - 1) == 1;
    if ((p.ell - 1) % p.k == 0 && coprime) return {Case::a, (p.ell - 1) / p.k, half + 1};
    // zero counts as a multiple, so ell = 2 lands here with beta = 0
    if ((p.ell - 2) % p.k == 0 && coprime) return {Case::b, (p.ell - 2) / p.k, half};
    return {Case::zero, 0, 0};
}

int closed_det_tilde(const Params& p, int j) {
    if (j < 0) throw std::domain_error("shift j must be nonnegative");
    const CaseLabel label = classify(p);
    if (label.tag == Case::zero) return 0;
    const long e = label.sign_exponent + static_cast<long>(j) * (p.k + p.ell - 2);
    return e % 2 == 0 ? 1 : -1;
}

int closed_det_original(const Params& p, int j) {
    if (j < 0) throw std::domain_error("shift j must be nonnegative");
    return closed_det_tilde(p, j + p.k + 1);
}

int miles_closed(int k, long n) {
    if (k < 2) throw std::domain_error("miles_closed requires k >= 2");
    if (n < 0) throw std::domain_error("miles_closed requires n >= 0");
    const long long e = (2 * static_cast<long long>(n) + k) * (k - 1);
    assert(e % 2 == 0);
    return (e / 2) % 2 == 0 ? 1 : -1;
}

long radical(long n) {
    if (n <= 0) throw std::domain_error("radical requires n >= 1");
    long rad = 1;
    long rest = n;
    for (long p = 2; p * p <= rest; ++p) {
        if (rest % p == 0) {
            rad *= p;
            while (rest % p == 0) rest /= p;
        }
    }
    if (rest > 1) rad *= rest;
    return rad;
}

PeriodReport alpha_period_analysis(int k0, int l_max) {
    if (k0 < 2) throw std::domain_error("alpha_period_analysis requires k0 >= 2");
    const long bound = k0 * radical(k0 - 1);
    const long needed = 2 + 3 * bound;
    if (l_max < needed)
        throw analysis_error("scan window too small: need l_max >= " + std::to_string(needed) +
                             " (three candidate periods) for k0 = " + std::to_string(k0));

    PeriodReport report{k0, {}, std::nullopt, bound, false};
    report.observed_values.reserve(static_cast<std::size_t>(l_max - 1));
    for (int l = 2; l <= l_max; ++l)
        report.observed_values.push_back(closed_det_tilde(Params(k0, l), 0) == 0 ? 0 : 1);

    const auto& v = report.observed_values;
    for (long p = 1; p <= bound; ++p) {
        bool periodic = true;
        for (std::size_t i = 0; i + p < v.size(); ++i) {
            if (v[i] != v[i + p]) {
                periodic = false;
                break;
            }
        }
        if (periodic) {
            report.period = static_cast<int>(p);
            break;
        }
    }
    report.divides_bound = report.period.has_value() && bound % *report.period == 0;
    return report;
}

TailReport beta_tail_analysis(int l0, int k_max) {
    if (l0 < 2) throw std::domain_error("beta_tail_analysis requires l0 >= 2");
    if (k_max < l0 + 5)
        throw analysis_error("scan window too small: need k_max >= " + std::to_string(l0 + 5) +
                             " for l0 = " + std::to_string(l0));

    TailReport report{l0, {}, std::nullopt};
    report.values.reserve(static_cast<std::size_t>(k_max - 1));
    int last_nonzero_k = 1;  // below the scan range
    for (int k = 2; k <= k_max; ++k) {
        const int v = closed_det_tilde(Params(k, l0), 0) == 0 ? 0 : 1;
        report.values.push_back(v);
        if (v != 0) last_nonzero_k = k;
    }
    if (last_nonzero_k < k_max) report.tail_zero_from = last_nonzero_k + 1;
    return report;
}

}  // namespace cassini
