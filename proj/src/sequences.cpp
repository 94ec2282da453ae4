#include "cassini/sequences.hpp"

namespace cassini {

std::vector<Term> tilde_sequence(const Params& p, std::size_t count) {
    const std::size_t k = static_cast<std::size_t>(p.k);
    const std::size_t order = static_cast<std::size_t>(p.dim());
    std::vector<Term> seq;
    seq.reserve(count);
    for (std::size_t n = 0; n < count; ++n) {
        if (n == 0) {
            seq.emplace_back(1);
        } else if (n < k) {
            seq.emplace_back(0);
        } else if (n < order) {
            seq.emplace_back(1);
        } else {
            Term s = 0;
            for (std::size_t t = static_cast<std::size_t>(p.ell); t <= order; ++t) s += seq[n - t];
            seq.push_back(std::move(s));
        }
    }
    return seq;
}

std::vector<Term> original_sequence(const Params& p, std::size_t count) {
    const std::size_t ell = static_cast<std::size_t>(p.ell);
    const std::size_t order = static_cast<std::size_t>(p.dim());
    std::vector<Term> seq;
    seq.reserve(count);
    for (std::size_t n = 0; n < count; ++n) {
        if (n < ell) {
            seq.emplace_back(1);
        } else if (n < order) {
            // bridge rule between the all-ones prefix and the main recurrence
            seq.push_back(seq[n - 1] + seq[n - ell]);
        } else {
            Term s = 0;
            for (std::size_t t = ell; t <= order; ++t) s += seq[n - t];
            seq.push_back(std::move(s));
        }
    }
    return seq;
}

std::vector<Term> miles_sequence(int k, std::size_t count) {
    if (k < 2) throw std::domain_error("miles_sequence requires k >= 2");
    const std::size_t ku = static_cast<std::size_t>(k);
    std::vector<Term> seq;
    seq.reserve(count);
    for (std::size_t n = 0; n < count; ++n) {
        if (n < ku - 1) {
            seq.emplace_back(0);
        } else if (n == ku - 1) {
            seq.emplace_back(1);
        } else {
            Term s = 0;
            for (std::size_t i = 1; i <= ku; ++i) s += seq[n - i];
            seq.push_back(std::move(s));
        }
    }
    return seq;
}

std::vector<Term> classic_fibonacci(std::size_t count) {
    std::vector<Term> seq;
    seq.reserve(count);
    for (std::size_t n = 0; n < count; ++n) {
        if (n < 2)
            seq.emplace_back(1);
        else
            seq.push_back(seq[n - 1] + seq[n - 2]);
    }
    return seq;
}

std::vector<Term> generate(const SequenceKind& kind, std::size_t count) {
    switch (kind.family) {
        case SequenceFamily::tilde_dying_rabbit:
            return tilde_sequence(kind.params.value(), count);
        case SequenceFamily::original_dying_rabbit:
            return original_sequence(kind.params.value(), count);
        case SequenceFamily::miles:
            return miles_sequence(kind.miles_k, count);
        case SequenceFamily::classic_fibonacci:
            return classic_fibonacci(count);
    }
    throw std::logic_error("unreachable sequence family");
}

}  // namespace cassini
