#pragma once

// Core domain types shared across the library: exact integer terms,
// recurrence parameters, sequence tags, and the error hierarchy.

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace cassini {

// Exact arbitrary-precision signed integer. Sequence terms, matrix
// entries and determinants all live here; nothing in the exact path
// ever touches floating point.
using Term = mpz_class;

// Root iteration failed to converge (or converged to an unacceptable
// residual). Carries the best residual reached so callers can report it.
class numeric_failure : public std::runtime_error {
public:
    numeric_failure(const std::string& what, double best_residual)
        : std::runtime_error(what), best_residual_(best_residual) {}

    double best_residual() const { return best_residual_; }

private:
    double best_residual_;
};

// A scan window was too small for the requested analysis. The message
// says how to enlarge it.
class analysis_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parameters of the dying-rabbit recurrence family: rabbits mature after
// ell months and die k months later. Requires k, ell >= 2, which makes
// the recurrence order dim() = k + ell - 1 >= 3.
struct Params {
    int k;
    int ell;

    Params(int k_, int ell_) : k(k_), ell(ell_) {
        if (k < 2 || ell < 2)
            throw std::domain_error("Params requires k >= 2 and ell >= 2 (got k=" +
                                    std::to_string(k) + ", ell=" + std::to_string(ell) + ")");
    }

    // Matrix dimension and recurrence order.
    int dim() const { return k + ell - 1; }

    bool operator==(const Params& o) const { return k == o.k && ell == o.ell; }
};

enum class SequenceFamily {
    tilde_dying_rabbit,
    original_dying_rabbit,
    miles,
    classic_fibonacci,
};

// Tag identifying which sequence a matrix or generator call refers to.
// Dying-rabbit kinds carry their Params; the Miles kind carries its order.
struct SequenceKind {
    SequenceFamily family;
    std::optional<Params> params;  // set for the dying-rabbit families
    int miles_k = 0;               // set for the Miles family

    static SequenceKind tilde(const Params& p) {
        return {SequenceFamily::tilde_dying_rabbit, p, 0};
    }
    static SequenceKind original(const Params& p) {
        return {SequenceFamily::original_dying_rabbit, p, 0};
    }
    static SequenceKind miles(int k) {
        if (k < 2) throw std::domain_error("Miles sequence requires k >= 2");
        return {SequenceFamily::miles, std::nullopt, k};
    }
    static SequenceKind fibonacci() {
        return {SequenceFamily::classic_fibonacci, std::nullopt, 0};
    }
};

}  // namespace cassini
