#pragma once

// The three matrix families whose determinants the library evaluates:
// the tilde and original dying-rabbit matrices and the Miles k x k matrix.
// Matrices are square, exact, and remember where their entries came from.

#include <optional>
#include <vector>

#include "cassini/types.hpp"

namespace cassini {

// Which sequence and which shift j (Miles: which n) a matrix was built from.
struct Provenance {
    SequenceKind kind;
    int j;
};

class ExactMatrix {
public:
    // Row-major entries; throws std::invalid_argument unless entries has
    // exactly dim*dim elements and dim >= 2.
    ExactMatrix(int dim, std::vector<Term> entries,
                std::optional<Provenance> provenance = std::nullopt);

    // Builds from nested rows; ragged or non-square input is a structural
    // error (std::invalid_argument).
    static ExactMatrix from_rows(const std::vector<std::vector<Term>>& rows);

    int dim() const { return dim_; }
    const Term& at(int row, int col) const { return entries_[static_cast<std::size_t>(row) * dim_ + col]; }
    Term& at(int row, int col) { return entries_[static_cast<std::size_t>(row) * dim_ + col]; }
    const std::vector<Term>& entries() const { return entries_; }
    const std::optional<Provenance>& provenance() const { return provenance_; }

    ExactMatrix transposed() const;

    // Entrywise comparison; provenance is ignored.
    bool operator==(const ExactMatrix& other) const {
        return dim_ == other.dim_ && entries_ == other.entries_;
    }

private:
    int dim_;
    std::vector<Term> entries_;
    std::optional<Provenance> provenance_;
};

// Tilde matrix of shift j: with dim = k+ell-1 and T the tilde sequence,
//   entry(i, 0) = T[j+i],
//   entry(i, c) = T[j+i+ell+c-1]   for c >= 1.
// Note the first column sits ell indices before the Hankel block formed by
// the remaining columns; that gap is part of the construction and is not
// regularized away.
ExactMatrix build_tilde_matrix(const Params& p, int j);

// Same index rule applied to the original sequence. Equals
// build_tilde_matrix(p, j+k+1) entrywise.
ExactMatrix build_original_matrix(const Params& p, int j);

// k x k matrix with entry(i, c) = f[n+i+c] over the Miles sequence.
ExactMatrix build_miles_matrix(int k, int n);

}  // namespace cassini
