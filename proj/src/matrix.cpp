#include "cassini/matrix.hpp"

#include <string>
#include <utility>

#include "cassini/sequences.hpp"

namespace cassini {

ExactMatrix::ExactMatrix(int dim, std::vector<Term> entries, std::optional<Provenance> provenance)
    : dim_(dim), entries_(std::move(entries)), provenance_(std::move(provenance)) {
    if (dim_ < 2)
        throw std::invalid_argument("ExactMatrix requires dim >= 2 (got " + std::to_string(dim_) + ")");
    if (entries_.size() != static_cast<std::size_t>(dim_) * static_cast<std::size_t>(dim_))
        throw std::invalid_argument("ExactMatrix entry count " + std::to_string(entries_.size()) +
                                    " does not fill a " + std::to_string(dim_) + "x" +
                                    std::to_string(dim_) + " matrix");
}

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<Term>>& rows) {
    const std::size_t n = rows.size();
    std::vector<Term> flat;
    flat.reserve(n * n);
    for (const auto& row : rows) {
        if (row.size() != n)
            throw std::invalid_argument("matrix is not square: " + std::to_string(n) +
                                        " rows but a row of length " + std::to_string(row.size()));
        for (const auto& v : row) flat.push_back(v);
    }
    return ExactMatrix(static_cast<int>(n), std::move(flat));
}

ExactMatrix ExactMatrix::transposed() const {
    std::vector<Term> flat(entries_.size());
    for (int i = 0; i < dim_; ++i)
        for (int c = 0; c < dim_; ++c)
            flat[static_cast<std::size_t>(c) * dim_ + i] = at(i, c);
    return ExactMatrix(dim_, std::move(flat));
}

namespace {

// Applies the shared dying-rabbit index rule: column 0 reads seq[j+i],
// column c >= 1 reads seq[j+i+ell+c-1].
ExactMatrix build_from_sequence(const Params& p, int j, const std::vector<Term>& seq,
                                Provenance provenance) {
    const int dim = p.dim();
    std::vector<Term> flat;
    flat.reserve(static_cast<std::size_t>(dim) * dim);
    for (int i = 0; i < dim; ++i)
        for (int c = 0; c < dim; ++c)
            flat.push_back(c == 0 ? seq[j + i] : seq[j + i + p.ell + c - 1]);
    return ExactMatrix(dim, std::move(flat), std::move(provenance));
}

}  // namespace

ExactMatrix build_tilde_matrix(const Params& p, int j) {
    if (j < 0) throw std::domain_error("matrix shift j must be nonnegative");
    // largest index touched is the bottom-right entry j + 2k + 3l - 5
    const std::size_t need = static_cast<std::size_t>(j + 2 * p.k + 3 * p.ell - 4);
    return build_from_sequence(p, j, tilde_sequence(p, need), Provenance{SequenceKind::tilde(p), j});
}

ExactMatrix build_original_matrix(const Params& p, int j) {
    if (j < 0) throw std::domain_error("matrix shift j must be nonnegative");
    const std::size_t need = static_cast<std::size_t>(j + 2 * p.k + 3 * p.ell - 4);
    return build_from_sequence(p, j, original_sequence(p, need),
                               Provenance{SequenceKind::original(p), j});
}

ExactMatrix build_miles_matrix(int k, int n) {
    if (k < 2) throw std::domain_error("build_miles_matrix requires k >= 2");
    if (n < 0) throw std::domain_error("matrix shift n must be nonnegative");
    const auto seq = miles_sequence(k, static_cast<std::size_t>(n + 2 * k - 1));
    std::vector<Term> flat;
    flat.reserve(static_cast<std::size_t>(k) * k);
    for (int i = 0; i < k; ++i)
        for (int c = 0; c < k; ++c) flat.push_back(seq[n + i + c]);
    return ExactMatrix(k, std::move(flat), Provenance{SequenceKind::miles(k), n});
}

}  // namespace cassini
