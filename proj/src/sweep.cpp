#include "cassini/sweep.hpp"

#include <exception>
#include <stdexcept>
#include <utility>

#include "cassini/determinant.hpp"
#include "cassini/matrix.hpp"

namespace cassini {

std::vector<SweepCell> make_cells(const SweepRange& range) {
    if (range.k_min < 2 || range.l_min < 2 || range.j_min < 0)
        throw std::domain_error("sweep range requires k,l >= 2 and j >= 0");
    if (range.k_max < range.k_min || range.l_max < range.l_min || range.j_max < range.j_min)
        throw std::domain_error("sweep range is empty");

    std::vector<SweepCell> cells;
    cells.reserve(static_cast<std::size_t>(range.k_max - range.k_min + 1) *
                  static_cast<std::size_t>(range.l_max - range.l_min + 1) *
                  static_cast<std::size_t>(range.j_max - range.j_min + 1));
    for (int k = range.k_min; k <= range.k_max; ++k)
        for (int l = range.l_min; l <= range.l_max; ++l)
            for (int j = range.j_min; j <= range.j_max; ++j) cells.push_back({k, l, j});
    return cells;
}

SweepRow compute_row(const SweepCell& cell, Init init) {
    const Params p(cell.k, cell.l);

    SweepRow row;
    row.k = cell.k;
    row.l = cell.l;
    row.j = cell.j;
    row.case_label = classify(p);

    if (init == Init::tilde) {
        row.brute_det = determinant(build_tilde_matrix(p, cell.j)).value;
        row.closed_det = closed_det_tilde(p, cell.j);
    } else {
        row.brute_det = determinant(build_original_matrix(p, cell.j)).value;
        row.closed_det = closed_det_original(p, cell.j);
    }
    row.match = row.brute_det == row.closed_det;
    return row;
}

std::vector<SweepRow> sweep_serial(const std::vector<SweepCell>& cells, Init init, bool fail_fast) {
    std::vector<SweepRow> rows;
    rows.reserve(cells.size());
    for (const SweepCell& cell : cells) {
        rows.push_back(compute_row(cell, init));
        if (fail_fast && !rows.back().match) break;
    }
    return rows;
}

std::vector<SweepRow> sweep_parallel(const std::vector<SweepCell>& cells, Init init) {
    std::vector<SweepRow> rows(cells.size());
    std::exception_ptr failure;

#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(cells.size()); ++i) {
        try {
            rows[static_cast<std::size_t>(i)] = compute_row(cells[static_cast<std::size_t>(i)], init);
        } catch (...) {
#pragma omp critical
            if (!failure) failure = std::current_exception();
        }
    }

    if (failure) std::rethrow_exception(failure);
    return rows;
}

}  // namespace cassini
