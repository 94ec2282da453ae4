#pragma once

// Sweep engine: evaluates brute-force and closed-form determinants over a
// (k, ell, j) grid. Cells are independent, so there are two engines with
// identical output: a serial reference and an OpenMP-parallel kernel that
// writes each row by index, keeping emission order deterministic.

#include <cstddef>
#include <vector>

#include "cassini/closed_form.hpp"
#include "cassini/types.hpp"

namespace cassini {

enum class Init { tilde, original };

struct SweepRange {
    int k_min, k_max;
    int l_min, l_max;
    int j_min, j_max;
};

struct SweepCell {
    int k, l, j;
};

struct SweepRow {
    int k = 0, l = 0, j = 0;
    Term brute_det;       // exact elimination value
    int closed_det = 0;   // closed-form value
    CaseLabel case_label;
    bool match = false;
};

// Cells in lexicographic (k, l, j) order. Throws std::domain_error unless
// k_min, l_min >= 2, j_min >= 0, and each max >= its min.
std::vector<SweepCell> make_cells(const SweepRange& r);

SweepRow compute_row(const SweepCell& cell, Init init);

// Reference engine. With fail_fast, stops after the first mismatching row
// (the returned vector ends with that row).
std::vector<SweepRow> sweep_serial(const std::vector<SweepCell>& cells, Init init,
                                   bool fail_fast = false);

// OpenMP engine; row i of the result is always cell i, regardless of
// completion order.
std::vector<SweepRow> sweep_parallel(const std::vector<SweepCell>& cells, Init init);

}  // namespace cassini
