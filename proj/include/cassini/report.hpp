#pragma once

// Serialization of sweep rows. The CSV schema is fixed so diffs between
// runs are meaningful: header "k,l,j,brute_det,closed_det,case,match",
// rows sorted lexicographically by (k, l, j), LF line endings, final
// newline. JSON output round-trips through rows_from_json.

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "cassini/sweep.hpp"

namespace cassini {

std::string to_csv(const std::vector<SweepRow>& rows);

// Single-row pieces, for callers that stream rows as they are computed.
std::string csv_header();
std::string csv_row(const SweepRow& row);

nlohmann::ordered_json to_json(const std::vector<SweepRow>& rows);

// Human-readable table; mismatching rows are listed first.
std::string to_table(const std::vector<SweepRow>& rows);

// Inverse of to_json; throws std::invalid_argument on malformed input.
std::vector<SweepRow> rows_from_json(const nlohmann::json& j);

}  // namespace cassini
