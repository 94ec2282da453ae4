#include "cassini/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cassini {

namespace {

std::string case_token(const CaseLabel& label) { return label.to_string(); }

nlohmann::ordered_json det_to_json(const Term& value) {
    if (value.fits_slong_p()) return nlohmann::ordered_json(value.get_si());
    return nlohmann::ordered_json(value.get_str());
}

Term det_from_json(const nlohmann::json& value) {
    if (value.is_number_integer()) return Term(static_cast<long>(value.get<long long>()));
    if (value.is_string()) return Term(value.get<std::string>());
    throw std::invalid_argument("brute_det must be an integer or a decimal string");
}

}  // namespace

std::string csv_header() { return "k,l,j,brute_det,closed_det,case,match\n"; }

std::string csv_row(const SweepRow& row) {
    std::ostringstream out;
    out << row.k << ',' << row.l << ',' << row.j << ',' << row.brute_det.get_str() << ','
        << row.closed_det << ',' << case_token(row.case_label) << ','
        << (row.match ? "true" : "false") << '\n';
    return out.str();
}

std::string to_csv(const std::vector<SweepRow>& rows) {
    std::string out = csv_header();
    for (const SweepRow& row : rows) out += csv_row(row);
    return out;
}

nlohmann::ordered_json to_json(const std::vector<SweepRow>& rows) {
    nlohmann::ordered_json doc;
    doc["rows"] = nlohmann::ordered_json::array();
    for (const SweepRow& row : rows) {
        nlohmann::ordered_json entry;
        entry["k"] = row.k;
        entry["l"] = row.l;
        entry["j"] = row.j;
        entry["brute_det"] = det_to_json(row.brute_det);
        entry["closed_det"] = row.closed_det;
        entry["case"] = case_token(row.case_label);
        entry["match"] = row.match;
        doc["rows"].push_back(std::move(entry));
    }
    return doc;
}

std::string to_table(const std::vector<SweepRow>& rows) {
    std::vector<const SweepRow*> order;
    order.reserve(rows.size());
    for (const SweepRow& row : rows) order.push_back(&row);
    std::stable_partition(order.begin(), order.end(),
                          [](const SweepRow* row) { return !row->match; });

    std::ostringstream out;
    out << "   k    l    j  case     brute  closed  match\n";
    for (const SweepRow* row : order) {
        const std::string brute = row->brute_det.get_str();
        out << ' ';
        out.width(3);
        out << row->k << ' ';
        out.width(4);
        out << row->l << ' ';
        out.width(4);
        out << row->j << "  ";
        std::string token = case_token(row->case_label);
        token.resize(6, ' ');
        out << token << ' ';
        out.width(9);
        out << brute << ' ';
        out.width(7);
        out << row->closed_det << "  " << (row->match ? "yes" : "NO") << '\n';
    }
    return out.str();
}

std::vector<SweepRow> rows_from_json(const nlohmann::json& doc) {
    if (!doc.contains("rows") || !doc["rows"].is_array())
        throw std::invalid_argument("document has no \"rows\" array");

    std::vector<SweepRow> rows;
    rows.reserve(doc["rows"].size());
    for (const auto& entry : doc["rows"]) {
        SweepRow row;
        row.k = entry.at("k").get<int>();
        row.l = entry.at("l").get<int>();
        row.j = entry.at("j").get<int>();
        row.brute_det = det_from_json(entry.at("brute_det"));
        row.closed_det = entry.at("closed_det").get<int>();
        row.case_label = classify(Params(row.k, row.l));
        row.match = entry.at("match").get<bool>();
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace cassini
