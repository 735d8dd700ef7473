#pragma once

#include "lcft/table.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace lcft {

using json = nlohmann::ordered_json;

struct TableDocument {
    int p = 2;
    Method method = Method::blockdiag;
    Stage stage = Stage::pre;
    std::vector<IntMatrix> matrices;  // [I-1](j-1, k-1)
    json meta = json::object();

    friend bool operator==(const TableDocument& a, const TableDocument& b);
};

TableDocument make_document(const FusionTable& t, json meta = json::object());
FusionTable to_table(const TableDocument& d);

// Canonical layout: fixed key order, one matrix row per line, exact
// weight fractions. Identical documents give identical bytes.
std::string to_json(const TableDocument& d);
// Throws malformed_table on schema violations or a basis that does not
// match the one generated for p.
TableDocument parse_document(const std::string& text);
TableDocument load_document(const std::string& path);

std::string render_text(const FusionTable& t);
std::string render_latex(const FusionTable& t);

json load_json(const std::string& path);

// LCFT_FUSION_TOL if set, else fallback. Throws invalid_parameter on a
// value that is not a positive number.
double tolerance_from_env(double fallback);

}  // namespace lcft
