#include "lcft/cli_io.hpp"

#include "lcft/errors.hpp"
#include "lcft/reps.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace lcft {

namespace {

const char* kind_name(Kind k) { return k == Kind::irreducible ? "irreducible" : "indecomposable"; }

std::string indent(const std::string& s, const std::string& pad) {
    std::string r;
    std::istringstream in(s);
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (!first) r += "\n" + pad;
        r += line;
        first = false;
    }
    return r;
}

template <class T>
T field(const json& j, const char* key) {
    if (!j.contains(key)) throw malformed_table(std::string("missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw malformed_table(std::string("bad field '") + key + "': " + e.what());
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw invalid_parameter("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

bool operator==(const TableDocument& a, const TableDocument& b) {
    return a.p == b.p && a.method == b.method && a.stage == b.stage && a.matrices == b.matrices &&
           a.meta == b.meta;
}

TableDocument make_document(const FusionTable& t, json meta) {
    return {t.p, t.method, t.stage, t.N, std::move(meta)};
}

FusionTable to_table(const TableDocument& d) {
    FusionTable t = empty_table(d.p, d.method, d.stage);
    t.N = d.matrices;
    return t;
}

std::string to_json(const TableDocument& d) {
    BasisOrdering b = basis_ordering(d.p);
    std::ostringstream os;
    os << "{\n";
    os << "  \"p\": " << d.p << ",\n";
    os << "  \"method\": " << json(to_string(d.method)).dump() << ",\n";
    os << "  \"stage\": " << json(to_string(d.stage)).dump() << ",\n";
    os << "  \"basis\": [\n";
    for (int i = 1; i <= b.size(); ++i) {
        const RepLabel& l = b.at(i);
        os << "    {\n";
        os << "      \"kind\": \"" << kind_name(l.kind) << "\",\n";
        os << "      \"sigma\": " << l.sigma << ",\n";
        os << "      \"weight_num\": " << l.weight.numerator() << ",\n";
        os << "      \"weight_den\": " << l.weight.denominator() << "\n";
        os << "    }" << (i < b.size() ? "," : "") << "\n";
    }
    os << "  ],\n";
    os << "  \"matrices\": [\n";
    for (std::size_t I = 0; I < d.matrices.size(); ++I) {
        const IntMatrix& m = d.matrices[I];
        os << "    [\n";
        for (int j = 0; j < m.rows(); ++j) {
            os << "      [";
            for (int k = 0; k < m.cols(); ++k) os << (k ? ", " : "") << m(j, k);
            os << "]" << (j + 1 < m.rows() ? "," : "") << "\n";
        }
        os << "    ]" << (I + 1 < d.matrices.size() ? "," : "") << "\n";
    }
    os << "  ],\n";
    os << "  \"meta\": " << indent(d.meta.dump(2), "  ") << "\n";
    os << "}\n";
    return os.str();
}

TableDocument parse_document(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw malformed_table(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw malformed_table("document is not an object");
    TableDocument d;
    d.p = field<int>(j, "p");
    try {
        require_p(d.p);
        std::string m = field<std::string>(j, "method");
        d.method = parse_method(m);
        d.stage = parse_stage(field<std::string>(j, "stage"));
    } catch (const invalid_parameter& e) {
        throw malformed_table(e.what());
    }
    const int n = 3 * d.p - 1;
    BasisOrdering b = basis_ordering(d.p);
    json basis = field<json>(j, "basis");
    if (!basis.is_array() || static_cast<int>(basis.size()) != n) throw malformed_table("basis has the wrong length");
    for (int i = 0; i < n; ++i) {
        const RepLabel& l = b.at(i + 1);
        const json& e = basis[i];
        if (field<std::string>(e, "kind") != kind_name(l.kind) || field<int>(e, "sigma") != l.sigma ||
            field<long long>(e, "weight_num") != l.weight.numerator() ||
            field<long long>(e, "weight_den") != l.weight.denominator())
            throw malformed_table("basis entry " + std::to_string(i + 1) + " does not match the ordering for p");
    }
    json mats = field<json>(j, "matrices");
    if (!mats.is_array() || static_cast<int>(mats.size()) != n) throw malformed_table("expected 3p-1 matrices");
    for (int I = 0; I < n; ++I) {
        IntMatrix m(n, n);
        if (!mats[I].is_array() || static_cast<int>(mats[I].size()) != n)
            throw malformed_table("matrix " + std::to_string(I + 1) + " has the wrong shape");
        for (int r = 0; r < n; ++r) {
            const json& row = mats[I][r];
            if (!row.is_array() || static_cast<int>(row.size()) != n)
                throw malformed_table("matrix " + std::to_string(I + 1) + " has the wrong shape");
            for (int c = 0; c < n; ++c) {
                if (!row[c].is_number_integer()) throw malformed_table("non-integer matrix entry");
                m(r, c) = row[c].get<long long>();
            }
        }
        d.matrices.push_back(std::move(m));
    }
    d.meta = j.contains("meta") ? j["meta"] : json::object();
    return d;
}

TableDocument load_document(const std::string& path) { return parse_document(read_file(path)); }

json load_json(const std::string& path) {
    try {
        return json::parse(read_file(path));
    } catch (const json::parse_error& e) {
        throw malformed_table(path + ": " + e.what());
    }
}

std::string render_text(const FusionTable& t) {
    BasisOrdering b = basis_ordering(t.p);
    const int n = t.dim();
    std::vector<std::vector<std::string>> cell(n + 1, std::vector<std::string>(n + 1));
    cell[0][0] = "x";
    for (int i = 1; i <= n; ++i) cell[0][i] = cell[i][0] = label_text(b.at(i));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) cell[i][j] = decomposition_text(b, t.product(i, j));
    std::vector<std::size_t> w(n + 1, 0);
    for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= n; ++i) w[j] = std::max(w[j], cell[i][j].size());
    std::ostringstream os;
    os << "p=" << t.p << " method=" << to_string(t.method) << " stage=" << to_string(t.stage) << "\n";
    for (int i = 0; i <= n; ++i) {
        std::string line;
        for (int j = 0; j <= n; ++j) {
            std::string c = cell[i][j];
            c.resize(w[j], ' ');
            line += (j ? " | " : "") + c;
        }
        line.erase(line.find_last_not_of(' ') + 1);
        os << line << "\n";
        if (i == 0) {
            std::string rule;
            for (int j = 0; j <= n; ++j) rule += (j ? "-+-" : "") + std::string(w[j], '-');
            os << rule << "\n";
        }
    }
    return os.str();
}

std::string render_latex(const FusionTable& t) {
    BasisOrdering b = basis_ordering(t.p);
    const int n = t.dim();
    std::ostringstream os;
    os << "\\begin{tabular}{c|" << std::string(n, 'c') << "}\n";
    os << "$\\otimes$";
    for (int j = 1; j <= n; ++j) os << " & $" << label_latex(b.at(j)) << "$";
    os << " \\\\\n\\hline\n";
    for (int i = 1; i <= n; ++i) {
        os << "$" << label_latex(b.at(i)) << "$";
        for (int j = 1; j <= n; ++j) os << " & $" << decomposition_latex(b, t.product(i, j)) << "$";
        os << " \\\\\n";
    }
    os << "\\end{tabular}\n";
    return os.str();
}

double tolerance_from_env(double fallback) {
    const char* v = std::getenv("LCFT_FUSION_TOL");
    if (!v || !*v) return fallback;
    char* end = nullptr;
    double t = std::strtod(v, &end);
    if (end == v || *end != '\0' || !(t > 0)) throw invalid_parameter(std::string("LCFT_FUSION_TOL is not a positive number: ") + v);
    return t;
}

}  // namespace lcft
