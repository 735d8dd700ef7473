#include "lcft/table.hpp"

#include "lcft/errors.hpp"

#include <cmath>

namespace lcft {

std::string to_string(Method m) {
    switch (m) {
        case Method::limit: return "limit";
        case Method::blockdiag: return "blockdiag";
        case Method::closed: return "closed";
        case Method::reference: return "reference";
    }
    return "?";
}

std::string to_string(Stage s) { return s == Stage::pre ? "pre" : "post"; }

Method parse_method(const std::string& s) {
    if (s == "limit") return Method::limit;
    if (s == "blockdiag") return Method::blockdiag;
    if (s == "closed") return Method::closed;
    if (s == "reference") return Method::reference;
    throw invalid_parameter("unknown method '" + s + "'");
}

Stage parse_stage(const std::string& s) {
    if (s == "pre") return Stage::pre;
    if (s == "post") return Stage::post;
    throw invalid_parameter("unknown stage '" + s + "'");
}

Decomposition FusionTable::product(int i, int j) const {
    const auto& m = N.at(i - 1);
    Decomposition d(dim());
    for (int k = 0; k < dim(); ++k) d[k] = m(j - 1, k);
    return d;
}

void FusionTable::set_product(int i, int j, const Decomposition& d) {
    if (static_cast<int>(d.size()) != dim()) throw shape_error("decomposition length mismatch");
    auto& m = N.at(i - 1);
    for (int k = 0; k < dim(); ++k) m(j - 1, k) = d[k];
}

FusionTable empty_table(int p, Method m, Stage s) {
    require_p(p);
    FusionTable t;
    t.p = p;
    t.method = m;
    t.stage = s;
    t.N.assign(3 * p - 1, IntMatrix::Zero(3 * p - 1, 3 * p - 1));
    return t;
}

bool same_entries(const FusionTable& a, const FusionTable& b) {
    return first_difference(a, b) == std::array<int, 3>{0, 0, 0};
}

std::array<int, 3> first_difference(const FusionTable& a, const FusionTable& b) {
    if (a.p != b.p || a.N.size() != b.N.size()) return {-1, -1, -1};
    for (std::size_t I = 0; I < a.N.size(); ++I)
        for (int j = 0; j < a.dim(); ++j)
            for (int k = 0; k < a.dim(); ++k)
                if (a.N[I](j, k) != b.N[I](j, k))
                    return {static_cast<int>(I) + 1, j + 1, k + 1};
    return {0, 0, 0};
}

bool is_commutative(const FusionTable& t) {
    for (int i = 1; i <= t.dim(); ++i)
        for (int j = i + 1; j <= t.dim(); ++j)
            if (t.product(i, j) != t.product(j, i)) return false;
    return true;
}

bool is_associative(const FusionTable& t) {
    const int n = t.dim();
    for (int I = 0; I < n; ++I)
        for (int J = 0; J < n; ++J) {
            IntMatrix rhs = IntMatrix::Zero(n, n);
            for (int K = 0; K < n; ++K)
                if (long long c = t.N[I](J, K)) rhs += c * t.N[K];
            if (t.N[I] * t.N[J] != rhs) return false;
        }
    return true;
}

bool vacuum_is_identity(const FusionTable& t) {
    return t.N.at(2) == IntMatrix::Identity(t.dim(), t.dim());
}

bool is_nonnegative(const FusionTable& t) {
    for (const auto& m : t.N)
        if (m.minCoeff() < 0) return false;
    return true;
}

namespace {

template <class F>
std::string join_terms(const BasisOrdering& b, const Decomposition& d, F name) {
    std::string out;
    for (int k = 0; k < b.size(); ++k) {
        long long c = d.at(k);
        if (c == 0) continue;
        if (c < 0) out += "-";
        else if (!out.empty()) out += "+";
        long long a = c < 0 ? -c : c;
        if (a != 1) out += std::to_string(a);
        out += name(b.labels[k]);
    }
    return out.empty() ? "0" : out;
}

}  // namespace

std::string decomposition_text(const BasisOrdering& b, const Decomposition& d) {
    return join_terms(b, d, label_text);
}

std::string decomposition_latex(const BasisOrdering& b, const Decomposition& d) {
    return join_terms(b, d, label_latex);
}

IntMatrix round_checked(const Eigen::MatrixXd& m, double& worst) {
    IntMatrix r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            double v = std::round(m(i, j));
            worst = std::max(worst, std::abs(m(i, j) - v));
            r(i, j) = static_cast<long long>(v);
        }
    return r;
}

}  // namespace lcft
