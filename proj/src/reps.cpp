#include "lcft/reps.hpp"

#include "lcft/errors.hpp"

#include <numeric>
#include <sstream>

namespace lcft {

void require_p(int p) {
    if (p < 2) throw invalid_parameter("p must be >= 2, got " + std::to_string(p));
}

rational central_charge(int p) {
    require_p(p);
    return rational(1) - rational(6LL * (p - 1) * (p - 1), p);
}

rational weight(int p, int sigma) {
    require_p(p);
    if (sigma <= 0 || sigma >= 3 * p)
        throw invalid_parameter("sigma out of range (0, 3p): " + std::to_string(sigma));
    long long a = p - sigma, b = p - 1;
    return rational(a * a - b * b, 4LL * p);
}

RepLabel make_label(int p, Kind kind, int sigma) {
    require_p(p);
    bool ok = kind == Kind::indecomposable ? (sigma > p && sigma < 2 * p)
                                           : ((sigma > 0 && sigma <= p) ||
                                              (sigma >= 2 * p && sigma < 3 * p));
    if (!ok)
        throw invalid_parameter("sigma " + std::to_string(sigma) +
                                " not valid for this kind at p=" + std::to_string(p));
    return RepLabel{kind, sigma, weight(p, sigma)};
}

int BasisOrdering::index_of(const RepLabel& l) const {
    for (int i = 0; i < size(); ++i)
        if (labels[i] == l) return i + 1;
    throw invalid_parameter("label not in basis: " + label_text(l));
}

BasisOrdering basis_ordering(int p) {
    require_p(p);
    BasisOrdering b;
    b.p = p;
    b.labels.reserve(3 * p - 1);
    b.labels.push_back(make_label(p, Kind::irreducible, p));
    b.labels.push_back(make_label(p, Kind::irreducible, 2 * p));
    for (int s = 1; s < p; ++s) {
        b.labels.push_back(make_label(p, Kind::irreducible, s));
        b.labels.push_back(make_label(p, Kind::irreducible, 2 * p + s));
        b.labels.push_back(make_label(p, Kind::indecomposable, 2 * p - s));
    }
    return b;
}

std::vector<int> permutation_newseq(int p) {
    require_p(p);
    std::vector<int> perm{1, 2};
    for (int s = 1; s < p; ++s) {
        perm.push_back(block_offset(s) + 1);
        perm.push_back(block_offset(s) + 2);
    }
    // ~h_{1,p+1}, ..., ~h_{1,2p-1} sit in blocks p-1, ..., 1
    for (int s = p - 1; s >= 1; --s) perm.push_back(block_offset(s) + 3);
    return perm;
}

std::vector<int> invert_permutation(const std::vector<int>& perm) {
    std::vector<int> inv(perm.size());
    for (std::size_t k = 0; k < perm.size(); ++k) inv.at(perm[k] - 1) = static_cast<int>(k) + 1;
    return inv;
}

std::string to_string(const rational& r) {
    std::ostringstream os;
    os << r.numerator();
    if (r.denominator() != 1) os << '/' << r.denominator();
    return os.str();
}

std::string label_text(const RepLabel& l) {
    return std::string("[") + (l.irreducible() ? "" : "~") + to_string(l.weight) + "]";
}

std::string label_latex(const RepLabel& l) {
    std::string w;
    const auto& r = l.weight;
    if (r.denominator() == 1) {
        w = std::to_string(r.numerator());
    } else {
        long long n = r.numerator();
        w = std::string(n < 0 ? "-" : "") + "\\frac{" + std::to_string(n < 0 ? -n : n) + "}{" +
            std::to_string(r.denominator()) + "}";
    }
    if (!l.irreducible()) w = (r.denominator() == 1 ? "\\tilde{" : "\\widetilde{") + w + "}";
    return "\\left[" + w + "\\right]";
}

}  // namespace lcft
