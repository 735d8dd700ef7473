#pragma once

#include <boost/rational.hpp>

#include <string>
#include <vector>

namespace lcft {

using rational = boost::rational<long long>;

enum class Kind { irreducible, indecomposable };

// [h_{1,sigma}] or, for Kind::indecomposable, the tilde module.
struct RepLabel {
    Kind kind = Kind::irreducible;
    int sigma = 1;
    rational weight{0};

    bool irreducible() const { return kind == Kind::irreducible; }
    friend bool operator==(const RepLabel& a, const RepLabel& b) {
        return a.kind == b.kind && a.sigma == b.sigma;
    }
};

rational central_charge(int p);

// h_{1,sigma} = ((p - sigma)^2 - (p - 1)^2) / (4p), 0 < sigma < 3p.
rational weight(int p, int sigma);

// Validates sigma against the kind: indecomposables live in p < sigma < 2p.
RepLabel make_label(int p, Kind kind, int sigma);

struct BasisOrdering {
    int p = 2;
    std::vector<RepLabel> labels;
    int vacuum_index = 3;

    int size() const { return static_cast<int>(labels.size()); }
    // 1-based, like every index in this library.
    const RepLabel& at(int i) const { return labels.at(i - 1); }
    int index_of(const RepLabel& l) const;
};

// [h_{1,p}], [h_{1,2p}], then for s = 1..p-1 the triple
// [h_{1,s}], [h_{1,2p+s}], [~h_{1,2p-s}].
BasisOrdering basis_ordering(int p);

// 0-based offset of the triple belonging to block s (1 <= s < p).
constexpr int block_offset(int s) { return 2 + 3 * (s - 1); }

// perm[k-1] is the basis index (1-based) that moves to position k when the
// indecomposables are collected at the end.
std::vector<int> permutation_newseq(int p);
std::vector<int> invert_permutation(const std::vector<int>& perm);

std::string to_string(const rational& r);
std::string label_text(const RepLabel& l);   // "[-1/8]", "[~0]"
std::string label_latex(const RepLabel& l);  // "\left[-\frac{1}{8}\right]"

void require_p(int p);

}  // namespace lcft
