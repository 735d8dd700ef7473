#include "lcft/replacement.hpp"

#include "lcft/errors.hpp"
#include "lcft/reps.hpp"

#include <sstream>

namespace lcft {

namespace {

void check_size(int p, const Decomposition& d) {
    require_p(p);
    if (static_cast<int>(d.size()) != 3 * p - 1) throw shape_error("decomposition has the wrong length");
}

}  // namespace

Decomposition replace_decomposition(int p, const Decomposition& pre) {
    check_size(p, pre);
    Decomposition v = pre;
    for (int s = 1; s < p; ++s) {
        int k = block_offset(s);
        if (v[k] != v[k + 1] || v[k] == 0) continue;
        if (v[k] % 2 != 0) {
            std::ostringstream os;
            os << "odd coefficient " << v[k] << " at output " << k + 1 << " cannot be halved";
            throw malformed_table(os.str());
        }
        v[k + 2] += v[k] / 2;
        v[k] = v[k + 1] = 0;
    }
    for (std::size_t k = 0; k < v.size(); ++k)
        if (v[k] < 0) {
            std::ostringstream os;
            os << "coefficient " << v[k] << " at output " << k + 1 << " stays negative";
            throw replacement_insufficiency(os.str());
        }
    return v;
}

FusionTable replace_table(const FusionTable& pre) {
    FusionTable t = pre;
    t.stage = Stage::post;
    for (int i = 1; i <= t.dim(); ++i)
        for (int j = 1; j <= t.dim(); ++j) {
            try {
                t.set_product(i, j, replace_decomposition(t.p, pre.product(i, j)));
            } catch (const malformed_table& e) {
                std::ostringstream os;
                os << "product (" << i << "," << j << "): " << e.what();
                if (dynamic_cast<const replacement_insufficiency*>(&e)) throw replacement_insufficiency(os.str());
                throw malformed_table(os.str());
            }
        }
    return t;
}

std::vector<std::pair<int, int>> flagged_products(const FusionTable& pre) {
    BasisOrdering b = basis_ordering(pre.p);
    std::vector<std::pair<int, int>> r;
    for (int i = 1; i <= pre.dim(); ++i)
        for (int j = i; j <= pre.dim(); ++j) {
            if (b.at(i).irreducible() && b.at(j).irreducible()) continue;
            Decomposition v = pre.product(i, j);
            bool negative = false;
            for (long long c : v) negative |= c < 0;
            if (negative) continue;
            if (replace_decomposition(pre.p, v) != v) r.emplace_back(i, j);
        }
    return r;
}

Decomposition character_content(int p, const Decomposition& d) {
    check_size(p, d);
    Decomposition v = d;
    for (int s = 1; s < p; ++s) {
        int k = block_offset(s);
        v[k] += 2 * v[k + 2];
        v[k + 1] += 2 * v[k + 2];
        v[k + 2] = 0;
    }
    return v;
}

}  // namespace lcft
