#include "lcft/bpz_closed_form.hpp"

#include "lcft/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>

namespace lcft {

namespace {

int md(int v) { return ((v % 2) + 2) % 2; }

// Odd/even stepped range a, a+2, ..., b; empty when a > b.
template <class F>
void step2(int a, int b, F f) {
    for (int m = a; m <= b; m += 2) f(m);
}

class Acc {
public:
    explicit Acc(int p) : p_(p), v_(3 * p - 1, 0) {}

    void irr(int sigma, long long n = 1) {
        if (sigma == p_) v_[0] += n;
        else if (sigma == 2 * p_) v_[1] += n;
        else if (sigma > 0 && sigma < p_) v_[block_offset(sigma)] += n;
        else if (sigma > 2 * p_ && sigma < 3 * p_) v_[block_offset(sigma - 2 * p_) + 1] += n;
        else throw shape_error("irreducible weight index out of range");
    }
    void tilde(int sigma, long long n = 1) {
        if (sigma <= p_ || sigma >= 2 * p_) throw shape_error("indecomposable weight index out of range");
        v_[block_offset(2 * p_ - sigma) + 2] += n;
    }

    void lambda(int m) {
        if (m > 0 && m <= p_) irr(m);
        else irr(2 * p_ - m), irr(4 * p_ - m, 2);
    }
    void pi(int m) {
        if (m > 0 && m <= p_) irr(3 * p_ - m);
        else irr(m + p_), irr(m - p_, 2);
    }
    void rho(int t, long long n = 1) {
        if (t == p_) irr(p_, 2 * n);
        else if (t == 0) irr(2 * p_, 2 * n);
        else irr(t, 4 * n), irr(2 * p_ + t, 4 * n);
    }
    // rho_t after replacement
    void rho_post(int t, long long n = 1) {
        if (t == p_) irr(p_, 2 * n);
        else if (t == 0) irr(2 * p_, 2 * n);
        else tilde(2 * p_ - t, 2 * n);
    }

    Decomposition take() { return std::move(v_); }

private:
    int p_;
    Decomposition v_;
};

}  // namespace

std::string to_string(ClosedFormCase c) {
    switch (c) {
        case ClosedFormCase::left_left: return "left-irr x left-irr";
        case ClosedFormCase::right_right: return "right-irr x right-irr";
        case ClosedFormCase::left_right: return "left-irr x right-irr";
        case ClosedFormCase::ind_right_irr: return "ind x right-irr";
        case ClosedFormCase::ind_2p: return "ind x [h_{1,2p}]";
        case ClosedFormCase::ind_p: return "ind x [h_{1,p}]";
        case ClosedFormCase::ind_left_irr: return "ind x left-irr";
        case ClosedFormCase::ind_ind: return "ind x ind";
    }
    return "?";
}

CaseInfo classify(int p, const RepLabel& a, const RepLabel& b) {
    require_p(p);
    make_label(p, a.kind, a.sigma);
    make_label(p, b.kind, b.sigma);
    if (!a.irreducible() && b.irreducible()) return classify(p, b, a);
    if (a.irreducible() && b.irreducible()) {
        bool al = a.sigma <= p, bl = b.sigma <= p;
        if (!al && bl) return classify(p, b, a);
        if (al && bl) return {ClosedFormCase::left_left, a.sigma, b.sigma};
        if (!al && !bl) return {ClosedFormCase::right_right, 3 * p - a.sigma, 3 * p - b.sigma};
        return {ClosedFormCase::left_right, a.sigma, 3 * p - b.sigma};
    }
    if (a.irreducible()) {
        int r = 2 * p - b.sigma, x = a.sigma;
        if (x > 2 * p) return {ClosedFormCase::ind_right_irr, r, x - 2 * p};
        if (x == 2 * p) return {ClosedFormCase::ind_2p, r, 0};
        if (x == p) return {ClosedFormCase::ind_p, r, 0};
        return {ClosedFormCase::ind_left_irr, r, p - x};
    }
    return {ClosedFormCase::ind_ind, 2 * p - a.sigma, 2 * p - b.sigma};
}

Decomposition prefusion_closed(int p, const RepLabel& a, const RepLabel& b) {
    CaseInfo c = classify(p, a, b);
    Acc acc(p);
    const int k = c.first, l = c.second, r = c.first, s = c.second;
    switch (c.tag) {
        case ClosedFormCase::left_left:
        case ClosedFormCase::right_right:
            step2(std::abs(k - l) + 1, k + l - 1, [&](int m) { acc.lambda(m); });
            break;
        case ClosedFormCase::left_right:
            step2(std::abs(k - l) + 1, k + l - 1, [&](int m) { acc.pi(m); });
            break;
        case ClosedFormCase::ind_right_irr:
            step2(std::abs(r - s) + 1, std::min(r + s - 1, 2 * p - r - s - 1),
                  [&](int t) { acc.tilde(2 * p - t, -1); });
            step2(std::max(1 - md(r + s), s - r + 1), std::min(p - 1 + md(p + r + s), 2 * p - r - s - 1),
                  [&](int t) { acc.rho(t); });
            break;
        case ClosedFormCase::ind_2p:
            step2(1 - md(r), p - 1 + md(p + r), [&](int t) { acc.rho(t); });
            break;
        case ClosedFormCase::ind_p:
            step2(1 - md(r), p - 1 + md(p + r), [&](int t) { acc.rho(p - t); });
            break;
        case ClosedFormCase::ind_left_irr:
            step2(std::abs(r - s) + 1, std::min(r + s - 1, 2 * p - r - s - 1), [&](int t) { acc.tilde(p + t); });
            if (r > s) step2(1 - md(r + s), r - s - 1, [&](int t) { acc.rho(p - t); });
            if (r + s < p) step2(r + s + 1, p - 1 + md(p + r + s), [&](int t) { acc.rho(p - t); });
            break;
        case ClosedFormCase::ind_ind:
            step2(1 - md(r + s), p - 1 + md(p + r + s), [&](int t) { acc.rho(t, 2); });
            break;
    }
    return acc.take();
}

Decomposition fusion_closed(int p, const RepLabel& a, const RepLabel& b) {
    CaseInfo c = classify(p, a, b);
    Acc acc(p);
    const int k = c.first, l = c.second, r = c.first, s = c.second;
    switch (c.tag) {
        case ClosedFormCase::left_left:
        case ClosedFormCase::right_right:
            if (k + l <= p + 1) {
                step2(std::abs(k - l) + 1, k + l - 1, [&](int m) { acc.irr(m); });
                break;
            }
            step2(std::abs(k - l) + 1, 2 * p - k - l - 1, [&](int m) { acc.irr(m); });
            step2(p + 1 + md(p + k + l), k + l - 1, [&](int m) { acc.tilde(m); });
            if (md(k + l + p)) acc.irr(p);
            break;
        case ClosedFormCase::left_right:
            if (k + l <= p + 1) {
                step2(std::abs(k - l) + 1, k + l - 1, [&](int m) { acc.irr(3 * p - m); });
                break;
            }
            step2(std::abs(k - l) + 1, 2 * p - k - l - 1, [&](int m) { acc.irr(3 * p - m); });
            step2(p + 1 + md(p + k + l), k + l - 1, [&](int m) { acc.tilde(3 * p - m); });
            if (md(k + l + p)) acc.irr(2 * p);
            break;
        case ClosedFormCase::ind_right_irr:
            step2(std::max(1 - md(r + s), s - r + 1), std::min(p - 1 + md(p + r + s), 2 * p - r - s - 1),
                  [&](int t) {
                      if (t == p) acc.irr(p, 2);
                      else if (t == 0) acc.irr(2 * p, 2);
                      else acc.tilde(2 * p - t, (r - s < t && t < r + s) ? 1 : 2);
                  });
            break;
        case ClosedFormCase::ind_2p:
            step2(1 - md(r), p - 1 + md(p + r), [&](int t) { acc.rho_post(t); });
            break;
        case ClosedFormCase::ind_p:
            step2(1 - md(r), p - 1 + md(p + r), [&](int t) { acc.rho_post(p - t); });
            break;
        case ClosedFormCase::ind_left_irr:
            step2(std::max(1 - md(r + s), s - r + 1), std::min(p - 1 + md(p + r + s), 2 * p - r - s - 1),
                  [&](int t) {
                      if (t == p) acc.irr(2 * p, 2);
                      else if (t == 0) acc.irr(p, 2);
                      else acc.tilde(p + t, (r - s < t && t < r + s) ? 1 : 2);
                  });
            break;
        case ClosedFormCase::ind_ind:
            step2(1 - md(r + s), p - 1 + md(p + r + s), [&](int t) { acc.rho_post(t, 2); });
            break;
    }
    return acc.take();
}

FusionTable closed_table(int p, Stage stage) {
    FusionTable t = empty_table(p, Method::closed, stage);
    BasisOrdering b = basis_ordering(p);
    for (int i = 1; i <= t.dim(); ++i)
        for (int j = 1; j <= t.dim(); ++j)
            t.set_product(i, j, stage == Stage::pre ? prefusion_closed(p, b.at(i), b.at(j))
                                                    : fusion_closed(p, b.at(i), b.at(j)));
    return t;
}

std::pair<double, double> sine_sum_identity(int r, int s, int l, int p) {
    using std::numbers::pi;
    if (p < 2 || r <= 0 || s <= 0 || l <= 0 || r >= p || s >= p || l >= p)
        throw invalid_parameter("sine_sum_identity needs 0 < r, s, l < p");
    double lhs = 0;
    step2(std::abs(r - s) + 1, r + s - 1, [&](int I) { lhs += std::sin(pi * I * l / p); });
    double rhs = std::sin(pi * r * l / p) * std::sin(pi * s * l / p) / std::sin(pi * l / p);
    return {lhs, rhs};
}

}  // namespace lcft
