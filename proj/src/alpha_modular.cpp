#include "lcft/alpha_modular.hpp"

#include "lcft/errors.hpp"
#include "lcft/reps.hpp"

#include <cmath>
#include <numbers>

namespace lcft {

using std::numbers::pi;

double cos_sl(int p, int s, int l) { return std::cos(pi * s * l / p); }
double sin_sl(int p, int s, int l) { return std::sin(pi * s * l / p); }

namespace {

double sgn(int e) { return (e % 2 == 0) ? 1.0 : -1.0; }

LaurentScalar lp(double c0, double cm1 = 0, double c1 = 0) {
    return LaurentScalar(c0) + LaurentScalar::monomial(cm1, -1) + LaurentScalar::monomial(c1, 1);
}

}  // namespace

AlphaMatrix build_S_alpha(int p) {
    require_p(p);
    const int n = 3 * p - 1;
    const double f = 1.0 / std::sqrt(2.0 * p);
    AlphaMatrix S(n, n);

    S(0, 0) = f;
    S(0, 1) = f;
    S(1, 0) = f;
    S(1, 1) = f * sgn(p);
    for (int l = 1; l < p; ++l) {
        int j = block_offset(l);
        S(0, j) = S(0, j + 1) = 2 * f;
        S(1, j) = S(1, j + 1) = 2 * f * sgn(p - l);
    }
    for (int s = 1; s < p; ++s) {
        int i = block_offset(s);
        double sg = sgn(p + s);
        S(i, 0) = f * s / p;
        S(i, 1) = f * sg * s / p;
        S(i + 1, 0) = f * (p - s) / p;
        S(i + 1, 1) = f * sg * (p - s) / p;
        S(i + 2, 0) = 2 * f;
        S(i + 2, 1) = 2 * f * sg;
        for (int l = 1; l < p; ++l) {
            int j = block_offset(l);
            double g = 2 * f * sgn(p + l + s);
            double c = cos_sl(p, s, l), sn = sin_sl(p, s, l);
            LaurentScalar a = lp(g * s * c / p, g * 2 * sn / p);
            LaurentScalar b = lp(g * (p - s) * c / p, -g * 2 * sn / p);
            S(i, j) = a;
            S(i, j + 1) = a;
            S(i, j + 2) = lp(0, -g * sn / p);
            S(i + 1, j) = b;
            S(i + 1, j + 1) = b;
            S(i + 1, j + 2) = lp(0, g * sn / p);
            S(i + 2, j) = lp(g * 2 * c, 0, -g * (p - l) * sn);
            S(i + 2, j + 1) = lp(g * 2 * c, 0, g * l * sn);
        }
    }
    return S;
}

AlphaMatrix build_T_alpha(int p) {
    require_p(p);
    const int n = 3 * p - 1;
    const cplx I(0, 1);
    AlphaMatrix T(n, n);
    T(0, 0) = std::exp(-I * pi / 12.0);
    T(1, 1) = std::exp(I * pi * (p / 2.0 - 1.0 / 12.0));
    for (int s = 1; s < p; ++s) {
        int i = block_offset(s);
        cplx t = std::exp(I * pi * ((p - s) * (p - s) / (2.0 * p) - 1.0 / 12.0));
        T(i, i) = T(i + 1, i + 1) = T(i + 2, i + 2) = t;
        T(i + 2, i) = LaurentScalar::monomial(I * double(p - s) * t, 1);
        T(i + 2, i + 1) = LaurentScalar::monomial(-I * double(s) * t, 1);
    }
    return T;
}

GroupReport verify_group_relations(int p, const std::vector<double>& alphas, double tol) {
    GroupReport r;
    r.p = p;
    r.alphas = alphas;
    AlphaMatrix S = build_S_alpha(p);
    AlphaMatrix T = build_T_alpha(p);
    const int n = S.rows();
    AlphaMatrix S2 = S * S;
    Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(n, n);
    r.s_squared = std::max(S2.max_nonconstant(), (S2.coefficient(0) - id).cwiseAbs().maxCoeff());
    r.pass = r.s_squared < tol;
    for (double a : alphas) {
        if (a == 0) throw invalid_parameter("alpha must be nonzero");
        Eigen::MatrixXcd st = S.eval(a) * T.eval(a);
        double res = (st * st * st - id).cwiseAbs().maxCoeff();
        r.st_cubed.push_back(res);
        r.pass = r.pass && res < tol;
    }
    return r;
}

Eigen::MatrixXcd build_theta_transform(int p) {
    require_p(p);
    const int n = 3 * p - 1;
    const double f = std::sqrt(2.0 / p);
    const cplx I(0, 1);
    Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 0; i <= p; ++i)
        for (int j = 0; j <= p; ++j) {
            double w = (j == 0 || j == p) ? 0.5 : 1.0;
            M(i, j) = f * w * std::cos(pi * i * j / p);
        }
    for (int k = 1; k < p; ++k)
        for (int l = 1; l < p; ++l) {
            M(2 * p + k - 1, p + l) = I * f * sin_sl(p, k, l);
            M(p + k, 2 * p + l - 1) = -I * f * sin_sl(p, k, l);
        }
    return M;
}

Eigen::MatrixXcd build_B(int p, cplx alpha) {
    require_p(p);
    if (alpha == cplx{}) throw invalid_parameter("alpha must be nonzero");
    const int n = 3 * p - 1;
    Eigen::MatrixXcd B = Eigen::MatrixXcd::Zero(n, n);
    B(0, 0) = 1;
    B(1, p) = 1;
    for (int s = 1; s < p; ++s) {
        int r = block_offset(s), lam = p - s;
        B(r, lam) = double(s) / p;
        B(r, p + lam) = 1.0 / p;
        B(r + 1, lam) = double(p - s) / p;
        B(r + 1, p + lam) = -1.0 / p;
        B(r + 2, lam) = 2;
        B(r + 2, 2 * p + lam - 1) = cplx(0, 1) * alpha;
    }
    return B;
}

Eigen::MatrixXcd build_S_via_B(int p, cplx alpha) {
    if (alpha == cplx{}) throw invalid_parameter("alpha must be nonzero");
    Eigen::MatrixXcd B = build_B(p, alpha);
    Eigen::PartialPivLU<Eigen::MatrixXcd> lu(B);
    if (std::abs(lu.determinant()) < 1e-300) throw numerical_error("B is singular");
    return B * build_theta_transform(p) * lu.inverse();
}

}  // namespace lcft
