#include "lcft/block_diag.hpp"

#include "lcft/alpha_modular.hpp"
#include "lcft/errors.hpp"
#include "lcft/reps.hpp"

#include <cmath>
#include <sstream>

namespace lcft {

namespace {

double sgn(int e) { return (e % 2 == 0) ? 1.0 : -1.0; }

LaurentScalar lp(double c0, double cm1 = 0, double c1 = 0) {
    return LaurentScalar(c0) + LaurentScalar::monomial(cm1, -1) + LaurentScalar::monomial(c1, 1);
}

}  // namespace

CPair build_C(int p) {
    require_p(p);
    const int n = 3 * p - 1;
    CPair r{AlphaMatrix::identity(n), AlphaMatrix::identity(n)};
    const double P = p;
    for (int s = 1; s < p; ++s) {
        int i = block_offset(s);
        auto& C = r.C;
        C(i, i) = lp((P + s) / (2 * P), 1 / P);
        C(i, i + 1) = lp(s / (2 * P), 1 / P);
        C(i, i + 2) = lp(0, -1 / (2 * P));
        C(i + 1, i) = lp((P - s) / (2 * P), -1 / P);
        C(i + 1, i + 1) = lp((2 * P - s) / (2 * P), -1 / P);
        C(i + 1, i + 2) = lp(0, 1 / (2 * P));
        C(i + 2, i) = lp((P + s) / P, 2 / P);
        C(i + 2, i + 1) = lp((2 * P + s) / P, 2 / P);
        C(i + 2, i + 2) = lp(0, -1 / P);

        auto& D = r.C_inv;
        D(i, i) = cplx(2.0);
        D(i, i + 1) = cplx(1.0);
        D(i, i + 2) = cplx(-0.5);
        D(i + 1, i) = cplx(-1.0);
        D(i + 1, i + 1) = LaurentScalar();
        D(i + 1, i + 2) = cplx(0.5);
        D(i + 2, i) = lp(2, 0, s);
        D(i + 2, i + 1) = lp(2, 0, P + s);
        D(i + 2, i + 2) = lp(0, 0, -P / 2);
    }
    return r;
}

AlphaMatrix build_C_prime(int p) {
    require_p(p);
    AlphaMatrix C(2 * p, 3 * p - 1);
    C(0, 0) = cplx(1.0);
    C(1, 1) = cplx(1.0);
    const double P = p;
    for (int s = 1; s < p; ++s) {
        int r = 2 * s, c = block_offset(s);
        C(r, c) = lp((s + P) / (2 * P), 1 / (2 * P));
        C(r, c + 1) = lp(s / (2 * P), 1 / (2 * P));
        C(r, c + 2) = lp(0, -1 / (2 * P));
        C(r + 1, c) = lp((P - s) / (2 * P), -1 / (2 * P));
        C(r + 1, c + 1) = lp((2 * P - s) / (2 * P), -1 / (2 * P));
        C(r + 1, c + 2) = lp(0, 1 / (2 * P));
    }
    return C;
}

Eigen::MatrixXd build_S(int p) {
    // the 2x2, 2x3 and 3x2 blocks carry no alpha
    Eigen::MatrixXd S = build_S_alpha(p).coefficient(0).real();
    const double f = 1.0 / std::sqrt(2.0 * p);
    for (int s = 1; s < p; ++s)
        for (int l = 1; l < p; ++l) {
            int i = block_offset(s), j = block_offset(l);
            double g = 2 * f * sgn(p + l + s);
            double c = cos_sl(p, s, l), sn = sin_sl(p, s, l);
            double P = p;
            S.block<3, 3>(i, j) << s / P * c + (P - l) / P * sn, s / P * c - l / P * sn, 0,
                (P - s) / P * c - (P - l) / P * sn, (P - s) / P * c + l / P * sn, 0,
                2 * c + 2 * sn, 2 * c + 2 * sn, -sn;
            S.block<3, 3>(i, j) *= g;
        }
    return S;
}

RealPair build_K(int p) {
    require_p(p);
    const int n = 3 * p - 1;
    const double P = p;
    RealPair r{Eigen::MatrixXd::Zero(n, n), Eigen::MatrixXd::Zero(n, n)};
    r.M(0, 0) = std::sqrt(2 * P * P * P);
    r.M(1, 1) = sgn(p + 1) * std::sqrt(2 * P * P * P);
    r.M_inv(0, 0) = 1 / r.M(0, 0);
    r.M_inv(1, 1) = 1 / r.M(1, 1);
    for (int l = 1; l < p; ++l) {
        int j = block_offset(l);
        double s1 = sin_sl(p, 1, l), c1 = cos_sl(p, 1, l);
        if (std::abs(s1) < 1e-14) throw numerical_error("singular K block");
        Eigen::Matrix3d b;
        b << sgn(p + l + 1) * std::sqrt(P / 2) / s1, sgn(p + l) * std::sqrt(2 / (P * P * P)) * (c1 - l * s1), 0,
            sgn(p + l) * std::sqrt(P / 2) / s1, sgn(p + l + 1) * std::sqrt(2 / (P * P * P)) * (c1 + (P - l) * s1), 0,
            0, 0, 1;
        r.M.block<3, 3>(j, j) = b;
        r.M_inv.block<3, 3>(j, j) = b.inverse();
    }
    return r;
}

RealPair build_P(int p) {
    Eigen::MatrixXd S = build_S(p);
    RealPair K = build_K(p);
    return {S * K.M, K.M_inv * S};
}

Eigen::MatrixXd build_P_closed(int p) {
    require_p(p);
    const int n = 3 * p - 1;
    const double P = p;
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(n, n);
    M(0, 0) = P;
    M(0, 1) = sgn(p + 1) * P;
    M(1, 0) = P;
    M(1, 1) = -P;
    for (int l = 1; l < p; ++l) {
        int j = block_offset(l);
        double s1 = sin_sl(p, 1, l);
        M(0, j + 1) = sgn(p + l + 1) * 2 / P * s1;
        M(1, j + 1) = -2 / P * s1;
    }
    for (int s = 1; s < p; ++s) {
        int i = block_offset(s);
        double e = sgn(s + 1);
        M(i, 0) = s;
        M(i, 1) = e * s;
        M(i + 1, 0) = P - s;
        M(i + 1, 1) = e * (P - s);
        M(i + 2, 0) = 2 * P;
        M(i + 2, 1) = 2 * e * P;
        for (int l = 1; l < p; ++l) {
            int j = block_offset(l);
            double s1 = sin_sl(p, 1, l), c1 = cos_sl(p, 1, l);
            double ss = sin_sl(p, s, l), cc = cos_sl(p, s, l);
            M.block<3, 3>(i, j) << e * ss / s1, e * 2 / (P * P) * (s * cc * s1 - ss * c1), 0,
                -e * ss / s1, e * 2 / (P * P) * ((P - s) * cc * s1 + ss * c1), 0,
                0, e * 4 / P * (cc + ss) * s1, sgn(p + s + l + 1) * std::sqrt(2 / P) * ss;
        }
    }
    return M;
}

Eigen::MatrixXd build_M(const Eigen::MatrixXd& P, int I) {
    const int n = static_cast<int>(P.rows());
    if (I < 1 || I > n) throw invalid_parameter("representation index out of range");
    const int r = I - 1;
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(n, n);
    M(0, 0) = P(r, 0);
    M(1, 1) = P(r, 1);
    for (int j = 2; j + 2 < n + 1; j += 3) {
        M(j, j) = M(j + 1, j + 1) = M(j + 2, j + 2) = P(r, j);
        M(j, j + 1) = P(r, j + 1);
        M(j, j + 2) = P(r, j + 2);
    }
    return M;
}

Eigen::MatrixXd build_M(int p, int I) { return build_M(build_P(p).M, I); }

FusionTable prefusion_matrices(int p, double tol) {
    RealPair P = build_P(p);
    FusionTable t = empty_table(p, Method::blockdiag, Stage::pre);
    for (int I = 1; I <= t.dim(); ++I) {
        double worst = 0;
        t.N[I - 1] = round_checked(P.M * build_M(P.M, I) * P.M_inv, worst);
        if (worst >= tol) {
            std::ostringstream os;
            os << "N_{" << p << "," << I << "} is not integral: residual " << worst;
            throw integrality_failure(os.str());
        }
        t.max_residual = std::max(t.max_residual, worst);
    }
    return t;
}

IntMatrix permute(const IntMatrix& m, const std::vector<int>& perm) {
    const int n = static_cast<int>(perm.size());
    IntMatrix r(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) r(a, b) = m(perm[a] - 1, perm[b] - 1);
    return r;
}

std::vector<IntMatrix> project_small(const FusionTable& table) {
    const int p = table.p;
    std::vector<int> perm = permutation_newseq(p);
    std::vector<IntMatrix> small;
    for (int a = 0; a < 2 * p; ++a) {
        int I = perm[a];
        IntMatrix m = permute(table.N.at(I - 1), perm);
        if (m.topRightCorner(2 * p, p - 1).cwiseAbs().maxCoeff() != 0) {
            std::ostringstream os;
            os << "irreducible I=" << I << " reaches an indecomposable column";
            throw projection_violation(os.str());
        }
        small.push_back(m.topLeftCorner(2 * p, 2 * p));
    }
    return small;
}

}  // namespace lcft
