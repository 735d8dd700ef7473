#include "lcft/limit_verlinde.hpp"

#include "lcft/alpha_modular.hpp"
#include "lcft/errors.hpp"
#include "lcft/reps.hpp"

#include <cmath>
#include <sstream>

namespace lcft {

namespace {

constexpr int vacuum_row = 2;           // 0-based row of [h_{1,1}]
constexpr double degenerate_eps = 1e-14;
constexpr double convergence_floor = 1e-9;

double sgn(int e) { return (e % 2 == 0) ? 1.0 : -1.0; }

void check_alpha(cplx alpha) {
    if (alpha == cplx(0)) throw invalid_parameter("alpha must be nonzero");
}

void check_vacuum_row(const Eigen::MatrixXcd& S) {
    for (int r = 0; r < S.cols(); ++r)
        if (std::abs(S(vacuum_row, r)) < degenerate_eps) {
            std::ostringstream os;
            os << "vacuum-row entry S_{3," << r + 1 << "} vanishes";
            throw degenerate_error(os.str());
        }
}

std::string ijk(int I, int J, int K) {
    std::ostringstream os;
    os << "(I,J,K)=(" << I << "," << J << "," << K << ")";
    return os.str();
}

}  // namespace

std::vector<Eigen::MatrixXcd> verlinde_at_alpha(int p, cplx alpha) {
    check_alpha(alpha);
    Eigen::MatrixXcd S = build_S_alpha(p).eval(alpha);
    check_vacuum_row(S);
    const int n = static_cast<int>(S.rows());
    std::vector<Eigen::MatrixXcd> N;
    N.reserve(n);
    for (int I = 0; I < n; ++I) {
        Eigen::VectorXcd d = S.row(I).transpose().cwiseQuotient(S.row(vacuum_row).transpose());
        N.push_back(S * d.asDiagonal() * S);
    }
    return N;
}

std::vector<Eigen::MatrixXcd> extrapolate_to_zero(const std::vector<double>& a,
                                                  const std::vector<std::vector<Eigen::MatrixXcd>>& samples) {
    const std::size_t m = a.size();
    if (m == 0 || samples.size() != m) throw invalid_parameter("sample count mismatch");
    std::vector<double> w(m, 1.0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (j != i) w[i] *= -a[j] / (a[i] - a[j]);
    std::vector<Eigen::MatrixXcd> r = samples[0];
    for (std::size_t I = 0; I < r.size(); ++I) {
        r[I].setZero();
        for (std::size_t k = 0; k < m; ++k) r[I] += w[k] * samples[k][I];
    }
    return r;
}

LimitReport limit_prefusion(int p, const std::vector<double>& alphas, double tol, cplx x) {
    require_p(p);
    if (alphas.empty()) throw invalid_parameter("empty alpha schedule");
    for (std::size_t k = 0; k < alphas.size(); ++k) {
        if (!(alphas[k] > 0)) throw invalid_parameter("alphas must be positive");
        if (k > 0 && !(alphas[k] < alphas[k - 1])) throw invalid_parameter("alphas must decrease strictly");
    }
    LimitReport rep;
    rep.p = p;
    rep.alphas = alphas;
    std::vector<std::vector<Eigen::MatrixXcd>> samples;
    for (double a : alphas) samples.push_back(verlinde_at_alpha(p, effective_alpha(a, x)));
    const int n = 3 * p - 1;

    // successive differences must shrink at least like the alpha ratio, up to 10x
    for (std::size_t k = 0; k + 1 < samples.size(); ++k) {
        double d = 0;
        std::array<int, 3> at{0, 0, 0};
        for (int I = 0; I < n; ++I) {
            Eigen::MatrixXd diff = (samples[k][I] - samples[k + 1][I]).cwiseAbs();
            Eigen::Index j, kk;
            double v = diff.maxCoeff(&j, &kk);
            if (v > d) d = v, at = {I + 1, int(j) + 1, int(kk) + 1};
        }
        if (k > 0) {
            double prev = rep.successive.back();
            double ratio = alphas[k + 1] / alphas[k];
            if (d > convergence_floor && d > 10 * ratio * prev)
                throw limit_failure("alpha schedule does not converge at " + ijk(at[0], at[1], at[2]));
        }
        rep.successive.push_back(d);
    }

    std::vector<Eigen::MatrixXcd> lim = samples.size() > 1 ? extrapolate_to_zero(alphas, samples) : samples[0];
    rep.table = empty_table(p, Method::limit, Stage::pre);
    for (int I = 0; I < n; ++I) {
        double worst_im = lim[I].imag().cwiseAbs().maxCoeff();
        double w = 0;
        rep.table.N[I] = round_checked(lim[I].real(), w);
        Eigen::MatrixXd res = (lim[I] - rep.table.N[I].cast<double>().cast<cplx>()).cwiseAbs();
        rep.residual.push_back(res);
        Eigen::Index j, k;
        double v = res.maxCoeff(&j, &k);
        if (v > rep.max_residual) rep.max_residual = v, rep.worst = {I + 1, int(j) + 1, int(k) + 1};
        double raw = (samples.back()[I] - rep.table.N[I].cast<double>().cast<cplx>()).cwiseAbs().maxCoeff();
        rep.max_raw_residual = std::max(rep.max_raw_residual, raw);
        if (worst_im > tol) throw limit_failure("imaginary part survives the limit, I=" + std::to_string(I + 1));
    }
    rep.table.max_residual = rep.max_residual;
    if (rep.max_residual >= tol) {
        std::ostringstream os;
        os << "limit is not integral at " << ijk(rep.worst[0], rep.worst[1], rep.worst[2]) << ": residual "
           << rep.max_residual;
        throw limit_failure(os.str());
    }
    return rep;
}

AlphaMatrix build_E_alpha(int p) {
    return build_S_alpha(p) * AlphaMatrix::constant(build_S(p).cast<cplx>());
}

Eigen::MatrixXcd build_E(int p, cplx alpha) {
    check_alpha(alpha);
    return build_S_alpha(p).eval(alpha) * build_S(p).cast<cplx>();
}

Eigen::MatrixXd build_E_closed(int p, double a) {
    require_p(p);
    check_alpha(a);
    const int n = 3 * p - 1;
    const double P = p;
    Eigen::MatrixXd E = Eigen::MatrixXd::Zero(n, n);
    E(0, 0) = E(1, 1) = 1;
    for (int s = 1; s < p; ++s) {
        int i = block_offset(s);
        E.block<3, 3>(i, i) << s / P - 2 / (P * a), s / P - 2 / (P * a), 1 / (P * a),
            (P - s) / P + 2 / (P * a), (P - s) / P + 2 / (P * a), -1 / (P * a),
            2 - (P - s) * a, 2 + s * a, 0;
    }
    return E;
}

Eigen::MatrixXcd build_K_diag(int p, cplx alpha) {
    check_alpha(alpha);
    Eigen::MatrixXcd S = build_S_alpha(p).eval(alpha);
    check_vacuum_row(S);
    return S.row(vacuum_row).cwiseInverse().asDiagonal();
}

Eigen::MatrixXcd build_M_diag(int p, cplx alpha, int I) {
    check_alpha(alpha);
    Eigen::MatrixXcd S = build_S_alpha(p).eval(alpha);
    if (I < 1 || I > S.rows()) throw invalid_parameter("representation index out of range");
    check_vacuum_row(S);
    return S.row(I - 1).cwiseQuotient(S.row(vacuum_row)).asDiagonal();
}

Eigen::MatrixXcd build_F(int p, cplx alpha) {
    Eigen::MatrixXcd S = build_S_alpha(p).eval(alpha);
    check_vacuum_row(S);
    Eigen::MatrixXcd E = S * build_S(p).cast<cplx>();
    Eigen::MatrixXcd Kd_inv = S.row(vacuum_row).asDiagonal();
    return Kd_inv * E * build_K(p).M.cast<cplx>();
}

Eigen::MatrixXd build_F_closed(int p, double a) {
    require_p(p);
    check_alpha(a);
    const int n = 3 * p - 1;
    const double P = p;
    Eigen::MatrixXd F = Eigen::MatrixXd::Zero(n, n);
    F(0, 0) = F(1, 1) = 1;
    const double pre = 1 / (P * P * P * a * a);
    for (int j = 1; j < p; ++j) {
        int i = block_offset(j);
        double s1 = sin_sl(p, 1, j), c1 = cos_sl(p, 1, j);
        double g = c1 * a + 2 * s1;
        F.block<3, 3>(i, i) << 0, 2 * (j * a - 2) * s1 * g * pre, sgn(j + p + 1) * std::sqrt(2 * P) * g * pre,
            0, 2 * ((P - j) * a + 2) * s1 * g * pre, sgn(j + p) * std::sqrt(2 * P) * g * pre,
            1, -2 * P * a * s1 * g * pre, 0;
    }
    return F;
}

Eigen::MatrixXcd invert_blockwise(int p, const Eigen::MatrixXcd& m) {
    const int n = 3 * p - 1;
    if (m.rows() != n || m.cols() != n) throw shape_error("invert_blockwise: wrong shape");
    Eigen::MatrixXcd r = Eigen::MatrixXcd::Zero(n, n);
    r.topLeftCorner(2, 2) = m.topLeftCorner(2, 2).inverse();
    for (int s = 1; s < p; ++s) {
        int i = block_offset(s);
        Eigen::FullPivLU<Eigen::Matrix3cd> lu(m.block<3, 3>(i, i));
        if (!lu.isInvertible()) throw degenerate_error("singular diagonal block");
        r.block<3, 3>(i, i) = lu.inverse();
    }
    return r;
}

FactorizationReport verify_equivalence_factorization(int p, const std::vector<double>& alphas, double tol,
                                                     double exact_alpha, double exact_tol) {
    require_p(p);
    if (alphas.empty()) throw invalid_parameter("empty alpha schedule");
    FactorizationReport rep;
    rep.p = p;
    rep.alphas = alphas;
    rep.exact_alpha = exact_alpha;
    const int n = 3 * p - 1;
    Eigen::MatrixXcd Sp = build_S(p).cast<cplx>();
    RealPair K = build_K(p);
    RealPair P = build_P(p);
    {
        Eigen::MatrixXcd S = build_S_alpha(p).eval(exact_alpha);
        Eigen::MatrixXcd E = build_E(p, exact_alpha);
        Eigen::MatrixXcd E_inv = Sp * S;
        Eigen::MatrixXcd F = build_F(p, exact_alpha);
        rep.leg_a = (S * E - Sp).cwiseAbs().maxCoeff();
        rep.leg_b = (E_inv * build_K_diag(p, exact_alpha) * F - K.M.cast<cplx>()).cwiseAbs().maxCoeff();
    }
    std::vector<std::vector<Eigen::MatrixXcd>> samples;
    for (double a : alphas) {
        Eigen::MatrixXcd F = build_F(p, a);
        Eigen::MatrixXcd F_inv = invert_blockwise(p, F);
        std::vector<Eigen::MatrixXcd> row;
        for (int I = 1; I <= n; ++I) row.push_back(F_inv * build_M_diag(p, a, I) * F);
        samples.push_back(std::move(row));
    }
    if (rep.leg_a >= exact_tol) throw factorization_error("leg (a): S_{p,alpha} E != S_p");
    if (rep.leg_b >= exact_tol) throw factorization_error("leg (b): E^{-1} K_diag F != K_p");
    std::vector<Eigen::MatrixXcd> lim = samples.size() > 1 ? extrapolate_to_zero(alphas, samples) : samples[0];
    for (int I = 1; I <= n; ++I)
        rep.leg_c = std::max(rep.leg_c, (lim[I - 1] - build_M(P.M, I).cast<cplx>()).cwiseAbs().maxCoeff());
    if (rep.leg_c >= tol) throw factorization_error("leg (c): lim F^{-1} M_diag F != M_I");
    return rep;
}

}  // namespace lcft
