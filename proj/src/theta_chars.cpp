#include "lcft/theta_chars.hpp"

#include "lcft/alpha_modular.hpp"
#include "lcft/errors.hpp"
#include "lcft/reps.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace lcft {

using std::numbers::pi;

void QSeriesContext::validate() const {
    if (!(tau.imag() > 0)) throw invalid_parameter("tau must lie in the upper half-plane");
    if (truncation < 1) throw invalid_parameter("truncation must be >= 1");
}

namespace {

cplx qpow(cplx tau, double x) { return std::exp(cplx(0, 2 * pi) * tau * x); }

void check_tail(double last, const QSeriesContext& ctx, const char* what) {
    if (last > ctx.tolerance) {
        std::ostringstream os;
        os << what << ": truncation tail " << last << " exceeds " << ctx.tolerance << " at tau = "
           << ctx.tau << ", N = " << ctx.truncation;
        throw precision_error(os.str());
    }
}

// sum_n w(m) q^{m^2/4p}, m = 2pn + lambda
template <class W>
cplx lattice_sum(int lambda, int p, const QSeriesContext& ctx, W w, const char* what) {
    ctx.validate();
    const int N = ctx.truncation;
    cplx sum{};
    for (int n = -N; n <= N; ++n) {
        double m = 2.0 * p * n + lambda;
        sum += w(m) * qpow(ctx.tau, m * m / (4.0 * p));
    }
    // smallest |m| among the omitted terms
    double m = 2.0 * p * (N + 1) - std::abs(lambda);
    check_tail(std::abs(w(m)) * std::exp(-2 * pi * ctx.tau.imag() * m * m / (4.0 * p)), ctx, what);
    return sum;
}

void require_lambda(int lambda, int lo, int hi) {
    if (lambda < lo || lambda > hi)
        throw invalid_parameter("theta index " + std::to_string(lambda) + " out of range");
}

}  // namespace

cplx theta(int lambda, int p, const QSeriesContext& ctx) {
    require_p(p);
    require_lambda(lambda, 0, p);
    return lattice_sum(lambda, p, ctx, [](double) { return 1.0; }, "theta");
}

cplx dtheta(int lambda, int p, const QSeriesContext& ctx) {
    require_p(p);
    require_lambda(lambda, 1, p - 1);
    return lattice_sum(lambda, p, ctx, [](double m) { return m; }, "dtheta");
}

cplx nabla_theta(int lambda, int p, const QSeriesContext& ctx) {
    return cplx(0, 1) * ctx.tau * dtheta(lambda, p, ctx);
}

cplx eta(const QSeriesContext& ctx) {
    ctx.validate();
    cplx r = qpow(ctx.tau, 1.0 / 24.0);
    for (int n = 1; n <= ctx.truncation; ++n) r *= 1.0 - qpow(ctx.tau, n);
    check_tail(std::exp(-2 * pi * ctx.tau.imag() * (ctx.truncation + 1)), ctx, "eta");
    return r;
}

Eigen::VectorXcd theta_vector(int p, const QSeriesContext& ctx) {
    require_p(p);
    Eigen::VectorXcd v(3 * p - 1);
    for (int l = 0; l <= p; ++l) v(l) = theta(l, p, ctx);
    for (int l = 1; l < p; ++l) {
        v(p + l) = dtheta(l, p, ctx);
        v(2 * p + l - 1) = cplx(0, -1) * nabla_theta(l, p, ctx);
    }
    return v / eta(ctx);
}

Eigen::VectorXcd character_vector(int p, cplx alpha, cplx x, const QSeriesContext& ctx) {
    require_p(p);
    if (alpha == cplx{}) throw invalid_parameter("alpha must be nonzero");
    const cplx e = eta(ctx);
    Eigen::VectorXcd v(3 * p - 1);
    v(0) = theta(0, p, ctx) / e;
    v(1) = theta(p, p, ctx) / e;
    for (int s = 1; s < p; ++s) {
        int i = block_offset(s), lam = p - s;
        cplx th = theta(lam, p, ctx), d = dtheta(lam, p, ctx);
        cplx nb = cplx(0, 1) * ctx.tau * d;
        v(i) = (double(s) * th + d) / (double(p) * e);
        v(i + 1) = (double(p - s) * th - d) / (double(p) * e);
        v(i + 2) = (2.0 * th + 2.0 * x * cplx(0, 1) * alpha * nb) / e;
    }
    return v;
}

double verify_theta_transform(int p, const QSeriesContext& ctx) {
    Eigen::VectorXcd lhs = theta_vector(p, ctx.at(-1.0 / ctx.tau));
    Eigen::VectorXcd rhs = build_theta_transform(p) * theta_vector(p, ctx);
    return (lhs - rhs).cwiseAbs().maxCoeff();
}

double verify_S_transform(int p, double alpha, const QSeriesContext& ctx, cplx x) {
    Eigen::VectorXcd lhs = character_vector(p, alpha, x, ctx.at(-1.0 / ctx.tau));
    Eigen::MatrixXcd S = build_S_alpha(p).eval(effective_alpha(alpha, x));
    return (lhs - S * character_vector(p, alpha, x, ctx)).cwiseAbs().maxCoeff();
}

double verify_T_transform(int p, double alpha, const QSeriesContext& ctx, cplx x) {
    Eigen::VectorXcd lhs = character_vector(p, alpha, x, ctx.at(ctx.tau + 1.0));
    Eigen::MatrixXcd T = build_T_alpha(p).eval(effective_alpha(alpha, x));
    return (lhs - T * character_vector(p, alpha, x, ctx)).cwiseAbs().maxCoeff();
}

double verify_char_identity(int p, int s, double alpha, const QSeriesContext& ctx) {
    require_p(p);
    if (s <= 0 || s >= p) throw invalid_parameter("s out of range (0, p)");
    Eigen::VectorXcd v = character_vector(p, alpha, default_x, ctx);
    int i = block_offset(s);
    const cplx I(0, 1), tau = ctx.tau;
    cplx r = I * double(s - p) * tau * v(i) + I * double(s) * tau * v(i + 1) + v(i + 2) / alpha -
             (2.0 / alpha) * (v(i) + v(i + 1));
    return std::abs(r);
}

}  // namespace lcft
