#pragma once

#include "lcft/laurent.hpp"

namespace lcft {

struct QSeriesContext {
    int truncation = 200;       // lattice sums over |n| <= N, eta product over N factors
    cplx tau{0.0, 1.0};
    double tolerance = 1e-14;   // largest admissible tail term

    void validate() const;
    QSeriesContext at(cplx t) const {
        QSeriesContext c = *this;
        c.tau = t;
        return c;
    }
};

// Default deformation parameter of the tilde forms.
inline const cplx default_x{0.0, -0.5};

// The S-matrix for deformation x is the one for the effective parameter
// 2 i x alpha (equal to alpha for the default x).
inline cplx effective_alpha(cplx alpha, cplx x) { return cplx(0, 2) * x * alpha; }

cplx theta(int lambda, int p, const QSeriesContext& ctx);
cplx dtheta(int lambda, int p, const QSeriesContext& ctx);
cplx nabla_theta(int lambda, int p, const QSeriesContext& ctx);
cplx eta(const QSeriesContext& ctx);

// (Theta_0..Theta_p, dTheta_1.., -i nablaTheta_1..) / eta
Eigen::VectorXcd theta_vector(int p, const QSeriesContext& ctx);

// Characters in basis order; the tilde forms are
// (2 Theta + 2 x i alpha nablaTheta) / eta.
Eigen::VectorXcd character_vector(int p, cplx alpha, cplx x, const QSeriesContext& ctx);

double verify_theta_transform(int p, const QSeriesContext& ctx);
double verify_S_transform(int p, double alpha, const QSeriesContext& ctx, cplx x = default_x);
double verify_T_transform(int p, double alpha, const QSeriesContext& ctx, cplx x = default_x);
double verify_char_identity(int p, int s, double alpha, const QSeriesContext& ctx);

}  // namespace lcft
