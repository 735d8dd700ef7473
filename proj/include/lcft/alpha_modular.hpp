#pragma once

#include "lcft/laurent.hpp"

#include <vector>

namespace lcft {

double cos_sl(int p, int s, int l);  // cos(pi s l / p)
double sin_sl(int p, int s, int l);  // sin(pi s l / p)

// (3p-1)^2 S-matrix of the alpha-deformed character basis.
AlphaMatrix build_S_alpha(int p);

// T(p)_{0,0} + sum_s T(p,alpha)_{s,s}; off-diagonal entries carry one alpha.
AlphaMatrix build_T_alpha(int p);

struct GroupReport {
    int p = 0;
    double s_squared = 0;               // max deviation of S^2 from 1, all degrees
    std::vector<double> alphas;
    std::vector<double> st_cubed;       // max|(ST)^3 - 1| per alpha
    bool pass = false;
};

GroupReport verify_group_relations(int p, const std::vector<double>& alphas, double tol);

// Transformation of (Theta_0..Theta_p, dTheta_1..dTheta_{p-1},
// -i nablaTheta_1..-i nablaTheta_{p-1}) / eta under tau -> -1/tau.
Eigen::MatrixXcd build_theta_transform(int p);

// Characters in terms of the theta vector above.
Eigen::MatrixXcd build_B(int p, cplx alpha);

Eigen::MatrixXcd build_S_via_B(int p, cplx alpha);

}  // namespace lcft
