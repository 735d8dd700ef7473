#pragma once

#include "lcft/block_diag.hpp"
#include "lcft/table.hpp"
#include "lcft/theta_chars.hpp"

#include <array>
#include <vector>

namespace lcft {

inline const std::vector<double> default_alphas{1e-2, 1e-3, 1e-4};

// N[I-1](j-1, k-1) = sum_r S_jr S_Ir S_rk / S_3r at S = S_{p,alpha}.
// The denominators come from the vacuum row.
std::vector<Eigen::MatrixXcd> verlinde_at_alpha(int p, cplx alpha);

// Polynomial extrapolation to alpha = 0 through the sampled points.
std::vector<Eigen::MatrixXcd> extrapolate_to_zero(const std::vector<double>& alphas,
                                                  const std::vector<std::vector<Eigen::MatrixXcd>>& samples);

struct LimitReport {
    int p = 0;
    std::vector<double> alphas;
    std::vector<Eigen::MatrixXd> residual;   // per I: |limit - rounded|
    double max_residual = 0;                 // after extrapolation
    double max_raw_residual = 0;             // smallest alpha, no extrapolation
    std::vector<double> successive;          // max |N(alpha_k) - N(alpha_{k+1})|
    std::array<int, 3> worst{0, 0, 0};       // 1-based (I, J, K) of max_residual
    FusionTable table;
};

// Throws limit_failure naming (I,J,K) on non-convergence, a residual above
// tol, or an imaginary part above tol.
LimitReport limit_prefusion(int p, const std::vector<double>& alphas = default_alphas,
                            double tol = 1e-5, cplx x = default_x);

// E = S_{p,alpha} S_p.
AlphaMatrix build_E_alpha(int p);
Eigen::MatrixXcd build_E(int p, cplx alpha);
Eigen::MatrixXd build_E_closed(int p, double alpha);

// diag(1 / S_3r); throws degenerate_error on a vanishing vacuum-row entry.
Eigen::MatrixXcd build_K_diag(int p, cplx alpha);
Eigen::MatrixXcd build_M_diag(int p, cplx alpha, int I);

// F = K_diag^{-1} E K_p.
Eigen::MatrixXcd build_F(int p, cplx alpha);
Eigen::MatrixXd build_F_closed(int p, double alpha);
// F is block diagonal, so its inverse is taken block by block.
Eigen::MatrixXcd invert_blockwise(int p, const Eigen::MatrixXcd& m);

struct FactorizationReport {
    int p = 0;
    std::vector<double> alphas;
    double exact_alpha = 0.01;
    double leg_a = 0;  // |S_{p,alpha} E - S_p| at exact_alpha
    double leg_b = 0;  // |E^{-1} K_diag F - K_p| at exact_alpha
    double leg_c = 0;  // max over I of |lim F^{-1} M_diag F - M_I| over alphas
};

// Legs (a) and (b) hold for every alpha but lose digits to 1/alpha
// cancellation, so they are checked at one moderate exact_alpha.
// Throws factorization_error naming the first failing leg.
FactorizationReport verify_equivalence_factorization(int p, const std::vector<double>& alphas = default_alphas,
                                                     double tol = 1e-5, double exact_alpha = 0.01,
                                                     double exact_tol = 1e-9);

}  // namespace lcft
