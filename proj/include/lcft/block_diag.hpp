#pragma once

#include "lcft/laurent.hpp"
#include "lcft/table.hpp"

#include <vector>

namespace lcft {

struct CPair {
    AlphaMatrix C;
    AlphaMatrix C_inv;
};

// C_p(alpha) = 1_2 + sum_s C_{p,s}(alpha) and its closed-form inverse.
CPair build_C(int p);

// The 2p x (3p-1) matrix of alpha-dependent combinations on the irreducible
// rows, normalised against tilde forms Theta + alpha nablaTheta.
AlphaMatrix build_C_prime(int p);

// alpha-free S-matrix of the block method.
Eigen::MatrixXd build_S(int p);

struct RealPair {
    Eigen::MatrixXd M;
    Eigen::MatrixXd M_inv;
};

// K_p with k^(s)_1 = k^(s)_2 = 0; inverse computed blockwise.
RealPair build_K(int p);

// P = S K, P^{-1} = K^{-1} S.
RealPair build_P(int p);

// Blockwise closed form of S K.
Eigen::MatrixXd build_P_closed(int p);

// Block-diagonal M_{p,I} read off row I (1-based) of P.
Eigen::MatrixXd build_M(const Eigen::MatrixXd& P, int I);
Eigen::MatrixXd build_M(int p, int I);

// N_{p,I} = P M_I P^{-1}, rounded; throws integrality_failure when any
// entry is further than tol from an integer.
FusionTable prefusion_matrices(int p, double tol = 1e-7);

// Leading 2p x 2p blocks of the irreducible-row matrices after reordering,
// in reordered row order. Throws projection_violation if the rows of an
// irreducible I reach a tilde column.
std::vector<IntMatrix> project_small(const FusionTable& table);

IntMatrix permute(const IntMatrix& m, const std::vector<int>& perm);

}  // namespace lcft
