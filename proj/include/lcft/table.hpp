#pragma once

#include "lcft/reps.hpp"

#include <Eigen/Dense>

#include <array>

#include <string>
#include <vector>

namespace lcft {

using IntMatrix = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;

// Coefficients over the basis, in basis order. Negative entries are allowed
// before replacement.
using Decomposition = std::vector<long long>;

enum class Method { limit, blockdiag, closed, reference };
enum class Stage { pre, post };

std::string to_string(Method m);
std::string to_string(Stage s);
Method parse_method(const std::string& s);
Stage parse_stage(const std::string& s);

// N[I-1](j-1, k-1) is the multiplicity of X_k in X_I x X_j.
struct FusionTable {
    int p = 2;
    Method method = Method::blockdiag;
    Stage stage = Stage::pre;
    std::vector<IntMatrix> N;
    double max_residual = 0;  // largest distance to the nearest integer before rounding

    int dim() const { return 3 * p - 1; }
    long long coeff(int i, int j, int k) const { return N.at(i - 1)(j - 1, k - 1); }
    Decomposition product(int i, int j) const;
    void set_product(int i, int j, const Decomposition& d);
};

FusionTable empty_table(int p, Method m, Stage s);

bool same_entries(const FusionTable& a, const FusionTable& b);
// First differing (I, J, K), 1-based; {0,0,0} when equal.
std::array<int, 3> first_difference(const FusionTable& a, const FusionTable& b);

bool is_commutative(const FusionTable& t);
// N_I N_J == sum_K N_{IJ}^K N_K for all I, J.
bool is_associative(const FusionTable& t);
bool vacuum_is_identity(const FusionTable& t);
bool is_nonnegative(const FusionTable& t);

std::string decomposition_text(const BasisOrdering& b, const Decomposition& d);
std::string decomposition_latex(const BasisOrdering& b, const Decomposition& d);

// Rounds to the nearest integer, tracking the worst distance.
IntMatrix round_checked(const Eigen::MatrixXd& m, double& worst);

}  // namespace lcft
