#pragma once

#include "lcft/reps.hpp"
#include "lcft/table.hpp"

#include <string>
#include <utility>

namespace lcft {

enum class ClosedFormCase {
    left_left,      // [h_{1,k}] x [h_{1,l}], k, l <= p
    right_right,    // [h_{1,3p-k}] x [h_{1,3p-l}]
    left_right,     // [h_{1,k}] x [h_{1,3p-l}]
    ind_right_irr,  // [~h_{1,2p-r}] x [h_{1,2p+s}]
    ind_2p,         // [~h_{1,2p-r}] x [h_{1,2p}]
    ind_p,          // [~h_{1,2p-r}] x [h_{1,p}]
    ind_left_irr,   // [~h_{1,2p-r}] x [h_{1,p-s}]
    ind_ind,        // [~h_{1,2p-r}] x [~h_{1,2p-s}]
};

std::string to_string(ClosedFormCase c);

struct CaseInfo {
    ClosedFormCase tag = ClosedFormCase::left_left;
    int first = 0;   // k or r
    int second = 0;  // l or s; 0 where the case has a single parameter
};

// Symmetric in a and b.
CaseInfo classify(int p, const RepLabel& a, const RepLabel& b);

// Signed pre-fusion decomposition in basis order.
Decomposition prefusion_closed(int p, const RepLabel& a, const RepLabel& b);

// Decomposition after replacement, straight from the closed forms.
Decomposition fusion_closed(int p, const RepLabel& a, const RepLabel& b);

FusionTable closed_table(int p, Stage stage);

// sum_{I = |r-s|+1, step 2}^{r+s-1} sin(pi I l / p) and
// sin(pi r l / p) sin(pi s l / p) / sin(pi l / p).
std::pair<double, double> sine_sum_identity(int r, int s, int l, int p);

}  // namespace lcft
