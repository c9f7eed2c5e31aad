#pragma once
// Order-3 classification, multilinear constant dimensions (the (n-2)!
// theorem checked by direct kernel computation), the closed forms of the
// appendix, and the four-generator operator identity.

#include <string>
#include <vector>

#include "qda/constants.hpp"

namespace qda {

// dim of the constants on the multilinear block (1,...,1) of n generators.
size_t dim_constants_multilinear(int n, const ParamSpec& params);

struct MultilinearPrediction {
    size_t predicted = 0;
    bool hypothesis_holds = true;          // no constants on proper-subset blocks
    std::vector<int> violating_subset;     // set when the hypothesis fails
};

// (n-2)! when sigma_{1...n} = 1, else 0; the hypothesis (no proper-subset
// constants) is checked computationally.
MultilinearPrediction predict_dim_multilinear(int n, const ParamSpec& params);

enum class Order3Case {
    generic,
    sigma123,
    one_pair,
    two_pair,
    three_pair,
    pair_plus_sigma123,
};

std::string order3_case_name(Order3Case c);

struct Order3Report {
    Order3Case label = Order3Case::generic;
    std::vector<FreePoly> constants;  // basis of the constants in B_123
    size_t ideal_dimension = 0;       // dim I_q /\ B_123
    size_t quotient_dimension = 0;    // 6 - ideal_dimension
};

Order3Report classify_order3(const ParamSpec& params);

// The cyclic-sum closed form of the order-3 constant on sigma_{ijk} = 1.
FreePoly constant_C123(int i, int j, int k, const ParamSpec& params);

// antisym(sqrt(q_ij) xi_i xi_j); needs square roots in the backend.
FreePoly antisymmetrize_pair(int i, int j, const ParamSpec& params);
// sym(sqrt(q_ij q_jk q_ki)(q_ki^{-1} - q_ik) xi_i xi_j xi_k).
FreePoly symmetrize_triple(int i, int j, int k, const ParamSpec& params);

// xi_1^3 is a constant iff q_11 is a primitive cube root of unity.
bool order3_single_generator_check(const ParamSpec& params);

// The four-generator operator identity: under the four sigma-triple
// constraints (with sigma_ij = sigma_kl) the displayed combination of
// d_i C_jkl and C_jkl d_i annihilates the block (1,1,1,1).
bool four_generator_identity_holds(const ParamSpec& params);

// The appendix rewrite with square-root prefactors, cyclic over 1..4.
bool appendix_sqrt_identity_holds(const ParamSpec& params);

}  // namespace qda
