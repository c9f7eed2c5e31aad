#pragma once
// Quantized Serre constants, Cartan-matrix constraint surfaces, the A_l
// and C_l root-vector towers with their verified bracket properties, the
// B2 highest-root solution and the B3 grid search.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qda/constants.hpp"

namespace qda {

struct CartanData {
    int size = 0;
    std::map<std::pair<int, int>, int> k;  // (i,j), i != j -> k_ij >= 1

    int cartan_entry(int i, int j) const;  // 2 on the diagonal, 1 - k_ij off

    static CartanData type_A(int rank);
    static CartanData type_B(int rank);
    static CartanData type_C(int rank);
};

// sum_m (-q_ij)^m q_ii^{m(m-1)/2} [k over m]_{q_ii} xi_i^m xi_j xi_i^{k-m}
FreePoly serre_constant(int i, int j, int k, const ParamSpec& params);

// The sigma_ij q_ii^{k_ij - 1} = 1 family for the given Cartan data.
std::vector<Constraint> cartan_constraints(const CartanData& cd);
ParamSpec cartan_param_point(const CartanData& cd, const ParamOptions& options = {});

// Solve sigma_ij = q_ii^{A_ij} in the exponent lattice of a symbolic point.
std::optional<CartanData> infer_cartan(const ParamSpec& params);

struct RootVectorSeq {
    char type = 'A';
    int rank = 0;
    std::vector<FreePoly> vectors;       // X^1 ... X^l (A) or X^1 ... X^{2l-1} (C)
    std::vector<Scalar> bracket_coeffs;  // a_2..a_l, then b_1..b_{l-1} for C
};

struct VerifyReport {
    bool ok = true;
    std::vector<std::string> checks;    // one line per verified family
    std::vector<std::string> failures;  // violating (relation, m, n, i)
};

RootVectorSeq build_root_vectors_A(int rank, const ParamSpec& params);
VerifyReport verify_A(const RootVectorSeq& seq, const ParamSpec& params);

RootVectorSeq build_root_vectors_C(int rank, const ParamSpec& params);
VerifyReport verify_C(const RootVectorSeq& seq, const ParamSpec& params);

// Coefficient helpers shared with the verification (exposed for tests).
Scalar a_coefficient(int i, int n, const ParamSpec& params);        // a(i,n) of the A tower
Scalar b_defining_coefficient(int n, int rank, const ParamSpec& params);  // b_n of the C tower
Scalar b_vanishing_coefficient(int m, int n, int rank, const ParamSpec& params);  // b(m,n)
Scalar c_vanishing_coefficient(int m, int n, int rank, const ParamSpec& params);  // c(m,n)

struct B2Candidate {
    FreePoly e;
    Scalar a2;
};

struct B2Result {
    std::vector<B2Candidate> candidates;  // the proportionality-equation solutions
    std::optional<FreePoly> survivor;     // unique E with w_1 in the ideal
    Scalar a1, a2;
    ParamSpec params;
};

B2Result solve_b2(const ParamOptions& options = {});

struct B3Solution {
    std::vector<long> grid_point;      // k exponents of the three bracket scalars
    std::vector<std::string> coeffs;   // E in quotient coordinates
    bool finite_lie_limit = false;
    bool matches_highest_root = false;
};

struct B3Result {
    std::vector<B3Solution> nonzero_solutions;  // all, qualifying or not
    size_t qualifying = 0;                      // with the highest-root Lie limit
    size_t grid_points = 0;
    long exponent_bound = 0;
    std::string completeness_note;
    ParamSpec params;
};

B3Result search_b3(long exponent_bound, const ParamOptions& options = {});

// The same quotient-bracket machinery run on the B2 surface; positive
// control for the B3 search.
struct B2ControlResult {
    size_t solution_grid_points = 0;
    std::optional<FreePoly> e;
    std::optional<Scalar> a1, a2;
};
B2ControlResult b3_machinery_on_b2(long exponent_bound, const ParamOptions& options = {});

}  // namespace qda
