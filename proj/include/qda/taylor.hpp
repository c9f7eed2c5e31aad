#pragma once
// Taylor coefficients A (the degree recursion), reconstruction, gradient
// equations partial_i x = y_i, the constant-form pairing C(y), and the
// closed / strongly-closed tests.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qda/constants.hpp"

namespace qda {

struct TaylorCoefficients {
    int max_degree = 0;
    // Index sequence (i1...in) -> the universal left multiplier A^{i1...in}.
    std::map<Word, FreePoly, WordOrder> table;
    std::vector<std::string> gauge_log;  // free choices made at exceptional blocks

    const FreePoly& at(const Word& seq) const;
};

// Particular solution of the degree recursion up to max_degree.  At
// blocks free of constants this is the closed form  (-1)^{n+1}
// (prod_{k<l} q_{i_k i_l}) T^{i_1...i_n}  with T the inverse Gram matrix;
// elsewhere the echelon solve with free variables set to zero.
TaylorCoefficients taylor_coefficients(const ParamSpec& params, int max_degree);

// Exact check that the recursion residual annihilates every word of total
// degree <= degree_bound.
bool taylor_residual_is_zero(const TaylorCoefficients& coeffs, const ParamSpec& params,
                             int degree_bound);

struct Reconstruction {
    FreePoly constant_term;
    bool identity_holds = false;  // derivatives of the constant term all vanish
};

// c(x) = x - sum A^{i...} d_{i1}...d_{in} x, verified to be a constant.
Reconstruction taylor_reconstruct(const FreePoly& x, const ParamSpec& params,
                                  const TaylorCoefficients& coeffs);

// A one-form: N components, y_i in the block d - e_i.
struct OneForm {
    std::vector<FreePoly> components;

    static OneForm zero(const ParamSpec& params);
    static OneForm gradient_of(const FreePoly& x, const ParamSpec& params);
};

// The common block d with y_i in block d - e_i; error when incompatible.
MultiDegree one_form_block(const OneForm& y, const ParamSpec& params);

// C(y): replace the right-most partial of the hatted constant by y.
FreePoly constant_pairing(const FreePoly& c, const OneForm& y, const ParamSpec& params);

struct GradientResult {
    std::optional<FreePoly> solution;
    bool unique = false;
    std::optional<FreePoly> violated_constant;  // set on obstruction
    std::optional<FreePoly> pairing_value;      // the nonzero C(y)
};

GradientResult solve_gradient(const OneForm& y, const MultiDegree& d, const ParamSpec& params);

struct ClosednessReport {
    bool holds = true;
    std::optional<FreePoly> witness_constant;
    std::optional<FreePoly> witness_value;
};

// closed: C(y) = 0 for every degree-2 constant.  strongly closed: C(y) = 0
// for every constant of every degree relevant to y's block.
ClosednessReport is_closed(const OneForm& y, const ParamSpec& params);
ClosednessReport is_strongly_closed(const OneForm& y, const ParamSpec& params);

}  // namespace qda
