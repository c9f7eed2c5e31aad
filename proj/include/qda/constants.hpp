#pragma once
// Constants per multidegree block, the Gram matrix of the symmetric form
// S, its radical (the ideal slice), quotient bases with normal forms, the
// inverse form T, and irreducibility / extension of constants.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qda/derivations.hpp"
#include "qda/linalg.hpp"

namespace qda {

enum class DerivationSide { left, right };

struct ConstantBasis {
    MultiDegree degree;
    std::vector<FreePoly> basis;  // reduced echelon rows over word_basis(degree)
    size_t dimension() const { return basis.size(); }
};

struct SGram {
    MultiDegree degree;
    Matrix matrix;
};

struct IdealSlice {
    MultiDegree degree;
    std::vector<FreePoly> basis;  // echelon-normalized
    size_t dimension() const { return basis.size(); }
};

struct QuotientBasis {
    MultiDegree degree;
    std::vector<Word> representatives;     // non-pivot words of the slice echelon
    std::vector<FreePoly> ideal_basis;     // echelon rows, pivot coefficient 1
    std::vector<size_t> pivot_columns;     // into word_basis(degree)

    // p must be supported on this block; returns p mod the slice,
    // supported on representative words.
    FreePoly reduce(const FreePoly& p) const;
};

// The derivation as a matrix block(d) -> block(d - e_i).
Matrix derivation_matrix(int i, const MultiDegree& d, const ParamSpec& params,
                         DerivationSide side = DerivationSide::left);

// Exact kernel of the stacked derivation matrices on word_basis(d).
ConstantBasis find_constants(const MultiDegree& d, const ParamSpec& params,
                             DerivationSide side = DerivationSide::left);

SGram s_gram(const MultiDegree& d, const ParamSpec& params);

// Radical of the Gram block.  With cross_check the span of u*C*v over
// constants C of multidegree <= d is computed independently and compared;
// disagreement is a fatal internal-consistency error.
IdealSlice ideal_slice(const MultiDegree& d, const ParamSpec& params, bool cross_check = false);

QuotientBasis quotient_basis(const MultiDegree& d, const ParamSpec& params);

// Row vectors (over word_basis(d)) spanning the slice generated by
// constants of multidegree <= d (strictly below d when strictly_lower).
std::vector<std::vector<Scalar>> constant_generated_span(const MultiDegree& d,
                                                         const ParamSpec& params,
                                                         bool strictly_lower,
                                                         DerivationSide side = DerivationSide::left);

struct TGram {
    MultiDegree degree;
    std::vector<size_t> representative_columns;  // = all columns when S is invertible
    Matrix matrix;                               // inverse of S on those coordinates
};

// Inverse of the form S; full matrix inverse at nonsingular blocks, the
// inverse on quotient coordinates otherwise.
TGram t_gram(const MultiDegree& d, const ParamSpec& params);

// True iff c does not lie in the slice generated by constants of strictly
// smaller multidegree.  c must be a homogeneous constant.
bool is_irreducible_constant(const FreePoly& c, const ParamSpec& params);

struct ExtensionResult {
    std::optional<FreePoly> constant;  // C' = C x + corrections
    std::string obstruction;           // set when no nonzero constant of the form exists
};

// Prop 1.4.2 construction: a constant C' = C x + sum_{u,v} u C v found by
// a linear solve over the stated ansatz, or the reported obstruction.
ExtensionResult extend_constant(const FreePoly& c, const Word& x, const ParamSpec& params);

// Memoized per-parameter-point block data; single-threaded helper for the
// heavy searches.
class BlockCache {
  public:
    explicit BlockCache(const ParamSpec& params) : params_(params) {}
    const ParamSpec& params() const { return params_; }

    const ConstantBasis& constants(const MultiDegree& d);
    const QuotientBasis& quotient(const MultiDegree& d);
    // Normal form of a polynomial with arbitrary (mixed) support.
    FreePoly normal_form(const FreePoly& p);

  private:
    const ParamSpec& params_;
    std::map<MultiDegree, ConstantBasis> constants_;
    std::map<MultiDegree, QuotientBasis> quotients_;
};

}  // namespace qda
