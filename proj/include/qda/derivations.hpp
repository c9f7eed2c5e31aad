#pragma once
// The twisted derivations (left and right), q-brackets, the operator
// algebra generated by the partials with its hat map, and the e/f/K
// realization of the Chevalley-type generators.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qda/algebra.hpp"
#include "qda/params.hpp"

namespace qda {

// partial_i(xi_j x) = delta_ij x + q_ij xi_j partial_i x
FreePoly apply_partial(int i, const FreePoly& p, const ParamSpec& params);

// Mirror rule acting from the right: (x xi_i) <-d_j = delta_ij x + q_ij ((x)<-d_j) xi_i
FreePoly apply_right_partial(int i, const FreePoly& p, const ParamSpec& params);

// [a, b]_alpha = a b - alpha b a
FreePoly q_bracket(const FreePoly& a, const FreePoly& b, const Scalar& alpha);

// Elements of the free operator algebra: formal sums of d-words.  A
// d-word (i1,...,in) acts with the rightmost partial applied first.
class OperatorPoly {
  public:
    using TermMap = std::map<Word, Scalar, WordOrder>;

    explicit OperatorPoly(const BackendSpec& backend) : backend_(backend) {}
    const TermMap& terms() const { return terms_; }
    const BackendSpec& backend() const { return backend_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Word& dword, const Scalar& c);
    OperatorPoly operator+(const OperatorPoly& o) const;
    OperatorPoly operator*(const OperatorPoly& o) const;  // composition (concatenation)
    OperatorPoly operator*(const Scalar& c) const;

  private:
    BackendSpec backend_;
    TermMap terms_;
};

// The isomorphism J sending xi_{i1}...xi_{in} to the d-word (i1,...,in).
OperatorPoly hat_map(const FreePoly& p);

FreePoly operator_apply(const OperatorPoly& op, const FreePoly& x, const ParamSpec& params);

// Exact test: a homogeneous operator of multidegree d vanishes
// identically iff it annihilates every word of multidegree d.
bool operator_is_zero(const OperatorPoly& op, const ParamSpec& params);

// K^i scales a word by prod_j q_ij^{deg_j}; K_i by prod_j q_ji^{-deg_j}.
enum class KSign { upper, lower };
FreePoly apply_K(int i, KSign sign, const FreePoly& p, const ParamSpec& params);

// e_i = left multiplication by xi_i.
FreePoly apply_e(int i, const FreePoly& p);

// f_i from 2.1.4: on each occurrence u xi_i v of the letter i the value
// picks up u (K_i - K^i)(v); the unique degree-lowering form under which
// the displayed e/f/K relations hold identically.
FreePoly apply_f(int i, const FreePoly& p, const ParamSpec& params);

struct RelationReport {
    bool ok = true;
    std::vector<std::string> failures;  // human-readable witnesses
};

// Checks every 2.1.4 relation as an operator identity on all words of
// total degree <= degree_bound.
RelationReport verify_ef_relations(const ParamSpec& params, int degree_bound);

}  // namespace qda
