#pragma once
// Bounded-degree Hochschild machinery: chains of word tensors, the
// boundary, cochains with the partial-derivative action, the coboundary,
// and the Serre p-form differential restricted to closed chains.

#include <map>
#include <vector>

#include "qda/constants.hpp"

namespace qda {

// Formal sums of tensors a_1 (x) ... (x) a_p, each entry of degree >= 1,
// expanded over word tensors.
class Chain {
  public:
    Chain(int arity, const BackendSpec& backend) : arity_(arity), backend_(backend) {}

    int arity() const { return arity_; }
    const BackendSpec& backend() const { return backend_; }
    const std::map<std::vector<Word>, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const std::vector<Word>& t, const Scalar& c);
    Chain operator+(const Chain& o) const;
    Chain operator*(const Scalar& c) const;

    // Tensor of polynomials, expanded multilinearly.
    static Chain tensor(const std::vector<FreePoly>& factors);

  private:
    int arity_;
    BackendSpec backend_;
    std::map<std::vector<Word>, Scalar> terms_;
};

// The alternating-sum boundary; degree-0 tensor factors are an error.
Chain hochschild_boundary(const Chain& c);

// Finitely supported linear map from p-chains to polynomial values.
class Cochain {
  public:
    Cochain(int arity, const BackendSpec& backend) : arity_(arity), backend_(backend) {}

    int arity() const { return arity_; }
    void set(const std::vector<Word>& t, const FreePoly& value);
    FreePoly evaluate(const std::vector<Word>& t) const;  // 0 when absent
    FreePoly evaluate(const Chain& c) const;

  private:
    int arity_;
    BackendSpec backend_;
    std::map<std::vector<Word>, FreePoly> table_;
};

// (d tau)(a) = pi(a_1) tau(a_2 (x) ... (x) a_p) - tau(boundary a), with
// pi the action through the partials.
FreePoly hochschild_coboundary(const Cochain& tau, const Chain& a, const ParamSpec& params);
// d(d tau) evaluated on a; identically zero.
FreePoly hochschild_coboundary_squared(const Cochain& tau, const Chain& a,
                                       const ParamSpec& params);

// A p-form on the generator span: values on p-tuples of generator indices.
struct PForm {
    int arity = 1;
    std::map<std::vector<int>, FreePoly> values;

    FreePoly value(const std::vector<int>& idx, const BackendSpec& backend) const;
};

// Entrywise normal form of a chain (the quotient is where Serre chains
// live; closedness is tested there).
Chain chain_normal_form(const Chain& c, BlockCache& cache);

// dz(a) = pi(a_(0)) z(a_(1) (x) ... (x) a_(p)) for a chain, closed in the
// quotient, whose tail entries are single generators.
FreePoly serre_cochain_d(const PForm& z, const Chain& a, const ParamSpec& params,
                         int arity_bound = 2);

// Strong closedness of a p-form: every constant contracted into the first
// slot annihilates it (checked over all constants of total degree <=
// degree_bound and all index tails).
bool pform_is_strongly_closed(const PForm& z, const ParamSpec& params, int degree_bound);

}  // namespace qda
