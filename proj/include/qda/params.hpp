#pragma once
// The parameter point q = {q_ij}.  Generic position is realized in the
// symbolic backend by the monomial embedding q_ij = c*t^e with distinct
// exponents; constraints are enforced exactly by monomial substitution
// and an explicit collision check guards against unintended relations.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qda/algebra.hpp"
#include "qda/scalar.hpp"

namespace qda {

// One monomial relation  prod q_ij^m  =  c0 * t^e0.
// Product constraints from sigma(...) grammar have c0 = 1, e0 = 0;
// entry assignments carry the assigned monomial on the right.
struct Constraint {
    std::map<std::pair<int, int>, long> powers;  // (i,j) 1-indexed -> exponent
    Rational rhs_coeff = Rational(1);
    long rhs_t_exponent = 0;
    bool is_assignment = false;          // left side is a single q[i,j]
    std::pair<int, int> assigned{0, 0};  // valid when is_assignment
    std::optional<Scalar> explicit_value;  // non-symbolic assignment
    std::string text;

    static Constraint sigma_product(const std::vector<int>& indices);
    // sigma(indices) * q[i,i]^k = 1
    static Constraint sigma_with_diagonal(const std::vector<int>& indices, int i, long k);
    static Constraint parse(const std::string& text, const BackendSpec& backend);
};

struct ParamOptions {
    long exponent_range = 50;      // free exponents drawn from [-range, range]
    int collision_power_bound = 8; // |k| bound in the sigma * q_ii^k scan
    bool even_exponents = false;   // double everything so square roots exist
    unsigned max_retries = 20;
    std::uint64_t seed = 0x9e3779b97f4a7c15ull;
};

class ParamSpec {
  public:
    // Symbolic mode: unconstrained entries get fresh exponents of t and
    // every constraint is enforced by substitution.
    static ParamSpec from_constraints(int n, const std::vector<Constraint>& constraints,
                                      const ParamOptions& options = {});
    // Explicit table; constraints may still pin entries from others.
    static ParamSpec from_table(int n, const BackendSpec& backend,
                                const std::vector<Constraint>& constraints);

    int n_generators() const { return n_; }
    const BackendSpec& backend() const { return backend_; }
    bool symbolic() const { return backend_.kind == Backend::symbolic; }

    const Scalar& q(int i, int j) const;
    Scalar sigma(int i, int j) const { return q(i, j) * q(j, i); }
    // sigma_(s) = prod over ordered pairs of distinct indices in s.
    Scalar sigma_set(const std::vector<int>& s) const;

    Scalar one() const { return Scalar::one(backend_); }
    Scalar zero() const { return Scalar::zero(backend_); }
    Scalar scalar_pow(const Scalar& a, long k) const;

    // K^i and K_i eigenvalues on a word of the given multidegree.
    Scalar kappa_upper(int i, const MultiDegree& d) const;
    Scalar kappa_lower(int i, const MultiDegree& d) const;

    // Symbolic mode only.
    long exponent_of(int i, int j) const;
    const Rational& coeff_of(int i, int j) const;
    // True when the monomial relation represented by pair powers is
    // implied by the requested constraints (rational span test).
    bool relation_implied(const std::map<std::pair<int, int>, long>& powers) const;

    const std::vector<std::string>& constraint_log() const { return log_; }

    // Derived point with q_ij -> c q_ij, q_ji -> q_ji / c (Lemma 1.2.3's
    // rescaling); used by invariance tests.
    ParamSpec rescaled_pair(int i, int j, const Scalar& c) const;

    // Pretty form of a scalar: back-maps t-monomials to a q_ij power when
    // the exponent divides; otherwise the canonical t form.
    std::string render_scalar(const Scalar& s) const;

  private:
    ParamSpec() = default;
    void set_q(int i, int j, Scalar v);
    int idx(int i, int j) const;

    int n_ = 0;
    BackendSpec backend_;
    std::vector<Scalar> q_;
    std::vector<long> exps_;        // symbolic mode
    std::vector<Rational> coeffs_;  // symbolic mode
    // Constraint exponent vectors (over the N^2 lattice) with their t-side,
    // kept for implication tests on monomial relations.
    std::vector<std::vector<Rational>> relation_rows_;
    std::vector<std::string> log_;
};

}  // namespace qda
