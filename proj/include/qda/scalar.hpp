#pragma once
// Exact scalar arithmetic behind one tagged value type: rationals Q,
// cyclotomic fields Q(zeta_n), and the univariate rational-function
// field Q(t).  Every coefficient in the engine is one of these.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace qda {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

using Rational = mpq_class;

std::string rational_to_string(const Rational& r);
Rational rational_from_string(const std::string& s);

// ---------------------------------------------------------------------
// Dense univariate polynomials over Q, coefficient c[i] of t^i.
// Invariant: no trailing zero coefficients (empty vector = zero).

class RatPoly {
  public:
    RatPoly() = default;
    explicit RatPoly(const Rational& c);
    RatPoly(std::vector<Rational> coeffs);

    static RatPoly variable();
    static RatPoly monomial(const Rational& c, int exp);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const;
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int i) const;
    Rational leading() const;

    RatPoly operator+(const RatPoly& o) const;
    RatPoly operator-(const RatPoly& o) const;
    RatPoly operator-() const;
    RatPoly operator*(const RatPoly& o) const;
    RatPoly operator*(const Rational& c) const;
    bool operator==(const RatPoly& o) const { return c_ == o.c_; }

    // Euclidean division; divisor must be nonzero.
    static void divrem(const RatPoly& a, const RatPoly& b, RatPoly& q, RatPoly& r);
    RatPoly divexact(const RatPoly& b) const;  // throws if remainder != 0

    // Monic gcd, computed with a primitive pseudo-remainder sequence
    // over Z to avoid coefficient blowup.
    static RatPoly gcd(const RatPoly& a, const RatPoly& b);
    // g = gcd(a,b) monic with u*a + v*b = g.
    static RatPoly xgcd(const RatPoly& a, const RatPoly& b, RatPoly& u, RatPoly& v);

    RatPoly make_monic() const;
    Rational evaluate(const Rational& x) const;
    // Multiplicity of the root x (0 if p(x) != 0).
    int valuation_at(const Rational& x) const;
    RatPoly deflate_at(const Rational& x, int k) const;  // divide by (t-x)^k

    std::string to_string(const std::string& var = "t") const;

  private:
    void trim();
    std::vector<Rational> c_;
};

// Phi_n, the n-th cyclotomic polynomial (integer coefficients).
RatPoly cyclotomic_polynomial(unsigned n);

// ---------------------------------------------------------------------
// Residues mod Phi_n: elements of Q(zeta_n).

class Cyclotomic {
  public:
    Cyclotomic() : order_(1) {}
    Cyclotomic(unsigned order, const Rational& c);
    // Residue of the given polynomial (in zeta) mod Phi_order.
    Cyclotomic(unsigned order, const RatPoly& p);
    static Cyclotomic zeta(unsigned order);  // the generator itself

    unsigned order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_zero() const;
    bool is_rational() const;
    Rational rational_part() const;  // requires is_rational()

    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator-() const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic inverse() const;
    bool operator==(const Cyclotomic& o) const;

    std::string to_string(const std::string& var = "z") const;

  private:
    void check_same_order(const Cyclotomic& o) const;
    unsigned order_;
    std::vector<Rational> c_;  // length deg Phi_order, low degree first
};

// ---------------------------------------------------------------------
// Rational functions num/den in Q(t); den monic, gcd(num,den) = 1.

class RationalFunction {
  public:
    RationalFunction() = default;  // zero
    explicit RationalFunction(const Rational& c);
    explicit RationalFunction(const RatPoly& num);
    RationalFunction(const RatPoly& num, const RatPoly& den);

    static RationalFunction variable() { return RationalFunction(RatPoly::variable()); }
    // c * t^e with e of either sign.
    static RationalFunction monomial(const Rational& c, long e);

    const RatPoly& num() const { return num_; }
    const RatPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }
    // c*t^e detection; returns false for anything else.
    bool as_monomial(Rational& c, long& e) const;

    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator-() const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;
    RationalFunction inverse() const;
    bool operator==(const RationalFunction& o) const;

    Rational evaluate(const Rational& t0) const;  // throws on pole
    std::string to_string(const std::string& var = "t") const;

  private:
    void normalize();
    RatPoly num_;
    RatPoly den_ = RatPoly(Rational(1));
};

// ---------------------------------------------------------------------

enum class Backend : std::uint8_t { rational, cyclotomic, symbolic };

std::string backend_name(Backend b);

struct BackendSpec {
    Backend kind = Backend::rational;
    unsigned cyclotomic_order = 1;

    bool operator==(const BackendSpec&) const = default;
};

// The tagged scalar.  All elements of one computation share a backend;
// mixing backends is an error, not a coercion.
class Scalar {
  public:
    Scalar() : v_(Rational(0)) {}
    explicit Scalar(Rational r) : v_(std::move(r)) {}
    explicit Scalar(Cyclotomic c) : v_(std::move(c)) {}
    explicit Scalar(RationalFunction f) : v_(std::move(f)) {}

    static Scalar zero(const BackendSpec& b);
    static Scalar one(const BackendSpec& b);
    static Scalar from_int(long n, const BackendSpec& b);
    static Scalar from_rational(const Rational& r, const BackendSpec& b);

    Backend backend() const;
    BackendSpec backend_spec() const;
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator-() const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar inverse() const;
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    const Rational& as_rational() const;
    const Cyclotomic& as_cyclotomic() const;
    const RationalFunction& as_ratfunc() const;

    // Exact square root; throws Error when none exists in the backend.
    Scalar sqrt() const;

    // Symbolic backend only: substitute t = t0 (exact, rational result).
    Scalar evaluate_t(const Rational& t0) const;

    std::string to_string() const;

  private:
    std::variant<Rational, Cyclotomic, RationalFunction> v_;
};

// ---------------------------------------------------------------------
// q-combinatorics ([r]_q, [r]_q!, Gaussian binomials), per 1.1.2 / 2.2.

Scalar q_integer(unsigned r, const Scalar& q);
Scalar q_factorial(unsigned r, const Scalar& q);
// [k choose m]_q = [k]!/([m]![k-m]!); a vanishing denominator factorial
// (q at a root of unity) is reported as an error, not worked around.
Scalar q_binomial(unsigned k, unsigned m, const Scalar& q);

}  // namespace qda
