#include "qda/scalar.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace qda {

std::string rational_to_string(const Rational& r) {
    return r.get_str();
}

Rational rational_from_string(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw Error("bad rational literal: '" + s + "'");
    r.canonicalize();
    if (r.get_den() < 0) throw Error("bad rational literal: '" + s + "'");
    return r;
}

// ---------------------------------------------------------------------
// RatPoly

RatPoly::RatPoly(const Rational& c) {
    if (c != 0) c_.push_back(c);
}

RatPoly::RatPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

RatPoly RatPoly::variable() { return monomial(Rational(1), 1); }

RatPoly RatPoly::monomial(const Rational& c, int exp) {
    RatPoly p;
    if (c != 0) {
        p.c_.assign(exp + 1, Rational(0));
        p.c_[exp] = c;
    }
    return p;
}

void RatPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

bool RatPoly::is_one() const { return c_.size() == 1 && c_[0] == 1; }

Rational RatPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
    return c_[i];
}

Rational RatPoly::leading() const {
    if (c_.empty()) return Rational(0);
    return c_.back();
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
    RatPoly r;
    r.c_.resize(std::max(c_.size(), o.c_.size()), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] += o.c_[i];
    r.trim();
    return r;
}

RatPoly RatPoly::operator-(const RatPoly& o) const { return *this + (-o); }

RatPoly RatPoly::operator-() const {
    RatPoly r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

RatPoly RatPoly::operator*(const RatPoly& o) const {
    if (is_zero() || o.is_zero()) return RatPoly();
    RatPoly r;
    r.c_.assign(c_.size() + o.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j)
            if (o.c_[j] != 0) r.c_[i + j] += c_[i] * o.c_[j];
    }
    r.trim();
    return r;
}

RatPoly RatPoly::operator*(const Rational& c) const {
    if (c == 0) return RatPoly();
    RatPoly r(*this);
    for (auto& x : r.c_) x *= c;
    return r;
}

void RatPoly::divrem(const RatPoly& a, const RatPoly& b, RatPoly& q, RatPoly& r) {
    if (b.is_zero()) throw Error("polynomial division by zero");
    q = RatPoly();
    r = a;
    const int db = b.degree();
    const Rational lb = b.leading();
    while (!r.is_zero() && r.degree() >= db) {
        const int k = r.degree() - db;
        const Rational c = r.leading() / lb;
        if (q.c_.size() < static_cast<size_t>(k + 1)) q.c_.resize(k + 1, Rational(0));
        q.c_[k] += c;
        for (int i = 0; i <= db; ++i) r.c_[i + k] -= c * b.c_[i];
        r.trim();
    }
    q.trim();
}

RatPoly RatPoly::divexact(const RatPoly& b) const {
    RatPoly q, r;
    divrem(*this, b, q, r);
    if (!r.is_zero()) throw Error("inexact polynomial division");
    return q;
}

namespace {

// Integer model of a rational polynomial: primitive part with positive
// leading coefficient.  Used by the PRS gcd.
std::vector<mpz_class> primitive_int(const RatPoly& p) {
    mpz_class den_lcm(1);
    for (const auto& c : p.coeffs()) {
        mpz_class d = c.get_den();
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
        den_lcm = den_lcm / g * d;
    }
    std::vector<mpz_class> z(p.coeffs().size());
    mpz_class content(0);
    for (size_t i = 0; i < z.size(); ++i) {
        Rational c = p.coeffs()[i] * Rational(den_lcm);
        z[i] = c.get_num();
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z[i].get_mpz_t());
    }
    if (content != 0) {
        for (auto& c : z) c /= content;
    }
    if (!z.empty() && z.back() < 0)
        for (auto& c : z) c = -c;
    return z;
}

// prem(a, b): pseudo-remainder of primitive integer polynomials.
std::vector<mpz_class> pseudo_rem(std::vector<mpz_class> a, const std::vector<mpz_class>& b) {
    const size_t db = b.size() - 1;
    const mpz_class& lb = b.back();
    while (a.size() >= b.size() && !a.empty()) {
        mpz_class lc = a.back();
        const size_t k = a.size() - b.size();
        for (auto& c : a) c *= lb;
        for (size_t i = 0; i <= db; ++i) a[i + k] -= lc * b[i];
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    return a;
}

std::vector<mpz_class> int_primitive_part(std::vector<mpz_class> z) {
    mpz_class content(0);
    for (const auto& c : z) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
    if (content != 0)
        for (auto& c : z) c /= content;
    if (!z.empty() && z.back() < 0)
        for (auto& c : z) c = -c;
    return z;
}

}  // namespace

RatPoly RatPoly::gcd(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero()) return b.make_monic();
    if (b.is_zero()) return a.make_monic();
    if (a.degree() == 0 || b.degree() == 0) return RatPoly(Rational(1));
    std::vector<mpz_class> u = primitive_int(a), v = primitive_int(b);
    if (u.size() < v.size()) std::swap(u, v);
    while (!v.empty()) {
        auto r = int_primitive_part(pseudo_rem(u, v));
        u = std::move(v);
        v = std::move(r);
    }
    std::vector<Rational> c(u.size());
    for (size_t i = 0; i < u.size(); ++i) c[i] = Rational(u[i]);
    return RatPoly(std::move(c)).make_monic();
}

RatPoly RatPoly::xgcd(const RatPoly& a, const RatPoly& b, RatPoly& u, RatPoly& v) {
    // Plain extended Euclid over Q; only used at cyclotomic degrees.
    RatPoly r0 = a, r1 = b;
    RatPoly u0(Rational(1)), u1, v0, v1(Rational(1));
    while (!r1.is_zero()) {
        RatPoly q, r;
        divrem(r0, r1, q, r);
        RatPoly u2 = u0 - q * u1;
        RatPoly v2 = v0 - q * v1;
        r0 = r1; r1 = r;
        u0 = u1; u1 = u2;
        v0 = v1; v1 = v2;
    }
    if (r0.is_zero()) { u = RatPoly(); v = RatPoly(); return RatPoly(); }
    Rational lead = r0.leading();
    u = u0 * (Rational(1) / lead);
    v = v0 * (Rational(1) / lead);
    return r0.make_monic();
}

RatPoly RatPoly::make_monic() const {
    if (is_zero()) return *this;
    return *this * (Rational(1) / leading());
}

Rational RatPoly::evaluate(const Rational& x) const {
    Rational r(0);
    for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
}

int RatPoly::valuation_at(const Rational& x) const {
    if (is_zero()) throw Error("valuation of zero polynomial");
    RatPoly p = *this;
    RatPoly lin({-x, Rational(1)});
    int v = 0;
    while (p.evaluate(x) == 0) {
        p = p.divexact(lin);
        ++v;
    }
    return v;
}

RatPoly RatPoly::deflate_at(const Rational& x, int k) const {
    RatPoly p = *this;
    RatPoly lin({-x, Rational(1)});
    for (int i = 0; i < k; ++i) p = p.divexact(lin);
    return p;
}

std::string RatPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = c_[i];
        if (c == 0) continue;
        Rational a = abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        const bool unit = (a == 1);
        if (i == 0) {
            out << rational_to_string(a);
        } else {
            if (!unit) out << rational_to_string(a) << "*";
            out << var;
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

RatPoly cyclotomic_polynomial(unsigned n) {
    if (n == 0) throw Error("cyclotomic_polynomial: n must be positive");
    static std::map<unsigned, RatPoly> cache;
    static std::mutex mtx;
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    // x^n - 1 divided by the product of Phi_d over the proper divisors d.
    std::vector<Rational> xn(n + 1, Rational(0));
    xn[0] = -1;
    xn[n] = 1;
    RatPoly p{std::vector<Rational>(xn)};
    for (unsigned d = 1; d < n; ++d)
        if (n % d == 0) p = p.divexact(cyclotomic_polynomial(d));
    std::lock_guard<std::mutex> lock(mtx);
    cache.emplace(n, p);
    return p;
}

// ---------------------------------------------------------------------
// Cyclotomic

Cyclotomic::Cyclotomic(unsigned order, const Rational& c) : order_(order) {
    const int deg = cyclotomic_polynomial(order).degree();
    c_.assign(deg, Rational(0));
    if (deg > 0 && c != 0) c_[0] = c;
    if (deg == 0) throw Error("cyclotomic order must be >= 1");
}

Cyclotomic::Cyclotomic(unsigned order, const RatPoly& p) : order_(order) {
    const RatPoly phi = cyclotomic_polynomial(order);
    RatPoly q, r;
    RatPoly::divrem(p, phi, q, r);
    c_.assign(phi.degree(), Rational(0));
    for (int i = 0; i <= r.degree(); ++i) c_[i] = r.coeff(i);
}

Cyclotomic Cyclotomic::zeta(unsigned order) {
    return Cyclotomic(order, RatPoly::variable());
}

bool Cyclotomic::is_zero() const {
    for (const auto& c : c_)
        if (c != 0) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rational Cyclotomic::rational_part() const {
    if (!is_rational()) throw Error("cyclotomic value is not rational");
    return c_.empty() ? Rational(0) : c_[0];
}

void Cyclotomic::check_same_order(const Cyclotomic& o) const {
    if (order_ != o.order_) throw Error("cyclotomic order mismatch");
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
    check_same_order(o);
    Cyclotomic r(*this);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
    return r;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    check_same_order(o);
    return Cyclotomic(order_, RatPoly(std::vector<Rational>(c_)) *
                                  RatPoly(std::vector<Rational>(o.c_)));
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw Error("division by zero");
    RatPoly u, v;
    RatPoly g = RatPoly::xgcd(RatPoly(std::vector<Rational>(c_)),
                              cyclotomic_polynomial(order_), u, v);
    if (g.degree() != 0) throw Error("cyclotomic inverse failed");  // Phi_n squarefree
    return Cyclotomic(order_, u * (Rational(1) / g.coeff(0)));
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
    return order_ == o.order_ && c_ == o.c_;
}

std::string Cyclotomic::to_string(const std::string& var) const {
    return RatPoly(std::vector<Rational>(c_)).to_string(var);
}

// ---------------------------------------------------------------------
// RationalFunction

RationalFunction::RationalFunction(const Rational& c) : num_(c) {}

RationalFunction::RationalFunction(const RatPoly& num) : num_(num) {}

RationalFunction::RationalFunction(const RatPoly& num, const RatPoly& den)
    : num_(num), den_(den) {
    normalize();
}

RationalFunction RationalFunction::monomial(const Rational& c, long e) {
    if (e >= 0) return RationalFunction(RatPoly::monomial(c, static_cast<int>(e)));
    return RationalFunction(RatPoly(c), RatPoly::monomial(Rational(1), static_cast<int>(-e)));
}

void RationalFunction::normalize() {
    if (den_.is_zero()) throw Error("division by zero");
    if (num_.is_zero()) {
        den_ = RatPoly(Rational(1));
        return;
    }
    RatPoly g = RatPoly::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.divexact(g);
        den_ = den_.divexact(g);
    }
    Rational lead = den_.leading();
    if (lead != 1) {
        Rational inv = Rational(1) / lead;
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

bool RationalFunction::as_monomial(Rational& c, long& e) const {
    const RatPoly* p = nullptr;
    int sign = 1;
    if (den_.is_one()) {
        p = &num_;
    } else if (num_.degree() == 0 && den_.coeff(0) == 0) {
        // c / t^k with monic t^k
        for (int i = 1; i < den_.degree(); ++i)
            if (den_.coeff(i) != 0) return false;
        c = num_.coeff(0);
        e = -den_.degree();
        return true;
    } else {
        return false;
    }
    (void)sign;
    if (p->is_zero()) return false;
    for (int i = 0; i < p->degree(); ++i)
        if (p->coeff(i) != 0) return false;
    c = p->leading();
    e = p->degree();
    return true;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r(*this);
    r.num_ = -r.num_;
    return r;
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    // Cross-cancel first; keeps intermediate degrees down.
    RatPoly g1 = RatPoly::gcd(num_, o.den_);
    RatPoly g2 = RatPoly::gcd(o.num_, den_);
    RatPoly n1 = g1.degree() > 0 ? num_.divexact(g1) : num_;
    RatPoly d2 = g1.degree() > 0 ? o.den_.divexact(g1) : o.den_;
    RatPoly n2 = g2.degree() > 0 ? o.num_.divexact(g2) : o.num_;
    RatPoly d1 = g2.degree() > 0 ? den_.divexact(g2) : den_;
    return RationalFunction(n1 * n2, d1 * d2);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    return *this * o.inverse();
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) throw Error("division by zero");
    return RationalFunction(den_, num_);
}

bool RationalFunction::operator==(const RationalFunction& o) const {
    return num_ == o.num_ && den_ == o.den_;
}

Rational RationalFunction::evaluate(const Rational& t0) const {
    Rational d = den_.evaluate(t0);
    if (d == 0) throw Error("pole at t = " + rational_to_string(t0));
    return num_.evaluate(t0) / d;
}

std::string RationalFunction::to_string(const std::string& var) const {
    if (den_.is_one()) {
        if (num_.degree() <= 0) return num_.to_string(var);
        return "(" + num_.to_string(var) + ")";
    }
    std::string n = num_.degree() <= 0 ? num_.to_string(var) : "(" + num_.to_string(var) + ")";
    return n + "/(" + den_.to_string(var) + ")";
}

// ---------------------------------------------------------------------
// Scalar

std::string backend_name(Backend b) {
    switch (b) {
        case Backend::rational: return "rational";
        case Backend::cyclotomic: return "cyclotomic";
        case Backend::symbolic: return "symbolic";
    }
    return "?";
}

Scalar Scalar::zero(const BackendSpec& b) { return from_rational(Rational(0), b); }
Scalar Scalar::one(const BackendSpec& b) { return from_rational(Rational(1), b); }

Scalar Scalar::from_int(long n, const BackendSpec& b) { return from_rational(Rational(n), b); }

Scalar Scalar::from_rational(const Rational& r, const BackendSpec& b) {
    switch (b.kind) {
        case Backend::rational: return Scalar(r);
        case Backend::cyclotomic: return Scalar(Cyclotomic(b.cyclotomic_order, r));
        case Backend::symbolic: return Scalar(RationalFunction(r));
    }
    throw Error("bad backend");
}

Backend Scalar::backend() const {
    if (std::holds_alternative<Rational>(v_)) return Backend::rational;
    if (std::holds_alternative<Cyclotomic>(v_)) return Backend::cyclotomic;
    return Backend::symbolic;
}

BackendSpec Scalar::backend_spec() const {
    BackendSpec b;
    b.kind = backend();
    if (b.kind == Backend::cyclotomic) b.cyclotomic_order = as_cyclotomic().order();
    return b;
}

bool Scalar::is_zero() const {
    switch (backend()) {
        case Backend::rational: return as_rational() == 0;
        case Backend::cyclotomic: return as_cyclotomic().is_zero();
        case Backend::symbolic: return as_ratfunc().is_zero();
    }
    return false;
}

bool Scalar::is_one() const {
    switch (backend()) {
        case Backend::rational: return as_rational() == 1;
        case Backend::cyclotomic: {
            const auto& c = as_cyclotomic();
            return c.is_rational() && c.rational_part() == 1;
        }
        case Backend::symbolic: {
            const auto& f = as_ratfunc();
            return f.is_polynomial() && f.num().is_one();
        }
    }
    return false;
}

const Rational& Scalar::as_rational() const {
    if (auto* p = std::get_if<Rational>(&v_)) return *p;
    throw Error("scalar backend mismatch");
}
const Cyclotomic& Scalar::as_cyclotomic() const {
    if (auto* p = std::get_if<Cyclotomic>(&v_)) return *p;
    throw Error("scalar backend mismatch");
}
const RationalFunction& Scalar::as_ratfunc() const {
    if (auto* p = std::get_if<RationalFunction>(&v_)) return *p;
    throw Error("scalar backend mismatch");
}

namespace {
void check_backend(const Scalar& a, const Scalar& b) {
    if (a.backend() != b.backend()) throw Error("scalar backend mismatch");
}
}  // namespace

Scalar Scalar::operator+(const Scalar& o) const {
    check_backend(*this, o);
    switch (backend()) {
        case Backend::rational: return Scalar(as_rational() + o.as_rational());
        case Backend::cyclotomic: return Scalar(as_cyclotomic() + o.as_cyclotomic());
        case Backend::symbolic: return Scalar(as_ratfunc() + o.as_ratfunc());
    }
    throw Error("bad backend");
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_backend(*this, o);
    switch (backend()) {
        case Backend::rational: return Scalar(as_rational() - o.as_rational());
        case Backend::cyclotomic: return Scalar(as_cyclotomic() - o.as_cyclotomic());
        case Backend::symbolic: return Scalar(as_ratfunc() - o.as_ratfunc());
    }
    throw Error("bad backend");
}

Scalar Scalar::operator-() const {
    switch (backend()) {
        case Backend::rational: return Scalar(Rational(-as_rational()));
        case Backend::cyclotomic: return Scalar(-as_cyclotomic());
        case Backend::symbolic: return Scalar(-as_ratfunc());
    }
    throw Error("bad backend");
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_backend(*this, o);
    switch (backend()) {
        case Backend::rational: return Scalar(as_rational() * o.as_rational());
        case Backend::cyclotomic: return Scalar(as_cyclotomic() * o.as_cyclotomic());
        case Backend::symbolic: return Scalar(as_ratfunc() * o.as_ratfunc());
    }
    throw Error("bad backend");
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::inverse() const {
    if (is_zero()) throw Error("division by zero");
    switch (backend()) {
        case Backend::rational: return Scalar(Rational(1) / as_rational());
        case Backend::cyclotomic: return Scalar(as_cyclotomic().inverse());
        case Backend::symbolic: return Scalar(as_ratfunc().inverse());
    }
    throw Error("bad backend");
}

bool Scalar::operator==(const Scalar& o) const {
    check_backend(*this, o);
    switch (backend()) {
        case Backend::rational: return as_rational() == o.as_rational();
        case Backend::cyclotomic: return as_cyclotomic() == o.as_cyclotomic();
        case Backend::symbolic: return as_ratfunc() == o.as_ratfunc();
    }
    return false;
}

namespace {
bool rational_sqrt(const Rational& r, Rational& out) {
    if (r < 0) return false;
    mpz_class n = r.get_num(), d = r.get_den();
    mpz_class sn, sd;
    if (mpz_root(sn.get_mpz_t(), n.get_mpz_t(), 2) == 0 && n != 0 && sn * sn != n) return false;
    if (sn * sn != n) return false;
    if (mpz_root(sd.get_mpz_t(), d.get_mpz_t(), 2) == 0 && sd * sd != d) return false;
    if (sd * sd != d) return false;
    out = Rational(sn) / Rational(sd);
    return true;
}
}  // namespace

Scalar Scalar::sqrt() const {
    switch (backend()) {
        case Backend::rational: {
            Rational s;
            if (!rational_sqrt(as_rational(), s))
                throw Error("square root unavailable in backend");
            return Scalar(s);
        }
        case Backend::cyclotomic: {
            const auto& c = as_cyclotomic();
            Rational s;
            if (c.is_rational() && rational_sqrt(c.rational_part(), s))
                return Scalar(Cyclotomic(c.order(), s));
            throw Error("square root unavailable in backend");
        }
        case Backend::symbolic: {
            Rational c;
            long e;
            if (as_ratfunc().as_monomial(c, e)) {
                Rational s;
                if (e % 2 == 0 && rational_sqrt(c, s))
                    return Scalar(RationalFunction::monomial(s, e / 2));
            }
            throw Error("square root unavailable in backend (need even exponents)");
        }
    }
    throw Error("bad backend");
}

Scalar Scalar::evaluate_t(const Rational& t0) const {
    if (backend() != Backend::symbolic) throw Error("evaluate_t: symbolic backend required");
    return Scalar(as_ratfunc().evaluate(t0));
}

std::string Scalar::to_string() const {
    switch (backend()) {
        case Backend::rational: return rational_to_string(as_rational());
        case Backend::cyclotomic: return as_cyclotomic().to_string();
        case Backend::symbolic: return as_ratfunc().to_string();
    }
    return "?";
}

// ---------------------------------------------------------------------
// q-combinatorics

Scalar q_integer(unsigned r, const Scalar& q) {
    Scalar sum = Scalar::zero(q.backend_spec());
    Scalar pw = Scalar::one(q.backend_spec());
    for (unsigned j = 0; j < r; ++j) {
        sum += pw;
        pw *= q;
    }
    return sum;
}

Scalar q_factorial(unsigned r, const Scalar& q) {
    Scalar prod = Scalar::one(q.backend_spec());
    for (unsigned k = 1; k <= r; ++k) prod *= q_integer(k, q);
    return prod;
}

Scalar q_binomial(unsigned k, unsigned m, const Scalar& q) {
    if (m > k) throw Error("q_binomial: need 0 <= m <= k");
    Scalar dm = q_factorial(m, q);
    Scalar dk = q_factorial(k - m, q);
    if (dm.is_zero() || dk.is_zero())
        throw Error("q_binomial: q-factorial vanishes (root of unity); use the symbolic backend");
    return q_factorial(k, q) / (dm * dk);
}

}  // namespace qda
