#include "qda/params.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <set>
#include <sstream>

#include "qda/linalg.hpp"

namespace qda {

// ---------------------------------------------------------------------
// Constraint construction and parsing

Constraint Constraint::sigma_product(const std::vector<int>& indices) {
    Constraint c;
    for (int a : indices)
        for (int b : indices)
            if (a != b) c.powers[{a, b}] += 1;
    std::ostringstream os;
    os << "sigma(";
    for (size_t k = 0; k < indices.size(); ++k) os << (k ? "," : "") << indices[k];
    os << ") = 1";
    c.text = os.str();
    return c;
}

Constraint Constraint::sigma_with_diagonal(const std::vector<int>& indices, int i, long k) {
    Constraint c = sigma_product(indices);
    c.powers[{i, i}] += k;
    std::ostringstream os;
    os << "sigma(";
    for (size_t j = 0; j < indices.size(); ++j) os << (j ? "," : "") << indices[j];
    os << ")*q[" << i << "," << i << "]^" << k << " = 1";
    c.text = os.str();
    return c;
}

namespace {

struct Lexer {
    std::string s;
    size_t p = 0;
    void skip() {
        while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
    }
    bool eat(char c) {
        skip();
        if (p < s.size() && s[p] == c) {
            ++p;
            return true;
        }
        return false;
    }
    bool eat_word(const std::string& w) {
        skip();
        if (s.compare(p, w.size(), w) == 0) {
            p += w.size();
            return true;
        }
        return false;
    }
    long integer() {
        skip();
        size_t start = p;
        if (p < s.size() && (s[p] == '-' || s[p] == '+')) ++p;
        while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
        if (p == start) throw Error("expected integer in '" + s + "' at " + std::to_string(start));
        return std::stol(s.substr(start, p - start));
    }
    Rational rational() {
        long num = integer();
        if (eat('/')) {
            long den = integer();
            return Rational(num) / Rational(den);
        }
        return Rational(num);
    }
    bool at_end() {
        skip();
        return p >= s.size();
    }
    char peek() {
        skip();
        return p < s.size() ? s[p] : '\0';
    }
};

std::pair<int, int> parse_q_entry(Lexer& lx) {
    if (!lx.eat('[')) throw Error("expected '[' after q");
    int i = static_cast<int>(lx.integer());
    if (!lx.eat(',')) throw Error("expected ',' in q[i,j]");
    int j = static_cast<int>(lx.integer());
    if (!lx.eat(']')) throw Error("expected ']' in q[i,j]");
    return {i, j};
}

}  // namespace

Constraint Constraint::parse(const std::string& text, const BackendSpec& backend) {
    auto eq = text.find('=');
    if (eq == std::string::npos) throw Error("constraint needs '=': " + text);
    Constraint c;
    c.text = text;

    // Left side: product of sigma(...) and q[i,j]^k factors.
    Lexer lhs{text.substr(0, eq)};
    int lhs_factors = 0;
    std::pair<int, int> first_entry{0, 0};
    bool first_is_plain_q = false;
    for (;;) {
        if (lhs.eat_word("sigma")) {
            if (!lhs.eat('(')) throw Error("expected '(' after sigma");
            std::vector<int> idx;
            idx.push_back(static_cast<int>(lhs.integer()));
            while (lhs.eat(',')) idx.push_back(static_cast<int>(lhs.integer()));
            if (!lhs.eat(')')) throw Error("expected ')' after sigma indices");
            if (idx.size() < 2) throw Error("sigma needs at least two indices");
            long e = lhs.eat('^') ? lhs.integer() : 1;
            for (int a : idx)
                for (int b : idx)
                    if (a != b) c.powers[{a, b}] += e;
            first_is_plain_q = false;
        } else if (lhs.eat_word("q")) {
            auto ij = parse_q_entry(lhs);
            long e = lhs.eat('^') ? lhs.integer() : 1;
            c.powers[ij] += e;
            if (lhs_factors == 0) {
                first_entry = ij;
                first_is_plain_q = (e == 1);
            }
        } else {
            throw Error("bad constraint factor in: " + text);
        }
        ++lhs_factors;
        if (!lhs.eat('*')) break;
    }
    if (!lhs.at_end()) throw Error("trailing input in constraint: " + text);

    // Right side: "1", a scalar literal, or a monomial.
    Lexer rhs{text.substr(eq + 1)};
    bool rhs_trivial = false;
    {
        Lexer probe = rhs;
        if (probe.peek() == '1') {
            probe.p++;
            if (probe.at_end()) rhs_trivial = true;
        }
    }
    if (rhs_trivial) {
        return c;
    }

    // Assignment form: single plain q[i,j] on the left.
    if (lhs_factors == 1 && first_is_plain_q) {
        c.is_assignment = true;
        c.assigned = first_entry;
    }

    if (backend.kind != Backend::symbolic) {
        // Explicit scalar value (rational, or polynomial in z for the
        // cyclotomic backend).
        if (!c.is_assignment) throw Error("explicit value needs q[i,j] = ... form: " + text);
        Scalar value = Scalar::zero(backend);
        bool have = false;
        // sum of (rational)(*z^k)? terms
        for (;;) {
            bool neg = false;
            if (rhs.eat('-')) neg = true;
            else rhs.eat('+');
            Rational coeff(1);
            bool saw_coeff = false;
            if (std::isdigit(static_cast<unsigned char>(rhs.peek()))) {
                coeff = rhs.rational();
                saw_coeff = true;
            }
            long zexp = 0;
            if ((saw_coeff && rhs.eat('*')) || !saw_coeff) {
                if (rhs.eat_word("z")) {
                    zexp = rhs.eat('^') ? rhs.integer() : 1;
                } else if (!saw_coeff) {
                    throw Error("bad scalar literal in: " + text);
                }
            }
            if (neg) coeff = -coeff;
            Scalar term = Scalar::from_rational(coeff, backend);
            if (zexp != 0) {
                if (backend.kind != Backend::cyclotomic)
                    throw Error("'z' literal needs the cyclotomic backend: " + text);
                Scalar z{Cyclotomic::zeta(backend.cyclotomic_order)};
                for (long k = 0; k < zexp; ++k) term = term * z;
            }
            value += term;
            have = true;
            char next = rhs.peek();
            if (next != '+' && next != '-') break;
        }
        if (!have || !rhs.at_end()) throw Error("bad scalar literal in: " + text);
        c.explicit_value = value;
        return c;
    }

    // Symbolic right side: monomial  c * t^e * prod q[a,b]^k.
    for (;;) {
        char next = rhs.peek();
        if (next == '-' || next == '+' || std::isdigit(static_cast<unsigned char>(next))) {
            bool neg = rhs.eat('-');
            if (!neg) rhs.eat('+');
            Rational r = rhs.rational();
            c.rhs_coeff *= neg ? -r : r;
        } else if (rhs.eat_word("t")) {
            c.rhs_t_exponent += rhs.eat('^') ? rhs.integer() : 1;
        } else if (rhs.eat_word("q")) {
            auto ij = parse_q_entry(rhs);
            long e = rhs.eat('^') ? rhs.integer() : 1;
            c.powers[ij] -= e;  // move to the left side
        } else {
            throw Error("bad monomial in: " + text);
        }
        if (!rhs.eat('*')) break;
    }
    if (!rhs.at_end()) throw Error("trailing input in constraint: " + text);
    return c;
}

// ---------------------------------------------------------------------
// ParamSpec

int ParamSpec::idx(int i, int j) const {
    if (i < 1 || j < 1 || i > n_ || j > n_) throw Error("parameter index out of range");
    return (i - 1) * n_ + (j - 1);
}

const Scalar& ParamSpec::q(int i, int j) const { return q_[idx(i, j)]; }

void ParamSpec::set_q(int i, int j, Scalar v) { q_[idx(i, j)] = std::move(v); }

Scalar ParamSpec::sigma_set(const std::vector<int>& s) const {
    Scalar prod = one();
    for (int a : s)
        for (int b : s)
            if (a != b) prod *= q(a, b);
    return prod;
}

Scalar ParamSpec::scalar_pow(const Scalar& a, long k) const {
    Scalar base = k < 0 ? a.inverse() : a;
    unsigned long e = k < 0 ? -k : k;
    Scalar r = one();
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

Scalar ParamSpec::kappa_upper(int i, const MultiDegree& d) const {
    Scalar r = one();
    for (size_t j = 0; j < d.size(); ++j)
        if (d[j]) r *= scalar_pow(q(i, static_cast<int>(j + 1)), d[j]);
    return r;
}

Scalar ParamSpec::kappa_lower(int i, const MultiDegree& d) const {
    Scalar r = one();
    for (size_t j = 0; j < d.size(); ++j)
        if (d[j]) r *= scalar_pow(q(static_cast<int>(j + 1), i), -d[j]);
    return r;
}

long ParamSpec::exponent_of(int i, int j) const {
    if (exps_.empty()) throw Error("exponent table unavailable");
    return exps_[idx(i, j)];
}

const Rational& ParamSpec::coeff_of(int i, int j) const {
    if (coeffs_.empty()) throw Error("coefficient table unavailable");
    return coeffs_[idx(i, j)];
}

bool ParamSpec::relation_implied(const std::map<std::pair<int, int>, long>& powers) const {
    const size_t width = static_cast<size_t>(n_) * n_ + 1;
    std::vector<Rational> target(width, Rational(0));
    for (const auto& [ij, m] : powers) target[idx(ij.first, ij.second)] = Rational(m);
    std::vector<std::vector<Scalar>> rows;
    BackendSpec rat{Backend::rational, 1};
    for (const auto& r : relation_rows_) {
        std::vector<Scalar> row;
        row.reserve(width);
        for (const auto& x : r) row.push_back(Scalar(x));
        rows.push_back(std::move(row));
    }
    std::vector<Scalar> t;
    t.reserve(width);
    for (const auto& x : target) t.push_back(Scalar(x));
    return in_row_span(rows, t, rat);
}

ParamSpec ParamSpec::rescaled_pair(int i, int j, const Scalar& c) const {
    ParamSpec p(*this);
    p.set_q(i, j, q(i, j) * c);
    p.set_q(j, i, q(j, i) / c);
    // Keep the exponent table only when the factor is a monomial.
    if (!p.exps_.empty()) {
        Rational cc;
        long e = 0;
        bool monomial = true;
        if (backend_.kind == Backend::symbolic) {
            monomial = c.as_ratfunc().as_monomial(cc, e);
        } else if (backend_.kind == Backend::rational) {
            cc = c.as_rational();
        } else {
            monomial = false;
        }
        if (monomial) {
            p.exps_[idx(i, j)] += e;
            p.exps_[idx(j, i)] -= e;
            p.coeffs_[idx(i, j)] *= cc;
            p.coeffs_[idx(j, i)] /= cc;
        } else {
            p.exps_.clear();
            p.coeffs_.clear();
        }
    }
    p.log_.push_back("rescaled pair (" + std::to_string(i) + "," + std::to_string(j) + ")");
    return p;
}

std::string ParamSpec::render_scalar(const Scalar& s) const {
    if (backend_.kind == Backend::symbolic && !exps_.empty()) {
        Rational c;
        long e = 0;
        if (s.as_ratfunc().as_monomial(c, e) && e != 0 && (c == 1 || c == -1)) {
            long best_k = 0;
            int bi = 0, bj = 0;
            for (int i = 1; i <= n_; ++i)
                for (int j = 1; j <= n_; ++j) {
                    long eij = exps_[idx(i, j)];
                    if (eij == 0 || coeffs_[idx(i, j)] != 1) continue;
                    if (e % eij) continue;
                    long k = e / eij;
                    if (std::abs(k) > 6 || k == 0) continue;
                    if (best_k == 0 || std::abs(k) < std::abs(best_k)) {
                        best_k = k;
                        bi = i;
                        bj = j;
                    }
                }
            if (best_k != 0) {
                std::ostringstream os;
                if (c == -1) os << "-";
                os << "q[" << bi << "," << bj << "]";
                if (best_k != 1) os << "^" << best_k;
                return os.str();
            }
        }
    }
    return s.to_string();
}

// ---------------------------------------------------------------------
// Symbolic construction

namespace {

// Linear expression over the N^2 exponent variables plus a constant,
// with rational coefficients.
struct LinExpr {
    std::vector<Rational> coef;  // length N^2
    Rational cst = Rational(0);
};

Rational rational_root(const Rational& c, long k) {
    if (k == 1) return c;
    if (k == -1) return Rational(1) / c;
    bool invert = k < 0;
    unsigned long kk = static_cast<unsigned long>(invert ? -k : k);
    mpz_class num = c.get_num(), den = c.get_den();
    bool neg = num < 0;
    if (neg && kk % 2 == 0) throw Error("constraint coefficient has no rational root");
    mpz_class an = abs(num), rn, rd;
    mpz_root(rn.get_mpz_t(), an.get_mpz_t(), kk);
    mpz_root(rd.get_mpz_t(), den.get_mpz_t(), kk);
    mpz_class pn(1), pd(1);
    for (unsigned long t = 0; t < kk; ++t) {
        pn *= rn;
        pd *= rd;
    }
    if (pn != an || pd != den) throw Error("constraint coefficient has no rational root");
    Rational r = Rational(neg ? -rn : rn) / Rational(rd);
    return invert ? Rational(1) / r : r;
}

}  // namespace

ParamSpec ParamSpec::from_constraints(int n, const std::vector<Constraint>& constraints,
                                      const ParamOptions& options) {
    if (n < 1) throw Error("need at least one generator");
    ParamSpec p;
    p.n_ = n;
    p.backend_ = BackendSpec{Backend::symbolic, 1};
    const int nv = n * n;

    for (const auto& c : constraints) {
        if (c.explicit_value) throw Error("explicit scalar in symbolic constraints: " + c.text);
        std::vector<Rational> row(nv + 1, Rational(0));
        for (const auto& [ij, m] : c.powers) row[p.idx(ij.first, ij.second)] = Rational(m);
        row[nv] = Rational(c.rhs_t_exponent);
        p.relation_rows_.push_back(std::move(row));
        p.log_.push_back(c.text);
    }

    // Eliminate one variable per constraint, producing for every variable
    // a linear expression over the remaining free variables.
    std::vector<LinExpr> expr(nv);
    std::vector<bool> free_var(nv, true);
    for (int v = 0; v < nv; ++v) {
        expr[v].coef.assign(nv, Rational(0));
        expr[v].coef[v] = 1;
    }
    struct Elim {
        int var;
        Constraint c;
    };
    std::vector<Elim> order;

    for (const auto& c : constraints) {
        // Substitute current expressions into the constraint.
        LinExpr f;
        f.coef.assign(nv, Rational(0));
        f.cst = Rational(-c.rhs_t_exponent);
        for (const auto& [ij, m] : c.powers) {
            int v = p.idx(ij.first, ij.second);
            for (int w = 0; w < nv; ++w) f.coef[w] += Rational(m) * expr[v].coef[w];
            f.cst += Rational(m) * expr[v].cst;
        }
        int pivot = -1;
        if (c.is_assignment) {
            pivot = p.idx(c.assigned.first, c.assigned.second);
            if (!free_var[pivot] || f.coef[pivot] == 0)
                throw Error("entry assigned twice or unsolvable: " + c.text);
        } else {
            // Lexicographically last q-variable occurring in the constraint
            // that is still free; otherwise any free variable present.
            for (auto it = c.powers.rbegin(); it != c.powers.rend(); ++it) {
                int v = p.idx(it->first.first, it->first.second);
                if (free_var[v] && f.coef[v] != 0) {
                    pivot = v;
                    break;
                }
            }
            if (pivot < 0)
                for (int v = nv - 1; v >= 0; --v)
                    if (free_var[v] && f.coef[v] != 0) {
                        pivot = v;
                        break;
                    }
        }
        if (pivot < 0) {
            bool trivial = f.cst == 0;
            for (const auto& x : f.coef) trivial = trivial && x == 0;
            if (trivial) continue;  // implied by earlier constraints
            throw Error("unsolvable constraint: " + c.text);
        }
        Rational a = f.coef[pivot];
        LinExpr e;
        e.coef.assign(nv, Rational(0));
        for (int w = 0; w < nv; ++w)
            if (w != pivot) e.coef[w] = -f.coef[w] / a;
        e.cst = -f.cst / a;
        // Substitute into every expression that references the pivot.
        for (int v = 0; v < nv; ++v) {
            Rational cv = expr[v].coef[pivot];
            if (cv == 0) continue;
            expr[v].coef[pivot] = 0;
            for (int w = 0; w < nv; ++w) expr[v].coef[w] += cv * e.coef[w];
            expr[v].cst += cv * e.cst;
        }
        free_var[pivot] = false;
        order.push_back({pivot, c});
    }

    const bool has_fixed_exponent =
        std::any_of(constraints.begin(), constraints.end(),
                    [](const Constraint& c) { return c.rhs_t_exponent != 0; });

    std::mt19937_64 gen(options.seed);
    auto draw = [&](long range) {
        for (;;) {
            long v = static_cast<long>(gen() % (2 * static_cast<unsigned long>(range) + 1)) - range;
            if (v != 0) return v;
        }
    };

    long range = std::max<long>(options.exponent_range, 4L * nv);
    for (unsigned attempt = 0;; ++attempt) {
        if (attempt >= options.max_retries)
            throw Error("could not find a collision-free parameter point");
        // Fresh distinct exponents for the free variables.
        std::set<long> used;
        std::vector<Rational> value(nv, Rational(0));
        std::vector<long> freev;
        for (int v = 0; v < nv; ++v)
            if (free_var[v]) {
                long x;
                do x = draw(range);
                while (used.count(x));
                used.insert(x);
                value[v] = Rational(x);
            }
        for (int v = 0; v < nv; ++v) {
            Rational acc = expr[v].cst;
            for (int w = 0; w < nv; ++w)
                if (expr[v].coef[w] != 0) acc += expr[v].coef[w] * value[w];
            value[v] = free_var[v] ? value[v] : acc;
        }
        // Clear denominators by a global scale (valid only when no
        // explicit t-exponent was requested), then optionally double.
        mpz_class scale(1);
        for (int v = 0; v < nv; ++v) {
            mpz_class d = value[v].get_den();
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), scale.get_mpz_t(), d.get_mpz_t());
            scale = scale / g * d;
        }
        if (scale != 1 && has_fixed_exponent)
            throw Error("constraints need fractional exponents but entries are pinned to t powers");
        if (options.even_exponents) scale *= 2;
        if (scale != 1 && has_fixed_exponent)
            throw Error("even exponents requested but entries are pinned to t powers");
        std::vector<long> exps(nv);
        for (int v = 0; v < nv; ++v) {
            Rational e = value[v] * Rational(scale);
            if (e.get_den() != 1) throw Error("internal: exponent not integral");
            exps[v] = static_cast<long>(e.get_num().get_si());
        }

        // Collision scan over sigma products of all index subsets, with
        // diagonal powers up to the configured bound.
        auto implied = [&](const std::map<std::pair<int, int>, long>& powers) {
            return p.relation_implied(powers);
        };
        bool collided = false;
        std::vector<int> subset;
        std::vector<std::vector<int>> subsets;
        for (unsigned mask = 1; mask < (1u << n) && !collided; ++mask) {
            subset.clear();
            for (int i = 0; i < n; ++i)
                if (mask & (1u << i)) subset.push_back(i + 1);
            if (subset.size() < 2) continue;
            long base = 0;
            std::map<std::pair<int, int>, long> powers;
            for (int a : subset)
                for (int b : subset)
                    if (a != b) {
                        base += exps[(a - 1) * n + (b - 1)];
                        powers[{a, b}] += 1;
                    }
            for (int i = 1; i <= n && !collided; ++i) {
                long eii = exps[(i - 1) * n + (i - 1)];
                for (int k = -options.collision_power_bound;
                     k <= options.collision_power_bound && !collided; ++k) {
                    if (base + k * eii != 0) continue;
                    auto pw = powers;
                    pw[{i, i}] += k;
                    if (!implied(pw)) collided = true;
                }
            }
        }
        for (int i = 1; i <= n && !collided; ++i) {
            if (exps[(i - 1) * n + (i - 1)] != 0) continue;
            std::map<std::pair<int, int>, long> pw;
            pw[{i, i}] = 1;
            if (!implied(pw)) collided = true;
        }
        if (collided) {
            range *= 2;
            continue;
        }

        p.exps_ = std::move(exps);
        break;
    }

    // Coefficients: free entries are 1; eliminated entries are solved from
    // the coefficient side of their constraint, iterated to a fixpoint.
    p.coeffs_.assign(nv, Rational(1));
    for (unsigned sweep = 0; sweep < order.size() + 1; ++sweep) {
        for (const auto& el : order) {
            Rational rhs = el.c.rhs_coeff;
            long mp = 0;
            for (const auto& [ij, m] : el.c.powers) {
                int v = p.idx(ij.first, ij.second);
                if (v == el.var) {
                    mp += m;
                    continue;
                }
                Rational base = p.coeffs_[v];
                for (long t = 0; t < std::abs(m); ++t) rhs = m > 0 ? rhs / base : rhs * base;
            }
            if (mp == 0) throw Error("internal: degenerate coefficient equation");
            p.coeffs_[el.var] = rational_root(rhs, mp);
        }
    }
    // Verify every constraint exactly on the final point.
    p.q_.resize(nv);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            p.set_q(i, j, Scalar(RationalFunction::monomial(p.coeffs_[p.idx(i, j)],
                                                            p.exps_[p.idx(i, j)])));
    for (const auto& c : constraints) {
        Scalar lhs = p.one();
        for (const auto& [ij, m] : c.powers) lhs *= p.scalar_pow(p.q(ij.first, ij.second), m);
        Scalar rhs = Scalar(RationalFunction::monomial(c.rhs_coeff, c.rhs_t_exponent));
        if (!(lhs == rhs)) throw Error("internal: constraint not satisfied: " + c.text);
    }
    return p;
}

ParamSpec ParamSpec::from_table(int n, const BackendSpec& backend,
                                const std::vector<Constraint>& constraints) {
    if (backend.kind == Backend::symbolic) {
        // Split explicit monomial assignments from product constraints and
        // let the symbolic path handle everything uniformly.
        return from_constraints(n, constraints);
    }
    ParamSpec p;
    p.n_ = n;
    p.backend_ = backend;
    const int nv = n * n;
    p.q_.resize(nv, Scalar::zero(backend));
    std::vector<bool> known(nv, false);

    std::vector<Constraint> pending;
    for (const auto& c : constraints) {
        p.log_.push_back(c.text);
        if (c.explicit_value) {
            int v = p.idx(c.assigned.first, c.assigned.second);
            if (known[v]) throw Error("entry assigned twice: " + c.text);
            if (c.explicit_value->is_zero()) throw Error("q entries must be nonzero: " + c.text);
            p.q_[v] = *c.explicit_value;
            known[v] = true;
        } else {
            pending.push_back(c);
        }
    }
    // Resolve product constraints whenever only one entry is unknown and
    // it occurs with exponent +-1.
    bool progress = true;
    while (progress) {
        progress = false;
        for (auto it = pending.begin(); it != pending.end();) {
            int unknown = -1;
            long um = 0;
            bool stuck = false;
            for (const auto& [ij, m] : it->powers) {
                int v = p.idx(ij.first, ij.second);
                if (!known[v]) {
                    if (unknown >= 0) {
                        stuck = true;
                        break;
                    }
                    unknown = v;
                    um = m;
                }
            }
            if (stuck) {
                ++it;
                continue;
            }
            if (unknown < 0) {
                // Fully determined: verify.
                Scalar lhs = p.one();
                for (const auto& [ij, m] : it->powers)
                    lhs *= p.scalar_pow(p.q_[p.idx(ij.first, ij.second)], m);
                if (!lhs.is_one()) throw Error("constraint violated by the table: " + it->text);
            } else {
                if (um != 1 && um != -1)
                    throw Error("cannot solve constraint for a single entry: " + it->text);
                Scalar rest = p.one();
                for (const auto& [ij, m] : it->powers) {
                    int v = p.idx(ij.first, ij.second);
                    if (v == unknown) continue;
                    rest *= p.scalar_pow(p.q_[v], m);
                }
                Scalar val = um == 1 ? rest.inverse() : rest;
                if (val.is_zero()) throw Error("q entries must be nonzero: " + it->text);
                p.q_[unknown] = val;
                known[unknown] = true;
            }
            it = pending.erase(it);
            progress = true;
        }
    }
    if (!pending.empty()) throw Error("unsolvable constraint: " + pending.front().text);
    for (int v = 0; v < nv; ++v)
        if (!known[v]) throw Error("parameter table underdetermined (entry q[" +
                                   std::to_string(v / n + 1) + "," + std::to_string(v % n + 1) +
                                   "] unset)");
    return p;
}

}  // namespace qda
