#include "qda/kacmoody.hpp"

#include <algorithm>
#include <array>
#include <climits>
#include <sstream>

namespace qda {

namespace {

std::optional<Scalar> proportionality(const FreePoly& p, const FreePoly& q) {
    // p = c q with c != 0; nullopt when not proportional or either is zero.
    if (p.is_zero() || q.is_zero()) return std::nullopt;
    const auto& [w0, c0] = *q.terms().begin();
    Scalar pc = p.coeff(w0);
    if (pc.is_zero()) return std::nullopt;
    Scalar ratio = pc / c0;
    if (p == q * ratio) return ratio;
    return std::nullopt;
}

std::string degree_string(const MultiDegree& d) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d[i];
    os << ")";
    return os.str();
}

}  // namespace

int CartanData::cartan_entry(int i, int j) const {
    if (i == j) return 2;
    auto it = k.find({i, j});
    if (it == k.end()) throw Error("missing k entry");
    return 1 - it->second;
}

CartanData CartanData::type_A(int rank) {
    CartanData cd;
    cd.size = rank;
    for (int i = 1; i <= rank; ++i)
        for (int j = 1; j <= rank; ++j)
            if (i != j) cd.k[{i, j}] = std::abs(i - j) == 1 ? 2 : 1;
    return cd;
}

CartanData CartanData::type_B(int rank) {
    // Short last root: k_{l,l-1} = 3.
    CartanData cd = type_A(rank);
    if (rank >= 2) cd.k[{rank, rank - 1}] = 3;
    return cd;
}

CartanData CartanData::type_C(int rank) {
    // Long last root: k_{l-1,l} = 3.
    CartanData cd = type_A(rank);
    if (rank >= 2) cd.k[{rank - 1, rank}] = 3;
    return cd;
}

FreePoly serre_constant(int i, int j, int k, const ParamSpec& params) {
    if (i == j || k < 1) throw Error("serre_constant: need i != j and k >= 1");
    const Scalar qii = params.q(i, i);
    FreePoly acc(params.backend());
    Scalar minus_qij_pow = params.one();
    for (int m = 0; m <= k; ++m) {
        Scalar coeff = minus_qij_pow * params.scalar_pow(qii, static_cast<long>(m) * (m - 1) / 2) *
                       q_binomial(k, m, qii);
        Word w;
        w.insert(w.end(), m, i);
        w.push_back(j);
        w.insert(w.end(), k - m, i);
        acc.add_term(w, coeff);
        minus_qij_pow *= -params.q(i, j);
    }
    return acc;
}

std::vector<Constraint> cartan_constraints(const CartanData& cd) {
    std::vector<Constraint> cs;
    for (int i = 1; i <= cd.size; ++i)
        for (int j = 1; j <= cd.size; ++j) {
            if (i == j) continue;
            long kij = cd.k.at({i, j});
            cs.push_back(Constraint::sigma_with_diagonal({i, j}, i, kij - 1));
        }
    return cs;
}

ParamSpec cartan_param_point(const CartanData& cd, const ParamOptions& options) {
    return ParamSpec::from_constraints(cd.size, cartan_constraints(cd), options);
}

std::optional<CartanData> infer_cartan(const ParamSpec& params) {
    if (!params.symbolic()) return std::nullopt;
    const int n = params.n_generators();
    CartanData cd;
    cd.size = n;
    for (int i = 1; i <= n; ++i) {
        long eii = params.exponent_of(i, i);
        if (eii == 0) return std::nullopt;
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            long es = params.exponent_of(i, j) + params.exponent_of(j, i);
            if (es % eii != 0) return std::nullopt;
            long a = es / eii;
            if (a > 0 || 1 - a > 127) return std::nullopt;  // not of Serre type
            cd.k[{i, j}] = static_cast<int>(1 - a);
        }
    }
    return cd;
}

// ---------------------------------------------------------------------
// Root-vector towers

namespace {

// Product of q_{i, path_k} over the first len entries of 1,...,l,l-1,...,1.
Scalar path_product(int i, int len, int rank, const ParamSpec& params) {
    Scalar r = params.one();
    for (int k = 0; k < len; ++k) {
        int idx = k < rank ? k + 1 : 2 * rank - 1 - k;
        r *= params.q(i, idx);
    }
    return r;
}

Scalar a_defining(int n, const ParamSpec& params) {
    // a_n = q_{n1}...q_{n,n-2} / q_{n-1,n}
    Scalar r = params.one();
    for (int k = 1; k <= n - 2; ++k) r *= params.q(n, k);
    return r / params.q(n - 1, n);
}

}  // namespace

Scalar a_coefficient(int i, int n, const ParamSpec& params) {
    if (i == n + 1) return a_defining(n + 1, params);
    if (i == n) {
        if (n == 1) return params.one();
        Scalar r = params.one();
        for (int k = 1; k <= n - 1; ++k) r *= params.q(n, k);
        return r;
    }
    Scalar r = params.one();
    for (int k = 1; k <= n; ++k) r *= params.q(i, k);
    return r;
}

Scalar b_defining_coefficient(int n, int rank, const ParamSpec& params) {
    return path_product(rank - n, rank + n, rank, params);
}

Scalar c_vanishing_coefficient(int m, int n, int rank, const ParamSpec& params) {
    Scalar c = path_product(rank - m, rank + m - 1, rank, params);
    for (int s = 1; s <= n; ++s) c = c / params.q(rank - m - s, rank - m);
    return c;
}

Scalar b_vanishing_coefficient(int m, int n, int rank, const ParamSpec& params) {
    // Chain of derivative steps from the n = 0 case of (2.24); the step
    // lowering X^{l+m-s+1} multiplies by q_{j, l-m} with j its top index.
    Scalar b = c_vanishing_coefficient(m, 0, rank, params) * params.q(rank - m, rank - m);
    for (int s = 2; s <= n; ++s) {
        int j = s <= m ? rank - m + s - 1 : rank + m - s + 1;
        b *= params.q(j, rank - m);
    }
    return b;
}

RootVectorSeq build_root_vectors_A(int rank, const ParamSpec& params) {
    if (rank < 2) throw Error("rank must be >= 2");
    RootVectorSeq seq;
    seq.type = 'A';
    seq.rank = rank;
    seq.vectors.push_back(FreePoly::generator(1, params.backend()));
    for (int n = 2; n <= rank; ++n) {
        Scalar an = a_defining(n, params);
        seq.bracket_coeffs.push_back(an);
        seq.vectors.push_back(
            q_bracket(seq.vectors.back(), FreePoly::generator(n, params.backend()), an));
    }
    return seq;
}

RootVectorSeq build_root_vectors_C(int rank, const ParamSpec& params) {
    RootVectorSeq seq = build_root_vectors_A(rank, params);
    seq.type = 'C';
    for (int n = 1; n <= rank - 1; ++n) {
        Scalar bn = b_defining_coefficient(n, rank, params);
        seq.bracket_coeffs.push_back(bn);
        seq.vectors.push_back(
            q_bracket(seq.vectors.back(), FreePoly::generator(rank - n, params.backend()), bn));
    }
    return seq;
}

namespace {

void check_lowering(const RootVectorSeq& seq, const ParamSpec& params, int top_index,
                    int lowering_of, VerifyReport& rep) {
    // d_i X^{k} proportional (nonzero) to X^{k-1} for i = lowering index,
    // zero otherwise.  top_index is 1-based into seq.vectors.
    const FreePoly& X = seq.vectors[top_index - 1];
    for (int i = 1; i <= params.n_generators(); ++i) {
        FreePoly dx = apply_partial(i, X, params);
        if (i != lowering_of) {
            if (!dx.is_zero()) {
                rep.ok = false;
                rep.failures.push_back("d_" + std::to_string(i) + " X^" +
                                       std::to_string(top_index) + " != 0");
            }
            continue;
        }
        if (top_index == 1) {
            if (!(dx == FreePoly::unit(params.backend()))) {
                rep.ok = false;
                rep.failures.push_back("d_1 X^1 != 1");
            }
            continue;
        }
        auto ratio = proportionality(dx, seq.vectors[top_index - 2]);
        if (!ratio || ratio->is_zero()) {
            rep.ok = false;
            rep.failures.push_back("d_" + std::to_string(i) + " X^" + std::to_string(top_index) +
                                   " not a nonzero multiple of X^" + std::to_string(top_index - 1));
        }
    }
}

}  // namespace

VerifyReport verify_A(const RootVectorSeq& seq, const ParamSpec& params) {
    VerifyReport rep;
    const int l = seq.rank;
    for (int n = 1; n <= l; ++n) check_lowering(seq, params, n, n, rep);
    rep.checks.push_back("lowering relations (2.5) on X^1..X^" + std::to_string(l));
    for (int n = 1; n <= l; ++n) {
        for (int i = 1; i <= l; ++i) {
            FreePoly br = q_bracket(seq.vectors[n - 1], FreePoly::generator(i, params.backend()),
                                    a_coefficient(i, n, params));
            if (i == n + 1) {
                if (!(br == seq.vectors[n])) {
                    rep.ok = false;
                    rep.failures.push_back("(2.7) fails at n=" + std::to_string(n) +
                                           ", i=" + std::to_string(i));
                }
            } else if (!br.is_zero()) {
                rep.ok = false;
                rep.failures.push_back("(2.7) fails at n=" + std::to_string(n) +
                                       ", i=" + std::to_string(i));
            }
        }
    }
    rep.checks.push_back("bracket relations (2.7) for all n,i <= " + std::to_string(l));
    return rep;
}

VerifyReport verify_C(const RootVectorSeq& seq, const ParamSpec& params) {
    VerifyReport rep;
    const int l = seq.rank;
    // (2.5) on the ascending part, (2.17) on the descending part.
    for (int n = 1; n <= l; ++n) check_lowering(seq, params, n, n, rep);
    for (int n = 1; n <= l - 1; ++n) check_lowering(seq, params, l + n, l - n, rep);
    rep.checks.push_back("lowering relations (2.5)/(2.17) on the full tower");

    // (2.21): all n,i in 1..l except n=l, i=l-1, where the bracket must not
    // vanish.
    for (int n = 1; n <= l; ++n)
        for (int i = 1; i <= l; ++i) {
            FreePoly br = q_bracket(seq.vectors[n - 1], FreePoly::generator(i, params.backend()),
                                    a_coefficient(i, n, params));
            if (n == l && i == l - 1) {
                if (br.is_zero()) {
                    rep.ok = false;
                    rep.failures.push_back("(2.21) exception: bracket unexpectedly zero");
                }
                continue;
            }
            bool ok = (i == n + 1) ? br == seq.vectors[n] : br.is_zero();
            if (!ok) {
                rep.ok = false;
                rep.failures.push_back("(2.21) fails at n=" + std::to_string(n) +
                                       ", i=" + std::to_string(i));
            }
        }
    rep.checks.push_back("bracket relations (2.21) with the stated exception");

    // (2.22): defining brackets of the descending part.
    for (int n = 1; n <= l - 1; ++n) {
        FreePoly br =
            q_bracket(seq.vectors[l + n - 2], FreePoly::generator(l - n, params.backend()),
                      b_defining_coefficient(n, l, params));
        if (!(br == seq.vectors[l + n - 1])) {
            rep.ok = false;
            rep.failures.push_back("(2.22) fails at n=" + std::to_string(n));
        }
    }
    rep.checks.push_back("defining brackets (2.22)");

    // (2.23): m = 0..l-1, n = 2..2m.
    for (int m = 0; m <= l - 1; ++m)
        for (int n = 2; n <= 2 * m; ++n) {
            int idx = l + m - n;
            if (idx < 1) continue;
            FreePoly br = q_bracket(seq.vectors[idx - 1],
                                    FreePoly::generator(l - m, params.backend()),
                                    b_vanishing_coefficient(m, n, l, params));
            if (!br.is_zero()) {
                rep.ok = false;
                rep.failures.push_back("(2.23) fails at m=" + std::to_string(m) +
                                       ", n=" + std::to_string(n));
            }
        }
    rep.checks.push_back("vanishing brackets (2.23)");

    // (2.24): m = 0..l-1, n = 0..l-m-1.
    for (int m = 0; m <= l - 1; ++m)
        for (int n = 0; n <= l - m - 1; ++n) {
            FreePoly br = q_bracket(seq.vectors[l + m + n - 1],
                                    FreePoly::generator(l - m, params.backend()),
                                    c_vanishing_coefficient(m, n, l, params));
            if (!br.is_zero()) {
                rep.ok = false;
                rep.failures.push_back("(2.24) fails at m=" + std::to_string(m) +
                                       ", n=" + std::to_string(n));
            }
        }
    rep.checks.push_back("vanishing brackets (2.24), c(0,0) = a(l,l)");
    return rep;
}

// ---------------------------------------------------------------------
// B2 and B3

namespace {

// Shared machinery: brackets against generators in the quotient algebra,
// with the bracket scalar scanned over kappa^i q^k.
struct QuotientBracketProblem {
    const ParamSpec& params;
    BlockCache cache;
    MultiDegree block;
    std::vector<Word> reps;  // representatives of the E block
    // For each generator i: normal forms of rep*xi_i and xi_i*rep in the
    // coordinates of the target-block representatives.
    struct Side {
        MultiDegree target;
        std::vector<Word> target_reps;
        std::vector<std::vector<Scalar>> right;  // NF(rep * xi_i)
        std::vector<std::vector<Scalar>> left;   // NF(xi_i * rep)
    };
    std::vector<Side> sides;
    std::vector<Scalar> kappa;  // kappa^i on the E block

    QuotientBracketProblem(const ParamSpec& p, MultiDegree d) : params(p), cache(p), block(d) {
        reps = cache.quotient(block).representatives;
        const int n = params.n_generators();
        for (int i = 1; i <= n; ++i) {
            Side s;
            s.target = block;
            ++s.target[i - 1];
            s.target_reps = cache.quotient(s.target).representatives;
            std::map<Word, size_t, WordOrder> index;
            for (size_t r = 0; r < s.target_reps.size(); ++r) index.emplace(s.target_reps[r], r);
            auto coords = [&](const FreePoly& nf) {
                std::vector<Scalar> v(s.target_reps.size(), params.zero());
                for (const auto& [w, c] : nf.terms()) v[index.at(w)] = c;
                return v;
            };
            FreePoly xi = FreePoly::generator(i, params.backend());
            for (const auto& w : reps) {
                FreePoly rep = FreePoly::from_word(w, params.backend());
                s.right.push_back(coords(cache.normal_form(rep * xi)));
                s.left.push_back(coords(cache.normal_form(xi * rep)));
            }
            sides.push_back(std::move(s));
            kappa.push_back(params.kappa_upper(i, block));
        }
    }

    // Kernel (echelonized) of the stacked conditions NF(E xi_i - a_i xi_i E) = 0.
    std::vector<std::vector<Scalar>> solve(const std::vector<Scalar>& a) const {
        size_t rows = 0;
        for (const auto& s : sides) rows += s.target_reps.size();
        Matrix sys(rows, reps.size(), params.backend());
        size_t at = 0;
        for (size_t i = 0; i < sides.size(); ++i) {
            const auto& s = sides[i];
            for (size_t r = 0; r < reps.size(); ++r)
                for (size_t v = 0; v < s.target_reps.size(); ++v) {
                    Scalar entry = s.right[r][v] - a[i] * s.left[r][v];
                    sys.at(at + v, r) = entry;
                }
            at += s.target_reps.size();
        }
        return echelonize_rows(sys.kernel_basis(), params.backend());
    }

    // Same solve after the exact substitution t = t0 (fast pre-filter;
    // the symbolic kernel embeds into the specialized one).
    size_t specialized_kernel_dim(const std::vector<Rational>& a_at_t0,
                                  const std::vector<std::vector<std::vector<Rational>>>& right0,
                                  const std::vector<std::vector<std::vector<Rational>>>& left0) const {
        BackendSpec rat{Backend::rational, 1};
        size_t rows = 0;
        for (const auto& s : sides) rows += s.target_reps.size();
        Matrix sys(rows, reps.size(), rat);
        size_t at = 0;
        for (size_t i = 0; i < sides.size(); ++i) {
            for (size_t r = 0; r < reps.size(); ++r)
                for (size_t v = 0; v < sides[i].target_reps.size(); ++v)
                    sys.at(at + v, r) =
                        Scalar(right0[i][r][v] - a_at_t0[i] * left0[i][r][v]);
            at += sides[i].target_reps.size();
        }
        return sys.kernel_basis().size();
    }
};

Rational eval_rf(const Scalar& s, const Rational& t0) {
    return s.as_ratfunc().evaluate(t0);
}

// Projective limit at t = 1 of a vector of rational functions: divide by
// the minimal power of (t-1) and evaluate.  Returns the limit vector and
// whether the vector itself (unscaled) was finite at t = 1.
std::pair<std::vector<Rational>, bool> projective_limit_at_one(const std::vector<Scalar>& v) {
    RatPoly lin({Rational(-1), Rational(1)});
    (void)lin;
    long vmin = LONG_MAX;
    std::vector<long> vals(v.size(), 0);
    for (size_t i = 0; i < v.size(); ++i) {
        const RationalFunction& f = v[i].as_ratfunc();
        if (f.is_zero()) continue;
        long val = f.num().valuation_at(Rational(1)) - f.den().valuation_at(Rational(1));
        vals[i] = val;
        vmin = std::min(vmin, val);
    }
    std::vector<Rational> limit(v.size(), Rational(0));
    if (vmin == LONG_MAX) return {limit, true};
    for (size_t i = 0; i < v.size(); ++i) {
        const RationalFunction& f = v[i].as_ratfunc();
        if (f.is_zero()) continue;
        if (vals[i] > vmin) continue;  // limit 0 after scaling
        int vn = f.num().valuation_at(Rational(1));
        int vd = f.den().valuation_at(Rational(1));
        limit[i] = f.num().deflate_at(Rational(1), vn).evaluate(Rational(1)) /
                   f.den().deflate_at(Rational(1), vd).evaluate(Rational(1));
    }
    return {limit, vmin >= 0};
}

// 7x7 rational matrices for the classical B3 check.
using Mat7 = std::array<std::array<Rational, 7>, 7>;

Mat7 mat_zero() {
    Mat7 m{};
    return m;
}

Mat7 mat_unit(int i, int j) {
    Mat7 m = mat_zero();
    m[i - 1][j - 1] = 1;
    return m;
}

Mat7 mat_sub(const Mat7& a, const Mat7& b) {
    Mat7 r = mat_zero();
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) r[i][j] = a[i][j] - b[i][j];
    return r;
}

Mat7 mat_mul(const Mat7& a, const Mat7& b) {
    Mat7 r = mat_zero();
    for (int i = 0; i < 7; ++i)
        for (int k = 0; k < 7; ++k) {
            if (a[i][k] == 0) continue;
            for (int j = 0; j < 7; ++j) r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

Mat7 mat_comm(const Mat7& a, const Mat7& b) { return mat_sub(mat_mul(a, b), mat_mul(b, a)); }

bool mat_is_zero(const Mat7& m) {
    for (const auto& row : m)
        for (const auto& x : row)
            if (x != 0) return false;
    return true;
}

bool mat_proportional(const Mat7& a, const Mat7& b) {
    // a = c b for some nonzero c
    if (mat_is_zero(a) || mat_is_zero(b)) return false;
    Rational c;
    bool have = false;
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) {
            if (b[i][j] == 0) {
                if (a[i][j] != 0) return false;
                continue;
            }
            Rational r = a[i][j] / b[i][j];
            if (!have) {
                c = r;
                have = true;
            } else if (r != c) {
                return false;
            }
        }
    return have && c != 0;
}

Mat7 classical_highest_root_b3() {
    Mat7 e1 = mat_sub(mat_unit(1, 2), mat_unit(6, 7));
    Mat7 e2 = mat_sub(mat_unit(2, 3), mat_unit(5, 6));
    Mat7 e3 = mat_sub(mat_unit(3, 4), mat_unit(4, 5));
    // Weight (1,2,2) nestings; take the first nonzero one.
    Mat7 g = mat_comm(e2, mat_comm(e3, mat_comm(e3, mat_comm(e2, e1))));
    if (mat_is_zero(g)) g = mat_comm(mat_comm(mat_comm(mat_comm(e1, e2), e3), e3), e2);
    if (mat_is_zero(g)) throw Error("internal: classical highest-root generator vanished");
    return g;
}

Mat7 word_to_matrix(const Word& w) {
    Mat7 e1 = mat_sub(mat_unit(1, 2), mat_unit(6, 7));
    Mat7 e2 = mat_sub(mat_unit(2, 3), mat_unit(5, 6));
    Mat7 e3 = mat_sub(mat_unit(3, 4), mat_unit(4, 5));
    std::array<Mat7, 3> gens{e1, e2, e3};
    Mat7 acc = mat_zero();
    for (int i = 0; i < 7; ++i) acc[i][i] = 1;
    for (int letter : w) acc = mat_mul(acc, gens[letter - 1]);
    return acc;
}

}  // namespace

B2Result solve_b2(const ParamOptions& options) {
    ParamSpec params = cartan_param_point(CartanData::type_B(2), options);
    const BackendSpec& bk = params.backend();

    // C_2221, the quartic Serre constant of the short root (2.8).
    FreePoly c2221(bk);
    Scalar q12 = params.q(1, 2), q22 = params.q(2, 2);
    Scalar three = q_integer(3, q22);
    c2221.add_term({2, 2, 2, 1}, q12.inverse());
    c2221.add_term({2, 2, 1, 2}, -three);
    c2221.add_term({2, 1, 2, 2}, three * q12 * q22);
    c2221.add_term({1, 2, 2, 2}, -(q12 * q12 * q22 * q22 * q22));
    for (int i = 1; i <= 2; ++i)
        if (!apply_partial(i, c2221, params).is_zero())
            throw Error("internal: C_2221 is not a constant on the B2 surface");

    B2Result res{.candidates = {}, .survivor = std::nullopt, .a1 = params.one(),
                 .a2 = params.one(), .params = params};

    // Stage 1: E xi_2 - a_2 xi_2 E proportional to C_2221, with a_2 on the
    // monomial grid kappa^2 q^k.
    MultiDegree de{1, 2};
    auto e_basis = word_basis(de);
    MultiDegree dw{1, 3};
    auto w_basis = word_basis(dw);
    std::map<Word, size_t, WordOrder> w_index;
    for (size_t r = 0; r < w_basis.size(); ++r) w_index.emplace(w_basis[r], r);
    Scalar kappa2 = params.kappa_upper(2, de);
    Scalar qshort = params.q(2, 2);

    for (long k = -6; k <= 6; ++k) {
        Scalar a2 = kappa2 * params.scalar_pow(qshort, k);
        // Unknowns: 3 coefficients of E and the proportionality factor.
        Matrix sys(w_basis.size(), e_basis.size() + 1, bk);
        for (size_t c = 0; c < e_basis.size(); ++c) {
            FreePoly e = FreePoly::from_word(e_basis[c], bk);
            FreePoly w2 = e * FreePoly::generator(2, bk) -
                          FreePoly::generator(2, bk) * e * a2;
            for (const auto& [w, coeff] : w2.terms()) sys.at(w_index.at(w), c) = coeff;
        }
        for (const auto& [w, coeff] : c2221.terms())
            sys.at(w_index.at(w), e_basis.size()) = -coeff;
        for (auto& v : sys.kernel_basis()) {
            // Drop solutions with E = 0.
            bool ezero = true;
            for (size_t c = 0; c < e_basis.size(); ++c) ezero = ezero && v[c].is_zero();
            if (ezero) continue;
            FreePoly e(bk);
            for (size_t c = 0; c < e_basis.size(); ++c) e.add_term(e_basis[c], v[c]);
            // Normalize: leading coefficient 1 at the lex-least word.
            e = e * e.terms().begin()->second.inverse();
            res.candidates.push_back(B2Candidate{e, a2});
        }
    }

    // Stage 2: the survivor also has w_1 = E xi_1 - a_1 xi_1 E in the ideal.
    BlockCache cache(params);
    Scalar kappa1 = params.kappa_upper(1, de);
    for (const auto& cand : res.candidates) {
        for (long k = -6; k <= 6; ++k) {
            Scalar a1 = kappa1 * params.scalar_pow(qshort, k);
            FreePoly w1 = cand.e * FreePoly::generator(1, bk) -
                          FreePoly::generator(1, bk) * cand.e * a1;
            if (cache.normal_form(w1).is_zero()) {
                if (res.survivor)
                    throw Error("internal: B2 survivor is not unique");
                res.survivor = cand.e;
                res.a1 = a1;
                res.a2 = cand.a2;
            }
        }
    }
    return res;
}

B3Result search_b3(long exponent_bound, const ParamOptions& options) {
    ParamSpec params = cartan_param_point(CartanData::type_B(3), options);
    B3Result res{.nonzero_solutions = {},
                 .qualifying = 0,
                 .grid_points = 0,
                 .exponent_bound = exponent_bound,
                 .completeness_note =
                     "grid covers bracket scalars kappa^i * q^k with |k| <= " +
                     std::to_string(exponent_bound) +
                     "; the theorem quantifies over arbitrary complex a_i, so the scan is a "
                     "monomial approximation of that hypothesis",
                 .params = params};

    QuotientBracketProblem prob(params, MultiDegree{1, 2, 2});
    const Scalar qshort = params.q(3, 3);
    const Rational t0(7, 3);

    // Specialized tables for the rational pre-filter.
    std::vector<std::vector<std::vector<Rational>>> right0(3), left0(3);
    for (int i = 0; i < 3; ++i) {
        for (const auto& row : prob.sides[i].right) {
            std::vector<Rational> r;
            for (const auto& s : row) r.push_back(eval_rf(s, t0));
            right0[i].push_back(std::move(r));
        }
        for (const auto& row : prob.sides[i].left) {
            std::vector<Rational> r;
            for (const auto& s : row) r.push_back(eval_rf(s, t0));
            left0[i].push_back(std::move(r));
        }
    }
    std::vector<Rational> kappa0;
    for (const auto& s : prob.kappa) kappa0.push_back(eval_rf(s, t0));
    const Rational q0 = eval_rf(qshort, t0);

    Mat7 highest = classical_highest_root_b3();
    std::vector<Mat7> rep_mats;
    for (const auto& w : prob.reps) rep_mats.push_back(word_to_matrix(w));

    auto qpow0 = [&](long k) {
        Rational r(1);
        for (long s = 0; s < std::abs(k); ++s) r = k > 0 ? r * q0 : r / q0;
        return r;
    };

    for (long k1 = -exponent_bound; k1 <= exponent_bound; ++k1)
        for (long k2 = -exponent_bound; k2 <= exponent_bound; ++k2)
            for (long k3 = -exponent_bound; k3 <= exponent_bound; ++k3) {
                ++res.grid_points;
                std::vector<Rational> a0{kappa0[0] * qpow0(k1), kappa0[1] * qpow0(k2),
                                         kappa0[2] * qpow0(k3)};
                if (prob.specialized_kernel_dim(a0, right0, left0) == 0) continue;
                // Confirm symbolically.
                std::vector<Scalar> a{prob.kappa[0] * params.scalar_pow(qshort, k1),
                                      prob.kappa[1] * params.scalar_pow(qshort, k2),
                                      prob.kappa[2] * params.scalar_pow(qshort, k3)};
                for (const auto& sol : prob.solve(a)) {
                    B3Solution s;
                    s.grid_point = {k1, k2, k3};
                    for (const auto& c : sol) s.coeffs.push_back(params.render_scalar(c));
                    auto [limit, finite] = projective_limit_at_one(sol);
                    s.finite_lie_limit = finite;
                    Mat7 acc = mat_zero();
                    for (size_t r = 0; r < sol.size(); ++r) {
                        if (limit[r] == 0) continue;
                        for (int ii = 0; ii < 7; ++ii)
                            for (int jj = 0; jj < 7; ++jj)
                                acc[ii][jj] += limit[r] * rep_mats[r][ii][jj];
                    }
                    s.matches_highest_root = mat_proportional(acc, highest);
                    if (s.matches_highest_root) ++res.qualifying;
                    res.nonzero_solutions.push_back(std::move(s));
                }
            }
    return res;
}

B2ControlResult b3_machinery_on_b2(long exponent_bound, const ParamOptions& options) {
    ParamSpec params = cartan_param_point(CartanData::type_B(2), options);
    QuotientBracketProblem prob(params, MultiDegree{1, 2});
    const Scalar qshort = params.q(2, 2);
    B2ControlResult res;
    for (long k1 = -exponent_bound; k1 <= exponent_bound; ++k1)
        for (long k2 = -exponent_bound; k2 <= exponent_bound; ++k2) {
            std::vector<Scalar> a{prob.kappa[0] * params.scalar_pow(qshort, k1),
                                  prob.kappa[1] * params.scalar_pow(qshort, k2)};
            auto sols = prob.solve(a);
            if (sols.empty()) continue;
            ++res.solution_grid_points;
            FreePoly e(params.backend());
            for (size_t r = 0; r < sols[0].size(); ++r) e.add_term(prob.reps[r], sols[0][r]);
            e = e * e.terms().begin()->second.inverse();
            res.e = e;
            res.a1 = a[0];
            res.a2 = a[1];
        }
    return res;
}

}  // namespace qda
