#include "qda/taylor.hpp"

#include <algorithm>
#include <sstream>

namespace qda {

namespace {

// All multidegrees over n generators with the given total.
void degrees_of_total(int n, int total, std::vector<MultiDegree>& out) {
    MultiDegree cur(n, 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == n - 1) {
            cur[pos] = left;
            out.push_back(cur);
            return;
        }
        for (int k = 0; k <= left; ++k) {
            cur[pos] = k;
            self(self, pos + 1, left - k);
        }
    };
    if (n == 0) return;
    rec(rec, 0, total);
}

// Apply the d-word seq to x, rightmost partial first.
FreePoly apply_dword(const Word& seq, const FreePoly& x, const ParamSpec& params) {
    FreePoly y = x;
    for (size_t k = seq.size(); k-- > 0;) {
        y = apply_partial(seq[k], y, params);
        if (y.is_zero()) break;
    }
    return y;
}

Scalar tail_twist(int k, const Word& seq, const ParamSpec& params) {
    // q_{k,seq_2} ... q_{k,seq_n}
    Scalar t = params.one();
    for (size_t r = 1; r < seq.size(); ++r) t = t * params.q(k, seq[r]);
    return t;
}

bool any_constants_below(const MultiDegree& d, const ParamSpec& params,
                         std::map<MultiDegree, bool>& memo) {
    auto it = memo.find(d);
    if (it != memo.end()) return it->second;
    bool found = false;
    std::vector<MultiDegree> subs;
    {
        MultiDegree cur(d.size(), 0);
        for (;;) {
            if (total_degree(cur) >= 2)
                subs.push_back(cur);
            size_t k = 0;
            while (k < d.size()) {
                if (cur[k] < d[k]) {
                    ++cur[k];
                    break;
                }
                cur[k] = 0;
                ++k;
            }
            if (k == d.size()) break;
        }
    }
    for (const auto& s : subs) {
        if (find_constants(s, params).dimension() > 0) {
            found = true;
            break;
        }
    }
    memo.emplace(d, found);
    return found;
}

}  // namespace

const FreePoly& TaylorCoefficients::at(const Word& seq) const {
    auto it = table.find(seq);
    if (it == table.end()) throw Error("Taylor coefficient missing for requested sequence");
    return it->second;
}

TaylorCoefficients taylor_coefficients(const ParamSpec& params, int max_degree) {
    if (max_degree < 1) throw Error("taylor_coefficients: max_degree must be >= 1");
    const int n = params.n_generators();
    TaylorCoefficients out;
    out.max_degree = max_degree;
    std::map<MultiDegree, bool> constant_memo;

    for (int level = 1; level <= max_degree; ++level) {
        std::vector<MultiDegree> degs;
        degrees_of_total(n, level, degs);
        for (const auto& mu : degs) {
            auto seqs = word_basis(mu);  // index sequences of this multidegree
            const size_t m = seqs.size();
            SGram gram = s_gram(mu, params);

            if (!any_constants_below(mu, params, constant_memo)) {
                // Closed form A = (-1)^{n+1} (prod_{k<l} q_{i_k i_l}) T^{seq}.
                auto inv = gram.matrix.inverse();
                if (!inv) throw Error("internal: singular Gram on a constant-free block");
                for (size_t s = 0; s < m; ++s) {
                    Scalar prefactor = params.one();
                    for (size_t a = 0; a < seqs[s].size(); ++a)
                        for (size_t b = a + 1; b < seqs[s].size(); ++b)
                            prefactor *= params.q(seqs[s][a], seqs[s][b]);
                    if (level % 2 == 0) prefactor = -prefactor;
                    FreePoly A(params.backend());
                    for (size_t w = 0; w < m; ++w) A.add_term(seqs[w], inv->at(s, w) * prefactor);
                    out.table.emplace(seqs[s], A);
                }
                continue;
            }

            // Exceptional block: solve the recursion as a linear system in
            // the m*m unknown coefficients, free variables set to zero.
            size_t rows = 0;
            struct TargetBlock {
                int k;
                MultiDegree deg;
                std::vector<Word> basis;
                Matrix deriv;
            };
            std::vector<TargetBlock> targets;
            for (int k = 1; k <= n; ++k) {
                if (mu[k - 1] == 0) continue;
                MultiDegree t = mu;
                --t[k - 1];
                targets.push_back({k, t, word_basis(t),
                                   derivation_matrix(k, mu, params)});
                rows += m * targets.back().basis.size();
            }
            Matrix sys(rows, m * m, params.backend());
            std::vector<Scalar> rhs(rows, Scalar::zero(params.backend()));
            size_t row_at = 0;
            for (const auto& tb : targets) {
                const size_t tdim = tb.basis.size();
                for (size_t y = 0; y < m; ++y) {
                    for (size_t s = 0; s < m; ++s) {
                        const Scalar& sval = gram.matrix.at(s, y);
                        if (sval.is_zero()) continue;
                        // S[s][y] * D_k X[s] contributes to every target word.
                        for (size_t v = 0; v < tdim; ++v)
                            for (size_t w = 0; w < m; ++w) {
                                const Scalar& dv = tb.deriv.at(v, w);
                                if (dv.is_zero()) continue;
                                sys.at(row_at + y * tdim + v, s * m + w) += sval * dv;
                            }
                        // Known part: delta_{k,seq_1} twist * A^{tail}.
                        if (seqs[s][0] == tb.k) {
                            Word tail(seqs[s].begin() + 1, seqs[s].end());
                            const FreePoly& prev =
                                level == 1 ? FreePoly::unit(params.backend()) * Scalar::from_int(-1, params.backend())
                                           : out.at(tail);
                            Scalar tw = tail_twist(tb.k, seqs[s], params);
                            // level 1: A^{()} = -1 by convention
                            FreePoly contrib = prev * (sval * tw);
                            for (const auto& [wv, cv] : contrib.terms()) {
                                auto itv = std::find(tb.basis.begin(), tb.basis.end(), wv);
                                size_t v = static_cast<size_t>(itv - tb.basis.begin());
                                rhs[row_at + y * tdim + v] -= cv;
                            }
                        }
                    }
                }
                row_at += m * tdim;
            }
            auto sol = Matrix::solve(sys, rhs);
            if (!sol) throw Error("internal: Taylor recursion inconsistent (contradicts solvability)");
            size_t freedom = m * m - sys.rank();
            if (freedom > 0) {
                std::ostringstream os;
                os << "block (";
                for (size_t k = 0; k < mu.size(); ++k) os << (k ? "," : "") << mu[k];
                os << "): " << freedom << " free coefficient(s) set to zero";
                out.gauge_log.push_back(os.str());
            }
            for (size_t s = 0; s < m; ++s) {
                FreePoly A(params.backend());
                for (size_t w = 0; w < m; ++w) A.add_term(seqs[w], (*sol)[s * m + w]);
                out.table.emplace(seqs[s], A);
            }
        }
    }
    return out;
}

bool taylor_residual_is_zero(const TaylorCoefficients& coeffs, const ParamSpec& params,
                             int degree_bound) {
    const int n = params.n_generators();
    for (int level = 1; level <= coeffs.max_degree; ++level) {
        std::vector<MultiDegree> degs;
        degrees_of_total(n, level, degs);
        for (const auto& mu : degs) {
            auto seqs = word_basis(mu);
            for (int k = 1; k <= n; ++k) {
                // c_seq = d_k A^{seq} + delta_{k,seq_1} twist A^{tail}
                std::vector<FreePoly> cs;
                cs.reserve(seqs.size());
                for (const auto& seq : seqs) {
                    FreePoly c = apply_partial(k, coeffs.at(seq), params);
                    if (seq[0] == k) {
                        Word tail(seq.begin() + 1, seq.end());
                        FreePoly prev = level == 1
                                            ? FreePoly::unit(params.backend()) *
                                                  Scalar::from_int(-1, params.backend())
                                            : coeffs.at(tail);
                        c += prev * tail_twist(k, seq, params);
                    }
                    cs.push_back(c);
                }
                for (int deg = level; deg <= degree_bound; ++deg) {
                    std::vector<MultiDegree> xdegs;
                    degrees_of_total(n, deg, xdegs);
                    for (const auto& xd : xdegs) {
                        for (const Word& xw : word_basis(xd)) {
                            FreePoly x = FreePoly::from_word(xw, params.backend());
                            FreePoly acc(params.backend());
                            for (size_t s = 0; s < seqs.size(); ++s) {
                                if (cs[s].is_zero()) continue;
                                FreePoly dx = apply_dword(seqs[s], x, params);
                                if (!dx.is_zero()) acc += cs[s] * dx;
                            }
                            if (!acc.is_zero()) return false;
                        }
                    }
                }
            }
        }
    }
    return true;
}

Reconstruction taylor_reconstruct(const FreePoly& x, const ParamSpec& params,
                                  const TaylorCoefficients& coeffs) {
    const int n = params.n_generators();
    int xdeg = 0;
    for (const auto& d : x.support_degrees(n)) xdeg = std::max(xdeg, total_degree(d));
    if (xdeg > coeffs.max_degree) throw Error("taylor_reconstruct: degree exceeds the table");
    FreePoly c = x;
    for (const auto& [seq, A] : coeffs.table) {
        FreePoly dx = apply_dword(seq, x, params);
        if (!dx.is_zero()) c -= A * dx;
    }
    Reconstruction r{c, true};
    for (int i = 1; i <= n; ++i)
        if (!apply_partial(i, c, params).is_zero()) {
            r.identity_holds = false;
            break;
        }
    return r;
}

// ---------------------------------------------------------------------
// One-forms

OneForm OneForm::zero(const ParamSpec& params) {
    OneForm y;
    y.components.assign(params.n_generators(), FreePoly(params.backend()));
    return y;
}

OneForm OneForm::gradient_of(const FreePoly& x, const ParamSpec& params) {
    OneForm y;
    for (int i = 1; i <= params.n_generators(); ++i)
        y.components.push_back(apply_partial(i, x, params));
    return y;
}

MultiDegree one_form_block(const OneForm& y, const ParamSpec& params) {
    const int n = params.n_generators();
    if (static_cast<int>(y.components.size()) != n) throw Error("one-form needs N components");
    std::optional<MultiDegree> block;
    for (int i = 1; i <= n; ++i) {
        const FreePoly& yi = y.components[i - 1];
        if (yi.is_zero()) continue;
        MultiDegree d;
        if (!yi.is_homogeneous(n, &d)) throw Error("one-form components must be homogeneous");
        ++d[i - 1];
        if (block && *block != d) throw Error("one-form components have incompatible degrees");
        block = d;
    }
    if (!block) throw Error("zero one-form has no block");
    return *block;
}

FreePoly constant_pairing(const FreePoly& c, const OneForm& y, const ParamSpec& params) {
    const int n = params.n_generators();
    for (int i = 1; i <= n; ++i)
        if (!apply_partial(i, c, params).is_zero()) throw Error("input not a constant");
    FreePoly acc(params.backend());
    for (const auto& [w, coeff] : c.terms()) {
        if (w.empty()) throw Error("constant with a degree-0 term");
        const FreePoly& tail = y.components.at(w.back() - 1);
        if (tail.is_zero()) continue;
        Word head(w.begin(), w.end() - 1);
        FreePoly v = apply_dword(head, tail, params);
        if (!v.is_zero()) acc += v * coeff;
    }
    return acc;
}

GradientResult solve_gradient(const OneForm& y, const MultiDegree& d, const ParamSpec& params) {
    const int n = params.n_generators();
    if (static_cast<int>(y.components.size()) != n) throw Error("one-form needs N components");
    auto basis = word_basis(d);
    size_t rows = 0;
    struct Blk {
        int i;
        MultiDegree deg;
        std::vector<Word> basis;
    };
    std::vector<Blk> blks;
    for (int i = 1; i <= n; ++i) {
        const FreePoly& yi = y.components[i - 1];
        if (d[i - 1] == 0) {
            if (!yi.is_zero()) throw Error("component y_i nonzero but block has no letter i");
            continue;
        }
        MultiDegree t = d;
        --t[i - 1];
        if (!yi.is_zero()) {
            MultiDegree yd;
            if (!yi.is_homogeneous(n, &yd) || yd != t)
                throw Error("one-form component in the wrong block");
        }
        blks.push_back({i, t, word_basis(t)});
        rows += blks.back().basis.size();
    }
    Matrix sys(rows, basis.size(), params.backend());
    std::vector<Scalar> rhs(rows, Scalar::zero(params.backend()));
    size_t at = 0;
    for (const auto& b : blks) {
        Matrix der = derivation_matrix(b.i, d, params);
        for (size_t r = 0; r < der.rows(); ++r)
            for (size_t c = 0; c < der.cols(); ++c) sys.at(at + r, c) = der.at(r, c);
        const FreePoly& yi = y.components[b.i - 1];
        for (size_t r = 0; r < b.basis.size(); ++r) rhs[at + r] = yi.coeff(b.basis[r]);
        at += b.basis.size();
    }
    GradientResult res;
    auto sol = Matrix::solve(sys, rhs);
    if (sol) {
        res.solution = FreePoly::from_coefficient_vector(*sol, d, params.backend());
        res.unique = find_constants(d, params).dimension() == 0;
        return res;
    }
    // Diagnose: some constant pairs nontrivially with y.
    ConstantBasis cb = find_constants(d, params);
    for (const auto& c : cb.basis) {
        FreePoly val = constant_pairing(c, y, params);
        if (!val.is_zero()) {
            res.violated_constant = c;
            res.pairing_value = val;
            return res;
        }
    }
    throw Error("internal: inconsistent gradient system without a constant witness");
}

namespace {

ClosednessReport closedness(const OneForm& y, const ParamSpec& params, bool strong) {
    ClosednessReport rep;
    MultiDegree d = one_form_block(y, params);
    // Enumerate sub-blocks d' <= d of total degree 2 (closed) or >= 2
    // (strongly closed).
    std::vector<MultiDegree> subs;
    {
        MultiDegree cur(d.size(), 0);
        for (;;) {
            if (total_degree(cur) >= 2 && (strong || total_degree(cur) == 2)) subs.push_back(cur);
            size_t k = 0;
            while (k < d.size()) {
                if (cur[k] < d[k]) {
                    ++cur[k];
                    break;
                }
                cur[k] = 0;
                ++k;
            }
            if (k == d.size()) break;
        }
    }
    std::sort(subs.begin(), subs.end(), [](const MultiDegree& a, const MultiDegree& b) {
        return total_degree(a) < total_degree(b);
    });
    for (const auto& dc : subs) {
        ConstantBasis cb = find_constants(dc, params);
        for (const auto& c : cb.basis) {
            FreePoly val = constant_pairing(c, y, params);
            if (!val.is_zero()) {
                rep.holds = false;
                // Prefer an irreducible witness, matching how obstructions
                // are diagnosed.
                rep.witness_constant = c;
                rep.witness_value = val;
                for (const auto& c2 : cb.basis) {
                    FreePoly v2 = constant_pairing(c2, y, params);
                    if (!v2.is_zero() && is_irreducible_constant(c2, params)) {
                        rep.witness_constant = c2;
                        rep.witness_value = v2;
                        break;
                    }
                }
                return rep;
            }
        }
    }
    return rep;
}

}  // namespace

ClosednessReport is_closed(const OneForm& y, const ParamSpec& params) {
    return closedness(y, params, false);
}

ClosednessReport is_strongly_closed(const OneForm& y, const ParamSpec& params) {
    return closedness(y, params, true);
}

}  // namespace qda
