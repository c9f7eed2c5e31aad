#include "qda/constants.hpp"

#include <algorithm>

namespace qda {

namespace {

std::vector<FreePoly> rows_to_polys(const std::vector<std::vector<Scalar>>& rows,
                                    const MultiDegree& d, const BackendSpec& backend) {
    std::vector<FreePoly> out;
    out.reserve(rows.size());
    for (const auto& r : rows) out.push_back(FreePoly::from_coefficient_vector(r, d, backend));
    return out;
}

// Enumerate all multidegrees e with e <= d componentwise.
void enumerate_subdegrees(const MultiDegree& d, std::vector<MultiDegree>& out) {
    MultiDegree cur(d.size(), 0);
    for (;;) {
        out.push_back(cur);
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

}  // namespace

Matrix derivation_matrix(int i, const MultiDegree& d, const ParamSpec& params,
                         DerivationSide side) {
    if (d[i - 1] == 0) throw Error("derivation_matrix: block has no letter i");
    MultiDegree target = d;
    --target[i - 1];
    auto src = word_basis(d);
    auto dst = word_basis(target);
    std::map<Word, size_t, WordOrder> index;
    for (size_t r = 0; r < dst.size(); ++r) index.emplace(dst[r], r);
    Matrix m(dst.size(), src.size(), params.backend());
    for (size_t c = 0; c < src.size(); ++c) {
        FreePoly dw = side == DerivationSide::left
                          ? apply_partial(i, FreePoly::from_word(src[c], params.backend()), params)
                          : apply_right_partial(i, FreePoly::from_word(src[c], params.backend()),
                                                params);
        for (const auto& [w, coeff] : dw.terms()) m.at(index.at(w), c) = coeff;
    }
    return m;
}

ConstantBasis find_constants(const MultiDegree& d, const ParamSpec& params, DerivationSide side) {
    if (total_degree(d) < 1) throw Error("find_constants: degree must be positive");
    const size_t dim = word_basis(d).size();
    // Stack the derivation blocks for every letter present.
    size_t rows = 0;
    std::vector<Matrix> blocks;
    for (size_t i = 0; i < d.size(); ++i) {
        if (d[i] == 0) continue;
        blocks.push_back(derivation_matrix(static_cast<int>(i + 1), d, params, side));
        rows += blocks.back().rows();
    }
    Matrix stacked(rows, dim, params.backend());
    size_t at = 0;
    for (const auto& b : blocks) {
        for (size_t r = 0; r < b.rows(); ++r)
            for (size_t c = 0; c < dim; ++c) stacked.at(at + r, c) = b.at(r, c);
        at += b.rows();
    }
    auto kernel = stacked.kernel_basis();
    auto rows_ech = echelonize_rows(kernel, params.backend());
    ConstantBasis cb;
    cb.degree = d;
    cb.basis = rows_to_polys(rows_ech, d, params.backend());
    return cb;
}

SGram s_gram(const MultiDegree& d, const ParamSpec& params) {
    auto basis = word_basis(d);
    Matrix m(basis.size(), basis.size(), params.backend());
    for (size_t r = 0; r < basis.size(); ++r) {
        const Word& x = basis[r];
        for (size_t c = 0; c < basis.size(); ++c) {
            FreePoly y = FreePoly::from_word(basis[c], params.backend());
            for (size_t k = x.size(); k-- > 0;) {
                y = apply_partial(x[k], y, params);
                if (y.is_zero()) break;
            }
            m.at(r, c) = y.projection_0();
        }
    }
    return SGram{d, std::move(m)};
}

std::vector<std::vector<Scalar>> constant_generated_span(const MultiDegree& d,
                                                         const ParamSpec& params,
                                                         bool strictly_lower,
                                                         DerivationSide side) {
    std::vector<std::vector<Scalar>> rows;
    std::vector<MultiDegree> subs;
    enumerate_subdegrees(d, subs);
    for (const auto& dc : subs) {
        if (total_degree(dc) < 2) continue;
        if (strictly_lower && dc == d) continue;
        ConstantBasis cb = find_constants(dc, params, side);
        if (cb.basis.empty()) continue;
        MultiDegree rest(d.size());
        for (size_t k = 0; k < d.size(); ++k) rest[k] = d[k] - dc[k];
        std::vector<MultiDegree> lefts;
        enumerate_subdegrees(rest, lefts);
        for (const auto& a : lefts) {
            MultiDegree b(d.size());
            for (size_t k = 0; k < d.size(); ++k) b[k] = rest[k] - a[k];
            for (const Word& u : word_basis(a)) {
                FreePoly pu = FreePoly::from_word(u, params.backend());
                for (const Word& v : word_basis(b)) {
                    FreePoly pv = FreePoly::from_word(v, params.backend());
                    for (const auto& c : cb.basis)
                        rows.push_back((pu * c * pv).coefficient_vector(d));
                }
            }
        }
    }
    return rows;
}

IdealSlice ideal_slice(const MultiDegree& d, const ParamSpec& params, bool cross_check) {
    SGram g = s_gram(d, params);
    auto kernel = g.matrix.kernel_basis();
    auto rows = echelonize_rows(kernel, params.backend());
    if (cross_check) {
        auto span = constant_generated_span(d, params, /*strictly_lower=*/false);
        if (!same_row_span(rows, span, word_basis(d).size(), params.backend()))
            throw Error("internal consistency: S-radical differs from the constant-generated span");
    }
    IdealSlice s;
    s.degree = d;
    s.basis = rows_to_polys(rows, d, params.backend());
    return s;
}

FreePoly QuotientBasis::reduce(const FreePoly& p) const {
    FreePoly r = p;
    auto basis = word_basis(degree);
    for (size_t k = 0; k < ideal_basis.size(); ++k) {
        const Word& pivot = basis[pivot_columns[k]];
        Scalar c = r.coeff(pivot);
        if (!c.is_zero()) r -= ideal_basis[k] * c;
    }
    return r;
}

QuotientBasis quotient_basis(const MultiDegree& d, const ParamSpec& params) {
    IdealSlice slice = ideal_slice(d, params);
    QuotientBasis q;
    q.degree = d;
    auto basis = word_basis(d);
    std::map<Word, size_t, WordOrder> index;
    for (size_t r = 0; r < basis.size(); ++r) index.emplace(basis[r], r);
    std::vector<bool> is_pivot(basis.size(), false);
    for (const auto& p : slice.basis) {
        // Echelon rows: the pivot is the first supported word.
        size_t col = index.at(p.terms().begin()->first);
        q.pivot_columns.push_back(col);
        is_pivot[col] = true;
        q.ideal_basis.push_back(p);
    }
    for (size_t c = 0; c < basis.size(); ++c)
        if (!is_pivot[c]) q.representatives.push_back(basis[c]);
    return q;
}

TGram t_gram(const MultiDegree& d, const ParamSpec& params) {
    SGram g = s_gram(d, params);
    TGram t;
    t.degree = d;
    auto inv = g.matrix.inverse();
    if (inv) {
        t.representative_columns.resize(g.matrix.cols());
        for (size_t c = 0; c < g.matrix.cols(); ++c) t.representative_columns[c] = c;
        t.matrix = std::move(*inv);
        return t;
    }
    // Singular block: invert the form induced on the quotient, in the
    // coordinates of the representative words.
    QuotientBasis q = quotient_basis(d, params);
    auto basis = word_basis(d);
    std::map<Word, size_t, WordOrder> index;
    for (size_t r = 0; r < basis.size(); ++r) index.emplace(basis[r], r);
    std::vector<size_t> reps;
    for (const auto& w : q.representatives) reps.push_back(index.at(w));
    Matrix sub(reps.size(), reps.size(), params.backend());
    for (size_t i = 0; i < reps.size(); ++i)
        for (size_t j = 0; j < reps.size(); ++j) sub.at(i, j) = g.matrix.at(reps[i], reps[j]);
    auto sub_inv = sub.inverse();
    if (!sub_inv) throw Error("internal consistency: induced form on the quotient is singular");
    t.representative_columns = std::move(reps);
    t.matrix = std::move(*sub_inv);
    return t;
}

bool is_irreducible_constant(const FreePoly& c, const ParamSpec& params) {
    const int n = params.n_generators();
    MultiDegree d;
    if (c.is_zero() || !c.is_homogeneous(n, &d)) throw Error("input not a homogeneous constant");
    for (int i = 1; i <= n; ++i)
        if (!apply_partial(i, c, params).is_zero()) throw Error("input not a constant");
    auto lower = constant_generated_span(d, params, /*strictly_lower=*/true);
    return !in_row_span(lower, c.coefficient_vector(d), params.backend());
}

ExtensionResult extend_constant(const FreePoly& c, const Word& x, const ParamSpec& params) {
    const int n = params.n_generators();
    MultiDegree dc;
    if (c.is_zero() || !c.is_homogeneous(n, &dc)) throw Error("input not a homogeneous constant");
    for (int i = 1; i <= n; ++i)
        if (!apply_partial(i, c, params).is_zero()) throw Error("input not a constant");

    FreePoly base = c * FreePoly::from_word(x, params.backend());
    MultiDegree dx = multidegree(x, n);
    if (x.empty()) return ExtensionResult{base, {}};

    // Ansatz terms u C v with u nonempty, multidegree(u v) = multidegree(x).
    std::vector<FreePoly> columns;
    std::vector<MultiDegree> lefts;
    enumerate_subdegrees(dx, lefts);
    for (const auto& a : lefts) {
        if (total_degree(a) == 0) continue;
        MultiDegree b(dx.size());
        for (size_t k = 0; k < dx.size(); ++k) b[k] = dx[k] - a[k];
        for (const Word& u : word_basis(a))
            for (const Word& v : word_basis(b))
                columns.push_back(FreePoly::from_word(u, params.backend()) * c *
                                  FreePoly::from_word(v, params.backend()));
    }

    MultiDegree dtot(dc.size());
    for (size_t k = 0; k < dtot.size(); ++k) dtot[k] = dc[k] + dx[k];
    // Equations: partial_i (base + sum lambda_j col_j) = 0 for all i.
    size_t rows = 0;
    std::vector<MultiDegree> targets;
    for (int i = 1; i <= n; ++i) {
        if (dtot[i - 1] == 0) continue;
        MultiDegree t = dtot;
        --t[i - 1];
        targets.push_back(t);
        rows += word_basis(t).size();
    }
    Matrix m(rows, columns.size(), params.backend());
    std::vector<Scalar> rhs(rows, Scalar::zero(params.backend()));
    size_t at = 0;
    size_t ti = 0;
    for (int i = 1; i <= n; ++i) {
        if (dtot[i - 1] == 0) continue;
        const auto& t = targets[ti++];
        auto tb = word_basis(t);
        std::map<Word, size_t, WordOrder> index;
        for (size_t r = 0; r < tb.size(); ++r) index.emplace(tb[r], r);
        FreePoly db = apply_partial(i, base, params);
        for (const auto& [w, coeff] : db.terms()) rhs[at + index.at(w)] = -coeff;
        for (size_t j = 0; j < columns.size(); ++j) {
            FreePoly dcol = apply_partial(i, columns[j], params);
            for (const auto& [w, coeff] : dcol.terms()) m.at(at + index.at(w), j) = coeff;
        }
        at += tb.size();
    }
    auto sol = Matrix::solve(m, rhs);
    if (!sol) {
        return ExtensionResult{std::nullopt,
                               "extension obstructed: the linear system for the ansatz is inconsistent"};
    }
    FreePoly result = base;
    for (size_t j = 0; j < columns.size(); ++j)
        if (!(*sol)[j].is_zero()) result += columns[j] * (*sol)[j];
    if (result.is_zero())
        return ExtensionResult{std::nullopt,
                               "extension obstructed: only the zero element has the stated form"};
    return ExtensionResult{result, {}};
}

const ConstantBasis& BlockCache::constants(const MultiDegree& d) {
    auto it = constants_.find(d);
    if (it == constants_.end())
        it = constants_.emplace(d, find_constants(d, params_)).first;
    return it->second;
}

const QuotientBasis& BlockCache::quotient(const MultiDegree& d) {
    auto it = quotients_.find(d);
    if (it == quotients_.end()) it = quotients_.emplace(d, quotient_basis(d, params_)).first;
    return it->second;
}

FreePoly BlockCache::normal_form(const FreePoly& p) {
    const int n = params_.n_generators();
    FreePoly out(p.backend());
    for (const auto& d : p.support_degrees(n)) {
        FreePoly comp = p.component(d, n);
        if (total_degree(d) == 0) {
            out += comp;
            continue;
        }
        out += quotient(d).reduce(comp);
    }
    return out;
}

}  // namespace qda
