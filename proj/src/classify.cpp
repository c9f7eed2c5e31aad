#include "qda/classify.hpp"

#include <algorithm>
#include <array>

namespace qda {

size_t dim_constants_multilinear(int n, const ParamSpec& params) {
    if (n < 2 || n > params.n_generators()) throw Error("dim_constants_multilinear: bad n");
    MultiDegree d(params.n_generators(), 0);
    for (int i = 0; i < n; ++i) d[i] = 1;
    return find_constants(d, params).dimension();
}

MultilinearPrediction predict_dim_multilinear(int n, const ParamSpec& params) {
    MultilinearPrediction out;
    // Hypothesis: no constants in B_(s) for any proper subset s.
    for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
        std::vector<int> subset;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) subset.push_back(i + 1);
        if (subset.size() < 2) continue;
        MultiDegree d(params.n_generators(), 0);
        for (int i : subset) d[i - 1] = 1;
        if (find_constants(d, params).dimension() > 0) {
            out.hypothesis_holds = false;
            out.violating_subset = subset;
            return out;
        }
    }
    std::vector<int> all;
    for (int i = 1; i <= n; ++i) all.push_back(i);
    if (params.sigma_set(all).is_one()) {
        size_t f = 1;
        for (int k = 2; k <= n - 2; ++k) f *= k;
        out.predicted = f;
    } else {
        out.predicted = 0;
    }
    return out;
}

std::string order3_case_name(Order3Case c) {
    switch (c) {
        case Order3Case::generic: return "generic";
        case Order3Case::sigma123: return "sigma123";
        case Order3Case::one_pair: return "one-pair";
        case Order3Case::two_pair: return "two-pair";
        case Order3Case::three_pair: return "three-pair";
        case Order3Case::pair_plus_sigma123: return "pair-plus-sigma123";
    }
    return "?";
}

Order3Report classify_order3(const ParamSpec& params) {
    if (params.n_generators() < 3) throw Error("classify_order3 needs N >= 3");
    Order3Report rep;
    bool s12 = params.sigma(1, 2).is_one();
    bool s13 = params.sigma(1, 3).is_one();
    bool s23 = params.sigma(2, 3).is_one();
    bool s123 = params.sigma_set({1, 2, 3}).is_one();
    int pairs = (s12 ? 1 : 0) + (s13 ? 1 : 0) + (s23 ? 1 : 0);
    if (pairs == 3)
        rep.label = Order3Case::three_pair;
    else if (pairs == 2)
        rep.label = Order3Case::two_pair;
    else if (pairs == 1)
        rep.label = s123 ? Order3Case::pair_plus_sigma123 : Order3Case::one_pair;
    else
        rep.label = s123 ? Order3Case::sigma123 : Order3Case::generic;

    MultiDegree d(params.n_generators(), 0);
    d[0] = d[1] = d[2] = 1;
    rep.constants = find_constants(d, params).basis;
    IdealSlice slice = ideal_slice(d, params, /*cross_check=*/true);
    rep.ideal_dimension = slice.dimension();
    rep.quotient_dimension = word_basis(d).size() - rep.ideal_dimension;
    return rep;
}

FreePoly constant_C123(int i, int j, int k, const ParamSpec& params) {
    // (1/q_ki - q_ik)(xi_i xi_j xi_k + q_ki q_kj q_ji xi_k xi_j xi_i) + cyclic.
    FreePoly acc(params.backend());
    std::array<std::array<int, 3>, 3> cyc{{{i, j, k}, {j, k, i}, {k, i, j}}};
    for (const auto& [a, b, c] : cyc) {
        Scalar pref = params.q(c, a).inverse() - params.q(a, c);
        acc.add_term({a, b, c}, pref);
        acc.add_term({c, b, a}, pref * params.q(c, a) * params.q(c, b) * params.q(b, a));
    }
    return acc;
}

FreePoly antisymmetrize_pair(int i, int j, const ParamSpec& params) {
    FreePoly p(params.backend());
    p.add_term({i, j}, params.q(i, j).sqrt());
    p.add_term({j, i}, -params.q(j, i).sqrt());
    return p;
}

FreePoly symmetrize_triple(int i, int j, int k, const ParamSpec& params) {
    // Sum of sqrt(q_ab q_bc q_ca)(q_ca^{-1} - q_ac) xi_a xi_b xi_c over all
    // six orderings (a,b,c) of (i,j,k).
    FreePoly acc(params.backend());
    std::array<int, 3> idx{i, j, k};
    std::sort(idx.begin(), idx.end());
    do {
        int a = idx[0], b = idx[1], c = idx[2];
        Scalar root = (params.q(a, b) * params.q(b, c) * params.q(c, a)).sqrt();
        acc.add_term({a, b, c}, root * (params.q(c, a).inverse() - params.q(a, c)));
    } while (std::next_permutation(idx.begin(), idx.end()));
    return acc;
}

bool order3_single_generator_check(const ParamSpec& params) {
    MultiDegree d(params.n_generators(), 0);
    d[0] = 3;
    bool has_cubic = find_constants(d, params).dimension() > 0;
    // xi_1^3 is a constant iff [3]_{q_11} = 0 with [2]_{q_11} != 0 there,
    // i.e. q_11 a primitive cube root of unity.
    bool predicted = q_integer(3, params.q(1, 1)).is_zero();
    return has_cubic == predicted;
}

bool four_generator_identity_holds(const ParamSpec& params) {
    if (params.n_generators() < 4) throw Error("need N >= 4");
    const BackendSpec& bk = params.backend();
    auto dhat = [&](int i) {
        OperatorPoly op(bk);
        op.add_term({i}, params.one());
        return op;
    };
    auto chat = [&](int a, int b, int c) { return hat_map(constant_C123(a, b, c, params)); };

    auto q = [&](int a, int b) { return params.q(a, b); };
    OperatorPoly lhs =
        dhat(4) * chat(1, 2, 3) +
        (dhat(1) * chat(2, 3, 4)) * (q(1, 4) * q(1, 3) * q(3, 4)) +
        (dhat(2) * chat(1, 3, 4)) * (q(2, 1) * q(1, 3) / (q(4, 2) * q(4, 3))) +
        (dhat(3) * chat(1, 2, 4)) * (q(3, 4) * q(3, 2) * q(2, 4)) +
        (chat(4, 1, 2) * dhat(3)) * (-(q(2, 4) / q(3, 1))) +
        (chat(4, 2, 3) * dhat(1)) * (-(q(3, 4) / q(1, 2))) +
        (chat(4, 1, 3) * dhat(2)) * (-(q(1, 3) * q(3, 2) * q(3, 4))) +
        (chat(1, 2, 3) * dhat(4)) * (-(q(1, 4) * q(2, 4) * q(3, 4)));
    return operator_is_zero(lhs, params);
}

bool appendix_sqrt_identity_holds(const ParamSpec& params) {
    if (params.n_generators() < 4) throw Error("need N >= 4");
    const BackendSpec& bk = params.backend();
    auto dhat = [&](int i) {
        OperatorPoly op(bk);
        op.add_term({i}, params.one());
        return op;
    };
    // (sqrt(q_i,j q_i,k q_i,l) d_i C_jkl - sqrt(q_j,i q_k,i q_l,i) C_jkl d_i) + cyclic,
    // with (j,k,l) the cyclic successors of i in (1,2,3,4) and C the
    // symmetrized appendix form.
    OperatorPoly acc(bk);
    std::array<std::array<int, 4>, 4> cyc{{{1, 2, 3, 4}, {2, 3, 4, 1}, {3, 4, 1, 2}, {4, 1, 2, 3}}};
    for (const auto& [i, j, k, l] : cyc) {
        OperatorPoly c = hat_map(symmetrize_triple(j, k, l, params));
        Scalar left = (params.q(i, j) * params.q(i, k) * params.q(i, l)).sqrt();
        Scalar right = (params.q(j, i) * params.q(k, i) * params.q(l, i)).sqrt();
        acc = acc + (dhat(i) * c) * left + (c * dhat(i)) * (-right);
    }
    return operator_is_zero(acc, params);
}

}  // namespace qda
