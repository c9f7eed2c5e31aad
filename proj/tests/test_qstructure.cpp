#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qda/derivations.hpp"

using namespace qda;

namespace {

const BackendSpec kSym{Backend::symbolic, 1};

ParamSpec generic(int n) { return ParamSpec::from_constraints(n, {}); }

ParamSpec with_constraints(int n, const std::vector<std::string>& texts) {
    std::vector<Constraint> cs;
    for (const auto& t : texts) cs.push_back(Constraint::parse(t, kSym));
    return ParamSpec::from_constraints(n, cs);
}

Word random_word(std::mt19937_64& gen, int n, int len) {
    Word w;
    for (int k = 0; k < len; ++k) w.push_back(static_cast<int>(gen() % n) + 1);
    return w;
}

}  // namespace

TEST_CASE("constraint substitution") {
    // sigma(1,2) = 1 eliminates the lexicographically last variable q21.
    ParamSpec p = with_constraints(2, {"sigma(1,2) = 1"});
    CHECK(p.sigma(1, 2).is_one());
    CHECK(p.q(2, 1) == p.q(1, 2).inverse());
    CHECK_FALSE(p.q(1, 2).is_one());

    // sigma(1,2,3) = 1 with all pairwise sigmas generic.
    ParamSpec p3 = with_constraints(3, {"sigma(1,2,3) = 1"});
    CHECK(p3.sigma_set({1, 2, 3}).is_one());
    CHECK_FALSE(p3.sigma(1, 2).is_one());
    CHECK_FALSE(p3.sigma(1, 3).is_one());
    CHECK_FALSE(p3.sigma(2, 3).is_one());

    // The A2 Serre surface.
    ParamSpec a2 = with_constraints(2, {"sigma(1,2)*q[1,1] = 1", "sigma(1,2)*q[2,2] = 1"});
    CHECK((a2.sigma(1, 2) * a2.q(1, 1)).is_one());
    CHECK((a2.sigma(1, 2) * a2.q(2, 2)).is_one());
    CHECK(a2.q(1, 1) == a2.q(2, 2));
}

TEST_CASE("collision check keeps unconstrained relations away") {
    ParamSpec p = generic(3);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            if (i != j) CHECK_FALSE(p.sigma(i, j).is_one());
            CHECK_FALSE(p.q(i, i).is_one());
        }
    CHECK_FALSE(p.sigma_set({1, 2, 3}).is_one());
}

TEST_CASE("relation_implied distinguishes imposed from accidental") {
    ParamSpec p = with_constraints(3, {"sigma(1,2) = 1"});
    std::map<std::pair<int, int>, long> imposed{{{1, 2}, 1}, {{2, 1}, 1}};
    CHECK(p.relation_implied(imposed));
    std::map<std::pair<int, int>, long> other{{{1, 3}, 1}, {{3, 1}, 1}};
    CHECK_FALSE(p.relation_implied(other));
}

TEST_CASE("left derivation rule") {
    ParamSpec p = generic(2);
    // d_1(xi_1^r) = [r]_q11 xi_1^{r-1}
    for (int r = 1; r <= 5; ++r) {
        FreePoly xr = FreePoly::from_word(Word(r, 1), p.backend());
        FreePoly expect =
            FreePoly::from_word(Word(r - 1, 1), p.backend()) * q_integer(r, p.q(1, 1));
        CHECK(apply_partial(1, xr, p) == expect);
    }
    // d_1(xi_2 xi_1) = q_12 xi_2
    CHECK(apply_partial(1, FreePoly::from_word({2, 1}, p.backend()), p) ==
          FreePoly::generator(2, p.backend()) * p.q(1, 2));
    // d_1(xi_1 xi_2 - q_21 xi_2 xi_1) = (1 - sigma_12) xi_2
    FreePoly c = FreePoly::from_word({1, 2}, p.backend()) -
                 FreePoly::from_word({2, 1}, p.backend()) * p.q(2, 1);
    CHECK(apply_partial(1, c, p) ==
          FreePoly::generator(2, p.backend()) * (p.one() - p.sigma(1, 2)));

    ParamSpec ps = with_constraints(2, {"sigma(1,2) = 1"});
    FreePoly cs = FreePoly::from_word({1, 2}, ps.backend()) -
                  FreePoly::from_word({2, 1}, ps.backend()) * ps.q(2, 1);
    CHECK(apply_partial(1, cs, ps).is_zero());
    CHECK(apply_partial(2, cs, ps).is_zero());
}

TEST_CASE("right derivation rule") {
    ParamSpec p = generic(2);
    CHECK(apply_right_partial(2, FreePoly::from_word({1, 2}, p.backend()), p) ==
          FreePoly::generator(1, p.backend()));
    // Mirror rule on a 2-letter word, worked by hand: (xi_2 xi_1)<-d_2 = q_12 xi_1.
    CHECK(apply_right_partial(2, FreePoly::from_word({2, 1}, p.backend()), p) ==
          FreePoly::generator(1, p.backend()) * p.q(1, 2));
    CHECK(apply_right_partial(1, FreePoly::unit(p.backend()), p).is_zero());
}

TEST_CASE("left and right derivations commute") {
    ParamSpec p = generic(3);
    std::mt19937_64 gen(4242);
    for (int trial = 0; trial < 15; ++trial) {
        FreePoly x(p.backend());
        x.add_term(random_word(gen, 3, 4), p.one());
        x.add_term(random_word(gen, 3, 3), Scalar::from_int(2, p.backend()));
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j) {
                CHECK(apply_right_partial(j, apply_partial(i, x, p), p) ==
                      apply_partial(i, apply_right_partial(j, x, p), p));
            }
    }
}

TEST_CASE("twisted Leibniz split independence") {
    // Differentiating u*v directly agrees with d(u) v + kappa(u) u d(v).
    ParamSpec p = generic(3);
    std::mt19937_64 gen(11);
    for (int trial = 0; trial < 20; ++trial) {
        Word u = random_word(gen, 3, 3), v = random_word(gen, 3, 3);
        FreePoly pu = FreePoly::from_word(u, p.backend());
        FreePoly pv = FreePoly::from_word(v, p.backend());
        for (int i = 1; i <= 3; ++i) {
            FreePoly whole = apply_partial(i, pu * pv, p);
            FreePoly split = apply_partial(i, pu, p) * pv +
                             pu * apply_partial(i, pv, p) *
                                 p.kappa_upper(i, multidegree(u, 3));
            CHECK(whole == split);
        }
    }
}

TEST_CASE("q-bracket") {
    ParamSpec p = generic(2);
    FreePoly x1 = FreePoly::generator(1, p.backend());
    FreePoly x2 = FreePoly::generator(2, p.backend());
    FreePoly c12 = q_bracket(x1, x2, p.q(2, 1));
    CHECK(c12 == x1 * x2 - x2 * x1 * p.q(2, 1));
    CHECK(q_bracket(c12, c12, p.one()).is_zero());
    // The B2 element [[x1,x2]_q21, x2]_{q21 q11} expands with three terms.
    FreePoly e = q_bracket(c12, x2, p.q(2, 1) * p.q(1, 1));
    CHECK(e.support_size() == 3);
    CHECK(e.coeff({1, 2, 2}).is_one());
    CHECK(e.coeff({2, 1, 2}) == -(p.q(2, 1) * (p.one() + p.q(1, 1))));
    CHECK(e.coeff({2, 2, 1}) == p.q(2, 1) * p.q(2, 1) * p.q(1, 1));
}

TEST_CASE("hat map and operator application") {
    ParamSpec p = generic(2);
    // d_1 d_2 applied to xi_1 xi_2 gives q_21.
    OperatorPoly op = hat_map(FreePoly::from_word({1, 2}, p.backend()));
    FreePoly r = operator_apply(op, FreePoly::from_word({1, 2}, p.backend()), p);
    CHECK(r == FreePoly::unit(p.backend()) * p.q(2, 1));

    // hat(C_12) with sigma_12 = 1 annihilates low blocks.
    ParamSpec ps = with_constraints(2, {"sigma(1,2) = 1"});
    FreePoly c = FreePoly::from_word({1, 2}, ps.backend()) -
                 FreePoly::from_word({2, 1}, ps.backend()) * ps.q(2, 1);
    OperatorPoly chat = hat_map(c);
    CHECK(operator_is_zero(chat, ps));
    std::mt19937_64 gen(5);
    for (int trial = 0; trial < 10; ++trial) {
        FreePoly x = FreePoly::from_word(random_word(gen, 2, 4), ps.backend());
        CHECK(operator_apply(chat, x, ps).is_zero());
    }

    // Generic parameters: d_1 d_2 - q_21 d_2 d_1 is not a relation.
    OperatorPoly generic_op = hat_map(FreePoly::from_word({1, 2}, p.backend()) -
                                      FreePoly::from_word({2, 1}, p.backend()) * p.q(2, 1));
    CHECK_FALSE(operator_is_zero(generic_op, p));
}

TEST_CASE("partials nilpotent at roots of unity") {
    // q_11 primitive n-th root: d_1^n = 0.
    for (unsigned n : {2u, 3u}) {
        std::vector<Constraint> cs;
        BackendSpec cyc{Backend::cyclotomic, n};
        cs.push_back(Constraint::parse("q[1,1] = z", cyc));
        cs.push_back(Constraint::parse("q[1,2] = 2", cyc));
        cs.push_back(Constraint::parse("q[2,1] = 3", cyc));
        cs.push_back(Constraint::parse("q[2,2] = 5", cyc));
        ParamSpec p = ParamSpec::from_table(2, cyc, cs);
        std::mt19937_64 gen(n);
        for (int trial = 0; trial < 8; ++trial) {
            FreePoly x = FreePoly::from_word(random_word(gen, 2, n + 2), p.backend());
            FreePoly y = x;
            for (unsigned k = 0; k < n; ++k) y = apply_partial(1, y, p);
            CHECK(y.is_zero());
        }
    }
}

TEST_CASE("K automorphisms and f") {
    ParamSpec p = generic(3);
    // K^i(xi_j) = q_ij xi_j
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            FreePoly xj = FreePoly::generator(j, p.backend());
            CHECK(apply_K(i, KSign::upper, xj, p) == xj * p.q(i, j));
            CHECK(apply_K(i, KSign::lower, xj, p) == xj * p.q(j, i).inverse());
        }
    for (int i = 1; i <= 3; ++i) CHECK(apply_f(i, FreePoly::unit(p.backend()), p).is_zero());

    // [e_1, f_2](xi_1) = 0 and [e_1, f_1](xi_2) = (q_12 - 1/q_21) xi_2.
    FreePoly x1 = FreePoly::generator(1, p.backend());
    FreePoly x2 = FreePoly::generator(2, p.backend());
    CHECK((apply_e(1, apply_f(2, x1, p)) - apply_f(2, apply_e(1, x1), p)).is_zero());
    FreePoly lhs = apply_e(1, apply_f(1, x2, p)) - apply_f(1, apply_e(1, x2), p);
    CHECK(lhs == x2 * (p.q(1, 2) - p.q(2, 1).inverse()));
}

TEST_CASE("all 2.1.4 relations hold on low-degree words") {
    ParamSpec p = generic(3);
    RelationReport rep = verify_ef_relations(p, 3);
    for (const auto& f : rep.failures) MESSAGE(f);
    CHECK(rep.ok);
}
