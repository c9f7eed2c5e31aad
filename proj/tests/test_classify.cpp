#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qda/classify.hpp"

using namespace qda;

namespace {

const BackendSpec kSym{Backend::symbolic, 1};

ParamSpec with_constraints(int n, const std::vector<std::string>& texts, bool even = false) {
    std::vector<Constraint> cs;
    for (const auto& t : texts) cs.push_back(Constraint::parse(t, kSym));
    ParamOptions opts;
    opts.even_exponents = even;
    return ParamSpec::from_constraints(n, cs, opts);
}

bool is_constant(const FreePoly& c, const ParamSpec& p) {
    if (c.is_zero()) return false;
    for (int i = 1; i <= p.n_generators(); ++i)
        if (!apply_partial(i, c, p).is_zero()) return false;
    return true;
}

}  // namespace

TEST_CASE("multilinear dimensions follow the factorial rule") {
    // n = 3: sigma_123 = 1 with subsets generic.
    ParamSpec p3 = with_constraints(3, {"sigma(1,2,3) = 1"});
    CHECK(dim_constants_multilinear(3, p3) == 1);
    auto pred3 = predict_dim_multilinear(3, p3);
    CHECK(pred3.hypothesis_holds);
    CHECK(pred3.predicted == 1);

    // n = 4.
    ParamSpec p4 = with_constraints(4, {"sigma(1,2,3,4) = 1"});
    CHECK(dim_constants_multilinear(4, p4) == 2);
    CHECK(predict_dim_multilinear(4, p4).predicted == 2);

    // Generic: zero.
    ParamSpec g = ParamSpec::from_constraints(4, {});
    CHECK(dim_constants_multilinear(4, g) == 0);
    CHECK(predict_dim_multilinear(4, g).predicted == 0);

    // Hypothesis violation is reported.
    ParamSpec bad = with_constraints(3, {"sigma(1,2) = 1"});
    auto predbad = predict_dim_multilinear(3, bad);
    CHECK_FALSE(predbad.hypothesis_holds);
    CHECK(predbad.violating_subset == std::vector<int>{1, 2});
}

TEST_CASE("order-3 classification matches the table") {
    struct Case {
        std::vector<std::string> constraints;
        Order3Case label;
        size_t n_const, dim_ideal, dim_quot;
    };
    std::vector<Case> cases = {
        {{}, Order3Case::generic, 0, 0, 6},
        {{"sigma(1,2,3) = 1"}, Order3Case::sigma123, 1, 1, 5},
        {{"sigma(1,2) = 1"}, Order3Case::one_pair, 1, 2, 4},
        {{"sigma(1,2) = 1", "sigma(2,3) = 1"}, Order3Case::two_pair, 2, 4, 2},
        {{"sigma(1,2) = 1", "sigma(1,3) = 1", "sigma(2,3) = 1"}, Order3Case::three_pair, 2, 5, 1},
        {{"sigma(1,2) = 1", "sigma(1,2,3) = 1"}, Order3Case::pair_plus_sigma123, 1, 2, 4},
    };
    for (const auto& c : cases) {
        ParamSpec p = with_constraints(3, c.constraints);
        Order3Report rep = classify_order3(p);
        CHECK(rep.label == c.label);
        CHECK(rep.constants.size() == c.n_const);
        CHECK(rep.ideal_dimension == c.dim_ideal);
        CHECK(rep.quotient_dimension == c.dim_quot);
    }
}

TEST_CASE("existence criterion both ways") {
    // Each factor surface alone produces constants; off all of them, none.
    for (const auto& texts :
         std::vector<std::vector<std::string>>{{"sigma(1,2) = 1"},
                                               {"sigma(1,3) = 1"},
                                               {"sigma(2,3) = 1"},
                                               {"sigma(1,2,3) = 1"}}) {
        ParamSpec p = with_constraints(3, texts);
        MultiDegree d{1, 1, 1};
        CHECK(find_constants(d, p).dimension() > 0);
    }
    ParamSpec g = ParamSpec::from_constraints(3, {});
    CHECK(find_constants({1, 1, 1}, g).dimension() == 0);
}

TEST_CASE("closed form of the order-3 constant") {
    ParamSpec p = with_constraints(3, {"sigma(1,2,3) = 1"});
    FreePoly c = constant_C123(1, 2, 3, p);
    // First cyclic summand: (1/q_31 - q_13)(x1x2x3 + q_31 q_32 q_21 x3x2x1).
    Scalar pref = p.q(3, 1).inverse() - p.q(1, 3);
    CHECK(c.coeff({1, 2, 3}) == pref);
    CHECK(c.coeff({3, 2, 1}) == pref * p.q(3, 1) * p.q(3, 2) * p.q(2, 1));
    CHECK(is_constant(c, p));

    // Agrees up to scalar with the kernel basis.
    FreePoly basis = find_constants({1, 1, 1}, p).basis.at(0);
    Scalar ratio = c.terms().begin()->second / basis.terms().begin()->second;
    CHECK(c == basis * ratio);

    // Cyclic relabeling gives the same polynomial.
    CHECK(constant_C123(2, 3, 1, p) == c);
}

TEST_CASE("appendix antisymmetrized and symmetrized forms") {
    ParamSpec p = with_constraints(3, {"sigma(1,2) = 1"}, /*even=*/true);
    FreePoly anti = antisymmetrize_pair(1, 2, p);
    // Proportional to x1x2 - q21 x2x1 on the surface.
    FreePoly c = FreePoly::from_word({1, 2}, p.backend()) -
                 FreePoly::from_word({2, 1}, p.backend()) * p.q(2, 1);
    Scalar ratio = anti.coeff({1, 2});
    CHECK(anti == c * ratio);
    CHECK(is_constant(anti, p));

    ParamSpec p123 = with_constraints(3, {"sigma(1,2,3) = 1"}, /*even=*/true);
    FreePoly sym = symmetrize_triple(1, 2, 3, p123);
    CHECK(is_constant(sym, p123));
    FreePoly closed = constant_C123(1, 2, 3, p123);
    Scalar r2 = sym.terms().begin()->second / closed.terms().begin()->second;
    CHECK(sym == closed * r2);
}

TEST_CASE("square roots need even exponents") {
    ParamSpec p = with_constraints(3, {}, /*even=*/false);
    // Odd exponents occur with probability ~1; if all drawn even this
    // check is vacuous, so probe all entries.
    bool any_odd = false;
    for (int i = 1; i <= 3 && !any_odd; ++i)
        for (int j = 1; j <= 3 && !any_odd; ++j) any_odd = p.exponent_of(i, j) % 2 != 0;
    if (any_odd) CHECK_THROWS_AS(symmetrize_triple(1, 2, 3, p), Error);
}

TEST_CASE("single generator cubes") {
    BackendSpec c3{Backend::cyclotomic, 3};
    std::vector<Constraint> cs;
    cs.push_back(Constraint::parse("q[1,1] = z", c3));
    ParamSpec zeta = ParamSpec::from_table(1, c3, cs);
    CHECK(find_constants({3}, zeta).dimension() == 1);
    CHECK(order3_single_generator_check(zeta));

    BackendSpec rat{Backend::rational, 1};
    std::vector<Constraint> cs2;
    cs2.push_back(Constraint::parse("q[1,1] = -1", rat));
    ParamSpec minus = ParamSpec::from_table(1, rat, cs2);
    CHECK(find_constants({2}, minus).dimension() == 1);
    CHECK(find_constants({3}, minus).dimension() == 0);
    CHECK(order3_single_generator_check(minus));

    ParamSpec g = ParamSpec::from_constraints(1, {});
    for (int r = 1; r <= 4; ++r) CHECK(find_constants({r}, g).dimension() == 0);
    CHECK(order3_single_generator_check(g));
}

TEST_CASE("four-generator operator identity") {
    ParamSpec p = with_constraints(4, {"sigma(1,2,3) = 1", "sigma(1,2,4) = 1",
                                        "sigma(1,3,4) = 1", "sigma(2,3,4) = 1"});
    // The triple constraints force the complementary-pair equality.
    CHECK(p.sigma(1, 2) == p.sigma(3, 4));
    CHECK(p.sigma(1, 3) == p.sigma(2, 4));
    CHECK(p.sigma(1, 4) == p.sigma(2, 3));
    CHECK(four_generator_identity_holds(p));
}

TEST_CASE("appendix square-root identity") {
    ParamSpec p = with_constraints(4,
                                   {"sigma(1,2,3) = 1", "sigma(1,2,4) = 1", "sigma(1,3,4) = 1",
                                    "sigma(2,3,4) = 1"},
                                   /*even=*/true);
    CHECK(appendix_sqrt_identity_holds(p));
}
