#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qda/hochschild.hpp"
#include "qda/taylor.hpp"

using namespace qda;

namespace {

const BackendSpec kSym{Backend::symbolic, 1};

ParamSpec generic(int n) { return ParamSpec::from_constraints(n, {}); }

ParamSpec with_constraints(int n, const std::vector<std::string>& texts) {
    std::vector<Constraint> cs;
    for (const auto& t : texts) cs.push_back(Constraint::parse(t, kSym));
    return ParamSpec::from_constraints(n, cs);
}

Word random_word(std::mt19937_64& gen, int n, int maxlen) {
    Word w;
    int len = 1 + static_cast<int>(gen() % maxlen);
    for (int k = 0; k < len; ++k) w.push_back(static_cast<int>(gen() % n) + 1);
    return w;
}

Chain random_chain(std::mt19937_64& gen, const ParamSpec& p, int arity) {
    Chain c(arity, p.backend());
    for (int t = 0; t < 3; ++t) {
        std::vector<Word> entry;
        for (int k = 0; k < arity; ++k) entry.push_back(random_word(gen, p.n_generators(), 2));
        c.add_term(entry, Scalar::from_int(static_cast<long>(gen() % 9) - 4, p.backend()));
    }
    return c;
}

}  // namespace

TEST_CASE("boundary formulas") {
    ParamSpec p = generic(2);
    FreePoly a = FreePoly::from_word({1}, p.backend());
    FreePoly b = FreePoly::from_word({2}, p.backend());
    FreePoly c = FreePoly::from_word({1, 2}, p.backend());

    // d(a (x) b) = ab
    Chain ab = Chain::tensor({a, b});
    Chain bd = hochschild_boundary(ab);
    REQUIRE(bd.arity() == 1);
    CHECK(bd.terms().size() == 1);
    CHECK(bd.terms().begin()->first[0] == Word{1, 2});

    // d(a (x) b (x) c) = ab (x) c - a (x) bc
    Chain abc = Chain::tensor({a, b, c});
    Chain bd2 = hochschild_boundary(abc);
    CHECK(bd2.terms().size() == 2);
    Chain expected(2, p.backend());
    expected.add_term({{1, 2}, {1, 2}}, p.one());
    expected.add_term({{1}, {2, 1, 2}}, -p.one());
    CHECK((bd2 + expected * (-p.one())).is_zero());
}

TEST_CASE("boundary squared vanishes") {
    ParamSpec p = generic(2);
    std::mt19937_64 gen(7);
    for (int trial = 0; trial < 20; ++trial) {
        Chain c = random_chain(gen, p, 4);
        CHECK(hochschild_boundary(hochschild_boundary(c)).is_zero());
    }
}

TEST_CASE("degree-zero tensor entries are rejected") {
    ParamSpec p = generic(2);
    Chain c(2, p.backend());
    CHECK_THROWS_AS(c.add_term({{}, {1}}, p.one()), Error);
}

TEST_CASE("coboundary squared vanishes") {
    ParamSpec p = generic(2);
    std::mt19937_64 gen(8);
    for (int arity : {1, 2}) {
        for (int trial = 0; trial < 10; ++trial) {
            Cochain tau(arity, p.backend());
            for (int e = 0; e < 3; ++e) {
                std::vector<Word> key;
                for (int k = 0; k < arity; ++k) key.push_back(random_word(gen, 2, 2));
                FreePoly val(p.backend());
                val.add_term(random_word(gen, 2, 2),
                             Scalar::from_int(static_cast<long>(gen() % 9) - 4, p.backend()));
                tau.set(key, val);
            }
            Chain a = random_chain(gen, p, arity + 2);
            CHECK(hochschild_coboundary_squared(tau, a, p).is_zero());
        }
    }
}

TEST_CASE("exact one-forms restrict to strongly closed p-forms") {
    ParamSpec p = with_constraints(2, {"sigma(1,2)*q[1,1] = 1", "sigma(1,2)*q[2,2] = 1"});
    // z(xi_i) = d_i x for a fixed x: the restriction of an exact cochain.
    FreePoly x = FreePoly::from_word({1, 2}, p.backend()) +
                 FreePoly::from_word({2, 2}, p.backend()) * Scalar::from_int(2, p.backend());
    PForm z;
    z.arity = 1;
    for (int i = 1; i <= 2; ++i) z.values[{i}] = apply_partial(i, x, p);
    CHECK(pform_is_strongly_closed(z, p, 4));

    // A one-form violating the Serre constant pairing is not.
    PForm bad;
    bad.arity = 1;
    bad.values[{1}] = FreePoly::from_word({1, 2}, p.backend());
    bad.values[{2}] = FreePoly(p.backend());
    OneForm y = OneForm::zero(p);
    y.components[0] = bad.values[{1}];
    bool strongly = is_strongly_closed(y, p).holds;
    CHECK(pform_is_strongly_closed(bad, p, 4) == strongly);
}

TEST_CASE("serre differential on quotient-closed chains") {
    // On sigma_12 = 1 the q-alternating chain xi_1 (x) xi_2 - q_21 xi_2 (x) xi_1
    // is closed in the quotient (its boundary is the constant C_12).
    ParamSpec p = with_constraints(2, {"sigma(1,2) = 1"});
    Chain a(2, p.backend());
    a.add_term({{1}, {2}}, p.one());
    a.add_term({{2}, {1}}, -p.q(2, 1));
    CHECK_FALSE(hochschild_boundary(a).is_zero());
    BlockCache cache(p);
    CHECK(chain_normal_form(hochschild_boundary(a), cache).is_zero());

    // The restriction of an exact cochain pairs with it through pi.
    FreePoly x = FreePoly::from_word({1, 2}, p.backend());
    PForm z;
    z.arity = 1;
    for (int i = 1; i <= 2; ++i) z.values[{i}] = apply_partial(i, x, p);
    FreePoly dz = serre_cochain_d(z, a, p);
    FreePoly expect = apply_partial(1, z.values[{2}], p) -
                      apply_partial(2, z.values[{1}], p) * p.q(2, 1);
    CHECK(dz == expect);

    // A chain that is not even quotient-closed is rejected.
    Chain open_chain(2, p.backend());
    open_chain.add_term({{1}, {2}}, p.one());
    CHECK_THROWS_AS(serre_cochain_d(z, open_chain, p), Error);

    // Arity above the configured bound is rejected.
    PForm z3;
    z3.arity = 3;
    Chain c4(4, p.backend());
    c4.add_term({{1}, {1}, {1}, {1}}, p.one());
    CHECK_THROWS_AS(serre_cochain_d(z3, c4, p, 2), Error);
}

TEST_CASE("every closed one-form is exact at generic parameters") {
    ParamSpec p = generic(2);
    std::mt19937_64 gen(31);
    for (int trial = 0; trial < 10; ++trial) {
        // Any homogeneous one-form on a block is strongly closed here
        // (no constants), hence integrable.
        OneForm y = OneForm::zero(p);
        FreePoly c1(p.backend());
        c1.add_term({1, 2}, Scalar::from_int(static_cast<long>(gen() % 5) - 2, p.backend()));
        c1.add_term({2, 1}, Scalar::from_int(static_cast<long>(gen() % 5) - 2, p.backend()));
        FreePoly c2(p.backend());
        c2.add_term({1, 1}, Scalar::from_int(static_cast<long>(gen() % 5) - 2, p.backend()));
        y.components[0] = c1;
        y.components[1] = c2;
        CHECK(is_strongly_closed(y, p).holds);
        CHECK(solve_gradient(y, {2, 1}, p).solution.has_value());
    }
}
