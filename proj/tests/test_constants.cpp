#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qda/constants.hpp"

using namespace qda;

namespace {

const BackendSpec kSym{Backend::symbolic, 1};

ParamSpec with_constraints(int n, const std::vector<std::string>& texts) {
    std::vector<Constraint> cs;
    for (const auto& t : texts) cs.push_back(Constraint::parse(t, kSym));
    return ParamSpec::from_constraints(n, cs);
}

ParamSpec generic(int n) { return ParamSpec::from_constraints(n, {}); }

std::vector<MultiDegree> degrees_up_to(int n, int bound) {
    std::vector<MultiDegree> out;
    MultiDegree cur(n, 0);
    for (;;) {
        int tot = total_degree(cur);
        if (tot >= 1 && tot <= bound) out.push_back(cur);
        int k = 0;
        while (k < n) {
            if (cur[k] < bound) {
                ++cur[k];
                break;
            }
            cur[k] = 0;
            ++k;
        }
        if (k == n) break;
    }
    return out;
}

}  // namespace

TEST_CASE("constants on the sigma_12 = 1 surface") {
    ParamSpec p = with_constraints(2, {"sigma(1,2) = 1"});
    ConstantBasis cb = find_constants({1, 1}, p);
    REQUIRE(cb.dimension() == 1);
    // Echelon normalization: coefficient 1 at x1x2.
    CHECK(cb.basis[0].coeff({1, 2}).is_one());
    CHECK(cb.basis[0].coeff({2, 1}) == -p.q(2, 1));
}

TEST_CASE("no constants at generic parameters") {
    ParamSpec p = generic(2);
    for (const auto& d : degrees_up_to(2, 4)) CHECK(find_constants(d, p).dimension() == 0);
}

TEST_CASE("xi_1^2 at q_11 = -1") {
    BackendSpec rat{Backend::rational, 1};
    std::vector<Constraint> cs;
    cs.push_back(Constraint::parse("q[1,1] = -1", rat));
    ParamSpec p = ParamSpec::from_table(1, rat, cs);
    ConstantBasis cb = find_constants({2}, p);
    REQUIRE(cb.dimension() == 1);
    CHECK(cb.basis[0] == FreePoly::from_word({1, 1}, rat));
}

TEST_CASE("sigma_123 = 1 gives a one-dimensional multilinear space") {
    ParamSpec p = with_constraints(3, {"sigma(1,2,3) = 1"});
    CHECK(find_constants({1, 1, 1}, p).dimension() == 1);
}

TEST_CASE("S-gram examples") {
    // N = 1, d = (1): the 1x1 identity.
    ParamSpec p1 = generic(1);
    SGram g1 = s_gram({1}, p1);
    CHECK(g1.matrix.at(0, 0).is_one());

    // d = (1,1): [[q21, 1], [1, q12]] with determinant sigma - 1.
    ParamSpec p = generic(2);
    SGram g = s_gram({1, 1}, p);
    CHECK(g.matrix.at(0, 0) == p.q(2, 1));
    CHECK(g.matrix.at(0, 1).is_one());
    CHECK(g.matrix.at(1, 0).is_one());
    CHECK(g.matrix.at(1, 1) == p.q(1, 2));
    CHECK(g.matrix.is_symmetric());
}

TEST_CASE("S symmetry across blocks and parameter points") {
    for (const auto& p :
         {generic(3), with_constraints(3, {"sigma(1,2) = 1"}),
          with_constraints(3, {"sigma(1,2,3) = 1"}),
          with_constraints(3, {"sigma(1,2) = 1", "sigma(1,3) = 1", "sigma(2,3) = 1"})}) {
        for (const auto& d : degrees_up_to(3, 4)) CHECK(s_gram(d, p).matrix.is_symmetric());
    }
}

TEST_CASE("ideal slices of the order-3 cases") {
    ParamSpec p = with_constraints(2, {"sigma(1,2) = 1"});
    IdealSlice s = ideal_slice({1, 1}, p, /*cross_check=*/true);
    CHECK(s.dimension() == 1);

    ParamSpec p3 = with_constraints(3, {"sigma(1,2) = 1"});
    CHECK(ideal_slice({1, 1, 1}, p3, true).dimension() == 2);

    ParamSpec p33 = with_constraints(3, {"sigma(1,2) = 1", "sigma(1,3) = 1"});
    IdealSlice s33 = ideal_slice({1, 1, 1}, p33, true);
    CHECK(s33.dimension() == 4);
    QuotientBasis q = quotient_basis({1, 1, 1}, p33);
    REQUIRE(q.representatives.size() == 2);
    CHECK(q.representatives[0] == Word{1, 2, 3});
    CHECK(q.representatives[1] == Word{1, 3, 2});
}

TEST_CASE("rank plus radical dimension fills the block") {
    for (const auto& p : {generic(2), with_constraints(2, {"sigma(1,2) = 1"})}) {
        for (const auto& d : degrees_up_to(2, 4)) {
            SGram g = s_gram(d, p);
            CHECK(g.matrix.rank() + ideal_slice(d, p).dimension() == word_basis(d).size());
        }
    }
}

TEST_CASE("constants detected exactly when the Gram drops rank") {
    for (const auto& p : {generic(2), with_constraints(2, {"sigma(1,2) = 1"}),
                          with_constraints(2, {"sigma(1,2)*q[1,1] = 1", "sigma(1,2)*q[2,2] = 1"})}) {
        for (const auto& d : degrees_up_to(2, 4)) {
            bool has_constants = find_constants(d, p).dimension() > 0;
            bool singular = s_gram(d, p).matrix.rank() < word_basis(d).size();
            // Blockwise: a constant in the block forces a radical vector
            // there; the radical may also contain ideal elements from
            // lower constants.
            if (has_constants) CHECK(singular);
            if (!singular) CHECK_FALSE(has_constants);
        }
    }
}

TEST_CASE("normal form is an idempotent projection") {
    ParamSpec p = with_constraints(2, {"sigma(1,2) = 1"});
    BlockCache cache(p);
    FreePoly a = FreePoly::from_word({1, 2}, p.backend());
    FreePoly b = FreePoly::from_word({2, 1}, p.backend()) * p.q(2, 1);
    CHECK(cache.normal_form(a) == cache.normal_form(b));
    CHECK((cache.normal_form(a - b)).is_zero());
    FreePoly mixed = FreePoly::from_word({1, 2, 2}, p.backend()) +
                     FreePoly::from_word({1}, p.backend());
    CHECK(cache.normal_form(cache.normal_form(mixed)) == cache.normal_form(mixed));

    // Generic point: normal form is the identity on low blocks.
    ParamSpec g = generic(2);
    BlockCache gcache(g);
    for (const auto& d : degrees_up_to(2, 3))
        for (const auto& w : word_basis(d)) {
            FreePoly x = FreePoly::from_word(w, g.backend());
            CHECK(gcache.normal_form(x) == x);
        }
}

TEST_CASE("T inverts S") {
    ParamSpec p = generic(2);
    TGram t = t_gram({1, 1}, p);
    // (1/(sigma-1)) [[q12, -1], [-1, q21]]
    Scalar det = p.sigma(1, 2) - p.one();
    CHECK(t.matrix.at(0, 0) == p.q(1, 2) / det);
    CHECK(t.matrix.at(0, 1) == -det.inverse());
    CHECK(t.matrix.at(1, 1) == p.q(2, 1) / det);

    ParamSpec p1 = generic(1);
    CHECK(t_gram({1}, p1).matrix.at(0, 0).is_one());
    TGram t2 = t_gram({2}, p1);
    CHECK(t2.matrix.at(0, 0) == q_integer(2, p1.q(1, 1)).inverse());

    // Singular block: T S = identity on the quotient coordinates.
    ParamSpec ps = with_constraints(2, {"sigma(1,2) = 1"});
    SGram g = s_gram({1, 1}, ps);
    TGram tq = t_gram({1, 1}, ps);
    REQUIRE(tq.representative_columns.size() == 1);
    Matrix sub(1, 1, ps.backend());
    sub.at(0, 0) = g.matrix.at(tq.representative_columns[0], tq.representative_columns[0]);
    CHECK((tq.matrix * sub) == Matrix::identity(1, ps.backend()));
}

TEST_CASE("irreducible constants") {
    ParamSpec p = with_constraints(3, {"sigma(1,2) = 1"});
    FreePoly c12 = find_constants({1, 1, 0}, p).basis.at(0);
    CHECK(is_irreducible_constant(c12, p));

    auto ext = extend_constant(c12, {3}, p);
    REQUIRE(ext.constant.has_value());
    CHECK_FALSE(is_irreducible_constant(*ext.constant, p));
    CHECK_THROWS_AS(is_irreducible_constant(FreePoly::generator(1, p.backend()), p), Error);

    ParamSpec p123 = with_constraints(3, {"sigma(1,2,3) = 1"});
    FreePoly c123 = find_constants({1, 1, 1}, p123).basis.at(0);
    CHECK(is_irreducible_constant(c123, p123));
}

TEST_CASE("constant extension and its obstruction") {
    ParamSpec p = with_constraints(3, {"sigma(1,2) = 1"});
    FreePoly c12 = find_constants({1, 1, 0}, p).basis.at(0);
    auto ext = extend_constant(c12, {3}, p);
    REQUIRE(ext.constant.has_value());
    FreePoly expected = c12 * FreePoly::generator(3, p.backend()) -
                        FreePoly::generator(3, p.backend()) * c12 * (p.q(3, 1) * p.q(3, 2));
    CHECK(*ext.constant == expected);

    // Empty word: C' = C.
    auto same = extend_constant(c12, {}, p);
    REQUIRE(same.constant.has_value());
    CHECK(*same.constant == c12);

    // q_11 = -1: xi_1^2 extends by xi_1 only through zero -> obstruction.
    BackendSpec rat{Backend::rational, 1};
    std::vector<Constraint> cs;
    cs.push_back(Constraint::parse("q[1,1] = -1", rat));
    ParamSpec pneg = ParamSpec::from_table(1, rat, cs);
    FreePoly sq = FreePoly::from_word({1, 1}, rat);
    auto obstructed = extend_constant(sq, {1}, pneg);
    CHECK_FALSE(obstructed.constant.has_value());
    CHECK_FALSE(obstructed.obstruction.empty());
}

TEST_CASE("rescaling invariance of constant dimensions") {
    // q_ij -> c q_ij, q_ji -> q_ji / c preserves q_ii and sigma, hence the
    // constant dimensions.
    ParamSpec p = with_constraints(2, {"sigma(1,2) = 1"});
    ParamSpec scaled = p.rescaled_pair(1, 2, Scalar::from_rational(Rational(7) / 3, p.backend()));
    for (const auto& d : degrees_up_to(2, 4))
        CHECK(find_constants(d, p).dimension() == find_constants(d, scaled).dimension());
}

TEST_CASE("left and right constants generate the same slices") {
    for (const auto& p : {with_constraints(3, {"sigma(1,2) = 1"}),
                          with_constraints(3, {"sigma(1,2,3) = 1"})}) {
        for (const auto& d : degrees_up_to(3, 4)) {
            auto left = constant_generated_span(d, p, false, DerivationSide::left);
            auto right = constant_generated_span(d, p, false, DerivationSide::right);
            CHECK(same_row_span(left, right, word_basis(d).size(), p.backend()));
        }
    }
}

TEST_CASE("hat of ideal elements kills the dual block") {
    ParamSpec p = with_constraints(2, {"sigma(1,2) = 1"});
    for (const auto& d : std::vector<MultiDegree>{{1, 1}, {2, 1}, {1, 2}, {2, 2}}) {
        for (const auto& e : ideal_slice(d, p).basis)
            CHECK(operator_is_zero(hat_map(e), p));
    }
}
