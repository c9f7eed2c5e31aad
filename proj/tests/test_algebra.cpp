#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qda/algebra.hpp"
#include "qda/linalg.hpp"

using namespace qda;

namespace {

const BackendSpec kRat{Backend::rational, 1};

FreePoly random_poly(std::mt19937_64& gen, int n, int max_degree, int terms) {
    FreePoly p(kRat);
    for (int t = 0; t < terms; ++t) {
        Word w;
        int len = static_cast<int>(gen() % (max_degree + 1));
        for (int k = 0; k < len; ++k) w.push_back(static_cast<int>(gen() % n) + 1);
        long c = static_cast<long>(gen() % 19) - 9;
        p.add_term(w, Scalar(Rational(c)));
    }
    return p;
}

}  // namespace

TEST_CASE("word basis sizes and order") {
    auto b11 = word_basis({1, 1});
    REQUIRE(b11.size() == 2);
    CHECK(b11[0] == Word{1, 2});
    CHECK(b11[1] == Word{2, 1});

    auto b111 = word_basis({1, 1, 1});
    REQUIRE(b111.size() == 6);
    CHECK(b111[0] == Word{1, 2, 3});

    CHECK(word_basis({2, 0}) == std::vector<Word>{{1, 1}});

    // Multinomial count for |d| <= 6, N <= 4.
    std::vector<MultiDegree> degs;
    for (int a = 0; a <= 6; ++a)
        for (int b = 0; b <= 6 - a; ++b)
            for (int c = 0; c <= 6 - a - b; ++c)
                for (int d = 0; d <= 6 - a - b - c; ++d) degs.push_back({a, b, c, d});
    for (const auto& d : degs) {
        CHECK(word_basis(d).size() == block_dimension(d));
    }
}

TEST_CASE("concatenation product") {
    FreePoly x1 = FreePoly::generator(1, kRat);
    FreePoly x2 = FreePoly::generator(2, kRat);
    FreePoly x3 = FreePoly::generator(3, kRat);
    FreePoly p = x1 * x2;
    CHECK(p.coeff({1, 2}).as_rational() == 1);
    CHECK(p.support_size() == 1);

    FreePoly q = (x1 * x2 - x2 * x1 * Scalar(Rational(2))) * x3;
    CHECK(q.coeff({1, 2, 3}).as_rational() == 1);
    CHECK(q.coeff({2, 1, 3}).as_rational() == -2);
    CHECK(q.support_size() == 2);

    CHECK((FreePoly::zero(kRat) * p).is_zero());
}

TEST_CASE("product associativity on random polynomials") {
    std::mt19937_64 gen(777);
    for (int trial = 0; trial < 25; ++trial) {
        FreePoly a = random_poly(gen, 4, 4, 3);
        FreePoly b = random_poly(gen, 4, 4, 3);
        FreePoly c = random_poly(gen, 4, 4, 3);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("component decomposition and projection") {
    FreePoly p = FreePoly::unit(kRat) * Scalar(Rational(3)) + FreePoly::generator(1, kRat);
    CHECK(p.projection_0().as_rational() == 3);
    CHECK(FreePoly::from_word({2, 1}, kRat).projection_0().is_zero());

    FreePoly mixed = FreePoly::from_word({1, 2}, kRat) + FreePoly::from_word({1, 1}, kRat);
    CHECK(mixed.component({1, 1}, 2) == FreePoly::from_word({1, 2}, kRat));

    std::mt19937_64 gen(42);
    for (int trial = 0; trial < 20; ++trial) {
        FreePoly p2 = random_poly(gen, 3, 4, 5);
        FreePoly sum(kRat);
        for (const auto& d : p2.support_degrees(3)) sum += p2.component(d, 3);
        CHECK(sum == p2);
    }
}

TEST_CASE("rref canonical kernel") {
    // Kernel of [[1,2,3],[2,4,6]] is 2-dimensional.
    Matrix m(2, 3, kRat);
    m.at(0, 0) = Scalar(Rational(1));
    m.at(0, 1) = Scalar(Rational(2));
    m.at(0, 2) = Scalar(Rational(3));
    m.at(1, 0) = Scalar(Rational(2));
    m.at(1, 1) = Scalar(Rational(4));
    m.at(1, 2) = Scalar(Rational(6));
    CHECK(m.rank() == 1);
    auto ker = m.kernel_basis();
    REQUIRE(ker.size() == 2);
    for (const auto& v : ker) {
        Scalar acc = Scalar::zero(kRat);
        for (size_t j = 0; j < 3; ++j) acc += m.at(0, j) * v[j];
        CHECK(acc.is_zero());
    }
}

TEST_CASE("matrix inverse and solve") {
    std::mt19937_64 gen(99);
    Matrix m(4, 4, kRat);
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j)
            m.at(i, j) = Scalar(Rational(static_cast<long>(gen() % 11) - 5));
    auto inv = m.inverse();
    if (inv) {
        CHECK((m * *inv) == Matrix::identity(4, kRat));
    }
    std::vector<Scalar> b(4, Scalar(Rational(1)));
    auto x = Matrix::solve(m, b);
    if (x) {
        auto mx = m.apply(*x);
        for (size_t i = 0; i < 4; ++i) CHECK(mx[i] == b[i]);
    }
}

TEST_CASE("span comparison") {
    std::vector<std::vector<Scalar>> a = {{Scalar(Rational(1)), Scalar(Rational(1))},
                                          {Scalar(Rational(0)), Scalar(Rational(1))}};
    std::vector<std::vector<Scalar>> b = {{Scalar(Rational(1)), Scalar(Rational(0))},
                                          {Scalar(Rational(2)), Scalar(Rational(1))}};
    CHECK(same_row_span(a, b, 2, kRat));
    CHECK(in_row_span(a, {Scalar(Rational(5)), Scalar(Rational(-3))}, kRat));
    std::vector<std::vector<Scalar>> c = {{Scalar(Rational(1)), Scalar(Rational(1))}};
    CHECK_FALSE(same_row_span(a, c, 2, kRat));
    CHECK_FALSE(in_row_span(c, {Scalar(Rational(1)), Scalar(Rational(0))}, kRat));
}
