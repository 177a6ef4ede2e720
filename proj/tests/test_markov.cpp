#include <random>

#include <doctest.h>

#include "oracle.hpp"
#include "padyn/errors.hpp"
#include "padyn/markov.hpp"

using namespace padyn;

namespace {

const Rational half(1, 2), third(1, 3);

StochasticMatrix cycle(std::size_t n) {
    std::vector<StochasticMatrix::Row> rows(n);
    for (std::size_t i = 0; i < n; ++i)
        rows[i] = {{(i + 1) % n, Rational(1)}};
    return StochasticMatrix(rows);
}

} // namespace

TEST_CASE("construction validates rows") {
    CHECK_THROWS_AS(StochasticMatrix({{{0, half}}}), NotStochastic);
    CHECK_THROWS_AS(StochasticMatrix({{{0, Rational(2)}, {0, Rational(-1)}}}), NotStochastic);
    CHECK_THROWS_AS(StochasticMatrix({{{1, Rational(1)}}}), NotStochastic);
    CHECK_THROWS_AS(StochasticMatrix({{{0, Rational(3, 2)}, {1, -half}}, {{1, Rational(1)}}}), NotStochastic);
    StochasticMatrix a({{{1, half}, {0, third}, {1, Rational(1, 6)}}, {{0, Rational(1)}}});
    CHECK(a.at(0, 0) == third);
    CHECK(a.at(0, 1) == Rational(2, 3));
    CHECK(a.nonzeros() == 3);
    CHECK(a.column_sums() == std::vector<Rational>{Rational(4, 3), Rational(2, 3)});
}

TEST_CASE("strongly connected components") {
    // 0 <-> 1, 1 -> 2, 2 <-> 3, 4 -> 4
    StochasticMatrix a = StochasticMatrix::from_dense({{0, 1, 0, 0, 0},
                                                       {half, 0, half, 0, 0},
                                                       {0, 0, 0, 1, 0},
                                                       {0, 0, 1, 0, 0},
                                                       {0, 0, 0, 0, 1}});
    auto scc = strongly_connected_components(a);
    REQUIRE(scc.size() == 3);
    CHECK(scc[0] == std::vector<std::size_t>{0, 1});
    CHECK(scc[1] == std::vector<std::size_t>{2, 3});
    CHECK(scc[2] == std::vector<std::size_t>{4});

    auto st = stationary_distributions(a);
    REQUIRE(st.size() == 2);
    CHECK(st[0] == RowVector{0, 0, half, half, 0});
    CHECK(st[1] == RowVector{0, 0, 0, 0, 1});
}

TEST_CASE("stationary vectors agree with a dense solve") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 2 + trial % 5;
        std::vector<std::vector<Rational>> dense(n, std::vector<Rational>(n, 0));
        for (std::size_t i = 0; i < n; ++i) {
            long total = 0;
            std::vector<long> w(n);
            for (auto &x : w) {
                x = static_cast<long>(rng() % 4);
                total += x;
            }
            w[(i + 1) % n] += 1;  // keeps the cycle 0 -> 1 -> ... irreducible
            ++total;
            for (std::size_t j = 0; j < n; ++j) {
                dense[i][j] = Rational(w[j], total);
                dense[i][j].canonicalize();
            }
        }
        StochasticMatrix a = StochasticMatrix::from_dense(dense);
        REQUIRE(is_irreducible(a));
        auto st = stationary_distributions(a);
        REQUIRE(st.size() == 1);
        std::vector<std::size_t> all(n);
        for (std::size_t i = 0; i < n; ++i)
            all[i] = i;
        CHECK(st[0] == oracle::stationary(dense, all));
    }
}

TEST_CASE("decomposition from a stationary vector") {
    StochasticMatrix a = StochasticMatrix::from_dense({{half, half, 0}, {half, half, 0}, {third, third, third}});
    auto d = decompose(a, {half, half, 0});
    REQUIRE(d.components.size() == 1);
    CHECK(d.components[0] == std::vector<std::size_t>{0, 1});
    CHECK(d.transient_states == std::vector<std::size_t>{2});
    CHECK(d.component_matrices[0] == StochasticMatrix::from_dense({{half, half}, {half, half}}));

    CHECK_THROWS_AS(decompose(a, {Rational(1), Rational(-1), 1}), NegativeEntry);
    CHECK_THROWS_AS(decompose(a, {0, 0, 1}), NotStationary);
}

TEST_CASE("identity splits into isometries") {
    StochasticMatrix id = StochasticMatrix::identity(2);
    auto d = decompose(id, {half, half});
    REQUIRE(d.components.size() == 2);
    for (const auto &m : d.component_matrices) {
        auto c = classify_component(m);
        CHECK(c.kind == ComponentKind::LocalIsometry);
        CHECK_FALSE(c.mixing);
    }
}

TEST_CASE("primitivity and period") {
    CHECK(period(cycle(4)) == 4);
    CHECK_FALSE(is_primitive(cycle(4)));
    CHECK(is_permutation(cycle(4)));

    // Wielandt's extremal matrix: primitive, exponent n^2 - 2n + 2.
    const std::size_t n = 5;
    std::vector<std::vector<Rational>> w(n, std::vector<Rational>(n, 0));
    for (std::size_t i = 0; i + 1 < n; ++i)
        w[i][i + 1] = 1;
    w[n - 1][0] = half;
    w[n - 1][1] = half;
    StochasticMatrix wm = StochasticMatrix::from_dense(w);
    CHECK(is_primitive(wm));
    CHECK(period(wm) == 1);

    StochasticMatrix bip = StochasticMatrix::from_dense({{0, half, half}, {1, 0, 0}, {1, 0, 0}});
    CHECK(period(bip) == 2);
    CHECK_FALSE(is_primitive(bip));

    StochasticMatrix red = StochasticMatrix::from_dense({{1, 0}, {half, half}});
    CHECK_FALSE(is_irreducible(red));
    CHECK_THROWS(period(red));
}

TEST_CASE("classification") {
    auto c = classify_component(cycle(3));
    CHECK(c.kind == ComponentKind::LocalIsometry);
    CHECK_FALSE(c.mixing);

    auto u = classify_component(StochasticMatrix::from_dense({{half, half}, {half, half}}));
    CHECK(u.kind == ComponentKind::ErgodicMarkov);
    CHECK(u.mixing);
    CHECK(u.isometrically_bernoulli);

    auto b = classify_component(StochasticMatrix::from_dense({{0, half, half}, {1, 0, 0}, {1, 0, 0}}));
    CHECK(b.kind == ComponentKind::ErgodicMarkov);
    CHECK_FALSE(b.mixing);
    CHECK_FALSE(b.isometrically_bernoulli);

    CHECK(to_string(ComponentKind::LocalIsometry) == "LocalIsometry");
    CHECK_THROWS(classify_component(StochasticMatrix::identity(2)));
}

TEST_CASE("cylinder measures") {
    StochasticMatrix a = StochasticMatrix::from_dense({{half, half}, {1, 0}});
    RowVector v{Rational(2, 3), third};
    REQUIRE(mat_vec_product(v, a) == v);
    std::vector<std::size_t> w{0, 1, 0};
    CHECK(cylinder_measure(a, v, w) == third);
    std::vector<std::size_t> bad{1, 1};
    CHECK(cylinder_measure(a, v, bad) == 0);
    CHECK(cylinder_measure(a, v, {}) == 1);
    // The measures of all extensions of a word add up to the word's measure.
    for (std::size_t d0 = 0; d0 < 2; ++d0) {
        std::vector<std::size_t> w1{d0};
        Rational sum = 0;
        for (std::size_t d1 = 0; d1 < 2; ++d1) {
            std::vector<std::size_t> w2{d0, d1};
            sum += cylinder_measure(a, v, w2);
        }
        CHECK(sum == cylinder_measure(a, v, w1));
    }
}
