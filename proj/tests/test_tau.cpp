#include <doctest.h>

#include "oracles.hpp"
#include "taulat/sampling.hpp"
#include "taulat/tau.hpp"

using namespace taulat;

namespace {

GrassmannianElement gr24_fixture() {
    Matrix W(4, 2);
    W.at(0, 0) = Rational(1);
    W.at(1, 1) = Rational(1);
    W.at(2, 0) = Rational(1);
    W.at(2, 1) = Rational(2);
    W.at(3, 0) = Rational(3);
    W.at(3, 1) = Rational(4);
    return GrassmannianElement(2, 4, W);
}

TimeVector miwa_sum(int truncation, const std::vector<Rational>& xs) {
    TimeVector t(truncation);
    for (const auto& x : xs) t = miwa_shift(t, x, 1);
    return t;
}

} // namespace

TEST_CASE("miwa shifts: definition, inverses, commutation") {
    TimeVector t(5);
    CHECK(miwa_shift(t, Rational(1, 2), 0) == t);

    const TimeVector s = miwa_shift(t, Rational(1, 2), 1);
    for (int j = 1; j <= 5; ++j)
        CHECK(s.at(j) == Rational(1, 2).pow(j) / Rational(j));

    CHECK(miwa_shift(s, Rational(1, 2), -1) == t);

    Rng g(61);
    const TimeVector base = random_time_vector(g, 6);
    const Rational x = random_rational(g), y = random_rational(g);
    CHECK(miwa_shift(miwa_shift(base, x, 1), y, 2) ==
          miwa_shift(miwa_shift(base, y, 2), x, 1));
}

TEST_CASE("ckp time vector forbids even entries") {
    CkpTimeVector t(6);
    t.set_odd(1, Rational(1, 3));
    t.set_odd(5, Rational(2));
    CHECK(t.full().at(1) == Rational(1, 3));
    CHECK(t.full().at(2) == Rational(0));
    CHECK_THROWS_AS(t.set_odd(2, Rational(1)), std::invalid_argument);
    TimeVector bad(4);
    bad.set(2, Rational(1));
    CHECK_THROWS_AS(CkpTimeVector{bad}, std::invalid_argument);
}

TEST_CASE("homogeneous series: frozen low orders and series-exp oracle") {
    TimeVector t(4);
    t.set(1, Rational(2, 3));
    t.set(2, Rational(-1, 2));
    t.set(3, Rational(5));

    const auto h = homogeneous_from_times(t, 4);
    CHECK(h[0] == Rational(1));
    CHECK(h[1] == t.at(1));
    CHECK(h[2] == t.at(1) * t.at(1) / Rational(2) + t.at(2));
    CHECK(h[3] == t.at(1).pow(3) / Rational(6) + t.at(1) * t.at(2) + t.at(3));
    CHECK_THROWS_AS(homogeneous_from_times(t, 5), std::invalid_argument);

    Rng g(67);
    for (int trial = 0; trial < 20; ++trial) {
        const TimeVector tv = random_time_vector(g, 7);
        CHECK(homogeneous_from_times(tv, 7) == oracles::h_by_series_exp(tv, 7));
    }
}

TEST_CASE("schur values: trivial cases and single Miwa point") {
    TimeVector t(5);
    t.set(1, Rational(3, 2));
    CHECK(schur_at(Partition{}, t) == Rational(1));
    CHECK(schur_at(Partition{1}, t) == Rational(3, 2));

    const Rational x(2, 5);
    const TimeVector tx = miwa_sum(6, {x});
    for (const Partition& lambda : partitions_in_rectangle(3, 3)) {
        const Rational expect = (lambda.length() <= 1) ? x.pow(lambda.weight()) : Rational(0);
        CHECK(schur_at(lambda, tx) == expect);
    }
    CHECK_THROWS_AS(schur_at(Partition({5, 5}), t), std::invalid_argument);
}

TEST_CASE("schur values agree with the bialternant on up to 4 Miwa points") {
    Rng g(71);
    for (int points = 2; points <= 4; ++points) {
        const auto xs = random_distinct_rationals(g, points);
        const TimeVector t = miwa_sum(10, xs);
        for (const Partition& lambda : partitions_in_rectangle(3, 3))
            CHECK(schur_at(lambda, t) == oracles::schur_by_bialternant(lambda, xs));
    }
}

TEST_CASE("tau evaluation: trivial element, Gr(1,2), fixture") {
    Matrix top(4, 2);
    top.at(0, 0) = Rational(1);
    top.at(1, 1) = Rational(1);
    const TauEvaluator trivial{GrassmannianElement(2, 4, top)};
    Rng g(73);
    for (int trial = 0; trial < 5; ++trial)
        CHECK(trivial(random_time_vector(g, 4)) == Rational(1));

    // Gr(1,2): tau = 1 + c t_1
    Matrix col(2, 1);
    col.at(0, 0) = Rational(1);
    col.at(1, 0) = Rational(5, 3);
    const TauEvaluator line{GrassmannianElement(1, 2, col)};
    TimeVector t1(2);
    t1.set(1, Rational(7, 4));
    CHECK(line(t1) == Rational(1) + Rational(5, 3) * Rational(7, 4));

    // fixture at t = (1,0,0,0): h_m = 1/m!, frozen by hand to 10/3
    const TauEvaluator tau{gr24_fixture()};
    TimeVector t(4);
    t.set(1, Rational(1));
    CHECK(tau(t) == Rational(10, 3));
}

TEST_CASE("tau agrees with the band-determinant oracle") {
    Rng g(79);
    for (auto [k, n] : {std::pair{2, 4}, {2, 5}, {3, 6}}) {
        const GrassmannianElement w = random_element(g, k, n);
        const TauEvaluator tau(w);
        for (int trial = 0; trial < 5; ++trial) {
            const TimeVector t = random_time_vector(g, n);
            CHECK(tau(t) == oracles::tau_by_band_determinant(w, t));
        }
    }
}

TEST_CASE("tau covariance under basis change") {
    Rng g(83);
    const GrassmannianElement w = random_element(g, 2, 4);
    Matrix G = random_matrix(g, 2, 2);
    while (G.det().is_zero()) G = random_matrix(g, 2, 2);
    const GrassmannianElement wg(2, 4, w.coordinates() * G);
    const TimeVector t = random_time_vector(g, 4);
    CHECK(tau_eval(wg, t) == G.det() * tau_eval(w, t));
}

TEST_CASE("miwa-shift consistency: shifting t commutes with evaluation") {
    Rng g(89);
    const GrassmannianElement w = random_element(g, 2, 4);
    const TauEvaluator tau(w);
    const TimeVector t = random_time_vector(g, 4);
    const Rational x(1, 5);

    // shifted evaluation equals the coordinate sum with shifted Schur values
    const TimeVector shifted = miwa_shift(t, x, 1);
    Rational sum(0);
    for (const Partition& lambda : partitions_in_rectangle(2, 2))
        sum += w.plucker(lambda) * schur_at(lambda, shifted);
    CHECK(tau(shifted) == sum);
}

TEST_CASE("zeta: base cases and antisymmetry") {
    Rng g(97);
    const TauEvaluator tau(random_element(g, 2, 4));
    const TimeVector t = random_time_vector(g, 4);

    CHECK(zeta(tau, t, {}) == tau(t));
    const Rational x(1, 2);
    CHECK(zeta(tau, t, {x}) == tau(miwa_shift(t, x, 1)));

    const Rational y(3);
    CHECK(zeta(tau, t, {x, y}) == -zeta(tau, t, {y, x}));
    CHECK_THROWS_AS(zeta(tau, t, std::vector<Rational>{x, x}), std::invalid_argument);
}

TEST_CASE("addition formulae vanish exactly") {
    Rng g(101);
    // k = 1 cancels pairwise
    const TauEvaluator tau1(random_element(g, 2, 4));
    const TimeVector t1 = random_time_vector(g, 4);
    CHECK(addition_formula_residual(tau1, t1, {}, {Rational(1), Rational(2)}) == Rational(0));

    for (auto [k_add, kk, nn] : {std::tuple{2, 2, 4}, {3, 3, 6}}) {
        for (int trial = 0; trial < 5; ++trial) {
            const TauEvaluator tau(random_element(g, kk, nn));
            const TimeVector t = random_time_vector(g, nn);
            const auto params = random_distinct_rationals(g, 2 * k_add);
            const std::vector<Rational> xs(params.begin(), params.begin() + (k_add - 1));
            const std::vector<Rational> ys(params.begin() + (k_add - 1), params.end());
            CHECK(addition_formula_residual(tau, t, xs, ys) == Rational(0));
        }
    }

    CHECK_THROWS_AS(
        addition_formula_residual(tau1, t1, {Rational(1)},
                                  {Rational(1), Rational(2), Rational(3)}),
        std::invalid_argument);
}

TEST_CASE("ckp symmetry holds for symmetric affine matrices only") {
    // k=1: tau = 1 + c t_1 has no even-time dependence
    Matrix m1(1, 1);
    m1.at(0, 0) = Rational(4, 7);
    TimeVector t2(2);
    t2.set(1, Rational(1));
    t2.set(2, Rational(3));
    CHECK(ckp_symmetry_residual(LagrangianElement(1, m1), t2) == Rational(0));

    Rng g(103);
    for (int k : {2, 3, 4}) {
        const LagrangianElement w0(k, random_symmetric_matrix(g, k));
        const TimeVector t = random_time_vector(g, 2 * k);
        CHECK(ckp_symmetry_residual(w0, t) == Rational(0));
    }

    // negative control through the raw embedding
    Matrix M(2, 2);
    M.at(0, 0) = Rational(1);
    M.at(0, 1) = Rational(2);
    M.at(1, 0) = Rational(3);
    M.at(1, 1) = Rational(4);
    const TauEvaluator tau(big_cell_embedding(M));
    TimeVector t(4);
    t.set(2, Rational(1));
    CHECK(tau(t) != tau(t.tilde()));
}
