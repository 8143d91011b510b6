#include <doctest.h>

#include "oracles.hpp"
#include "taulat/errors.hpp"
#include "taulat/lattice_eval.hpp"
#include "taulat/sampling.hpp"

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

} // namespace

TEST_CASE("parameter assignments enforce their preconditions") {
    CHECK_THROWS_AS(XParameters({{0, Rational(1)}, {1, Rational(1)}}), std::invalid_argument);
    CHECK_THROWS_AS(YParameters({{1, Rational(-1)}}), std::invalid_argument);
    CHECK_THROWS_AS(YParameters({{1, Rational(0)}}), std::invalid_argument);
    CHECK_THROWS_AS(YParameters({{0, Rational(1)}}), std::invalid_argument);
    const XParameters x({{-1, Rational(2)}, {0, Rational(3)}});
    CHECK(x.at(0) == Rational(3));
    CHECK_THROWS_AS(x.at(7), std::out_of_range);
}

TEST_CASE("H evaluation: base cases and two-point prefactor") {
    Rng g(107);
    const GrassmannianElement w = gr24_fixture();
    const TauEvaluator tau(w);
    const TimeVector t = random_time_vector(g, 4);
    const XParameters params({{0, Rational(1, 2)}, {1, Rational(3)}});
    HLattice H(w, params, t);

    CHECK(H.at(LatticePoint{}) == tau(t));
    CHECK(H.at(LatticePoint::alpha(0)) == tau(miwa_shift(t, Rational(1, 2), 1)));

    const TimeVector both = miwa_shift(miwa_shift(t, Rational(1, 2), 1), Rational(3), 1);
    CHECK(H.at(LatticePoint::alpha(0) + LatticePoint::alpha(1)) ==
          (Rational(1, 2) - Rational(3)) * tau(both));
}

TEST_CASE("H with negative multiplicities inverts the prefactor") {
    Rng g(108);
    const GrassmannianElement w = gr24_fixture();
    const TauEvaluator tau(w);
    const TimeVector t = random_time_vector(g, 4);
    HLattice H(w, XParameters({{0, Rational(1, 2)}, {1, Rational(3)}}), t);

    LatticePoint p;
    p.add(0, 2);
    p.add(1, -1);
    const TimeVector shifted =
        miwa_shift(miwa_shift(t, Rational(1, 2), 2), Rational(3), -1);
    CHECK(H.at(p) == (Rational(1, 2) - Rational(3)).pow(-2) * tau(shifted));
}

TEST_CASE("H partition evaluation applies the frobenius offset") {
    Rng g(109);
    const GrassmannianElement w = random_element(g, 2, 4);
    HLattice H(w, random_x_parameters(g, -3, 3), random_time_vector(g, 4));
    const LatticePoint n = random_a_point(g, -2, 2);

    CHECK(H.at(n, Partition{}) == H.at(n));
    CHECK(H.at(n, Partition::hook(1, 0)) ==
          H.at(n + LatticePoint::alpha(1) - LatticePoint::alpha(-1)));
    const LatticePoint off22 = LatticePoint::alpha(1) + LatticePoint::alpha(0) -
                               LatticePoint::alpha(-1) - LatticePoint::alpha(-2);
    CHECK(H.at(n, Partition{2, 2}) == H.at(n + off22));
}

TEST_CASE("shift lemma residual vanishes") {
    Rng g(113);
    // n = 0 reduces to H^(alpha_i) = tau(t + [x_i])
    {
        const GrassmannianElement w = gr24_fixture();
        HLattice H(w, random_x_parameters(g, -2, 2), random_time_vector(g, 4));
        CHECK(shift_lemma_residual(H, LatticePoint{}, 1) == Rational(0));
        CHECK(shift_lemma_residual(H, LatticePoint::alpha(0), 1) == Rational(0));
    }
    for (int trial = 0; trial < 30; ++trial) {
        const GrassmannianElement w = random_element(g, 2, 4);
        HLattice H(w, random_x_parameters(g, -3, 3), random_time_vector(g, 4));
        const LatticePoint n = random_a_point(g, -2, 2);
        std::uniform_int_distribution<int> pick(-3, 3);
        CHECK(shift_lemma_residual(H, n, pick(g)) == Rational(0));
    }
}

TEST_CASE("homogeneous rescaling: equal-degree monomials scale alike") {
    Rng g(127);
    const GrassmannianElement w = random_element(g, 2, 4);
    const XParameters params = random_x_parameters(g, -3, 3);
    const TimeVector t = random_time_vector(g, 4);
    HLattice H(w, params, t);

    const LatticePoint p1 = random_a_point(g, -2, 2);
    const LatticePoint p2 = random_a_point(g, -2, 2);
    const LatticePoint q1 = random_a_point(g, -2, 2);
    const LatticePoint q2 = p1 + p2 - q1; // same total degree
    const int i = 1;

    // both degree-2 monomials pick up the same factor under an origin shift
    HLattice Hs(std::make_shared<TauEvaluator>(w), params,
                miwa_shift(t, params.at(i), 1));
    const LatticePoint a = LatticePoint::alpha(i);
    const Rational lhs = H.at(p1 + a) * H.at(p2 + a) * Hs.at(q1) * Hs.at(q2);
    const Rational rhs = H.at(q1 + a) * H.at(q2 + a) * Hs.at(p1) * Hs.at(p2);
    CHECK(lhs == rhs);
}

TEST_CASE("lattice homomorphism: H-values satisfy the window relations") {
    Rng g(131);
    const GrassmannianElement w = random_element(g, 2, 4);
    const XParameters params = random_x_parameters(g, -3, 3);
    HLattice H(w, params, random_time_vector(g, 4));

    for (auto [kw, nw] : {std::pair{2, 4}, {3, 6}}) {
        const LatticePoint base = random_a_point(g, -2, 2);
        // phi^m(pi~_L) = sgn(L) H^(m + sum alpha_{L_i})
        const CoordinateFn coords = [&](const MultiIndex& L) {
            const int sgn = sign_of_multiindex(L);
            if (sgn == 0) return Rational(0);
            LatticePoint p = base;
            for (int e : L) p.add(e, 1);
            return Rational(sgn) * H.at(p);
        };
        for (const auto& [I, J] : all_plucker_relation_indices(kw, nw))
            CHECK(plucker_relation_residual(coords, I, J) == Rational(0));
    }
}

TEST_CASE("determinant formula for evaluation ratios, ranks 1..3") {
    Rng g(137);
    for (int rank = 1; rank <= 3; ++rank) {
        const GrassmannianElement w = random_element(g, 2, 4);
        HLattice H(w, random_x_parameters(g, -4, 3), random_time_vector(g, 4));
        const LatticePoint n = random_a_point(g, -2, 1);

        std::vector<int> vals{0, 1, 2, 3};
        std::shuffle(vals.begin(), vals.end(), g);
        std::vector<int> arms(vals.begin(), vals.begin() + rank);
        std::shuffle(vals.begin(), vals.end(), g);
        std::vector<int> legs(vals.begin(), vals.begin() + rank);
        std::sort(arms.rbegin(), arms.rend());
        std::sort(legs.rbegin(), legs.rend());
        const Partition lambda = Partition::from_frobenius(arms, legs);

        const Rational base = H.at(n);
        REQUIRE(!base.is_zero());
        Matrix ratios(static_cast<std::size_t>(rank), static_cast<std::size_t>(rank));
        for (int r = 0; r < rank; ++r)
            for (int c = 0; c < rank; ++c) {
                LatticePoint p = n;
                p.add(arms[static_cast<std::size_t>(r)], 1);
                p.add(-legs[static_cast<std::size_t>(c)] - 1, -1);
                ratios.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) =
                    H.at(p) / base;
            }
        CHECK(H.at(n, lambda) / base == ratios.det());
    }
}

TEST_CASE("lagrangian evaluation: frozen beta_1 example") {
    Rng g(139);
    const Matrix M = random_symmetric_matrix(g, 2);
    const LagrangianElement w0(2, M);
    const TauEvaluator tau(lagrangian_to_grassmannian(w0));

    CkpTimeVector tprime(4);
    tprime.set_odd(1, Rational(1, 3));
    tprime.set_odd(3, Rational(2, 5));
    const Rational y1(3, 2), y2(5, 2);
    LagrangianLattice lat(w0, YParameters({{1, y1}, {2, y2}}), tprime);

    CHECK(lat.at(LatticePoint{}) == tau(tprime.full()));

    // h^(beta_1) = -(2 y_1)^(-1) tau(t' + [y_1] - [-y_1])
    const TimeVector shifted =
        miwa_shift(miwa_shift(tprime.full(), y1, 1), -y1, -1);
    CHECK(lat.at(LatticePoint::beta(1)) ==
          -(Rational(2) * y1).reciprocal() * tau(shifted));

    // h^(beta_1 + beta_2): prefactor (y1-y2)^2 (2y1)^-1 (2y2)^-1 (y1+y2)^-2
    const LatticePoint b12 = LatticePoint::beta(1) + LatticePoint::beta(2);
    TimeVector s2 = miwa_shift(tprime.full(), y1, 1);
    s2 = miwa_shift(s2, y2, 1);
    s2 = miwa_shift(s2, -y1, -1);
    s2 = miwa_shift(s2, -y2, -1);
    const Rational pre = (y1 - y2).pow(2) * (Rational(2) * y1).pow(-1) *
                         (Rational(2) * y2).pow(-1) * (y1 + y2).pow(-2);
    CHECK(lat.at(b12) == pre * tau(s2)); // sign exponent is even here
}

TEST_CASE("lagrangian evaluation equals the specialized H evaluation") {
    Rng g(149);
    const int k = 3;
    const LagrangianElement w0(k, random_symmetric_matrix(g, k));
    const GrassmannianElement w = lagrangian_to_grassmannian(w0);
    const YParameters y = random_y_parameters(g, 4);

    CkpTimeVector tprime(2 * k);
    tprime.set_odd(1, Rational(1, 2));
    tprime.set_odd(3, Rational(-1, 3));
    LagrangianLattice lat(w0, y, tprime);
    HLattice H(w, y.specialize_x(4), tprime.full());

    for (int trial = 0; trial < 10; ++trial) {
        const LatticePoint p = random_b_point(g, 3);
        CHECK(lat.at(p) == H.at(p));
    }
    // also at non-B offset points reached through partitions
    const LatticePoint n = random_b_point(g, 2);
    for (const Partition& lambda :
         {Partition::hook(1, 0), Partition::hook(0, 2), Partition{2, 2}})
        CHECK(lat.at(n, lambda) == H.at(n, lambda));
}

TEST_CASE("lagrangian hook symmetry on the sublattice") {
    Rng g(151);
    for (int k : {2, 3}) {
        const LagrangianElement w0(k, random_symmetric_matrix(g, k));
        CkpTimeVector tprime(2 * k);
        tprime.set_odd(1, random_rational(g, 3, 2));
        LagrangianLattice lat(w0, random_y_parameters(g, 4), tprime);
        for (int trial = 0; trial < 8; ++trial) {
            const LatticePoint nprime = random_b_point(g, 3);
            std::uniform_int_distribution<int> hk(0, 2);
            const int i = hk(g), j = hk(g);
            CHECK(lat.at(nprime, Partition::hook(i, j)) ==
                  lat.at(nprime, Partition::hook(j, i)));
        }
    }
}

TEST_CASE("checkerboard signs follow the stated exponents") {
    Rng g(157);
    const LagrangianElement w0(3, random_symmetric_matrix(g, 3));
    CkpTimeVector tprime(6);
    tprime.set_odd(1, Rational(2, 7));
    LagrangianLattice lat(w0, random_y_parameters(g, 4), tprime);

    const LatticePoint origin;
    CHECK(lat.checkerboard(origin, CheckerKind::plain) == lat.at(origin, Partition{}));

    const LatticePoint b1 = LatticePoint::beta(1);
    CHECK(lat.checkerboard(b1, CheckerKind::plain) == -lat.at(b1, Partition{}));

    const LatticePoint b12 = LatticePoint::beta(1) + LatticePoint::beta(2);
    // exponent 1+1+0+1+0+0 = 3
    CHECK(lat.checkerboard(b12, CheckerKind::plain) == -lat.at(b12, Partition{}));

    // kind-specific hooks: x -> (1|2), y -> (0|2), z -> (0|1)
    CHECK(lat.checkerboard(origin, CheckerKind::x) == lat.at(origin, Partition::hook(1, 2)));
    CHECK(lat.checkerboard(b1, CheckerKind::x) == -lat.at(b1, Partition::hook(1, 2)));
    CHECK(lat.checkerboard(b1, CheckerKind::y) == lat.at(b1, Partition::hook(0, 2)));
    CHECK(lat.checkerboard(b1, CheckerKind::z) == lat.at(b1, Partition::hook(0, 1)));

    CHECK_THROWS_AS(lat.checkerboard(LatticePoint::beta(4), CheckerKind::plain),
                    std::invalid_argument);
}

TEST_CASE("cache transparency: repeated queries return identical values") {
    Rng g(163);
    const GrassmannianElement w = random_element(g, 2, 4);
    HLattice H(w, random_x_parameters(g, -2, 2), random_time_vector(g, 4));
    const LatticePoint n = random_a_point(g, -2, 2);
    const Rational first = H.at(n);
    const long evals = H.evaluations();
    CHECK(H.at(n) == first);
    CHECK(H.evaluations() == evals); // served from the cache
}
