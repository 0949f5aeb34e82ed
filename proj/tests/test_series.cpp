#include <catch2/catch_amalgamated.hpp>

#include "psicalc/delta_series.hpp"
#include "psicalc/operators.hpp"
#include "psicalc/special_functions.hpp"
#include "test_support.hpp"

using namespace psicalc;
using psitest::Rng;

namespace {

DeltaSeries random_series(Rng& rng, const PsiSequence& psi, bool delta) {
    std::vector<Scalar> c;
    c.push_back(delta ? Scalar(0) : psitest::random_scalar(rng));
    c.push_back(delta ? psitest::random_scalar(rng, true) : psitest::random_scalar(rng));
    for (int k = 2; k <= 6; ++k) c.push_back(psitest::random_scalar(rng));
    return DeltaSeries(psi, std::move(c));
}

} // namespace

TEST_CASE("series arithmetic basics") {
    const PsiSequence psi = PsiSequence::classical(8);

    SECTION("geometric reciprocal") {
        const DeltaSeries s(psi, {Scalar(1), Scalar(1)});
        const DeltaSeries r = series_reciprocal(s);
        for (int k = 0; k <= 3; ++k) CHECK(r.coeff(k) == Scalar(k % 2 == 0 ? 1 : -1));
    }

    SECTION("formal derivative") {
        const DeltaSeries s(psi, {Scalar(0), Scalar(0), Scalar(1)});
        const DeltaSeries d = series_formal_derivative(s);
        CHECK(d.coeff(0) == 0);
        CHECK(d.coeff(1) == 2);
        CHECK(d.order() == 1);
    }

    SECTION("compositional inverse of the log series") {
        const DeltaSeries log_series(
            psi, {Scalar(0), Scalar(1), Scalar(-1, 2), Scalar(1, 3), Scalar(-1, 4), Scalar(1, 5),
                  Scalar(-1, 6), Scalar(1, 7), Scalar(-1, 8)});
        const DeltaSeries inv = series_comp_inverse(log_series);
        CHECK(inv.coeff(0) == 0);
        CHECK(inv.coeff(1) == 1);
        CHECK(inv.coeff(2) == Scalar(1, 2));
        CHECK(inv.coeff(3) == Scalar(1, 6));
        CHECK(inv.coeff(4) == Scalar(1, 24));
    }

    SECTION("reciprocal and inverse roundtrips") {
        Rng rng(31);
        for (int trial = 0; trial < 20; ++trial) {
            const DeltaSeries a = random_series(rng, psi, false);
            if (a.coeff(0) != 0) {
                const DeltaSeries prod = series_mul(a, series_reciprocal(a));
                CHECK(prod.coeff(0) == 1);
                for (int k = 1; k <= psi.cap(); ++k) CHECK(prod.coeff(k) == 0);
            }
            const DeltaSeries d = random_series(rng, psi, true);
            const DeltaSeries comp = series_compose(d, series_comp_inverse(d));
            CHECK(comp.coeff(1) == 1);
            CHECK(comp.coeff(0) == 0);
            for (int k = 2; k <= psi.cap(); ++k) CHECK(comp.coeff(k) == 0);
        }
    }

    SECTION("multiplication commutes") {
        Rng rng(37);
        for (int trial = 0; trial < 20; ++trial) {
            const DeltaSeries a = random_series(rng, psi, false);
            const DeltaSeries b = random_series(rng, psi, false);
            CHECK(series_mul(a, b) == series_mul(b, a));
        }
    }

    SECTION("errors") {
        CHECK_THROWS_AS(series_reciprocal(DeltaSeries(psi, {Scalar(0), Scalar(1)})), NotInvertible);
        CHECK_THROWS_AS(
            series_compose(d_psi_series(psi), DeltaSeries(psi, {Scalar(1)})), NotComposable);
        CHECK_THROWS_AS(series_comp_inverse(DeltaSeries(psi, {Scalar(0), Scalar(0), Scalar(1)})),
                        NotComposable);
        CHECK_THROWS_AS(series_add(d_psi_series(psi), d_psi_series(PsiSequence::dxd(8))),
                        PsiMismatch);
    }
}

TEST_CASE("series realization as matrices") {
    const PsiSequence psi = PsiSequence::classical(8);
    const OpMatrix d = d_psi_op(psi);

    SECTION("bare derivative and identity") {
        CHECK(op_equal_on(realize(d_psi_series(psi)), d, 8));
        CHECK(op_equal_on(realize(series_const(psi, Scalar(1))), OpMatrix::identity(8), 8));
    }

    SECTION("forward difference applied to x^2") {
        const Poly got = realize(forward_difference_series(psi)).apply(Poly::monomial(2, 8));
        Poly want(8);
        want.set_coeff(0, Scalar(1));
        want.set_coeff(1, Scalar(2));
        CHECK(got == want);
    }

    SECTION("matrix realizations of series commute") {
        Rng rng(41);
        for (const PsiSequence& p : psitest::standard_presets(8)) {
            const DeltaSeries a = random_series(rng, p, false);
            const DeltaSeries b = random_series(rng, p, true);
            const OpMatrix c = op_commutator(realize(a), realize(b));
            CHECK(op_is_zero_on(c, c.validity()));
        }
    }

    SECTION("formal derivative matches the Pincherle bracket") {
        Rng rng(43);
        for (const PsiSequence& p : psitest::standard_presets(10)) {
            const DeltaSeries a = random_series(rng, p, false);
            const OpMatrix via_series = realize(series_formal_derivative(a));
            const OpMatrix via_bracket = pincherle(realize(a), p);
            CHECK(op_equal_on(via_series, via_bracket, via_bracket.validity()));
        }
    }

    SECTION("translation coefficients") {
        const PsiSequence pq = PsiSequence::q_jackson(Scalar(1, 2), 8);
        const DeltaSeries e = translation_series(pq, Scalar(2));
        for (int k = 0; k <= 8; ++k) CHECK(e.coeff(k) == spow(Scalar(2), k) / pq.factorial(k));
    }
}

TEST_CASE("deformed exponential series") {
    SECTION("classical collapses to 1/k!") {
        const PsiSeries e = exp_psi_series(PsiSequence::classical(10), 10);
        for (int k = 0; k <= 10; ++k) CHECK(e.coeff(k) == Scalar(1) / Scalar(int_factorial(k)));
    }

    SECTION("ones preset gives the geometric stream") {
        const PsiSeries e = exp_psi_series(PsiSequence::ones(10), 10);
        for (int k = 0; k <= 10; ++k) CHECK(e.coeff(k) == 1);
    }

    SECTION("q = 1/2 second coefficient") {
        const PsiSeries e = exp_psi_series(PsiSequence::q_jackson(Scalar(1, 2), 10), 10);
        CHECK(e.coeff(2) == Scalar(2, 3));
    }
}

TEST_CASE("hyperbolic components") {
    SECTION("even sieve gives cosh classically") {
        const PsiSeries h = hyperbolic_component(PsiSequence::classical(10), 2, 0, 10);
        for (int k = 0; k <= 10; ++k)
            CHECK(h.coeff(k) == (k % 2 == 0 ? Scalar(1) / Scalar(int_factorial(k)) : Scalar(0)));
    }

    SECTION("components partition the exponential") {
        const PsiSequence psi = PsiSequence::dxd(12);
        PsiSeries sum = hyperbolic_component(psi, 3, 0, 12);
        sum = psi_series_add(sum, hyperbolic_component(psi, 3, 1, 12));
        sum = psi_series_add(sum, hyperbolic_component(psi, 3, 2, 12));
        const PsiSeries e = exp_psi_series(psi, 12);
        for (int k = 0; k <= 12; ++k) CHECK(sum.coeff(k) == e.coeff(k));
    }

    SECTION("odd sieve at q = 1/2") {
        const PsiSequence psi = PsiSequence::q_jackson(Scalar(1, 2), 10);
        const PsiSeries h = hyperbolic_component(psi, 2, 1, 10);
        for (int k = 0; k <= 10; ++k)
            CHECK(h.coeff(k) == (k % 2 == 1 ? Scalar(1) / psi.factorial(k) : Scalar(0)));
    }

    SECTION("bad residues") {
        const PsiSequence psi = PsiSequence::classical(8);
        CHECK_THROWS_AS(hyperbolic_component(psi, 1, 0, 8), BadResidue);
        CHECK_THROWS_AS(hyperbolic_component(psi, 3, 3, 8), BadResidue);
    }
}

TEST_CASE("deformed trigonometric streams") {
    SECTION("classical cosine Maclaurin") {
        const PsiSeries c = trig_psi(PsiSequence::classical(8), SeriesKind::cos_psi, 8);
        CHECK(c.coeff(0) == 1);
        CHECK(c.coeff(2) == Scalar(-1, 2));
        CHECK(c.coeff(4) == Scalar(1, 24));
        CHECK(c.coeff(1) == 0);
        CHECK(c.coeff(6) == Scalar(-1, 720));
    }

    SECTION("cosh + sinh recovers the exponential for every preset") {
        for (const PsiSequence& psi : psitest::standard_presets(10)) {
            const PsiSeries sum = psi_series_add(trig_psi(psi, SeriesKind::cosh_psi, 10),
                                                 trig_psi(psi, SeriesKind::sinh_psi, 10));
            const PsiSeries e = exp_psi_series(psi, 10);
            for (int k = 0; k <= 10; ++k) CHECK(sum.coeff(k) == e.coeff(k));
        }
    }

    SECTION("pythagorean combination: classical yes, deformed no") {
        const PsiSequence classical = PsiSequence::classical(8);
        PsiSeries pc = psi_series_add(
            psi_series_mul(trig_psi(classical, SeriesKind::cos_psi, 8),
                           trig_psi(classical, SeriesKind::cos_psi, 8)),
            psi_series_mul(trig_psi(classical, SeriesKind::sin_psi, 8),
                           trig_psi(classical, SeriesKind::sin_psi, 8)));
        CHECK(pc.coeff(0) == 1);
        for (int k = 1; k <= 8; ++k) CHECK(pc.coeff(k) == 0);

        const PsiSequence half = PsiSequence::q_jackson(Scalar(1, 2), 8);
        PsiSeries ph = psi_series_add(psi_series_mul(trig_psi(half, SeriesKind::cos_psi, 8),
                                                     trig_psi(half, SeriesKind::cos_psi, 8)),
                                      psi_series_mul(trig_psi(half, SeriesKind::sin_psi, 8),
                                                     trig_psi(half, SeriesKind::sin_psi, 8)));
        CHECK(ph.coeff(2) == Scalar(-1, 3));  // deviation from 1 starts at the square term
    }
}

TEST_CASE("exponential product identity") {
    for (const PsiSequence& psi : psitest::standard_presets(10))
        CHECK(exp_product_identity_check(psi, 10));
}

TEST_CASE("limit deformations of the exponential family") {
    SECTION("frozen proximity facts") {
        const auto rep = limit_deformation_report({Scalar(1, 1000), Scalar(999, 1000)}, 4);
        const Scalar near_zero = rep.coefficients[0][3];
        const Scalar near_one = rep.coefficients[1][3];
        const Scalar sixth(1, 6);
        CHECK((near_one > sixth ? near_one - sixth : sixth - near_one) < Scalar(1, 100));
        CHECK((Scalar(1) - near_zero) < Scalar(1, 100));
        CHECK(rep.coefficients[0][0] == 1);
        CHECK(rep.coefficients[1][0] == 1);
    }

    SECTION("monotone along samples") {
        const auto rep = limit_deformation_report(
            {Scalar(1, 10), Scalar(1, 4), Scalar(1, 2), Scalar(3, 4), Scalar(9, 10)}, 6);
        CHECK(rep.monotone_toward_classical);
        CHECK(rep.monotone_toward_geometric);
    }

    SECTION("bad samples") {
        CHECK_THROWS_AS(limit_deformation_report({Scalar(1)}, 3), BadSample);
        CHECK_THROWS_AS(limit_deformation_report({Scalar(3, 2)}, 3), BadSample);
        CHECK_THROWS_AS(limit_deformation_report({Scalar(0)}, 3), BadSample);
    }
}
