#include <catch2/catch_amalgamated.hpp>

#include "psicalc/integration.hpp"
#include "psicalc/operators.hpp"
#include "test_support.hpp"

using namespace psicalc;
using psitest::Rng;

TEST_CASE("deformed antiderivative") {
    const int cap = 16;

    SECTION("frozen values") {
        CHECK(psi_integral(PsiSequence::classical(cap), Poly::monomial(2, cap)) ==
              Poly::monomial(3, cap, Scalar(1, 3)));
        CHECK(psi_integral(PsiSequence::dxd(cap), Poly::monomial(2, cap)) ==
              Poly::monomial(3, cap, Scalar(1, 9)));
        CHECK(psi_integral(PsiSequence::classical(cap), Poly::zero(cap)).is_zero());
    }

    SECTION("right inverse of the derivative on all monomials") {
        for (const PsiSequence& psi : psitest::standard_presets(cap)) {
            const OpMatrix d = d_psi_op(psi);
            for (int n = 0; n <= cap - 1; ++n) {
                const Poly mono = Poly::monomial(n, cap);
                CHECK(d.apply(psi_integral(psi, mono)) == mono);
            }
        }
    }

    SECTION("left inverse on the vanishing-at-zero subspace") {
        Rng rng(131);
        for (const PsiSequence& psi : psitest::standard_presets(cap)) {
            Poly p = psitest::random_poly(rng, cap, cap - 1);
            p.set_coeff(0, Scalar(0));
            CHECK(psi_integral(psi, d_psi_op(psi).apply(p)) == p);
        }
    }

    SECTION("cap guard") {
        CHECK_THROWS_AS(psi_integral(PsiSequence::classical(8), Poly::monomial(8, 8)), CapExceeded);
    }
}

TEST_CASE("Jackson integral") {
    const int cap = 16;

    SECTION("frozen values") {
        CHECK(q_integral(Scalar(1, 2), Poly::monomial(1, cap)) ==
              Poly::monomial(2, cap, Scalar(2, 3)));
        CHECK(q_integral(Scalar(1, 2), Poly::one(cap)) == Poly::monomial(1, cap));
    }

    SECTION("right inverse of the Jackson derivative") {
        for (const Scalar& q : {Scalar(1, 2), Scalar(1, 3), Scalar(2, 3)}) {
            const OpMatrix dq = d_q_op(q, cap);
            for (int n = 0; n <= cap - 1; ++n) {
                const Poly mono = Poly::monomial(n, cap);
                CHECK(dq.apply(q_integral(q, mono)) == mono);
            }
        }
        CHECK(d_q_op(Scalar(1, 2), cap)
                  .apply(q_integral(Scalar(1, 2), Poly::monomial(3, cap))) ==
              Poly::monomial(3, cap));
    }

    SECTION("closed form equals the resolvent oracle") {
        for (const Scalar& q : {Scalar(1, 2), Scalar(1, 3), Scalar(-2, 5)}) {
            const OpMatrix oracle = q_integral_op_oracle(q, cap);
            for (int n = 0; n <= cap - 1; ++n) {
                const Poly mono = Poly::monomial(n, cap);
                CHECK(oracle.apply(mono) == q_integral(q, mono));
            }
        }
    }

    SECTION("roots of unity are rejected") {
        CHECK_THROWS_AS(q_integral(Scalar(-1), Poly::monomial(1, cap)), RootOfUnity);
    }

    SECTION("partial sums of the defining series converge") {
        const Scalar q(1, 2);
        Poly p(cap);
        p.set_coeff(0, Scalar(1));
        p.set_coeff(2, Scalar(3));
        const Poly exact = q_integral(q, p);
        Scalar prev_gap(-1);
        for (int terms = 1; terms <= 6; ++terms) {
            const Poly partial = jackson_partial_sum(q, p, terms);
            Scalar gap(0);
            for (int n = 0; n <= cap; ++n) {
                const Scalar d = exact.coeff(n) - partial.coeff(n);
                gap += (d < 0 ? -d : d);
            }
            if (prev_gap >= 0) CHECK(gap < prev_gap);
            prev_gap = gap;
        }
        CHECK(prev_gap < Scalar(1, 100));
    }
}

TEST_CASE("R-deformed integral") {
    const int cap = 16;

    SECTION("the q-family rational function recovers the Jackson integral") {
        const Scalar q(1, 3);
        const RationalFunction r({Scalar(1) / (Scalar(1) - q), Scalar(-1) / (Scalar(1) - q)},
                                 {Scalar(1)});
        Rng rng(137);
        const Poly p = psitest::random_poly(rng, cap, cap - 1);
        CHECK(r_integral(r, q, p) == q_integral(q, p));
    }

    SECTION("constant one recovers the raw shift") {
        const RationalFunction one({Scalar(1)}, {Scalar(1)});
        for (int n = 0; n <= cap - 1; ++n)
            CHECK(r_integral(one, Scalar(7), Poly::monomial(n, cap)) == Poly::monomial(n + 1, cap));
    }

    SECTION("frozen value for R(z) = z at q = 2") {
        const RationalFunction id_fn({Scalar(0), Scalar(1)}, {Scalar(1)});
        CHECK(r_integral(id_fn, Scalar(2), Poly::monomial(2, cap)) ==
              Poly::monomial(3, cap, Scalar(1, 8)));
    }

    SECTION("right inverse of the R-deformed derivative") {
        const RationalFunction r({Scalar(1), Scalar(2), Scalar(1)}, {Scalar(1), Scalar(1)});
        const Scalar q(1, 2);
        const OpMatrix dr = d_r_op(r, q, cap);
        for (int n = 0; n <= cap - 1; ++n) {
            const Poly mono = Poly::monomial(n, cap);
            CHECK(dr.apply(r_integral(r, q, mono)) == mono);
        }
    }

    SECTION("vanishing values are rejected") {
        // R(z) = z - 1/4 vanishes at q^2 for q = 1/2.
        const RationalFunction r({Scalar(-1, 4), Scalar(1)}, {Scalar(1)});
        CHECK_THROWS_AS(r_integral(r, Scalar(1, 2), Poly::monomial(1, cap)), ZeroDenominator);
    }
}

TEST_CASE("the deformed integral specializes across families") {
    const int cap = 12;
    Rng rng(139);
    const Poly p = psitest::random_poly(rng, cap, cap - 1);

    SECTION("q-family preset") {
        const Scalar q(1, 3);
        CHECK(psi_integral(PsiSequence::q_jackson(q, cap), p) == q_integral(q, p));
    }

    SECTION("rational-function preset") {
        const Scalar q(2, 5);
        const RationalFunction r({Scalar(1), Scalar(3)}, {Scalar(1), Scalar(1)});
        CHECK(psi_integral(PsiSequence::custom_r(r, q, cap), p) == r_integral(r, q, p));
    }
}
