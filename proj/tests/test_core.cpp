#include <catch2/catch_amalgamated.hpp>

#include "psicalc/op_matrix.hpp"
#include "psicalc/operators.hpp"
#include "psicalc/poly.hpp"
#include "psicalc/psi_sequence.hpp"
#include "psicalc/rational.hpp"
#include "test_support.hpp"

using namespace psicalc;
using psitest::Rng;

TEST_CASE("scalar parsing and formatting") {
    CHECK(to_fraction_string(Scalar(3, 4)) == "3/4");
    CHECK(to_fraction_string(Scalar(-2, 6)) == "-1/3");
    CHECK(parse_scalar("7/2") == Scalar(7, 2));
    CHECK(parse_scalar("-5") == Scalar(-5));
    CHECK(parse_scalar("4/6") == Scalar(2, 3));
    CHECK_THROWS_AS(parse_scalar("1/0"), ZeroDenominator);
    CHECK_THROWS_AS(parse_scalar("x"), ParseError);
}

TEST_CASE("scalar arithmetic is a field") {
    Rng rng(20250101);
    for (int trial = 0; trial < 200; ++trial) {
        const Scalar a = psitest::random_scalar(rng);
        const Scalar b = psitest::random_scalar(rng);
        const Scalar c = psitest::random_scalar(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + (-a) == 0);
        if (b != 0) CHECK(a / b * b == a);
    }
    CHECK(spow(Scalar(2, 3), 3) == Scalar(8, 27));
    CHECK(spow(Scalar(2, 3), -2) == Scalar(9, 4));
    CHECK(spow(Scalar(5), 0) == 1);
}

TEST_CASE("polynomial arithmetic") {
    const int cap = 16;
    Poly xp1(cap), xm1(cap);
    xp1.set_coeff(0, Scalar(1));
    xp1.set_coeff(1, Scalar(1));
    xm1.set_coeff(0, Scalar(-1));
    xm1.set_coeff(1, Scalar(1));

    SECTION("difference of squares") {
        Poly want(cap);
        want.set_coeff(0, Scalar(-1));
        want.set_coeff(2, Scalar(1));
        CHECK(xp1 * xm1 == want);
    }

    SECTION("additive identity") {
        Rng rng(7);
        for (int i = 0; i < 20; ++i) {
            const Poly p = psitest::random_poly(rng, cap, cap);
            CHECK(p + Poly::zero(cap) == p);
        }
    }

    SECTION("overflowing product is reported") {
        const Poly a = Poly::monomial(8, cap);
        const Poly b = Poly::monomial(9, cap);
        CHECK_THROWS_AS(a * b, TruncationLoss);
        const auto [trunc, lost] = mul_lossy(a, b);
        CHECK(lost);
        CHECK(trunc.is_zero());
    }

    SECTION("degree and evaluation") {
        CHECK(Poly::zero(cap).degree() == -1);
        Poly p(cap);
        p.set_coeff(2, Scalar(3));
        p.set_coeff(5, Scalar(0));
        CHECK(p.degree() == 2);
        CHECK(p.eval(Scalar(1, 2)) == Scalar(3, 4));
        CHECK(p.dilate(Scalar(2)).coeff(2) == Scalar(12));
    }

    SECTION("cap mismatch") {
        CHECK_THROWS_AS(Poly::one(4) + Poly::one(5), CapMismatch);
    }
}

TEST_CASE("operator application basics") {
    const int cap = 8;

    SECTION("identity and zero") {
        Rng rng(11);
        const Poly p = psitest::random_poly(rng, cap, cap);
        CHECK(OpMatrix::identity(cap).apply(p) == p);
        CHECK(OpMatrix::zero_op(cap).apply(p).is_zero());
    }

    SECTION("column shift-down sends x^3 to x^2") {
        const OpMatrix shift = d_zero_op(cap);
        CHECK(shift.apply(Poly::monomial(3, cap)) == Poly::monomial(2, cap));
    }

    SECTION("cap mismatch") {
        CHECK_THROWS_AS(OpMatrix::identity(4).apply(Poly::one(5)), CapMismatch);
    }
}

TEST_CASE("composition and commutators") {
    const int cap = 8;
    const OpMatrix d = d_classical_op(cap);
    const OpMatrix x = x_hat_op(cap);

    SECTION("self-commutator vanishes") {
        CHECK(op_is_zero_on(op_commutator(d, d), cap));
    }

    SECTION("[D, x] is the identity below the cap") {
        const OpMatrix c = op_commutator(d, x);
        CHECK(c.validity() == cap - 1);
        CHECK(op_equal_on(c, OpMatrix::identity(cap), cap - 1));
    }

    SECTION("powers of x commute") {
        const OpMatrix x2 = op_compose(x, x);
        const OpMatrix c = op_commutator(x, x2);
        CHECK(op_is_zero_on(c, c.validity()));
        CHECK(c.validity() == cap - 3);
    }

    SECTION("composition is associative") {
        Rng rng(23);
        for (int trial = 0; trial < 10; ++trial) {
            const OpMatrix a = psitest::random_operator(rng, cap, 1);
            const OpMatrix b = psitest::random_operator(rng, cap, 1);
            const OpMatrix c = psitest::random_operator(rng, cap, 1);
            const OpMatrix l = op_compose(op_compose(a, b), c);
            const OpMatrix r = op_compose(a, op_compose(b, c));
            CHECK(op_equal_within_validity(l, r));
        }
    }

    SECTION("apply respects composition within validity") {
        Rng rng(29);
        for (int trial = 0; trial < 20; ++trial) {
            const OpMatrix a = psitest::random_operator(rng, cap, 1);
            const OpMatrix b = psitest::random_operator(rng, cap, 1);
            const OpMatrix ab = op_compose(a, b);
            const Poly p = psitest::random_poly(rng, cap, std::max(0, ab.validity()));
            CHECK(ab.apply(p) == a.apply(b.apply(p)));
        }
    }
}

TEST_CASE("preset deformation sequences") {
    SECTION("classical integers") {
        const PsiSequence psi = PsiSequence::classical(4);
        CHECK(psi.n_psi_table() == std::vector<Scalar>{0, 1, 2, 3, 4});
    }

    SECTION("dxd squares") {
        const PsiSequence psi = PsiSequence::dxd(4);
        CHECK(psi.n_psi_table() == std::vector<Scalar>{0, 1, 4, 9, 16});
    }

    SECTION("q-jackson at q = 1/2") {
        const PsiSequence psi = PsiSequence::q_jackson(Scalar(1, 2), 8);
        CHECK(psi.n_psi(2) == Scalar(3, 2));
        CHECK(psi.n_psi(3) == Scalar(7, 4));
    }

    SECTION("ones") {
        const PsiSequence psi = PsiSequence::ones(6);
        for (int n = 1; n <= 6; ++n) CHECK(psi.n_psi(n) == 1);
    }

    SECTION("custom-R reproduces the q-family") {
        // R(z) = (1-z)/(1-q) at q = 1/3.
        const Scalar q(1, 3);
        const RationalFunction r({Scalar(1) / (Scalar(1) - q), Scalar(-1) / (Scalar(1) - q)},
                                 {Scalar(1)});
        const PsiSequence via_r = PsiSequence::custom_r(r, q, 8);
        const PsiSequence direct = PsiSequence::q_jackson(q, 8);
        CHECK(same_tables(via_r, direct));
    }

    SECTION("admissibility is enforced") {
        CHECK_THROWS_AS(PsiSequence::q_jackson(Scalar(-1), 4), NotAdmissible);
        CHECK_THROWS_AS(PsiSequence::q_jackson(Scalar(1), 4), NotAdmissible);
        CHECK_THROWS_AS(PsiSequence::custom({Scalar(0), Scalar(1), Scalar(0)}, 2), NotAdmissible);
        CHECK_THROWS_AS(PsiSequence::custom({Scalar(1), Scalar(1)}, 1), NotAdmissible);
    }
}

TEST_CASE("deformed factorials and binomials") {
    SECTION("frozen values") {
        CHECK(PsiSequence::classical(8).factorial(4) == 24);
        CHECK(PsiSequence::classical(8).factorial(0) == 1);
        CHECK(PsiSequence::dxd(8).factorial(3) == 36);
        CHECK(PsiSequence::classical(8).binomial(4, 2) == 6);
        CHECK(PsiSequence::q_jackson(Scalar(1, 2), 8).binomial(3, 2) == Scalar(7, 4));
    }

    SECTION("boundaries, symmetry, recurrence for every preset") {
        for (const PsiSequence& psi : psitest::standard_presets(10)) {
            for (int n = 0; n <= 10; ++n) {
                CHECK(psi.binomial(n, 0) == 1);
                CHECK(psi.binomial(n, n) == 1);
                for (int k = 0; k <= n; ++k) CHECK(psi.binomial(n, k) == psi.binomial(n, n - k));
                if (n >= 1) CHECK(psi.factorial(n) == psi.n_psi(n) * psi.factorial(n - 1));
            }
        }
    }

    SECTION("classical collapses to the integer oracle") {
        const PsiSequence psi = PsiSequence::classical(10);
        for (int n = 0; n <= 10; ++n) {
            CHECK(psi.factorial(n) == Scalar(int_factorial(n)));
            for (int k = 0; k <= n; ++k) CHECK(psi.binomial(n, k) == Scalar(int_binomial(n, k)));
        }
    }

    SECTION("errors") {
        const PsiSequence psi = PsiSequence::classical(4);
        CHECK_THROWS_AS(psi.factorial(5), IndexOutOfCap);
        CHECK_THROWS_AS(psi.falling(3, 4), KExceedsN);
    }
}
