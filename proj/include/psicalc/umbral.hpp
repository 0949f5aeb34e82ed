#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "psicalc/bi_series.hpp"
#include "psicalc/delta_series.hpp"
#include "psicalc/error.hpp"
#include "psicalc/op_matrix.hpp"
#include "psicalc/operators.hpp"
#include "psicalc/poly.hpp"
#include "psicalc/psi_sequence.hpp"

namespace psicalc {

namespace detail {

/// Checks that Q lowers every degree by exactly one and returns the
/// subdiagonal entries b_{n,1} (all nonzero).
inline std::vector<Scalar> validate_degree_lowering(const OpMatrix& q, int up_to) {
    if (!q.column(0).is_zero())
        throw NotDegreeLowering("constants are not annihilated");
    std::vector<Scalar> sub{Scalar(0)};
    for (int n = 1; n <= up_to; ++n) {
        const Poly& col = q.column(n);
        if (col.degree() > n - 1)
            throw NotDegreeLowering("image of degree " + std::to_string(n) + " is too large");
        const Scalar lead = col.coeff(n - 1);
        if (lead == 0)
            throw ZeroSubdiagonal("image of degree " + std::to_string(n) + " drops more than one degree");
        sub.push_back(lead);
    }
    return sub;
}

} // namespace detail

/// Outcome of testing whether a degree-lowering operator is a series in
/// some deformed derivative. The lower-triangular table b_{n,k} (after the
/// b_{1,1}=1 normalization) is kept for audit; on failure the first index
/// pair violating the binomial factorization is recorded.
struct RecognitionResult {
    bool is_series = false;
    std::optional<PsiSequence> psi;
    std::vector<Scalar> q_coeffs;                 // series coefficients [0, 1, q_2, ...]
    std::vector<std::vector<Scalar>> b_table;     // b_table[n][k], 0 <= k <= n
    std::optional<std::pair<int, int>> failure_witness;
    Scalar predicted{0};
    Scalar actual{0};
    Scalar scale{1};
};

/// Decides whether Q = scale * (d_psi + sum_{k>=2} q_k d_psi^k) for a
/// unique admissible deformation, by testing b_{n,k} == binom_psi(n,k) *
/// b_{k,k} against the deformed integers read off the subdiagonal.
inline RecognitionResult recognize_delta(const OpMatrix& q) {
    const int cap = q.cap();
    const std::vector<Scalar> sub = detail::validate_degree_lowering(q, cap);
    if (q.validity() < cap)
        throw GuardBandExceeded("classifier needs fully trusted columns");

    RecognitionResult res;
    res.scale = sub[1];
    res.b_table.assign(static_cast<std::size_t>(cap) + 1, {});
    for (int n = 0; n <= cap; ++n) {
        auto& row = res.b_table[static_cast<std::size_t>(n)];
        row.assign(static_cast<std::size_t>(n) + 1, Scalar(0));
        for (int k = 1; k <= n; ++k)
            row[static_cast<std::size_t>(k)] = q.column(n).coeff(n - k) / res.scale;
    }

    std::vector<Scalar> n_psi{Scalar(0)};
    for (int n = 1; n <= cap; ++n) n_psi.push_back(res.b_table[static_cast<std::size_t>(n)][1]);
    const PsiSequence psi = PsiSequence::custom(std::move(n_psi), cap, "recognized");

    for (int n = 2; n <= cap; ++n) {
        for (int k = 2; k <= n; ++k) {
            const Scalar predicted =
                psi.binomial(n, k) * res.b_table[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
            const Scalar actual = res.b_table[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
            if (predicted != actual) {
                res.is_series = false;
                res.failure_witness = {n, k};
                res.predicted = predicted;
                res.actual = actual;
                return res;
            }
        }
    }

    res.is_series = true;
    res.psi = psi;
    res.q_coeffs.assign(static_cast<std::size_t>(cap) + 1, Scalar(0));
    for (int k = 1; k <= cap; ++k)
        res.q_coeffs[static_cast<std::size_t>(k)] =
            res.b_table[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] / psi.factorial(k);
    return res;
}

inline DeltaSeries recognized_series(const RecognitionResult& res) {
    if (!res.is_series || !res.psi) throw NotDeltaOperator("recognition did not produce a series");
    return DeltaSeries(*res.psi, res.q_coeffs);
}

enum class BasicSource { monomial, rodrigues, lagrange1, lagrange2, lagrange3, general_q_solve };

inline std::string basic_source_name(BasicSource s) {
    switch (s) {
        case BasicSource::monomial: return "monomial";
        case BasicSource::rodrigues: return "rodrigues";
        case BasicSource::lagrange1: return "lagrange1";
        case BasicSource::lagrange2: return "lagrange2";
        case BasicSource::lagrange3: return "lagrange3";
        case BasicSource::general_q_solve: return "general_q_solve";
    }
    return "monomial";
}

/// A basic polynomial sequence p_0..p_M of a degree-lowering generator:
/// p_0 = 1, p_n(0) = 0, deg p_n = n, Q p_n = n_psi p_{n-1}. Carries the
/// generator (and its series form when it has one) so downstream
/// operations cannot mix bases across deformations.
struct BasicSequence {
    PsiSequence psi;
    std::vector<Poly> polys;
    BasicSource source;
    std::optional<DeltaSeries> delta;
    OpMatrix generator;

    int max_index() const { return static_cast<int>(polys.size()) - 1; }
};

/// Defining conditions, re-verified after every construction.
inline bool verify_basic(const BasicSequence& seq) {
    if (seq.polys.empty()) return false;
    if (seq.polys[0] != Poly::one(seq.psi.cap())) return false;
    for (int n = 1; n <= seq.max_index(); ++n) {
        const Poly& p = seq.polys[static_cast<std::size_t>(n)];
        if (p.degree() != n || p.at_zero() != 0) return false;
        const Poly lhs = seq.generator.apply(p);
        const Poly rhs = seq.psi.n_psi(n) * seq.polys[static_cast<std::size_t>(n - 1)];
        if (lhs != rhs) return false;
    }
    return true;
}

/// The monomial sequence, basic for the bare deformed derivative.
inline BasicSequence monomial_basic(const PsiSequence& psi, int m) {
    if (m > psi.cap()) throw CapExceeded("index beyond cap");
    std::vector<Poly> polys;
    for (int n = 0; n <= m; ++n) polys.push_back(Poly::monomial(n, psi.cap()));
    return BasicSequence{psi, std::move(polys), BasicSource::monomial, d_psi_series(psi),
                         d_psi_op(psi)};
}

/// Builds the basic sequence of a delta series through one of the four
/// closed formulas. All four routes agree exactly; the caller picks one
/// and the cross-route property is left to the test batteries.
///
/// With Q = d_psi S (S invertible) and Q' the formal derivative:
///   lagrange1:  p_n = Q' S^{-n-1} x^n
///   lagrange2:  p_n = S^{-n} x^n - (n_psi/n) (S^{-n})' x^{n-1}
///   lagrange3:  p_n = (n_psi/n) x_hat_psi S^{-n} x^{n-1}
///   rodrigues:  p_n = (n_psi/n) x_hat_psi (Q')^{-1} p_{n-1}
inline BasicSequence basic_sequence(const DeltaSeries& q, int m, BasicSource route) {
    if (!q.is_delta()) throw NotDeltaOperator("generator must kill constants and send x to a nonzero constant");
    const PsiSequence& psi = q.psi();
    const int cap = psi.cap();
    if (m > cap - 1) throw CapExceeded("raising operator needs M <= cap-1");
    if (route == BasicSource::monomial || route == BasicSource::general_q_solve)
        throw NotDeltaOperator("route must be one of the four closed formulas");

    std::vector<Scalar> s_coeffs;
    for (int k = 1; k <= q.order(); ++k) s_coeffs.push_back(q.coeff(k));
    const DeltaSeries s(psi, std::move(s_coeffs));
    const DeltaSeries s_inv = series_reciprocal(s);
    const DeltaSeries q_prime = series_formal_derivative(q);

    const OpMatrix d = d_psi_op(psi);
    const OpMatrix x = x_hat_psi_op(psi);
    const auto realize_s = [&](const DeltaSeries& w) { return series_to_matrix(w, d); };

    std::vector<Poly> polys{Poly::one(cap)};
    DeltaSeries s_inv_pow = series_const(psi, Scalar(1));  // S^{-n} while processing n

    if (route == BasicSource::rodrigues) {
        const OpMatrix qp_inv = realize_s(series_reciprocal(q_prime));
        for (int n = 1; n <= m; ++n) {
            const Scalar f = psi.n_psi(n) / Scalar(n);
            polys.push_back(f * x.apply(qp_inv.apply(polys.back())));
        }
    } else {
        for (int n = 1; n <= m; ++n) {
            s_inv_pow = series_mul(s_inv_pow, s_inv);
            const Scalar f = psi.n_psi(n) / Scalar(n);
            switch (route) {
                case BasicSource::lagrange1:
                    polys.push_back(realize_s(series_mul(q_prime, series_mul(s_inv_pow, s_inv)))
                                        .apply(Poly::monomial(n, cap)));
                    break;
                case BasicSource::lagrange2: {
                    const Poly head = realize_s(s_inv_pow).apply(Poly::monomial(n, cap));
                    const Poly tail = realize_s(series_formal_derivative(s_inv_pow))
                                          .apply(Poly::monomial(n - 1, cap));
                    polys.push_back(head - f * tail);
                    break;
                }
                case BasicSource::lagrange3:
                    polys.push_back(
                        f * x.apply(realize_s(s_inv_pow).apply(Poly::monomial(n - 1, cap))));
                    break;
                default: break;
            }
        }
    }

    BasicSequence seq{psi, std::move(polys), route, q, realize(q)};
    if (!verify_basic(seq)) throw SingularSystem("constructed sequence fails its defining conditions");
    return seq;
}

/// Solves Q p_n = n_psi p_{n-1}, p_n(0) = 0 by back-substitution on
/// coefficients. Works for any degree-lowering Q, including operators that
/// are not a series in any deformed derivative.
inline BasicSequence normal_basic_general(const OpMatrix& q, const PsiSequence& psi, int m) {
    if (q.cap() != psi.cap()) throw CapMismatch("operator and sequence caps differ");
    const int cap = q.cap();
    if (m > cap || m > q.validity()) throw CapExceeded("index beyond cap or trusted columns");
    detail::validate_degree_lowering(q, m);

    std::vector<Poly> polys{Poly::one(cap)};
    for (int n = 1; n <= m; ++n) {
        const Poly target = psi.n_psi(n) * polys.back();
        Poly p(cap);
        for (int mm = n - 1; mm >= 0; --mm) {
            Scalar acc = target.coeff(mm);
            for (int j = mm + 2; j <= n; ++j) acc -= p.coeff(j) * q.column(j).coeff(mm);
            const Scalar lead = q.column(mm + 1).coeff(mm);
            if (lead == 0) throw SingularSystem("triangular solve hit a zero pivot");
            p.set_coeff(mm + 1, acc / lead);
        }
        polys.push_back(p);
    }

    BasicSequence seq{psi, std::move(polys), BasicSource::general_q_solve, std::nullopt, q};
    if (!verify_basic(seq)) throw SingularSystem("constructed sequence fails its defining conditions");
    return seq;
}

namespace detail {

inline void require_generated_by(const OpMatrix& q, const BasicSequence& basic) {
    if (q.cap() != basic.psi.cap()) throw CapMismatch("operator and basis caps differ");
    for (int n = 1; n <= basic.max_index(); ++n) {
        if (q.apply(basic.polys[static_cast<std::size_t>(n)]) !=
            basic.psi.n_psi(n) * basic.polys[static_cast<std::size_t>(n - 1)])
            throw BasisMismatch("sequence is not basic for this operator");
    }
}

/// Expands p in the given triangular basis (deg basis[n] = n).
inline std::vector<Scalar> expand_in_basis(const Poly& p, const std::vector<Poly>& basis) {
    const int d = p.degree();
    if (d >= static_cast<int>(basis.size()))
        throw CapExceeded("basis too short for this polynomial");
    std::vector<Scalar> coeffs(basis.size(), Scalar(0));
    Poly rem = p;
    for (int n = d; n >= 0; --n) {
        const Scalar lead = basis[static_cast<std::size_t>(n)].coeff(n);
        const Scalar c = rem.coeff(n) / lead;
        coeffs[static_cast<std::size_t>(n)] = c;
        if (c != 0) rem = rem - c * basis[static_cast<std::size_t>(n)];
    }
    return coeffs;
}

} // namespace detail

/// The raising operator dual to Q in the given basis:
/// p_n -> ((n+1)/(n+1)_psi) p_{n+1}, expressed on the monomial basis.
inline OpMatrix x_hat_q_op(const OpMatrix& q, const BasicSequence& basic) {
    detail::require_generated_by(q, basic);
    const int cap = q.cap();
    const int m = basic.max_index();
    OpMatrix r(cap);
    const int validity = std::min(cap - 1, m - 1);
    for (int j = 0; j <= cap; ++j) {
        if (j > validity) {
            r.set_column(j, Poly::zero(cap));
            continue;
        }
        const auto beta = detail::expand_in_basis(Poly::monomial(j, cap), basic.polys);
        Poly img(cap);
        for (int n = 0; n <= j; ++n) {
            const Scalar c = beta[static_cast<std::size_t>(n)];
            if (c == 0) continue;
            img = img + c * (Scalar(n + 1) / basic.psi.n_psi(n + 1)) *
                            basic.polys[static_cast<std::size_t>(n + 1)];
        }
        r.set_column(j, img);
    }
    r.restrict_validity(validity);
    return r;
}

/// Deformed binomial sum (x +_psi y)^n.
inline Poly translate(const PsiSequence& psi, const Scalar& y, int n) {
    if (n > psi.cap()) throw CapExceeded("degree beyond cap");
    Poly r(psi.cap());
    Scalar yk(1);
    for (int k = n; k >= 0; --k) {
        r.set_coeff(k, psi.binomial(n, k) * yk);
        yk *= y;
    }
    return r;
}

/// E^y applied to an arbitrary polynomial.
inline Poly translate(const PsiSequence& psi, const Scalar& y, const Poly& p) {
    return realize(translation_series(psi, y)).apply(p);
}

/// E^y applied to the n-th basis element.
inline Poly translate(const PsiSequence& psi, const Scalar& y, const BasicSequence& basic, int n) {
    return translate(psi, y, basic.polys.at(static_cast<std::size_t>(n)));
}

/// Generalized translation attached to an arbitrary generator:
/// E^y(Q) = sum_k (p_k(y)/k_psi!) Q^k, exact on degrees <= M.
inline OpMatrix translate_general_q(const OpMatrix& q, const BasicSequence& basic, const Scalar& y) {
    detail::require_generated_by(q, basic);
    const int cap = q.cap();
    OpMatrix acc = OpMatrix::zero_op(cap);
    OpMatrix qk = OpMatrix::identity(cap);
    for (int k = 0; k <= basic.max_index(); ++k) {
        if (k > 0) qk = op_compose(qk, q);
        const Scalar c = basic.polys[static_cast<std::size_t>(k)].eval(y) / basic.psi.factorial(k);
        if (c != 0) acc = acc + c * qk;
    }
    acc.restrict_validity(std::min(q.validity(), basic.max_index()));
    return acc;
}

struct ShefferPair {
    BasicSequence basic;
    DeltaSeries inv_op;
    std::vector<Poly> sheffer;
};

/// s_n = S^{-1} p_n for an invertible S. The deformed binomial identity
/// E^y s_n = sum_k binom_psi(n,k) s_k(x) p_{n-k}(y) is re-verified on a few
/// translation values before the pair is returned.
inline ShefferPair sheffer_sequence(const BasicSequence& basic, const DeltaSeries& s) {
    if (!same_tables(basic.psi, s.psi())) throw PsiMismatch("basis and series deformations differ");
    if (s.coeff(0) == 0) throw NotInvertible("Sheffer factor must be invertible");
    const OpMatrix s_inv = realize(series_reciprocal(s));
    std::vector<Poly> sheffer;
    for (const Poly& p : basic.polys) sheffer.push_back(s_inv.apply(p));

    const PsiSequence& psi = basic.psi;
    for (const Scalar& y : {Scalar(1), Scalar(-1), Scalar(1, 2)}) {
        for (int n = 0; n <= basic.max_index(); ++n) {
            const Poly lhs = translate(psi, y, sheffer[static_cast<std::size_t>(n)]);
            Poly rhs(psi.cap());
            for (int k = 0; k <= n; ++k)
                rhs = rhs + psi.binomial(n, k) *
                                basic.polys[static_cast<std::size_t>(n - k)].eval(y) *
                                sheffer[static_cast<std::size_t>(k)];
            if (lhs != rhs) throw SingularSystem("Sheffer binomial identity failed post-verification");
        }
    }
    return ShefferPair{basic, s, std::move(sheffer)};
}

inline std::vector<Scalar> default_shift_samples() {
    return {Scalar(1), Scalar(-1), Scalar(1, 2)};
}

/// Expansion of a shift-invariant operator in powers of the generating
/// delta operator: coefficients a_n = [T p_n](0) / n_psi!. The returned
/// series is in powers of Q, not of the bare derivative; compose with Q to
/// reconstruct (see first_expansion_reconstruct).
inline DeltaSeries first_expansion(const OpMatrix& t, const BasicSequence& basic,
                                   const std::vector<Scalar>& samples = default_shift_samples()) {
    if (!basic.delta) throw NotDeltaOperator("basis has no generating series");
    if (!is_shift_invariant(t, basic.psi, samples))
        throw NotShiftInvariant("operator does not commute with translations");
    std::vector<Scalar> a;
    for (int n = 0; n <= basic.max_index(); ++n)
        a.push_back(t.apply(basic.polys[static_cast<std::size_t>(n)]).at_zero() /
                    basic.psi.factorial(n));
    return DeltaSeries(basic.psi, std::move(a));
}

/// Realizes sum a_n Q^n through series composition.
inline OpMatrix first_expansion_reconstruct(const DeltaSeries& a, const BasicSequence& basic) {
    if (!basic.delta) throw NotDeltaOperator("basis has no generating series");
    return realize(series_compose(a, *basic.delta));
}

/// Generating series Phi(x;lambda) = sum_n (lambda^n / n_psi!) p_n(x).
inline BiSeries egf_series(const BasicSequence& basic, int lambda_cap) {
    if (lambda_cap > basic.max_index()) throw CapExceeded("basis too short for this lambda order");
    std::vector<Poly> terms;
    for (int n = 0; n <= lambda_cap; ++n)
        terms.push_back((Scalar(1) / basic.psi.factorial(n)) * basic.polys[static_cast<std::size_t>(n)]);
    return BiSeries(std::move(terms), lambda_cap);
}

/// Q Phi = lambda Phi, coefficient-wise in lambda.
inline bool egf_eigen_check(const DeltaSeries& q, const BasicSequence& basic, int lambda_cap) {
    const BiSeries phi = egf_series(basic, lambda_cap);
    const OpMatrix qm = realize(q);
    if (!qm.apply(phi.term(0)).is_zero()) return false;
    for (int n = 1; n <= lambda_cap; ++n)
        if (qm.apply(phi.term(n)) != phi.term(n - 1)) return false;
    return true;
}

/// True when the basis is the monomial one, i.e. the generating series
/// collapses to the deformed exponential.
inline bool is_monomial_basic(const BasicSequence& basic) {
    for (int n = 0; n <= basic.max_index(); ++n)
        if (basic.polys[static_cast<std::size_t>(n)] != Poly::monomial(n, basic.psi.cap()))
            return false;
    return true;
}

} // namespace psicalc
