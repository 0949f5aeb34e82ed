#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "psicalc/error.hpp"
#include "psicalc/rational.hpp"

namespace psicalc {

/// An admissible deformation sequence stored extensionally up to the cap:
/// the deformed integers n_psi[n], the underlying values psi_vals[n] with
/// psi_vals[0] = 1 and n_psi[n] = psi_vals[n-1]/psi_vals[n], and the
/// derived factorials and binomials.
///
/// Presets:
///   classical   n_psi = n        (ordinary calculus)
///   q-jackson   n_psi = (1-q^n)/(1-q)
///   ones        n_psi = 1        (divided-difference derivative)
///   dxd         n_psi = n^2
///   custom-R    n_psi = R(q^n) for a rational function R
///   custom      n_psi given directly
class PsiSequence {
public:
    static PsiSequence classical(int cap) {
        std::vector<Scalar> n_psi;
        for (int n = 0; n <= cap; ++n) n_psi.emplace_back(n);
        return PsiSequence(std::move(n_psi), cap, "classical", std::nullopt);
    }

    static PsiSequence ones(int cap) {
        std::vector<Scalar> n_psi{Scalar(0)};
        for (int n = 1; n <= cap; ++n) n_psi.emplace_back(1);
        return PsiSequence(std::move(n_psi), cap, "ones", std::nullopt);
    }

    static PsiSequence dxd(int cap) {
        std::vector<Scalar> n_psi;
        for (int n = 0; n <= cap; ++n) n_psi.emplace_back(Scalar(n) * Scalar(n));
        return PsiSequence(std::move(n_psi), cap, "dxd", std::nullopt);
    }

    static PsiSequence q_jackson(const Scalar& q, int cap) {
        if (q == 1) throw NotAdmissible("q-jackson requires q != 1");
        std::vector<Scalar> n_psi{Scalar(0)};
        Scalar qn = q;
        for (int n = 1; n <= cap; ++n) {
            n_psi.push_back((Scalar(1) - qn) / (Scalar(1) - q));
            qn *= q;
        }
        return PsiSequence(std::move(n_psi), cap, "q-jackson", q);
    }

    static PsiSequence custom_r(const RationalFunction& r, const Scalar& q, int cap) {
        std::vector<Scalar> n_psi{Scalar(0)};
        Scalar qn = q;
        for (int n = 1; n <= cap; ++n) {
            n_psi.push_back(r.eval(qn));
            qn *= q;
        }
        return PsiSequence(std::move(n_psi), cap, "custom-R", q);
    }

    static PsiSequence custom(std::vector<Scalar> n_psi, int cap, std::string label = "custom") {
        return PsiSequence(std::move(n_psi), cap, std::move(label), std::nullopt);
    }

    int cap() const { return cap_; }
    const std::string& label() const { return label_; }
    const std::optional<Scalar>& q() const { return q_; }
    const std::vector<Scalar>& n_psi_table() const { return n_psi_; }
    const std::vector<Scalar>& psi_vals() const { return psi_vals_; }

    Scalar n_psi(int n) const {
        check_index(n);
        return n_psi_[static_cast<std::size_t>(n)];
    }

    /// n_psi! = n_psi (n-1)_psi ... 1_psi, with 0_psi! = 1; equals
    /// 1/psi_vals[n].
    Scalar factorial(int n) const {
        check_index(n);
        return Scalar(1) / psi_vals_[static_cast<std::size_t>(n)];
    }

    /// Falling product n_psi (n-1)_psi ... (n-k+1)_psi.
    Scalar falling(int n, int k) const {
        check_index(n);
        if (k < 0 || k > n) throw KExceedsN("falling factorial needs 0 <= k <= n");
        Scalar acc(1);
        for (int j = 0; j < k; ++j) acc *= n_psi_[static_cast<std::size_t>(n - j)];
        return acc;
    }

    Scalar binomial(int n, int k) const { return falling(n, k) / factorial(k); }

    friend bool same_tables(const PsiSequence& a, const PsiSequence& b) {
        return a.cap_ == b.cap_ && a.n_psi_ == b.n_psi_;
    }

private:
    PsiSequence(std::vector<Scalar> n_psi, int cap, std::string label, std::optional<Scalar> q)
        : cap_(cap), n_psi_(std::move(n_psi)), label_(std::move(label)), q_(std::move(q)) {
        if (cap_ < 0) throw CapExceeded("cap must be nonnegative");
        if (static_cast<int>(n_psi_.size()) != cap_ + 1)
            throw NotAdmissible("need n_psi values for 0..cap");
        if (n_psi_[0] != 0) throw NotAdmissible("0_psi must be 0");
        psi_vals_.assign(static_cast<std::size_t>(cap_) + 1, Scalar(1));
        for (int n = 1; n <= cap_; ++n) {
            if (n_psi_[static_cast<std::size_t>(n)] == 0)
                throw NotAdmissible(label_ + ": " + std::to_string(n) + "_psi vanishes");
            psi_vals_[static_cast<std::size_t>(n)] =
                psi_vals_[static_cast<std::size_t>(n - 1)] / n_psi_[static_cast<std::size_t>(n)];
        }
    }

    void check_index(int n) const {
        if (n < 0 || n > cap_) throw IndexOutOfCap("index outside [0, cap]");
    }

    int cap_;
    std::vector<Scalar> n_psi_;
    std::vector<Scalar> psi_vals_;
    std::string label_;
    std::optional<Scalar> q_;
};

/// Preset dispatcher used by the CLI and serialization layers.
inline PsiSequence make_preset(const std::string& label, const std::optional<Scalar>& q, int cap,
                               const std::optional<RationalFunction>& r = std::nullopt) {
    if (label == "classical") return PsiSequence::classical(cap);
    if (label == "ones") return PsiSequence::ones(cap);
    if (label == "dxd") return PsiSequence::dxd(cap);
    if (label == "q-jackson") {
        if (!q) throw MissingParameter("q-jackson needs q");
        return PsiSequence::q_jackson(*q, cap);
    }
    if (label == "custom-R") {
        if (!q || !r) throw MissingParameter("custom-R needs q and R");
        return PsiSequence::custom_r(*r, *q, cap);
    }
    throw ParseError("unknown preset '" + label + "'");
}

} // namespace psicalc
