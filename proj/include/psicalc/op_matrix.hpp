#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "psicalc/error.hpp"
#include "psicalc/poly.hpp"

namespace psicalc {

/// A linear operator on the truncated polynomial space, stored as its
/// action on the monomial basis: column j is the image of x^j.
///
/// Operators assembled from degree-raising pieces are only faithful to
/// their untruncated counterparts on low degrees; `validity()` records the
/// largest input degree on which the stored action is exact. Compositions
/// propagate the bound, so identity checks can never be corrupted by
/// silent truncation.
class OpMatrix {
public:
    explicit OpMatrix(int cap)
        : cap_(cap), columns_(static_cast<std::size_t>(cap) + 1, Poly(cap)), validity_(cap) {
        if (cap < 0) throw CapExceeded("cap must be nonnegative");
    }

    OpMatrix(std::vector<Poly> columns, int cap, int validity)
        : cap_(cap), columns_(std::move(columns)), validity_(clamp_validity(validity, cap)) {
        if (static_cast<int>(columns_.size()) != cap + 1)
            throw CapMismatch("operator needs exactly cap+1 columns");
        for (const auto& col : columns_)
            if (col.cap() != cap) throw CapMismatch("column cap differs from operator cap");
    }

    static OpMatrix zero_op(int cap) { return OpMatrix(cap); }

    static OpMatrix identity(int cap) {
        OpMatrix m(cap);
        for (int j = 0; j <= cap; ++j) m.columns_[static_cast<std::size_t>(j)] = Poly::monomial(j, cap);
        return m;
    }

    /// Builds columns from a per-degree rule x^j -> rule(j).
    template <typename Fn>
    static OpMatrix from_rule(int cap, int validity, Fn&& rule) {
        OpMatrix m(cap);
        for (int j = 0; j <= cap; ++j) m.columns_[static_cast<std::size_t>(j)] = rule(j);
        m.validity_ = clamp_validity(validity, cap);
        return m;
    }

    int cap() const { return cap_; }
    int validity() const { return validity_; }
    const Poly& column(int j) const { return columns_.at(static_cast<std::size_t>(j)); }
    const std::vector<Poly>& columns() const { return columns_; }

    void set_column(int j, Poly p) {
        if (p.cap() != cap_) throw CapMismatch("column cap differs from operator cap");
        columns_.at(static_cast<std::size_t>(j)) = std::move(p);
    }

    void restrict_validity(int v) { validity_ = clamp_validity(std::min(validity_, v), cap_); }

    Poly apply(const Poly& p) const {
        if (p.cap() != cap_) throw CapMismatch("operand cap differs from operator cap");
        Poly r(cap_);
        for (int j = 0; j <= std::min(p.degree(), cap_); ++j) {
            const Scalar c = p.coeff(j);
            if (c != 0) r = r + c * columns_[static_cast<std::size_t>(j)];
        }
        return r;
    }

    /// Largest degree shift deg(T x^j) - j over trusted columns; the
    /// sentinel for an all-zero action never constrains a composition.
    int max_degree_shift() const {
        int shift = -(cap_ + 2);
        for (int j = 0; j <= validity_; ++j) {
            const int d = columns_[static_cast<std::size_t>(j)].degree();
            if (d >= 0) shift = std::max(shift, d - j);
        }
        return shift;
    }

    friend OpMatrix operator+(const OpMatrix& a, const OpMatrix& b) {
        require_same_cap(a, b);
        OpMatrix r(a.cap_);
        for (int j = 0; j <= a.cap_; ++j)
            r.columns_[static_cast<std::size_t>(j)] = a.column(j) + b.column(j);
        r.validity_ = std::min(a.validity_, b.validity_);
        return r;
    }

    friend OpMatrix operator-(const OpMatrix& a, const OpMatrix& b) {
        return a + (Scalar(-1) * b);
    }

    friend OpMatrix operator*(const Scalar& s, const OpMatrix& a) {
        OpMatrix r = a;
        for (auto& col : r.columns_) col = s * col;
        return r;
    }

private:
    static int clamp_validity(int v, int cap) { return std::max(-1, std::min(v, cap)); }

    static void require_same_cap(const OpMatrix& a, const OpMatrix& b) {
        if (a.cap_ != b.cap_) throw CapMismatch("operator caps differ");
    }

    int cap_;
    std::vector<Poly> columns_;
    int validity_;
};

/// (A . B)(p) = A(B(p)). The result is exact on inputs of degree d whenever
/// d is trusted by B and B can only move d into A's trusted range.
inline OpMatrix op_compose(const OpMatrix& a, const OpMatrix& b) {
    if (a.cap() != b.cap()) throw CapMismatch("operator caps differ");
    const int cap = a.cap();
    OpMatrix r(cap);
    for (int j = 0; j <= cap; ++j) r.set_column(j, a.apply(b.column(j)));
    const int v = std::min(b.validity(), a.validity() - b.max_degree_shift());
    r.restrict_validity(v);
    return r;
}

inline OpMatrix op_commutator(const OpMatrix& a, const OpMatrix& b) {
    return op_compose(a, b) - op_compose(b, a);
}

inline OpMatrix op_pow(const OpMatrix& a, int n) {
    if (n < 0) throw NotInvertible("matrix powers only for n >= 0");
    OpMatrix r = OpMatrix::identity(a.cap());
    for (int k = 0; k < n; ++k) r = op_compose(r, a);
    return r;
}

/// Exact column equality for input degrees 0..d.
inline bool op_equal_on(const OpMatrix& a, const OpMatrix& b, int d) {
    if (a.cap() != b.cap()) throw CapMismatch("operator caps differ");
    for (int j = 0; j <= std::min(d, a.cap()); ++j)
        if (a.column(j) != b.column(j)) return false;
    return true;
}

/// Equality on the shared trusted range.
inline bool op_equal_within_validity(const OpMatrix& a, const OpMatrix& b) {
    return op_equal_on(a, b, std::min(a.validity(), b.validity()));
}

inline bool op_is_zero_on(const OpMatrix& a, int d) {
    for (int j = 0; j <= std::min(d, a.cap()); ++j)
        if (!a.column(j).is_zero()) return false;
    return true;
}

} // namespace psicalc
