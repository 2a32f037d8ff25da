#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hecke/cyclotomic.hpp"
#include "hecke/scalar.hpp"

namespace hecke {

/// Construction options for the scalar context of an algebra signature.
struct SignatureOptions {
    std::vector<std::string> adjoined; // polynomial slots (D, mu_a, gamma_a, ...)
    int spectral = 0;                  // spectral slots u1..u<spectral>
    bool rho = false;                  // formal rho slot
};

/// The ground data of the chain: the cyclotomic order m (kAffine encodes
/// m = infinity) and the shared variable table housing q, v_1..v_m and any
/// adjoined parameter slots. The chain level n is carried by elements.
class Signature {
public:
    static constexpr int kAffine = 0;

    explicit Signature(int m, SignatureOptions opts = {}) : m_(m) {
        if (m < 0) throw Error("invalid m");
        std::vector<std::pair<std::string, SlotKind>> slots;
        slots.emplace_back("q", SlotKind::invertible);
        for (int j = 1; j <= m; ++j) slots.emplace_back("v" + std::to_string(j), SlotKind::invertible);
        for (auto& a : opts.adjoined) slots.emplace_back(a, SlotKind::polynomial);
        for (int i = 1; i <= opts.spectral; ++i)
            slots.emplace_back("u" + std::to_string(i), SlotKind::invertible);
        if (opts.rho) slots.emplace_back("rho", SlotKind::polynomial);
        table_ = VariableTable::make(std::move(slots));
    }

    bool finite() const { return m_ > 0; }
    int m() const { return m_; }
    const TablePtr& table() const { return table_; }

    bool operator==(const Signature& o) const { return m_ == o.m_ && table_->same_as(*o.table_); }
    bool operator!=(const Signature& o) const { return !(*this == o); }

    ScalarValue zero() const { return ScalarValue(table_); }
    ScalarValue one() const { return ScalarValue::constant(table_, 1); }
    ScalarValue rational(const Rational& r) const { return ScalarValue::constant(table_, r); }
    ScalarValue var(const std::string& name, int32_t exp = 1) const {
        return ScalarValue::variable(table_, table_->index_of(name), exp);
    }
    ScalarValue q(int32_t exp = 1) const { return var("q", exp); }
    ScalarValue v(int j, int32_t exp = 1) const { return var("v" + std::to_string(j), exp); }
    ScalarValue u(int i, int32_t exp = 1) const { return var("u" + std::to_string(i), exp); }
    /// q - q^{-1}, the quadratic-relation coefficient.
    ScalarValue delta() const { return q(1) - q(-1); }

    /// Coefficients a_0..a_m of (rho - v_1)...(rho - v_m), a_m = 1 (finite m).
    std::vector<ScalarValue> char_coeffs() const {
        require_finite();
        std::vector<ScalarValue> c{one()};
        for (int j = 1; j <= m_; ++j) {
            std::vector<ScalarValue> next(c.size() + 1, zero());
            for (size_t i = 0; i < c.size(); ++i) {
                next[i + 1] += c[i];
                next[i] -= c[i] * v(j);
            }
            c = std::move(next);
        }
        return c;
    }

    /// frak_a_i(rho) = rho^{m-i} + rho^{m-i-1} a_{m-1} + ... + rho a_{i+1} + a_i,
    /// via the recurrence frak_a_m = 1, frak_a_i = rho*frak_a_{i+1} + a_i.
    ScalarValue frak_a(int i, const ScalarValue& rho) const {
        require_finite();
        if (i < 0 || i > m_) throw Error("frak_a index out of range");
        auto a = char_coeffs();
        ScalarValue acc = one();
        for (int k = m_ - 1; k >= i; --k) acc = rho * acc + a[static_cast<size_t>(k)];
        return acc;
    }

    /// tau^e reduced modulo the characteristic polynomial: coefficients
    /// c_0..c_{m-1} with tau^e = sum c_r tau^r. Any integer e (finite m).
    std::vector<ScalarValue> tau_power_coeffs(long e) const {
        require_finite();
        size_t m = static_cast<size_t>(m_);
        std::vector<ScalarValue> c(m, zero());
        if (e >= 0 && e < m_) {
            c[static_cast<size_t>(e)] = one();
            return c;
        }
        auto a = char_coeffs();
        if (e >= m_) {
            c[m - 1] = one();
            for (long step = m_ - 1; step < e; ++step) {
                // multiply by tau: shift, then fold tau^m = -(a_{m-1}tau^{m-1}+...+a_0)
                ScalarValue top = c[m - 1];
                for (size_t r = m - 1; r > 0; --r) c[r] = c[r - 1];
                c[0] = zero();
                if (!top.is_zero())
                    for (size_t r = 0; r < m; ++r) c[r] -= top * a[r];
            }
            return c;
        }
        // tau^{-1} = -(1/a_0)(tau^{m-1} + a_{m-1}tau^{m-2} + ... + a_2 tau + a_1)
        std::vector<ScalarValue> inv(m, zero());
        ScalarValue a0inv = a[0].inverse();
        for (size_t r = 0; r < m; ++r) inv[r] = -(a0inv * a[r + 1]);
        c[0] = one();
        for (long step = 0; step < -e; ++step) {
            std::vector<ScalarValue> prod(2 * m, zero());
            for (size_t i = 0; i < m; ++i) {
                if (c[i].is_zero()) continue;
                for (size_t j = 0; j < m; ++j) prod[i + j] += c[i] * inv[j];
            }
            for (size_t i = 2 * m; i-- > m;) {
                if (prod[i].is_zero()) continue;
                ScalarValue top = prod[i];
                prod[i] = zero();
                for (size_t r = 0; r < m; ++r) prod[i - m + r] -= top * a[r];
            }
            c.assign(prod.begin(), prod.begin() + static_cast<long>(m));
        }
        return c;
    }

    /// Slots of q and v_1..v_m, for the group-algebra specialization.
    int q_slot() const { return table_->index_of("q"); }
    std::vector<int> v_slots() const {
        std::vector<int> s;
        for (int j = 1; j <= m_; ++j) s.push_back(table_->index_of("v" + std::to_string(j)));
        return s;
    }

    /// Specialization q -> sign, v_j -> zeta^{j-1} of a scalar whose reduced
    /// denominator is a unit monomial.
    CycValue specialize(const ScalarValue& x, int sign) const {
        require_finite();
        ScalarValue r = x.normalized();
        CycValue num = specialize_poly(r.num(), m_, sign, q_slot(), v_slots());
        if (r.den().is_one()) return num;
        if (!r.den().is_single_term())
            throw Error("specialize_group: denominator is not a unit monomial");
        // The denominator term c*q^e*prod v_j^{e_j} maps to c*sign^e*zeta^k;
        // invert it directly.
        const auto& [mono, coeff] = *r.den().terms().begin();
        long zexp = 0;
        auto vs = v_slots();
        for (size_t i = 0; i < mono.size(); ++i) {
            if (mono[i] == 0) continue;
            int slot = static_cast<int>(i);
            if (slot == q_slot()) continue;
            bool is_v = false;
            for (size_t j = 0; j < vs.size(); ++j)
                if (vs[j] == slot) {
                    zexp += static_cast<long>(j) * mono[i];
                    is_v = true;
                    break;
                }
            if (!is_v) throw Error("specialize_group: denominator is not a unit monomial");
        }
        Rational c = 1 / coeff;
        if (sign == -1 && (mono[static_cast<size_t>(q_slot())] & 1)) c = -c;
        return num * CycValue::zeta_power(m_, -zexp).scaled(c);
    }

private:
    void require_finite() const {
        if (!finite()) throw Error("operation requires finite m");
    }

    int m_;
    TablePtr table_;
};

} // namespace hecke
