#pragma once

#include <map>
#include <string>
#include <utility>

#include "hecke/gcd.hpp"
#include "hecke/laurent.hpp"

namespace hecke {

/// Element of the fraction field of the Laurent ring: an exact rational
/// function. Fractions are kept lazily reduced; full GCD reduction runs in
/// normalized() (and therefore before serialization and substitution), while
/// equality is decided by cross-multiplication and needs no reduction.
class ScalarValue {
public:
    explicit ScalarValue(TablePtr table)
        : num_(LaurentPoly::zero(table)), den_(LaurentPoly::constant(table, 1)) {}

    ScalarValue(LaurentPoly num, LaurentPoly den)
        : num_(std::move(num)), den_(std::move(den)) {
        check_same_table(num_.table(), den_.table());
        if (den_.is_zero()) throw Error("zero denominator");
    }

    static ScalarValue from_poly(LaurentPoly p) {
        LaurentPoly one = LaurentPoly::constant(p.table(), 1);
        return ScalarValue(std::move(p), std::move(one));
    }

    static ScalarValue constant(TablePtr table, const Rational& c) {
        return from_poly(LaurentPoly::constant(std::move(table), c));
    }

    static ScalarValue variable(TablePtr table, int slot, int32_t exp = 1) {
        return from_poly(LaurentPoly::variable(std::move(table), slot, exp));
    }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    const TablePtr& table() const { return num_.table(); }

    bool is_zero() const { return num_.is_zero(); }

    bool is_one() const { return num_ == den_; }

    ScalarValue operator-() const { return ScalarValue(-num_, den_); }

    ScalarValue operator+(const ScalarValue& o) const {
        check_same_table(table(), o.table());
        if (is_zero()) return o;
        if (o.is_zero()) return *this;
        if (den_ == o.den_) return ScalarValue(num_ + o.num_, den_);
        return ScalarValue(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }

    ScalarValue operator-(const ScalarValue& o) const {
        check_same_table(table(), o.table());
        if (o.is_zero()) return *this;
        if (is_zero()) return -o;
        if (den_ == o.den_) return ScalarValue(num_ - o.num_, den_);
        return ScalarValue(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }

    ScalarValue operator*(const ScalarValue& o) const {
        check_same_table(table(), o.table());
        if (is_zero() || o.is_zero()) return ScalarValue(table());
        if (den_.is_one() && o.den_.is_one()) return from_poly(num_ * o.num_);
        return ScalarValue(num_ * o.num_, den_ * o.den_);
    }

    ScalarValue operator/(const ScalarValue& o) const {
        check_same_table(table(), o.table());
        if (o.is_zero()) throw Error("scalar division by zero");
        if (is_zero()) return ScalarValue(table());
        return ScalarValue(num_ * o.den_, den_ * o.num_);
    }

    ScalarValue& operator+=(const ScalarValue& o) { return *this = *this + o; }
    ScalarValue& operator-=(const ScalarValue& o) { return *this = *this - o; }
    ScalarValue& operator*=(const ScalarValue& o) { return *this = *this * o; }
    ScalarValue& operator/=(const ScalarValue& o) { return *this = *this / o; }

    ScalarValue scaled(const Rational& c) const {
        if (c == 0) return ScalarValue(table());
        return ScalarValue(num_.scaled(c), den_);
    }

    ScalarValue inverse() const {
        if (is_zero()) throw Error("scalar division by zero");
        return ScalarValue(den_, num_);
    }

    ScalarValue pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        ScalarValue r = constant(table(), 1);
        ScalarValue base = *this;
        while (e > 0) {
            if (e & 1) r *= base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    /// Exact equality by cross-multiplication.
    bool eq(const ScalarValue& o) const {
        check_same_table(table(), o.table());
        if (den_ == o.den_) return num_ == o.num_;
        return num_ * o.den_ == o.num_ * den_;
    }
    bool operator==(const ScalarValue& o) const { return eq(o); }
    bool operator!=(const ScalarValue& o) const { return !eq(o); }

    bool uses_slot(int slot) const { return num_.uses_slot(slot) || den_.uses_slot(slot); }

    /// GCD-reduced canonical representative: gcd(num, den) divided out, then
    /// the denominator's lex-leading term scaled to a coefficient-1 monomial
    /// in polynomial slots only. Idempotent.
    ScalarValue normalized() const {
        if (num_.is_zero()) return ScalarValue(table());
        LaurentPoly n = num_, d = den_;
        LaurentPoly g = poly_gcd(n, d);
        if (!g.is_one()) {
            n = divide_exact(n, g);
            d = divide_exact(d, g);
        }
        const Mono& lt = d.leading_mono();
        Mono unit(lt.size(), 0);
        const auto& tab = *table();
        for (size_t i = 0; i < lt.size(); ++i)
            if (tab.kind(static_cast<int>(i)) == SlotKind::invertible) unit[i] = -lt[i];
        Rational c = 1 / d.leading_coeff();
        n = n.shifted(unit).scaled(c);
        d = d.shifted(unit).scaled(c);
        return ScalarValue(std::move(n), std::move(d));
    }

    /// Involution inverting every invertible slot (q -> q^-1, v_j -> v_j^-1, ...),
    /// identity on adjoined polynomial slots.
    ScalarValue inverted_units() const {
        return ScalarValue(num_.inverted_units(), den_.inverted_units());
    }

    std::string to_string() const {
        ScalarValue r = normalized();
        if (r.den_.is_one()) return r.num_.to_string();
        return "(" + r.num_.to_string() + ")/(" + r.den_.to_string() + ")";
    }

private:
    LaurentPoly num_, den_;
};

/// Exact evaluation of f at slot = value, cancelling the maximal common power
/// of (slot - value) from numerator and denominator first (univariate division
/// in the slot, coefficients in the remaining fraction field). A surviving
/// zero of the denominator is a genuine pole.
inline ScalarValue substitute(const ScalarValue& f, int slot, const ScalarValue& value) {
    check_same_table(f.table(), value.table());
    const auto& tab = *f.table();
    if (slot < 0 || slot >= tab.size()) throw Error("slot index out of range");
    if (value.uses_slot(slot)) throw Error("substitution value uses the substituted slot");
    if (!f.uses_slot(slot)) return f;

    using XPoly = std::map<int32_t, ScalarValue>; // exponent -> slot-free coefficient

    auto split = [&](const LaurentPoly& p, int32_t& lo) {
        XPoly out;
        lo = 0;
        if (p.is_zero()) return out;
        lo = p.min_exp_in(slot);
        for (auto& [e, c] : p.split_by_slot(slot)) out.emplace(e - lo, ScalarValue::from_poly(c));
        return out;
    };
    auto eval = [&](const XPoly& p) {
        ScalarValue acc(f.table());
        if (p.empty()) return acc;
        int32_t prev = p.rbegin()->first;
        for (auto it = p.rbegin(); it != p.rend(); ++it) {
            for (int32_t k = prev; k > it->first; --k) acc *= value;
            acc += it->second;
            prev = it->first;
        }
        for (int32_t k = prev; k > 0; --k) acc *= value;
        return acc;
    };
    auto syndiv = [&](const XPoly& p) {
        // p / (x - value); remainder must vanish.
        XPoly q;
        ScalarValue carry(f.table());
        if (p.empty()) return q;
        int32_t d = p.rbegin()->first;
        for (int32_t e = d; e >= 1; --e) {
            auto it = p.find(e);
            ScalarValue coeff = carry + (it != p.end() ? it->second : ScalarValue(f.table()));
            if (!coeff.is_zero()) q.emplace(e - 1, coeff);
            carry = coeff * value;
        }
        auto it0 = p.find(0);
        ScalarValue rem = carry + (it0 != p.end() ? it0->second : ScalarValue(f.table()));
        if (!rem.is_zero()) throw Error("internal: inexact synthetic division");
        return q;
    };

    ScalarValue red = f.normalized();
    int32_t lo_n = 0, lo_d = 0;
    XPoly N = split(red.num(), lo_n);
    XPoly D = split(red.den(), lo_d);
    int32_t k = lo_n - lo_d;

    if (value.is_zero()) {
        if (k < 0) throw PoleError(tab.name(slot));
        if (k > 0) return ScalarValue(f.table());
        auto at0 = [&](const XPoly& p) {
            auto it = p.find(0);
            return it == p.end() ? ScalarValue(f.table()) : it->second;
        };
        return at0(N) / at0(D);
    }

    ScalarValue nv = eval(N);
    ScalarValue dv = eval(D);
    while (nv.is_zero() && dv.is_zero()) {
        N = syndiv(N);
        D = syndiv(D);
        nv = eval(N);
        dv = eval(D);
    }
    if (dv.is_zero()) throw PoleError(tab.name(slot));
    ScalarValue result = nv / dv;
    if (k != 0) result *= value.pow(k);
    return result.normalized();
}

inline ScalarValue substitute(const ScalarValue& f, const std::string& slot, const ScalarValue& value) {
    return substitute(f, f.table()->index_of(slot), value);
}

} // namespace hecke
