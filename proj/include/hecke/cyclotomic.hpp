#pragma once

#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "hecke/laurent.hpp"

namespace hecke {

/// Coefficients of the m-th cyclotomic polynomial, monic, ascending degree.
inline std::vector<Rational> cyclotomic_polynomial(int m) {
    if (m < 1) throw Error("cyclotomic index must be positive");
    // x^m - 1 divided by the product of Phi_d over proper divisors d of m.
    auto poly_div = [](std::vector<Rational> num, const std::vector<Rational>& den) {
        std::vector<Rational> q(num.size() - den.size() + 1, Rational(0));
        for (int i = static_cast<int>(q.size()) - 1; i >= 0; --i) {
            Rational c = num[static_cast<size_t>(i) + den.size() - 1] / den.back();
            q[static_cast<size_t>(i)] = c;
            for (size_t k = 0; k < den.size(); ++k)
                num[static_cast<size_t>(i) + k] -= c * den[k];
        }
        for (auto& r : num)
            if (r != 0) throw Error("internal: inexact cyclotomic division");
        return q;
    };
    std::vector<Rational> num(static_cast<size_t>(m) + 1, Rational(0));
    num[0] = -1;
    num[static_cast<size_t>(m)] = 1;
    for (int d = 1; d < m; ++d)
        if (m % d == 0) num = poly_div(std::move(num), cyclotomic_polynomial(d));
    return num;
}

/// Element of Q[zeta]/Phi_m(zeta), stored reduced (degree < deg Phi_m), so
/// equality is coefficient-wise.
class CycValue {
public:
    explicit CycValue(int m) : m_(m), phi_(cyclotomic_polynomial(m)), c_(phi_.size() - 1, Rational(0)) {}

    static CycValue from_rational(int m, const Rational& r) {
        CycValue v(m);
        if (!v.c_.empty()) v.c_[0] = r;
        return v;
    }

    /// zeta^k (any integer k).
    static CycValue zeta_power(int m, long k) {
        CycValue v(m);
        long e = ((k % m) + m) % m;
        std::vector<Rational> poly(static_cast<size_t>(e) + 1, Rational(0));
        poly.back() = 1;
        v.assign_reduced(poly);
        return v;
    }

    int m() const { return m_; }
    bool is_zero() const {
        for (auto& r : c_)
            if (r != 0) return false;
        return true;
    }
    const std::vector<Rational>& coeffs() const { return c_; }

    CycValue operator+(const CycValue& o) const {
        CycValue r = *this;
        for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
        return r;
    }
    CycValue operator-(const CycValue& o) const {
        CycValue r = *this;
        for (size_t i = 0; i < c_.size(); ++i) r.c_[i] -= o.c_[i];
        return r;
    }
    CycValue operator-() const {
        CycValue r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    CycValue operator*(const CycValue& o) const {
        std::vector<Rational> prod(2 * c_.size(), Rational(0));
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            for (size_t j = 0; j < o.c_.size(); ++j) prod[i + j] += c_[i] * o.c_[j];
        }
        CycValue r(m_);
        r.assign_reduced(prod);
        return r;
    }
    CycValue scaled(const Rational& k) const {
        CycValue r = *this;
        for (auto& x : r.c_) x *= k;
        return r;
    }

    bool operator==(const CycValue& o) const { return m_ == o.m_ && c_ == o.c_; }
    bool operator!=(const CycValue& o) const { return !(*this == o); }

    std::string to_string() const {
        std::ostringstream os;
        bool first = true;
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            if (!first) os << " + ";
            os << c_[i].get_str();
            if (i > 0) os << "*z^" << i;
            first = false;
        }
        if (first) os << "0";
        return os.str();
    }

private:
    void assign_reduced(std::vector<Rational> poly) {
        size_t d = phi_.size() - 1;
        for (size_t i = poly.size(); i-- > d;) {
            Rational c = poly[i];
            if (c == 0) continue;
            for (size_t k = 0; k < phi_.size(); ++k) poly[i - d + k] -= c * phi_[k];
        }
        c_.assign(poly.begin(), poly.begin() + static_cast<long>(d));
    }

    int m_;
    std::vector<Rational> phi_;
    std::vector<Rational> c_;
};

/// Specialization q -> sign, v_j -> zeta^{j-1} into Q[zeta]/Phi_m. The slots
/// q_slot and v_slots identify the image variables; every other slot must be
/// unused by f.
inline CycValue specialize_poly(const LaurentPoly& f, int m, int sign, int q_slot,
                                const std::vector<int>& v_slots) {
    if (m < 1) throw Error("specialize_group: m must be finite");
    if (sign != 1 && sign != -1) throw Error("specialize_group: sign must be +1 or -1");
    std::vector<bool> allowed(static_cast<size_t>(f.table()->size()), false);
    allowed[static_cast<size_t>(q_slot)] = true;
    for (int s : v_slots) allowed[static_cast<size_t>(s)] = true;
    CycValue out(m);
    for (auto& [mono, coeff] : f.terms()) {
        long zexp = 0;
        for (size_t i = 0; i < mono.size(); ++i) {
            if (mono[i] == 0) continue;
            if (!allowed[i]) throw Error("specialize_group: adjoined/spectral slot present");
        }
        for (size_t j = 0; j < v_slots.size(); ++j)
            zexp += static_cast<long>(j) * mono[static_cast<size_t>(v_slots[j])];
        Rational c = coeff;
        if (sign == -1 && (mono[static_cast<size_t>(q_slot)] & 1)) c = -c;
        out = out + CycValue::zeta_power(m, zexp).scaled(c);
    }
    return out;
}

} // namespace hecke
