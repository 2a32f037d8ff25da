#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "hecke/variables.hpp"

namespace hecke {

using Rational = mpq_class;

/// Exponent vector, one entry per table slot.
using Mono = std::vector<int32_t>;

inline Mono mono_add(const Mono& a, const Mono& b) {
    Mono r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Mono mono_sub(const Mono& a, const Mono& b) {
    Mono r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

/// Sparse multivariate Laurent polynomial with rational coefficients.
/// Canonical by construction: the term map never stores zero coefficients,
/// so two equal polynomials have identical maps.
class LaurentPoly {
public:
    using TermMap = std::map<Mono, Rational>;

    explicit LaurentPoly(TablePtr table) : table_(std::move(table)) {}

    static LaurentPoly zero(TablePtr table) { return LaurentPoly(std::move(table)); }

    static LaurentPoly constant(TablePtr table, const Rational& c) {
        LaurentPoly p(std::move(table));
        if (c != 0) p.terms_.emplace(Mono(static_cast<size_t>(p.table_->size()), 0), c);
        return p;
    }

    static LaurentPoly variable(TablePtr table, int slot, int32_t exp = 1) {
        LaurentPoly p(std::move(table));
        if (slot < 0 || slot >= p.table_->size()) throw Error("slot index out of range");
        if (exp < 0 && p.table_->kind(slot) == SlotKind::polynomial)
            throw Error("negative exponent on polynomial slot '" + p.table_->name(slot) + "'");
        Mono m(static_cast<size_t>(p.table_->size()), 0);
        m[static_cast<size_t>(slot)] = exp;
        if (exp != 0 || true) p.terms_.emplace(std::move(m), Rational(1));
        return p;
    }

    static LaurentPoly monomial(TablePtr table, Mono m, const Rational& c) {
        LaurentPoly p(std::move(table));
        if (static_cast<int>(m.size()) != p.table_->size()) throw Error("monomial arity mismatch");
        if (c != 0) p.terms_.emplace(std::move(m), c);
        return p;
    }

    const TablePtr& table() const { return table_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        if (terms_.empty()) return true;
        if (terms_.size() > 1) return false;
        const Mono& m = terms_.begin()->first;
        return std::all_of(m.begin(), m.end(), [](int32_t e) { return e == 0; });
    }

    bool is_one() const {
        return is_constant() && !terms_.empty() && terms_.begin()->second == 1;
    }

    bool is_single_term() const { return terms_.size() == 1; }

    Rational constant_value() const {
        if (terms_.empty()) return Rational(0);
        if (!is_constant()) throw Error("not a constant polynomial");
        return terms_.begin()->second;
    }

    size_t term_count() const { return terms_.size(); }

    void add_term(const Mono& m, const Rational& c) {
        if (c == 0) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    LaurentPoly operator-() const {
        LaurentPoly r(table_);
        for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    LaurentPoly operator+(const LaurentPoly& o) const {
        check_same_table(table_, o.table_);
        LaurentPoly r(*this);
        for (auto& [m, c] : o.terms_) r.add_term(m, c);
        return r;
    }

    LaurentPoly operator-(const LaurentPoly& o) const {
        check_same_table(table_, o.table_);
        LaurentPoly r(*this);
        for (auto& [m, c] : o.terms_) r.add_term(m, -c);
        return r;
    }

    LaurentPoly operator*(const LaurentPoly& o) const {
        check_same_table(table_, o.table_);
        LaurentPoly r(table_);
        for (auto& [ma, ca] : terms_)
            for (auto& [mb, cb] : o.terms_) r.add_term(mono_add(ma, mb), ca * cb);
        return r;
    }

    LaurentPoly scaled(const Rational& c) const {
        LaurentPoly r(table_);
        if (c == 0) return r;
        for (auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
        return r;
    }

    LaurentPoly shifted(const Mono& delta) const {
        LaurentPoly r(table_);
        for (auto& [m, c] : terms_) r.terms_.emplace(mono_add(m, delta), c);
        return r;
    }

    bool operator==(const LaurentPoly& o) const {
        return table_->same_as(*o.table_) && terms_ == o.terms_;
    }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    /// Lexicographically largest monomial (the printing leading term).
    const Mono& leading_mono() const {
        if (terms_.empty()) throw Error("leading term of zero polynomial");
        return terms_.rbegin()->first;
    }
    const Rational& leading_coeff() const {
        if (terms_.empty()) throw Error("leading term of zero polynomial");
        return terms_.rbegin()->second;
    }

    int degree_in(int slot) const {
        if (terms_.empty()) throw Error("degree of zero polynomial");
        int32_t d = terms_.begin()->first[static_cast<size_t>(slot)];
        for (auto& [m, c] : terms_) d = std::max(d, m[static_cast<size_t>(slot)]);
        return d;
    }

    int min_exp_in(int slot) const {
        if (terms_.empty()) throw Error("min exponent of zero polynomial");
        int32_t d = terms_.begin()->first[static_cast<size_t>(slot)];
        for (auto& [m, c] : terms_) d = std::min(d, m[static_cast<size_t>(slot)]);
        return d;
    }

    bool uses_slot(int slot) const {
        for (auto& [m, c] : terms_)
            if (m[static_cast<size_t>(slot)] != 0) return true;
        return false;
    }

    /// Per-slot minimum exponents over all terms (zero polynomial -> all zero).
    Mono min_exponents() const {
        Mono r(static_cast<size_t>(table_->size()), 0);
        bool first = true;
        for (auto& [m, c] : terms_) {
            if (first) { r = m; first = false; continue; }
            for (size_t i = 0; i < r.size(); ++i) r[i] = std::min(r[i], m[i]);
        }
        return r;
    }

    /// View as a univariate polynomial in `slot`: exponent -> slot-free cofactor.
    std::map<int32_t, LaurentPoly> split_by_slot(int slot) const {
        std::map<int32_t, LaurentPoly> out;
        for (auto& [m, c] : terms_) {
            Mono rest = m;
            int32_t e = rest[static_cast<size_t>(slot)];
            rest[static_cast<size_t>(slot)] = 0;
            auto it = out.find(e);
            if (it == out.end()) it = out.emplace(e, LaurentPoly(table_)).first;
            it->second.add_term(rest, c);
        }
        return out;
    }

    /// Ring involution negating exponents of every invertible slot.
    LaurentPoly inverted_units() const {
        LaurentPoly r(table_);
        for (auto& [m, c] : terms_) {
            Mono f = m;
            for (int i = 0; i < table_->size(); ++i)
                if (table_->kind(i) == SlotKind::invertible) f[static_cast<size_t>(i)] = -f[static_cast<size_t>(i)];
            r.terms_.emplace(std::move(f), c);
        }
        return r;
    }

    /// Canonical text form, leading term first: e.g. "3/2*q^-1*v1^2 + 1".
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const Rational& c = it->second;
            Rational a = c;
            if (first) {
                if (a < 0) { os << "-"; a = -a; }
            } else {
                if (a < 0) { os << " - "; a = -a; }
                else os << " + ";
            }
            std::string vars = mono_string(it->first);
            if (vars.empty()) {
                os << a.get_str();
            } else {
                if (a != 1) os << a.get_str() << "*";
                os << vars;
            }
            first = false;
        }
        return os.str();
    }

private:
    std::string mono_string(const Mono& m) const {
        std::ostringstream os;
        bool firstv = true;
        for (int i = 0; i < table_->size(); ++i) {
            int32_t e = m[static_cast<size_t>(i)];
            if (e == 0) continue;
            if (!firstv) os << "*";
            os << table_->name(i);
            if (e != 1) os << "^" << e;
            firstv = false;
        }
        return os.str();
    }

    TablePtr table_;
    TermMap terms_;
};

} // namespace hecke
