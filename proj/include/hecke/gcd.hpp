#pragma once

#include <optional>

#include "hecke/laurent.hpp"

namespace hecke {

/// Exact division in the Laurent ring: returns a/b when b divides a, else nullopt.
/// Monomial parts are split off first; the polynomial parts are divided by
/// lex-leading-term elimination, which succeeds exactly when the division is exact.
inline std::optional<LaurentPoly> try_divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
    check_same_table(a.table(), b.table());
    if (b.is_zero()) throw Error("division by zero polynomial");
    if (a.is_zero()) return LaurentPoly::zero(a.table());

    const auto& tab = *a.table();
    Mono amin = a.min_exponents();
    Mono bmin = b.min_exponents();
    Mono qshift(amin.size());
    for (size_t i = 0; i < amin.size(); ++i) {
        qshift[i] = amin[i] - bmin[i];
        if (qshift[i] < 0 && tab.kind(static_cast<int>(i)) == SlotKind::polynomial)
            return std::nullopt;
        amin[i] = -amin[i];
        bmin[i] = -bmin[i];
    }
    LaurentPoly r = a.shifted(amin);
    LaurentPoly bb = b.shifted(bmin);
    LaurentPoly q(a.table());
    const Mono& ltb_m = bb.leading_mono();
    const Rational& ltb_c = bb.leading_coeff();
    while (!r.is_zero()) {
        const Mono& ltr_m = r.leading_mono();
        Mono d = mono_sub(ltr_m, ltb_m);
        for (int32_t e : d)
            if (e < 0) return std::nullopt;
        Rational c = r.leading_coeff() / ltb_c;
        q.add_term(d, c);
        r = r - bb.shifted(d).scaled(c);
    }
    return q.shifted(qshift);
}

inline LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
    auto q = try_divide_exact(a, b);
    if (!q) throw Error("inexact polynomial division");
    return *q;
}

namespace detail {

inline LaurentPoly prem(const LaurentPoly& f, const LaurentPoly& g, int slot) {
    // Pseudo-remainder of f by g, both polynomial in `slot` with slot-min 0.
    int dg = g.degree_in(slot);
    auto gsplit = g.split_by_slot(slot);
    LaurentPoly lg = gsplit.rbegin()->second;
    LaurentPoly r = f;
    while (!r.is_zero() && r.degree_in(slot) >= dg) {
        int dr = r.degree_in(slot);
        auto rsplit = r.split_by_slot(slot);
        LaurentPoly lr = rsplit.rbegin()->second;
        Mono xshift(static_cast<size_t>(f.table()->size()), 0);
        xshift[static_cast<size_t>(slot)] = static_cast<int32_t>(dr - dg);
        r = r * lg - (g.shifted(xshift)) * lr;
    }
    return r;
}

} // namespace detail

inline LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

namespace detail {

/// GCD of the slot-coefficients of p viewed as univariate in `slot`.
inline LaurentPoly content_in(const LaurentPoly& p, int slot) {
    auto parts = p.split_by_slot(slot);
    LaurentPoly g = LaurentPoly::zero(p.table());
    for (auto& [e, c] : parts) {
        g = poly_gcd(g, c);
        if (g.is_one()) break;
    }
    return g;
}

} // namespace detail

/// GCD in the Laurent ring, unit-normalized (lex-leading coefficient 1, zero
/// minimum exponent in every invertible slot). Common monomial factors in
/// polynomial slots are genuine divisors and are kept.
inline LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
    check_same_table(a.table(), b.table());
    const auto& tab = *a.table();
    auto unit_normalize = [&tab](const LaurentPoly& p) {
        if (p.is_zero()) return p;
        Mono mins = p.min_exponents();
        Mono shift(mins.size(), 0);
        for (size_t i = 0; i < mins.size(); ++i)
            if (tab.kind(static_cast<int>(i)) == SlotKind::invertible) shift[i] = -mins[i];
        LaurentPoly q = p.shifted(shift);
        return q.scaled(1 / q.leading_coeff());
    };

    if (a.is_zero()) return unit_normalize(b);
    if (b.is_zero()) return unit_normalize(a);

    // Common monomial factor in polynomial slots (never a unit).
    Mono amin = a.min_exponents();
    Mono bmin = b.min_exponents();
    Mono gm(amin.size(), 0);
    Mono ashift(amin.size(), 0), bshift(bmin.size(), 0);
    for (size_t i = 0; i < amin.size(); ++i) {
        if (tab.kind(static_cast<int>(i)) == SlotKind::polynomial)
            gm[i] = std::min(amin[i], bmin[i]);
        ashift[i] = -amin[i];
        bshift[i] = -bmin[i];
    }
    LaurentPoly mono_part = LaurentPoly::monomial(a.table(), gm, 1);
    LaurentPoly pa = a.shifted(ashift);
    LaurentPoly pb = b.shifted(bshift);

    if (pa.is_constant() || pb.is_constant()) return mono_part;
    if (pa == pb) return mono_part * unit_normalize(pa);

    // Pick a main variable present in both; if supports are disjoint, recurse
    // through the content of one side.
    int slot = -1;
    for (int i = 0; i < tab.size(); ++i)
        if (pa.uses_slot(i) && pb.uses_slot(i)) { slot = i; break; }
    if (slot < 0) {
        for (int i = 0; i < tab.size(); ++i)
            if (pa.uses_slot(i)) { slot = i; break; }
        LaurentPoly ca = detail::content_in(pa, slot);
        return mono_part * poly_gcd(ca, pb);
    }

    LaurentPoly ca = detail::content_in(pa, slot);
    LaurentPoly cb = detail::content_in(pb, slot);
    LaurentPoly f = divide_exact(pa, ca);
    LaurentPoly g = divide_exact(pb, cb);
    LaurentPoly cg = poly_gcd(ca, cb);

    if (f.degree_in(slot) < g.degree_in(slot)) std::swap(f, g);
    // Primitive polynomial remainder sequence.
    while (true) {
        LaurentPoly r = detail::prem(f, g, slot);
        if (r.is_zero()) break;
        if (r.degree_in(slot) == 0) {
            g = LaurentPoly::constant(a.table(), 1);
            break;
        }
        f = g;
        g = divide_exact(r, detail::content_in(r, slot));
    }
    LaurentPoly res = g.is_constant() ? LaurentPoly::constant(a.table(), 1)
                                      : divide_exact(g, detail::content_in(g, slot));
    return mono_part * cg * unit_normalize(res);
}

} // namespace hecke
