#pragma once

#include "hecke/element.hpp"

namespace hecke {

namespace detail {

/// Letters of beta_{p+1} tau^e beta_{n-1}^{-1} =
/// sigma_p^{-1}..sigma_1^{-1} tau^e sigma_1..sigma_{chain}.
inline Word conjugator_word(int p, long e, int chain) {
    Word w;
    for (int i = p; i >= 1; --i) w.push_back(lt_sigma_inv(i));
    append_tau_power(w, e);
    for (int i = 1; i <= chain; ++i) w.push_back(lt_sigma(i));
    return w;
}

} // namespace detail

/// Right regular action of one generator, computed directly from the
/// closed formulas for the right multiplication on basis words (not by
/// generic multiplication; the two paths are cross-checked in tests).
inline HElement right_mul_letter(const HElement& x, Letter g) {
    const Signature& sig = x.sig();
    const int n = x.level();
    const ScalarValue delta = sig.delta();

    if (g.kind == Letter::sigma_inv) {
        return right_mul_letter(x, lt_sigma(g.index)) - x.scaled(delta);
    }

    if (g.kind == Letter::tau || g.kind == Letter::tau_inv || (g.kind == Letter::sigma && g.index <= n - 2)) {
        if (n == 0) throw Error("no generators at level 0");
        if (n == 1) {
            // level 1: only tau^{+-1}; T^{(1)}_{0,a,1} tau = tau^{a+1}
            if (g.kind == Letter::sigma) throw Error("generator index out of range");
            HElement out(sig, 1);
            for (auto& [w, c] : x.terms()) {
                long a = w.layers[0].a + (g.kind == Letter::tau ? 1 : -1);
                out += detail::attach_top_reduced(HElement::from_basis_word(sig, BasisWord{}, c), 0, a);
            }
            return out;
        }
        // T^{(n)}_{j,a,u} x = T^{(n)}_{j,a,ux}
        HElement out(sig, n);
        for (auto& [w, c] : x.terms()) {
            auto top = w.layers.back();
            HElement sub = HElement::from_basis_word(sig, w.dropped_top(), c);
            out += detail::attach_top(right_mul_letter(sub, g), top);
        }
        return out;
    }

    if (g.kind != Letter::sigma || g.index != n - 1 || n < 2)
        throw Error("generator index out of range");

    // Right multiplication by sigma_{n-1} on T^{(n)}_{j,a,u}, u = T^{(n-1)}_{k,b,w}.
    HElement out(sig, n);
    for (auto& [word, coeff] : x.terms()) {
        auto [j, a] = word.layers[static_cast<size_t>(n - 1)];
        auto [k, b] = word.layers[static_cast<size_t>(n - 2)];
        BasisWord rest = word;
        rest.layers.pop_back();
        rest.layers.pop_back();
        HElement w_embedded =
            HElement::from_basis_word(sig, rest, coeff).embedded(); // level n-1

        auto conj = [&](int p, long e) {
            return apply_word(detail::conjugator_word(p, e, n - 2), w_embedded);
        };

        // (q - q^{-1}) T_{j,a+b, sigma_{k+1}..sigma_{n-2} w}
        {
            Word chain;
            for (int i = k + 1; i <= n - 2; ++i) chain.push_back(lt_sigma(i));
            out += detail::attach_top_reduced(apply_word(chain, w_embedded).scaled(delta), j, a + b);
        }
        // (q - q^{-1}) S_a
        if (a > 0) {
            for (long c = 1; c <= a; ++c) {
                out += detail::attach_top_reduced(conj(k, a + b - c).scaled(delta), j, c);
                out -= detail::attach_top_reduced(conj(k, a - c).scaled(delta), j, c + b);
            }
        } else if (a < 0) {
            for (long c = 1; c <= -a; ++c) {
                out += detail::attach_top_reduced(conj(k, -c).scaled(delta), j, c + a + b);
                out -= detail::attach_top_reduced(conj(k, b - c).scaled(delta), j, c + a);
            }
        }
        // main terms
        if (j <= k) {
            out += detail::attach_top_reduced(conj(j, a), k + 1, b);
        } else {
            out += detail::attach_top_reduced(conj(j - 1, a), k, b);
            out -= detail::attach_top_reduced(conj(k, a).scaled(delta), j, b);
        }
    }
    return out;
}

inline HElement right_mul_word(const HElement& x, const Word& w) {
    HElement r = x;
    for (const auto& l : w) r = right_mul_letter(r, l);
    return r;
}

} // namespace hecke
