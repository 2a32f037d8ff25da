#pragma once

#include <map>
#include <string>
#include <vector>

#include "hecke/bases.hpp"
#include "hecke/element.hpp"
#include "hecke/right_action.hpp"
#include "hecke/traces.hpp"

namespace hecke {

/// The linear functional gamma on polynomial functions of tau, determined by
/// gamma_a = gamma(tau^a) for a in E_m. For finite m other indices reduce
/// through the characteristic polynomial; for m = infinity every index must
/// be supplied explicitly.
class GammaFunctional {
public:
    explicit GammaFunctional(Signature sig) : sig_(std::move(sig)) {}

    /// gamma with gamma_0 = 1 and gamma_a = 0 otherwise.
    static GammaFunctional gamma_circ(const Signature& sig) {
        GammaFunctional g(sig);
        g.set(0, sig.one());
        if (sig.finite())
            for (long a = 1; a < sig.m(); ++a) g.set(a, sig.zero());
        return g;
    }

    /// Fully generic gamma: adjoins slots g0..g_{m-1} to a fresh signature.
    static std::pair<Signature, GammaFunctional> generic(int m,
                                                         SignatureOptions extra = {}) {
        if (m <= 0) throw Error("generic gamma needs finite m");
        SignatureOptions opts = extra;
        for (int a = 0; a < m; ++a) opts.adjoined.push_back("g" + std::to_string(a));
        Signature sig(m, opts);
        GammaFunctional g(sig);
        for (long a = 0; a < m; ++a) g.set(a, sig.var("g" + std::to_string(a)));
        return {sig, std::move(g)};
    }

    const Signature& sig() const { return sig_; }
    void set(long a, ScalarValue v) { values_[a] = std::move(v); }

    ScalarValue at(long a) const {
        auto it = values_.find(a);
        if (it != values_.end()) return it->second;
        if (!sig_.finite())
            throw Error("gamma_" + std::to_string(a) + " not supplied (m = infinity)");
        if (a >= 0 && a < sig_.m())
            throw Error("gamma_" + std::to_string(a) + " not supplied");
        auto coeffs = sig_.tau_power_coeffs(a);
        ScalarValue out = sig_.zero();
        for (long r = 0; r < sig_.m(); ++r) {
            const ScalarValue& c = coeffs[static_cast<size_t>(r)];
            if (!c.is_zero()) out += c * at(r);
        }
        return out;
    }

private:
    Signature sig_;
    std::map<long, ScalarValue> values_;
};

/// The basis-multiplicative central form: on a basis word the value is zero
/// unless every layer sits at j_k = k-1, in which case it is the product of
/// the gamma_{a_k}.
inline ScalarValue L_gamma(const HElement& x, const GammaFunctional& gamma) {
    ScalarValue out = x.sig().zero();
    for (auto& [w, c] : x.terms()) {
        ScalarValue f = c;
        bool nonzero = true;
        for (int k = 1; k <= w.level(); ++k) {
            const auto& l = w.layers[static_cast<size_t>(k - 1)];
            if (l.j != k - 1) {
                nonzero = false;
                break;
            }
            f *= gamma.at(l.a);
        }
        if (nonzero) out += f;
    }
    return out;
}

/// iota(L^gamma) = iota0 o L^gamma o iota.
inline ScalarValue iota_L_gamma(const HElement& x, const GammaFunctional& gamma) {
    return L_gamma(involution_iota(x), gamma).inverted_units();
}

/// Centrality L(gx) = L(xg) for every generator against every basis word,
/// and invariance under the product-reversing anti-involution.
inline CheckReport verify_centrality(const Signature& sig, int n, const GammaFunctional& gamma) {
    CheckReport rpt;
    auto words = basis_enumerate(sig, n);
    auto gens = detail::level_generators(sig, n, true);
    bool central_ok = true;
    for (auto& w : words) {
        HElement x = HElement::from_basis_word(sig, w, sig.one());
        for (auto& g : gens) {
            ScalarValue lhs = L_gamma(left_mul_letter(g, x), gamma);
            ScalarValue rhs = L_gamma(right_mul_letter(x, g), gamma);
            if (!lhs.eq(rhs)) central_ok = false;
        }
    }
    rpt.add("centrality L(gx) = L(xg)", central_ok);
    bool varpi_ok = true;
    for (auto& w : words) {
        HElement x = HElement::from_basis_word(sig, w, sig.one());
        if (!L_gamma(anti_involution_varpi(x), gamma).eq(L_gamma(x, gamma))) varpi_ok = false;
    }
    rpt.add("anti-involution invariance L(varpi(x)) = L(x)", varpi_ok);
    return rpt;
}

/// The quasi-symmetric basis attached to gamma: per layer, the a = 0 factors
/// sigma_{j+1}..sigma_{k-1} and the recentred factors
/// sigma_j^{-1}..sigma_1^{-1}(tau^a - gamma_a/gamma_0) sigma_1..sigma_{k-1}.
/// Each word is a signed combination of plain basis words, so the expansion
/// is assembled directly. Requires gamma_0 invertible.
inline BGammaBasis bgamma_basis(const Signature& sig, int n, const GammaFunctional& gamma) {
    if (gamma.at(0).is_zero()) throw Error("bgamma_basis: gamma_0 must be invertible");
    ScalarValue g0inv = gamma.at(0).inverse();
    BGammaBasis out;
    out.labels = basis_enumerate(sig, n);
    for (auto& label : out.labels) {
        HElement e(sig, n);
        e.add_term(label, sig.one());
        // expand prod_k (t_{j,a} - (gamma_a/gamma_0) t_{j,0}) over layer subsets
        for (int k = 1; k <= n; ++k) {
            const auto& l = label.layers[static_cast<size_t>(k - 1)];
            if (l.a == 0) continue;
            HElement next(sig, n);
            ScalarValue shift = gamma.at(l.a) * g0inv;
            for (auto& [w, c] : e.terms()) {
                next.add_term(w, c);
                BasisWord w0 = w;
                w0.layers[static_cast<size_t>(k - 1)] = {l.j, 0};
                next.add_term(w0, -(c * shift));
            }
            e = std::move(next);
        }
        out.l_values.push_back(L_gamma(e, gamma).normalized());
        out.elements.push_back(std::move(e));
    }
    return out;
}

/// Negative control: the per-level ansatz with incompatible functionals per
/// level is not central; this evaluates the leveled form.
inline ScalarValue L_leveled(const HElement& x, const std::vector<GammaFunctional>& per_level) {
    ScalarValue out = x.sig().zero();
    for (auto& [w, c] : x.terms()) {
        ScalarValue f = c;
        bool nonzero = true;
        for (int k = 1; k <= w.level(); ++k) {
            const auto& l = w.layers[static_cast<size_t>(k - 1)];
            if (l.j != k - 1) {
                nonzero = false;
                break;
            }
            f *= per_level.at(static_cast<size_t>(k - 1)).at(l.a);
        }
        if (nonzero) out += f;
    }
    return out;
}

} // namespace hecke
