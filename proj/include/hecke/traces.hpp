#pragma once

#include <map>
#include <string>
#include <vector>

#include "hecke/element.hpp"

namespace hecke {

/// Parameters of the relative traces: Tr_k(sigma_{k-1}) = D and
/// Tr_1(tau^a) = mu_a with mu_0 = 1. For finite m, mu_a outside E_m is
/// derived by reducing tau^a modulo the characteristic polynomial; for
/// m = infinity every needed index must be supplied.
class TraceParams {
public:
    TraceParams(Signature sig, ScalarValue D) : sig_(std::move(sig)), D_(std::move(D)) {}

    /// Generic parameters: adjoin D and mu_1..mu_{m-1} as indeterminate slots.
    /// The returned signature must be used for the elements being traced.
    static std::pair<Signature, TraceParams> generic(int m) {
        if (m <= 0) throw Error("generic trace parameters need finite m");
        SignatureOptions opts;
        opts.adjoined.push_back("D");
        for (int a = 1; a < m; ++a) opts.adjoined.push_back("mu" + std::to_string(a));
        Signature sig(m, opts);
        TraceParams p(sig, sig.var("D"));
        for (int a = 1; a < m; ++a) p.set_mu(a, sig.var("mu" + std::to_string(a)));
        return {sig, std::move(p)};
    }

    const Signature& sig() const { return sig_; }
    const ScalarValue& D() const { return D_; }
    void set_D(ScalarValue d) { D_ = std::move(d); }
    void set_mu(long a, ScalarValue v) { mu_[a] = std::move(v); }

    ScalarValue mu(long a) const {
        if (a == 0) return sig_.one();
        auto it = mu_.find(a);
        if (it != mu_.end()) return it->second;
        if (!sig_.finite())
            throw Error("mu_" + std::to_string(a) + " not supplied (m = infinity)");
        if (a >= 0 && a < sig_.m())
            throw Error("mu_" + std::to_string(a) + " not supplied");
        auto coeffs = sig_.tau_power_coeffs(a);
        ScalarValue out = sig_.zero();
        for (long r = 0; r < sig_.m(); ++r) {
            const ScalarValue& c = coeffs[static_cast<size_t>(r)];
            if (!c.is_zero()) out += c * mu(r);
        }
        return out;
    }

private:
    Signature sig_;
    ScalarValue D_;
    std::map<long, ScalarValue> mu_;
};

/// Relative trace Tr_k : H(m,1,k) -> H(m,1,k-1), on basis words
/// T_{j,a,u} -> D sigma_j^{-1}..tau^a..sigma_{k-2} u for j < k-1, mu_a u for j = k-1.
inline HElement tr_k(const HElement& x, const TraceParams& params) {
    const Signature& sig = x.sig();
    const int k = x.level();
    if (k < 1) throw Error("tr_k needs level >= 1");
    HElement out(sig, k - 1);
    for (auto& [w, c] : x.terms()) {
        auto [j, a] = w.layers.back();
        HElement u = HElement::from_basis_word(sig, w.dropped_top(), c);
        if (j == k - 1) {
            out += u.scaled(params.mu(a));
        } else {
            Word prefix;
            for (int i = j; i >= 1; --i) prefix.push_back(lt_sigma_inv(i));
            append_tau_power(prefix, a);
            for (int i = 1; i <= k - 2; ++i) prefix.push_back(lt_sigma(i));
            out += apply_word(prefix, u).scaled(params.D());
        }
    }
    return out;
}

/// Composition Tr_1 o ... o Tr_n down to the ground ring.
inline ScalarValue markov_trace(const HElement& x, const TraceParams& params) {
    HElement cur = x;
    while (cur.level() > 0) cur = tr_k(cur, params);
    return cur.coeff(BasisWord{});
}

struct CheckReport {
    struct Item {
        std::string name;
        bool pass;
    };
    std::vector<Item> items;
    void add(std::string name, bool pass) { items.push_back({std::move(name), pass}); }
    bool all_pass() const {
        for (auto& i : items)
            if (!i.pass) return false;
        return true;
    }
    size_t failures() const {
        size_t f = 0;
        for (auto& i : items)
            if (!i.pass) ++f;
        return f;
    }
};

namespace detail {

inline std::vector<Letter> level_generators(const Signature& sig, int k, bool with_inverses) {
    std::vector<Letter> gens;
    gens.push_back(lt_tau());
    if (with_inverses || !sig.finite()) gens.push_back(lt_tau_inv());
    for (int i = 1; i <= k - 1; ++i) {
        gens.push_back(lt_sigma(i));
        if (with_inverses) gens.push_back(lt_sigma_inv(i));
    }
    return gens;
}

} // namespace detail

/// Machine verification of the defining trace conditions at level k = n:
/// bimodule linearity over H(m,1,k-1), conjugation invariance for both signs,
/// the composed commutation condition, and the normalizations Tr_k(1) = 1,
/// Tr_k(sigma_{k-1}) = D, Tr_1(tau^a) = mu_a.
inline CheckReport verify_trace_axioms(const Signature& sig, int n, const TraceParams& params) {
    CheckReport rpt;
    const int k = n;
    if (k < 2) throw Error("verify_trace_axioms needs level >= 2");

    auto basis_k = basis_enumerate(sig, k);
    auto basis_k1 = basis_enumerate(sig, k - 1);
    auto gens = detail::level_generators(sig, k - 1, true);

    // Tr_k(1) = 1 (derived, not axiomatic)
    rpt.add("normalization Tr_k(1) = 1",
            tr_k(HElement::unit(sig, k), params) == HElement::unit(sig, k - 1));
    // Tr_k(sigma_{k-1}) = D
    rpt.add("normalization Tr_k(sigma_{k-1}) = D",
            tr_k(generator(sig, k, lt_sigma(k - 1)), params) ==
                HElement::unit(sig, k - 1).scaled(params.D()));
    // Tr_1(tau^a) = mu_a
    {
        bool ok = true;
        for (long a = 0; a < (sig.finite() ? sig.m() : 3); ++a) {
            HElement ta = tau_power_mul(a, HElement::unit(sig, 1));
            ScalarValue val = tr_k(ta, params).coeff(BasisWord{});
            if (!val.eq(params.mu(a))) ok = false;
        }
        rpt.add("initial condition Tr_1(tau^a) = mu_a", ok);
    }

    // bimodule condition Tr_k(X Z Y) = X Tr_k(Z) Y, X, Y generators, Z basis words
    {
        bool ok = true;
        for (auto& gx : gens)
            for (auto& gy : gens)
                for (auto& zw : basis_k) {
                    HElement z = HElement::from_basis_word(sig, zw, sig.one());
                    HElement xzy = left_mul_letter(gx, multiply(z, generator(sig, k, gy)));
                    HElement lhs = tr_k(xzy, params);
                    HElement rhs = multiply(left_mul_letter(gx, tr_k(z, params)),
                                            generator(sig, k - 1, gy));
                    if (lhs != rhs) ok = false;
                }
        rpt.add("bimodule Tr_k(XZY) = X Tr_k(Z) Y", ok);
    }

    // conjugation invariance Tr_k(sigma^eps X sigma^-eps) = Tr_{k-1}(X)
    {
        bool ok = true;
        for (int eps : {+1, -1})
            for (auto& xw : basis_k1) {
                HElement x = HElement::from_basis_word(sig, xw, sig.one()).embedded();
                Letter s = eps > 0 ? lt_sigma(k - 1) : lt_sigma_inv(k - 1);
                Letter sinv = eps > 0 ? lt_sigma_inv(k - 1) : lt_sigma(k - 1);
                HElement conj = left_mul_letter(s, multiply(x, generator(sig, k, sinv)));
                HElement lhs = tr_k(conj, params);
                HElement rhs = tr_k(HElement::from_basis_word(sig, xw, sig.one()), params).embedded_to(k - 1);
                if (lhs != rhs) ok = false;
            }
        rpt.add("conjugation Tr_k(s X s^-1) = Tr_{k-1}(X), both signs", ok);
    }

    // composed commutation Tr_{k-1}(Tr_k(sigma_{k-1} Z)) = Tr_{k-1}(Tr_k(Z sigma_{k-1}))
    {
        bool ok = true;
        HElement s = generator(sig, k, lt_sigma(k - 1));
        for (auto& zw : basis_k) {
            HElement z = HElement::from_basis_word(sig, zw, sig.one());
            HElement lhs = tr_k(tr_k(multiply(s, z), params), params);
            HElement rhs = tr_k(tr_k(multiply(z, s), params), params);
            if (lhs != rhs) ok = false;
        }
        rpt.add("commutation Tr_{k-1}(Tr_k(s Z)) = Tr_{k-1}(Tr_k(Z s))", ok);
    }
    return rpt;
}

/// Tr_1(Tr_2(sigma_1^{-1} tau^a sigma_1 tau^b sigma_1)) = D mu_{a+b}.
inline bool check_nested_trace_value(const Signature& sig, long a, long b, const TraceParams& params) {
    Word w;
    w.push_back(lt_sigma_inv(1));
    append_tau_power(w, a);
    w.push_back(lt_sigma(1));
    append_tau_power(w, b);
    w.push_back(lt_sigma(1));
    HElement e = from_word(w, sig, 2);
    ScalarValue lhs = markov_trace(e, params);
    return lhs.eq(params.D() * params.mu(a + b));
}

/// The conditional-expectation property of Tr_k: the stronger absorption
/// identity and the compatibility Tr(ZX) = Tr(Tr_k(Z) X).
inline CheckReport conditional_expectation_check(const Signature& sig, int k, const TraceParams& params) {
    CheckReport rpt;
    auto basis_k = basis_enumerate(sig, k);
    auto gens = detail::level_generators(sig, k - 1, true);
    bool absorb_ok = true, compat_ok = true;
    for (auto& zw : basis_k) {
        HElement z = HElement::from_basis_word(sig, zw, sig.one());
        HElement trz = tr_k(z, params);
        for (auto& gx : gens) {
            HElement x_low = generator(sig, k - 1, gx);
            HElement prod = multiply(trz, x_low);
            if (tr_k(prod.embedded(), params) != prod) absorb_ok = false;
            ScalarValue lhs = markov_trace(multiply(z, x_low.embedded()), params);
            ScalarValue rhs = markov_trace(prod, params);
            if (!lhs.eq(rhs)) compat_ok = false;
        }
    }
    rpt.add("absorption Tr_k(Tr_k(Z) X) = Tr_k(Z) X", absorb_ok);
    rpt.add("compatibility Tr(Z X) = Tr(Tr_k(Z) X)", compat_ok);
    return rpt;
}

} // namespace hecke
