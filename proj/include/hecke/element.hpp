#pragma once

#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hecke/signature.hpp"
#include "hecke/words.hpp"

namespace hecke {

/// Basis word of the inductive basis: layers[k-1] = (j_k, a_k) names the
/// level-k factor sigma_{j_k}^{-1}..sigma_1^{-1} tau^{a_k} sigma_1..sigma_{k-1};
/// the word is the product of the layer factors, level n leftmost.
struct BasisWord {
    struct Layer {
        int j;
        long a;
        bool operator==(const Layer& o) const { return j == o.j && a == o.a; }
        bool operator<(const Layer& o) const { return j != o.j ? j < o.j : a < o.a; }
    };
    std::vector<Layer> layers;

    int level() const { return static_cast<int>(layers.size()); }

    static BasisWord unit(int n) {
        BasisWord w;
        w.layers.reserve(static_cast<size_t>(n));
        for (int k = 1; k <= n; ++k) w.layers.push_back({k - 1, 0});
        return w;
    }

    bool is_unit() const {
        for (int k = 1; k <= level(); ++k) {
            const Layer& l = layers[static_cast<size_t>(k - 1)];
            if (l.j != k - 1 || l.a != 0) return false;
        }
        return true;
    }

    BasisWord dropped_top() const {
        BasisWord w = *this;
        w.layers.pop_back();
        return w;
    }

    BasisWord with_top(Layer l) const {
        BasisWord w = *this;
        w.layers.push_back(l);
        return w;
    }

    bool operator==(const BasisWord& o) const { return layers == o.layers; }
    // Top layer is most significant, matching the flat index of the induced
    // regular representation (u fastest, then a, then j).
    bool operator<(const BasisWord& o) const {
        if (layers.size() != o.layers.size()) return layers.size() < o.layers.size();
        for (size_t k = layers.size(); k-- > 0;) {
            if (!(layers[k] == o.layers[k])) return layers[k] < o.layers[k];
        }
        return false;
    }

    std::string to_string() const {
        std::ostringstream os;
        os << "[";
        for (size_t k = 0; k < layers.size(); ++k)
            os << (k ? " " : "") << "(" << layers[k].j << "," << layers[k].a << ")";
        os << "]";
        return os.str();
    }
};

/// The generator word whose evaluation is the basis word.
inline Word basis_word_letters(const BasisWord& w) {
    Word out;
    for (int k = w.level(); k >= 1; --k) {
        const auto& l = w.layers[static_cast<size_t>(k - 1)];
        for (int i = l.j; i >= 1; --i) out.push_back(lt_sigma_inv(i));
        append_tau_power(out, l.a);
        for (int i = 1; i <= k - 1; ++i) out.push_back(lt_sigma(i));
    }
    return out;
}

/// Element of H(m,1,n): a finite scalar-weighted sum of basis words, always
/// held in normal form. Immutable in spirit; all operations return new values.
class HElement {
public:
    HElement(Signature sig, int level) : sig_(std::move(sig)), level_(level) {
        if (level < 0) throw Error("negative chain level");
    }

    static HElement zero(const Signature& sig, int level) { return HElement(sig, level); }

    static HElement unit(const Signature& sig, int level) {
        HElement e(sig, level);
        e.terms_.emplace(BasisWord::unit(level), sig.one());
        return e;
    }

    static HElement from_basis_word(const Signature& sig, BasisWord w, ScalarValue c) {
        HElement e(sig, w.level());
        e.check_word(w);
        if (!c.is_zero()) e.terms_.emplace(std::move(w), std::move(c));
        return e;
    }

    const Signature& sig() const { return sig_; }
    int level() const { return level_; }
    const std::map<BasisWord, ScalarValue>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    void add_term(const BasisWord& w, const ScalarValue& c) {
        if (c.is_zero()) return;
        if (static_cast<int>(w.layers.size()) != level_) throw Error("basis word level mismatch");
        auto it = terms_.find(w);
        if (it == terms_.end()) {
            terms_.emplace(w, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    ScalarValue coeff(const BasisWord& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? sig_.zero() : it->second;
    }

    HElement operator+(const HElement& o) const {
        require_compatible(o);
        HElement r = *this;
        for (auto& [w, c] : o.terms_) r.add_term(w, c);
        return r;
    }
    HElement operator-(const HElement& o) const {
        require_compatible(o);
        HElement r = *this;
        for (auto& [w, c] : o.terms_) r.add_term(w, -c);
        return r;
    }
    HElement operator-() const {
        HElement r(sig_, level_);
        for (auto& [w, c] : terms_) r.terms_.emplace(w, -c);
        return r;
    }
    HElement scaled(const ScalarValue& c) const {
        HElement r(sig_, level_);
        if (c.is_zero()) return r;
        for (auto& [w, k] : terms_) {
            ScalarValue p = k * c;
            if (!p.is_zero()) r.terms_.emplace(w, std::move(p));
        }
        return r;
    }
    HElement& operator+=(const HElement& o) { return *this = *this + o; }
    HElement& operator-=(const HElement& o) { return *this = *this - o; }

    bool eq(const HElement& o) const {
        require_compatible(o);
        if (terms_.size() != o.terms_.size()) {
            return (*this - o).is_zero();
        }
        auto it = terms_.begin();
        auto jt = o.terms_.begin();
        for (; it != terms_.end(); ++it, ++jt) {
            if (!(it->first == jt->first)) return (*this - o).is_zero();
            if (!it->second.eq(jt->second)) return false;
        }
        return true;
    }
    bool operator==(const HElement& o) const { return eq(o); }
    bool operator!=(const HElement& o) const { return !eq(o); }

    /// Embedding H(m,1,level) -> H(m,1,level+1) adapted to the basis:
    /// u -> T^{(k+1)}_{k,0,u}.
    HElement embedded() const {
        HElement r(sig_, level_ + 1);
        for (auto& [w, c] : terms_) r.terms_.emplace(w.with_top({level_, 0}), c);
        return r;
    }

    HElement embedded_to(int target_level) const {
        HElement r = *this;
        while (r.level_ < target_level) r = r.embedded();
        if (r.level_ != target_level) throw Error("cannot embed downwards");
        return r;
    }

    /// Normalize every coefficient to its canonical representative.
    HElement normalized() const {
        HElement r(sig_, level_);
        for (auto& [w, c] : terms_) {
            ScalarValue cc = c.normalized();
            if (!cc.is_zero()) r.terms_.emplace(w, std::move(cc));
        }
        return r;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto& [w, c] : terms_) {
            if (!first) os << " + ";
            os << "(" << c.to_string() << ")*" << w.to_string();
            first = false;
        }
        return os.str();
    }

private:
    void check_word(const BasisWord& w) const {
        for (int k = 1; k <= w.level(); ++k) {
            const auto& l = w.layers[static_cast<size_t>(k - 1)];
            if (l.j < 0 || l.j >= k) throw Error("layer index out of range");
            if (sig_.finite() && (l.a < 0 || l.a >= sig_.m())) throw Error("layer exponent out of range");
        }
    }
    void require_compatible(const HElement& o) const {
        if (sig_ != o.sig_) throw Error("algebra signature mismatch");
        if (level_ != o.level_) throw Error("chain level mismatch");
    }

    Signature sig_;
    int level_;
    std::map<BasisWord, ScalarValue> terms_;
};

namespace detail {

/// Attach a fixed top layer to every word of a level-(k-1) element.
inline HElement attach_top(const HElement& sub, BasisWord::Layer top) {
    HElement r(sub.sig(), sub.level() + 1);
    for (auto& [w, c] : sub.terms()) r.add_term(w.with_top(top), c);
    return r;
}

/// Attach a top layer (j, e) where e may lie outside E_m: for finite m the
/// power tau^e is reduced modulo the characteristic polynomial.
inline HElement attach_top_reduced(const HElement& sub, int j, long e) {
    const Signature& sig = sub.sig();
    if (!sig.finite() || (e >= 0 && e < sig.m())) return attach_top(sub, {j, e});
    auto coeffs = sig.tau_power_coeffs(e);
    HElement r(sig, sub.level() + 1);
    for (long rr = 0; rr < sig.m(); ++rr) {
        const ScalarValue& c = coeffs[static_cast<size_t>(rr)];
        if (c.is_zero()) continue;
        r += attach_top(sub.scaled(c), {j, rr});
    }
    return r;
}

} // namespace detail

inline HElement left_mul_letter(Letter g, const HElement& x);

/// x -> (product of letters) * x, letters multiplied left to right.
inline HElement apply_word(const Word& w, const HElement& x) {
    HElement r = x;
    for (size_t i = w.size(); i-- > 0;) r = left_mul_letter(w[i], r);
    return r;
}

inline HElement tau_power_mul(long a, const HElement& x) {
    HElement r = x;
    for (long k = 0; k < (a > 0 ? a : -a); ++k)
        r = left_mul_letter(a > 0 ? lt_tau() : lt_tau_inv(), r);
    return r;
}

/// beta_j = sigma_{j-1}^{-1} ... sigma_1^{-1} applied on the left.
inline HElement beta_mul(int j, const HElement& x) {
    HElement r = x;
    for (int i = 1; i <= j - 1; ++i) r = left_mul_letter(lt_sigma_inv(i), r);
    return r;
}

/// Left regular action of one generator on a normal-form element. This is the
/// rewriting core: the top layer is transformed by the inductive action
/// formulas and the remaining letters descend into the lower levels.
inline HElement left_mul_letter(Letter g, const HElement& x) {
    const Signature& sig = x.sig();
    const int n = x.level();
    const ScalarValue delta = sig.delta();

    switch (g.kind) {
    case Letter::sigma: {
        int i = g.index;
        if (i < 1 || i >= n) throw Error("generator G" + std::to_string(i) + " out of range");
        HElement out(sig, n);
        for (auto& [w, c] : x.terms()) {
            auto top = w.layers.back();
            HElement sub = HElement::from_basis_word(sig, w.dropped_top(), c);
            if (top.j < i - 1) {
                out += detail::attach_top(left_mul_letter(lt_sigma(i - 1), sub), top);
            } else if (top.j == i - 1) {
                out += detail::attach_top(sub.scaled(delta), {i - 1, top.a});
                out += detail::attach_top(sub, {i, top.a});
            } else if (top.j == i) {
                out += detail::attach_top(sub, {i - 1, top.a});
            } else {
                out += detail::attach_top(left_mul_letter(lt_sigma(i), sub), top);
            }
        }
        return out;
    }
    case Letter::sigma_inv: {
        // sigma_i^{-1} = sigma_i - (q - q^{-1})
        HElement out = left_mul_letter(lt_sigma(g.index), x);
        out -= x.scaled(delta);
        return out;
    }
    case Letter::tau: {
        if (n < 1) throw Error("tau undefined at level 0");
        HElement out(sig, n);
        for (auto& [w, c] : x.terms()) {
            auto top = w.layers.back();
            HElement sub = HElement::from_basis_word(sig, w.dropped_top(), c);
            if (top.j == 0) {
                out += detail::attach_top_reduced(sub, 0, top.a + 1);
            } else {
                HElement beta_tau_u = beta_mul(top.j, tau_power_mul(top.a, sub));
                HElement beta_u = beta_mul(top.j, sub);
                out += detail::attach_top_reduced(beta_tau_u.scaled(delta), 0, 1);
                out -= detail::attach_top_reduced(beta_u.scaled(delta), 0, top.a + 1);
                out += detail::attach_top(left_mul_letter(lt_tau(), sub), top);
            }
        }
        return out;
    }
    case Letter::tau_inv: {
        if (n < 1) throw Error("tau undefined at level 0");
        if (sig.finite()) {
            // tau^{-1} = -(1/a_0)(tau^{m-1} + a_{m-1} tau^{m-2} + ... + a_1)
            auto a = sig.char_coeffs();
            ScalarValue a0inv = a[0].inverse();
            HElement out(sig, n);
            HElement pow = x;
            for (int r = 1; r <= sig.m(); ++r) {
                out -= pow.scaled(a0inv * a[static_cast<size_t>(r)]);
                if (r < sig.m()) pow = left_mul_letter(lt_tau(), pow);
            }
            return out;
        }
        HElement out(sig, n);
        for (auto& [w, c] : x.terms()) {
            auto top = w.layers.back();
            HElement sub = HElement::from_basis_word(sig, w.dropped_top(), c);
            if (top.j == 0) {
                out += detail::attach_top(sub, {0, top.a - 1});
            } else {
                HElement tinv_u = left_mul_letter(lt_tau_inv(), sub);
                HElement beta_tau_tinv_u = beta_mul(top.j, tau_power_mul(top.a, tinv_u));
                HElement beta_tinv_u = beta_mul(top.j, tinv_u);
                out -= detail::attach_top(beta_tau_tinv_u.scaled(delta), {0, 0});
                out += detail::attach_top(beta_tinv_u.scaled(delta), {0, top.a});
                out += detail::attach_top(tinv_u, top);
            }
        }
        return out;
    }
    }
    throw Error("unreachable");
}

/// Fold a generator word over the unit element: the normal form of the word.
inline HElement from_word(const Word& w, const Signature& sig, int level) {
    return apply_word(w, HElement::unit(sig, level));
}

inline HElement generator(const Signature& sig, int level, Letter l) {
    return from_word({l}, sig, level);
}

/// x * y via expansion of each basis word of x into its defining letters.
inline HElement multiply(const HElement& x, const HElement& y) {
    if (x.sig() != y.sig()) throw Error("algebra signature mismatch");
    if (x.level() != y.level()) throw Error("chain level mismatch");
    HElement out(x.sig(), x.level());
    for (auto& [w, c] : x.terms()) out += apply_word(basis_word_letters(w), y).scaled(c);
    return out;
}

inline HElement operator*(const HElement& x, const HElement& y) { return multiply(x, y); }

/// All m^n n! basis words, ordered compatibly with BasisWord::operator< (top
/// layer most significant). Finite m only.
inline std::vector<BasisWord> basis_enumerate(const Signature& sig, int n) {
    if (!sig.finite()) throw Error("basis_enumerate: infinite basis for m = infinity");
    std::vector<BasisWord> words{BasisWord{}};
    for (int k = 1; k <= n; ++k) {
        std::vector<BasisWord> next;
        next.reserve(words.size() * static_cast<size_t>(k * sig.m()));
        for (int j = 0; j < k; ++j)
            for (long a = 0; a < sig.m(); ++a)
                for (const auto& w : words) next.push_back(w.with_top({j, a}));
        words = std::move(next);
    }
    return words;
}

/// Ring involution: generators to their inverses, q -> q^{-1}, v_j -> v_j^{-1}.
inline HElement involution_iota(const HElement& x) {
    HElement out(x.sig(), x.level());
    for (auto& [w, c] : x.terms()) {
        Word letters = basis_word_letters(w);
        Word inv;
        inv.reserve(letters.size());
        for (size_t i = letters.size(); i-- > 0;) inv.push_back(letter_inverse(letters[i]));
        out += from_word(inv, x.sig(), x.level()).scaled(c.inverted_units());
    }
    return out;
}

/// Anti-involution fixing the generators and the scalars, reversing products.
inline HElement anti_involution_varpi(const HElement& x) {
    HElement out(x.sig(), x.level());
    for (auto& [w, c] : x.terms()) {
        Word letters = basis_word_letters(w);
        Word rev(letters.rbegin(), letters.rend());
        out += from_word(rev, x.sig(), x.level()).scaled(c);
    }
    return out;
}

} // namespace hecke
