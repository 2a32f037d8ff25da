#pragma once

#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hecke/variables.hpp"

namespace hecke {

struct GroupSignature {
    int m; // kAffine (0) encodes m = infinity
    int n;
    static constexpr int kAffine = 0;
    bool finite() const { return m > 0; }
    bool operator==(const GroupSignature& o) const { return m == o.m && n == o.n; }
    bool operator!=(const GroupSignature& o) const { return !(*this == o); }
};

struct GroupLetter {
    enum Kind { t, t_inv, s } kind;
    int index = 0; // s_index, 1-based; unused for t letters
};
using GroupWord = std::vector<GroupLetter>;

inline GroupLetter gl_t() { return {GroupLetter::t, 0}; }
inline GroupLetter gl_t_inv() { return {GroupLetter::t_inv, 0}; }
inline GroupLetter gl_s(int i) { return {GroupLetter::s, i}; }

/// Element of the wreath product C_m wr S_n: a color vector and a permutation.
/// The product rule matches the standard isomorphism with G(m,1,n):
/// (v, w)(u, p) = (b, w o p) with b_k = v_k + u_{w^{-1}(k)}.
class GroupElement {
public:
    GroupSignature sig;
    std::vector<long> colors; // size n, reduced mod m when finite
    std::vector<int> perm;    // one-line, 0-based: perm[a] = w(a)

    static GroupElement identity(GroupSignature sig) {
        GroupElement g;
        g.sig = sig;
        g.colors.assign(static_cast<size_t>(sig.n), 0);
        g.perm.resize(static_cast<size_t>(sig.n));
        for (int i = 0; i < sig.n; ++i) g.perm[static_cast<size_t>(i)] = i;
        return g;
    }

    void reduce_colors() {
        if (!sig.finite()) return;
        for (auto& c : colors) c = ((c % sig.m) + sig.m) % sig.m;
    }

    bool is_identity() const {
        for (size_t i = 0; i < perm.size(); ++i)
            if (perm[i] != static_cast<int>(i)) return false;
        for (long c : colors)
            if (c != 0) return false;
        return true;
    }

    bool operator==(const GroupElement& o) const {
        return sig == o.sig && colors == o.colors && perm == o.perm;
    }
    bool operator!=(const GroupElement& o) const { return !(*this == o); }
    bool operator<(const GroupElement& o) const {
        if (colors != o.colors) return colors < o.colors;
        return perm < o.perm;
    }

    std::string to_string() const {
        std::ostringstream os;
        os << "colors(";
        for (size_t i = 0; i < colors.size(); ++i) os << (i ? "," : "") << colors[i];
        os << ") perm(";
        for (size_t i = 0; i < perm.size(); ++i) os << (i ? "," : "") << perm[i] + 1;
        os << ")";
        return os.str();
    }
};

inline GroupElement element_mul(const GroupElement& a, const GroupElement& b) {
    if (a.sig != b.sig) throw Error("group signature mismatch");
    int n = a.sig.n;
    GroupElement r;
    r.sig = a.sig;
    r.perm.resize(static_cast<size_t>(n));
    r.colors.resize(static_cast<size_t>(n));
    std::vector<int> ainv(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) ainv[static_cast<size_t>(a.perm[static_cast<size_t>(i)])] = i;
    for (int i = 0; i < n; ++i) {
        r.perm[static_cast<size_t>(i)] = a.perm[static_cast<size_t>(b.perm[static_cast<size_t>(i)])];
        r.colors[static_cast<size_t>(i)] =
            a.colors[static_cast<size_t>(i)] + b.colors[static_cast<size_t>(ainv[static_cast<size_t>(i)])];
    }
    r.reduce_colors();
    return r;
}

inline GroupElement element_inv(const GroupElement& a) {
    int n = a.sig.n;
    GroupElement r;
    r.sig = a.sig;
    r.perm.resize(static_cast<size_t>(n));
    r.colors.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) r.perm[static_cast<size_t>(a.perm[static_cast<size_t>(i)])] = i;
    for (int i = 0; i < n; ++i)
        r.colors[static_cast<size_t>(i)] = -a.colors[static_cast<size_t>(a.perm[static_cast<size_t>(i)])];
    r.reduce_colors();
    return r;
}

inline GroupElement generator_t(GroupSignature sig) {
    GroupElement g = GroupElement::identity(sig);
    g.colors[0] = 1;
    g.reduce_colors();
    return g;
}

inline GroupElement generator_s(GroupSignature sig, int i) {
    if (i < 1 || i >= sig.n) throw Error("generator index s" + std::to_string(i) + " out of range");
    GroupElement g = GroupElement::identity(sig);
    std::swap(g.perm[static_cast<size_t>(i - 1)], g.perm[static_cast<size_t>(i)]);
    return g;
}

inline GroupElement word_to_element(const GroupWord& w, GroupSignature sig) {
    GroupElement g = GroupElement::identity(sig);
    for (const auto& l : w) {
        switch (l.kind) {
        case GroupLetter::t: g = element_mul(g, generator_t(sig)); break;
        case GroupLetter::t_inv: g = element_mul(g, element_inv(generator_t(sig))); break;
        case GroupLetter::s: g = element_mul(g, generator_s(sig, l.index)); break;
        }
    }
    return g;
}

/// Nested normal form: layers[k-1] = (j_k, alpha_k) with j_k in {0..k-1},
/// alpha_k in E_m; the element is the product of the layer transversals,
/// layer n leftmost.
struct NestedNormalForm {
    std::vector<std::pair<int, long>> layers;
};

/// Letters of the level-k transversal s_j...s_1 t^alpha s_1...s_{k-1}
/// (collapsed to s_{j+1}...s_{k-1} when alpha = 0).
inline GroupWord transversal_word(int k, int j, long alpha) {
    GroupWord w;
    if (alpha == 0) {
        for (int i = j + 1; i <= k - 1; ++i) w.push_back(gl_s(i));
        return w;
    }
    for (int i = j; i >= 1; --i) w.push_back(gl_s(i));
    for (long a = 0; a < (alpha > 0 ? alpha : -alpha); ++a)
        w.push_back(alpha > 0 ? gl_t() : gl_t_inv());
    for (int i = 1; i <= k - 1; ++i) w.push_back(gl_s(i));
    return w;
}

inline GroupWord normal_form_word(const NestedNormalForm& nf) {
    GroupWord w;
    for (int k = static_cast<int>(nf.layers.size()); k >= 1; --k) {
        auto [j, a] = nf.layers[static_cast<size_t>(k - 1)];
        GroupWord part = transversal_word(k, j, a);
        w.insert(w.end(), part.begin(), part.end());
    }
    return w;
}

/// Top-down normal form: the layer-n transversal is read off from where the
/// permutation sends n and the color riding at that position; stripping it
/// reduces to the subgroup G(m,1,n-1).
inline NestedNormalForm normal_form(const GroupElement& g_in) {
    GroupElement g = g_in;
    g.reduce_colors();
    NestedNormalForm nf;
    nf.layers.resize(static_cast<size_t>(g.sig.n));
    for (int k = g.sig.n; k >= 1; --k) {
        int p = g.perm[static_cast<size_t>(k - 1)]; // 0-based position of strand k
        long alpha = g.colors[static_cast<size_t>(p)];
        nf.layers[static_cast<size_t>(k - 1)] = {p, alpha};
        GroupSignature sk{g.sig.m, k};
        GroupElement ell = word_to_element(transversal_word(k, p, alpha), sk);
        GroupElement rest = element_mul(element_inv(ell), g);
        // rest fixes strand k with color 0; restrict to G(m,1,k-1)
        GroupElement h;
        h.sig = {g.sig.m, k - 1};
        h.colors.assign(rest.colors.begin(), rest.colors.end() - 1);
        h.perm.assign(rest.perm.begin(), rest.perm.end() - 1);
        g = h;
    }
    return nf;
}

/// Positive reduced word of Bremke-Malle shape: pi t_{n,a_n}...t_{1,a_1} with
/// t_{k,a} = t^a s_1...s_{k-1}. Finite m only.
inline GroupWord reduced_word(const NestedNormalForm& nf, GroupSignature sig) {
    if (!sig.finite()) throw Error("reduced_word: unsupported for m = infinity");
    std::vector<int> pi; // letters s_i, stored as indices
    std::vector<GroupWord> tparts;
    for (int k = 1; k <= static_cast<int>(nf.layers.size()); ++k) {
        auto [j, a] = nf.layers[static_cast<size_t>(k - 1)];
        if (a != 0) {
            std::vector<int> head;
            for (int i = j; i >= 1; --i) head.push_back(i);
            for (int& idx : pi) ++idx; // shift s_i -> s_{i+1}
            pi.insert(pi.begin(), head.begin(), head.end());
            GroupWord tp;
            for (long c = 0; c < a; ++c) tp.push_back(gl_t());
            for (int i = 1; i <= k - 1; ++i) tp.push_back(gl_s(i));
            tparts.insert(tparts.begin(), std::move(tp));
        } else {
            std::vector<int> head;
            for (int i = j + 1; i <= k - 1; ++i) head.push_back(i);
            pi.insert(pi.begin(), head.begin(), head.end());
        }
    }
    GroupWord w;
    for (int idx : pi) w.push_back(gl_s(idx));
    for (auto& tp : tparts) w.insert(w.end(), tp.begin(), tp.end());
    return w;
}

/// Coset table for the chain pair G(m,1,n) > G(m,1,n-1). Cosets are labelled
/// by (p, c): the position the n-th strand is sent to and the color riding
/// there. The figure is an m-gon of t-edges at p = 1 with an s-tail of length
/// n-1 at every corner.
struct CosetTable {
    GroupSignature sig;
    struct Vertex {
        int p;
        long c;
        GroupWord transversal;
    };
    std::vector<Vertex> vertices;
    std::vector<std::string> generator_names;          // "t", ("t^-1",) "s1".."s_{n-1}"
    std::vector<std::vector<int>> action;              // action[g][v] -> vertex id (-1: outside depth)
    std::map<std::pair<int, long>, int> index;

    int vertex_of(const GroupElement& g) const {
        int p = g.perm[static_cast<size_t>(sig.n - 1)];
        long c = g.colors[static_cast<size_t>(p)];
        auto it = index.find({p + 1, c});
        return it == index.end() ? -1 : it->second;
    }
};

inline CosetTable coxeter_todd(GroupSignature sig, long depth = 0) {
    if (!sig.finite() && depth <= 0)
        throw Error("coxeter_todd: m = infinity needs an enumeration depth");
    CosetTable tab;
    tab.sig = sig;
    auto key_ok = [&](long c) { return sig.finite() || (c >= -depth && c <= depth); };
    auto add_vertex = [&](int p, long c) {
        tab.index[{p, c}] = static_cast<int>(tab.vertices.size());
        GroupWord w;
        if (c == 0) {
            for (int i = p; i <= sig.n - 1; ++i) w.push_back(gl_s(i));
        } else {
            w = transversal_word(sig.n, p - 1, c);
        }
        tab.vertices.push_back({p, c, std::move(w)});
    };
    // Breadth-first from the subgroup coset W = (n, 0), generators in the
    // order t, (t^-1,) s_1..s_{n-1}.
    std::vector<GroupLetter> gens;
    gens.push_back(gl_t());
    tab.generator_names.push_back("t");
    if (!sig.finite()) {
        gens.push_back(gl_t_inv());
        tab.generator_names.push_back("t^-1");
    }
    for (int i = 1; i <= sig.n - 1; ++i) {
        gens.push_back(gl_s(i));
        tab.generator_names.push_back("s" + std::to_string(i));
    }
    auto act = [&](GroupLetter g, std::pair<int, long> key) -> std::pair<int, long> {
        auto [p, c] = key;
        switch (g.kind) {
        case GroupLetter::t: return {p, p == 1 ? (sig.finite() ? (c + 1) % sig.m : c + 1) : c};
        case GroupLetter::t_inv:
            return {p, p == 1 ? (sig.finite() ? ((c - 1) % sig.m + sig.m) % sig.m : c - 1) : c};
        case GroupLetter::s: {
            int np = p;
            if (p == g.index) np = p + 1;
            else if (p == g.index + 1) np = p - 1;
            return {np, c};
        }
        }
        throw Error("unreachable");
    };
    add_vertex(sig.n, 0);
    for (size_t head = 0; head < tab.vertices.size(); ++head) {
        auto key = std::make_pair(tab.vertices[head].p, tab.vertices[head].c);
        for (auto& g : gens) {
            auto nk = act(g, key);
            if (key_ok(nk.second) && !tab.index.count(nk)) add_vertex(nk.first, nk.second);
        }
    }
    tab.action.assign(gens.size(), std::vector<int>(tab.vertices.size(), -1));
    for (size_t v = 0; v < tab.vertices.size(); ++v) {
        auto key = std::make_pair(tab.vertices[v].p, tab.vertices[v].c);
        for (size_t gi = 0; gi < gens.size(); ++gi) {
            auto nk = act(gens[gi], key);
            auto it = tab.index.find(nk);
            tab.action[gi][v] = it == tab.index.end() ? -1 : it->second;
        }
    }
    return tab;
}

/// Exhaustive element list, normal-form enumeration order (finite m).
inline std::vector<GroupElement> all_elements(GroupSignature sig) {
    if (!sig.finite()) throw Error("all_elements: m must be finite");
    std::vector<NestedNormalForm> forms{{}};
    for (int k = 1; k <= sig.n; ++k) {
        std::vector<NestedNormalForm> next;
        for (int j = 0; j < k; ++j)
            for (long a = 0; a < sig.m; ++a)
                for (const auto& f : forms) {
                    NestedNormalForm g = f;
                    g.layers.push_back({j, a});
                    next.push_back(std::move(g));
                }
        forms = std::move(next);
    }
    std::vector<GroupElement> out;
    out.reserve(forms.size());
    for (auto& f : forms) {
        NestedNormalForm nf;
        nf.layers = f.layers; // layers were pushed level-by-level in order 1..n
        out.push_back(word_to_element(normal_form_word(nf), sig));
    }
    return out;
}

} // namespace hecke
