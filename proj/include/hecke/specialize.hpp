#pragma once

#include <map>

#include "hecke/element.hpp"

namespace hecke {

/// Formal sum over group elements with cyclotomic coefficients.
using GroupAlgebraElement = std::map<GroupElement, CycValue>;

inline void ga_add_term(GroupAlgebraElement& x, const GroupElement& g, const CycValue& c) {
    if (c.is_zero()) return;
    auto it = x.find(g);
    if (it == x.end()) {
        x.emplace(g, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) x.erase(it);
    }
}

inline GroupAlgebraElement ga_mul(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    GroupAlgebraElement r;
    for (auto& [ga, ca] : a)
        for (auto& [gb, cb] : b) ga_add_term(r, element_mul(ga, gb), ca * cb);
    return r;
}

/// Specialization q -> sign, v_j -> zeta^{j-1}: basis words map to the group
/// normal forms with the same layers, coefficients to Q[zeta]/Phi_m.
inline GroupAlgebraElement specialize_to_group(const HElement& x, int sign) {
    const Signature& sig = x.sig();
    if (!sig.finite()) throw Error("specialize_to_group: m must be finite");
    GroupSignature gs{sig.m(), x.level()};
    GroupAlgebraElement out;
    for (auto& [w, c] : x.terms()) {
        NestedNormalForm nf;
        for (auto& l : w.layers) nf.layers.emplace_back(l.j, l.a);
        GroupElement g = word_to_element(normal_form_word(nf), gs);
        ga_add_term(out, g, sig.specialize(c, sign));
    }
    return out;
}

} // namespace hecke
