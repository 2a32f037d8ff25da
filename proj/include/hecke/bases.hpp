#pragma once

#include <map>
#include <vector>

#include "hecke/element.hpp"

namespace hecke {

/// Exact Gaussian elimination; throws on a singular system.
inline std::vector<ScalarValue> solve_linear(std::vector<std::vector<ScalarValue>> A,
                                             std::vector<ScalarValue> b) {
    const size_t n = A.size();
    if (n == 0) return {};
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && A[piv][col].is_zero()) ++piv;
        if (piv == n) throw Error("singular change-of-basis system");
        std::swap(A[piv], A[col]);
        std::swap(b[piv], b[col]);
        ScalarValue inv = A[col][col].inverse();
        for (size_t j = col; j < n; ++j) A[col][j] = (A[col][j] * inv).normalized();
        b[col] = (b[col] * inv).normalized();
        for (size_t r = 0; r < n; ++r) {
            if (r == col || A[r][col].is_zero()) continue;
            ScalarValue f = A[r][col];
            for (size_t j = col; j < n; ++j) A[r][j] = (A[r][j] - f * A[col][j]).normalized();
            b[r] = (b[r] - f * b[col]).normalized();
        }
    }
    return b;
}

/// Letters of the level-k factor of the positive-power basis:
/// sigma_{j+1}..sigma_{k-1} when a = 0, sigma_j..sigma_1 tau^a sigma_1..sigma_{k-1} otherwise.
inline Word bplus_layer_letters(int k, int j, long a) {
    Word w;
    if (a == 0) {
        for (int i = j + 1; i <= k - 1; ++i) w.push_back(lt_sigma(i));
        return w;
    }
    for (int i = j; i >= 1; --i) w.push_back(lt_sigma(i));
    append_tau_power(w, a);
    for (int i = 1; i <= k - 1; ++i) w.push_back(lt_sigma(i));
    return w;
}

/// Normal form of the positive-power basis element labelled by the same
/// (j_k, a_k) index tuples as the inductive basis.
inline HElement bplus_element(const Signature& sig, const BasisWord& label) {
    Word w;
    for (int k = label.level(); k >= 1; --k) {
        const auto& l = label.layers[static_cast<size_t>(k - 1)];
        Word part = bplus_layer_letters(k, l.j, l.a);
        w.insert(w.end(), part.begin(), part.end());
    }
    return from_word(w, sig, label.level());
}

/// Coordinates of x over the positive-power basis, solved through the
/// (unitriangular) change of basis at fixed (m, n).
inline std::map<BasisWord, ScalarValue> to_bplus_basis(const HElement& x) {
    const Signature& sig = x.sig();
    if (!sig.finite()) throw Error("to_bplus_basis: m must be finite");
    auto labels = basis_enumerate(sig, x.level());
    const size_t N = labels.size();
    std::map<BasisWord, size_t> row_of;
    for (size_t i = 0; i < N; ++i) row_of.emplace(labels[i], i);

    std::vector<std::vector<ScalarValue>> A(N, std::vector<ScalarValue>(N, sig.zero()));
    for (size_t cidx = 0; cidx < N; ++cidx) {
        HElement e = bplus_element(sig, labels[cidx]);
        for (auto& [w, c] : e.terms()) A[row_of.at(w)][cidx] = c;
    }
    std::vector<ScalarValue> rhs(N, sig.zero());
    for (auto& [w, c] : x.terms()) rhs[row_of.at(w)] = c;

    auto coords = solve_linear(std::move(A), std::move(rhs));
    std::map<BasisWord, ScalarValue> out;
    for (size_t i = 0; i < N; ++i)
        if (!coords[i].is_zero()) out.emplace(labels[i], coords[i]);
    return out;
}

/// One word of the quasi-symmetric basis attached to gamma: per layer the
/// exponent-a factor is recentred to tau^a - gamma_a/gamma_0 (a != 0). Each
/// word expands as a signed sum of plain basis words, no rewriting needed.
struct BGammaBasis {
    std::vector<BasisWord> labels;       // same index tuples as the inductive basis
    std::vector<HElement> elements;      // expanded words
    std::vector<ScalarValue> l_values;   // evaluation vector of L^gamma
};

} // namespace hecke
