#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "hecke/signature.hpp"

namespace hecke {

/// m-tuple of Young diagrams; components may be empty, total size n.
struct MultiPartition {
    std::vector<std::vector<int>> parts; // parts[k-1] = weakly decreasing rows of diagram k

    int components() const { return static_cast<int>(parts.size()); }

    int size() const {
        int n = 0;
        for (auto& p : parts)
            for (int r : p) n += r;
        return n;
    }

    void validate() const {
        for (auto& p : parts)
            for (size_t i = 0; i < p.size(); ++i) {
                if (p[i] <= 0) throw Error("partition rows must be positive");
                if (i + 1 < p.size() && p[i] < p[i + 1]) throw Error("partition rows must weakly decrease");
            }
    }

    bool operator==(const MultiPartition& o) const { return parts == o.parts; }
    bool operator<(const MultiPartition& o) const { return parts < o.parts; }

    std::string to_string() const {
        std::ostringstream os;
        os << "(";
        for (size_t k = 0; k < parts.size(); ++k) {
            if (k) os << "|";
            if (parts[k].empty()) os << "-";
            for (size_t i = 0; i < parts[k].size(); ++i) os << (i ? "," : "") << parts[k][i];
        }
        os << ")";
        return os.str();
    }
};

/// Node (k, x, y): diagram k, row x, column y, all 1-based.
struct MNode {
    int k, x, y;
    bool operator==(const MNode& o) const { return k == o.k && x == o.x && y == o.y; }
};

inline std::vector<MNode> nodes_of(const MultiPartition& lambda) {
    std::vector<MNode> out;
    for (int k = 1; k <= lambda.components(); ++k) {
        const auto& p = lambda.parts[static_cast<size_t>(k - 1)];
        for (int x = 1; x <= static_cast<int>(p.size()); ++x)
            for (int y = 1; y <= p[static_cast<size_t>(x - 1)]; ++y) out.push_back({k, x, y});
    }
    return out;
}

inline int row_length(const MultiPartition& lambda, int diagram, int x) {
    const auto& p = lambda.parts[static_cast<size_t>(diagram - 1)];
    return x >= 1 && x <= static_cast<int>(p.size()) ? p[static_cast<size_t>(x - 1)] : 0;
}

inline int column_length(const MultiPartition& lambda, int diagram, int y) {
    const auto& p = lambda.parts[static_cast<size_t>(diagram - 1)];
    int c = 0;
    for (int r : p)
        if (r >= y) ++c;
    return c;
}

/// Generalized hook length h^{(j)}(node) = l_{x,j} + c_{y,k} - x - y + 1 for a
/// node in row x, column y of diagram k; j = k recovers the classical hook.
inline int generalized_hook(const MultiPartition& lambda, const MNode& node, int j) {
    return row_length(lambda, j, node.x) + column_length(lambda, node.k, node.y) - node.x - node.y + 1;
}

/// Quantum content c(node) = v_k q^{2(y-x)}.
inline ScalarValue quantum_content(const Signature& sig, const MNode& node) {
    return sig.v(node.k) * sig.q(2 * (node.y - node.x));
}

/// Standard filling: entries 1..n increase along rows and down columns.
struct MTableau {
    MultiPartition shape;
    std::vector<std::vector<std::vector<int>>> entries; // entries[k-1][x-1][y-1]

    int size() const { return shape.size(); }

    int entry(const MNode& node) const {
        return entries[static_cast<size_t>(node.k - 1)][static_cast<size_t>(node.x - 1)]
                      [static_cast<size_t>(node.y - 1)];
    }

    MNode node_of(int i) const {
        for (auto n : nodes_of(shape))
            if (entry(n) == i) return n;
        throw Error("entry not present in tableau");
    }

    /// Quantum contents c_1..c_n in entry order.
    std::vector<ScalarValue> contents(const Signature& sig) const {
        std::vector<ScalarValue> c;
        c.reserve(static_cast<size_t>(size()));
        for (int i = 1; i <= size(); ++i) c.push_back(quantum_content(sig, node_of(i)));
        return c;
    }

    std::string to_string() const {
        std::ostringstream os;
        for (int k = 1; k <= shape.components(); ++k) {
            if (k > 1) os << " | ";
            const auto& d = entries[static_cast<size_t>(k - 1)];
            if (d.empty()) os << "-";
            for (size_t x = 0; x < d.size(); ++x) {
                if (x) os << " / ";
                for (size_t y = 0; y < d[x].size(); ++y) os << (y ? "," : "") << d[x][y];
            }
        }
        return os.str();
    }
};

/// All standard fillings, in the deterministic order produced by placing
/// 1..n into addable positions scanned diagram-major, row-major.
inline std::vector<MTableau> standard_tableaux(const MultiPartition& lambda) {
    lambda.validate();
    const int n = lambda.size();
    MTableau blank;
    blank.shape = lambda;
    for (int k = 1; k <= lambda.components(); ++k) {
        std::vector<std::vector<int>> diagram;
        for (int x = 1; x <= static_cast<int>(lambda.parts[static_cast<size_t>(k - 1)].size()); ++x)
            diagram.emplace_back(static_cast<size_t>(row_length(lambda, k, x)), 0);
        blank.entries.push_back(std::move(diagram));
    }
    std::vector<MTableau> done;
    std::vector<MTableau> frontier{blank};
    for (int i = 1; i <= n; ++i) {
        std::vector<MTableau> next;
        for (auto& t : frontier) {
            for (auto node : nodes_of(lambda)) {
                auto& cell = t.entries[static_cast<size_t>(node.k - 1)][static_cast<size_t>(node.x - 1)]
                                      [static_cast<size_t>(node.y - 1)];
                if (cell != 0) continue;
                bool above = node.x == 1 ||
                             t.entries[static_cast<size_t>(node.k - 1)][static_cast<size_t>(node.x - 2)]
                                      [static_cast<size_t>(node.y - 1)] != 0;
                bool left = node.y == 1 ||
                            t.entries[static_cast<size_t>(node.k - 1)][static_cast<size_t>(node.x - 1)]
                                     [static_cast<size_t>(node.y - 2)] != 0;
                if (!above || !left) continue;
                MTableau filled = t;
                filled.entries[static_cast<size_t>(node.k - 1)][static_cast<size_t>(node.x - 1)]
                              [static_cast<size_t>(node.y - 1)] = i;
                next.push_back(std::move(filled));
            }
        }
        frontier = std::move(next);
    }
    return frontier;
}

/// The fixed representative tableau of a shape: columns of diagram 1 filled
/// top to bottom, left to right, then diagram 2, and so on.
inline MTableau canonical_tableau(const MultiPartition& lambda) {
    lambda.validate();
    MTableau t;
    t.shape = lambda;
    for (int k = 1; k <= lambda.components(); ++k) {
        std::vector<std::vector<int>> diagram;
        for (int x = 1; x <= static_cast<int>(lambda.parts[static_cast<size_t>(k - 1)].size()); ++x)
            diagram.emplace_back(static_cast<size_t>(row_length(lambda, k, x)), 0);
        t.entries.push_back(std::move(diagram));
    }
    int next = 1;
    for (int k = 1; k <= lambda.components(); ++k) {
        int width = row_length(lambda, k, 1);
        for (int y = 1; y <= width; ++y)
            for (int x = 1; x <= column_length(lambda, k, y); ++x)
                t.entries[static_cast<size_t>(k - 1)][static_cast<size_t>(x - 1)][static_cast<size_t>(y - 1)] =
                    next++;
    }
    return t;
}

/// All m-partitions of n, deterministic order.
inline std::vector<MultiPartition> multipartitions(int m, int n) {
    std::vector<std::vector<std::vector<int>>> bysize(static_cast<size_t>(n) + 1);
    // ordinary partitions of each size, lexicographically descending rows
    for (int s = 0; s <= n; ++s) {
        std::vector<std::vector<int>> out;
        std::vector<int> cur;
        auto rec = [&](auto&& self, int rest, int maxrow) -> void {
            if (rest == 0) {
                out.push_back(cur);
                return;
            }
            for (int r = std::min(rest, maxrow); r >= 1; --r) {
                cur.push_back(r);
                self(self, rest - r, r);
                cur.pop_back();
            }
        };
        rec(rec, s, s);
        if (s == 0) out.push_back({});
        bysize[static_cast<size_t>(s)] = std::move(out);
    }
    std::vector<MultiPartition> result;
    std::vector<std::vector<int>> chosen;
    auto rec = [&](auto&& self, int k, int rest) -> void {
        if (k == m) {
            if (rest == 0) {
                MultiPartition mp;
                mp.parts = chosen;
                result.push_back(std::move(mp));
            }
            return;
        }
        for (int s = rest; s >= 0; --s)
            for (auto& p : bysize[static_cast<size_t>(s)]) {
                chosen.push_back(p);
                self(self, k + 1, rest - s);
                chosen.pop_back();
            }
    };
    rec(rec, 0, n);
    std::sort(result.begin(), result.end());
    return result;
}

/// The node-product normalization factor of the fusion formula, computed from
/// both closed forms (full product over k, and the q-integer hook form) and
/// asserted equal.
inline ScalarValue f_lambda(const Signature& sig, const MultiPartition& lambda) {
    if (!sig.finite()) throw Error("f_lambda: m must be finite");
    if (lambda.components() != sig.m()) throw Error("multipartition arity must equal m");
    lambda.validate();
    const int n = lambda.size();
    auto q_int = [&](int j) {
        ScalarValue s = sig.zero();
        for (int e = j - 1; e >= -j + 1; e -= 2) s += sig.q(e);
        return s;
    };
    ScalarValue full = (sig.q(-1) - sig.q()).pow(n);
    ScalarValue hookform = sig.one();
    for (auto& node : nodes_of(lambda)) {
        int cc = node.y - node.x;
        ScalarValue term = quantum_content(sig, node);
        for (int k = 1; k <= sig.m(); ++k) {
            int h = generalized_hook(lambda, node, k);
            ScalarValue den = sig.v(node.k) * sig.q(-h) - sig.v(k) * sig.q(h);
            term *= sig.q(-2 * cc... /*placeholder*/);
        }
        (void)term;
    }
    // both forms computed below term by term
    full = (sig.q(-1) - sig.q()).pow(n);
    for (auto& node : nodes_of(lambda)) {
        int cc = node.y - node.x;
        ScalarValue prod = quantum_content(sig, node);
        for (int k = 1; k <= sig.m(); ++k) {
            int h = generalized_hook(lambda, node, k);
            prod *= sig.q(-cc) / (sig.v(node.k) * sig.q(-h) - sig.v(k) * sig.q(h));
        }
        full *= prod;
        ScalarValue alt = sig.q(cc) / q_int(generalized_hook(lambda, node, node.k));
        for (int k = 1; k <= sig.m(); ++k) {
            if (k == node.k) continue;
            int h = generalized_hook(lambda, node, k);
            alt *= sig.q(-cc) / (sig.v(node.k) * sig.q(-h) - sig.v(k) * sig.q(h));
        }
        hookform *= alt;
    }
    if (!full.eq(hookform)) throw Error("internal: the two node-product forms disagree");
    return full.normalized();
}

} // namespace hecke
