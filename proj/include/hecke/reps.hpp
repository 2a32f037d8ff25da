#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hecke/element.hpp"

namespace hecke {

/// Dense matrix over the scalar field.
class Matrix {
public:
    Matrix(TablePtr table, int rows, int cols)
        : table_(std::move(table)), rows_(rows), cols_(cols),
          a_(static_cast<size_t>(rows) * static_cast<size_t>(cols), ScalarValue(table_)) {}

    static Matrix identity(TablePtr table, int n) {
        Matrix m(std::move(table), n, n);
        ScalarValue one = ScalarValue::constant(m.table_, 1);
        for (int i = 0; i < n; ++i) m.at(i, i) = one;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const TablePtr& table() const { return table_; }

    ScalarValue& at(int r, int c) { return a_[static_cast<size_t>(r) * static_cast<size_t>(cols_) + static_cast<size_t>(c)]; }
    const ScalarValue& at(int r, int c) const {
        return a_[static_cast<size_t>(r) * static_cast<size_t>(cols_) + static_cast<size_t>(c)];
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw Error("matrix shape mismatch");
        Matrix r(table_, rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const ScalarValue& x = at(i, k);
                if (x.is_zero()) continue;
                for (int j = 0; j < o.cols_; ++j) {
                    const ScalarValue& y = o.at(k, j);
                    if (y.is_zero()) continue;
                    r.at(i, j) += x * y;
                }
            }
        return r;
    }
    Matrix operator+(const Matrix& o) const {
        require_same_shape(o);
        Matrix r = *this;
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
        return r;
    }
    Matrix operator-(const Matrix& o) const {
        require_same_shape(o);
        Matrix r = *this;
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
        return r;
    }
    Matrix scaled(const ScalarValue& c) const {
        Matrix r = *this;
        for (auto& x : r.a_) x *= c;
        return r;
    }
    bool is_zero() const {
        for (auto& x : a_)
            if (!x.is_zero()) return false;
        return true;
    }
    bool eq(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) return false;
        for (size_t i = 0; i < a_.size(); ++i)
            if (!a_[i].eq(o.a_[i])) return false;
        return true;
    }
    bool operator==(const Matrix& o) const { return eq(o); }

    /// Kronecker product, left factor major.
    Matrix kron(const Matrix& o) const {
        Matrix r(table_, rows_ * o.rows_, cols_ * o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) {
                const ScalarValue& x = at(i, j);
                if (x.is_zero()) continue;
                for (int p = 0; p < o.rows_; ++p)
                    for (int q = 0; q < o.cols_; ++q)
                        r.at(i * o.rows_ + p, j * o.cols_ + q) = x * o.at(p, q);
            }
        return r;
    }

    ScalarValue trace() const {
        ScalarValue t(table_);
        for (int i = 0; i < rows_ && i < cols_; ++i) t += at(i, i);
        return t;
    }

private:
    void require_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix shape mismatch");
    }
    TablePtr table_;
    int rows_, cols_;
    std::vector<ScalarValue> a_;
};

/// Explicit matrices for tau and sigma_1..sigma_{n-1} over the scalar field.
struct Representation {
    Signature sig;
    int n = 0;
    int dim = 0;
    std::vector<Matrix> sigma; // sigma[i-1] is the matrix of sigma_i
    std::optional<Matrix> tau; // absent only at n = 0

    const Matrix& sigma_matrix(int i) const {
        if (i < 1 || i > static_cast<int>(sigma.size())) throw Error("sigma index out of range");
        return sigma[static_cast<size_t>(i - 1)];
    }
    Matrix sigma_inverse(int i) const {
        Matrix m = sigma_matrix(i);
        Matrix id = Matrix::identity(m.table(), m.rows());
        return m - id.scaled(sig.delta());
    }
};

inline Representation trivial_rep(const Signature& sig) {
    Representation r;
    r.sig = sig;
    r.n = 0;
    r.dim = 1;
    return r;
}

/// One-dimensional module: sigma_i -> q, tau -> v_e.
inline Representation one_dim_rep(const Signature& sig, int n, int e) {
    if (!sig.finite()) throw Error("one_dim_rep: m must be finite");
    if (e < 1 || e > sig.m()) throw Error("character index e out of range");
    Representation r;
    r.sig = sig;
    r.n = n;
    r.dim = 1;
    Matrix tq(sig.table(), 1, 1), tv(sig.table(), 1, 1);
    tq.at(0, 0) = sig.q();
    tv.at(0, 0) = sig.v(e);
    for (int i = 1; i <= n - 1; ++i) r.sigma.push_back(tq);
    r.tau = tv;
    return r;
}

/// Companion matrix of the characteristic polynomial: multiplication by z on
/// the monomial basis 1, z, ..., z^{m-1}.
inline Matrix companion_matrix(const Signature& sig) {
    int m = sig.m();
    auto a = sig.char_coeffs();
    Matrix z(sig.table(), m, m);
    for (int r = 0; r + 1 < m; ++r) z.at(r + 1, r) = sig.one();
    for (int s = 0; s < m; ++s) z.at(s, m - 1) = -a[static_cast<size_t>(s)];
    return z;
}

/// The induction functor on matrices: dim d -> n * m * d with flat index
/// (j, e, u) = j*(m*d) + e*d + u (u fastest).
inline Representation induce(const Representation& rep) {
    const Signature& sig = rep.sig;
    if (!sig.finite())
        throw Error("induce: unsupported for m = infinity (exercised through the rewriting core)");
    const int m = sig.m();
    const int n = rep.n + 1;
    const int d = rep.dim;
    const int dim = n * m * d;
    const int blk = m * d;
    const TablePtr& tab = sig.table();

    Representation out;
    out.sig = sig;
    out.n = n;
    out.dim = dim;

    Matrix id_md = Matrix::identity(tab, blk);
    Matrix id_m = Matrix::identity(tab, m);
    Matrix id_d = Matrix::identity(tab, d);
    ScalarValue delta = sig.delta();

    auto set_block = [&](Matrix& M, int bi, int bj, const Matrix& B) {
        for (int r = 0; r < blk; ++r)
            for (int c = 0; c < blk; ++c) {
                const ScalarValue& x = B.at(r, c);
                if (!x.is_zero()) M.at(bi * blk + r, bj * blk + c) = x;
            }
    };

    for (int i = 1; i <= n - 1; ++i) {
        Matrix F(tab, dim, dim);
        for (int j = 0; j <= i - 2; ++j) set_block(F, j, j, id_m.kron(rep.sigma_matrix(i - 1)));
        set_block(F, i - 1, i - 1, id_md.scaled(delta));
        set_block(F, i - 1, i, id_md);
        set_block(F, i, i - 1, id_md);
        for (int j = i + 1; j <= n - 1; ++j) set_block(F, j, j, id_m.kron(rep.sigma_matrix(i)));
        out.sigma.push_back(std::move(F));
    }

    Matrix zhat = companion_matrix(sig).kron(id_d);
    Matrix F(tab, dim, dim);
    set_block(F, 0, 0, zhat);
    if (n > 1) {
        // mu(phi (x) u) = 1 (x) phi(tau) u on E_m (x) M_{n-1}
        Matrix mu(tab, blk, blk);
        Matrix tau_pow = id_d;
        for (int r = 0; r < m; ++r) {
            for (int p = 0; p < d; ++p)
                for (int q = 0; q < d; ++q) {
                    const ScalarValue& x = tau_pow.at(p, q);
                    if (!x.is_zero()) mu.at(p, r * d + q) = x;
                }
            if (r + 1 < m) tau_pow = tau_pow * (*rep.tau);
        }
        Matrix beta = Matrix::identity(tab, d);
        for (int j = 1; j <= n - 1; ++j) {
            if (j >= 2) beta = rep.sigma_inverse(j - 1) * beta;
            set_block(F, 0, j, zhat.scaled(delta) * id_m.kron(beta) * (mu - id_md));
            set_block(F, j, j, id_m.kron(*rep.tau));
        }
    }
    out.tau = std::move(F);
    return out;
}

/// The Burau-type module of dimension n*m: sigma_i act by the q-specialized
/// block matrices, tau by the companion block with the evaluation map at v_e.
inline Representation burau(const Signature& sig, int n, int e) {
    if (!sig.finite()) throw Error("burau: m must be finite");
    if (e < 1 || e > sig.m()) throw Error("character index e out of range");
    const int m = sig.m();
    const int dim = n * m;
    const TablePtr& tab = sig.table();
    Representation out;
    out.sig = sig;
    out.n = n;
    out.dim = dim;
    Matrix id_m = Matrix::identity(tab, m);
    ScalarValue delta = sig.delta();

    auto set_block = [&](Matrix& M, int bi, int bj, const Matrix& B) {
        for (int r = 0; r < m; ++r)
            for (int c = 0; c < m; ++c) {
                const ScalarValue& x = B.at(r, c);
                if (!x.is_zero()) M.at(bi * m + r, bj * m + c) = x;
            }
    };

    for (int i = 1; i <= n - 1; ++i) {
        Matrix F(tab, dim, dim);
        for (int j = 0; j <= i - 2; ++j) set_block(F, j, j, id_m.scaled(sig.q()));
        set_block(F, i - 1, i - 1, id_m.scaled(delta));
        set_block(F, i - 1, i, id_m);
        set_block(F, i, i - 1, id_m);
        for (int j = i + 1; j <= n - 1; ++j) set_block(F, j, j, id_m.scaled(sig.q()));
        out.sigma.push_back(std::move(F));
    }

    Matrix zhat = companion_matrix(sig);
    Matrix mu_e(tab, m, m); // phi -> phi(v_e) * 1
    for (int r = 0; r < m; ++r) mu_e.at(0, r) = sig.v(e).pow(r);
    Matrix F(tab, dim, dim);
    set_block(F, 0, 0, zhat);
    for (int j = 1; j <= n - 1; ++j) {
        set_block(F, 0, j, zhat.scaled(delta * sig.q().pow(-(j - 1))) * (mu_e - id_m));
        set_block(F, j, j, id_m.scaled(sig.v(e)));
    }
    out.tau = std::move(F);
    return out;
}

/// n-fold induction of the trivial H(m,1,0)-module: the left regular module,
/// whose flat index order matches basis_enumerate.
inline Representation regular_rep(const Signature& sig, int n) {
    Representation r = trivial_rep(sig);
    for (int k = 0; k < n; ++k) r = induce(r);
    return r;
}

/// Matrix of left multiplication by one generator on the inductive basis.
inline Matrix left_mul_matrix(const Signature& sig, int n, Letter g) {
    auto words = basis_enumerate(sig, n);
    std::map<BasisWord, int> row_of;
    for (size_t i = 0; i < words.size(); ++i) row_of.emplace(words[i], static_cast<int>(i));
    Matrix M(sig.table(), static_cast<int>(words.size()), static_cast<int>(words.size()));
    for (size_t c = 0; c < words.size(); ++c) {
        HElement col = left_mul_letter(g, HElement::from_basis_word(sig, words[c], sig.one()));
        for (auto& [w, coeff] : col.terms()) M.at(row_of.at(w), static_cast<int>(c)) = coeff;
    }
    return M;
}

struct RelationReport {
    struct Item {
        std::string name;
        bool pass;
    };
    std::vector<Item> items;
    bool all_pass() const {
        for (auto& i : items)
            if (!i.pass) return false;
        return true;
    }
    const Item* first_failure() const {
        for (auto& i : items)
            if (!i.pass) return &i;
        return nullptr;
    }
};

/// Evaluates each defining relation as a matrix identity.
inline RelationReport check_relations(const Representation& rep) {
    RelationReport rpt;
    const Signature& sig = rep.sig;
    const int n = rep.n;
    Matrix id = Matrix::identity(sig.table(), rep.dim);
    auto add = [&](std::string name, bool ok) { rpt.items.push_back({std::move(name), ok}); };

    for (int i = 1; i + 1 <= n - 1; ++i) {
        const Matrix& a = rep.sigma_matrix(i);
        const Matrix& b = rep.sigma_matrix(i + 1);
        add("braid sigma" + std::to_string(i) + " sigma" + std::to_string(i + 1),
            (a * b * a).eq(b * a * b));
    }
    for (int i = 1; i <= n - 1; ++i)
        for (int j = i + 2; j <= n - 1; ++j)
            add("commuting sigma" + std::to_string(i) + " sigma" + std::to_string(j),
                (rep.sigma_matrix(i) * rep.sigma_matrix(j)).eq(rep.sigma_matrix(j) * rep.sigma_matrix(i)));
    for (int i = 1; i <= n - 1; ++i) {
        const Matrix& s = rep.sigma_matrix(i);
        add("quadratic sigma" + std::to_string(i), (s * s).eq(s.scaled(sig.delta()) + id));
    }
    if (n >= 1 && rep.tau) {
        const Matrix& t = *rep.tau;
        if (n >= 2) {
            const Matrix& s1 = rep.sigma_matrix(1);
            add("mixed braid tau sigma1 tau sigma1", (t * s1 * t * s1).eq(s1 * t * s1 * t));
        }
        for (int i = 2; i <= n - 1; ++i)
            add("commuting tau sigma" + std::to_string(i),
                (t * rep.sigma_matrix(i)).eq(rep.sigma_matrix(i) * t));
        if (sig.finite()) {
            Matrix prod = id;
            for (int j = 1; j <= sig.m(); ++j) prod = prod * (t - id.scaled(sig.v(j)));
            add("cyclotomic (tau - v1)..(tau - vm)", prod.is_zero());
        }
    }
    return rpt;
}

} // namespace hecke
