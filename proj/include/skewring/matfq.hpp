// matfq.hpp
//
// Exact dense linear algebra over F_q: products, Gauss-Jordan inverses,
// characteristic polynomials (Hessenberg reduction), reduced row echelon
// kernels, and eigendecomposition over the base field. Matrices are square,
// row-major, and sized for desk-scale work (n <= 8 expected).

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "skewring/error.hpp"
#include "skewring/gf.hpp"

namespace skewring {

class VecFq {
public:
    VecFq(FieldPtr ctx, std::size_t n) : ctx_(std::move(ctx)), v_(n, 0) {}
    VecFq(FieldPtr ctx, std::vector<Fq> entries)
        : ctx_(std::move(ctx)), v_(std::move(entries)) {}

    std::size_t size() const noexcept { return v_.size(); }
    Fq operator[](std::size_t i) const { return v_[i]; }
    Fq& operator[](std::size_t i) { return v_[i]; }
    const std::vector<Fq>& entries() const noexcept { return v_; }
    const FieldPtr& ctx() const noexcept { return ctx_; }

    bool operator==(const VecFq& o) const { return *ctx_ == *o.ctx_ && v_ == o.v_; }
    bool operator!=(const VecFq& o) const { return !(*this == o); }

    bool is_zero() const {
        for (Fq x : v_)
            if (x != 0) return false;
        return true;
    }

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < v_.size(); ++i)
            s += (i ? "," : "") + std::to_string(v_[i]);
        return s + ")";
    }

private:
    FieldPtr ctx_;
    std::vector<Fq> v_;
};

class MatFq {
public:
    MatFq(FieldPtr ctx, std::size_t n) : ctx_(std::move(ctx)), n_(n), a_(n * n, 0) {}
    MatFq(FieldPtr ctx, std::size_t n, std::vector<Fq> rowmajor)
        : ctx_(std::move(ctx)), n_(n), a_(std::move(rowmajor)) {
        if (a_.size() != n_ * n_)
            throw skew_error(errc::dimension_mismatch, "matrix entry count");
    }

    static MatFq identity(FieldPtr ctx, std::size_t n) {
        MatFq I(std::move(ctx), n);
        for (std::size_t i = 0; i < n; ++i) I.at(i, i) = 1;
        return I;
    }

    static MatFq diag(const VecFq& d) {
        MatFq D(d.ctx(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i) D.at(i, i) = d[i];
        return D;
    }

    std::size_t n() const noexcept { return n_; }
    const FieldPtr& ctx() const noexcept { return ctx_; }
    Fq at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
    Fq& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }

    bool operator==(const MatFq& o) const {
        return n_ == o.n_ && *ctx_ == *o.ctx_ && a_ == o.a_;
    }
    bool operator!=(const MatFq& o) const { return !(*this == o); }

    bool is_identity() const {
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                if (at(i, j) != (i == j ? 1u : 0u)) return false;
        return true;
    }

    std::string str() const {
        std::string s = "[";
        for (std::size_t i = 0; i < n_; ++i) {
            s += i ? ";" : "";
            for (std::size_t j = 0; j < n_; ++j) s += (j ? "," : "") + std::to_string(at(i, j));
        }
        return s + "]";
    }

private:
    FieldPtr ctx_;
    std::size_t n_;
    std::vector<Fq> a_;
};

namespace detail {
inline void require_same(const MatFq& A, const MatFq& B) {
    if (*A.ctx() != *B.ctx())
        throw skew_error(errc::field_mismatch, "matrices over different fields");
    if (A.n() != B.n())
        throw skew_error(errc::dimension_mismatch, "matrix dimensions differ");
}
}  // namespace detail

inline MatFq mat_add(const MatFq& A, const MatFq& B) {
    detail::require_same(A, B);
    const auto& F = *A.ctx();
    MatFq C(A.ctx(), A.n());
    for (std::size_t i = 0; i < A.n(); ++i)
        for (std::size_t j = 0; j < A.n(); ++j) C.at(i, j) = F.add(A.at(i, j), B.at(i, j));
    return C;
}

inline MatFq mat_sub(const MatFq& A, const MatFq& B) {
    detail::require_same(A, B);
    const auto& F = *A.ctx();
    MatFq C(A.ctx(), A.n());
    for (std::size_t i = 0; i < A.n(); ++i)
        for (std::size_t j = 0; j < A.n(); ++j) C.at(i, j) = F.sub(A.at(i, j), B.at(i, j));
    return C;
}

inline MatFq mat_mul(const MatFq& A, const MatFq& B) {
    detail::require_same(A, B);
    const auto& F = *A.ctx();
    MatFq C(A.ctx(), A.n());
    for (std::size_t i = 0; i < A.n(); ++i)
        for (std::size_t k = 0; k < A.n(); ++k) {
            const Fq aik = A.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < A.n(); ++j)
                C.at(i, j) = F.add(C.at(i, j), F.mul(aik, B.at(k, j)));
        }
    return C;
}

inline VecFq mat_vec(const MatFq& A, const VecFq& v) {
    if (*A.ctx() != *v.ctx())
        throw skew_error(errc::field_mismatch, "matrix and vector over different fields");
    if (A.n() != v.size())
        throw skew_error(errc::dimension_mismatch, "matrix/vector dimensions differ");
    const auto& F = *A.ctx();
    VecFq w(A.ctx(), A.n());
    for (std::size_t i = 0; i < A.n(); ++i) {
        Fq s = 0;
        for (std::size_t j = 0; j < A.n(); ++j) s = F.add(s, F.mul(A.at(i, j), v[j]));
        w[i] = s;
    }
    return w;
}

inline MatFq mat_pow(const MatFq& A, std::uint64_t k) {
    MatFq r = MatFq::identity(A.ctx(), A.n());
    MatFq base = A;
    while (k) {
        if (k & 1) r = mat_mul(r, base);
        k >>= 1;
        if (k) base = mat_mul(base, base);
    }
    return r;
}

inline VecFq vec_add(const VecFq& a, const VecFq& b) {
    if (*a.ctx() != *b.ctx() || a.size() != b.size())
        throw skew_error(errc::dimension_mismatch, "vector dimensions differ");
    const auto& F = *a.ctx();
    VecFq c(a.ctx(), a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = F.add(a[i], b[i]);
    return c;
}

inline VecFq vec_sub(const VecFq& a, const VecFq& b) {
    if (*a.ctx() != *b.ctx() || a.size() != b.size())
        throw skew_error(errc::dimension_mismatch, "vector dimensions differ");
    const auto& F = *a.ctx();
    VecFq c(a.ctx(), a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = F.sub(a[i], b[i]);
    return c;
}

inline VecFq vec_scale(const VecFq& a, Fq s) {
    const auto& F = *a.ctx();
    VecFq c(a.ctx(), a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = F.mul(a[i], s);
    return c;
}

inline VecFq vec_neg(const VecFq& a) {
    const auto& F = *a.ctx();
    VecFq c(a.ctx(), a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = F.neg(a[i]);
    return c;
}

/// Gauss-Jordan inverse. Throws Singular.
inline MatFq mat_inv(const MatFq& A) {
    const auto& F = *A.ctx();
    const std::size_t n = A.n();
    MatFq L = A, R = MatFq::identity(A.ctx(), n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && L.at(piv, col) == 0) ++piv;
        if (piv == n) throw skew_error(errc::singular, "matrix is singular");
        if (piv != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(L.at(piv, j), L.at(col, j));
                std::swap(R.at(piv, j), R.at(col, j));
            }
        const Fq s = F.inv(L.at(col, col));
        for (std::size_t j = 0; j < n; ++j) {
            L.at(col, j) = F.mul(L.at(col, j), s);
            R.at(col, j) = F.mul(R.at(col, j), s);
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col) continue;
            const Fq f = L.at(i, col);
            if (f == 0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                L.at(i, j) = F.sub(L.at(i, j), F.mul(f, L.at(col, j)));
                R.at(i, j) = F.sub(R.at(i, j), F.mul(f, R.at(col, j)));
            }
        }
    }
    return R;
}

/// det(tI - A) as a monic coefficient vector, low to high, length n+1.
/// Hessenberg reduction followed by the leading-minor recurrence.
inline std::vector<Fq> char_poly(const MatFq& A) {
    const auto& F = *A.ctx();
    const std::size_t n = A.n();
    MatFq H = A;
    for (std::size_t k = 0; k + 2 < n; ++k) {
        std::size_t piv = k + 1;
        while (piv < n && H.at(piv, k) == 0) ++piv;
        if (piv == n) continue;
        if (piv != k + 1) {  // similarity swap of row and column piv <-> k+1
            for (std::size_t j = 0; j < n; ++j) std::swap(H.at(piv, j), H.at(k + 1, j));
            for (std::size_t i = 0; i < n; ++i) std::swap(H.at(i, piv), H.at(i, k + 1));
        }
        const Fq pinv = F.inv(H.at(k + 1, k));
        for (std::size_t i = k + 2; i < n; ++i) {
            const Fq f = F.mul(H.at(i, k), pinv);
            if (f == 0) continue;
            for (std::size_t j = 0; j < n; ++j)
                H.at(i, j) = F.sub(H.at(i, j), F.mul(f, H.at(k + 1, j)));
            for (std::size_t i2 = 0; i2 < n; ++i2)
                H.at(i2, k + 1) = F.add(H.at(i2, k + 1), F.mul(f, H.at(i2, i)));
        }
    }
    // p_k(t) = det(tI_k - H_k) over leading principal minors.
    std::vector<std::vector<Fq>> p(n + 1);
    p[0] = {1};
    for (std::size_t k = 1; k <= n; ++k) {
        const Fq d = H.at(k - 1, k - 1);
        std::vector<Fq> pk(k + 1, 0);
        for (std::size_t t = 0; t < k; ++t) {  // (t - d) * p_{k-1}
            pk[t + 1] = F.add(pk[t + 1], p[k - 1][t]);
            pk[t] = F.sub(pk[t], F.mul(d, p[k - 1][t]));
        }
        Fq w = 1;  // running subdiagonal product h_{i+1,i} ... h_{k,k-1}
        for (std::size_t i = k - 1; i >= 1; --i) {
            w = F.mul(w, H.at(i, i - 1));
            if (w == 0) break;
            const Fq hik = H.at(i - 1, k - 1);
            if (hik == 0) continue;
            const Fq coef = F.mul(hik, w);
            for (std::size_t t = 0; t < i; ++t)
                pk[t] = F.sub(pk[t], F.mul(coef, p[i - 1][t]));
        }
        p[k] = std::move(pk);
    }
    return p[n];
}

/// Kernel basis in reduced row-echelon convention: pivots normalized to 1,
/// one basis vector per free column, ordered by free column index. The
/// convention makes the basis unique and reproducible.
inline std::vector<VecFq> kernel_basis(const MatFq& A) {
    const auto& F = *A.ctx();
    const std::size_t n = A.n();
    MatFq R = A;
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < n; ++col) {
        std::size_t piv = row;
        while (piv < n && R.at(piv, col) == 0) ++piv;
        if (piv == n) continue;
        if (piv != row)
            for (std::size_t j = 0; j < n; ++j) std::swap(R.at(piv, j), R.at(row, j));
        const Fq s = F.inv(R.at(row, col));
        for (std::size_t j = 0; j < n; ++j) R.at(row, j) = F.mul(R.at(row, j), s);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == row) continue;
            const Fq f = R.at(i, col);
            if (f == 0) continue;
            for (std::size_t j = 0; j < n; ++j)
                R.at(i, j) = F.sub(R.at(i, j), F.mul(f, R.at(row, j)));
        }
        pivot_col.push_back(col);
        ++row;
    }
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;
    std::vector<VecFq> basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        VecFq v(A.ctx(), n);
        v[free] = 1;
        for (std::size_t r = 0; r < pivot_col.size(); ++r)
            v[pivot_col[r]] = F.neg(R.at(r, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

struct EigenDecomposition {
    MatFq basis;        // columns are eigenvectors
    VecFq eigenvalues;  // ascending encoding, repeated by multiplicity
};

/// Diagonalizes S over the base field: S = basis * diag(eigenvalues) * basis^{-1}.
/// Roots of the characteristic polynomial are found by scanning all of F_q.
/// Throws EigenvalueOutsideField when the algebraic multiplicities of the
/// roots found in F_q do not sum to n, NotDiagonalizable when the geometric
/// multiplicities fall short.
inline EigenDecomposition eigen_diagonalize(const MatFq& S) {
    const auto& F = *S.ctx();
    const std::size_t n = S.n();
    std::vector<Fq> cp = char_poly(S);

    auto eval_poly = [&](const std::vector<Fq>& f, Fq x) {
        Fq acc = 0;
        for (std::size_t i = f.size(); i-- > 0;) acc = F.add(F.mul(acc, x), f[i]);
        return acc;
    };
    auto divide_root = [&](std::vector<Fq>& f, Fq r) {  // f /= (t - r), exact
        std::vector<Fq> g(f.size() - 1, 0);
        Fq carry = f.back();
        for (std::size_t i = f.size() - 1; i-- > 0;) {
            g[i] = carry;
            carry = F.add(f[i], F.mul(r, carry));
        }
        f = std::move(g);
    };

    std::vector<std::pair<Fq, std::size_t>> roots;  // (eigenvalue, algebraic mult)
    std::vector<Fq> rem = cp;
    for (Fq a = 0; a < F.q() && rem.size() > 1; ++a) {
        std::size_t mult = 0;
        while (rem.size() > 1 && eval_poly(rem, a) == 0) {
            divide_root(rem, a);
            ++mult;
        }
        if (mult > 0) roots.emplace_back(a, mult);
    }
    if (rem.size() > 1)
        throw skew_error(errc::eigenvalue_outside_field,
                         "characteristic polynomial has roots outside F_q");

    MatFq A(S.ctx(), n);
    VecFq d(S.ctx(), n);
    std::size_t col = 0;
    for (auto [lambda, alg] : roots) {
        MatFq shifted = S;
        for (std::size_t i = 0; i < n; ++i)
            shifted.at(i, i) = F.sub(shifted.at(i, i), lambda);
        std::vector<VecFq> kb = kernel_basis(shifted);
        if (kb.size() < alg)
            throw skew_error(errc::not_diagonalizable,
                             "geometric multiplicity below algebraic multiplicity",
                             {{"eigenvalue", lambda}});
        for (const VecFq& v : kb) {
            for (std::size_t i = 0; i < n; ++i) A.at(i, col) = v[i];
            d[col] = lambda;
            ++col;
        }
    }
    if (col != n)
        throw skew_error(errc::not_diagonalizable, "eigenvectors do not span");
    // Exact reconstruction check: S * A == A * diag(d).
    if (mat_mul(S, A) != mat_mul(A, MatFq::diag(d)))
        throw skew_error(errc::verification_failed, "eigendecomposition reconstruction");
    return {std::move(A), std::move(d)};
}

}  // namespace skewring
