// morphism.hpp
//
// Ring morphisms sigma: F_q -> F_q^{n x n} and (sigma,tau)-derivations
// delta: F_q -> F_q^n, stored as full value tables and validated exhaustively
// at construction. There is no unchecked constructor: everything downstream
// (free-ring arithmetic, transforms, classification) assumes validated inputs.
//
// A morphism is determined by its value S = sigma(c) at the primitive element
// (sigma(c^j) = S^j), a derivation by delta(c) through
//   delta(c^{e}) = (sum_{i=0}^{e-1} S^i T^{e-1-i}) delta(c).
// Every valid morphism is a conjugated diagonal of Frobenius maps and every
// valid derivation is inner with vector (T - S)^{q-2} delta(c); both facts
// are realized by diagonalize_morphism and inner_vector below.

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "skewring/error.hpp"
#include "skewring/gf.hpp"
#include "skewring/matfq.hpp"

namespace skewring {

struct DiagonalSpec {
    std::vector<std::uint32_t> exps;  // Frobenius exponents, each in [0, m)

    bool operator==(const DiagonalSpec& o) const { return exps == o.exps; }
    bool operator!=(const DiagonalSpec& o) const { return !(*this == o); }
};

class MatrixMorphism {
public:
    /// sigma(c^j) = S^j, sigma(0) = 0. Throws NotMultiplicativeOrder when
    /// S^{q-1} != I; additivity failures carry the witness pair.
    static MatrixMorphism from_primitive_image(const FieldPtr& ctx, std::size_t n,
                                               const MatFq& S) {
        if (S.n() != n || *S.ctx() != *ctx)
            throw skew_error(errc::dimension_mismatch, "primitive image shape");
        const std::uint32_t q = ctx->q();
        if (!mat_pow(S, q - 1).is_identity())
            throw skew_error(errc::not_multiplicative_order,
                             "sigma(c)^{q-1} != I, so sigma(1) != I");
        std::vector<MatFq> table(q, MatFq(ctx, n));
        MatFq pw = MatFq::identity(ctx, n);
        for (std::uint32_t j = 0; j < q - 1; ++j) {
            table[ctx->exp(j)] = pw;
            pw = mat_mul(pw, S);
        }
        return MatrixMorphism(ctx, n, std::move(table));
    }

    /// sigma(a) = diag(a^{p^{j_1}}, ..., a^{p^{j_n}}).
    static MatrixMorphism diagonal(const FieldPtr& ctx, std::size_t n,
                                   const DiagonalSpec& spec) {
        if (spec.exps.size() != n)
            throw skew_error(errc::dimension_mismatch, "exponent count != n");
        for (std::uint32_t j : spec.exps)
            if (j >= ctx->m())
                throw skew_error(errc::exponent_out_of_range,
                                 "Frobenius exponent not in [0, m)", {{"exp", j}});
        std::vector<MatFq> table(ctx->q(), MatFq(ctx, n));
        for (Fq a = 0; a < ctx->q(); ++a)
            for (std::size_t i = 0; i < n; ++i)
                table[a].at(i, i) = ctx->frobenius(a, spec.exps[i]);
        return MatrixMorphism(ctx, n, std::move(table));
    }

    /// a -> aI (the conventional ring's morphism; all exponents zero).
    static MatrixMorphism identity_morphism(const FieldPtr& ctx, std::size_t n) {
        return diagonal(ctx, n, DiagonalSpec{std::vector<std::uint32_t>(n, 0)});
    }

    /// Validates an arbitrary full table.
    static MatrixMorphism from_table(const FieldPtr& ctx, std::size_t n,
                                     std::vector<MatFq> table) {
        return MatrixMorphism(ctx, n, std::move(table));
    }

    const MatFq& operator()(Fq a) const { return table_[a]; }
    const MatFq& primitive_image() const { return table_[ctx_->generator()]; }
    std::size_t n() const noexcept { return n_; }
    const FieldPtr& ctx() const noexcept { return ctx_; }

    bool operator==(const MatrixMorphism& o) const {
        return n_ == o.n_ && *ctx_ == *o.ctx_ && table_ == o.table_;
    }
    bool operator!=(const MatrixMorphism& o) const { return !(*this == o); }

private:
    MatrixMorphism(FieldPtr ctx, std::size_t n, std::vector<MatFq> table)
        : ctx_(std::move(ctx)), n_(n), table_(std::move(table)) {
        validate();
    }

    void validate() const {
        const std::uint32_t q = ctx_->q();
        if (n_ < 1) throw skew_error(errc::dimension_mismatch, "n must be >= 1");
        if (table_.size() != q)
            throw skew_error(errc::dimension_mismatch, "morphism table size != q");
        for (const MatFq& M : table_)
            if (M.n() != n_ || *M.ctx() != *ctx_)
                throw skew_error(errc::dimension_mismatch, "morphism table entry shape");
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                if (table_[0].at(i, j) != 0)
                    throw skew_error(errc::multiplicativity_violation, "sigma(0) != 0");
        if (!table_[1].is_identity())
            throw skew_error(errc::not_multiplicative_order, "sigma(1) != I");
        for (Fq a = 0; a < q; ++a)
            for (Fq b = 0; b <= a; ++b)
                if (table_[ctx_->add(a, b)] != mat_add(table_[a], table_[b]))
                    throw skew_error(errc::additivity_violation,
                                     "sigma(a+b) != sigma(a) + sigma(b)",
                                     {{"a", a}, {"b", b}});
        for (Fq a = 0; a < q; ++a)
            for (Fq b = 0; b < q; ++b)
                if (table_[ctx_->mul(a, b)] != mat_mul(table_[a], table_[b]))
                    throw skew_error(errc::multiplicativity_violation,
                                     "sigma(ab) != sigma(a) sigma(b)",
                                     {{"a", a}, {"b", b}});
    }

    FieldPtr ctx_;
    std::size_t n_;
    std::vector<MatFq> table_;
};

/// sigma and tau commute on all pairs iff their primitive
/// images commute. Only the primitive images are compared here; the
/// equivalence with the all-pairs statement is exercised by the test suite.
inline bool commuting_check(const MatrixMorphism& sigma, const MatrixMorphism& tau) {
    if (*sigma.ctx() != *tau.ctx())
        throw skew_error(errc::field_mismatch, "morphisms over different fields");
    if (sigma.n() != tau.n())
        throw skew_error(errc::dimension_mismatch, "morphism dimensions differ");
    const MatFq& S = sigma.primitive_image();
    const MatFq& T = tau.primitive_image();
    return mat_mul(S, T) == mat_mul(T, S);
}

class VecDerivation {
public:
    /// Extends d0 = delta(c) to a full (sigma,tau)-derivation table via
    /// delta(c^e) = (sum_{i<e} S^i T^{e-1-i}) d0, then validates additivity
    /// and the Leibniz rule exhaustively. Throws NonCommutingPair,
    /// AdditivityViolation, LeibnizViolation.
    static VecDerivation from_primitive_image(const MatrixMorphism& sigma,
                                              const MatrixMorphism& tau,
                                              const VecFq& d0) {
        if (!commuting_check(sigma, tau))
            throw skew_error(errc::non_commuting_pair,
                             "sigma(c) and tau(c) do not commute");
        const FieldPtr& ctx = sigma.ctx();
        const std::uint32_t q = ctx->q();
        const std::size_t n = sigma.n();
        if (d0.size() != n || *d0.ctx() != *ctx)
            throw skew_error(errc::dimension_mismatch, "d0 shape");
        std::vector<VecFq> table(q, VecFq(ctx, n));
        if (q == 2) {
            if (!d0.is_zero())
                throw skew_error(errc::leibniz_violation,
                                 "delta(1) must be 0, so d0 does not extend");
        } else {
            const MatFq& S = sigma.primitive_image();
            const MatFq& T = tau.primitive_image();
            MatFq M = MatFq::identity(ctx, n);  // M_e = sum_{i<e} S^i T^{e-1-i}
            MatFq Tpow = T;
            for (std::uint32_t e = 1; e <= q - 2; ++e) {
                table[ctx->exp(e)] = mat_vec(M, d0);
                M = mat_add(mat_mul(S, M), Tpow);
                Tpow = mat_mul(Tpow, T);
            }
        }
        return VecDerivation(sigma, tau, std::move(table));
    }

    /// The inner derivation delta(a) = (tau(a) - sigma(a)) lambda.
    static VecDerivation inner(const MatrixMorphism& sigma, const MatrixMorphism& tau,
                               const VecFq& lambda) {
        if (!commuting_check(sigma, tau))
            throw skew_error(errc::non_commuting_pair,
                             "sigma(c) and tau(c) do not commute");
        const FieldPtr& ctx = sigma.ctx();
        std::vector<VecFq> table;
        table.reserve(ctx->q());
        for (Fq a = 0; a < ctx->q(); ++a)
            table.push_back(mat_vec(mat_sub(tau(a), sigma(a)), lambda));
        return VecDerivation(sigma, tau, std::move(table));
    }

    static VecDerivation zero(const MatrixMorphism& sigma, const MatrixMorphism& tau) {
        std::vector<VecFq> table(sigma.ctx()->q(), VecFq(sigma.ctx(), sigma.n()));
        return VecDerivation(sigma, tau, std::move(table));
    }

    /// Validates an arbitrary full table.
    static VecDerivation from_table(const MatrixMorphism& sigma, const MatrixMorphism& tau,
                                    std::vector<VecFq> table) {
        return VecDerivation(sigma, tau, std::move(table));
    }

    const VecFq& operator()(Fq a) const { return table_[a]; }
    const MatrixMorphism& sigma() const noexcept { return sigma_; }
    const MatrixMorphism& tau() const noexcept { return tau_; }
    std::size_t n() const noexcept { return sigma_.n(); }
    const FieldPtr& ctx() const noexcept { return sigma_.ctx(); }

    bool is_zero() const {
        for (const VecFq& v : table_)
            if (!v.is_zero()) return false;
        return true;
    }

    bool operator==(const VecDerivation& o) const {
        return sigma_ == o.sigma_ && tau_ == o.tau_ && table_ == o.table_;
    }
    bool operator!=(const VecDerivation& o) const { return !(*this == o); }

private:
    VecDerivation(MatrixMorphism sigma, MatrixMorphism tau, std::vector<VecFq> table)
        : sigma_(std::move(sigma)), tau_(std::move(tau)), table_(std::move(table)) {
        validate();
    }

    void validate() const {
        const FieldCtx& F = *ctx();
        const std::uint32_t q = F.q();
        if (*sigma_.ctx() != *tau_.ctx() || sigma_.n() != tau_.n())
            throw skew_error(errc::dimension_mismatch, "sigma/tau shapes differ");
        if (table_.size() != q)
            throw skew_error(errc::dimension_mismatch, "derivation table size != q");
        for (const VecFq& v : table_)
            if (v.size() != n() || *v.ctx() != F)
                throw skew_error(errc::dimension_mismatch, "derivation table entry shape");
        if (!table_[0].is_zero() || !table_[1].is_zero())
            throw skew_error(errc::leibniz_violation, "delta(0) and delta(1) must be 0");
        for (Fq a = 0; a < q; ++a)
            for (Fq b = 0; b <= a; ++b)
                if (table_[F.add(a, b)] != vec_add(table_[a], table_[b]))
                    throw skew_error(errc::additivity_violation,
                                     "delta(a+b) != delta(a) + delta(b)",
                                     {{"a", a}, {"b", b}});
        for (Fq a = 0; a < q; ++a)
            for (Fq b = 0; b < q; ++b) {
                VecFq rhs = vec_add(mat_vec(sigma_(a), table_[b]),
                                    mat_vec(tau_(b), table_[a]));
                if (table_[F.mul(a, b)] != rhs)
                    throw skew_error(errc::leibniz_violation,
                                     "delta(ab) != sigma(a) delta(b) + tau(b) delta(a)",
                                     {{"a", a}, {"b", b}});
            }
    }

    MatrixMorphism sigma_, tau_;
    std::vector<VecFq> table_;
};

/// Inner derivation in the division-ring form delta(a) = lambda a - sigma(a) lambda
/// (the tau = Id case).
inline VecDerivation inner_sigma_derivation(const MatrixMorphism& sigma,
                                            const VecFq& lambda) {
    return VecDerivation::inner(
        sigma, MatrixMorphism::identity_morphism(sigma.ctx(), sigma.n()), lambda);
}

/// lambda = (T - S)^{q-2} delta(c), verified against delta(a) = (tau(a) - sigma(a)) lambda
/// on every a. The verification cannot fail for a validated derivation over a
/// finite field; it is kept as an invariant check.
inline VecFq inner_vector(const VecDerivation& delta) {
    const MatrixMorphism& sigma = delta.sigma();
    const MatrixMorphism& tau = delta.tau();
    if (!commuting_check(sigma, tau))
        throw skew_error(errc::non_commuting_pair, "sigma(c) and tau(c) do not commute");
    const FieldCtx& F = *delta.ctx();
    const Fq c = F.generator();
    MatFq TS = mat_sub(tau(c), sigma(c));
    VecFq lambda = mat_vec(mat_pow(TS, F.q() - 2), delta(c));
    for (Fq a = 0; a < F.q(); ++a)
        if (delta(a) != mat_vec(mat_sub(tau(a), sigma(a)), lambda))
            throw skew_error(errc::verification_failed,
                             "inner vector does not reproduce the derivation", {{"a", a}});
    return lambda;
}

struct MorphismDiagonalization {
    MatFq A;            // invertible, columns ordered to match spec
    DiagonalSpec spec;  // Frobenius exponents, ascending
};

/// sigma(a) = A diag(a^{p^{j_1}}, ..., a^{p^{j_n}}) A^{-1} for all a, verified
/// exhaustively. Eigenvalues of sigma(c) are matched to Frobenius exponents by
/// discrete logarithm (dlog d = p^j mod q-1); exponents are sorted ascending
/// with the columns of A permuted to match.
inline MorphismDiagonalization diagonalize_morphism(const MatrixMorphism& sigma) {
    const FieldCtx& F = *sigma.ctx();
    const std::size_t n = sigma.n();
    EigenDecomposition ed = eigen_diagonalize(sigma.primitive_image());

    std::vector<std::uint32_t> exps(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Fq d = ed.eigenvalues[i];
        if (d == 0)
            throw skew_error(errc::not_frobenius_eigenvalue,
                             "zero eigenvalue of sigma(c)", {{"eigenvalue", 0}});
        const std::uint32_t dl = F.dlog(d);
        bool found = false;
        std::uint64_t pj = 1 % (F.q() - 1);
        for (std::uint32_t j = 0; j < F.m(); ++j) {
            if (pj == dl) {
                exps[i] = j;
                found = true;
                break;
            }
            pj = pj * F.p() % (F.q() - 1);
        }
        if (!found)
            throw skew_error(errc::not_frobenius_eigenvalue,
                             "eigenvalue of sigma(c) is not c^{p^j}", {{"eigenvalue", d}});
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return exps[x] < exps[y]; });
    MatFq A(sigma.ctx(), n);
    DiagonalSpec spec;
    spec.exps.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        spec.exps[k] = exps[order[k]];
        for (std::size_t i = 0; i < n; ++i) A.at(i, k) = ed.basis.at(i, order[k]);
    }

    MatFq Ainv = mat_inv(A);
    for (Fq a = 0; a < F.q(); ++a) {
        VecFq diag(sigma.ctx(), n);
        for (std::size_t i = 0; i < n; ++i) diag[i] = F.frobenius(a, spec.exps[i]);
        if (sigma(a) != mat_mul(mat_mul(A, MatFq::diag(diag)), Ainv))
            throw skew_error(errc::verification_failed,
                             "diagonalization does not reproduce sigma", {{"a", a}});
    }
    return {std::move(A), std::move(spec)};
}

}  // namespace skewring
