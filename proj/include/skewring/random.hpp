// random.hpp
//
// Seeded generators for fuzz-style checks: field vectors and points, invertible
// matrices (rejection sampling), random conjugated/translated rings, and sparse
// random skew polynomials. Deterministic given the engine state.

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "skewring/freering.hpp"
#include "skewring/matfq.hpp"
#include "skewring/morphism.hpp"

namespace skewring {

inline Fq random_element(const FieldCtx& F, std::mt19937_64& rng) {
    return static_cast<Fq>(rng() % F.q());
}

inline VecFq random_vector(const FieldPtr& ctx, std::size_t n, std::mt19937_64& rng) {
    VecFq v(ctx, n);
    for (std::size_t i = 0; i < n; ++i) v[i] = random_element(*ctx, rng);
    return v;
}

inline MatFq random_matrix(const FieldPtr& ctx, std::size_t n, std::mt19937_64& rng) {
    MatFq A(ctx, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) A.at(i, j) = random_element(*ctx, rng);
    return A;
}

inline MatFq random_invertible_matrix(const FieldPtr& ctx, std::size_t n,
                                      std::mt19937_64& rng) {
    for (;;) {
        MatFq A = random_matrix(ctx, n, rng);
        try {
            mat_inv(A);
            return A;
        } catch (const skew_error&) {
        }
    }
}

inline DiagonalSpec random_diagonal_spec(const FieldPtr& ctx, std::size_t n,
                                         std::mt19937_64& rng) {
    DiagonalSpec spec;
    spec.exps.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        spec.exps[i] = static_cast<std::uint32_t>(rng() % ctx->m());
    return spec;
}

/// sigma = A diag(Frobenius exps) A^{-1}, as a validated morphism.
inline MatrixMorphism conjugated_diagonal_morphism(const FieldPtr& ctx,
                                                   const DiagonalSpec& spec,
                                                   const MatFq& A) {
    const MatFq Ainv = mat_inv(A);
    std::vector<MatFq> table;
    table.reserve(ctx->q());
    for (Fq a = 0; a < ctx->q(); ++a) {
        VecFq d(ctx, spec.exps.size());
        for (std::size_t i = 0; i < spec.exps.size(); ++i)
            d[i] = ctx->frobenius(a, spec.exps[i]);
        table.push_back(mat_mul(mat_mul(A, MatFq::diag(d)), Ainv));
    }
    return MatrixMorphism::from_table(ctx, spec.exps.size(), std::move(table));
}

/// A random ring affinely isomorphic to the diagonal ring of `spec`:
/// sigma = A diag A^{-1} and delta(a) = A (lam a - diag(a) lam).
inline RingPtr random_conjugated_ring(const FieldPtr& ctx, const DiagonalSpec& spec,
                                      std::mt19937_64& rng) {
    const std::size_t n = spec.exps.size();
    MatFq A = random_invertible_matrix(ctx, n, rng);
    VecFq lam = random_vector(ctx, n, rng);
    MatrixMorphism sigma = conjugated_diagonal_morphism(ctx, spec, A);
    MatrixMorphism tau = MatrixMorphism::diagonal(ctx, n, spec);
    std::vector<VecFq> dt;
    dt.reserve(ctx->q());
    for (Fq a = 0; a < ctx->q(); ++a) {
        VecFq inner = vec_sub(vec_scale(lam, a), mat_vec(tau(a), lam));
        dt.push_back(mat_vec(A, inner));
    }
    MatrixMorphism id = MatrixMorphism::identity_morphism(ctx, n);
    return RingCtx::make(sigma, VecDerivation::from_table(sigma, id, std::move(dt)));
}

/// Sparse random polynomial with at most max_terms monomials of degree <= max_deg.
inline SkewPoly random_poly(const RingPtr& ring, std::mt19937_64& rng,
                            std::size_t max_deg, std::size_t max_terms) {
    const FieldCtx& F = *ring->field();
    TermMap t;
    const std::size_t terms = 1 + rng() % max_terms;
    for (std::size_t k = 0; k < terms; ++k) {
        Monomial m(rng() % (max_deg + 1));
        for (auto& v : m) v = static_cast<std::uint8_t>(rng() % ring->n());
        Fq c = static_cast<Fq>(1 + rng() % (F.q() - 1));
        detail::add_term(t, m, c, F);
    }
    return SkewPoly(ring, std::move(t));
}

}  // namespace skewring
