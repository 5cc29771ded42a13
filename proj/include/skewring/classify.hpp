// classify.hpp
//
// Canonicalization and classification of F_q[x; sigma, delta]. Every such
// ring is affinely isomorphic to a diagonal ring F_q[x; sigma_1, ..., sigma_n]
// with zero derivation; the sorted multiset of Frobenius exponents is a
// complete isomorphism invariant, and the witness transform is constructed
// explicitly: diagonalize sigma, pull delta through, extract the inner vector.
// Vanishing-ideal handling is membership testing by brute-force evaluation
// over all q^n points.

#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "skewring/error.hpp"
#include "skewring/freering.hpp"
#include "skewring/morphism.hpp"
#include "skewring/random.hpp"
#include "skewring/transform.hpp"

namespace skewring {

inline constexpr std::uint64_t default_point_bound = std::uint64_t{1} << 20;

struct CanonicalForm {
    MatFq A;               // witness linear part
    VecFq lam;             // witness translation part: T(x) = Ax + lam
    DiagonalSpec spec;     // sorted Frobenius exponents
    AffineTransform witness;  // ring -> F_q[x; spec]
};

/// The affine isomorphism onto the canonical diagonal ring. The witness is
/// validated structurally by construction; a light sampled self-check of the
/// morphism, degree, and evaluation-shift properties runs on top (seeded,
/// deterministic).
inline CanonicalForm canonical_form(const RingPtr& ring, std::uint64_t sample_seed = 1) {
    const FieldPtr& ctx = ring->field();
    const std::size_t n = ring->n();

    MorphismDiagonalization dm = diagonalize_morphism(ring->sigma());
    MatrixMorphism tau = MatrixMorphism::diagonal(ctx, n, dm.spec);
    const MatFq Ainv = mat_inv(dm.A);
    std::vector<VecFq> dt;
    dt.reserve(ctx->q());
    for (Fq a = 0; a < ctx->q(); ++a) dt.push_back(mat_vec(Ainv, ring->delta()(a)));
    MatrixMorphism id = MatrixMorphism::identity_morphism(ctx, n);
    VecDerivation delta_tau = VecDerivation::from_table(tau, id, std::move(dt));
    VecFq lam_raw = inner_vector(delta_tau);

    RingPtr diag_ring = RingCtx::diagonal(ctx, dm.spec);
    VecFq lam = mat_vec(dm.A, lam_raw);
    AffineTransform witness = AffineTransform::make_checked(ring, dm.A, lam, diag_ring);

    std::mt19937_64 rng(sample_seed);
    for (int k = 0; k < 4; ++k) {
        SkewPoly F = random_poly(ring, rng, 3, 4);
        SkewPoly G = random_poly(ring, rng, 3, 4);
        if (witness.apply(poly_mul(F, G)) != poly_mul(witness.apply(F), witness.apply(G)))
            throw skew_error(errc::verification_failed, "witness is not multiplicative");
        if (witness.apply(F).degree() != F.degree())
            throw skew_error(errc::verification_failed, "witness does not preserve degree");
        VecFq a = random_vector(ctx, n, rng);
        if (!eval_shift_check(witness, F, a))
            throw skew_error(errc::verification_failed, "witness does not shift evaluations");
    }
    return {dm.A, std::move(lam), dm.spec, std::move(witness)};
}

/// Sorted exponent multiset; two rings are affinely isomorphic iff equal.
inline std::vector<std::uint32_t> isomorphism_class(const RingPtr& ring) {
    return canonical_form(ring).spec.exps;
}

struct IsomorphismResult {
    bool isomorphic = false;
    std::optional<AffineTransform> witness;  // r1 -> r2 when isomorphic
};

inline IsomorphismResult isomorphic(const RingPtr& r1, const RingPtr& r2) {
    if (*r1->field() != *r2->field())
        throw skew_error(errc::field_mismatch, "rings over different fields");
    if (r1->n() != r2->n())
        throw skew_error(errc::dimension_mismatch, "rings with different n");
    CanonicalForm c1 = canonical_form(r1);
    CanonicalForm c2 = canonical_form(r2);
    if (c1.spec != c2.spec) return {false, std::nullopt};
    // Both witnesses land on the same sorted diagonal ring; the permutation
    // between the two canonical forms is the identity.
    return {true, affine_compose(c1.witness, affine_inverse(c2.witness))};
}

/// True iff F evaluates to zero at every point of F_q^n (brute force).
inline bool is_vanishing(const SkewPoly& F, std::uint64_t point_bound = default_point_bound) {
    const RingCtx& R = *F.ring();
    const std::uint32_t q = R.field()->q();
    const std::size_t n = R.n();
    std::uint64_t points = 1;
    for (std::size_t i = 0; i < n; ++i) {
        points *= q;
        if (points > point_bound)
            throw skew_error(errc::search_space_too_large,
                             "q^n exceeds the configured point bound",
                             {{"bound", static_cast<long long>(point_bound)}});
    }
    VecFq a(R.field(), n);
    for (std::uint64_t k = 0; k < points; ++k) {
        std::uint64_t t = k;
        for (std::size_t i = 0; i < n; ++i) {
            a[i] = static_cast<Fq>(t % q);
            t /= q;
        }
        if (evaluate(F, a) != 0) return false;
    }
    return true;
}

/// Vanishing samples map to vanishing images and back: for each sample F,
/// is_vanishing(F) == is_vanishing(t(F)), with the converse direction checked
/// through the inverse transform.
inline bool ideal_preservation_check(const AffineTransform& t,
                                     const std::vector<SkewPoly>& samples,
                                     std::uint64_t point_bound = default_point_bound) {
    AffineTransform tinv = affine_inverse(t);
    for (const SkewPoly& F : samples) {
        if (!same_ring(F.ring(), t.src()))
            throw skew_error(errc::ring_mismatch, "sample not in the source ring");
        SkewPoly G = t.apply(F);
        const bool vf = is_vanishing(F, point_bound);
        if (vf != is_vanishing(G, point_bound)) return false;
        if (vf && !is_vanishing(tinv.apply(G), point_bound)) return false;
    }
    return true;
}

}  // namespace skewring
