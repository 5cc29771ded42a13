// transform.hpp
//
// Changes of variables between skew polynomial rings:
//
//   phi_A      x |-> Ax        (linear; requires sigma_src = A sigma_tgt A^{-1},
//                               delta_src = A delta_tgt)
//   phi_lambda x |-> x + lam   (translation; requires delta_src - delta_tgt
//                               inner with vector lam)
//   T_{A,lam}  x |-> Ax + lam  (affine: linear leg, then translation leg)
//
// All three are left-linear ring isomorphisms that preserve degrees and shift
// evaluation points. A transform owns explicit source/target ring contexts;
// the target is derived from the source at construction, so an incompatible
// ring pair fails before any polynomial is touched. Applying a transform is
// monomial substitution by generator images, multiplied out in the target
// ring.

#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "skewring/error.hpp"
#include "skewring/freering.hpp"
#include "skewring/matfq.hpp"
#include "skewring/morphism.hpp"

namespace skewring {

namespace detail {

// Left-linear extension of a monomial map determined by generator images:
// phi(x_i m) = images[i] * phi(m) in the target ring.
inline SkewPoly substitute_generators(const SkewPoly& F, const RingPtr& tgt,
                                      const std::vector<SkewPoly>& images) {
    const FieldCtx& f = *tgt->field();
    std::map<Monomial, SkewPoly, DegLexLess> memo;
    auto image = [&](auto&& self, const Monomial& m) -> const SkewPoly& {
        auto it = memo.find(m);
        if (it != memo.end()) return it->second;
        SkewPoly r = m.empty()
                         ? SkewPoly::one(tgt)
                         : poly_mul(images[m.front()],
                                    self(self, Monomial(m.begin() + 1, m.end())));
        return memo.emplace(m, std::move(r)).first->second;
    };
    TermMap out;
    for (const auto& [m, c] : F.terms())
        for (const auto& [w, cw] : image(image, m).terms())
            add_term(out, w, f.mul(c, cw), f);
    return SkewPoly(tgt, std::move(out));
}

inline MatrixMorphism conjugated_morphism(const MatrixMorphism& sigma, const MatFq& A,
                                          const MatFq& Ainv) {
    std::vector<MatFq> table;
    table.reserve(sigma.ctx()->q());
    for (Fq a = 0; a < sigma.ctx()->q(); ++a)
        table.push_back(mat_mul(mat_mul(Ainv, sigma(a)), A));
    return MatrixMorphism::from_table(sigma.ctx(), sigma.n(), std::move(table));
}

}  // namespace detail

class LinearTransform {
public:
    /// phi_A out of src; the target ring carries tau = A^{-1} sigma A and
    /// delta_tgt = A^{-1} delta.
    static LinearTransform make(const RingPtr& src, const MatFq& A) {
        if (A.n() != src->n() || *A.ctx() != *src->field())
            throw skew_error(errc::dimension_mismatch, "matrix does not match ring");
        MatFq Ainv = mat_inv(A);
        MatrixMorphism tau = detail::conjugated_morphism(src->sigma(), A, Ainv);
        std::vector<VecFq> dt;
        dt.reserve(src->field()->q());
        for (Fq a = 0; a < src->field()->q(); ++a)
            dt.push_back(mat_vec(Ainv, src->delta()(a)));
        MatrixMorphism id = MatrixMorphism::identity_morphism(src->field(), src->n());
        RingPtr tgt = RingCtx::make(tau, VecDerivation::from_table(tau, id, std::move(dt)));
        return LinearTransform(src, std::move(tgt), A, std::move(Ainv));
    }

    /// As make(), but requires the derived target to equal the given ring.
    static LinearTransform make_checked(const RingPtr& src, const MatFq& A,
                                        const RingPtr& tgt) {
        LinearTransform t = make(src, A);
        if (!same_ring(t.tgt(), tgt))
            throw skew_error(errc::incompatible_derivations,
                             "ring pair admits no such linear transform");
        return LinearTransform(src, tgt, t.A_, t.Ainv_);
    }

    SkewPoly apply(const SkewPoly& F) const {
        if (!same_ring(F.ring(), src_))
            throw skew_error(errc::ring_mismatch, "polynomial not in the source ring");
        std::vector<SkewPoly> images;
        images.reserve(src_->n());
        for (std::size_t i = 0; i < src_->n(); ++i) {
            TermMap t;
            for (std::size_t j = 0; j < src_->n(); ++j)
                if (A_.at(i, j) != 0)
                    t.emplace(Monomial{static_cast<std::uint8_t>(j)}, A_.at(i, j));
            images.emplace_back(tgt_, std::move(t));
        }
        return detail::substitute_generators(F, tgt_, images);
    }

    const MatFq& matrix() const noexcept { return A_; }
    const MatFq& matrix_inv() const noexcept { return Ainv_; }
    const RingPtr& src() const noexcept { return src_; }
    const RingPtr& tgt() const noexcept { return tgt_; }

private:
    LinearTransform(RingPtr src, RingPtr tgt, MatFq A, MatFq Ainv)
        : src_(std::move(src)), tgt_(std::move(tgt)), A_(std::move(A)),
          Ainv_(std::move(Ainv)) {}

    RingPtr src_, tgt_;
    MatFq A_, Ainv_;
};

class TranslationTransform {
public:
    /// phi_lambda out of src; the target derivation is
    /// delta'(a) = delta(a) - (lam a - sigma(a) lam).
    static TranslationTransform make(const RingPtr& src, const VecFq& lam) {
        if (lam.size() != src->n() || *lam.ctx() != *src->field())
            throw skew_error(errc::dimension_mismatch, "vector does not match ring");
        const FieldCtx& f = *src->field();
        std::vector<VecFq> dt;
        dt.reserve(f.q());
        for (Fq a = 0; a < f.q(); ++a) {
            VecFq inner = vec_sub(vec_scale(lam, a), mat_vec(src->sigma()(a), lam));
            dt.push_back(vec_sub(src->delta()(a), inner));
        }
        MatrixMorphism id = MatrixMorphism::identity_morphism(src->field(), src->n());
        RingPtr tgt = RingCtx::make(
            src->sigma(), VecDerivation::from_table(src->sigma(), id, std::move(dt)));
        return TranslationTransform(src, std::move(tgt), lam);
    }

    static TranslationTransform make_checked(const RingPtr& src, const VecFq& lam,
                                             const RingPtr& tgt) {
        TranslationTransform t = make(src, lam);
        if (!same_ring(t.tgt(), tgt))
            throw skew_error(errc::incompatible_derivations,
                             "ring pair admits no such translation");
        return TranslationTransform(src, tgt, lam);
    }

    SkewPoly apply(const SkewPoly& F) const {
        if (!same_ring(F.ring(), src_))
            throw skew_error(errc::ring_mismatch, "polynomial not in the source ring");
        std::vector<SkewPoly> images;
        images.reserve(src_->n());
        for (std::size_t i = 0; i < src_->n(); ++i) {
            TermMap t;
            t.emplace(Monomial{static_cast<std::uint8_t>(i)}, 1);
            if (lam_[i] != 0) t.emplace(Monomial{}, lam_[i]);
            images.emplace_back(tgt_, std::move(t));
        }
        return detail::substitute_generators(F, tgt_, images);
    }

    const VecFq& vector() const noexcept { return lam_; }
    const RingPtr& src() const noexcept { return src_; }
    const RingPtr& tgt() const noexcept { return tgt_; }

private:
    TranslationTransform(RingPtr src, RingPtr tgt, VecFq lam)
        : src_(std::move(src)), tgt_(std::move(tgt)), lam_(std::move(lam)) {}

    RingPtr src_, tgt_;
    VecFq lam_;
};

/// T_{A,lam} with generator image T(x) = Ax + lam: the linear leg phi_A
/// (src -> mid) followed by the translation leg phi_{A^{-1} lam} (mid -> tgt).
class AffineTransform {
public:
    static AffineTransform make(const RingPtr& src, const MatFq& A, const VecFq& lam) {
        LinearTransform lin = LinearTransform::make(src, A);
        TranslationTransform tr =
            TranslationTransform::make(lin.tgt(), mat_vec(lin.matrix_inv(), lam));
        return AffineTransform(std::move(lin), std::move(tr), lam);
    }

    static AffineTransform make_checked(const RingPtr& src, const MatFq& A,
                                        const VecFq& lam, const RingPtr& tgt) {
        AffineTransform t = make(src, A, lam);
        if (!same_ring(t.tgt(), tgt))
            throw skew_error(errc::incompatible_derivations,
                             "ring pair admits no such affine transform");
        t.tr_ = TranslationTransform::make_checked(t.mid(), t.tr_.vector(), tgt);
        return t;
    }

    SkewPoly apply(const SkewPoly& F) const { return tr_.apply(lin_.apply(F)); }

    const MatFq& matrix() const noexcept { return lin_.matrix(); }
    const MatFq& matrix_inv() const noexcept { return lin_.matrix_inv(); }
    const VecFq& translation() const noexcept { return lam_; }
    const RingPtr& src() const noexcept { return lin_.src(); }
    const RingPtr& mid() const noexcept { return lin_.tgt(); }
    const RingPtr& tgt() const noexcept { return tr_.tgt(); }
    const LinearTransform& linear_leg() const noexcept { return lin_; }
    const TranslationTransform& translation_leg() const noexcept { return tr_; }

private:
    AffineTransform(LinearTransform lin, TranslationTransform tr, VecFq lam)
        : lin_(std::move(lin)), tr_(std::move(tr)), lam_(std::move(lam)) {}

    LinearTransform lin_;
    TranslationTransform tr_;
    VecFq lam_;  // generator-image translation; the leg's own vector is A^{-1} lam
};

/// Applying t1 then t2 equals applying the composite phi_{A1 A2}.
inline LinearTransform linear_compose(const LinearTransform& t1, const LinearTransform& t2) {
    if (!same_ring(t1.tgt(), t2.src()))
        throw skew_error(errc::chain_mismatch, "linear transforms do not chain");
    return LinearTransform::make_checked(t1.src(), mat_mul(t1.matrix(), t2.matrix()),
                                         t2.tgt());
}

/// Applying t1 then t2 equals applying phi_{lam1 + lam2}.
inline TranslationTransform translation_compose(const TranslationTransform& t1,
                                                const TranslationTransform& t2) {
    if (!same_ring(t1.tgt(), t2.src()))
        throw skew_error(errc::chain_mismatch, "translations do not chain");
    return TranslationTransform::make_checked(
        t1.src(), vec_add(t1.vector(), t2.vector()), t2.tgt());
}

/// Reorders "translate by lam, then apply A" into "apply A, then translate by
/// A^{-1} lam". Both composites agree on every input (generator image Ax + lam).
inline std::pair<LinearTransform, TranslationTransform> swap_order(
    const TranslationTransform& first, const LinearTransform& second) {
    if (!same_ring(first.tgt(), second.src()))
        throw skew_error(errc::chain_mismatch, "translation and linear legs do not chain");
    LinearTransform lin = LinearTransform::make(first.src(), second.matrix());
    TranslationTransform tr = TranslationTransform::make_checked(
        lin.tgt(), mat_vec(second.matrix_inv(), first.vector()), second.tgt());
    return {std::move(lin), std::move(tr)};
}

/// Applying t1 = (A, lam) then t2 = (B, mu) equals applying (AB, A mu + lam).
inline AffineTransform affine_compose(const AffineTransform& t1, const AffineTransform& t2) {
    if (!same_ring(t1.tgt(), t2.src()))
        throw skew_error(errc::chain_mismatch, "affine transforms do not chain");
    MatFq A = mat_mul(t1.matrix(), t2.matrix());
    VecFq lam = vec_add(mat_vec(t1.matrix(), t2.translation()), t1.translation());
    return AffineTransform::make_checked(t1.src(), A, lam, t2.tgt());
}

/// (A, lam)^{-1} = (A^{-1}, -A^{-1} lam), from tgt back onto src.
inline AffineTransform affine_inverse(const AffineTransform& t) {
    VecFq lam = vec_neg(mat_vec(t.matrix_inv(), t.translation()));
    return AffineTransform::make_checked(t.tgt(), t.matrix_inv(), lam, t.src());
}

/// Evaluation shifting: the transformed polynomial evaluated at a equals the
/// original evaluated at the transformed point. Holds identically; exposed as
/// the property harness.
inline bool eval_shift_check(const LinearTransform& t, const SkewPoly& F, const VecFq& a) {
    return evaluate(t.apply(F), a) == evaluate(F, mat_vec(t.matrix(), a));
}
inline bool eval_shift_check(const TranslationTransform& t, const SkewPoly& F,
                             const VecFq& a) {
    return evaluate(t.apply(F), a) == evaluate(F, vec_add(a, t.vector()));
}
inline bool eval_shift_check(const AffineTransform& t, const SkewPoly& F, const VecFq& a) {
    return evaluate(t.apply(F), a) ==
           evaluate(F, vec_add(mat_vec(t.matrix(), a), t.translation()));
}

/// Rebuilds the affine transform whose generator images are the given
/// polynomials T(x_i) in tgt. Succeeds iff every image has degree <= 1, the
/// degree-1 coefficient matrix is invertible, and the induced target ring is
/// exactly tgt. Throws NotAffine / SingularLinearPart / IncompatibleDerivations.
inline AffineTransform reconstruct_affine(const std::vector<SkewPoly>& images,
                                          const RingPtr& src, const RingPtr& tgt) {
    const std::size_t n = src->n();
    if (images.size() != n || tgt->n() != n)
        throw skew_error(errc::dimension_mismatch, "expected one image per variable");
    for (const SkewPoly& im : images) {
        if (!same_ring(im.ring(), tgt))
            throw skew_error(errc::ring_mismatch, "image not in the target ring");
        if (im.degree() > 1)
            throw skew_error(errc::not_affine, "generator image of degree > 1",
                             {{"degree", im.degree()}});
    }
    MatFq A(src->field(), n);
    VecFq lam(src->field(), n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            A.at(i, j) = images[i].coeff(Monomial{static_cast<std::uint8_t>(j)});
        lam[i] = images[i].coeff(Monomial{});
    }
    try {
        mat_inv(A);
    } catch (const skew_error&) {
        throw skew_error(errc::singular_linear_part,
                         "degree-1 coefficient matrix is singular");
    }
    return AffineTransform::make_checked(src, A, lam, tgt);
}

}  // namespace skewring
