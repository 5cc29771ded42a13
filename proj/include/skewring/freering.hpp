// freering.hpp
//
// The free multivariate skew polynomial ring F_q[x; sigma, delta]: a left
// F_q-vector space on the free monoid of words in x_1..x_n, multiplied by
// pushing scalars leftward through letters with the commutation rule
//
//   x_i a = sum_j sigma_{i,j}(a) x_j + delta_i(a).
//
// Right division by the linear polynomials x_i - a_i has a unique constant
// remainder, which defines evaluation at a point. Monomials are words of
// 0-based variable indices; the empty word is the identity monomial. Terms
// are kept in a degree-lexicographic map with no zero coefficients, so the
// representation (and printing order) is canonical.

#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "skewring/error.hpp"
#include "skewring/gf.hpp"
#include "skewring/matfq.hpp"
#include "skewring/morphism.hpp"

namespace skewring {

using Monomial = std::vector<std::uint8_t>;  // variable indices in [0, n)

struct DegLexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

using TermMap = std::map<Monomial, Fq, DegLexLess>;

class RingCtx;
using RingPtr = std::shared_ptr<const RingCtx>;

class RingCtx {
public:
    /// Pairs a validated morphism with a validated sigma-derivation
    /// (tau = Id). The pair determines the ring product.
    static RingPtr make(MatrixMorphism sigma, VecDerivation delta) {
        if (delta.sigma() != sigma)
            throw skew_error(errc::ring_mismatch, "delta is not a sigma-derivation");
        if (delta.tau() != MatrixMorphism::identity_morphism(sigma.ctx(), sigma.n()))
            throw skew_error(errc::ring_mismatch, "delta must have tau = Id");
        return RingPtr(new RingCtx(std::move(sigma), std::move(delta)));
    }

    static RingPtr with_zero_derivation(MatrixMorphism sigma) {
        VecDerivation d = VecDerivation::zero(
            sigma, MatrixMorphism::identity_morphism(sigma.ctx(), sigma.n()));
        return make(std::move(sigma), std::move(d));
    }

    /// The conventional ring F_q[x]: sigma = Id, delta = 0.
    static RingPtr conventional(const FieldPtr& field, std::size_t n) {
        return with_zero_derivation(MatrixMorphism::identity_morphism(field, n));
    }

    /// F_q[x; sigma_1, ..., sigma_n]: diagonal Frobenius morphism, delta = 0.
    static RingPtr diagonal(const FieldPtr& field, const DiagonalSpec& spec) {
        return with_zero_derivation(
            MatrixMorphism::diagonal(field, spec.exps.size(), spec));
    }

    const MatrixMorphism& sigma() const noexcept { return sigma_; }
    const VecDerivation& delta() const noexcept { return delta_; }
    const FieldPtr& field() const noexcept { return sigma_.ctx(); }
    std::size_t n() const noexcept { return sigma_.n(); }

    bool operator==(const RingCtx& o) const {
        return sigma_ == o.sigma_ && delta_ == o.delta_;
    }
    bool operator!=(const RingCtx& o) const { return !(*this == o); }

private:
    RingCtx(MatrixMorphism sigma, VecDerivation delta)
        : sigma_(std::move(sigma)), delta_(std::move(delta)) {}

    MatrixMorphism sigma_;
    VecDerivation delta_;
};

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
    return a == b || *a == *b;
}

namespace detail {

inline void add_term(TermMap& t, const Monomial& m, Fq c, const FieldCtx& F) {
    if (c == 0) return;
    auto it = t.find(m);
    if (it == t.end()) {
        t.emplace(m, c);
        return;
    }
    it->second = F.add(it->second, c);
    if (it->second == 0) t.erase(it);
}

// Memoized expansion of word * a into canonical terms, peeling the word's
// rightmost letter with the commutation rule. Shared within one product or
// division to bound recomputation.
struct PushCache {
    std::map<std::pair<Monomial, Fq>, TermMap> memo;
};

inline const TermMap& push_scalar(const RingCtx& R, const Monomial& word, Fq a,
                                  PushCache& cache) {
    auto key = std::make_pair(word, a);
    auto it = cache.memo.find(key);
    if (it != cache.memo.end()) return it->second;

    const FieldCtx& F = *R.field();
    TermMap out;
    if (a != 0) {
        if (word.empty()) {
            out.emplace(Monomial{}, a);
        } else {
            Monomial prefix(word.begin(), word.end() - 1);
            const std::uint8_t i = word.back();
            const MatFq& Sig = R.sigma()(a);
            const VecFq& Del = R.delta()(a);
            for (std::size_t j = 0; j < R.n(); ++j) {
                const Fq s = Sig.at(i, j);
                if (s == 0) continue;
                const TermMap& sub = push_scalar(R, prefix, s, cache);
                for (const auto& [m, c] : sub) {
                    Monomial ext = m;
                    ext.push_back(static_cast<std::uint8_t>(j));
                    add_term(out, ext, c, F);
                }
            }
            const Fq d = Del[i];
            if (d != 0)
                for (const auto& [m, c] : push_scalar(R, prefix, d, cache))
                    add_term(out, m, c, F);
        }
    }
    return cache.memo.emplace(std::move(key), std::move(out)).first->second;
}

}  // namespace detail

class SkewPoly {
public:
    explicit SkewPoly(RingPtr ring) : ring_(std::move(ring)) {}
    SkewPoly(RingPtr ring, TermMap terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
        for (auto it = terms_.begin(); it != terms_.end();) {
            check_monomial(it->first);
            it = it->second == 0 ? terms_.erase(it) : std::next(it);
        }
    }

    static SkewPoly zero(RingPtr ring) { return SkewPoly(std::move(ring)); }

    static SkewPoly constant(RingPtr ring, Fq c) {
        TermMap t;
        if (c != 0) t.emplace(Monomial{}, c);
        return SkewPoly(std::move(ring), std::move(t));
    }

    static SkewPoly one(RingPtr ring) { return constant(std::move(ring), 1); }

    static SkewPoly variable(RingPtr ring, std::size_t i) {
        return monomial(std::move(ring), Monomial{static_cast<std::uint8_t>(i)}, 1);
    }

    static SkewPoly monomial(RingPtr ring, Monomial m, Fq coeff) {
        TermMap t;
        if (coeff != 0) t.emplace(std::move(m), coeff);
        return SkewPoly(std::move(ring), std::move(t));
    }

    const RingPtr& ring() const noexcept { return ring_; }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Degree of the highest monomial; -1 is the zero polynomial's sentinel.
    int degree() const noexcept {
        return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.size());
    }

    Fq coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? 0 : it->second;
    }

    bool operator==(const SkewPoly& o) const {
        return same_ring(ring_, o.ring_) && terms_ == o.terms_;
    }
    bool operator!=(const SkewPoly& o) const { return !(*this == o); }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            if (!s.empty()) s += " + ";
            const auto& [m, c] = *it;
            if (m.empty()) {
                s += std::to_string(c);
                continue;
            }
            if (c != 1) s += std::to_string(c) + "*";
            for (std::size_t k = 0; k < m.size(); ++k)
                s += (k ? "*x" : "x") + std::to_string(m[k] + 1);
        }
        return s;
    }

private:
    void check_monomial(const Monomial& m) const {
        for (std::uint8_t v : m)
            if (v >= ring_->n())
                throw skew_error(errc::ring_mismatch, "variable index out of range");
    }

    RingPtr ring_;
    TermMap terms_;
};

namespace detail {
inline void require_same_ring(const SkewPoly& F, const SkewPoly& G) {
    if (!same_ring(F.ring(), G.ring()))
        throw skew_error(errc::ring_mismatch, "polynomials from different rings");
}
inline void require_point(const RingCtx& R, const VecFq& a) {
    if (a.size() != R.n() || *a.ctx() != *R.field())
        throw skew_error(errc::ring_mismatch, "point does not match the ring");
}
}  // namespace detail

inline SkewPoly poly_add(const SkewPoly& F, const SkewPoly& G) {
    detail::require_same_ring(F, G);
    const FieldCtx& f = *F.ring()->field();
    TermMap t = F.terms();
    for (const auto& [m, c] : G.terms()) detail::add_term(t, m, c, f);
    return SkewPoly(F.ring(), std::move(t));
}

inline SkewPoly poly_neg(const SkewPoly& F) {
    const FieldCtx& f = *F.ring()->field();
    TermMap t;
    for (const auto& [m, c] : F.terms()) t.emplace(m, f.neg(c));
    return SkewPoly(F.ring(), std::move(t));
}

inline SkewPoly poly_sub(const SkewPoly& F, const SkewPoly& G) {
    return poly_add(F, poly_neg(G));
}

inline SkewPoly scalar_mul_left(Fq a, const SkewPoly& F) {
    const FieldCtx& f = *F.ring()->field();
    TermMap t;
    for (const auto& [m, c] : F.terms()) {
        const Fq ac = f.mul(a, c);
        if (ac != 0) t.emplace(m, ac);
    }
    return SkewPoly(F.ring(), std::move(t));
}

/// Ring product. For each term F_m m of F and G_m' m' of G, the scalar G_m'
/// is pushed leftward through m from its rightmost letter, the result is
/// left-multiplied by F_m, and m' is appended to every monomial. Degrees add
/// for nonzero operands. The cache overload lets batch callers share the
/// pushed-scalar memo across many products over one ring.
inline SkewPoly poly_mul(const SkewPoly& F, const SkewPoly& G, detail::PushCache& cache) {
    detail::require_same_ring(F, G);
    const RingCtx& R = *F.ring();
    const FieldCtx& f = *R.field();
    TermMap out;
    for (const auto& [mf, cf] : F.terms())
        for (const auto& [mg, cg] : G.terms()) {
            const TermMap& pushed = detail::push_scalar(R, mf, cg, cache);
            for (const auto& [w, cw] : pushed) {
                Monomial m = w;
                m.insert(m.end(), mg.begin(), mg.end());
                detail::add_term(out, m, f.mul(cf, cw), f);
            }
        }
    return SkewPoly(F.ring(), std::move(out));
}

inline SkewPoly poly_mul(const SkewPoly& F, const SkewPoly& G) {
    detail::PushCache cache;
    return poly_mul(F, G, cache);
}

inline SkewPoly operator+(const SkewPoly& F, const SkewPoly& G) { return poly_add(F, G); }
inline SkewPoly operator-(const SkewPoly& F, const SkewPoly& G) { return poly_sub(F, G); }
inline SkewPoly operator-(const SkewPoly& F) { return poly_neg(F); }
inline SkewPoly operator*(const SkewPoly& F, const SkewPoly& G) { return poly_mul(F, G); }

struct LinearDivision {
    std::vector<SkewPoly> quotients;  // G_1 ... G_n
    Fq remainder = 0;                 // b
};

/// Right division F = sum_i G_i (x_i - a_i) + b by peeling each leading
/// monomial m = m' x_j as m = m'(x_j - a_j) + m' a_j. The remainder b is the
/// unique evaluation of F at a.
inline LinearDivision divide_linear(const SkewPoly& F, const VecFq& a) {
    const RingCtx& R = *F.ring();
    detail::require_point(R, a);
    const FieldCtx& f = *R.field();
    detail::PushCache cache;
    TermMap rem = F.terms();
    std::vector<TermMap> quot(R.n());
    while (!rem.empty() && !rem.rbegin()->first.empty()) {
        const auto leading = *rem.rbegin();
        rem.erase(std::prev(rem.end()));
        Monomial prefix(leading.first.begin(), leading.first.end() - 1);
        const std::uint8_t j = leading.first.back();
        detail::add_term(quot[j], prefix, leading.second, f);
        const TermMap& pushed = detail::push_scalar(R, prefix, a[j], cache);
        for (const auto& [w, cw] : pushed)
            detail::add_term(rem, w, f.mul(leading.second, cw), f);
    }
    LinearDivision out;
    out.quotients.reserve(R.n());
    for (std::size_t j = 0; j < R.n(); ++j)
        out.quotients.emplace_back(F.ring(), std::move(quot[j]));
    out.remainder = rem.empty() ? 0 : rem.begin()->second;
    return out;
}

/// Evaluation at a point: the remainder of divide_linear, computed by the
/// same reduction with monomial memoization and no quotient bookkeeping.
inline Fq evaluate(const SkewPoly& F, const VecFq& a) {
    const RingCtx& R = *F.ring();
    detail::require_point(R, a);
    const FieldCtx& f = *R.field();
    detail::PushCache cache;
    std::map<Monomial, Fq, DegLexLess> memo;

    auto eval_mono = [&](auto&& self, const Monomial& m) -> Fq {
        if (m.empty()) return 1;
        auto it = memo.find(m);
        if (it != memo.end()) return it->second;
        Monomial prefix(m.begin(), m.end() - 1);
        const std::uint8_t j = m.back();
        Fq v = 0;
        for (const auto& [w, cw] : detail::push_scalar(R, prefix, a[j], cache))
            v = f.add(v, f.mul(cw, self(self, w)));
        memo.emplace(m, v);
        return v;
    };

    Fq b = 0;
    for (const auto& [m, c] : F.terms()) b = f.add(b, f.mul(c, eval_mono(eval_mono, m)));
    return b;
}

/// The point at which the left factor of a product is evaluated:
/// b = sigma(c) a c^{-1} + delta(c) c^{-1}.
inline VecFq conjugate_point(const RingCtx& R, const VecFq& a, Fq c) {
    detail::require_point(R, a);
    if (c == 0) throw skew_error(errc::zero_conjugator, "conjugation by zero");
    const FieldCtx& f = *R.field();
    const Fq cinv = f.inv(c);
    return vec_add(vec_scale(mat_vec(R.sigma()(c), a), cinv),
                   vec_scale(R.delta()(c), cinv));
}

/// (FG)(a) through the product rule: 0 when G(a) = 0, else F(b) G(a) with b
/// the conjugate of a by G(a). Must agree with evaluate(poly_mul(F, G), a).
inline Fq product_rule_eval(const SkewPoly& F, const SkewPoly& G, const VecFq& a) {
    detail::require_same_ring(F, G);
    const Fq c = evaluate(G, a);
    if (c == 0) return 0;
    const VecFq b = conjugate_point(*F.ring(), a, c);
    return F.ring()->field()->mul(evaluate(F, b), c);
}

}  // namespace skewring
