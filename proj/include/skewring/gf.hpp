// gf.hpp
//
// Exact arithmetic in F_q = F_{p^m} with exp/log tables.
//
// Elements are canonical integer encodings in [0, q): the base-p digits of
// the encoding are the coefficients (low to high) of the residue polynomial
// modulo a fixed monic irreducible of degree m. The modulus is the
// lexicographically smallest monic irreducible (scanning encodings of the
// non-leading coefficients in ascending order), and the primitive element c
// is the generator of F_q^* with the smallest encoding. Both choices are
// deterministic, so encodings are portable across runs and machines.

#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "skewring/error.hpp"

namespace skewring {

using Fq = std::uint32_t;  // canonical element encoding in [0, q)

inline constexpr std::uint64_t default_field_cap = std::uint64_t{1} << 16;

class FieldCtx;
using FieldPtr = std::shared_ptr<const FieldCtx>;

namespace detail {

// Dense F_p polynomials (coefficients low to high, no trailing zeros) used
// only while constructing a field, before the exp/log tables exist.
using PPoly = std::vector<std::uint32_t>;

inline void ppoly_trim(PPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline PPoly ppoly_mul(const PPoly& f, const PPoly& g, std::uint32_t p) {
    if (f.empty() || g.empty()) return {};
    PPoly h(f.size() + g.size() - 1, 0);
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j)
            h[i + j] = (h[i + j] + std::uint64_t{f[i]} * g[j]) % p;
    ppoly_trim(h);
    return h;
}

// Remainder of f by monic g.
inline PPoly ppoly_rem(PPoly f, const PPoly& g, std::uint32_t p) {
    ppoly_trim(f);
    const std::size_t dg = g.size() - 1;
    while (f.size() > dg) {
        const std::uint32_t lead = f.back();
        const std::size_t shift = f.size() - 1 - dg;
        if (lead != 0)
            for (std::size_t i = 0; i <= dg; ++i) {
                std::uint64_t sub = std::uint64_t{lead} * g[i] % p;
                f[shift + i] = static_cast<std::uint32_t>((f[shift + i] + p - sub) % p);
            }
        f.pop_back();
        ppoly_trim(f);
        if (f.size() <= dg) break;
    }
    return f;
}

inline bool is_prime_u32(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace detail

class FieldCtx {
public:
    /// Builds F_{p^m}. Throws NotPrime / FieldTooLarge.
    static FieldPtr make(std::uint32_t p, std::uint32_t m,
                         std::uint64_t max_q = default_field_cap) {
        return std::shared_ptr<const FieldCtx>(new FieldCtx(p, m, max_q));
    }

    std::uint32_t p() const noexcept { return p_; }
    std::uint32_t m() const noexcept { return m_; }
    std::uint32_t q() const noexcept { return q_; }

    /// Modulus coefficients, low to high, length m+1, monic.
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

    /// The fixed primitive element c.
    Fq generator() const noexcept { return c_; }

    Fq add(Fq a, Fq b) const {
        if (p_ == 2) return a ^ b;
        Fq r = 0, scale = 1;
        for (std::uint32_t i = 0; i < m_; ++i) {
            r += (a % p_ + b % p_) % p_ * scale;
            a /= p_;
            b /= p_;
            scale *= p_;
        }
        return r;
    }

    Fq neg(Fq a) const {
        if (p_ == 2) return a;
        Fq r = 0, scale = 1;
        for (std::uint32_t i = 0; i < m_; ++i) {
            r += (p_ - a % p_) % p_ * scale;
            a /= p_;
            scale *= p_;
        }
        return r;
    }

    Fq sub(Fq a, Fq b) const { return add(a, neg(b)); }

    Fq mul(Fq a, Fq b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[(std::uint64_t{log_[a]} + log_[b]) % (q_ - 1)];
    }

    Fq inv(Fq a) const {
        if (a == 0) throw skew_error(errc::division_by_zero, "inverse of zero");
        return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
    }

    Fq div(Fq a, Fq b) const { return mul(a, inv(b)); }

    Fq pow(Fq a, long long k) const {
        if (a == 0) {
            if (k > 0) return 0;
            if (k == 0) return 1;
            throw skew_error(errc::division_by_zero, "negative power of zero");
        }
        const long long ord = q_ - 1;
        long long e = ((k % ord) + ord) % ord;
        return exp_[(std::uint64_t{log_[a]} * static_cast<std::uint64_t>(e)) % (q_ - 1)];
    }

    /// a^{p^j}; a field automorphism for every j, with frobenius(a, m) = a.
    Fq frobenius(Fq a, std::uint32_t j) const {
        if (a == 0) return 0;
        if (q_ == 2) return a;
        std::uint64_t e = 1;
        for (std::uint32_t i = 0; i < j; ++i) e = e * p_ % (q_ - 1);
        return exp_[(std::uint64_t{log_[a]} * e) % (q_ - 1)];
    }

    /// Discrete logarithm base c: c^{dlog(a)} = a. Throws LogOfZero.
    std::uint32_t dlog(Fq a) const {
        if (a == 0) throw skew_error(errc::log_of_zero, "dlog of zero");
        return log_[a];
    }

    /// c^k for 0 <= k < q-1.
    Fq exp(std::uint32_t k) const { return exp_[k % (q_ - 1)]; }

    /// Self-test: C(q-1, i) = (-1)^i in F_q, for every 0 <= i <= q-1.
    bool signed_binomial_check() const {
        // Factorials mod p for the per-digit binomials of Lucas' theorem.
        std::vector<std::uint32_t> fact(p_);
        fact[0] = 1;
        for (std::uint32_t i = 1; i < p_; ++i)
            fact[i] = static_cast<std::uint32_t>(std::uint64_t{fact[i - 1]} * i % p_);
        auto pow_mod_p = [&](std::uint64_t b, std::uint32_t e) {
            std::uint64_t r = 1;
            b %= p_;
            while (e) {
                if (e & 1) r = r * b % p_;
                b = b * b % p_;
                e >>= 1;
            }
            return static_cast<std::uint32_t>(r);
        };
        auto binom_digit = [&](std::uint32_t a, std::uint32_t b) -> std::uint32_t {
            if (b > a) return 0;
            std::uint64_t denom = std::uint64_t{fact[b]} * fact[a - b] % p_;
            return static_cast<std::uint32_t>(fact[a] * std::uint64_t{pow_mod_p(denom, p_ - 2)} % p_);
        };
        for (std::uint32_t i = 0; i <= q_ - 1; ++i) {
            std::uint32_t a = q_ - 1, b = i, binom = 1;
            while (b > 0 && binom != 0) {
                binom = static_cast<std::uint32_t>(
                    std::uint64_t{binom} * binom_digit(a % p_, b % p_) % p_);
                a /= p_;
                b /= p_;
            }
            const std::uint32_t want = (i % 2 == 0) ? 1u : (p_ - 1) % p_;
            if (binom != want) return false;
        }
        return true;
    }

    bool operator==(const FieldCtx& other) const noexcept {
        return p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_ &&
               c_ == other.c_;
    }
    bool operator!=(const FieldCtx& other) const noexcept { return !(*this == other); }

    std::string str() const {
        return "F_" + std::to_string(q_) + " (p=" + std::to_string(p_) +
               ", m=" + std::to_string(m_) + ")";
    }

private:
    FieldCtx(std::uint32_t p, std::uint32_t m, std::uint64_t max_q) : p_(p), m_(m) {
        if (!detail::is_prime_u32(p))
            throw skew_error(errc::not_prime, "p = " + std::to_string(p) + " is not prime",
                             {{"p", p}});
        if (m < 1)
            throw skew_error(errc::field_too_large, "extension degree must be >= 1",
                             {{"m", m}});
        std::uint64_t q = 1;
        for (std::uint32_t i = 0; i < m; ++i) {
            q *= p;
            if (q > max_q)
                throw skew_error(errc::field_too_large,
                                 "p^m exceeds the configured bound " + std::to_string(max_q),
                                 {{"p", p}, {"m", m}});
        }
        q_ = static_cast<std::uint32_t>(q);
        find_modulus();
        build_tables();
    }

    std::vector<std::uint32_t> encode_digits(Fq a) const {
        std::vector<std::uint32_t> d(m_);
        for (std::uint32_t i = 0; i < m_; ++i) {
            d[i] = a % p_;
            a /= p_;
        }
        return d;
    }

    Fq slow_mul(Fq a, Fq b) const {
        detail::PPoly fa = encode_digits(a), fb = encode_digits(b);
        detail::ppoly_trim(fa);
        detail::ppoly_trim(fb);
        detail::PPoly r = detail::ppoly_rem(detail::ppoly_mul(fa, fb, p_), modulus_, p_);
        Fq enc = 0, scale = 1;
        for (std::uint32_t i = 0; i < m_; ++i) {
            enc += (i < r.size() ? r[i] : 0) * scale;
            scale *= p_;
        }
        return enc;
    }

    // Smallest monic irreducible of degree m, scanning the encoding of the
    // non-leading coefficients ascending; irreducibility by trial division
    // against every monic polynomial of degree <= m/2.
    void find_modulus() {
        std::uint64_t cands = 1;
        for (std::uint32_t i = 0; i < m_; ++i) cands *= p_;
        for (std::uint64_t k = 0; k < cands; ++k) {
            detail::PPoly f(m_ + 1, 0);
            std::uint64_t t = k;
            for (std::uint32_t i = 0; i < m_; ++i) {
                f[i] = static_cast<std::uint32_t>(t % p_);
                t /= p_;
            }
            f[m_] = 1;
            if (is_irreducible(f)) {
                modulus_ = f;
                return;
            }
        }
        throw skew_error(errc::verification_failed, "no irreducible modulus found");
    }

    bool is_irreducible(const detail::PPoly& f) const {
        for (std::uint32_t d = 1; 2 * d <= m_; ++d) {
            std::uint64_t divisors = 1;
            for (std::uint32_t i = 0; i < d; ++i) divisors *= p_;
            for (std::uint64_t k = 0; k < divisors; ++k) {
                detail::PPoly g(d + 1, 0);
                std::uint64_t t = k;
                for (std::uint32_t i = 0; i < d; ++i) {
                    g[i] = static_cast<std::uint32_t>(t % p_);
                    t /= p_;
                }
                g[d] = 1;
                if (detail::ppoly_rem(f, g, p_).empty()) return false;
            }
        }
        return true;
    }

    void build_tables() {
        exp_.assign(q_ - 1, 0);
        log_.assign(q_, 0);
        for (Fq cand = 1; cand < q_; ++cand) {
            exp_[0] = 1;
            bool generator = true;
            Fq acc = 1;
            for (std::uint32_t k = 1; k < q_ - 1; ++k) {
                acc = slow_mul(acc, cand);
                if (acc == 1) {  // order k < q-1
                    generator = false;
                    break;
                }
                exp_[k] = acc;
            }
            if (generator && slow_mul(acc, cand) == 1) {
                c_ = cand;
                for (std::uint32_t k = 0; k < q_ - 1; ++k) log_[exp_[k]] = k;
                return;
            }
        }
        throw skew_error(errc::verification_failed, "no primitive element found");
    }

    std::uint32_t p_, m_, q_ = 0;
    std::vector<std::uint32_t> modulus_;
    Fq c_ = 0;
    std::vector<Fq> exp_;
    std::vector<std::uint32_t> log_;
};

/// Free-function spelling of FieldCtx::make.
inline FieldPtr field_new(std::uint32_t p, std::uint32_t m,
                          std::uint64_t max_q = default_field_cap) {
    return FieldCtx::make(p, m, max_q);
}

}  // namespace skewring
