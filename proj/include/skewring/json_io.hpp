// json_io.hpp
//
// JSON wire formats. Elements serialize as canonical integer encodings,
// matrices as row-major arrays, monomials as 1-based index words ([1,2,1] is
// x1*x2*x1, [] is 1). Morphisms and derivations serialize by their values at
// the primitive element, which determine (and revalidate) the full tables on
// parse. Emitted objects re-parse bit-exactly: keys are ordered, encodings
// are canonical.
//
//   field      {"p": 2, "m": 2, "modulus": [1,1,1], "c": 2}
//   morphism   {"field": F, "n": 2, "S": [[..],[..]]}  or  {"field": F, "n": 2, "exps": [0,1]}
//   ring       {"field": F, "n": 2, "sigma": {"S": ...} | {"exps": ...}, "delta": {"d0": [..]}}
//   poly       {"terms": [{"mono": [1,2], "coeff": 3}, ...]}
//   transform  {"A": [[..]], "lambda": [..], "src": ring, "tgt": ring}

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "skewring/classify.hpp"
#include "skewring/freering.hpp"
#include "skewring/gf.hpp"
#include "skewring/matfq.hpp"
#include "skewring/morphism.hpp"
#include "skewring/transform.hpp"

namespace skewring::io {

using json = nlohmann::json;

/// Schema violations and parse failures (CLI exit code 1, unlike domain errors).
struct bad_input : std::runtime_error {
    explicit bad_input(const std::string& what) : std::runtime_error(what) {}
};

namespace jdetail {
inline const json& need(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw bad_input(std::string("missing key \"") + key + "\"");
    return j.at(key);
}
inline std::uint64_t need_uint(const json& j, const char* key) {
    const json& v = need(j, key);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
        throw bad_input(std::string("key \"") + key + "\" must be a non-negative integer");
    return v.get<std::uint64_t>();
}
inline Fq element_from_json(const json& v, const FieldCtx& F, const char* what) {
    if (!v.is_number_integer() || v.get<long long>() < 0 ||
        v.get<std::uint64_t>() >= F.q())
        throw bad_input(std::string(what) + " is not an element encoding in [0, q)");
    return static_cast<Fq>(v.get<std::uint64_t>());
}
}  // namespace jdetail

inline json field_to_json(const FieldCtx& F) {
    return json{{"p", F.p()}, {"m", F.m()}, {"modulus", F.modulus()}, {"c", F.generator()}};
}

inline FieldPtr field_from_json(const json& j) {
    auto p = static_cast<std::uint32_t>(jdetail::need_uint(j, "p"));
    auto m = static_cast<std::uint32_t>(jdetail::need_uint(j, "m"));
    FieldPtr ctx = FieldCtx::make(p, m);
    if (j.contains("modulus") && j.at("modulus") != json(ctx->modulus()))
        throw bad_input("modulus does not match the canonical modulus for (p, m)");
    if (j.contains("c") && j.at("c") != json(ctx->generator()))
        throw bad_input("c does not match the canonical primitive element for (p, m)");
    return ctx;
}

inline json vector_to_json(const VecFq& v) {
    return json(v.entries());
}

inline VecFq vector_from_json(const json& j, const FieldPtr& ctx, std::size_t n,
                              const char* what = "vector") {
    if (!j.is_array() || j.size() != n)
        throw bad_input(std::string(what) + " must be an array of length n");
    VecFq v(ctx, n);
    for (std::size_t i = 0; i < n; ++i)
        v[i] = jdetail::element_from_json(j[i], *ctx, what);
    return v;
}

inline json matrix_to_json(const MatFq& A) {
    json rows = json::array();
    for (std::size_t i = 0; i < A.n(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < A.n(); ++j) row.push_back(A.at(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline MatFq matrix_from_json(const json& j, const FieldPtr& ctx, std::size_t n,
                              const char* what = "matrix") {
    if (!j.is_array() || j.size() != n)
        throw bad_input(std::string(what) + " must be an n x n array");
    MatFq A(ctx, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!j[i].is_array() || j[i].size() != n)
            throw bad_input(std::string(what) + " must be an n x n array");
        for (std::size_t k = 0; k < n; ++k)
            A.at(i, k) = jdetail::element_from_json(j[i][k], *ctx, what);
    }
    return A;
}

inline json morphism_to_json(const MatrixMorphism& sigma) {
    return json{{"field", field_to_json(*sigma.ctx())},
                {"n", sigma.n()},
                {"S", matrix_to_json(sigma.primitive_image())}};
}

/// Parses {"S": ...} or {"exps": ...} given the ambient field and dimension.
inline MatrixMorphism morphism_from_spec(const json& j, const FieldPtr& ctx,
                                         std::size_t n) {
    if (j.is_object() && j.contains("S"))
        return MatrixMorphism::from_primitive_image(
            ctx, n, matrix_from_json(j.at("S"), ctx, n, "S"));
    if (j.is_object() && j.contains("exps")) {
        const json& e = j.at("exps");
        if (!e.is_array() || e.size() != n)
            throw bad_input("exps must be an array of length n");
        DiagonalSpec spec;
        for (const auto& x : e) {
            if (!x.is_number_integer() || x.get<long long>() < 0)
                throw bad_input("exps entries must be non-negative integers");
            spec.exps.push_back(static_cast<std::uint32_t>(x.get<long long>()));
        }
        return MatrixMorphism::diagonal(ctx, n, spec);
    }
    throw bad_input("morphism spec needs \"S\" or \"exps\"");
}

inline MatrixMorphism morphism_from_json(const json& j) {
    FieldPtr ctx = field_from_json(jdetail::need(j, "field"));
    auto n = static_cast<std::size_t>(jdetail::need_uint(j, "n"));
    return morphism_from_spec(j, ctx, n);
}

inline json ring_to_json(const RingCtx& R) {
    return json{{"field", field_to_json(*R.field())},
                {"n", R.n()},
                {"sigma", {{"S", matrix_to_json(R.sigma().primitive_image())}}},
                {"delta", {{"d0", vector_to_json(R.delta()(R.field()->generator()))}}}};
}

inline RingPtr ring_from_json(const json& j) {
    FieldPtr ctx = field_from_json(jdetail::need(j, "field"));
    auto n = static_cast<std::size_t>(jdetail::need_uint(j, "n"));
    MatrixMorphism sigma = morphism_from_spec(jdetail::need(j, "sigma"), ctx, n);
    MatrixMorphism id = MatrixMorphism::identity_morphism(ctx, n);
    if (!j.contains("delta") || j.at("delta").is_null())
        return RingCtx::make(sigma, VecDerivation::zero(sigma, id));
    VecFq d0 = vector_from_json(jdetail::need(j.at("delta"), "d0"), ctx, n, "d0");
    return RingCtx::make(sigma, VecDerivation::from_primitive_image(sigma, id, d0));
}

inline json poly_to_json(const SkewPoly& F) {
    json terms = json::array();
    for (const auto& [m, c] : F.terms()) {
        json mono = json::array();
        for (std::uint8_t v : m) mono.push_back(v + 1);  // 1-based on the wire
        terms.push_back(json{{"mono", std::move(mono)}, {"coeff", c}});
    }
    return json{{"terms", std::move(terms)}};
}

inline SkewPoly poly_from_json(const json& j, const RingPtr& ring) {
    const json& terms = jdetail::need(j, "terms");
    if (!terms.is_array()) throw bad_input("terms must be an array");
    const FieldCtx& F = *ring->field();
    TermMap t;
    for (const json& term : terms) {
        const json& mono = jdetail::need(term, "mono");
        if (!mono.is_array()) throw bad_input("mono must be an array");
        Monomial m;
        for (const auto& v : mono) {
            if (!v.is_number_integer() || v.get<long long>() < 1 ||
                v.get<long long>() > static_cast<long long>(ring->n()))
                throw bad_input("mono entries must be 1-based variable indices");
            m.push_back(static_cast<std::uint8_t>(v.get<long long>() - 1));
        }
        Fq c = jdetail::element_from_json(jdetail::need(term, "coeff"), F, "coeff");
        detail::add_term(t, m, c, F);
    }
    return SkewPoly(ring, std::move(t));
}

inline json transform_to_json(const AffineTransform& t) {
    return json{{"A", matrix_to_json(t.matrix())},
                {"lambda", vector_to_json(t.translation())},
                {"src", ring_to_json(*t.src())},
                {"tgt", ring_to_json(*t.tgt())}};
}

inline AffineTransform transform_from_json(const json& j) {
    RingPtr src = ring_from_json(jdetail::need(j, "src"));
    MatFq A = matrix_from_json(jdetail::need(j, "A"), src->field(), src->n(), "A");
    VecFq lam = vector_from_json(jdetail::need(j, "lambda"), src->field(), src->n(),
                                 "lambda");
    if (j.contains("tgt"))
        return AffineTransform::make_checked(src, A, lam, ring_from_json(j.at("tgt")));
    return AffineTransform::make(src, A, lam);
}

inline json canonical_form_to_json(const CanonicalForm& cf) {
    return json{{"A", matrix_to_json(cf.A)},
                {"lambda", vector_to_json(cf.lam)},
                {"exps", cf.spec.exps}};
}

}  // namespace skewring::io
