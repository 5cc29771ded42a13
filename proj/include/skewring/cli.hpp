// cli.hpp
//
// Command dispatch behind the skewring binary. Each command takes one JSON
// problem document and produces one JSON result; library errors surface as
// {"error": code, "witness": ...} with exit code 2, schema problems as
// {"error": "MalformedInput", ...} with exit code 1.

#pragma once

#include <cstdint>
#include <string>

#include "skewring/json_io.hpp"

namespace skewring::cli {

using io::json;

inline json classes_to_json(const std::vector<std::uint32_t>& c) { return json(c); }

inline json dispatch(const std::string& command, const json& payload, std::uint64_t seed) {
    if (command == "verify-morphism") {
        MatrixMorphism sigma = io::morphism_from_json(payload);
        return json{{"valid", true}, {"n", sigma.n()},
                    {"field", io::field_to_json(*sigma.ctx())}};
    }
    if (command == "verify-derivation" || command == "inner-vector") {
        FieldPtr ctx = io::field_from_json(io::jdetail::need(payload, "field"));
        auto n = static_cast<std::size_t>(io::jdetail::need_uint(payload, "n"));
        MatrixMorphism sigma =
            io::morphism_from_spec(io::jdetail::need(payload, "sigma"), ctx, n);
        MatrixMorphism tau =
            (payload.contains("tau") && payload.at("tau") != json("id"))
                ? io::morphism_from_spec(payload.at("tau"), ctx, n)
                : MatrixMorphism::identity_morphism(ctx, n);
        VecFq d0 = io::vector_from_json(io::jdetail::need(payload, "d0"), ctx, n, "d0");
        VecDerivation delta = VecDerivation::from_primitive_image(sigma, tau, d0);
        if (command == "verify-derivation") return json{{"valid", true}};
        return json{{"lambda", io::vector_to_json(inner_vector(delta))}};
    }
    if (command == "diagonalize") {
        MatrixMorphism sigma = io::morphism_from_json(payload);
        MorphismDiagonalization dm = diagonalize_morphism(sigma);
        return json{{"A", io::matrix_to_json(dm.A)}, {"exps", dm.spec.exps}};
    }
    if (command == "canonicalize") {
        RingPtr ring = io::ring_from_json(payload);
        return io::canonical_form_to_json(canonical_form(ring, seed));
    }
    if (command == "classify") {
        RingPtr r1 = io::ring_from_json(io::jdetail::need(payload, "r1"));
        RingPtr r2 = io::ring_from_json(io::jdetail::need(payload, "r2"));
        json classes = json::array(
            {classes_to_json(isomorphism_class(r1)), classes_to_json(isomorphism_class(r2))});
        IsomorphismResult res = isomorphic(r1, r2);
        json out{{"isomorphic", res.isomorphic}, {"classes", std::move(classes)}};
        if (res.witness) out["witness"] = io::transform_to_json(*res.witness);
        return out;
    }
    if (command == "evaluate") {
        RingPtr ring = io::ring_from_json(io::jdetail::need(payload, "ring"));
        SkewPoly F = io::poly_from_json(io::jdetail::need(payload, "F"), ring);
        VecFq a = io::vector_from_json(io::jdetail::need(payload, "point"), ring->field(),
                                       ring->n(), "point");
        return json{{"value", evaluate(F, a)}};
    }
    if (command == "multiply") {
        RingPtr ring = io::ring_from_json(io::jdetail::need(payload, "ring"));
        SkewPoly F = io::poly_from_json(io::jdetail::need(payload, "F"), ring);
        SkewPoly G = io::poly_from_json(io::jdetail::need(payload, "G"), ring);
        return json{{"product", io::poly_to_json(poly_mul(F, G))}};
    }
    if (command == "transform") {
        AffineTransform t =
            io::transform_from_json(io::jdetail::need(payload, "transform"));
        SkewPoly F = io::poly_from_json(io::jdetail::need(payload, "F"), t.src());
        return json{{"image", io::poly_to_json(t.apply(F))},
                    {"tgt", io::ring_to_json(*t.tgt())}};
    }
    if (command == "vanishing") {
        RingPtr ring = io::ring_from_json(io::jdetail::need(payload, "ring"));
        SkewPoly F = io::poly_from_json(io::jdetail::need(payload, "F"), ring);
        std::uint64_t bound = payload.contains("bound")
                                  ? io::jdetail::need_uint(payload, "bound")
                                  : default_point_bound;
        return json{{"vanishing", is_vanishing(F, bound)}};
    }
    throw io::bad_input("unknown command \"" + command + "\"");
}

/// Runs one problem; returns the process exit code and fills `out`.
inline int run_problem(const std::string& command, const json& payload, json& out,
                       std::uint64_t seed = 1) {
    try {
        if (payload.is_object() && payload.contains("command") &&
            payload.at("command") != json(command))
            throw io::bad_input("document command does not match the subcommand");
        out = dispatch(command, payload, seed);
        return 0;
    } catch (const skew_error& e) {
        json witness = json::object();
        for (const auto& [k, v] : e.witness()) witness[k] = v;
        out = json{{"error", e.code()}, {"witness", std::move(witness)},
                   {"detail", e.what()}};
        return 2;
    } catch (const io::bad_input& e) {
        out = json{{"error", "MalformedInput"}, {"detail", e.what()}};
        return 1;
    } catch (const json::exception& e) {
        out = json{{"error", "MalformedInput"}, {"detail", e.what()}};
        return 1;
    }
}

}  // namespace skewring::cli
