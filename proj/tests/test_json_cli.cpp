#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "skewring/cli.hpp"
#include "skewring/json_io.hpp"
#include "skewring/random.hpp"

using namespace skewring;
using skewring::io::json;

TEST_CASE("field JSON round trip") {
    for (auto [p, m] : {std::pair{2u, 1u}, {2u, 2u}, {3u, 2u}, {2u, 4u}}) {
        auto f = field_new(p, m);
        json j = io::field_to_json(*f);
        REQUIRE(*io::field_from_json(j) == *f);
    }
    auto f4 = field_new(2, 2);
    REQUIRE(io::field_to_json(*f4) ==
            json({{"p", 2}, {"m", 2}, {"modulus", {1, 1, 1}}, {"c", 2}}));
    json wrong = io::field_to_json(*f4);
    wrong["modulus"] = {1, 0, 1};
    REQUIRE_THROWS_AS(io::field_from_json(wrong), io::bad_input);
}

TEST_CASE("ring and polynomial JSON round trips") {
    std::mt19937_64 rng(103);
    auto f4 = field_new(2, 2);
    RingPtr R = random_conjugated_ring(f4, DiagonalSpec{{1, 0}}, rng);
    json jr = io::ring_to_json(*R);
    RingPtr back = io::ring_from_json(jr);
    REQUIRE(*back == *R);

    auto f25 = field_new(5, 2);
    RingPtr R25 = random_conjugated_ring(f25, DiagonalSpec{{1, 0}}, rng);
    REQUIRE(*io::ring_from_json(io::ring_to_json(*R25)) == *R25);

    for (int k = 0; k < 30; ++k) {
        SkewPoly F = random_poly(R, rng, 4, 6);
        SkewPoly G = io::poly_from_json(io::poly_to_json(F), back);
        REQUIRE(G == F);
    }
    // 1-based monomials on the wire
    SkewPoly w = SkewPoly::monomial(R, {0, 1}, 1);
    REQUIRE(io::poly_to_json(w) ==
            json({{"terms", {{{"mono", {1, 2}}, {"coeff", 1}}}}}));
}

TEST_CASE("transform JSON round trip") {
    std::mt19937_64 rng(107);
    auto f9 = field_new(3, 2);
    RingPtr R = random_conjugated_ring(f9, DiagonalSpec{{1, 0}}, rng);
    AffineTransform t = AffineTransform::make(
        R, random_invertible_matrix(f9, 2, rng), random_vector(f9, 2, rng));
    json jt = io::transform_to_json(t);
    AffineTransform back = io::transform_from_json(jt);
    REQUIRE(back.matrix() == t.matrix());
    REQUIRE(back.translation() == t.translation());
    REQUIRE(same_ring(back.src(), t.src()));
    REQUIRE(same_ring(back.tgt(), t.tgt()));
    SkewPoly F = random_poly(R, rng, 3, 4);
    REQUIRE(back.apply(F) == t.apply(F));
}

namespace {
int run(const char* command, const json& payload, json& out) {
    return cli::run_problem(command, payload, out);
}
}

TEST_CASE("cli canonicalize matches the worked example") {
    json payload = {{"field", {{"p", 2}, {"m", 2}}},
                    {"n", 1},
                    {"sigma", {{"S", {{3}}}}},
                    {"delta", {{"d0", {2}}}}};
    json out;
    REQUIRE(run("canonicalize", payload, out) == 0);
    REQUIRE(out == json({{"A", {{1}}}, {"lambda", {2}}, {"exps", {1}}}));
}

TEST_CASE("cli classify reproduces the non-similar morphism pair") {
    json payload = {
        {"r1", {{"field", {{"p", 2}, {"m", 4}}}, {"n", 2}, {"sigma", {{"exps", {2, 2}}}}}},
        {"r2", {{"field", {{"p", 2}, {"m", 4}}}, {"n", 2}, {"sigma", {{"exps", {0, 0}}}}}}};
    json out;
    REQUIRE(run("classify", payload, out) == 0);
    REQUIRE(out.at("isomorphic") == json(false));
    REQUIRE(out.at("classes") == json({{2, 2}, {0, 0}}));
    REQUIRE_FALSE(out.contains("witness"));
}

TEST_CASE("cli classify emits a re-parseable witness for isomorphic rings") {
    json ring1 = {{"field", {{"p", 2}, {"m", 2}}}, {"n", 2}, {"sigma", {{"exps", {1, 0}}}}};
    json ring2 = {{"field", {{"p", 2}, {"m", 2}}}, {"n", 2}, {"sigma", {{"exps", {0, 1}}}}};
    json out;
    REQUIRE(run("classify", json({{"r1", ring1}, {"r2", ring2}}), out) == 0);
    REQUIRE(out.at("isomorphic") == json(true));
    AffineTransform w = io::transform_from_json(out.at("witness"));
    REQUIRE(*w.src() == *io::ring_from_json(ring1));
    REQUIRE(*w.tgt() == *io::ring_from_json(ring2));
}

TEST_CASE("cli evaluate, multiply, vanishing") {
    json ring = {{"field", {{"p", 2}, {"m", 1}}}, {"n", 2}, {"sigma", {{"exps", {0, 0}}}}};
    json out;
    REQUIRE(run("evaluate",
                json({{"ring", ring},
                      {"F", {{"terms", {{{"mono", {1, 2}}, {"coeff", 1}}}}}},
                      {"point", {1, 1}}}),
                out) == 0);
    REQUIRE(out == json({{"value", 1}}));

    json f4ring = {{"field", {{"p", 2}, {"m", 2}}}, {"n", 1}, {"sigma", {{"exps", {1}}}}};
    REQUIRE(run("multiply",
                json({{"ring", f4ring},
                      {"F", {{"terms", {{{"mono", {1}}, {"coeff", 1}}}}}},
                      {"G", {{"terms", {{{"mono", json::array()}, {"coeff", 2}}}}}}}),
                out) == 0);
    REQUIRE(out == json({{"product",
                          {{"terms", {{{"mono", {1}}, {"coeff", 3}}}}}}}));  // x c = c^2 x

    REQUIRE(run("vanishing",
                json({{"ring", ring},
                      {"F",
                       {{"terms",
                         {{{"mono", {1, 2}}, {"coeff", 1}},
                          {{"mono", {2, 1}}, {"coeff", 1}}}}}}}),
                out) == 0);
    REQUIRE(out == json({{"vanishing", true}}));
}

TEST_CASE("cli verify commands and structured witnesses") {
    json good = {{"field", {{"p", 2}, {"m", 2}}}, {"n", 1}, {"S", {{3}}}};
    json out;
    REQUIRE(run("verify-morphism", good, out) == 0);
    REQUIRE(out.at("valid") == json(true));

    json bad = {{"field", {{"p", 2}, {"m", 2}}}, {"n", 1}, {"S", {{1}}}};
    REQUIRE(run("verify-morphism", bad, out) == 2);
    REQUIRE(out.at("error") == json("AdditivityViolation"));
    REQUIRE(out.at("witness").contains("a"));
    REQUIRE(out.at("witness").contains("b"));

    json deriv = {{"field", {{"p", 2}, {"m", 2}}},
                  {"n", 1},
                  {"sigma", {{"exps", {1}}}},
                  {"tau", "id"},
                  {"d0", {2}}};
    REQUIRE(run("verify-derivation", deriv, out) == 0);
    REQUIRE(out == json({{"valid", true}}));
    REQUIRE(run("inner-vector", deriv, out) == 0);
    REQUIRE(out == json({{"lambda", {2}}}));

    json selfpair = deriv;
    selfpair["tau"] = {{"exps", {1}}};
    REQUIRE(run("verify-derivation", selfpair, out) == 2);
    REQUIRE((out.at("error") == json("LeibnizViolation") ||
             out.at("error") == json("AdditivityViolation")));
}

TEST_CASE("cli diagonalize") {
    // sigma(c) = [[c,1],[0,c^2]] over F_4: exponents (0,1)
    json payload = {{"field", {{"p", 2}, {"m", 2}}},
                    {"n", 2},
                    {"S", {{2, 1}, {0, 3}}}};
    json out;
    REQUIRE(run("diagonalize", payload, out) == 0);
    REQUIRE(out.at("exps") == json({0, 1}));
    auto f4 = field_new(2, 2);
    MatFq A = io::matrix_from_json(out.at("A"), f4, 2);
    REQUIRE_NOTHROW(mat_inv(A));
}

TEST_CASE("cli transform applies and reports the derived target") {
    std::mt19937_64 rng(109);
    auto f4 = field_new(2, 2);
    RingPtr R = random_conjugated_ring(f4, DiagonalSpec{{1, 0}}, rng);
    AffineTransform t = AffineTransform::make(
        R, random_invertible_matrix(f4, 2, rng), random_vector(f4, 2, rng));
    SkewPoly F = random_poly(R, rng, 3, 4);
    json payload = {{"transform", io::transform_to_json(t)},
                    {"F", io::poly_to_json(F)}};
    json out;
    REQUIRE(run("transform", payload, out) == 0);
    REQUIRE(io::poly_from_json(out.at("image"), t.tgt()) == t.apply(F));
    REQUIRE(*io::ring_from_json(out.at("tgt")) == *t.tgt());
}

TEST_CASE("cli error handling and determinism") {
    json out;
    SECTION("malformed input: missing keys") {
        REQUIRE(run("canonicalize", json({{"field", {{"p", 2}, {"m", 2}}}}), out) == 1);
        REQUIRE(out.at("error") == json("MalformedInput"));
    }
    SECTION("unknown command") {
        REQUIRE(run("frobnicate", json::object(), out) == 1);
        REQUIRE(out.at("error") == json("MalformedInput"));
    }
    SECTION("embedded command key must match") {
        json payload = {{"command", "evaluate"}};
        REQUIRE(run("multiply", payload, out) == 1);
    }
    SECTION("byte-identical output for identical input") {
        json payload = {{"field", {{"p", 2}, {"m", 2}}},
                        {"n", 1},
                        {"sigma", {{"S", {{3}}}}},
                        {"delta", {{"d0", {2}}}}};
        json o1, o2;
        REQUIRE(run("canonicalize", payload, o1) == 0);
        REQUIRE(run("canonicalize", payload, o2) == 0);
        REQUIRE(o1.dump() == o2.dump());
    }
}
