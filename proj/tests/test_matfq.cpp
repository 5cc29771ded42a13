#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "skewring/matfq.hpp"
#include "skewring/random.hpp"
#include "support/oracles.hpp"

using namespace skewring;

namespace {
bool code_is(const skew_error& e, const char* c) { return e.code() == c; }

MatFq from_rows(const FieldPtr& f, std::vector<std::vector<Fq>> rows) {
    MatFq A(f, rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows.size(); ++j) A.at(i, j) = rows[i][j];
    return A;
}

VecFq vec(const FieldPtr& f, std::vector<Fq> v) { return VecFq(f, std::move(v)); }
}

TEST_CASE("matrix arithmetic golden values") {
    auto f2 = field_new(2, 1);
    MatFq I = MatFq::identity(f2, 2);
    REQUIRE(mat_pow(I, 7) == I);

    MatFq U = from_rows(f2, {{1, 1}, {0, 1}});
    REQUIRE(mat_mul(U, U) == I);  // char 2
    REQUIRE(mat_inv(U) == U);     // self-inverse
    REQUIRE(mat_inv(I) == I);
    REQUIRE(mat_pow(U, 0) == I);

    VecFq v = vec(f2, {1, 0});
    REQUIRE(mat_vec(I, v) == v);

    REQUIRE_THROWS_MATCHES(mat_inv(MatFq(f2, 2)), skew_error,
                           Catch::Matchers::Predicate<skew_error>(
                               [](const skew_error& e) { return code_is(e, errc::singular); }));
    REQUIRE_THROWS_MATCHES(mat_mul(I, MatFq(f2, 3)), skew_error,
                           Catch::Matchers::Predicate<skew_error>([](const skew_error& e) {
                               return code_is(e, errc::dimension_mismatch);
                           }));
}

TEST_CASE("inverse round trip on random invertible matrices") {
    std::mt19937_64 rng(11);
    for (auto [p, m] : {std::pair{2u, 1u}, {2u, 2u}, {3u, 2u}, {5u, 1u}}) {
        auto f = field_new(p, m);
        for (std::size_t n = 1; n <= 4; ++n)
            for (int k = 0; k < 25; ++k) {
                MatFq A = random_invertible_matrix(f, n, rng);
                REQUIRE(mat_mul(A, mat_inv(A)).is_identity());
            }
    }
}

TEST_CASE("char_poly golden values") {
    auto f2 = field_new(2, 1);
    REQUIRE(char_poly(MatFq::identity(f2, 2)) == std::vector<Fq>{1, 0, 1});  // (t-1)^2
    REQUIRE(char_poly(from_rows(f2, {{0, 1}, {1, 1}})) == std::vector<Fq>{1, 1, 1});

    auto f4 = field_new(2, 2);
    const Fq c = f4->generator(), c2 = f4->mul(c, c);
    MatFq D = MatFq::diag(vec(f4, {c, c2}));
    // (t - c)(t - c^2) = t^2 - (c + c^2) t + c^3 = t^2 + t + 1 over F_4
    REQUIRE(char_poly(D) == std::vector<Fq>{1, 1, 1});
}

TEST_CASE("char_poly agrees with the Laplace oracle") {
    SECTION("exhaustive 2x2 over F_2 and F_3") {
        for (auto [p, m] : {std::pair{2u, 1u}, {3u, 1u}}) {
            auto f = field_new(p, m);
            const std::uint32_t q = f->q();
            for (std::uint32_t code = 0; code < q * q * q * q; ++code) {
                std::uint32_t t = code;
                MatFq A(f, 2);
                for (std::size_t i = 0; i < 2; ++i)
                    for (std::size_t j = 0; j < 2; ++j) {
                        A.at(i, j) = t % q;
                        t /= q;
                    }
                REQUIRE(oracles::poly_eq(char_poly(A), oracles::naive_char_poly(A)));
            }
        }
    }
    SECTION("random 3x3..5x5 over F_4, F_8, F_9") {
        std::mt19937_64 rng(23);
        for (auto [p, m] : {std::pair{2u, 2u}, {2u, 3u}, {3u, 2u}}) {
            auto f = field_new(p, m);
            for (std::size_t n = 3; n <= 5; ++n)
                for (int k = 0; k < 60; ++k) {
                    MatFq A = random_matrix(f, n, rng);
                    REQUIRE(oracles::poly_eq(char_poly(A), oracles::naive_char_poly(A)));
                }
        }
    }
    SECTION("up to 8x8, the expected working size") {
        std::mt19937_64 rng(27);
        auto f9 = field_new(3, 2);
        for (std::size_t n = 6; n <= 8; ++n)
            for (int k = 0; k < 5; ++k) {
                MatFq A = random_matrix(f9, n, rng);
                REQUIRE(oracles::poly_eq(char_poly(A), oracles::naive_char_poly(A)));
            }
    }
}

TEST_CASE("kernel_basis golden values and RREF convention") {
    auto f2 = field_new(2, 1);
    SECTION("zero matrix: standard basis") {
        auto kb = kernel_basis(MatFq(f2, 3));
        REQUIRE(kb.size() == 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) REQUIRE(kb[i][j] == (i == j ? 1u : 0u));
    }
    SECTION("identity: empty kernel") {
        REQUIRE(kernel_basis(MatFq::identity(f2, 2)).empty());
    }
    SECTION("F_2 all-ones 2x2: single vector (1,1)") {
        auto kb = kernel_basis(from_rows(f2, {{1, 1}, {1, 1}}));
        REQUIRE(kb.size() == 1);
        REQUIRE(kb[0].entries() == std::vector<Fq>{1, 1});
    }
    SECTION("kernel vectors annihilate the matrix") {
        std::mt19937_64 rng(31);
        auto f9 = field_new(3, 2);
        for (int k = 0; k < 50; ++k) {
            MatFq A = random_matrix(f9, 4, rng);
            auto kb = kernel_basis(A);
            for (const auto& v : kb) REQUIRE(mat_vec(A, v).is_zero());
            // the RREF convention is deterministic: recomputation is identical
            auto again = kernel_basis(A);
            REQUIRE(again.size() == kb.size());
            for (std::size_t i = 0; i < kb.size(); ++i) REQUIRE(again[i] == kb[i]);
        }
    }
}

TEST_CASE("eigen_diagonalize golden cases") {
    auto f4 = field_new(2, 2);
    const Fq c = f4->generator(), c2 = f4->mul(c, c);

    SECTION("already diagonal, eigenvalues sorted ascending by encoding") {
        MatFq S = MatFq::diag(vec(f4, {c, 1}));
        auto ed = eigen_diagonalize(S);
        REQUIRE(ed.eigenvalues.entries() == std::vector<Fq>{1, c});
        REQUIRE(mat_mul(S, ed.basis) == mat_mul(ed.basis, MatFq::diag(ed.eigenvalues)));
    }
    SECTION("F_4 upper triangular [[c,1],[0,c^2]]") {
        MatFq S(f4, 2);
        S.at(0, 0) = c;
        S.at(0, 1) = 1;
        S.at(1, 1) = c2;
        auto ed = eigen_diagonalize(S);
        REQUIRE(ed.eigenvalues.entries() == std::vector<Fq>{c, c2});
        // eigenvector for c is (1,0); for c^2 it is (x,1) with (c+c^2)x = 1, so x = 1
        REQUIRE(ed.basis == from_rows(f4, {{1, 1}, {0, 1}}));
        REQUIRE(mat_mul(mat_mul(ed.basis, MatFq::diag(ed.eigenvalues)),
                        mat_inv(ed.basis)) == S);
    }
}

TEST_CASE("eigen_diagonalize error cases") {
    auto f2 = field_new(2, 1);
    REQUIRE_THROWS_MATCHES(eigen_diagonalize(from_rows(f2, {{1, 1}, {1, 1}})), skew_error,
                           Catch::Matchers::Predicate<skew_error>([](const skew_error& e) {
                               return code_is(e, errc::not_diagonalizable);
                           }));
    // t^2 + t + 1 is irreducible over F_2: no eigenvalues in the field
    REQUIRE_THROWS_MATCHES(eigen_diagonalize(from_rows(f2, {{0, 1}, {1, 1}})), skew_error,
                           Catch::Matchers::Predicate<skew_error>([](const skew_error& e) {
                               return code_is(e, errc::eigenvalue_outside_field);
                           }));
    // diagonalizable over F_27 but not over F_3
    auto f3 = field_new(3, 1);
    REQUIRE_THROWS_MATCHES(
        eigen_diagonalize(from_rows(f3, {{0, 0, 2}, {1, 0, 1}, {0, 1, 0}})), skew_error,
        Catch::Matchers::Predicate<skew_error>([](const skew_error& e) {
            return code_is(e, errc::eigenvalue_outside_field);
        }));
}

TEST_CASE("planted diagonalizations are recovered exactly") {
    std::mt19937_64 rng(41);
    for (auto [p, m] : {std::pair{2u, 2u}, {3u, 2u}, {2u, 3u}}) {
        auto f = field_new(p, m);
        for (std::size_t n = 2; n <= 3; ++n)
            for (int k = 0; k < 40; ++k) {
                VecFq d = random_vector(f, n, rng);
                for (std::size_t i = 0; i < n; ++i)
                    if (d[i] == 0) d[i] = 1;
                MatFq A = random_invertible_matrix(f, n, rng);
                MatFq S = mat_mul(mat_mul(A, MatFq::diag(d)), mat_inv(A));
                auto ed = eigen_diagonalize(S);
                std::vector<Fq> got = ed.eigenvalues.entries();
                std::vector<Fq> want = d.entries();
                std::sort(got.begin(), got.end());
                std::sort(want.begin(), want.end());
                REQUIRE(got == want);
                // char_poly of a conjugate equals prod (t - d_i)
                oracles::Poly prod{1};
                for (std::size_t i = 0; i < n; ++i)
                    prod = oracles::poly_mul(*f, prod, {f->neg(d[i]), 1});
                REQUIRE(oracles::poly_eq(char_poly(S), prod));
            }
    }
}
