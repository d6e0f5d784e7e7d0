#include <cmath>
#include <random>

#include <doctest.h>

#include "cssx/errors.hpp"
#include "cssx/generate.hpp"
#include "cssx/linalg.hpp"
#include "cssx/matrix.hpp"
#include "test_util.hpp"

using namespace cssx;
using cssx::testutil::max_abs_diff;
using cssx::testutil::orthonormality_defect;
using cssx::testutil::reconstruct;

TEST_SUITE("linalg") {

TEST_CASE("svd of a diagonal matrix is exact") {
    auto f = svd(DenseMatrix::diagonal({3.0, 2.0, 1.0}));
    REQUIRE(f.rank == 3);
    CHECK(f.sigma[0] == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(f.sigma[1] == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(f.sigma[2] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(max_abs_diff(f.u, DenseMatrix::identity(3)) < 1e-14);
    CHECK(max_abs_diff(f.v, DenseMatrix::identity(3)) < 1e-14);
}

TEST_CASE("svd of a permutation matrix has unit singular values") {
    auto f = svd(DenseMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}}));
    REQUIRE(f.rank == 2);
    CHECK(f.sigma[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(f.sigma[1] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("svd reconstructs a random 5x4 matrix") {
    DenseMatrix a = gaussian_matrix(5, 4, 17);
    auto f = svd(a);
    CHECK(frobenius_norm(subtract(a, reconstruct(f))) <= 1e-10 * frobenius_norm(a));
}

TEST_CASE("svd rejects the zero matrix") {
    CHECK_THROWS_AS(svd(DenseMatrix(3, 3)), ZeroMatrixError);
}

TEST_CASE("svd invariants on random inputs") {
    // gaussian, rank-deficient, wide, and badly scaled shapes
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        std::mt19937_64 shape_gen(seed * 7919 + 3);
        std::size_t m = 1 + shape_gen() % 30;
        std::size_t n = 1 + shape_gen() % 25;
        DenseMatrix a = gaussian_matrix(m, n, seed);
        if (seed % 5 == 1 && std::min(m, n) > 2) {
            std::size_t r = 1 + shape_gen() % (std::min(m, n) - 1);
            a = matmul(gaussian_matrix(m, r, seed + 1000), gaussian_matrix(r, n, seed + 2000));
        }
        if (seed % 7 == 2) a = a.scaled(1e6);

        auto f = svd(a);
        CHECK(orthonormality_defect(f.u) <= 1e-10 * static_cast<double>(f.rank));
        CHECK(orthonormality_defect(f.v) <= 1e-10 * static_cast<double>(f.rank));
        CHECK(frobenius_norm(subtract(a, reconstruct(f))) <= 1e-10 * frobenius_norm(a));
        for (std::size_t i = 0; i + 1 < f.rank; ++i) CHECK(f.sigma[i] >= f.sigma[i + 1]);
        CHECK(f.sigma.back() > 0.0);
        // sign convention: the dominant entry of each right singular vector
        for (std::size_t j = 0; j < f.rank; ++j) {
            double best = 0.0;
            for (std::size_t i = 0; i < f.v.rows(); ++i)
                if (std::abs(f.v(i, j)) > std::abs(best)) best = f.v(i, j);
            CHECK(best >= 0.0);
        }
    }
}

TEST_CASE("svd detects numerical rank of an exact product") {
    DenseMatrix a = matmul(gaussian_matrix(10, 3, 5), gaussian_matrix(3, 8, 6));
    CHECK(svd(a).rank == 3);
}

TEST_CASE("spectral norm examples") {
    CHECK(spectral_norm(DenseMatrix::diagonal({3.0, 2.0, 1.0})) == doctest::Approx(3.0));
    CHECK(spectral_norm(DenseMatrix(2, 3)) == 0.0);
    CHECK(spectral_norm(DenseMatrix::from_rows({{1.0, 1.0}, {1.0, 1.0}})) ==
          doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("frobenius norm examples") {
    CHECK(frobenius_norm(DenseMatrix::diagonal({3.0, 2.0, 1.0})) ==
          doctest::Approx(std::sqrt(14.0)));
    CHECK(frobenius_norm(DenseMatrix(4, 2)) == 0.0);
    CHECK(frobenius_norm(DenseMatrix::from_rows({{1.0, 1.0}, {1.0, 1.0}})) == doctest::Approx(2.0));
}

TEST_CASE("norm sandwich on random matrices") {
    for (std::uint64_t seed = 100; seed < 110; ++seed) {
        DenseMatrix a = gaussian_matrix(8, 6, seed);
        double s = spectral_norm(a), fro = frobenius_norm(a);
        CHECK(s <= fro * (1.0 + 1e-12));
        CHECK(fro <= std::sqrt(6.0) * s * (1.0 + 1e-12));
    }
}

TEST_CASE("pseudoinverse of a diagonal matrix") {
    DenseMatrix p = pseudoinverse(DenseMatrix::diagonal({2.0, 4.0}));
    CHECK(p(0, 0) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(p(1, 1) == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(std::abs(p(0, 1)) < 1e-15);
}

TEST_CASE("pseudoinverse of a column vector") {
    DenseMatrix a(2, 1, {3.0, 4.0});
    DenseMatrix p = pseudoinverse(a);
    REQUIRE(p.rows() == 1);
    REQUIRE(p.cols() == 2);
    CHECK(p(0, 0) == doctest::Approx(3.0 / 25.0).epsilon(1e-13));
    CHECK(p(0, 1) == doctest::Approx(4.0 / 25.0).epsilon(1e-13));
}

TEST_CASE("pseudoinverse of orthonormal columns is the transpose") {
    DenseMatrix q = svd(gaussian_matrix(6, 3, 9)).u;  // orthonormal 6x3
    CHECK(max_abs_diff(pseudoinverse(q), q.transposed()) < 1e-12);
}

TEST_CASE("pseudoinverse of the zero matrix is zero") {
    DenseMatrix p = pseudoinverse(DenseMatrix(3, 2));
    CHECK(p.rows() == 2);
    CHECK(p.cols() == 3);
    CHECK(frobenius_norm(p) == 0.0);
}

TEST_CASE("Moore-Penrose identities on random matrices") {
    for (std::uint64_t seed = 40; seed < 48; ++seed) {
        DenseMatrix a = gaussian_matrix(7, 5, seed);
        if (seed % 2 == 0)
            a = matmul(gaussian_matrix(7, 3, seed + 1), gaussian_matrix(3, 5, seed + 2));
        DenseMatrix p = pseudoinverse(a);
        CHECK(frobenius_norm(subtract(matmul(a, matmul(p, a)), a)) <= 1e-8 * frobenius_norm(a));
        CHECK(frobenius_norm(subtract(matmul(p, matmul(a, p)), p)) <= 1e-8 * frobenius_norm(p));
    }
}

TEST_CASE("projection residual on a diagonal matrix") {
    DenseMatrix a = DenseMatrix::diagonal({3.0, 2.0, 1.0});
    std::vector<std::size_t> first{0};
    CHECK(projection_residual(a, first, Norm::frobenius) ==
          doctest::Approx(std::sqrt(5.0)).epsilon(1e-13));
    CHECK(projection_residual(a, first, Norm::spectral) == doctest::Approx(2.0).epsilon(1e-13));
    std::vector<std::size_t> all{0, 1, 2};
    CHECK(projection_residual(a, all, Norm::frobenius) < 1e-12);
    CHECK(projection_residual(a, all, Norm::spectral) < 1e-12);
}

TEST_CASE("projection residual rejects duplicates and bad indices") {
    DenseMatrix a = DenseMatrix::diagonal({3.0, 2.0, 1.0});
    std::vector<std::size_t> dup{1, 1};
    CHECK_THROWS_AS(projection_residual(a, dup, Norm::frobenius), InvalidSelectionError);
    std::vector<std::size_t> oob{5};
    CHECK_THROWS_AS(projection_residual(a, oob, Norm::frobenius), InvalidSelectionError);
}

TEST_CASE("projection residual is invariant under positive column rescaling") {
    for (std::uint64_t seed = 60; seed < 64; ++seed) {
        DenseMatrix a = gaussian_matrix(9, 7, seed);
        std::vector<std::size_t> sel{1, 4, 6};
        double base = projection_residual(a, sel, Norm::frobenius);

        DenseMatrix scaled = a;
        std::mt19937_64 gen(seed);
        for (std::size_t j : sel) {
            double s = 0.25 + (gen() % 1000) / 250.0;
            for (std::size_t i = 0; i < a.rows(); ++i) scaled(i, j) *= s;
        }
        CHECK(projection_residual(scaled, sel, Norm::frobenius) ==
              doctest::Approx(base).epsilon(1e-10));
    }
}

TEST_CASE("projection residual never beats the best rank-k residual") {
    for (std::uint64_t seed = 70; seed < 76; ++seed) {
        DenseMatrix a = gaussian_matrix(8, 6, seed);
        auto f = svd(a);
        std::mt19937_64 gen(seed);
        for (int rep = 0; rep < 5; ++rep) {
            std::size_t k = 1 + gen() % 4;
            std::vector<std::size_t> pool{0, 1, 2, 3, 4, 5};
            for (std::size_t i = 0; i < k; ++i)
                std::swap(pool[i], pool[i + gen() % (6 - i)]);
            std::vector<std::size_t> sel(pool.begin(), pool.begin() + k);
            for (Norm norm : {Norm::frobenius, Norm::spectral}) {
                CHECK(projection_residual(a, sel, norm) >=
                      best_rank_k_residual(f, k, norm) * (1.0 - 1e-10));
            }
        }
    }
}

TEST_CASE("best rank-k residual from the singular values") {
    auto f = svd(DenseMatrix::diagonal({3.0, 2.0, 1.0}));
    CHECK(best_rank_k_residual(f, 1, Norm::frobenius) ==
          doctest::Approx(std::sqrt(5.0)).epsilon(1e-14));
    CHECK(best_rank_k_residual(f, 2, Norm::spectral) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(best_rank_k_residual(f, 3, Norm::frobenius) == 0.0);
    CHECK(best_rank_k_residual(f, 3, Norm::spectral) == 0.0);
    CHECK(best_rank_k_residual(f, 7, Norm::frobenius) == 0.0);
}

}  // TEST_SUITE
