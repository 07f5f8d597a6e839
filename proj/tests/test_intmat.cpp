#include <sln/intmat.hpp>

#include <catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"

using namespace sln;

namespace {
IntMatrix random_matrix(std::mt19937& rng, int rows, int cols, int lo, int hi) {
    IntMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m(r, c) = static_cast<long>(rng() % (hi - lo + 1)) + lo;
    return m;
}
}  // namespace

TEST_CASE("smith normal form frozen examples") {
    IntMatrix id = IntMatrix::identity(3);
    auto s0 = smith_normal_form_checked(id);
    CHECK(s0.d == id);

    IntMatrix m(2, 2);
    m(0, 0) = 2;
    m(1, 1) = 3;
    auto s1 = smith_normal_form_checked(m);
    REQUIRE(s1.divisors.size() == 2);
    CHECK(s1.divisors[0] == 1);
    CHECK(s1.divisors[1] == 6);

    IntMatrix m2(2, 2);
    m2(0, 0) = 2;
    m2(0, 1) = 4;
    m2(1, 0) = 6;
    m2(1, 1) = 8;
    auto s2 = smith_normal_form_checked(m2);
    REQUIRE(s2.divisors.size() == 2);
    CHECK(s2.divisors[0] == 2);
    CHECK(s2.divisors[1] == 4);
}

TEST_CASE("smith normal form randomized contract, up to 30x30") {
    std::mt19937 rng(1234);
    for (int trial = 0; trial < 40; ++trial) {
        int rows = 1 + rng() % 30, cols = 1 + rng() % 30;
        IntMatrix m = random_matrix(rng, rows, cols, -50, 50);
        auto s = smith_normal_form(m);
        CHECK(snf_verify(m, s));
        // cross-check nonunit divisors against the schoolbook oracle
        std::vector<long long> mine;
        for (const Int& d : s.divisors)
            if (d > 1) mine.push_back(d.get_si());
        std::sort(mine.begin(), mine.end());
        CHECK(mine == oracle::divisors_plain(m));
        CHECK(s.rank == oracle::rational_rank(m));
    }
}

TEST_CASE("hermite normal form contract and canonicity") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 60; ++trial) {
        int rows = 1 + rng() % 12, cols = 1 + rng() % 12;
        IntMatrix m = random_matrix(rng, rows, cols, -30, 30);
        auto h1 = hermite_normal_form(m, Pivot::MinAbs);
        auto h2 = hermite_normal_form(m, Pivot::FirstNonzero);
        CHECK(h1.u * m == h1.h);
        CHECK(h2.u * m == h2.h);
        Int du = determinant(h1.u);
        CHECK((du == 1 || du == -1));
        CHECK(h1.h == h2.h);  // HNF is canonical; transforms may differ
        // pivots positive, entries above reduced
        for (int i = 0; i < h1.rank; ++i) {
            int pc = h1.pivot_cols[i];
            CHECK(h1.h(i, pc) > 0);
            for (int r = 0; r < i; ++r) {
                CHECK(h1.h(r, pc) >= 0);
                CHECK(h1.h(r, pc) < h1.h(i, pc));
            }
        }
    }
}

TEST_CASE("kernel basis spans the whole kernel lattice") {
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 50; ++trial) {
        int rows = 1 + rng() % 8, cols = 1 + rng() % 8;
        IntMatrix m = random_matrix(rng, rows, cols, -9, 9);
        IntMatrix k = kernel_basis(m);
        CHECK((m * k).is_zero());
        CHECK(k.cols() == cols - oracle::rational_rank(m));
        if (k.cols() > 0) {
            // saturation: the HNF of k^T must have unit elementary divisors
            auto s = smith_normal_form(k);
            for (const Int& d : s.divisors) CHECK(d == 1);
        }
    }
}

TEST_CASE("solve_in_lattice round trip") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 2 + rng() % 6, k = 1 + rng() % n;
        IntMatrix basis = random_matrix(rng, n, k, -5, 5);
        if (oracle::rational_rank(basis) < k) continue;
        IntMatrix x = random_matrix(rng, k, 2, -7, 7);
        IntMatrix b = basis * x;
        CHECK(solve_in_lattice(basis, b) == x);
    }
}

TEST_CASE("determinant via Bareiss") {
    IntMatrix m(3, 3);
    int v[3][3] = {{2, 0, 1}, {1, 1, 0}, {0, 3, 4}};
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) m(r, c) = v[r][c];
    CHECK(determinant(m) == 2 * 4 + 1 * 3 - 0);  // expand: 2(4-0) - 0 + 1(3-0)
    CHECK(determinant(IntMatrix::identity(5)) == 1);
    CHECK(determinant(IntMatrix(0, 0)) == 1);
}
