#include "homwb/smith.hpp"
#include "homwb/random.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace homwb;

namespace {

void check_decomposition(const IntMatrix& a) {
    const SmithDecomposition s = smith(a);
    CHECK(s.u * a * s.v == s.d);
    CHECK(abs(determinant(s.u)) == 1);
    CHECK(abs(determinant(s.v)) == 1);
    CHECK(s.u * s.u_inv == IntMatrix::identity(a.rows()));
    CHECK(s.v * s.v_inv == IntMatrix::identity(a.cols()));
    for (std::size_t i = 0; i < s.d.rows(); ++i)
        for (std::size_t j = 0; j < s.d.cols(); ++j)
            if (i != j) CHECK(s.d(i, j) == 0);
    const IntVector diag = s.diagonal();
    for (std::size_t i = 0; i < diag.size(); ++i) {
        CHECK(diag[i] >= 0);
        if (i + 1 < diag.size() && diag[i] != 0) CHECK(diag[i + 1] % diag[i] == 0);
        if (diag[i] == 0)
            for (std::size_t j = i; j < diag.size(); ++j) CHECK(diag[j] == 0);
    }
}

} // namespace

TEST_CASE("smith of small fixed matrices") {
    SUBCASE("diag(2,3) becomes diag(1,6)") {
        const SmithDecomposition s = smith(IntMatrix{{2, 0}, {0, 3}});
        CHECK(s.diagonal() == IntVector{1, 6});
        CHECK(s.rank == 2);
    }
    SUBCASE("rank one") {
        const SmithDecomposition s = smith(IntMatrix{{2, 4}, {4, 8}});
        CHECK(s.diagonal() == IntVector{2, 0});
        CHECK(s.rank == 1);
    }
    SUBCASE("zero and empty shapes") {
        check_decomposition(IntMatrix(3, 2));
        check_decomposition(IntMatrix(0, 3));
        check_decomposition(IntMatrix(2, 0));
        CHECK(smith(IntMatrix(0, 0)).rank == 0);
    }
    SUBCASE("boundary of a triangle has invariant factors 1,1") {
        const IntMatrix d{{-1, -1, 0}, {1, 0, -1}, {0, 1, 1}};
        CHECK(smith(d).diagonal() == IntVector{1, 1, 0});
    }
}

TEST_CASE("smith handles entries beyond machine words") {
    IntMatrix a{{1, 0}, {0, 1}};
    a(0, 0) = Integer("123456789012345678901234567890");
    a(1, 1) = Integer("987654321098765432109876543210");
    check_decomposition(a);
    const auto diag = smith(a).diagonal();
    Integer g;
    mpz_gcd(g.get_mpz_t(), a(0, 0).get_mpz_t(), a(1, 1).get_mpz_t());
    CHECK(diag[0] == g);
    CHECK(diag[0] * diag[1] == a(0, 0) * a(1, 1));
}

TEST_CASE("property: decomposition identities on random matrices") {
    random::Rng rng(11);
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t r = std::uniform_int_distribution<std::size_t>(1, 7)(rng);
        const std::size_t c = std::uniform_int_distribution<std::size_t>(1, 7)(rng);
        check_decomposition(random::matrix(rng, r, c, -9, 9));
    }
}

TEST_CASE("property: invariant factors agree with determinantal divisors") {
    random::Rng rng(12);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t r = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
        const std::size_t c = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
        const IntMatrix a = random::matrix(rng, r, c, -6, 6);
        const IntVector diag = smith(a).diagonal();
        Integer prod = 1;
        for (std::size_t k = 1; k <= std::min(r, c); ++k) {
            prod *= diag[k - 1];
            CHECK(oracle::minors_gcd(a, k) == prod);
        }
        CHECK(smith(a).rank == oracle::rational_rank(a));
    }
}

TEST_CASE("lattice helpers") {
    random::Rng rng(13);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t r = std::uniform_int_distribution<std::size_t>(1, 5)(rng);
        const std::size_t c = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
        const IntMatrix a = random::matrix(rng, r, c, -4, 4);
        const IntMatrix k = kernel_basis(a);
        CHECK(k.cols() == c - oracle::rational_rank(a));
        CHECK((a * k).is_zero());
        // kernel is saturated: it is a direct summand, so the Smith diagonal is all ones
        for (const auto& x : smith(k).diagonal()) CHECK(x == 1);

        IntVector x(c);
        for (auto& e : x) e = std::uniform_int_distribution<long>(-3, 3)(rng);
        const IntVector b = a * x;
        auto y = solve(a, b);
        REQUIRE(y.has_value());
        CHECK(a * *y == b);

        const IntMatrix cb = column_basis(a);
        CHECK(cb.cols() == oracle::rational_rank(a));
        CHECK(lattice_contains(cb, a));
        CHECK(lattice_contains(a, cb));
    }
}

TEST_CASE("solve reports unsolvable systems") {
    CHECK_FALSE(solve(IntMatrix{{2}}, IntVector{1}).has_value());
    CHECK(solve(IntMatrix{{2}}, IntVector{4}).value() == IntVector{2});
}

TEST_CASE("intersect and preimage") {
    const IntMatrix two{{2, 0}, {0, 1}};
    const IntMatrix three{{1, 0}, {0, 3}};
    const IntMatrix both = intersect(two, three);
    CHECK(lattice_contains(two, both));
    CHECK(lattice_contains(three, both));
    CHECK(abs(determinant(both)) == 6);

    // x with 2x in 4Z is 2Z
    const IntMatrix pre = preimage(IntMatrix{{2}}, IntMatrix{{4}});
    CHECK(abs(pre(0, 0)) == 2);
}
