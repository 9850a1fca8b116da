#include "homwb/complexes.hpp"
#include "homwb/error.hpp"
#include "homwb/random.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace homwb;

namespace {

ChainComplex free_complex(int n_min, std::vector<IntMatrix> ds, std::vector<std::size_t> ranks) {
    std::vector<FgAbGroup> groups;
    for (auto r : ranks) groups.push_back(FgAbGroup::free(r));
    std::vector<GroupHom> maps;
    for (std::size_t i = 0; i < ds.size(); ++i) maps.emplace_back(groups[i + 1], groups[i], ds[i]);
    return ChainComplex(n_min, groups, maps);
}

} // namespace

TEST_CASE("homology of Z --2--> Z") {
    const ChainComplex c = free_complex(0, {IntMatrix{{2}}}, {1, 1});
    CHECK(homology(c, 0).invariants().torsion == std::vector<Integer>{2});
    CHECK(homology(c, 1).is_trivial());
    CHECK(homology(c, 5).is_trivial());
    CHECK(homology(c, -1).is_trivial());
    CHECK(verify_complex(c).empty());
}

TEST_CASE("d^2 != 0 is detected") {
    const ChainComplex c = free_complex(0, {IntMatrix{{1}}, IntMatrix{{1}}}, {1, 1, 1});
    const auto defects = verify_complex(c);
    REQUIRE(defects.size() == 1);
    CHECK(defects[0].degree == 2);
    CHECK_THROWS_AS(homology(c, 1), StructuralError);
}

TEST_CASE("property: Betti numbers match rational ranks") {
    random::Rng rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        // d2 = random, d1 = random matrix killing im d2: d1 = K^T-ish built from a kernel
        const std::size_t c0 = 3, c1 = 4, c2 = 2;
        const IntMatrix d2 = random::matrix(rng, c1, c2, -3, 3);
        // rows of d1 orthogonal to columns of d2
        const IntMatrix left = kernel_basis(d2.transpose()).transpose();
        IntMatrix d1 = random::matrix(rng, c0, left.rows(), -2, 2) * left;
        if (left.rows() == 0) d1 = IntMatrix(c0, c1);
        const ChainComplex c = free_complex(0, {d1, d2}, {c0, c1, c2});
        REQUIRE(verify_complex(c).empty());
        const std::size_t r1 = oracle::rational_rank(d1), r2 = oracle::rational_rank(d2);
        CHECK(homology(c, 0).invariants().rank == c0 - r1);
        CHECK(homology(c, 1).invariants().rank == c1 - r1 - r2);
        CHECK(homology(c, 2).invariants().rank == c2 - r2);
        // torsion in H_1 is detected by a rank drop mod p
        for (long p : {2L, 3L, 5L}) {
            const FgAbGroup h1 = homology(c, 1);
            std::size_t tp = 0;
            for (const auto& t : h1.invariants().torsion)
                if (t % p == 0) ++tp;
            CHECK(oracle::rank_mod(d2, p) == r2 - tp);
        }
    }
}

TEST_CASE("homology with torsion coefficients in the chain groups") {
    // C_1 = Z/4, C_0 = Z/4, d = 2
    std::vector<FgAbGroup> g{FgAbGroup::cyclic_power(1, 4), FgAbGroup::cyclic_power(1, 4)};
    const ChainComplex c(0, g, {GroupHom(g[1], g[0], IntMatrix{{2}})});
    CHECK(homology(c, 0).invariants().torsion == std::vector<Integer>{2});
    CHECK(homology(c, 1).invariants().torsion == std::vector<Integer>{2});
}

TEST_CASE("bicomplex total complex") {
    Bicomplex b(0, 1, 0, 1);
    const FgAbGroup z = FgAbGroup::free(1);
    for (int p = 0; p <= 1; ++p)
        for (int q = 0; q <= 1; ++q) b.set_group(p, q, z);
    b.set_horizontal(1, 0, GroupHom::identity(z));
    b.set_horizontal(1, 1, GroupHom::identity(z));
    b.set_vertical(0, 1, GroupHom::identity(z));
    b.set_vertical(1, 1, GroupHom::identity(z));
    const ChainComplex t = total_complex(b);
    CHECK(verify_complex(t).empty());
    for (int n = 0; n <= 2; ++n) CHECK(homology(t, n).is_trivial());
    CHECK(total_offset(b, 0, 1) == 0);
    CHECK(total_offset(b, 1, 0) == 1);
}

TEST_CASE("long exact sequence checker") {
    const FgAbGroup z = FgAbGroup::free(1);
    const FgAbGroup z2 = FgAbGroup::cyclic_power(1, 2);
    LongSequence ok{{z, z, z2}, {GroupHom(z, z, IntMatrix{{2}}), GroupHom(z, z2, IntMatrix{{1}})}, {}};
    CHECK(check_long_exact(ok).exact);
    LongSequence bad{{z, z, z2}, {GroupHom(z, z, IntMatrix{{4}}), GroupHom(z, z2, IntMatrix{{1}})}, {}};
    const LongExactReport r = check_long_exact(bad);
    CHECK_FALSE(r.exact);
    LongSequence mismatch{{z, z2, z}, {GroupHom(z, z, IntMatrix{{2}}), GroupHom(z, z2, IntMatrix{{1}})}, {}};
    CHECK_THROWS_AS(check_long_exact(mismatch), InputError);
}
