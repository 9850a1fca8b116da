#include "homwb/error.hpp"
#include "homwb/model.hpp"
#include "homwb/random.hpp"
#include "homwb/simplicial.hpp"

#include "generators.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace homwb;

namespace {

SimplicialComplex k(std::vector<Simplex> s) { return SimplicialComplex::from_simplices(s); }

IsoInvariants h(const SimplicialComplex& x, int n, long m = 0) {
    const Coefficients c = m ? Coefficients::modulo(m) : Coefficients::integers();
    return relative_homology(SimpPair::make(x, {}), c, n).invariants();
}

IsoInvariants inv(std::size_t rank, std::vector<long> torsion = {}) {
    IsoInvariants i;
    i.rank = rank;
    for (long t : torsion) i.torsion.push_back(t);
    return i;
}

// 6-vertex real projective plane
SimplicialComplex rp2() {
    return k({{"1", "2", "4"}, {"2", "3", "4"}, {"1", "3", "5"}, {"2", "3", "5"}, {"1", "4", "5"},
              {"3", "4", "6"}, {"1", "3", "6"}, {"1", "2", "6"}, {"2", "5", "6"}, {"4", "5", "6"}});
}

} // namespace

TEST_CASE("face closure and counting") {
    const SimplicialComplex s1 = k({{"0", "1"}, {"1", "2"}, {"0", "2"}});
    CHECK(s1.size() == 6);
    CHECK(s1.dim() == 1);
    CHECK(s1.count(0) == 3);
    CHECK(s1.contains({"0", "2"}));
    CHECK_FALSE(s1.contains({"0", "1", "2"}));
    CHECK(s1.maximal_simplices().size() == 3);
    CHECK(SimplicialComplex().empty());
    CHECK(SimplicialComplex().dim() == -1);
    CHECK_THROWS_AS(SimplicialComplex::from_maximal_simplices({"a"}, {{"a", "b"}}), InputError);
}

TEST_CASE("boundary squares to zero") {
    random::Rng rng(41);
    for (int trial = 0; trial < 40; ++trial) {
        const SimplicialComplex x = gen::small_complex(rng, 7, 3);
        for (int d = 2; d <= x.dim(); ++d) CHECK((x.boundary(d - 1) * x.boundary(d)).is_zero());
    }
}

TEST_CASE("homology of standard spaces") {
    const SimplicialComplex s1 = k({{"0", "1"}, {"1", "2"}, {"0", "2"}});
    CHECK(h(s1, 0) == inv(1));
    CHECK(h(s1, 1) == inv(1));
    CHECK(h(s1, 2) == inv(0));
    const SimplicialComplex disk = k({{"0", "1", "2"}});
    CHECK(h(disk, 1) == inv(0));
    const SimplicialComplex s2 = disk.skeleton(1);
    CHECK(s2 == s1);
    const SimplicialComplex sphere = k({{"0", "1", "2", "3"}}).skeleton(2);
    CHECK(h(sphere, 2) == inv(1));
    CHECK(h(sphere, 1) == inv(0));
    SUBCASE("projective plane has 2-torsion") {
        const SimplicialComplex p = rp2();
        CHECK(h(p, 0) == inv(1));
        CHECK(h(p, 1) == inv(0, {2}));
        CHECK(h(p, 2) == inv(0));
        CHECK(h(p, 1, 2) == inv(0, {2}));
        CHECK(h(p, 2, 2) == inv(0, {2}));
        CHECK(h(p, 1, 3) == inv(0));
    }
    SUBCASE("two points") {
        CHECK(h(k({{"a"}, {"b"}}), 0) == inv(2));
    }
    SUBCASE("empty complex") {
        for (int n = -1; n <= 2; ++n) CHECK(h(SimplicialComplex(), n) == inv(0));
    }
}

TEST_CASE("relative homology of the disk rel boundary") {
    const SimplicialComplex disk = k({{"0", "1", "2"}});
    const SimpPair p = SimpPair::make(disk, disk.skeleton(1));
    CHECK(relative_homology(p, Coefficients::integers(), 2).invariants() == inv(1));
    CHECK(relative_homology(p, Coefficients::integers(), 1).invariants() == inv(0));
    CHECK(relative_homology(p, Coefficients::integers(), 0).invariants() == inv(0));
    CHECK_THROWS_AS(SimpPair::make(disk.skeleton(0), disk), InputError);
}

TEST_CASE("property: Euler characteristic equals alternating Betti sum") {
    random::Rng rng(42);
    for (int trial = 0; trial < 30; ++trial) {
        const SimplicialComplex x = gen::small_complex(rng, 7, 3);
        long chi = 0, betti = 0;
        for (int d = 0; d <= x.dim(); ++d) {
            const long sign = d % 2 == 0 ? 1 : -1;
            chi += sign * static_cast<long>(x.count(d));
            betti += sign * static_cast<long>(h(x, d).rank);
        }
        CHECK(chi == betti);
        // Betti numbers from rational ranks of the boundary matrices
        for (int d = 0; d <= x.dim(); ++d) {
            const std::size_t rd = d >= 1 ? oracle::rational_rank(x.boundary(d)) : 0;
            const std::size_t rn = d + 1 <= x.dim() ? oracle::rational_rank(x.boundary(d + 1)) : 0;
            CHECK(h(x, d).rank == x.count(d) - rd - rn);
        }
    }
}

TEST_CASE("vertex maps") {
    const SimplicialComplex s1 = k({{"0", "1"}, {"1", "2"}, {"0", "2"}});
    const SimplicialComplex seg = k({{"0", "1"}});
    CHECK_FALSE(simplicial_violation({{"0", "0"}, {"1", "1"}, {"2", "1"}}, s1, seg).has_value());
    CHECK(simplicial_violation({{"0", "0"}, {"1", "1"}, {"2", "2"}}, s1, seg).has_value());
    const VertexMap f{{"0", "1"}, {"1", "2"}, {"2", "0"}};
    CHECK(compose_maps(f, f) == VertexMap{{"0", "2"}, {"1", "0"}, {"2", "1"}});
    CHECK(image_of(VertexMap{{"0", "1"}, {"1", "1"}}, {"0", "1"}) == Simplex{"1"});
}

TEST_CASE("prism projects isomorphically in homology") {
    random::Rng rng(43);
    for (int trial = 0; trial < 10; ++trial) {
        const SimplicialComplex x = gen::small_complex(rng, 5, 2);
        const Prism p = prism(x);
        for (int n = 0; n <= x.dim() + 1; ++n) CHECK(h(p.complex, n) == h(x, n));
        CHECK_FALSE(simplicial_violation(p.project, p.complex, x).has_value());
        CHECK_FALSE(simplicial_violation(p.bottom, x, p.complex).has_value());
        CHECK_FALSE(simplicial_violation(p.top, x, p.complex).has_value());
    }
}

TEST_CASE("subcomplex unions") {
    const SimplicialComplex x = k({{"0", "1"}, {"1", "2"}, {"0", "2"}});
    const DistinguishedSquare sq = subcomplex_union(x, k({{"0", "1"}, {"1", "2"}}), k({{"0", "2"}}));
    CHECK(sq.intersection == k({{"0"}, {"2"}}));
    CHECK(sq.union_ == x);
    CHECK_THROWS_AS(subcomplex_union(x, k({{"0", "1", "2"}}), x), InputError);
}

TEST_CASE("filtrations") {
    const SimplicialComplex disk = k({{"0", "1", "2"}});
    const Filtration sk = Filtration::skeletal(disk);
    CHECK(sk.length() == 2);
    CHECK(sk.step(-1).empty());
    CHECK(sk.step(7) == disk);
    const Filtration special(disk, {k({{"0"}}), disk.skeleton(1), disk});
    CHECK(special.length() == 2);
    CHECK_THROWS_WITH_AS(Filtration(disk, {disk.skeleton(1), disk}), doctest::Contains("dimensional-type"), InputError);
    CHECK_THROWS_AS(Filtration(disk, {k({{"0"}}), k({{"1", "2"}}), disk}), InputError);
    CHECK_THROWS_AS(Filtration(disk, {k({{"0"}}), disk.skeleton(1)}), InputError);
}
