#pragma once

// Seeded generators shared by the property tests.

#include "homwb/diagram.hpp"
#include "homwb/random.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace gen {

using homwb::random::Rng;

inline int pick(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

/// Random complex small enough for exhaustive checks.
inline homwb::SimplicialComplex small_complex(Rng& rng, int max_vertices = 6, int max_dim = 2) {
    return homwb::random::complex(rng, pick(rng, 2, max_vertices), max_dim, pick(rng, 1, 4));
}

/// X >= Y >= Z registered as "X", "Y", "Z" with the triple "T".
inline homwb::PairDiagram triple_diagram(Rng& rng, int max_vertices = 6, int max_dim = 2) {
    const auto x = small_complex(rng, max_vertices, max_dim);
    const auto chain = homwb::random::descending_chain(rng, x, 3);
    homwb::DiagramBuilder b;
    b.add_complex("X", chain[0]);
    b.add_complex("Y", chain[1]);
    b.add_complex("Z", chain[2]);
    b.add_triple("T", "X", "Y", "Z");
    return b.build();
}

/// Top-down random filtration with dim X_p <= p.
inline homwb::Filtration random_filtration(Rng& rng, const homwb::SimplicialComplex& x) {
    const int top = std::max(x.dim(), 0);
    std::vector<homwb::SimplicialComplex> steps(static_cast<std::size_t>(top) + 1);
    steps.back() = x;
    for (int p = top - 1; p >= 0; --p)
        steps[static_cast<std::size_t>(p)] =
            homwb::random::subcomplex(rng, steps[static_cast<std::size_t>(p) + 1].skeleton(p), 0.7);
    return {x, steps};
}

} // namespace gen
