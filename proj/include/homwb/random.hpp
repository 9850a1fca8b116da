#pragma once

#include "homwb/dsl/spec.hpp"
#include "homwb/int_matrix.hpp"
#include "homwb/simplicial.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace homwb::random {

using Rng = std::mt19937_64;

/// Integer matrix with entries uniform in [lo, hi].
IntMatrix matrix(Rng& rng, std::size_t rows, std::size_t cols, long lo, long hi);

/// Face closure of a few random simplices on vertices "0".."n-1" (n <= 10).
SimplicialComplex complex(Rng& rng, int vertices, int max_dim, int simplices);

/// Face closure of a random subset of the simplices of k (possibly empty).
SimplicialComplex subcomplex(Rng& rng, const SimplicialComplex& k, double keep = 0.4);

/// X = chain[0] >= chain[1] >= ... with `length` entries.
std::vector<SimplicialComplex> descending_chain(Rng& rng, const SimplicialComplex& top, int length);

/// A vertex map from `source` into `target` sending `source_sub` into
/// `target_sub` and simplices to simplices. Tries random edge collapses and
/// inclusions, falls back to a constant map into target_sub (or target when
/// source_sub is empty).
VertexMap simplicial_map(Rng& rng, const SimplicialComplex& source, const SimplicialComplex& source_sub,
                         const SimplicialComplex& target, const SimplicialComplex& target_sub);

/// A small random workbench input exercising pairs, a triple, a map and the
/// given command.
dsl::WorkbenchSpec spec(Rng& rng, dsl::CommandStmt::Kind command);

} // namespace homwb::random
