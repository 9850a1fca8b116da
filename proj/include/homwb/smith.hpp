#pragma once

#include "homwb/int_matrix.hpp"

#include <optional>

namespace homwb {

/// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... , d_i >= 0.
/// The inverses of U and V are carried along since most callers need them.
struct SmithDecomposition {
    IntMatrix u;
    IntMatrix d;
    IntMatrix v;
    IntMatrix u_inv;
    IntMatrix v_inv;
    std::size_t rank = 0;

    IntVector diagonal() const;
};

/// Smith normal form, pivoting on the entry of minimal nonzero absolute value.
SmithDecomposition smith(const IntMatrix& a);

// Lattice helpers. A lattice in Z^k is given by a generating matrix whose
// columns span it.

/// Basis (columns) of the integer kernel of `a`.
IntMatrix kernel_basis(const IntMatrix& a);

/// Basis of the column span of `a`; the result has full column rank.
IntMatrix column_basis(const IntMatrix& a);

/// Some integer x with a * x = b, if one exists.
std::optional<IntVector> solve(const IntMatrix& a, const IntVector& b);

/// Same, reusing a decomposition of `a`.
std::optional<IntVector> solve(const SmithDecomposition& snf, const IntVector& b);

/// Basis of { x : a * x lies in the column span of `lattice` }.
IntMatrix preimage(const IntMatrix& a, const IntMatrix& lattice);

/// Basis of the intersection of two lattices in the same ambient space.
IntMatrix intersect(const IntMatrix& l1, const IntMatrix& l2);

/// True when the column span of `sub` is contained in that of `lattice`.
bool lattice_contains(const IntMatrix& lattice, const IntMatrix& sub);

} // namespace homwb
