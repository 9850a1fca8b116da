#pragma once

#include "homwb/int_matrix.hpp"
#include "homwb/smith.hpp"

#include <optional>
#include <string>
#include <vector>

namespace homwb {

/// Classifying data of a finitely generated abelian group:
/// Z^rank + Z/t_1 + ... + Z/t_k with 2 <= t_1 | t_2 | ... | t_k.
struct IsoInvariants {
    std::size_t rank = 0;
    std::vector<Integer> torsion;

    bool is_trivial() const { return rank == 0 && torsion.empty(); }
    bool operator==(const IsoInvariants&) const = default;
    std::string to_string() const;
};

/// Finitely generated abelian group given as the cokernel of its relation
/// matrix: generators e_1..e_n, one relation per row.
///
/// Elements are integer vectors of length ngens(). The canonical presentation
/// has generators ordered torsion-first and relations diag(t_1, ..., t_k).
class FgAbGroup {
public:
    FgAbGroup() = default;
    FgAbGroup(std::size_t ngens, IntMatrix relations);

    static FgAbGroup free(std::size_t rank);
    static FgAbGroup trivial() { return free(0); }
    /// (Z/m)^rank; m == 0 gives Z^rank.
    static FgAbGroup cyclic_power(std::size_t rank, const Integer& m);
    /// Group in canonical presentation with the given invariants.
    static FgAbGroup from_invariants(const IsoInvariants& inv);

    std::size_t ngens() const { return ngens_; }
    const IntMatrix& relations() const { return relations_; }
    /// Relations as columns, i.e. generators of the relation lattice in Z^ngens.
    IntMatrix relation_lattice() const { return relations_.transpose(); }

    IsoInvariants invariants() const;
    bool is_trivial() const { return invariants().is_trivial(); }
    /// True when this presentation is already canonical (diagonal, torsion first).
    bool is_canonical() const;

    bool is_zero_element(const IntVector& v) const;
    bool elements_equal(const IntVector& a, const IntVector& b) const;

    /// For canonical groups: reduce torsion coordinates into [0, t_i).
    IntVector normalize(const IntVector& v) const;
    /// Number of elements, or nullopt for infinite groups. Canonical groups only.
    std::optional<std::size_t> order() const;
    /// Element with the given mixed-radix index; canonical finite groups only.
    IntVector element_at(std::size_t index) const;
    std::size_t index_of(const IntVector& normalized) const;

    bool operator==(const FgAbGroup&) const = default;

private:
    std::size_t ngens_ = 0;
    IntMatrix relations_;
};

/// Direct sum with block-diagonal relations.
FgAbGroup direct_sum(const FgAbGroup& a, const FgAbGroup& b);

/// Homomorphism acting on column vectors: v |-> matrix * v, matrix is
/// target.ngens() x source.ngens().
class GroupHom {
public:
    GroupHom() = default;
    GroupHom(FgAbGroup source, FgAbGroup target, IntMatrix matrix);

    static GroupHom identity(const FgAbGroup& g);
    static GroupHom zero(const FgAbGroup& source, const FgAbGroup& target);

    const FgAbGroup& source() const { return source_; }
    const FgAbGroup& target() const { return target_; }
    const IntMatrix& matrix() const { return matrix_; }

    IntVector apply(const IntVector& v) const { return matrix_ * v; }

    /// Index of the first source relation not mapped into the target
    /// relation lattice, if any.
    std::optional<std::size_t> well_definedness_violation() const;
    /// Throws StructuralError naming the offending relation.
    void require_well_defined() const;

    bool is_zero() const;
    GroupHom negated() const;

    bool operator==(const GroupHom&) const = default;

private:
    FgAbGroup source_;
    FgAbGroup target_;
    IntMatrix matrix_;
};

/// g o f
GroupHom compose(const GroupHom& g, const GroupHom& f);
GroupHom add(const GroupHom& f, const GroupHom& g);
/// True when f and g agree on every generator of their common source.
bool equal_as_maps(const GroupHom& f, const GroupHom& g);
/// f + g : A + B -> C  (columns side by side)
GroupHom hom_hcat(const GroupHom& f, const GroupHom& g);
/// (f, g) : A -> B + C
GroupHom hom_vcat(const GroupHom& f, const GroupHom& g);
bool is_isomorphism(const GroupHom& f);

/// A group together with its structure map into / out of another group.
struct GroupWithMap {
    FgAbGroup group;
    GroupHom map;
};

/// Kernel with its inclusion into the source.
GroupWithMap hom_kernel(const GroupHom& f);
/// Image with its inclusion into the target.
GroupWithMap hom_image(const GroupHom& f);
/// Cokernel with the projection from the target.
GroupWithMap hom_cokernel(const GroupHom& f);

struct ExactnessWitness {
    bool exact = true;
    /// Element of the middle group exhibiting the failure.
    std::optional<IntVector> witness;
    std::string reason;
};

/// Exactness of A --f--> B --g--> C at B: im f == ker g, tested by double
/// inclusion.
ExactnessWitness is_exact_at(const GroupHom& f, const GroupHom& g);
/// Only the inclusion ker g <= im f.
ExactnessWitness kernel_contained_in_image(const GroupHom& f, const GroupHom& g);

/// Subquotient N / D of the ambient Z^k (D contained in N, both given by
/// generating columns), presented canonically.
class Subquotient {
public:
    Subquotient() = default;
    Subquotient(const IntMatrix& numerator, const IntMatrix& denominator);

    const FgAbGroup& group() const { return group_; }
    /// Representatives in Z^k of the canonical generators (columns).
    const IntMatrix& representatives() const { return reps_; }
    /// Canonical coordinates of a vector of the numerator lattice.
    IntVector coordinates(const IntVector& v) const;
    bool contains(const IntVector& v) const;
    std::size_t ambient_dim() const { return reps_.rows(); }

private:
    FgAbGroup group_;
    IntMatrix basis_;
    SmithDecomposition basis_snf_;
    IntMatrix to_canon_;
    IntMatrix reps_;
};

/// Canonical presentation of g together with mutually inverse maps.
struct CanonicalForm {
    FgAbGroup group;
    GroupHom to_canonical;
    GroupHom from_canonical;
};
CanonicalForm canonical_form(const FgAbGroup& g);

} // namespace homwb
