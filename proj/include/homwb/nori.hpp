#pragma once

#include "homwb/group.hpp"
#include "homwb/model.hpp"

#include <optional>
#include <string>
#include <vector>

namespace homwb {

/// A representation of a finite quiver in finitely generated abelian groups.
struct Representation {
    struct Edge {
        std::string name;
        std::size_t source = 0;
        std::size_t target = 0;
        GroupHom map;
    };
    std::vector<std::string> node_names;
    std::vector<FgAbGroup> groups;
    std::vector<Edge> edges;

    std::size_t add_node(std::string name, FgAbGroup g);
    /// Throws StructuralError for an ill-defined map.
    void add_edge(std::string name, std::size_t source, std::size_t target, GroupHom map);

    /// Nodes are (pair, degree) in the window; edges are every non-identity
    /// induced map, every connecting map and every Mayer-Vietoris map.
    static Representation from_model(const HomologyModel& model);
};

/// Finite subdiagram: node and edge indices (edges must join chosen nodes).
struct Subdiagram {
    std::string name;
    std::vector<std::size_t> nodes;
    std::vector<std::size_t> edges;

    static Subdiagram full(const Representation& t, std::string name = "all");
    /// The given nodes with every edge between them.
    static Subdiagram induced(const Representation& t, std::vector<std::size_t> nodes, std::string name);
    bool contains(const Subdiagram& other) const;
};

/// End(T|_F) on the free quotients T(d)/torsion: tuples (e_d) of integer
/// matrices with e_t T(f) = T(f) e_s for every edge f : s -> t of F.
struct EndAlgebra {
    Subdiagram sub;
    std::vector<std::size_t> ranks;                    ///< free rank per node of sub
    std::vector<std::vector<IntMatrix>> basis;         ///< basis[i][k]: node k of sub
    /// structure[i][j] = coordinates of basis[i] * basis[j]
    std::vector<std::vector<IntVector>> structure;
    IntVector unit;
    bool closed = true;
    std::size_t rational_rank = 0;

    std::size_t rank() const { return basis.size(); }
    /// Coordinates of a tuple in the basis, if it lies in the algebra.
    std::optional<IntVector> coordinates(const std::vector<IntMatrix>& tuple) const;
};

/// Free quotient of an edge map: rows/columns of the free generators.
IntMatrix free_part(const GroupHom& h);

EndAlgebra end_algebra(const Representation& t, const Subdiagram& f);

struct AlgebraMap {
    IntMatrix matrix;  ///< rank(E) x rank(E')
    bool unital = true;
    bool multiplicative = true;
};

/// Restriction End(T|_F') -> End(T|_F) for F inside F'. Throws InputError
/// when F is not a subdiagram of F'.
AlgebraMap restriction_map(const EndAlgebra& larger, const EndAlgebra& smaller);

struct ModuleActionVerdict {
    bool ok = true;
    std::vector<std::string> failures;
};

/// Every basis element commutes with every edge map of the subdiagram and
/// the structure constants reproduce the products.
ModuleActionVerdict verify_module_action(const Representation& t, const EndAlgebra& e);

} // namespace homwb
